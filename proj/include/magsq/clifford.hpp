#pragma once

#include <vector>

#include "magsq/matrix_rep.hpp"

namespace magsq {

// Diagonal metric in coordinate order: +1 on the kappa + kappa'+ leading
// slots, -1 on the kappa'- trailing slots.
inline std::vector<int> metric(PairId pair) {
    std::vector<int> g;
    for (CoordUnit u : coord_layout(pair))
        g.push_back(u.in_kprime ? slot_sign(Family::split, u.slot) : +1);
    return g;
}

// (kappa + kappa'+, kappa'-): the real form so(plus, minus) of the pair.
inline std::pair<int, int> signature(PairId pair) {
    int plus = 0, minus = 0;
    for (int s : metric(pair)) (s > 0 ? plus : minus)++;
    return {plus, minus};
}

// Gamma_p = gamma(S_p); each squares to g_pp I.
template <class S>
std::vector<Mat4T<S>> gamma_basis(PairId pair) {
    std::vector<Mat4T<S>> out;
    for (const HermX<S>& s : pauli_basis<S>(pair)) out.push_back(gamma(s));
    return out;
}

struct CliffordReport {
    int pairs_checked = 0;
    int failures = 0;
    bool ok() const { return failures == 0; }
};

// Verifies {Gamma_p, Gamma_q} = 2 g_pq I exactly, for all p <= q.  Both
// association orders of each product agree trivially (two factors), so the
// anticommutator itself is the whole content.
template <class S>
CliffordReport check_clifford(PairId pair) {
    CliffordReport report;
    auto gammas = gamma_basis<S>(pair);
    auto g = metric(pair);
    int n = static_cast<int>(gammas.size());
    for (int p = 0; p < n; ++p) {
        for (int q = p; q < n; ++q) {
            Mat4T<S> anti = mat4_add(mat_mul4(gammas[p], gammas[q]),
                                     mat_mul4(gammas[q], gammas[p]));
            Mat4T<S> expect = mat4_zero<S>(pair);
            if (p == q) expect = mat4_scale(S(2 * g[p]), mat4_identity<S>(pair));
            ++report.pairs_checked;
            if (!mat4_eq(anti, expect)) ++report.failures;
        }
    }
    return report;
}

// Left multiplication P_L(Q) = PQ, the endomorphism the Clifford algebra
// acts by.
template <class S>
Mat4T<S> left_action(const Mat4T<S>& p, const Mat4T<S>& q) {
    return mat_mul4(p, q);
}

// Reflection along a unit vector P of the representation space:
//   R_P(Q) = -(PQ)P^-1,   P^-1 = P / norm_x(P).
// Negates the P-axis, fixes the hyperplane orthogonal to it.
template <class S>
Mat4T<S> reflect(const Mat4T<S>& p, const Mat4T<S>& q) {
    auto [px, residual] = herm_from_gamma(p);
    (void)residual;
    S n = norm_x(px);
    if (is_zero(n)) throw not_invertible_error("reflect: axis has zero norm");
    Mat4T<S> p_inv = mat4_scale(S(S(1) / n), p);
    return mat4_scale(S(-1), mat_mul4(mat_mul4(p, q), p_inv));
}

}  // namespace magsq
