#pragma once

#include <array>
#include <utility>
#include <vector>

#include "magsq/tensor_elem.hpp"

namespace magsq {

// Vector-representation element X = [[A, conj(a)], [a, -star(A)]] with
// A in K' and a in K.  X is Hermitian under K-conjugate-transpose and its
// real trace vanishes.  star() is K'-conjugation.
template <class S>
struct HermX {
    PairId pair;
    CAElem<S> big_a;    // split factor
    CAElem<S> little_a; // normed factor
};

template <class S>
HermX<S> herm(PairId pair, const CAElem<S>& big_a, const CAElem<S>& little_a) {
    if (!in_subalgebra(big_a, pair.kprime))
        throw mismatch_error("herm: A outside " + std::string(algebra_name(pair.kprime)));
    if (!in_subalgebra(little_a, pair.k))
        throw mismatch_error("herm: a outside " + std::string(algebra_name(pair.k)));
    return {pair, big_a, little_a};
}

template <class S>
HermX<S> herm_zero(PairId pair) {
    return {pair, ca_zero<S>(Family::split), ca_zero<S>(Family::normed)};
}

// |A|^2 + |a|^2 = -det X.
template <class S>
S norm_x(const HermX<S>& x) {
    return norm_sq(x.big_a) + norm_sq(x.little_a);
}

template <class S>
struct Mat2T {
    PairId pair;
    std::array<std::array<TensorElem<S>, 2>, 2> e;
};

template <class S>
struct Mat4T {
    PairId pair;
    std::array<std::array<TensorElem<S>, 4>, 4> e;
};

template <class S>
Mat2T<S> mat2_zero(PairId pair) {
    Mat2T<S> m{pair, {}};
    for (auto& row : m.e)
        for (auto& x : row) x = t_zero<S>(pair);
    return m;
}

template <class S>
Mat4T<S> mat4_zero(PairId pair) {
    Mat4T<S> m{pair, {}};
    for (auto& row : m.e)
        for (auto& x : row) x = t_zero<S>(pair);
    return m;
}

template <class S>
Mat2T<S> mat2_identity(PairId pair) {
    Mat2T<S> m = mat2_zero<S>(pair);
    m.e[0][0] = t_one<S>(pair);
    m.e[1][1] = t_one<S>(pair);
    return m;
}

template <class S>
Mat4T<S> mat4_identity(PairId pair) {
    Mat4T<S> m = mat4_zero<S>(pair);
    for (int i = 0; i < 4; ++i) m.e[i][i] = t_one<S>(pair);
    return m;
}

// X as a 2x2 matrix over K' (x) K.
template <class S>
Mat2T<S> to_mat2(const HermX<S>& x) {
    Mat2T<S> m = mat2_zero<S>(x.pair);
    m.e[0][0] = from_kprime(x.pair, x.big_a);
    m.e[0][1] = from_k(x.pair, conj(x.little_a));
    m.e[1][0] = from_k(x.pair, x.little_a);
    m.e[1][1] = t_neg(from_kprime(x.pair, conj(x.big_a)));
    return m;
}

// Trace reversal: X~ = X - tr(X) I = [[star(A), conj(a)], [a, -A]]; on this
// basis it coincides with entrywise K'-conjugation.
template <class S>
Mat2T<S> trace_reverse(const HermX<S>& x) {
    Mat2T<S> m = mat2_zero<S>(x.pair);
    m.e[0][0] = from_kprime(x.pair, conj(x.big_a));
    m.e[0][1] = from_k(x.pair, conj(x.little_a));
    m.e[1][0] = from_k(x.pair, x.little_a);
    m.e[1][1] = t_neg(from_kprime(x.pair, x.big_a));
    return m;
}

template <class S>
Mat2T<S> trace_reverse_mat2(const Mat2T<S>& m) {
    Mat2T<S> r = m;
    for (auto& row : r.e)
        for (auto& x : row) x = t_conj_kprime(x);
    return r;
}

// Gamma lift: [[0, X], [X~, 0]], a 4x4 matrix squaring to norm_x(X) I.
template <class S>
Mat4T<S> gamma(const HermX<S>& x) {
    Mat2T<S> top = to_mat2(x);
    Mat2T<S> bot = trace_reverse(x);
    Mat4T<S> m = mat4_zero<S>(x.pair);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            m.e[i][j + 2] = top.e[i][j];
            m.e[i + 2][j] = bot.e[i][j];
        }
    return m;
}

template <class S>
Mat2T<S> mat2_add(const Mat2T<S>& a, const Mat2T<S>& b) {
    Mat2T<S> r = a;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) r.e[i][j] = t_add(a.e[i][j], b.e[i][j]);
    return r;
}

template <class S>
Mat2T<S> mat2_sub(const Mat2T<S>& a, const Mat2T<S>& b) {
    Mat2T<S> r = a;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) r.e[i][j] = t_sub(a.e[i][j], b.e[i][j]);
    return r;
}

template <class S>
Mat2T<S> mat2_scale(const S& t, const Mat2T<S>& a) {
    Mat2T<S> r = a;
    for (auto& row : r.e)
        for (auto& x : row) x = t_scale(t, x);
    return r;
}

template <class S>
Mat4T<S> mat4_add(const Mat4T<S>& a, const Mat4T<S>& b) {
    Mat4T<S> r = a;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) r.e[i][j] = t_add(a.e[i][j], b.e[i][j]);
    return r;
}

template <class S>
Mat4T<S> mat4_sub(const Mat4T<S>& a, const Mat4T<S>& b) {
    Mat4T<S> r = a;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) r.e[i][j] = t_sub(a.e[i][j], b.e[i][j]);
    return r;
}

template <class S>
Mat4T<S> mat4_scale(const S& t, const Mat4T<S>& a) {
    Mat4T<S> r = a;
    for (auto& row : r.e)
        for (auto& x : row) x = t_scale(t, x);
    return r;
}

// Entry products run through t_mul with no reassociation; chains must be
// parenthesized explicitly by the caller.
template <class S>
Mat2T<S> mat_mul2(const Mat2T<S>& a, const Mat2T<S>& b) {
    if (!(a.pair == b.pair)) throw mismatch_error("mat_mul2: pairs differ");
    Mat2T<S> r = mat2_zero<S>(a.pair);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k)
                r.e[i][j] = t_add(r.e[i][j], t_mul(a.e[i][k], b.e[k][j]));
    return r;
}

template <class S>
Mat4T<S> mat_mul4(const Mat4T<S>& a, const Mat4T<S>& b) {
    if (!(a.pair == b.pair)) throw mismatch_error("mat_mul4: pairs differ");
    Mat4T<S> r = mat4_zero<S>(a.pair);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            for (int k = 0; k < 4; ++k)
                if (!t_is_zero(a.e[i][k]) && !t_is_zero(b.e[k][j]))
                    r.e[i][j] = t_add(r.e[i][j], t_mul(a.e[i][k], b.e[k][j]));
    return r;
}

template <class S>
bool mat2_eq(const Mat2T<S>& a, const Mat2T<S>& b) {
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            if (!(a.e[i][j] == b.e[i][j])) return false;
    return a.pair == b.pair;
}

template <class S>
bool mat4_eq(const Mat4T<S>& a, const Mat4T<S>& b) {
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            if (!(a.e[i][j] == b.e[i][j])) return false;
    return a.pair == b.pair;
}

template <class S>
double mat2_max_abs_diff(const Mat2T<S>& a, const Mat2T<S>& b) {
    double m = 0;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            double d = t_max_abs(t_sub(a.e[i][j], b.e[i][j]));
            if (d > m) m = d;
        }
    return m;
}

template <class S>
double mat4_max_abs_diff(const Mat4T<S>& a, const Mat4T<S>& b) {
    double m = 0;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            double d = t_max_abs(t_sub(a.e[i][j], b.e[i][j]));
            if (d > m) m = d;
        }
    return m;
}

// --- real coordinates ------------------------------------------------------

// Coordinate p of the vector representation maps to one basis unit of one
// factor; slot 0 in either factor is the real unit 1 (x) 1.
struct CoordUnit {
    bool in_kprime;
    int slot;  // 0..7 within the factor's parent
};

// Coordinate order: K slots in basis order, then the positive-norm K' slots
// (1, I, J, K as present), then the negative-norm K' slots (KL, JL, IL, L as
// present).  The metric is then +1 x (kappa + kappa'+) followed by -1 x
// kappa'-.
inline std::vector<CoordUnit> coord_layout(PairId pair) {
    std::vector<CoordUnit> out;
    out.reserve(coord_dim(pair));
    for (int s = 0; s < 8; ++s)
        if (slot_in(pair.k, s)) out.push_back({false, s});
    for (int s = 0; s < 4; ++s)
        if (slot_in(pair.kprime, s)) out.push_back({true, s});
    for (int s = 4; s < 8; ++s)
        if (slot_in(pair.kprime, s)) out.push_back({true, s});
    return out;
}

template <class S>
std::vector<S> coords(const HermX<S>& x) {
    std::vector<S> out;
    for (CoordUnit u : coord_layout(x.pair))
        out.push_back(u.in_kprime ? x.big_a.c[u.slot] : x.little_a.c[u.slot]);
    return out;
}

template <class S>
HermX<S> herm_from_coords(PairId pair, const std::vector<S>& v) {
    HermX<S> x = herm_zero<S>(pair);
    auto layout = coord_layout(pair);
    if (v.size() != layout.size()) throw mismatch_error("herm_from_coords: wrong length");
    for (std::size_t p = 0; p < layout.size(); ++p) {
        if (layout[p].in_kprime)
            x.big_a.c[layout[p].slot] = v[p];
        else
            x.little_a.c[layout[p].slot] = v[p];
    }
    return x;
}

// S_p: the basis of V2 in coordinate order.  S_1, S_2, S_9 of the full pair
// are the classical Pauli matrices sigma_x, sigma_y, sigma_z.
template <class S>
std::vector<HermX<S>> pauli_basis(PairId pair) {
    std::vector<HermX<S>> out;
    for (CoordUnit u : coord_layout(pair)) {
        HermX<S> x = herm_zero<S>(pair);
        if (u.in_kprime)
            x.big_a.c[u.slot] = S(1);
        else
            x.little_a.c[u.slot] = S(1);
        out.push_back(x);
    }
    return out;
}

// Reads [[A, conj(a)], [a, -star(A)]] back off a 2x2 matrix; the residual is
// the max-abs defect of that shape (0 when the matrix lies exactly in V2).
template <class S>
std::pair<HermX<S>, double> herm_from_mat2(const Mat2T<S>& m) {
    HermX<S> x = herm_zero<S>(m.pair);
    for (int s = 0; s < 8; ++s) {
        x.big_a.c[s] = m.e[0][0].c[s][0];
        x.little_a.c[s] = m.e[1][0].c[0][s];
    }
    double residual = mat2_max_abs_diff(to_mat2(x), m);
    return {x, residual};
}

// Reads X back off the top-right block of [[0, X], [X~, 0]].
template <class S>
std::pair<HermX<S>, double> herm_from_gamma(const Mat4T<S>& g) {
    Mat2T<S> top = mat2_zero<S>(g.pair);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) top.e[i][j] = g.e[i][j + 2];
    auto [x, top_residual] = herm_from_mat2(top);
    double residual = mat4_max_abs_diff(gamma(x), g);
    return {x, residual < top_residual ? top_residual : residual};
}

}  // namespace magsq
