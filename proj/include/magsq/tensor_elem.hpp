#pragma once

#include <array>

#include "magsq/ca_elem.hpp"
#include "magsq/pair_id.hpp"

namespace magsq {

// Element of K' (x) K, stored as a dense 8x8 coefficient grid over the basis
// E_A (x) e_a; c[A][a] multiplies E_A (x) e_a.  Entry (0,0) is the real part.
template <class S>
struct TensorElem {
    PairId pair;
    std::array<std::array<S, 8>, 8> c{};

    bool operator==(const TensorElem& o) const { return pair == o.pair && c == o.c; }
};

template <class S>
TensorElem<S> t_zero(PairId pair) {
    return {pair, {}};
}

template <class S>
TensorElem<S> t_basis(PairId pair, int a_slot, int k_slot, S coeff = S(1)) {
    TensorElem<S> u{pair, {}};
    u.c[a_slot][k_slot] = coeff;
    return u;
}

template <class S>
TensorElem<S> t_one(PairId pair) {
    return t_basis<S>(pair, 0, 0);
}

// Embeds A in K' as A (x) 1.
template <class S>
TensorElem<S> from_kprime(PairId pair, const CAElem<S>& x) {
    if (x.parent != Family::split) throw mismatch_error("from_kprime: element not split");
    TensorElem<S> u{pair, {}};
    for (int s = 0; s < 8; ++s) u.c[s][0] = x.c[s];
    return u;
}

// Embeds a in K as 1 (x) a.
template <class S>
TensorElem<S> from_k(PairId pair, const CAElem<S>& x) {
    if (x.parent != Family::normed) throw mismatch_error("from_k: element not normed");
    TensorElem<S> u{pair, {}};
    for (int s = 0; s < 8; ++s) u.c[0][s] = x.c[s];
    return u;
}

// True iff coefficients vanish outside the pair's two slot masks.
template <class S>
bool in_pair_masks(const TensorElem<S>& u) {
    for (int A = 0; A < 8; ++A)
        for (int a = 0; a < 8; ++a)
            if (!is_zero(u.c[A][a]) && !(slot_in(u.pair.kprime, A) && slot_in(u.pair.k, a)))
                return false;
    return true;
}

template <class S>
bool t_is_zero(const TensorElem<S>& u) {
    for (const auto& row : u.c)
        for (const auto& x : row)
            if (!is_zero(x)) return false;
    return true;
}

template <class S>
TensorElem<S> t_add(const TensorElem<S>& u, const TensorElem<S>& v) {
    if (!(u.pair == v.pair)) throw mismatch_error("t_add: pairs differ");
    TensorElem<S> r{u.pair, {}};
    for (int A = 0; A < 8; ++A)
        for (int a = 0; a < 8; ++a) r.c[A][a] = u.c[A][a] + v.c[A][a];
    return r;
}

template <class S>
TensorElem<S> t_sub(const TensorElem<S>& u, const TensorElem<S>& v) {
    if (!(u.pair == v.pair)) throw mismatch_error("t_sub: pairs differ");
    TensorElem<S> r{u.pair, {}};
    for (int A = 0; A < 8; ++A)
        for (int a = 0; a < 8; ++a) r.c[A][a] = u.c[A][a] - v.c[A][a];
    return r;
}

template <class S>
TensorElem<S> t_scale(const S& t, const TensorElem<S>& u) {
    TensorElem<S> r{u.pair, {}};
    for (int A = 0; A < 8; ++A)
        for (int a = 0; a < 8; ++a) r.c[A][a] = t * u.c[A][a];
    return r;
}

template <class S>
TensorElem<S> t_neg(const TensorElem<S>& u) {
    return t_scale(S(-1), u);
}

// (A (x) a)(B (x) b) = AB (x) ab, extended bilinearly.
template <class S>
TensorElem<S> t_mul(const TensorElem<S>& u, const TensorElem<S>& v) {
    if (!(u.pair == v.pair)) throw mismatch_error("t_mul: pairs differ");
    TensorElem<S> r{u.pair, {}};
    for (int A = 0; A < 8; ++A) {
        for (int a = 0; a < 8; ++a) {
            if (is_zero(u.c[A][a])) continue;
            for (int B = 0; B < 8; ++B) {
                TableEntry es = basis_product(Family::split, A, B);
                for (int b = 0; b < 8; ++b) {
                    if (is_zero(v.c[B][b])) continue;
                    TableEntry en = basis_product(Family::normed, a, b);
                    if (es.sign * en.sign > 0)
                        r.c[es.index][en.index] += u.c[A][a] * v.c[B][b];
                    else
                        r.c[es.index][en.index] -= u.c[A][a] * v.c[B][b];
                }
            }
        }
    }
    return r;
}

// Conjugates both factors: coefficient (A, a) picks up sign(A) * sign(a).
template <class S>
TensorElem<S> t_conj(const TensorElem<S>& u) {
    TensorElem<S> r{u.pair, {}};
    for (int A = 0; A < 8; ++A)
        for (int a = 0; a < 8; ++a) {
            int sgn = (A == 0 ? 1 : -1) * (a == 0 ? 1 : -1);
            r.c[A][a] = sgn > 0 ? u.c[A][a] : -u.c[A][a];
        }
    return r;
}

// Conjugates the K' factor only (A (x) a -> conj(A) (x) a).
template <class S>
TensorElem<S> t_conj_kprime(const TensorElem<S>& u) {
    TensorElem<S> r{u.pair, {}};
    for (int A = 0; A < 8; ++A)
        for (int a = 0; a < 8; ++a) r.c[A][a] = A == 0 ? u.c[A][a] : -u.c[A][a];
    return r;
}

// Conjugates the K factor only (A (x) a -> A (x) conj(a)).
template <class S>
TensorElem<S> t_conj_k(const TensorElem<S>& u) {
    TensorElem<S> r{u.pair, {}};
    for (int A = 0; A < 8; ++A)
        for (int a = 0; a < 8; ++a) r.c[A][a] = a == 0 ? u.c[A][a] : -u.c[A][a];
    return r;
}

// Product-equality test used to dispatch the generator algorithms; intended
// for single-factor basis units (E (x) 1 or 1 (x) e), where commuting also
// implies associating with every third unit.
template <class S>
bool t_commutes(const TensorElem<S>& u, const TensorElem<S>& v) {
    return t_mul(u, v) == t_mul(v, u);
}

template <class S>
double t_max_abs(const TensorElem<S>& u) {
    double m = 0;
    for (const auto& row : u.c)
        for (const auto& x : row) {
            double d = to_double(x);
            if (d < 0) d = -d;
            if (d > m) m = d;
        }
    return m;
}

}  // namespace magsq
