#pragma once

#include <array>
#include <string>

#include "magsq/algebra_id.hpp"
#include "magsq/errors.hpp"
#include "magsq/scalar.hpp"
#include "magsq/structure_table.hpp"

namespace magsq {

// Element of an 8-dimensional parent algebra.  Subalgebra membership is a
// property of the coefficients (see in_subalgebra), not a separate type.
template <class S>
struct CAElem {
    Family parent = Family::normed;
    std::array<S, 8> c{};

    bool operator==(const CAElem& o) const { return parent == o.parent && c == o.c; }
};

template <class S>
CAElem<S> ca_zero(Family f) {
    return {f, {}};
}

template <class S>
CAElem<S> ca_unit(Family f, int slot, S coeff = S(1)) {
    CAElem<S> e{f, {}};
    e.c[slot] = coeff;
    return e;
}

template <class S>
CAElem<S> ca_one(Family f) {
    return ca_unit<S>(f, 0);
}

template <class S>
bool in_subalgebra(const CAElem<S>& x, AlgebraId a) {
    if (family(a) != x.parent) return false;
    for (int s = 0; s < 8; ++s)
        if (!slot_in(a, s) && !is_zero(x.c[s])) return false;
    return true;
}

template <class S>
CAElem<S> add(const CAElem<S>& x, const CAElem<S>& y) {
    if (x.parent != y.parent) throw mismatch_error("add: parents differ");
    CAElem<S> r{x.parent, {}};
    for (int s = 0; s < 8; ++s) r.c[s] = x.c[s] + y.c[s];
    return r;
}

template <class S>
CAElem<S> sub(const CAElem<S>& x, const CAElem<S>& y) {
    if (x.parent != y.parent) throw mismatch_error("sub: parents differ");
    CAElem<S> r{x.parent, {}};
    for (int s = 0; s < 8; ++s) r.c[s] = x.c[s] - y.c[s];
    return r;
}

template <class S>
CAElem<S> scale(const S& t, const CAElem<S>& x) {
    CAElem<S> r{x.parent, {}};
    for (int s = 0; s < 8; ++s) r.c[s] = t * x.c[s];
    return r;
}

template <class S>
CAElem<S> neg(const CAElem<S>& x) {
    return scale(S(-1), x);
}

template <class S>
CAElem<S> mul(const CAElem<S>& x, const CAElem<S>& y) {
    if (x.parent != y.parent) throw mismatch_error("mul: parents differ");
    CAElem<S> r{x.parent, {}};
    for (int p = 0; p < 8; ++p) {
        if (is_zero(x.c[p])) continue;
        for (int q = 0; q < 8; ++q) {
            if (is_zero(y.c[q])) continue;
            TableEntry e = basis_product(x.parent, p, q);
            if (e.sign > 0)
                r.c[e.index] += x.c[p] * y.c[q];
            else
                r.c[e.index] -= x.c[p] * y.c[q];
        }
    }
    return r;
}

// Fixes slot 0, negates every imaginary slot.
template <class S>
CAElem<S> conj(const CAElem<S>& x) {
    CAElem<S> r{x.parent, {}};
    r.c[0] = x.c[0];
    for (int s = 1; s < 8; ++s) r.c[s] = -x.c[s];
    return r;
}

// Quadratic form |x|^2 = x conj(x); indefinite on the split parent.
template <class S>
S norm_sq(const CAElem<S>& x) {
    S q{};
    for (int s = 0; s < 8; ++s) {
        if (slot_sign(x.parent, s) > 0)
            q += x.c[s] * x.c[s];
        else
            q -= x.c[s] * x.c[s];
    }
    return q;
}

// Polarization of the quadratic form; basis units are orthogonal.
template <class S>
S inner(const CAElem<S>& x, const CAElem<S>& y) {
    if (x.parent != y.parent) throw mismatch_error("inner: parents differ");
    S q{};
    for (int s = 0; s < 8; ++s) {
        if (slot_sign(x.parent, s) > 0)
            q += x.c[s] * y.c[s];
        else
            q -= x.c[s] * y.c[s];
    }
    return q;
}

// x^-1 = conj(x) / |x|^2; null elements of the split parent have no inverse.
template <class S>
CAElem<S> inverse(const CAElem<S>& x) {
    S q = norm_sq(x);
    if (is_zero(q)) throw not_invertible_error("inverse: element has zero norm");
    CAElem<S> r = conj(x);
    for (int s = 0; s < 8; ++s) r.c[s] = r.c[s] / q;
    return r;
}

// True iff (xx)y = x(xy), (xy)x = x(yx), (yx)x = y(xx) all hold exactly.
template <class S>
bool check_alternative(const CAElem<S>& x, const CAElem<S>& y) {
    return mul(mul(x, x), y) == mul(x, mul(x, y)) &&
           mul(mul(x, y), x) == mul(x, mul(y, x)) &&
           mul(mul(y, x), x) == mul(y, mul(x, x));
}

// True iff p(q(pr)) = ((pq)p)r holds exactly for the triple.
template <class S>
bool check_moufang(const CAElem<S>& p, const CAElem<S>& q, const CAElem<S>& r) {
    return mul(p, mul(q, mul(p, r))) == mul(mul(mul(p, q), p), r);
}

template <class S>
std::string to_string(const CAElem<S>& x) {
    std::string out;
    for (int s = 0; s < 8; ++s) {
        if (is_zero(x.c[s])) continue;
        if (!out.empty()) out += " + ";
        out += "(" + std::to_string(to_double(x.c[s])) + ")*" + basis_name(x.parent, s);
    }
    return out.empty() ? "0" : out;
}

}  // namespace magsq
