#include "magsq/verify.hpp"

#include <algorithm>
#include <cmath>

namespace magsq {

namespace {

Rational small_rational(Rng& rng) {
    std::uniform_int_distribution<int> num(-6, 6);
    std::uniform_int_distribution<int> den(1, 4);
    return Rational(num(rng), den(rng));
}

double small_double(Rng& rng) {
    std::uniform_real_distribution<double> d(-1.0, 1.0);
    return d(rng);
}

std::vector<std::pair<int, int>> planes_of(PairId pair) {
    int n = coord_dim(pair);
    std::vector<std::pair<int, int>> out;
    for (int p = 0; p < n; ++p)
        for (int q = p + 1; q < n; ++q) out.push_back({p, q});
    return out;
}

// All single-factor basis units present in the pair's masks.
template <class S>
std::vector<TensorElem<S>> single_factor_units(PairId pair) {
    std::vector<TensorElem<S>> units;
    for (int s = 0; s < 8; ++s)
        if (slot_in(pair.kprime, s))
            units.push_back(from_kprime(pair, ca_unit<S>(Family::split, s)));
    for (int s = 0; s < 8; ++s)
        if (slot_in(pair.k, s))
            units.push_back(from_k(pair, ca_unit<S>(Family::normed, s)));
    return units;
}

bool associative_pair(PairId pair) {
    return dim(pair.kprime) <= 4 && dim(pair.k) <= 4;
}

void tally(CheckResult& r, bool ok) {
    ++r.checks;
    if (!ok) r.passed = false;
}

void tally_residual(CheckResult& r, double residual, double tol) {
    ++r.checks;
    r.max_residual = std::max(r.max_residual, residual);
    if (!(residual <= tol)) r.passed = false;
}

}  // namespace

CAElem<Rational> random_rational_elem(AlgebraId a, Rng& rng) {
    CAElem<Rational> x{family(a), {}};
    for (int s = 0; s < 8; ++s)
        if (slot_in(a, s)) x.c[s] = small_rational(rng);
    return x;
}

HermX<Rational> random_rational_herm(PairId pair, Rng& rng) {
    return herm(pair, random_rational_elem(pair.kprime, rng),
                random_rational_elem(pair.k, rng));
}

TensorElem<Rational> random_rational_tensor(PairId pair, Rng& rng) {
    TensorElem<Rational> u{pair, {}};
    for (int A = 0; A < 8; ++A)
        for (int a = 0; a < 8; ++a)
            if (slot_in(pair.kprime, A) && slot_in(pair.k, a))
                u.c[A][a] = small_rational(rng);
    return u;
}

HermX<double> random_double_herm(PairId pair, Rng& rng) {
    CAElem<double> big{Family::split, {}};
    CAElem<double> little{Family::normed, {}};
    for (int s = 0; s < 8; ++s) {
        if (slot_in(pair.kprime, s)) big.c[s] = small_double(rng);
        if (slot_in(pair.k, s)) little.c[s] = small_double(rng);
    }
    return herm(pair, big, little);
}

// --- exact checks --------------------------------------------------------------

CheckResult check_composition_property(AlgebraId a, int samples, Rng& rng) {
    CheckResult r{std::string("composition property in ") + algebra_name(a), true};
    for (int i = 0; i < samples; ++i) {
        auto x = random_rational_elem(a, rng);
        auto y = random_rational_elem(a, rng);
        tally(r, norm_sq(mul(x, y)) == norm_sq(x) * norm_sq(y));
    }
    return r;
}

CheckResult check_conj_antiautomorphism(Family f) {
    CheckResult r{"conjugation reverses basis products", true};
    for (int p = 0; p < 8; ++p)
        for (int q = 0; q < 8; ++q) {
            auto ep = ca_unit<Rational>(f, p);
            auto eq = ca_unit<Rational>(f, q);
            tally(r, conj(mul(ep, eq)) == mul(conj(eq), conj(ep)));
        }
    return r;
}

CheckResult check_subalgebra_closure(AlgebraId a) {
    CheckResult r{std::string("products stay inside ") + algebra_name(a), true};
    for (int p = 0; p < 8; ++p) {
        if (!slot_in(a, p)) continue;
        for (int q = 0; q < 8; ++q) {
            if (!slot_in(a, q)) continue;
            tally(r, slot_in(a, basis_product(family(a), p, q).index));
        }
    }
    return r;
}

CheckResult check_alternativity(Family f, int samples, Rng& rng) {
    AlgebraId parent = f == Family::normed ? AlgebraId::O : AlgebraId::Op;
    CheckResult r{std::string("alternativity in ") + algebra_name(parent), true};
    for (int i = 0; i < samples; ++i) {
        auto x = random_rational_elem(parent, rng);
        auto y = random_rational_elem(parent, rng);
        tally(r, check_alternative(x, y));
    }
    return r;
}

CheckResult check_moufang_basis(Family f) {
    AlgebraId parent = f == Family::normed ? AlgebraId::O : AlgebraId::Op;
    CheckResult r{std::string("Moufang identity on basis triples of ") + algebra_name(parent),
                  true};
    for (int p = 0; p < 8; ++p)
        for (int q = 0; q < 8; ++q)
            for (int s = 0; s < 8; ++s)
                tally(r, check_moufang(ca_unit<Rational>(f, p), ca_unit<Rational>(f, q),
                                       ca_unit<Rational>(f, s)));
    return r;
}

CheckResult check_artin_basis(Family f) {
    AlgebraId parent = f == Family::normed ? AlgebraId::O : AlgebraId::Op;
    CheckResult r{std::string("two-unit subalgebras associate in ") + algebra_name(parent),
                  true};
    for (int p = 0; p < 8; ++p)
        for (int q = 0; q < 8; ++q) {
            auto u = ca_unit<Rational>(f, p);
            auto v = ca_unit<Rational>(f, q);
            std::array<CAElem<Rational>, 4> span{ca_one<Rational>(f), u, v, mul(u, v)};
            for (const auto& a : span)
                for (const auto& b : span)
                    for (const auto& c : span)
                        tally(r, mul(mul(a, b), c) == mul(a, mul(b, c)));
        }
    return r;
}

CheckResult check_tensor_unit_and_cross(PairId pair, int samples, Rng& rng) {
    CheckResult r{"tensor unit law and cross-factor commutativity " + pair_name(pair), true};
    auto one = t_one<Rational>(pair);
    for (int i = 0; i < samples; ++i) {
        auto u = random_rational_tensor(pair, rng);
        tally(r, t_mul(one, u) == u && t_mul(u, one) == u);
    }
    for (int A = 0; A < 8; ++A) {
        if (!slot_in(pair.kprime, A)) continue;
        for (int a = 0; a < 8; ++a) {
            if (!slot_in(pair.k, a)) continue;
            auto big = from_kprime(pair, ca_unit<Rational>(Family::split, A));
            auto little = from_k(pair, ca_unit<Rational>(Family::normed, a));
            auto expected = t_basis<Rational>(pair, A, a);
            tally(r, t_mul(big, little) == expected && t_mul(little, big) == expected);
        }
    }
    if (associative_pair(pair)) {
        for (int i = 0; i < samples; ++i) {
            auto u = random_rational_tensor(pair, rng);
            auto v = random_rational_tensor(pair, rng);
            tally(r, t_conj(t_mul(u, v)) == t_mul(t_conj(v), t_conj(u)));
        }
    }
    return r;
}

CheckResult check_commute_implies_associate(PairId pair) {
    CheckResult r{"commuting units associate with every unit " + pair_name(pair), true};
    auto units = single_factor_units<Rational>(pair);
    for (const auto& u : units)
        for (const auto& v : units) {
            if (!t_commutes(u, v)) continue;
            for (const auto& w : units)
                tally(r, t_mul(t_mul(u, v), w) == t_mul(u, t_mul(v, w)));
        }
    return r;
}

CheckResult check_determinant_identity(PairId pair, int samples, Rng& rng) {
    CheckResult r{"gamma(X)^2 = (|A|^2 + |a|^2) I for " + pair_name(pair), true};
    for (int i = 0; i < samples; ++i) {
        auto x = random_rational_herm(pair, rng);
        auto g = gamma(x);
        auto expected = mat4_scale(norm_x(x), mat4_identity<Rational>(pair));
        tally(r, mat4_eq(mat_mul4(g, g), expected));
    }
    return r;
}

CheckResult check_coord_isometry(PairId pair, int samples, Rng& rng) {
    CheckResult r{"coordinate norm and round trip " + pair_name(pair), true};
    auto g = metric(pair);
    for (int i = 0; i < samples; ++i) {
        auto x = random_rational_herm(pair, rng);
        auto v = coords(x);
        Rational quad{};
        for (std::size_t p = 0; p < v.size(); ++p)
            quad += Rational(g[p]) * v[p] * v[p];
        auto back = herm_from_coords(pair, v);
        tally(r, quad == norm_x(x) && back.big_a == x.big_a && back.little_a == x.little_a);
    }
    return r;
}

CheckResult check_clifford_exact(PairId pair) {
    CheckResult r{"Clifford anticommutators " + pair_name(pair), true};
    auto report = check_clifford<Rational>(pair);
    r.checks = report.pairs_checked;
    r.passed = report.ok();
    return r;
}

CheckResult check_left_alternative_lemma(PairId pair, int samples, Rng& rng) {
    CheckResult r{"P(PQ) = (PP)Q for arbitrary Q " + pair_name(pair), true};
    for (int i = 0; i < samples; ++i) {
        auto p4 = gamma(random_rational_herm(pair, rng));
        Mat4T<Rational> q4 = mat4_zero<Rational>(pair);
        for (auto& row : q4.e)
            for (auto& entry : row) entry = random_rational_tensor(pair, rng);
        tally(r, mat4_eq(mat_mul4(p4, mat_mul4(p4, q4)), mat_mul4(mat_mul4(p4, p4), q4)));
    }
    return r;
}

CheckResult check_sandwich_assoc_lemma(PairId pair, int samples, Rng& rng) {
    CheckResult r{"(PQ)P^-1 = P(QP^-1) on the representation space " + pair_name(pair), true};
    int done = 0;
    while (done < samples) {
        auto x = random_rational_herm(pair, rng);
        Rational n = norm_x(x);
        if (is_zero(n)) continue;  // null axes excluded
        auto p4 = gamma(x);
        auto q4 = gamma(random_rational_herm(pair, rng));
        auto p_inv = mat4_scale(Rational(1) / n, p4);
        tally(r, mat4_eq(mat_mul4(mat_mul4(p4, q4), p_inv), mat_mul4(p4, mat_mul4(q4, p_inv))));
        ++done;
    }
    // Exact unit-norm axes: basis directions and a Pythagorean mix.
    auto basis = pauli_basis<Rational>(pair);
    for (const auto& s : basis) {
        auto p4 = gamma(s);
        auto q4 = gamma(random_rational_herm(pair, rng));
        auto p_inv = mat4_scale(Rational(1) / norm_x(s), p4);
        tally(r, mat4_eq(mat_mul4(mat_mul4(p4, q4), p_inv), mat_mul4(p4, mat_mul4(q4, p_inv))));
    }
    if (coord_dim(pair) >= 2) {
        std::vector<Rational> v(coord_dim(pair), Rational(0));
        v[0] = Rational(3, 5);
        v[1] = Rational(4, 5);
        auto x = herm_from_coords(pair, v);  // both slots spacelike: |X| = 1
        auto p4 = gamma(x);
        auto q4 = gamma(random_rational_herm(pair, rng));
        auto p_inv = mat4_scale(Rational(1) / norm_x(x), p4);
        tally(r, mat4_eq(mat_mul4(mat_mul4(p4, q4), p_inv), mat_mul4(p4, mat_mul4(q4, p_inv))));
    }
    return r;
}

CheckResult check_reflection_axes(PairId pair, int samples, Rng& rng) {
    CheckResult r{"reflection negates exactly its axis " + pair_name(pair), true};
    int n = coord_dim(pair);
    auto basis = pauli_basis<Rational>(pair);
    for (int p = 0; p < n; ++p) {
        auto axis = gamma(basis[p]);
        tally(r, mat4_eq(reflect(axis, axis), mat4_scale(Rational(-1), axis)));
        for (int i = 0; i < samples; ++i) {
            auto y = random_rational_herm(pair, rng);
            auto [image, residual] = herm_from_gamma(reflect(axis, gamma(y)));
            bool ok = residual == 0;
            auto vy = coords(y);
            auto vi = coords(image);
            for (int t = 0; t < n; ++t)
                ok = ok && vi[t] == (t == p ? -vy[t] : vy[t]);
            tally(r, ok);
        }
    }
    return r;
}

CheckResult check_double_reflection_membership(PairId pair, int samples, Rng& rng) {
    CheckResult r{"double reflections stay in the representation space " + pair_name(pair),
                  true};
    int n = coord_dim(pair);
    auto basis = pauli_basis<Rational>(pair);
    std::uniform_int_distribution<int> pick(0, n - 1);
    for (int i = 0; i < samples; ++i) {
        int p = pick(rng), q = pick(rng);
        auto x = random_rational_herm(pair, rng);
        auto once = reflect(gamma(basis[q]), gamma(x));
        auto twice = reflect(gamma(basis[p]), once);
        auto [image, residual] = herm_from_gamma(twice);
        tally(r, residual == 0 && norm_x(image) == norm_x(x));
    }
    return r;
}

CheckResult check_flip_signs(PairId pair) {
    CheckResult r{"flip fixes commuting coordinates, negates the rest " + pair_name(pair),
                  true};
    int n = coord_dim(pair);
    auto layout = coord_layout(pair);
    auto basis = pauli_basis<Rational>(pair);
    for (int u = 0; u < n; ++u) {
        if (layout[u].slot == 0) continue;  // flips are about imaginary units
        FactorElem<Rational> unit{
            layout[u].in_kprime,
            ca_unit<Rational>(layout[u].in_kprime ? Family::split : Family::normed,
                              layout[u].slot)};
        for (int p = 0; p < n; ++p) {
            bool commutes = layout[p].slot == 0 ||
                            layout[p].in_kprime != layout[u].in_kprime ||
                            layout[p].slot == layout[u].slot;
            auto image = flip(unit, basis[p]);
            auto expected = coords(basis[p]);
            if (!commutes)
                for (auto& c : expected) c = -c;
            tally(r, coords(image) == expected);
            // involution: flipping twice restores the original
            tally(r, coords(flip(unit, image)) == coords(basis[p]));
        }
    }
    return r;
}

// --- numeric checks --------------------------------------------------------------

CheckResult check_rotation_formulas(PairId pair, const std::vector<double>& thetas,
                                    double tol_moved, double tol_fixed) {
    CheckResult r{"plane update rule and spectator coordinates " + pair_name(pair), true};
    auto g = metric(pair);
    int n = coord_dim(pair);
    for (auto [p, q] : planes_of(pair)) {
        Method method = method_for(pair, p, q);
        Kind kind = kind_for(pair, p, q);
        for (double theta : thetas) {
            OrthoMat om = so_matrix({pair, p, q, theta});
            TrigPair t = trig(kind, theta);
            double mpq, mqp;
            if (method == Method::exponential) {
                mpq = -t.s * g[q];
                mqp = t.s * g[p];
            } else {
                mpq = -t.s * g[p] * g[q];
                mqp = t.s;
            }
            double moved = std::max(
                std::max(std::abs(om.m(p, p) - t.c), std::abs(om.m(q, q) - t.c)),
                std::max(std::abs(om.m(p, q) - mpq), std::abs(om.m(q, p) - mqp)));
            tally_residual(r, moved, tol_moved);
            double fixed = 0;
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) {
                    if ((i == p || i == q) && (j == p || j == q)) continue;
                    fixed = std::max(fixed, std::abs(om.m(i, j) - (i == j ? 1.0 : 0.0)));
                }
            ++r.checks;
            if (!(fixed <= tol_fixed)) r.passed = false;
        }
    }
    return r;
}

CheckResult check_isometry_and_det(PairId pair, const std::vector<double>& thetas,
                                   double tol) {
    CheckResult r{"m^T G m = G and det m = 1 " + pair_name(pair), true};
    for (auto [p, q] : planes_of(pair))
        for (double theta : thetas) {
            OrthoMat om = so_matrix({pair, p, q, theta});
            tally_residual(r, isometry_residual(om), tol);
            tally_residual(r, std::abs(det_of(om) - 1.0), tol);
        }
    return r;
}

CheckResult check_group_law(PairId pair, double tol) {
    CheckResult r{"one-parameter subgroup law " + pair_name(pair), true};
    const double t1 = 0.7, t2 = -0.4;
    for (auto [p, q] : planes_of(pair)) {
        Eigen::MatrixXd lhs = so_matrix({pair, p, q, t1}).m * so_matrix({pair, p, q, t2}).m;
        Eigen::MatrixXd rhs = so_matrix({pair, p, q, t1 + t2}).m;
        tally_residual(r, (lhs - rhs).cwiseAbs().maxCoeff(), tol);
    }
    return r;
}

CheckResult check_norm_preservation(PairId pair, int samples, Rng& rng, double tol) {
    CheckResult r{"generators preserve |A|^2 + |a|^2 " + pair_name(pair), true};
    for (auto [p, q] : planes_of(pair))
        for (int i = 0; i < samples; ++i) {
            auto x = random_double_herm(pair, rng);
            auto moved = act_generator({pair, p, q, 0.83}, x);
            tally_residual(r, std::abs(norm_x(moved) - norm_x(x)), tol);
        }
    return r;
}

CheckResult check_equivalence_2x2_4x4(PairId pair, int samples, Rng& rng, double tol) {
    CheckResult r{"2x2 and 4x4 exponential actions agree " + pair_name(pair), true};
    for (auto [p, q] : planes_of(pair)) {
        if (method_for(pair, p, q) != Method::exponential) continue;
        for (double theta : {0.9, -1.7})
            for (int i = 0; i < samples; ++i) {
                auto x = random_double_herm(pair, rng);
                tally_residual(r, equiv_residual_4x4_2x2({pair, p, q, theta}, x), tol);
            }
    }
    return r;
}

CheckResult check_assoc_reduction(PairId pair, const std::vector<double>& thetas,
                                  double tol) {
    CheckResult r{"nested flips reduce to the exponential action " + pair_name(pair), true};
    if (!associative_pair(pair)) return r;  // not applicable; vacuously true
    for (auto [p, q] : planes_of(pair)) {
        if (method_for(pair, p, q) != Method::nested_flip) continue;
        for (double theta : thetas)
            tally_residual(r, assoc_reduction_residual({pair, p, q, theta}), tol);
    }
    return r;
}

CheckResult check_double_reflection_numeric(PairId pair, int samples, Rng& rng,
                                            double tol) {
    CheckResult r{"nested flips match the double reflection " + pair_name(pair), true};
    auto basis = pauli_basis<double>(pair);
    for (auto [p, q] : planes_of(pair)) {
        if (method_for(pair, p, q) != Method::nested_flip) continue;
        Kind kind = kind_for(pair, p, q);
        for (double theta : {0.6, -1.3}) {
            TrigPair half = trig(kind, theta / 2);
            std::vector<double> w2(coord_dim(pair), 0.0);
            w2[p] = half.c;
            w2[q] = half.s;
            auto tilted = gamma(herm_from_coords(pair, w2));
            for (int i = 0; i < samples; ++i) {
                auto x = random_double_herm(pair, rng);
                auto lhs = gamma(act_nested_2flip({pair, p, q, theta}, x));
                auto rhs = reflect(tilted, reflect(gamma(basis[p]), gamma(x)));
                tally_residual(r, mat4_max_abs_diff(lhs, rhs), tol);
            }
        }
    }
    return r;
}

CheckResult check_random_words(PairId pair, int word_len, int trials, Rng& rng,
                               double tol) {
    CheckResult r{"long generator words stay isometries " + pair_name(pair), true};
    auto planes = planes_of(pair);
    std::uniform_int_distribution<std::size_t> pick(0, planes.size() - 1);
    std::uniform_real_distribution<double> angle(-0.5, 0.5);  // bounded rapidity
    for (int t = 0; t < trials; ++t) {
        std::vector<GeneratorSpec> specs;
        for (int i = 0; i < word_len; ++i) {
            auto [p, q] = planes[pick(rng)];
            specs.push_back({pair, p, q, angle(rng)});
        }
        tally_residual(r, isometry_residual(compose(pair, specs)), tol);
    }
    return r;
}

// --- suites ----------------------------------------------------------------------

std::vector<CheckResult> run_algebra_suite(PairId pair, const VerifyOptions& opt) {
    Rng rng(opt.seed);
    std::vector<CheckResult> out;
    out.push_back(check_composition_property(pair.kprime, opt.samples, rng));
    out.push_back(check_composition_property(pair.k, opt.samples, rng));
    out.push_back(check_conj_antiautomorphism(Family::split));
    out.push_back(check_conj_antiautomorphism(Family::normed));
    out.push_back(check_subalgebra_closure(pair.kprime));
    out.push_back(check_subalgebra_closure(pair.k));
    out.push_back(check_alternativity(Family::split, opt.samples, rng));
    out.push_back(check_alternativity(Family::normed, opt.samples, rng));
    out.push_back(check_moufang_basis(Family::split));
    out.push_back(check_moufang_basis(Family::normed));
    out.push_back(check_artin_basis(Family::split));
    out.push_back(check_artin_basis(Family::normed));
    out.push_back(check_tensor_unit_and_cross(pair, std::min(opt.samples, 50), rng));
    out.push_back(check_commute_implies_associate(pair));
    return out;
}

std::vector<CheckResult> run_clifford_suite(PairId pair, const VerifyOptions& opt) {
    Rng rng(opt.seed + 1);
    int samples = std::min(opt.samples, 50);
    std::vector<CheckResult> out;
    out.push_back(check_clifford_exact(pair));
    out.push_back(check_determinant_identity(pair, samples, rng));
    out.push_back(check_coord_isometry(pair, samples, rng));
    out.push_back(check_left_alternative_lemma(pair, std::min(samples, 20), rng));
    out.push_back(check_sandwich_assoc_lemma(pair, std::min(samples, 20), rng));
    out.push_back(check_reflection_axes(pair, 3, rng));
    out.push_back(check_double_reflection_membership(pair, std::min(samples, 20), rng));
    return out;
}

std::vector<CheckResult> run_spin_suite(PairId pair, const VerifyOptions& opt) {
    Rng rng(opt.seed + 2);
    const double pi = 3.14159265358979323846;
    std::vector<double> thetas{pi / 3, -pi / 3, 1.0, -1.0, 2.0, -2.0};
    std::vector<CheckResult> out;
    out.push_back(check_flip_signs(pair));
    out.push_back(check_rotation_formulas(pair, thetas, opt.tolerance, 1e-13));
    out.push_back(check_isometry_and_det(pair, {0.9, -1.6}, opt.tolerance));
    out.push_back(check_group_law(pair, opt.tolerance));
    out.push_back(check_norm_preservation(pair, 2, rng, opt.tolerance));
    out.push_back(check_equivalence_2x2_4x4(pair, 2, rng, opt.tolerance));
    out.push_back(check_assoc_reduction(pair, {0.8, -1.2}, opt.tolerance));
    out.push_back(check_double_reflection_numeric(pair, 2, rng, opt.tolerance));
    out.push_back(check_random_words(pair, 8, 3, rng, 1e-9));
    return out;
}

std::vector<CheckResult> run_all_suites(PairId pair, const VerifyOptions& opt) {
    auto out = run_algebra_suite(pair, opt);
    auto clifford = run_clifford_suite(pair, opt);
    auto spin = run_spin_suite(pair, opt);
    out.insert(out.end(), clifford.begin(), clifford.end());
    out.insert(out.end(), spin.begin(), spin.end());
    return out;
}

}  // namespace magsq
