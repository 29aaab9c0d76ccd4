#pragma once

#include <random>
#include <string>
#include <vector>

#include "magsq/spin_action.hpp"

namespace magsq {

struct CheckResult {
    std::string name;
    bool passed = false;
    long long checks = 0;
    double max_residual = 0;  // 0 for exact-arithmetic checks
};

struct VerifyOptions {
    unsigned long long seed = 0;
    double tolerance = 1e-12;
    int samples = 200;
};

using Rng = std::mt19937_64;

// --- random elements ---------------------------------------------------------

// Small-magnitude rationals keep exact products cheap.
CAElem<Rational> random_rational_elem(AlgebraId a, Rng& rng);
HermX<Rational> random_rational_herm(PairId pair, Rng& rng);
TensorElem<Rational> random_rational_tensor(PairId pair, Rng& rng);
HermX<double> random_double_herm(PairId pair, Rng& rng);

// --- exact checks (structural layer) ------------------------------------------

CheckResult check_composition_property(AlgebraId a, int samples, Rng& rng);
CheckResult check_conj_antiautomorphism(Family f);
CheckResult check_subalgebra_closure(AlgebraId a);
CheckResult check_alternativity(Family f, int samples, Rng& rng);
CheckResult check_moufang_basis(Family f);
CheckResult check_artin_basis(Family f);
CheckResult check_tensor_unit_and_cross(PairId pair, int samples, Rng& rng);
CheckResult check_commute_implies_associate(PairId pair);
CheckResult check_determinant_identity(PairId pair, int samples, Rng& rng);
CheckResult check_coord_isometry(PairId pair, int samples, Rng& rng);
CheckResult check_clifford_exact(PairId pair);
CheckResult check_left_alternative_lemma(PairId pair, int samples, Rng& rng);
CheckResult check_sandwich_assoc_lemma(PairId pair, int samples, Rng& rng);
CheckResult check_reflection_axes(PairId pair, int samples, Rng& rng);
CheckResult check_double_reflection_membership(PairId pair, int samples, Rng& rng);
CheckResult check_flip_signs(PairId pair);

// --- numeric checks (generator layer) ------------------------------------------

// Acted block matches the commuting/anticommuting update rule; spectators stay
// fixed to tol_fixed.
CheckResult check_rotation_formulas(PairId pair, const std::vector<double>& thetas,
                                    double tol_moved, double tol_fixed);
CheckResult check_isometry_and_det(PairId pair, const std::vector<double>& thetas,
                                   double tol);
CheckResult check_group_law(PairId pair, double tol);
CheckResult check_norm_preservation(PairId pair, int samples, Rng& rng, double tol);
CheckResult check_equivalence_2x2_4x4(PairId pair, int samples, Rng& rng, double tol);
CheckResult check_assoc_reduction(PairId pair, const std::vector<double>& thetas,
                                  double tol);
CheckResult check_double_reflection_numeric(PairId pair, int samples, Rng& rng,
                                            double tol);
CheckResult check_random_words(PairId pair, int word_len, int trials, Rng& rng,
                               double tol);

// --- suites --------------------------------------------------------------------

std::vector<CheckResult> run_algebra_suite(PairId pair, const VerifyOptions& opt);
std::vector<CheckResult> run_clifford_suite(PairId pair, const VerifyOptions& opt);
std::vector<CheckResult> run_spin_suite(PairId pair, const VerifyOptions& opt);
std::vector<CheckResult> run_all_suites(PairId pair, const VerifyOptions& opt);

}  // namespace magsq
