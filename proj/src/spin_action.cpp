#include "magsq/spin_action.hpp"

#include <cmath>
#include <string>

namespace magsq {

namespace {

std::vector<CoordUnit> layout_checked(PairId pair, int p) {
    auto layout = coord_layout(pair);
    if (p < 0 || p >= static_cast<int>(layout.size()))
        throw invalid_plane_error("coordinate index " + std::to_string(p + 1) +
                                  " out of range for " + pair_name(pair));
    return layout;
}

void check_plane(PairId pair, int p, int q) {
    layout_checked(pair, p);
    layout_checked(pair, q);
    if (p == q) throw invalid_plane_error("degenerate plane: p = q");
}

}  // namespace

CoordUnit coord_unit(PairId pair, int p) {
    return layout_checked(pair, p)[static_cast<std::size_t>(p)];
}

Method method_for(PairId pair, int p, int q) {
    check_plane(pair, p, q);
    CoordUnit u = coord_unit(pair, p);
    CoordUnit v = coord_unit(pair, q);
    if (u.slot == 0 || v.slot == 0) return Method::exponential;
    if (u.in_kprime != v.in_kprime) return Method::exponential;
    return Method::nested_flip;  // distinct imaginary units of one factor
}

Kind kind_for(PairId pair, int p, int q) {
    check_plane(pair, p, q);
    auto g = metric(pair);
    return g[p] * g[q] > 0 ? Kind::rotation : Kind::boost;
}

const char* method_name(Method m) {
    return m == Method::exponential ? "exponential" : "nested-flip";
}

const char* kind_name(Kind k) { return k == Kind::rotation ? "rotation" : "boost"; }

TrigPair trig(Kind kind, double theta) {
    if (kind == Kind::rotation) return {std::cos(theta), std::sin(theta)};
    return {std::cosh(theta), std::sinh(theta)};
}

namespace {

using HermD = HermX<double>;
using Mat2D = Mat2T<double>;
using Mat4D = Mat4T<double>;

Mat2D xaction_left(const GeneratorSpec& spec, TrigPair half) {
    auto basis = pauli_basis<double>(spec.pair);
    Mat2D sp_sq = mat_mul2(to_mat2(basis[spec.p]), trace_reverse(basis[spec.q]));
    return mat2_sub(mat2_scale(half.c, mat2_identity<double>(spec.pair)),
                    mat2_scale(half.s, sp_sq));
}

Mat2D xaction_right(const GeneratorSpec& spec, TrigPair half) {
    auto basis = pauli_basis<double>(spec.pair);
    Mat2D sp_sq = mat_mul2(trace_reverse(basis[spec.p]), to_mat2(basis[spec.q]));
    return mat2_add(mat2_scale(half.c, mat2_identity<double>(spec.pair)),
                    mat2_scale(half.s, sp_sq));
}

Mat4D exp_4x4_factor(const GeneratorSpec& spec, double sign_s) {
    auto gammas = gamma_basis<double>(spec.pair);
    Mat4D gg = mat_mul4(gammas[spec.p], gammas[spec.q]);
    TrigPair half = trig(kind_for(spec.pair, spec.p, spec.q), spec.theta / 2);
    return mat4_add(mat4_scale(half.c, mat4_identity<double>(spec.pair)),
                    mat4_scale(sign_s * half.s, gg));
}

Mat4D act_exp_4x4_unchecked(const GeneratorSpec& spec, const Mat4D& p4) {
    Mat4D m = exp_4x4_factor(spec, -1);
    Mat4D m_inv = exp_4x4_factor(spec, +1);
    return mat_mul4(mat_mul4(m, p4), m_inv);
}

FactorElem<double> plane_unit(PairId pair, int p) {
    CoordUnit u = coord_unit(pair, p);
    Family f = u.in_kprime ? Family::split : Family::normed;
    return {u.in_kprime, ca_unit<double>(f, u.slot)};
}

}  // namespace

HermX<double> act_xaction_2x2(const GeneratorSpec& spec, const HermX<double>& x) {
    if (method_for(spec.pair, spec.p, spec.q) != Method::exponential)
        throw method_dispatch_error("act_xaction_2x2: plane units do not commute");
    TrigPair half = trig(kind_for(spec.pair, spec.p, spec.q), spec.theta / 2);
    Mat2D moved = mat_mul2(mat_mul2(xaction_left(spec, half), to_mat2(x)),
                           xaction_right(spec, half));
    return herm_from_mat2(moved).first;
}

Mat4T<double> act_exp_4x4(const GeneratorSpec& spec, const Mat4T<double>& p4) {
    if (method_for(spec.pair, spec.p, spec.q) != Method::exponential)
        throw method_dispatch_error("act_exp_4x4: plane units do not commute");
    return act_exp_4x4_unchecked(spec, p4);
}

HermX<double> act_nested_2flip(const GeneratorSpec& spec, const HermX<double>& x) {
    if (method_for(spec.pair, spec.p, spec.q) != Method::nested_flip)
        throw method_dispatch_error("act_nested_2flip: plane units commute");
    FactorElem<double> ep = plane_unit(spec.pair, spec.p);
    FactorElem<double> eq = plane_unit(spec.pair, spec.q);
    TrigPair half = trig(kind_for(spec.pair, spec.p, spec.q), spec.theta / 2);
    FactorElem<double> m1{ep.in_kprime, neg(ep.w)};
    FactorElem<double> m2{ep.in_kprime, add(scale(half.c, ep.w), scale(half.s, eq.w))};
    Mat2D inner = scalar_sandwich(m1, to_mat2(x));
    Mat2D outer = scalar_sandwich(m2, inner);
    return herm_from_mat2(outer).first;
}

HermX<double> act_generator(const GeneratorSpec& spec, const HermX<double>& x) {
    if (method_for(spec.pair, spec.p, spec.q) == Method::exponential)
        return act_xaction_2x2(spec, x);
    return act_nested_2flip(spec, x);
}

OrthoMat so_matrix(const GeneratorSpec& spec) {
    int n = coord_dim(spec.pair);
    OrthoMat om{spec.pair, Eigen::MatrixXd::Zero(n, n), metric(spec.pair)};
    auto basis = pauli_basis<double>(spec.pair);
    for (int j = 0; j < n; ++j) {
        auto col = coords(act_generator(spec, basis[j]));
        for (int i = 0; i < n; ++i) om.m(i, j) = col[i];
    }
    return om;
}

OrthoMat so_matrix_via(Method method, const GeneratorSpec& spec) {
    int n = coord_dim(spec.pair);
    OrthoMat om{spec.pair, Eigen::MatrixXd::Zero(n, n), metric(spec.pair)};
    auto basis = pauli_basis<double>(spec.pair);
    for (int j = 0; j < n; ++j) {
        std::vector<double> col;
        if (method == Method::exponential) {
            Mat4D moved = act_exp_4x4_unchecked(spec, gamma(basis[j]));
            col = coords(herm_from_gamma(moved).first);
        } else {
            col = coords(act_nested_2flip(spec, basis[j]));
        }
        for (int i = 0; i < n; ++i) om.m(i, j) = col[i];
    }
    return om;
}

OrthoMat compose(PairId pair, const std::vector<GeneratorSpec>& specs) {
    int n = coord_dim(pair);
    OrthoMat out{pair, Eigen::MatrixXd::Identity(n, n), metric(pair)};
    for (const GeneratorSpec& spec : specs) {
        if (!(spec.pair == pair)) throw mismatch_error("compose: pair mismatch");
        out.m = out.m * so_matrix(spec).m;
    }
    return out;
}

double isometry_residual(const OrthoMat& om) {
    Eigen::VectorXd gd(om.g.size());
    for (std::size_t i = 0; i < om.g.size(); ++i) gd(static_cast<int>(i)) = om.g[i];
    Eigen::MatrixXd g = gd.asDiagonal();
    return (om.m.transpose() * g * om.m - g).cwiseAbs().maxCoeff();
}

double det_of(const OrthoMat& om) { return om.m.determinant(); }

double equiv_residual_4x4_2x2(const GeneratorSpec& spec, const HermX<double>& x) {
    Mat4D via2 = gamma(act_xaction_2x2(spec, x));
    Mat4D via4 = act_exp_4x4(spec, gamma(x));
    return mat4_max_abs_diff(via2, via4);
}

double assoc_reduction_residual(const GeneratorSpec& spec) {
    if (dim(spec.pair.kprime) > 4 || dim(spec.pair.k) > 4)
        throw mismatch_error("assoc_reduction: requires an associative sub-pair");
    if (method_for(spec.pair, spec.p, spec.q) != Method::nested_flip)
        throw method_dispatch_error("assoc_reduction: plane units commute");
    OrthoMat nested = so_matrix_via(Method::nested_flip, spec);
    GeneratorSpec reversed = spec;
    reversed.theta = metric(spec.pair)[spec.p] < 0 ? -spec.theta : spec.theta;
    OrthoMat exponential = so_matrix_via(Method::exponential, reversed);
    return (nested.m - exponential.m).cwiseAbs().maxCoeff();
}

RankReport lie_algebra_rank(PairId pair) {
    const double h = 1e-6;
    int n = coord_dim(pair);
    std::vector<Eigen::MatrixXd> gens;
    for (int p = 0; p < n; ++p) {
        for (int q = p + 1; q < n; ++q) {
            GeneratorSpec plus{pair, p, q, h};
            GeneratorSpec minus{pair, p, q, -h};
            gens.push_back((so_matrix(plus).m - so_matrix(minus).m) / (2 * h));
        }
    }
    int planes = static_cast<int>(gens.size());
    Eigen::MatrixXd stacked(planes, n * n);
    for (int i = 0; i < planes; ++i)
        stacked.row(i) = Eigen::Map<const Eigen::RowVectorXd>(gens[i].data(), n * n);

    Eigen::JacobiSVD<Eigen::MatrixXd> svd(stacked, Eigen::ComputeThinV);
    const auto& sv = svd.singularValues();
    double cutoff = sv.size() > 0 ? 1e-8 * sv(0) : 0;
    int rank = 0;
    for (int i = 0; i < sv.size(); ++i)
        if (sv(i) > cutoff) ++rank;

    // Commutators of Lie algebra elements must stay in the generator span.
    Eigen::MatrixXd basis = svd.matrixV().leftCols(rank);  // (n*n) x rank
    double worst = 0;
    for (int a = 0; a < planes; ++a) {
        for (int b = a + 1; b < planes; ++b) {
            Eigen::MatrixXd comm = gens[a] * gens[b] - gens[b] * gens[a];
            Eigen::VectorXd c = Eigen::Map<const Eigen::VectorXd>(comm.data(), n * n);
            double norm = c.norm();
            if (norm < 1e-9) continue;
            double residual = (c - basis * (basis.transpose() * c)).norm() / norm;
            if (residual > worst) worst = residual;
        }
    }
    return {n, planes, rank, worst};
}

SquareEntry square_entry(PairId pair) {
    SquareEntry e;
    e.pair = pair;
    e.n = coord_dim(pair);
    e.sig = signature(pair);
    SignatureCounts sc = signature_counts(pair.kprime, pair.k);
    e.expected = {sc.kappa + sc.kappaPlus, sc.kappaMinus};
    RankReport rr = lie_algebra_rank(pair);
    e.rank = rr.rank;
    e.expected_rank = e.n * (e.n - 1) / 2;
    e.closure_residual = rr.closure_residual;
    e.ok = e.sig == e.expected && e.rank == e.expected_rank && e.closure_residual < 1e-6;
    return e;
}

std::string so_label(PairId pair) {
    SignatureCounts sc = signature_counts(pair.kprime, pair.k);
    int plus = sc.kappa + sc.kappaPlus;
    int minus = sc.kappaMinus;
    if (minus == 0) return "so(" + std::to_string(plus) + ")";
    return "so(" + std::to_string(plus) + "," + std::to_string(minus) + ")";
}

}  // namespace magsq
