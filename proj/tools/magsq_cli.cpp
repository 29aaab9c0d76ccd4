// Command-line front end: multiplication tables, verification suites,
// generator matrices, and the full 4x4 table of orthogonal groups.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error.

#include <cctype>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "magsq/spin_action.hpp"
#include "magsq/verify.hpp"

using namespace magsq;

namespace {

struct usage_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Case-insensitive algebra token; split algebras are marked by a trailing
// apostrophe or an `s` prefix (O', sO, so' all name the split octonions).
AlgebraId parse_algebra(std::string tok) {
    bool prime = false;
    if (!tok.empty() && tok.back() == '\'') {
        prime = true;
        tok.pop_back();
    }
    for (auto& ch : tok) ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
    if (tok.size() == 2 && tok[0] == 's') {
        prime = true;
        tok.erase(0, 1);
    }
    if (tok.size() != 1) throw usage_error("unknown algebra token");
    int base;
    switch (tok[0]) {
        case 'r': base = 0; break;
        case 'c': base = 1; break;
        case 'h': base = 2; break;
        case 'o': base = 3; break;
        default: throw usage_error(std::string("unknown algebra token: ") + tok);
    }
    return static_cast<AlgebraId>(base + (prime ? 4 : 0));
}

PairId parse_pair(const std::string& kprime_tok, const std::string& k_tok) {
    AlgebraId kp = parse_algebra(kprime_tok);
    AlgebraId k = parse_algebra(k_tok);
    if (family(kp) != Family::split)
        throw usage_error("first algebra must be split (R', C', H', O'): " + kprime_tok);
    if (family(k) != Family::normed)
        throw usage_error("second algebra must be normed (R, C, H, O): " + k_tok);
    return make_pair_id(kp, k);
}

// 17 significant digits round-trips doubles; -0 is folded into 0 so equal
// matrices print identically.
std::string fmt_double(double v) {
    if (v == 0.0) v = 0.0;
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void print_structured(const std::string& pair_label, const OrthoMat& om,
                      const std::string& method_label) {
    std::string out = "{\"pair\":\"" + pair_label + "\"";
    out += ",\"n\":" + std::to_string(om.m.rows());
    out += ",\"metric\":[";
    for (std::size_t i = 0; i < om.g.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(om.g[i]);
    }
    out += "],\"method\":\"" + method_label + "\"";
    out += ",\"matrix\":[";
    for (int i = 0; i < om.m.rows(); ++i) {
        if (i) out += ",";
        out += "[";
        for (int j = 0; j < om.m.cols(); ++j) {
            if (j) out += ",";
            out += fmt_double(om.m(i, j));
        }
        out += "]";
    }
    out += "],\"residual\":" + fmt_double(isometry_residual(om)) + "}";
    std::printf("%s\n", out.c_str());
}

void print_text_matrix(const OrthoMat& om) {
    for (int i = 0; i < om.m.rows(); ++i) {
        std::string row;
        for (int j = 0; j < om.m.cols(); ++j) {
            if (j) row += "  ";
            row += fmt_double(om.m(i, j));
        }
        std::printf("  %s\n", row.c_str());
    }
}

int cmd_tables(const std::string& parent_tok) {
    AlgebraId a = parse_algebra(parent_tok);
    if (dim(a) != 8) throw usage_error("tables expects a parent algebra: O or O'");
    Family f = family(a);
    std::printf("%-5s", "");
    for (int q = 0; q < 8; ++q) std::printf("%-5s", basis_name(f, q));
    std::printf("\n");
    for (int p = 0; p < 8; ++p) {
        std::printf("%-5s", basis_name(f, p));
        for (int q = 0; q < 8; ++q) {
            TableEntry e = basis_product(f, p, q);
            std::string cell = (e.sign < 0 ? "-" : "") + std::string(basis_name(f, e.index));
            std::printf("%-5s", cell.c_str());
        }
        std::printf("\n");
    }
    return 0;
}

int cmd_verify(const std::string& kp_tok, const std::string& k_tok,
               const std::string& suite, const VerifyOptions& opt) {
    PairId pair = parse_pair(kp_tok, k_tok);
    std::vector<CheckResult> results;
    if (suite == "algebra")
        results = run_algebra_suite(pair, opt);
    else if (suite == "clifford")
        results = run_clifford_suite(pair, opt);
    else if (suite == "spin")
        results = run_spin_suite(pair, opt);
    else if (suite == "all")
        results = run_all_suites(pair, opt);
    else
        throw usage_error("unknown suite: " + suite +
                          " (expected algebra, clifford, spin, or all)");
    int passed = 0;
    for (const auto& r : results) {
        std::printf("[%s] %s (%lld checks, max residual %s)\n", r.passed ? "PASS" : "FAIL",
                    r.name.c_str(), r.checks, fmt_double(r.max_residual).c_str());
        if (r.passed) ++passed;
    }
    std::printf("%s %s: %d/%zu checks passed\n", pair_name(pair).c_str(), suite.c_str(),
                passed, results.size());
    return passed == static_cast<int>(results.size()) ? 0 : 1;
}

// 1-based plane indices; boosts are capped at rapidity 50 here (cosh would
// reach the top of double range near 710, and matrices past 50 are useless
// numerically anyway).  The library itself computes any finite theta.
GeneratorSpec checked_spec(PairId pair, int p1, int q1, double theta) {
    int n = coord_dim(pair);
    if (p1 < 1 || p1 > n || q1 < 1 || q1 > n || p1 == q1)
        throw usage_error("plane indices must be distinct and within 1.." +
                          std::to_string(n));
    GeneratorSpec spec{pair, p1 - 1, q1 - 1, theta};
    if (kind_for(pair, spec.p, spec.q) == Kind::boost && std::abs(theta) > 50.0)
        throw usage_error("boost rapidity capped at |theta| <= 50");
    return spec;
}

int cmd_rotate(const std::string& kp_tok, const std::string& k_tok, int p1, int q1,
               double theta, const std::string& format) {
    PairId pair = parse_pair(kp_tok, k_tok);
    GeneratorSpec spec = checked_spec(pair, p1, q1, theta);
    OrthoMat om = so_matrix(spec);
    std::string method_label = method_name(method_for(pair, spec.p, spec.q));
    if (format == "structured") {
        print_structured(pair_name(pair), om, method_label);
        return 0;
    }
    auto [plus, minus] = signature(pair);
    std::printf("pair: %s\n", pair_name(pair).c_str());
    std::printf("n: %d\n", coord_dim(pair));
    std::printf("signature: (%d,%d)\n", plus, minus);
    std::printf("method: %s\n", method_label.c_str());
    std::printf("kind: %s\n", kind_name(kind_for(pair, spec.p, spec.q)));
    std::printf("isometry residual: %s\n", fmt_double(isometry_residual(om)).c_str());
    std::printf("matrix:\n");
    print_text_matrix(om);
    return 0;
}

int cmd_compose(const std::string& kp_tok, const std::string& k_tok,
                const std::string& path, const std::string& format) {
    PairId pair = parse_pair(kp_tok, k_tok);
    std::ifstream in(path);
    if (!in) throw usage_error("cannot open " + path);
    std::vector<GeneratorSpec> specs;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream ss(line);
        int p1, q1;
        double theta;
        if (!(ss >> p1)) continue;  // blank line
        if (!(ss >> q1 >> theta))
            throw usage_error("line " + std::to_string(line_no) +
                              ": expected `p q theta`");
        specs.push_back(checked_spec(pair, p1, q1, theta));
    }
    OrthoMat om = compose(pair, specs);
    if (format == "structured") {
        print_structured(pair_name(pair), om, "composite");
        return 0;
    }
    std::printf("pair: %s\n", pair_name(pair).c_str());
    std::printf("generators: %zu\n", specs.size());
    std::printf("isometry residual: %s\n", fmt_double(isometry_residual(om)).c_str());
    std::printf("matrix:\n");
    print_text_matrix(om);
    return 0;
}

int cmd_square() {
    std::printf("%-8s %-3s %-10s %-5s %-18s %-10s %s\n", "pair", "n", "signature", "rank",
                "expected", "closure", "status");
    bool all_ok = true;
    for (PairId pair : all_pairs()) {
        SquareEntry e = square_entry(pair);
        char sig[32], exp_label[48], closure[32];
        std::snprintf(sig, sizeof sig, "(%d,%d)", e.sig.first, e.sig.second);
        std::snprintf(exp_label, sizeof exp_label, "%s dim %d", so_label(pair).c_str(),
                      e.expected_rank);
        std::snprintf(closure, sizeof closure, "%.3g", e.closure_residual);
        std::printf("%-8s %-3d %-10s %-5d %-18s %-10s %s\n", pair_name(pair).c_str(), e.n,
                    sig, e.rank, exp_label, closure, e.ok ? "ok" : "MISMATCH");
        all_ok = all_ok && e.ok;
    }
    return all_ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Orthogonal groups from pairs of composition algebras"};
    app.require_subcommand(1);

    std::string parent_tok;
    auto* tables = app.add_subcommand("tables", "print a parent multiplication table");
    tables->add_option("parent", parent_tok, "O or O'")->required();

    std::string v_kp, v_k, v_suite = "all";
    VerifyOptions opt;
    auto* verify = app.add_subcommand("verify", "run property suites for one pair");
    verify->add_option("kprime", v_kp, "split algebra R', C', H', O'")->required();
    verify->add_option("k", v_k, "normed algebra R, C, H, O")->required();
    verify->add_option("suite", v_suite, "algebra | clifford | spin | all");
    verify->add_option("--seed", opt.seed, "seed for randomized checks");
    verify->add_option("--tolerance", opt.tolerance, "numeric tolerance");

    std::string r_kp, r_k, r_format = "text";
    int r_p = 0, r_q = 0;
    double r_theta = 0;
    auto* rotate = app.add_subcommand("rotate", "one generator as an explicit matrix");
    rotate->add_option("kprime", r_kp)->required();
    rotate->add_option("k", r_k)->required();
    rotate->add_option("p", r_p, "first coordinate, 1-based")->required();
    rotate->add_option("q", r_q, "second coordinate, 1-based")->required();
    rotate->add_option("theta", r_theta, "angle or rapidity")->required();
    rotate->add_option("--format", r_format)->check(CLI::IsMember({"text", "structured"}));

    std::string c_kp, c_k, c_path, c_format = "text";
    auto* comp = app.add_subcommand("compose", "product of generators listed in a file");
    comp->add_option("kprime", c_kp)->required();
    comp->add_option("k", c_k)->required();
    comp->add_option("file", c_path, "lines of `p q theta`")->required();
    comp->add_option("--format", c_format)->check(CLI::IsMember({"text", "structured"}));

    auto* square = app.add_subcommand("square", "signature and rank report for all 16 pairs");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (tables->parsed()) return cmd_tables(parent_tok);
        if (verify->parsed()) return cmd_verify(v_kp, v_k, v_suite, opt);
        if (rotate->parsed()) return cmd_rotate(r_kp, r_k, r_p, r_q, r_theta, r_format);
        if (comp->parsed()) return cmd_compose(c_kp, c_k, c_path, c_format);
        if (square->parsed()) return cmd_square();
    } catch (const usage_error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const mismatch_error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const invalid_plane_error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 2;
}
