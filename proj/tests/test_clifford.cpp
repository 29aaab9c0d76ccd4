#include "doctest.h"

#include "magsq/clifford.hpp"
#include "magsq/verify.hpp"

using namespace magsq;

namespace {
const PairId kOO = make_pair_id(AlgebraId::Op, AlgebraId::O);
}

TEST_CASE("metric layout per pair") {
    auto g = metric(kOO);
    REQUIRE(g.size() == 16);
    for (int p = 0; p < 12; ++p) CHECK(g[p] == 1);
    for (int p = 12; p < 16; ++p) CHECK(g[p] == -1);
    CHECK(signature(kOO) == std::pair<int, int>(12, 4));

    CHECK(signature(make_pair_id(AlgebraId::Rp, AlgebraId::R)) ==
          std::pair<int, int>(2, 0));
    CHECK(signature(make_pair_id(AlgebraId::Op, AlgebraId::R)) ==
          std::pair<int, int>(5, 4));
    CHECK(signature(make_pair_id(AlgebraId::Hp, AlgebraId::O)) ==
          std::pair<int, int>(10, 2));
    CHECK(signature(make_pair_id(AlgebraId::Cp, AlgebraId::H)) ==
          std::pair<int, int>(5, 1));
}

TEST_CASE("signatures match the per-factor counts for all sixteen pairs") {
    for (PairId pair : all_pairs()) {
        auto counts = signature_counts(pair.kprime, pair.k);
        auto [plus, minus] = signature(pair);
        CHECK(plus == counts.kappa + counts.kappaPlus);
        CHECK(minus == counts.kappaMinus);
        CHECK(plus + minus == coord_dim(pair));
    }
}

TEST_CASE("gamma basis satisfies the Clifford relations exactly") {
    for (PairId pair : all_pairs()) {
        auto report = check_clifford<Rational>(pair);
        CAPTURE(pair_name(pair));
        CHECK(report.ok());
        int n = coord_dim(pair);
        CHECK(report.pairs_checked == n * (n + 1) / 2);
    }
}

TEST_CASE("gamma basis sizes") {
    CHECK(gamma_basis<Rational>(kOO).size() == 16);
    CHECK(gamma_basis<Rational>(make_pair_id(AlgebraId::Op, AlgebraId::C)).size() == 10);
}

TEST_CASE("left alternativity on the representation space") {
    // P(PQ) = (PP)Q even for Q outside the vector space
    Rng rng(37);
    for (PairId pair : {kOO, make_pair_id(AlgebraId::Op, AlgebraId::H),
                        make_pair_id(AlgebraId::Hp, AlgebraId::O)}) {
        auto r = check_left_alternative_lemma(pair, 6, rng);
        CAPTURE(pair_name(pair));
        CHECK(r.passed);
    }
}

TEST_CASE("sandwich products associate for invertible axes") {
    Rng rng(41);
    for (PairId pair : all_pairs()) {
        auto r = check_sandwich_assoc_lemma(pair, 4, rng);
        CAPTURE(pair_name(pair));
        CHECK(r.passed);
    }
}

TEST_CASE("reflection negates its axis and fixes the orthogonal complement") {
    Rng rng(43);
    for (PairId pair : {make_pair_id(AlgebraId::Rp, AlgebraId::C), kOO}) {
        auto r = check_reflection_axes(pair, 3, rng);
        CAPTURE(pair_name(pair));
        CHECK(r.passed);
    }
}

TEST_CASE("reflecting an axis in itself flips its sign") {
    auto basis = gamma_basis<Rational>(kOO);
    for (const auto& axis : basis)
        CHECK(mat4_eq(reflect(axis, axis), mat4_scale(Rational(-1), axis)));
}

TEST_CASE("null axes cannot be reflection axes") {
    // X with A = 1 + L has |A|^2 = 0; with a = 0 the whole vector is null
    PairId cc = make_pair_id(AlgebraId::Cp, AlgebraId::C);
    auto A = add(ca_one<Rational>(Family::split), ca_unit<Rational>(Family::split, 7));
    auto x = herm(cc, A, ca_zero<Rational>(Family::normed));
    CHECK(norm_x(x) == Rational(0));
    CHECK_THROWS_AS((void)reflect(gamma(x), gamma(x)), not_invertible_error);
}

TEST_CASE("double reflections preserve the representation space and the norm") {
    Rng rng(47);
    for (PairId pair : all_pairs()) {
        auto r = check_double_reflection_membership(pair, 6, rng);
        CAPTURE(pair_name(pair));
        CHECK(r.passed);
    }
}

TEST_CASE("determinant identity gamma(X)^2 = |X|^2 I") {
    Rng rng(53);
    for (PairId pair : all_pairs()) {
        auto r = check_determinant_identity(pair, 5, rng);
        CAPTURE(pair_name(pair));
        CHECK(r.passed);
    }
}
