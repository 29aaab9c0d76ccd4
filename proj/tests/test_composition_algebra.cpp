#include "doctest.h"

#include <cstring>
#include <random>
#include <string>

#include "expected_tables.hpp"
#include "magsq/ca_elem.hpp"
#include "magsq/structure_table.hpp"
#include "magsq/verify.hpp"

using namespace magsq;

namespace {

// Parse "-kl" / "1" / "IL" into (sign, slot index) for the given family.
TableEntry parse_cell(Family f, const char* cell) {
    int sign = 1;
    if (cell[0] == '-') {
        sign = -1;
        ++cell;
    }
    for (int s = 0; s < 8; ++s)
        if (std::strcmp(basis_name(f, s), cell) == 0) return {sign, s};
    FAIL("unknown basis name: " << cell);
    return {0, 0};
}

CAElem<Rational> unit_n(int s) { return ca_unit<Rational>(Family::normed, s); }
CAElem<Rational> unit_s(int s) { return ca_unit<Rational>(Family::split, s); }

}  // namespace

TEST_CASE("octonion products match the frozen table") {
    for (int p = 0; p < 8; ++p)
        for (int q = 0; q < 8; ++q) {
            TableEntry want = parse_cell(Family::normed, magsq_test_tables::kOctonion[p][q]);
            TableEntry got = basis_product(Family::normed, p, q);
            CAPTURE(p);
            CAPTURE(q);
            CHECK(got.sign == want.sign);
            CHECK(got.index == want.index);
        }
}

TEST_CASE("split octonion products match the frozen table") {
    for (int p = 0; p < 8; ++p)
        for (int q = 0; q < 8; ++q) {
            TableEntry want = parse_cell(Family::split, magsq_test_tables::kSplit[p][q]);
            TableEntry got = basis_product(Family::split, p, q);
            CAPTURE(p);
            CAPTURE(q);
            CHECK(got.sign == want.sign);
            CHECK(got.index == want.index);
        }
}

TEST_CASE("anchor products") {
    // j * (il) = kl
    CHECK(mul(unit_n(2), unit_n(6)) == unit_n(4));
    // L * L = 1
    CHECK(mul(unit_s(7), unit_s(7)) == ca_one<Rational>(Family::split));
    // KL * JL = -I
    CHECK(mul(unit_s(4), unit_s(5)) == neg(unit_s(1)));
}

TEST_CASE("composition property holds exactly on random rational elements") {
    Rng rng(7);
    for (AlgebraId a : {AlgebraId::R, AlgebraId::C, AlgebraId::H, AlgebraId::O,
                        AlgebraId::Rp, AlgebraId::Cp, AlgebraId::Hp, AlgebraId::Op}) {
        auto r = check_composition_property(a, 100, rng);
        CAPTURE(algebra_name(a));
        CHECK(r.passed);
        CHECK(r.checks == 100);
    }
}

TEST_CASE("conjugation is an anti-automorphism on basis units") {
    CHECK(check_conj_antiautomorphism(Family::normed).passed);
    CHECK(check_conj_antiautomorphism(Family::split).passed);
}

TEST_CASE("each subalgebra is closed under multiplication") {
    for (AlgebraId a : {AlgebraId::R, AlgebraId::C, AlgebraId::H, AlgebraId::O,
                        AlgebraId::Rp, AlgebraId::Cp, AlgebraId::Hp, AlgebraId::Op})
        CHECK(check_subalgebra_closure(a).passed);
}

TEST_CASE("norms carry the split signs") {
    // |L|^2 = -1, |1 + L|^2 = 0, |1 + l|^2 = 2
    auto L = unit_s(7);
    CHECK(norm_sq(L) == Rational(-1));
    auto one_plus_L = add(ca_one<Rational>(Family::split), L);
    CHECK(norm_sq(one_plus_L) == Rational(0));
    auto one_plus_l = add(ca_one<Rational>(Family::normed), unit_n(7));
    CHECK(norm_sq(one_plus_l) == Rational(2));
}

TEST_CASE("inverses") {
    auto L = unit_s(7);
    CHECK(inverse(L) == L);  // conj(L)/|L|^2 = (-L)/(-1)

    auto i = unit_n(1);
    CHECK(inverse(i) == neg(i));

    auto x = add(ca_one<Rational>(Family::normed), unit_n(3));
    CHECK(mul(x, inverse(x)) == ca_one<Rational>(Family::normed));
    CHECK(mul(inverse(x), x) == ca_one<Rational>(Family::normed));

    auto null_elem = add(ca_one<Rational>(Family::split), L);
    CHECK_THROWS_AS((void)inverse(null_elem), not_invertible_error);
}

TEST_CASE("alternativity and Moufang") {
    Rng rng(11);
    CHECK(check_alternativity(Family::normed, 60, rng).passed);
    CHECK(check_alternativity(Family::split, 60, rng).passed);
    CHECK(check_moufang_basis(Family::normed).passed);
    CHECK(check_moufang_basis(Family::split).passed);
    CHECK(check_artin_basis(Family::normed).passed);
    CHECK(check_artin_basis(Family::split).passed);
}

TEST_CASE("octonions are not associative but any two units associate") {
    // (i j)(l) vs i (j l): the triple {i, j, l} generates all of O
    auto lhs = mul(mul(unit_n(1), unit_n(2)), unit_n(7));
    auto rhs = mul(unit_n(1), mul(unit_n(2), unit_n(7)));
    CHECK(lhs == neg(rhs));
    CHECK(check_artin_basis(Family::normed).passed);
}

TEST_CASE("mixed-parent arithmetic is rejected") {
    auto a = ca_one<Rational>(Family::normed);
    auto b = ca_one<Rational>(Family::split);
    CHECK_THROWS_AS((void)add(a, b), mismatch_error);
    CHECK_THROWS_AS((void)mul(a, b), mismatch_error);
}

TEST_CASE("signature counts per algebra pairing") {
    auto s = signature_counts(AlgebraId::Op, AlgebraId::O);
    CHECK(s.kappa == 8);
    CHECK(s.kappaPlus == 4);
    CHECK(s.kappaMinus == 4);

    s = signature_counts(AlgebraId::Rp, AlgebraId::R);
    CHECK(s.kappa == 1);
    CHECK(s.kappaPlus == 1);
    CHECK(s.kappaMinus == 0);

    s = signature_counts(AlgebraId::Hp, AlgebraId::H);
    CHECK(s.kappa == 4);
    CHECK(s.kappaPlus == 2);
    CHECK(s.kappaMinus == 2);

    s = signature_counts(AlgebraId::Cp, AlgebraId::O);
    CHECK(s.kappa == 8);
    CHECK(s.kappaPlus == 1);
    CHECK(s.kappaMinus == 1);

    // first argument must be split, second normed
    CHECK_THROWS_AS((void)signature_counts(AlgebraId::O, AlgebraId::O), mismatch_error);
    CHECK_THROWS_AS((void)signature_counts(AlgebraId::Op, AlgebraId::Cp), mismatch_error);
}

TEST_CASE("subalgebra membership masks") {
    auto x = unit_n(1);  // i
    CHECK(in_subalgebra(x, AlgebraId::C));
    CHECK(in_subalgebra(x, AlgebraId::H));
    CHECK(in_subalgebra(x, AlgebraId::O));
    CHECK(!in_subalgebra(x, AlgebraId::R));

    auto y = unit_s(4);  // KL
    CHECK(in_subalgebra(y, AlgebraId::Hp));
    CHECK(in_subalgebra(y, AlgebraId::Op));
    CHECK(!in_subalgebra(y, AlgebraId::Cp));
    CHECK(!in_subalgebra(y, AlgebraId::Rp));

    // split complex line is spanned by 1 and L
    CHECK(in_subalgebra(unit_s(7), AlgebraId::Cp));
    CHECK(!in_subalgebra(unit_s(1), AlgebraId::Cp));
}
