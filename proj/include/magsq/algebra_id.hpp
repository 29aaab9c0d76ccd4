#pragma once

#include <array>
#include <cstdint>
#include <string>

#include "magsq/errors.hpp"

namespace magsq {

// The two 8-dimensional parents.  Every other composition algebra in scope is
// a subspace of one of them.
enum class Family : std::uint8_t { normed, split };

// The four normed division algebras and their four split cousins.
enum class AlgebraId : std::uint8_t { R, C, H, O, Rp, Cp, Hp, Op };

// Basis order, fixed once for the whole library:
//   normed parent O : 1, i, j, k, kl, jl, il, l      (slots 0..7)
//   split parent O' : 1, I, J, K, KL, JL, IL, L      (slots 0..7)
// Slot 0 is the multiplicative unit in both parents.

constexpr Family family(AlgebraId a) {
    return static_cast<int>(a) < 4 ? Family::normed : Family::split;
}

constexpr int dim(AlgebraId a) {
    constexpr int d[8] = {1, 2, 4, 8, 1, 2, 4, 8};
    return d[static_cast<int>(a)];
}

// Which parent slots the subalgebra occupies.
//   R : {1}           C : {1, i}         H : {1, i, j, k}   O : all
//   R': {1}           C': {1, L}         H': {1, K, KL, L}  O': all
constexpr std::uint8_t slot_mask(AlgebraId a) {
    constexpr std::uint8_t m[8] = {
        0b00000001,  // R
        0b00000011,  // C
        0b00001111,  // H
        0b11111111,  // O
        0b00000001,  // R'
        0b10000001,  // C'
        0b10011001,  // H'
        0b11111111,  // O'
    };
    return m[static_cast<int>(a)];
}

constexpr bool slot_in(AlgebraId a, int slot) {
    return (slot_mask(a) >> slot) & 1;
}

inline const char* algebra_name(AlgebraId a) {
    constexpr const char* n[8] = {"R", "C", "H", "O", "R'", "C'", "H'", "O'"};
    return n[static_cast<int>(a)];
}

inline const char* basis_name(Family f, int slot) {
    static constexpr const char* normed[8] = {"1", "i", "j", "k", "kl", "jl", "il", "l"};
    static constexpr const char* split[8] = {"1", "I", "J", "K", "KL", "JL", "IL", "L"};
    return f == Family::normed ? normed[slot] : split[slot];
}

// Quadratic-form sign of a parent slot: |x|^2 = sum_s slot_sign(f,s) * x_s^2.
// The split norm is + on 1, I, J, K and - on KL, JL, IL, L.
constexpr int slot_sign(Family f, int slot) {
    return (f == Family::split && slot >= 4) ? -1 : +1;
}

// kappa = dim K; kappaPlus/kappaMinus split dim K' by quadratic-form sign.
struct SignatureCounts {
    int kappa;
    int kappaPlus;
    int kappaMinus;
};

inline SignatureCounts signature_counts(AlgebraId kprime, AlgebraId k) {
    if (family(kprime) != Family::split || family(k) != Family::normed)
        throw mismatch_error("signature_counts: expected (split, normed) pair");
    int plus = 0, minus = 0;
    for (int s = 0; s < 8; ++s) {
        if (!slot_in(kprime, s)) continue;
        (slot_sign(Family::split, s) > 0 ? plus : minus)++;
    }
    return {dim(k), plus, minus};
}

constexpr std::array<AlgebraId, 4> normed_ids() {
    return {AlgebraId::R, AlgebraId::C, AlgebraId::H, AlgebraId::O};
}
constexpr std::array<AlgebraId, 4> split_ids() {
    return {AlgebraId::Rp, AlgebraId::Cp, AlgebraId::Hp, AlgebraId::Op};
}

}  // namespace magsq
