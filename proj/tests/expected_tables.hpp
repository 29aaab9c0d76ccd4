#pragma once

// Frozen multiplication tables for both eight-dimensional composition algebras,
// written out cell by cell and kept independent of the generating code in
// src/structure_table.cpp.  Row label is the left factor, column label the right.
//
// Two cells are worth calling out because they are easy to get wrong by sign:
// i·(il) = -l and j·(jl) = -l.  Both are forced: the subalgebra generated by an
// imaginary unit u and l is associative (any two elements generate an associative
// subalgebra), so u(ul) = (uu)l = -l.
//
// Basis order matches basis_name(): 1, i, j, k, kl, jl, il, l  (octonions) and
// 1, I, J, K, KL, JL, IL, L (split octonions).

namespace magsq_test_tables {

inline constexpr const char* kOctonion[8][8] = {
    // 1      i      j      k      kl     jl     il     l
    {"1", "i", "j", "k", "kl", "jl", "il", "l"},        // 1
    {"i", "-1", "k", "-j", "jl", "-kl", "-l", "il"},    // i
    {"j", "-k", "-1", "i", "-il", "-l", "kl", "jl"},    // j
    {"k", "j", "-i", "-1", "-l", "il", "-jl", "kl"},    // k
    {"kl", "-jl", "il", "l", "-1", "i", "-j", "-k"},    // kl
    {"jl", "kl", "l", "-il", "-i", "-1", "k", "-j"},    // jl
    {"il", "l", "-kl", "jl", "j", "-k", "-1", "-i"},    // il
    {"l", "-il", "-jl", "-kl", "k", "j", "i", "-1"},    // l
};

inline constexpr const char* kSplit[8][8] = {
    // 1      I      J      K      KL     JL     IL     L
    {"1", "I", "J", "K", "KL", "JL", "IL", "L"},        // 1
    {"I", "-1", "K", "-J", "JL", "-KL", "-L", "IL"},    // I
    {"J", "-K", "-1", "I", "-IL", "-L", "KL", "JL"},    // J
    {"K", "J", "-I", "-1", "-L", "IL", "-JL", "KL"},    // K
    {"KL", "-JL", "IL", "L", "1", "-I", "J", "K"},      // KL
    {"JL", "KL", "L", "-IL", "I", "1", "-K", "J"},      // JL
    {"IL", "L", "-KL", "JL", "-J", "K", "1", "I"},      // IL
    {"L", "-IL", "-JL", "-KL", "-K", "-J", "-I", "1"},  // L
};

}  // namespace magsq_test_tables
