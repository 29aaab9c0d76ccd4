#pragma once

#include <array>
#include <string>

#include "magsq/algebra_id.hpp"

namespace magsq {

// One cell of the 4x4 grid of algebras: a split K' paired with a normed K.
struct PairId {
    AlgebraId kprime = AlgebraId::Op;
    AlgebraId k = AlgebraId::O;

    bool operator==(const PairId& o) const { return kprime == o.kprime && k == o.k; }
};

inline PairId make_pair_id(AlgebraId kprime, AlgebraId k) {
    if (family(kprime) != Family::split) throw mismatch_error("PairId: first entry must be split");
    if (family(k) != Family::normed) throw mismatch_error("PairId: second entry must be normed");
    return {kprime, k};
}

// Dimension of the tensor-product space K' (x) K.
inline int tensor_dim(PairId p) { return dim(p.kprime) * dim(p.k); }

// Number of real coordinates of the vector representation: kappa + kappa'.
inline int coord_dim(PairId p) { return dim(p.k) + dim(p.kprime); }

inline std::string pair_name(PairId p) {
    return std::string("(") + algebra_name(p.kprime) + "," + algebra_name(p.k) + ")";
}

inline std::array<PairId, 16> all_pairs() {
    std::array<PairId, 16> out{};
    int n = 0;
    for (AlgebraId kp : split_ids())
        for (AlgebraId k : normed_ids()) out[n++] = {kp, k};
    return out;
}

}  // namespace magsq
