#pragma once

#include <array>

#include "magsq/algebra_id.hpp"

namespace magsq {

// Product of two basis units is +- one basis unit: e_p e_q = sign * e_index.
struct TableEntry {
    int sign;   // -1 or +1
    int index;  // 0..7, resulting basis slot
};

// The two 8x8 structure tables, generated by Cayley-Dickson doubling of the
// quaternions:
//   normed: (a + b l)(c + d l) = (ac - conj(d) b) + (d a + b conj(c)) l
//   split : (a + b L)(c + d L) = (ac + conj(d) b) + (d a + b conj(c)) L
// with the second half of the basis stored reversed (slot 7 is l/L, slot 6 is
// il/IL, ...), so quaternion component m of the doubling lands in slot 7 - m.
class StructureTable {
  public:
    StructureTable();

    TableEntry entry(Family f, int p, int q) const {
        return f == Family::normed ? normed_[p][q] : split_[p][q];
    }

  private:
    std::array<std::array<TableEntry, 8>, 8> normed_;
    std::array<std::array<TableEntry, 8>, 8> split_;
};

// Tables are immutable after construction; one shared instance suffices.
const StructureTable& structure_table();

inline TableEntry basis_product(Family f, int p, int q) {
    return structure_table().entry(f, p, q);
}

}  // namespace magsq
