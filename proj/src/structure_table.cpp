#include "magsq/structure_table.hpp"

#include <array>

namespace magsq {

namespace {

using Vec8 = std::array<int, 8>;

// Quaternion structure constants over 1, i, j, k (ij = k).
constexpr TableEntry kQuat[4][4] = {
    {{+1, 0}, {+1, 1}, {+1, 2}, {+1, 3}},
    {{+1, 1}, {-1, 0}, {+1, 3}, {-1, 2}},
    {{+1, 2}, {-1, 3}, {-1, 0}, {+1, 1}},
    {{+1, 3}, {+1, 2}, {-1, 1}, {-1, 0}},
};

std::array<int, 4> quat_mul(const std::array<int, 4>& x, const std::array<int, 4>& y) {
    std::array<int, 4> out{};
    for (int p = 0; p < 4; ++p) {
        if (x[p] == 0) continue;
        for (int q = 0; q < 4; ++q) {
            if (y[q] == 0) continue;
            out[kQuat[p][q].index] += kQuat[p][q].sign * x[p] * y[q];
        }
    }
    return out;
}

std::array<int, 4> quat_conj(const std::array<int, 4>& x) {
    return {x[0], -x[1], -x[2], -x[3]};
}

// Slots 0..3 hold the first quaternion copy; slots 4..7 hold the second copy
// reversed, so copy component m lives in slot 7 - m.
void split_halves(const Vec8& v, std::array<int, 4>& a, std::array<int, 4>& b) {
    a = {v[0], v[1], v[2], v[3]};
    b = {v[7], v[6], v[5], v[4]};
}

Vec8 join_halves(const std::array<int, 4>& a, const std::array<int, 4>& b) {
    return {a[0], a[1], a[2], a[3], b[3], b[2], b[1], b[0]};
}

// eps = -1 doubles into the octonions, eps = +1 into the split octonions.
Vec8 doubled_mul(const Vec8& x, const Vec8& y, int eps) {
    std::array<int, 4> a, b, c, d;
    split_halves(x, a, b);
    split_halves(y, c, d);
    auto first = quat_mul(a, c);
    auto cross = quat_mul(quat_conj(d), b);
    for (int m = 0; m < 4; ++m) first[m] += eps * cross[m];
    auto second = quat_mul(d, a);
    auto tail = quat_mul(b, quat_conj(c));
    for (int m = 0; m < 4; ++m) second[m] += tail[m];
    return join_halves(first, second);
}

std::array<std::array<TableEntry, 8>, 8> build(int eps) {
    std::array<std::array<TableEntry, 8>, 8> table{};
    for (int p = 0; p < 8; ++p) {
        for (int q = 0; q < 8; ++q) {
            Vec8 x{}, y{};
            x[p] = 1;
            y[q] = 1;
            Vec8 r = doubled_mul(x, y, eps);
            for (int s = 0; s < 8; ++s) {
                if (r[s] != 0) table[p][q] = {r[s], s};
            }
        }
    }
    return table;
}

}  // namespace

StructureTable::StructureTable() : normed_(build(-1)), split_(build(+1)) {}

const StructureTable& structure_table() {
    static const StructureTable table;
    return table;
}

}  // namespace magsq
