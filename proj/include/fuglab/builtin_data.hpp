#pragma once

#include <cstdint>
#include <vector>

#include "fuglab/group.hpp"

namespace fuglab {

struct IntMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<Coord> a;  // row-major

    Coord at(int r, int c) const { return a[static_cast<std::size_t>(r) * cols + c]; }
    Coord& at(int r, int c) { return a[static_cast<std::size_t>(r) * cols + c]; }
    std::vector<Coord> row(int r) const {
        return std::vector<Coord>(a.begin() + static_cast<std::ptrdiff_t>(r) * cols,
                                  a.begin() + static_cast<std::ptrdiff_t>(r + 1) * cols);
    }
    bool operator==(const IntMatrix&) const = default;
};

/// Integer matrix whose entrywise exponential by the given root order is
/// claimed to be a complex Hadamard matrix.
struct LogHadamardMatrix {
    Coord denominator = 1;
    IntMatrix entries;
};

// Built-in data for the two reproduction pipelines: the Z24^3 tile without a
// universal spectrum and the Z6^4 tile whose universal spectrum exists even
// though the difference-set sufficient condition fails. All matrices live in
// this one reviewed translation unit, guarded by checksums.
namespace builtin {

const IntMatrix& hadamard_k8();          // 6x6, eighth-root exponents (8K)
LogHadamardMatrix hadamard_k();          // denominator 8
const IntMatrix& tile_t1_matrix();       // 3x6, columns are elements of Z24^3
const IntMatrix& tile_t_matrix();        // 3x6, the +8/+16 modification
const IntMatrix& spectrum_l_raw();       // 6x3, rows scaled by 3 give dual elements
const IntMatrix& kdiff_listing();        // 18x6, the mod-8 row differences of 8K
const IntMatrix& p_matrix();             // 18x6, modified to tile Z24
const std::vector<Coord>& c1();          // {0,3,6,9}
const std::vector<Coord>& c2();          // {0,1,6,7}
const IntMatrix& z64_tile_matrix();      // 4x6, columns are elements of Z6^4
const IntMatrix& z64_spectrum_raw();     // 6x4, rows scaled by 2 give dual elements
const IntMatrix& z64_pset_matrix();      // 4x4, rows are the progression steps

GroupPtr group_z24_cubed();
GroupPtr group_z24();
GroupPtr group_z6_fourth();

PointSet tile_t1();              // 6 points of Z24^3
PointSet tile_t();               // 6 points of Z24^3
PointSet spectrum_l();           // 6 points of the dual of Z24^3
PointSet set_c1();               // subset of Z24
PointSet set_c2();
PointSet z64_tile();             // 6 points of Z6^4
PointSet z64_spectrum();         // 6 points of the dual of Z6^4
PointSet z64_pset();             // the 4 progression steps
PointSet z64_u();                // {u : u1+u2+u3+u4 = 0 mod 6}, built procedurally
PointSet z64_u0();               // the 6 coordinate permutations of (2,2,4,4)

std::uint64_t matrix_checksum(const IntMatrix& m);
/// Throws std::logic_error if any built-in matrix drifted from its frozen
/// checksum.
void verify_builtin_checksums();

} // namespace builtin
} // namespace fuglab
