#include "fuglab/builtin_data.hpp"

#include <sstream>
#include <stdexcept>

#include "fuglab/detail/hash.hpp"

namespace fuglab::builtin {

namespace {

IntMatrix make(int rows, int cols, std::vector<Coord> a) {
    if (a.size() != static_cast<std::size_t>(rows) * cols)
        throw std::logic_error("built-in matrix has wrong entry count");
    return IntMatrix{rows, cols, std::move(a)};
}

PointSet rows_as_points(const GroupPtr& g, const IntMatrix& m, Coord scale) {
    std::vector<std::vector<Coord>> rows;
    rows.reserve(m.rows);
    for (int r = 0; r < m.rows; ++r) {
        std::vector<Coord> row = m.row(r);
        for (Coord& v : row) v *= scale;
        rows.push_back(std::move(row));
    }
    return PointSet::from_coords(g, rows);
}

PointSet cols_as_points(const GroupPtr& g, const IntMatrix& m) {
    std::vector<std::vector<Coord>> rows;
    rows.reserve(m.rows);
    for (int r = 0; r < m.rows; ++r) rows.push_back(m.row(r));
    return PointSet::from_matrix_columns(g, rows);
}

} // namespace

const IntMatrix& hadamard_k8() {
    static const IntMatrix m = make(6, 6, {
        0, 0, 0, 0, 0, 0,
        0, 4, 2, 6, 6, 2,
        0, 2, 4, 1, 5, 6,
        0, 6, 3, 4, 2, 7,
        0, 6, 7, 2, 4, 3,
        0, 2, 6, 5, 1, 4,
    });
    return m;
}

LogHadamardMatrix hadamard_k() { return LogHadamardMatrix{8, hadamard_k8()}; }

const IntMatrix& tile_t1_matrix() {
    static const IntMatrix m = make(3, 6, {
        0, 2, 4, 1, 5, 6,
        0, 6, 3, 4, 2, 7,
        0, 6, 7, 2, 4, 3,
    });
    return m;
}

const IntMatrix& tile_t_matrix() {
    static const IntMatrix m = make(3, 6, {
        0, 10, 20,  1, 21, 14,
        0, 22,  3, 20,  2,  7,
        0, 22, 23, 18,  4, 11,
    });
    return m;
}

const IntMatrix& spectrum_l_raw() {
    static const IntMatrix m = make(6, 3, {
        0, 0, 0,
        0, 1, 1,
        1, 0, 0,
        0, 1, 0,
        0, 0, 1,
        7, 1, 1,
    });
    return m;
}

const IntMatrix& kdiff_listing() {
    static const IntMatrix m = make(18, 6, {
        0, 0, 2, 4, 4, 6,
        0, 0, 4, 2, 6, 4,
        0, 0, 4, 6, 2, 4,
        0, 0, 6, 4, 4, 2,
        0, 2, 1, 6, 4, 5,
        0, 2, 4, 1, 5, 6,
        0, 2, 5, 4, 6, 1,
        0, 2, 6, 5, 1, 4,
        0, 4, 1, 5, 3, 7,
        0, 4, 2, 6, 6, 2,
        0, 4, 3, 1, 7, 5,
        0, 4, 5, 7, 1, 3,
        0, 4, 6, 2, 2, 6,
        0, 4, 7, 3, 5, 1,
        0, 6, 2, 3, 7, 4,
        0, 6, 3, 4, 2, 7,
        0, 6, 4, 7, 3, 2,
        0, 6, 7, 2, 4, 3,
    });
    return m;
}

const IntMatrix& p_matrix() {
    static const IntMatrix m = make(18, 6, {
        0, 16,  2,  4, 12, 14,
        0, 16, 12,  2, 14,  4,
        0, 16, 12, 14,  2,  4,
        0, 16, 14, 12,  4,  2,
        0,  2,  1, 14, 12, 13,
        0,  2, 12,  1, 13, 14,
        0,  2, 13, 12, 14,  1,
        0,  2, 14, 13,  1, 12,
        0, 12,  1, 13, 11, 23,
        0, 12,  2, 22, 14, 10,
        0, 12, 11,  1, 23, 13,
        0, 12, 13, 23,  1, 11,
        0, 12, 22,  2, 10, 14,
        0, 12, 23, 11, 13,  1,
        0, 22, 10, 11, 23, 12,
        0, 22, 11, 12, 10, 23,
        0, 22, 12, 23, 11, 10,
        0, 22, 23, 10, 12, 11,
    });
    return m;
}

const std::vector<Coord>& c1() {
    static const std::vector<Coord> v{0, 3, 6, 9};
    return v;
}

const std::vector<Coord>& c2() {
    static const std::vector<Coord> v{0, 1, 6, 7};
    return v;
}

const IntMatrix& z64_tile_matrix() {
    static const IntMatrix m = make(4, 6, {
        0, 1, 0, 0, 0, 2,
        0, 0, 1, 0, 0, 2,
        0, 0, 0, 1, 0, 2,
        0, 0, 0, 0, 1, 2,
    });
    return m;
}

const IntMatrix& z64_spectrum_raw() {
    static const IntMatrix m = make(6, 4, {
        0, 0, 0, 0,
        0, 1, 1, 2,
        1, 0, 2, 2,
        1, 2, 0, 1,
        2, 2, 1, 0,
        2, 1, 2, 1,
    });
    return m;
}

const IntMatrix& z64_pset_matrix() {
    static const IntMatrix m = make(4, 4, {
        3, 4, 4, 4,
        4, 3, 4, 4,
        4, 4, 3, 4,
        4, 4, 4, 3,
    });
    return m;
}

GroupPtr group_z24_cubed() {
    static const GroupPtr g = Group::make({24, 24, 24});
    return g;
}

GroupPtr group_z24() {
    static const GroupPtr g = Group::make({24});
    return g;
}

GroupPtr group_z6_fourth() {
    static const GroupPtr g = Group::make({6, 6, 6, 6});
    return g;
}

PointSet tile_t1() { return cols_as_points(group_z24_cubed(), tile_t1_matrix()); }
PointSet tile_t() { return cols_as_points(group_z24_cubed(), tile_t_matrix()); }
PointSet spectrum_l() { return rows_as_points(group_z24_cubed(), spectrum_l_raw(), 3); }

PointSet set_c1() {
    return PointSet(group_z24(), std::vector<Idx>(c1().begin(), c1().end()));
}

PointSet set_c2() {
    return PointSet(group_z24(), std::vector<Idx>(c2().begin(), c2().end()));
}

PointSet z64_tile() { return cols_as_points(group_z6_fourth(), z64_tile_matrix()); }
PointSet z64_spectrum() { return rows_as_points(group_z6_fourth(), z64_spectrum_raw(), 2); }
PointSet z64_pset() { return rows_as_points(group_z6_fourth(), z64_pset_matrix(), 1); }

PointSet z64_u() {
    GroupPtr g = group_z6_fourth();
    std::vector<Idx> pts;
    for (Idx i = 0; i < g->order(); ++i) {
        std::vector<Coord> c = g->coords_of(i);
        if ((c[0] + c[1] + c[2] + c[3]) % 6 == 0) pts.push_back(i);
    }
    return PointSet(g, std::move(pts));
}

PointSet z64_u0() {
    static const IntMatrix m = make(6, 4, {
        2, 2, 4, 4,
        2, 4, 2, 4,
        2, 4, 4, 2,
        4, 2, 2, 4,
        4, 2, 4, 2,
        4, 4, 2, 2,
    });
    return rows_as_points(group_z6_fourth(), m, 1);
}

std::uint64_t matrix_checksum(const IntMatrix& m) {
    std::ostringstream os;
    os << m.rows << "x" << m.cols << ":";
    for (Coord v : m.a) os << v << ",";
    return detail::fnv1a64(os.str());
}

void verify_builtin_checksums() {
    struct Entry {
        const char* name;
        const IntMatrix& matrix;
        std::uint64_t expected;
    };
    const Entry entries[] = {
        {"hadamard_k8", hadamard_k8(), 0x88835ce72e04438bULL},
        {"tile_t1", tile_t1_matrix(), 0xd1bb0a0f349b98eaULL},
        {"tile_t", tile_t_matrix(), 0xbd04bb6d7092a8f2ULL},
        {"spectrum_l_raw", spectrum_l_raw(), 0x7d71a18c12744458ULL},
        {"kdiff_listing", kdiff_listing(), 0x82f261d39ec1069cULL},
        {"p_matrix", p_matrix(), 0xac1a4c2d2045f1bcULL},
        {"z64_tile", z64_tile_matrix(), 0xd4766e30b240b8fdULL},
        {"z64_spectrum_raw", z64_spectrum_raw(), 0x61ab9596f7d0e765ULL},
        {"z64_pset", z64_pset_matrix(), 0x196574a27c0a137fULL},
    };
    for (const Entry& e : entries) {
        std::uint64_t got = matrix_checksum(e.matrix);
        if (got != e.expected) {
            std::ostringstream os;
            os << "built-in matrix '" << e.name << "' checksum mismatch: got 0x" << std::hex << got;
            throw std::logic_error(os.str());
        }
    }
}

} // namespace fuglab::builtin
