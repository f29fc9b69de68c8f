#pragma once

#include <array>
#include <optional>
#include <span>
#include <vector>

#include "fuglab/builtin_data.hpp"
#include "fuglab/cover_logic.hpp"
#include "fuglab/spectral.hpp"
#include "fuglab/tiling.hpp"
#include "fuglab/transcript.hpp"

namespace fuglab {

struct HadamardReport {
    bool orthogonal = false;
    int pairs_checked = 0;
    std::optional<std::pair<int, int>> failing_pair;
};

/// Exact pairwise row orthogonality of the exponentiated matrix over
/// denominator-th roots of unity.
HadamardReport verify_log_hadamard(const LogHadamardMatrix& m);

/// Entrywise congruence l * t = modulus * k (mod modulus).
bool verify_decomposition(const IntMatrix& l, const IntMatrix& t, const LogHadamardMatrix& k,
                          Coord modulus);

/// The distinct nonzero mod-8 row differences of the built-in 8K, in
/// lexicographic order (18 rows).
IntMatrix build_k_difference_rows();

struct PMatrixReport {
    bool matches_kdiff_mod8 = false;
    std::vector<int> complement_choice;  // per row: 1 or 2; 0 when neither tiles
    bool all_rows_tile = false;
    int mod3_rank = 0;
    bool rows_1_2_4_generate = false;
    bool ok = false;
};

/// The built-in P: congruent to the K-difference listing mod 8, every row a
/// tile of Z24 with C1 or C2, mod-3 rank 3 with rows 1, 2, 4 generating.
PMatrixReport verify_p_matrix();
PMatrixReport verify_p_matrix(const IntMatrix& p);

struct SolveYResult {
    std::vector<Coord> y;       // mod 24
    std::vector<Coord> y_mod3;
    std::vector<Coord> y_mod8;
    bool verified = false;      // y T = p (mod 24) and 3 y = v (mod 24)
};

/// Solves y T = p_row (mod 24) for the given 3x6 tile matrix: the mod-3 part
/// by linear algebra over F3 against T's rows, the mod-8 part as v/3, glued
/// by the Chinese remainder theorem.
SolveYResult solve_y(const IntMatrix& tmat, std::span<const Coord> v, std::span<const Coord> p_row);
SolveYResult solve_y(std::span<const Coord> v, std::span<const Coord> p_row);  // built-in T

/// `reproduce hadamard`: the built-in K is mod-8 log-Hadamard.
Certificate reproduce_hadamard();

/// `reproduce prop-usc`: full certificate that the built-in T is a tile of
/// Z24^3 without a universal spectrum (decompositions, spectra, P-matrix,
/// the fifteen pullback complements with exact Fourier witnesses, and the
/// divisibility obstruction).
Certificate reproduce_prop_usc();

/// `reproduce appendix`: the built-in Z6^4 tile has universal spectrum U
/// while no difference-set-avoiding set of size 6^3 exists.
Certificate reproduce_appendix();

struct LayeredTileSpec {
    GroupPtr base;
    PointSet tile;
    std::vector<PointSet> complements;
    std::vector<Coord> multiplicities;  // one per complement, nonnegative

    Coord layer_count() const;                       // p = sum of multiplicities
    std::vector<std::size_t> layer_assignment() const;  // nondecreasing complement ids, one per layer
};

struct LayeredTile {
    GroupPtr extended_group;  // base x Z_p
    PointSet layered_set;     // R
    PointSet lifted_tile;     // tile extended by zero
    TilingReport tiling;
};

/// Glues multiplicity-many copies of each complement across the Z_p layers
/// and re-verifies that the result tiles base x Z_p against the zero-extended
/// tile.
LayeredTile build_layered_tile(const LayeredTileSpec& spec, bool fourier_audit = true);

/// Smallest multiplicity vector (by total, then lexicographic) whose witness
/// row sums are all exactly nonzero and whose total is coprime to every
/// modulus.
std::vector<Coord> choose_k_vector(const WitnessTable& table, std::span<const Coord> moduli,
                                   Coord max_total = 64);

/// Witness checks for the layered set: sum_i k_i chi_hat_{T'_i}(v) nonzero
/// and equal to chi_hat_R(v~) for every witness v. Issues a non-spectrality
/// certificate only when the no-universal-spectrum premise is itself an
/// accepted certificate; a refuted premise refuses the certificate.
Certificate verify_layered_nonspectral(const LayeredTileSpec& spec, const WitnessTable& table,
                                       const UniversalSpectrumResult& premise);

/// `reproduce layered`: end-to-end toy pipeline over the complements of a
/// tile (enumerate, witness table, multiplicity choice, build, exact Fourier
/// identity over every dual with last coordinate zero).
Certificate reproduce_layered(const GroupPtr& base, const PointSet& tile,
                              std::size_t complement_limit = 64);

/// B(k) = A + {0,n_1,...,(k-1)n_1} x ... x {0,n_d,...,(k-1)n_d}, represented
/// in Z_{k n_1} x ... x Z_{k n_d}.
PointSet grid_lift(const PointSet& a, Coord k);

/// Same coordinates, k-fold moduli: the complement embedding that makes
/// grid_lift preserve tilings.
PointSet embed_in_box(const PointSet& s, Coord k);

} // namespace fuglab
