#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "fuglab/group.hpp"
#include "fuglab/spectral.hpp"

namespace fuglab {

/// Per-n tally of the tile/spectral scan over subset classes of Z_n. A class
/// is represented by its lexicographically least translate containing 0.
struct FugledeScanRow {
    Coord n = 0;
    std::size_t classes = 0;
    std::size_t tiles = 0;
    std::size_t spectral = 0;
    std::vector<PointSet> discrepancies;
};

struct FugledeScanReport {
    std::vector<FugledeScanRow> rows;
    std::size_t total_discrepancies = 0;
};

/// Exhaustive tile vs spectral comparison over all subset classes of Z_n for
/// n <= n_max. Both decisions are exhaustive searches; any disagreement is
/// reported. Parallelized over subsets with slot-deterministic aggregation.
FugledeScanReport fuglede_scan(Coord n_max, Coord bound = 14);

struct UniversalScanEntry {
    PointSet tile;
    std::size_t complement_count = 0;
    bool complements_exhausted = false;
    Verdict universal = Verdict::Inconclusive;  // Accepted: universal spectrum exists
    std::optional<PointSet> universal_spectrum;
    std::size_t common_zero_size = 0;
};

struct UniversalScanReport {
    Coord n = 0;
    Coord size = 0;
    std::size_t tiles_scanned = 0;
    std::vector<UniversalScanEntry> entries;
    std::size_t without_universal = 0;
    std::size_t inconclusive = 0;
};

/// For every size-`size` tile class of Z_n: enumerate all complements, then
/// decide by exhaustive clique search whether a universal spectrum exists.
UniversalScanReport universal_scan(Coord n, Coord size, std::size_t complement_limit = 100000);

} // namespace fuglab
