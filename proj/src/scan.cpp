#include "fuglab/scan.hpp"

#include <algorithm>
#include <stdexcept>

#include "fuglab/detail/parallel.hpp"
#include "fuglab/tiling.hpp"

namespace fuglab {

namespace {

// Subsets of Z_n containing 0, keeping only the lexicographically least
// translate (as a sorted coordinate list) per translation class.
std::vector<std::vector<Idx>> subset_class_reps(Coord n, std::size_t size_filter = 0) {
    std::vector<std::vector<Idx>> reps;
    const std::uint32_t count = 1u << (n - 1);
    for (std::uint32_t bits = 0; bits < count; ++bits) {
        std::vector<Idx> set{0};
        for (Coord i = 1; i < n; ++i)
            if (bits & (1u << (i - 1))) set.push_back(i);
        if (size_filter && set.size() != size_filter) continue;
        bool least = true;
        for (Idx s : set) {
            std::vector<Idx> shifted;
            shifted.reserve(set.size());
            for (Idx e : set) {
                Idx d = e - s;
                shifted.push_back(d < 0 ? d + n : d);
            }
            std::sort(shifted.begin(), shifted.end());
            if (shifted < set) {
                least = false;
                break;
            }
        }
        if (least) reps.push_back(std::move(set));
    }
    return reps;
}

} // namespace

FugledeScanReport fuglede_scan(Coord n_max, Coord bound) {
    if (n_max < 1 || n_max > bound)
        throw std::invalid_argument("fuglede_scan: n_max outside the configured bound");
    FugledeScanReport report;
    for (Coord n = 1; n <= n_max; ++n) {
        GroupPtr g = Group::make({n});
        std::vector<std::vector<Idx>> reps = subset_class_reps(n);
        FugledeScanRow row;
        row.n = n;
        row.classes = reps.size();
        struct Outcome {
            bool tile = false;
            bool spectral = false;
        };
        std::vector<Outcome> outcomes(reps.size());
        detail::parallel_for(reps.size(), [&](std::size_t i) {
            PointSet t(g, reps[i]);
            Outcome& o = outcomes[i];
            o.tile = tiles_group(t).complement.has_value();
            CliqueSearchResult s = find_spectrum(t);
            if (s.verdict == Verdict::Inconclusive)
                throw std::logic_error("fuglede_scan: spectrum search must be exhaustive");
            o.spectral = s.verdict == Verdict::Accepted;
        });
        for (std::size_t i = 0; i < reps.size(); ++i) {
            if (outcomes[i].tile) ++row.tiles;
            if (outcomes[i].spectral) ++row.spectral;
            if (outcomes[i].tile != outcomes[i].spectral)
                row.discrepancies.emplace_back(g, reps[i]);
        }
        report.total_discrepancies += row.discrepancies.size();
        report.rows.push_back(std::move(row));
    }
    return report;
}

UniversalScanReport universal_scan(Coord n, Coord size, std::size_t complement_limit) {
    if (n < 1 || n > 24)
        throw std::invalid_argument("universal_scan: group size outside the supported bound");
    if (size < 1 || n % size != 0)
        throw std::invalid_argument("universal_scan: size must divide n");
    UniversalScanReport report;
    report.n = n;
    report.size = size;
    GroupPtr g = Group::make({n});
    std::vector<std::vector<Idx>> reps = subset_class_reps(n, static_cast<std::size_t>(size));

    std::vector<std::optional<UniversalScanEntry>> slots(reps.size());
    detail::parallel_for(reps.size(), [&](std::size_t i) {
        PointSet t(g, reps[i]);
        EnumerationResult e = enumerate_complements(t, complement_limit);
        if (e.complements.empty()) return;  // not a tile
        UniversalScanEntry entry{t, 0, false, Verdict::Inconclusive, std::nullopt, 0};
        entry.complement_count = e.complements.size();
        entry.complements_exhausted = e.exhausted;
        WitnessTable table(t, e.complements);
        entry.common_zero_size = table.common_zero_set().size();
        UniversalSpectrumResult r = no_universal_spectrum_certificate(t, e.complements);
        if (!e.exhausted || r.verdict == Verdict::Inconclusive) {
            entry.universal = Verdict::Inconclusive;
        } else if (r.verdict == Verdict::Refuted) {
            // The clique is a universal spectrum once the complement list is
            // exhaustive.
            entry.universal = Verdict::Accepted;
            entry.universal_spectrum = r.universal_spectrum_candidate;
        } else {
            entry.universal = Verdict::Refuted;
        }
        slots[i] = std::move(entry);
    });
    for (auto& slot : slots) {
        if (!slot) continue;
        ++report.tiles_scanned;
        if (slot->universal == Verdict::Refuted) ++report.without_universal;
        if (slot->universal == Verdict::Inconclusive) ++report.inconclusive;
        report.entries.push_back(std::move(*slot));
    }
    return report;
}

} // namespace fuglab
