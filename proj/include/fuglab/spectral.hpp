#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fuglab/cyclotomic.hpp"
#include "fuglab/group.hpp"
#include "fuglab/tiling.hpp"

namespace fuglab {

/// Spectrum check: |Lambda| = |T| and every nonzero difference of Lambda lies
/// in Z_T. Violating differences are listed on refute.
struct SpectrumCertificate {
    Verdict verdict = Verdict::Refuted;
    bool size_ok = false;
    std::vector<Idx> violations;
};

SpectrumCertificate is_spectrum(const PointSet& t, const PointSet& lambda);

/// Deterministic branch-and-bound clique search over a Cayley graph on the
/// dual, seeded with 0. At each node candidates are ordered by descending
/// degree within the candidate set, ties lexicographic.
struct CliqueSearchResult {
    Verdict verdict = Verdict::Inconclusive;  // Accepted: clique found;
                                              // Refuted: exhausted, none exists
    std::optional<PointSet> witness;
    std::uint64_t nodes = 0;
    bool exhausted = false;
};

CliqueSearchResult clique_of_size(const GroupPtr& dual, const std::vector<std::uint8_t>& connection,
                                  std::size_t target, std::uint64_t node_budget);

/// Spectrum search: cliques in (dual, v ~ w iff v - w in Z_T) of size |T|.
CliqueSearchResult find_spectrum(const PointSet& t, std::uint64_t node_budget = 50'000'000);

/// Search for S with |S| = |G|/|T| and S - S inside the complement of Z_T;
/// such an S is simultaneously a universal spectrum and a universal tiling
/// complement of T. The returned certificate re-verifies both size and
/// difference containment.
struct LagariasSzaboResult {
    CliqueSearchResult search;
    bool reverified = false;  // |S| and S-S containment re-checked when found
};

LagariasSzaboResult lagarias_szabo_search(const PointSet& t, std::uint64_t node_budget = 50'000'000);

/// Indirect non-existence certificate: if L is a spectrum of T and L cannot
/// tile (divisibility obstruction), then no S as above exists, because such
/// an S would tile the dual against L.
struct DualityCertificate {
    Verdict verdict = Verdict::Refuted;
    SpectrumCertificate spectrum_of_t;
    std::optional<Subgroup> obstruction;
    Idx spectrum_size = 0;
    Idx required_size = 0;  // |G| / |T|
    std::string reason;
};

DualityCertificate no_lagarias_szabo_via_duality(const PointSet& t, const PointSet& l);

/// Character table of complements at the witness set W = dual minus
/// (D cup {0}), D the common zero-set of the complements. Every complement
/// is re-verified against the tile on construction. Matrix entries are
/// computed on demand (the table can be dual-sized in big groups).
class WitnessTable {
public:
    WitnessTable(PointSet tile, std::vector<PointSet> complements);

    const PointSet& tile() const { return tile_; }
    const std::vector<PointSet>& complements() const { return complements_; }
    const std::vector<std::uint8_t>& common_zero_mask() const { return common_zero_; }
    bool in_common_zero(Idx v) const { return common_zero_[v] != 0; }
    PointSet common_zero_set() const;
    PointSet witness_set() const;
    std::size_t witness_count() const { return witness_count_; }

    Cyclotomic entry(Idx witness, std::size_t complement_index) const;
    bool row_has_nonzero(Idx witness) const;

private:
    PointSet tile_;
    std::vector<PointSet> complements_;
    std::vector<std::uint8_t> common_zero_;
    std::size_t witness_count_ = 0;
};

WitnessTable build_witness_table(const PointSet& tile, const std::vector<PointSet>& complements);

/// Exhaustive clique decision on the common zero-set: Accepted certifies that
/// no set of size |G|/|T| has all differences inside D (hence no universal
/// spectrum w.r.t. the listed complements; any sub-list yields a valid
/// certificate). Refuted returns the clique found.
struct UniversalSpectrumResult {
    Verdict verdict = Verdict::Inconclusive;
    std::optional<PointSet> universal_spectrum_candidate;
    std::uint64_t nodes = 0;
    Idx target_size = 0;
};

UniversalSpectrumResult no_universal_spectrum_certificate(const PointSet& tile,
                                                          const std::vector<PointSet>& complements,
                                                          std::uint64_t node_budget = 50'000'000);

/// Positive universal-spectrum verdicts need full complement exhaustion:
/// runs is_spectrum(T', S) over every enumerated complement of T.
struct UniversalCheckResult {
    Verdict verdict = Verdict::Inconclusive;
    std::size_t complements_checked = 0;
    std::optional<PointSet> failing_complement;
};

UniversalCheckResult universal_spectrum_check_exhaustive(const PointSet& tile, const PointSet& s,
                                                         std::size_t enumeration_limit);

} // namespace fuglab
