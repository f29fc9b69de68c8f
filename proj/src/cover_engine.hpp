#pragma once

// Internal incremental engine for partial tiling complements. Tracks, per
// group element, whether it is covered by an accepted translate and how many
// viable candidate translates could still cover it; unit propagation forces
// single-candidate points and retires candidates that would double-cover.
// All mutations go through a trail so branches can be rewound in O(changes).

#include <cstdint>
#include <vector>

#include "fuglab/group.hpp"

namespace fuglab::detail {

struct EngineDeduction {
    enum Kind : std::uint8_t { ForcedIn, ForcedOut };
    Kind kind;
    Idx subject;
    Idx reason;  // ForcedIn: the point only `subject` could cover; ForcedOut: the point double-covered
};

class CoverEngine {
public:
    CoverEngine(GroupPtr group, const std::vector<Idx>& tile);

    // Returns false on contradiction (conflict_point() tells where).
    bool assert_in(Idx c, std::vector<EngineDeduction>* log);
    bool assert_out(Idx c);
    bool propagate(std::vector<EngineDeduction>* log);

    Idx conflict_point() const { return conflict_point_; }

    Idx uncovered_count() const { return uncovered_; }
    bool covered(Idx p) const { return covered_[p] != 0; }
    bool in(Idx c) const { return status_[c] == 1; }
    bool out(Idx c) const { return status_[c] == 2; }
    int candidate_count(Idx p) const { return cand_count_[p]; }

    Idx least_uncovered() const;
    Idx fewest_candidate_point() const;  // min(count, index); -1 when all covered
    std::vector<Idx> viable_candidates(Idx p) const;  // ascending
    const std::vector<Idx>& in_list() const { return in_list_; }

    std::size_t mark() const { return trail_.size(); }
    void rewind(std::size_t mark);

private:
    enum class TrailOp : std::uint8_t { Status, Viable, Cover, CandDec, InListPush };
    struct TrailEntry {
        TrailOp op;
        Idx where;
        std::int8_t old_status;
    };

    bool kill_viable(Idx c, Idx reason, std::vector<EngineDeduction>* log, bool record);
    void set_status(Idx c, std::int8_t s);

    GroupPtr group_;
    std::vector<Idx> tile_;
    std::vector<std::int8_t> status_;      // 0 unknown, 1 in, 2 out
    std::vector<std::uint8_t> viable_;     // status 0 and no covered overlap
    std::vector<std::uint8_t> covered_;
    std::vector<std::int32_t> cand_count_;
    std::vector<Idx> in_list_;
    std::vector<TrailEntry> trail_;
    std::vector<Idx> force_queue_;         // points that dropped to one candidate
    std::vector<Idx> zero_queue_;          // points that dropped to zero candidates
    Idx uncovered_ = 0;
    Idx conflict_point_ = -1;
};

} // namespace fuglab::detail
