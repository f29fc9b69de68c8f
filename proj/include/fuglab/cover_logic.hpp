#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "fuglab/group.hpp"
#include "fuglab/tiling.hpp"

namespace fuglab {

/// Partial knowledge about a hypothetical tiling complement T' of `tile`:
/// elements asserted inside (`in`) and outside (`out`).
struct PartialCover {
    PointSet tile;
    PointSet in;
    PointSet out;
};

enum class DeductionKind : std::uint8_t { ForcedIn, ForcedOut };

/// One propagation step, replayable against the parent state: ForcedIn means
/// `reason` had `subject` as its only remaining cover; ForcedOut means
/// placing `subject` would cover `reason` twice.
struct Deduction {
    DeductionKind kind;
    Idx subject;
    Idx reason;
};

struct CoverCandidates {
    bool already_covered = false;
    std::vector<Idx> candidates;  // lexicographic
};

/// All c = g - t (t in tile) that are not excluded and whose translate does
/// not collide with the current cover; the marker fires when `g` is already
/// covered by `in`.
CoverCandidates cover_candidates(const PartialCover& state, Idx g);

struct PropagationResult {
    bool contradiction = false;
    std::optional<Idx> conflict_point;
    std::optional<PartialCover> fixpoint;  // engaged when no contradiction
    std::vector<Deduction> deductions;
};

/// Unit propagation to fixpoint: unique candidates are forced in, colliding
/// candidates forced out, an uncoverable point is a contradiction. Invariant
/// violations in the input state surface as an immediate contradiction.
PropagationResult propagate(const PartialCover& state);

struct ProofTreeNode {
    std::vector<Deduction> forced;
    enum class Result : std::uint8_t { Contradiction, Branch, DepthLimit, CompleteCover } result =
        Result::Contradiction;
    Idx conflict_point = -1;
    Idx branch_point = -1;
    std::vector<Idx> candidates;
    std::vector<std::uint32_t> children;  // parallel to candidates
};

struct ProofTree {
    PointSet tile;
    PointSet root_in;
    PointSet root_out;
    int depth_limit = 0;
    bool closed = false;
    std::vector<ProofTreeNode> nodes;  // node 0 is the root
};

struct RefutationResult {
    enum class Status { Closed, Inconclusive } status = Status::Inconclusive;
    bool found_complete_cover = false;
    std::uint64_t nodes = 0;
    int max_depth = 0;
    ProofTree tree;
};

/// DFS refutation: propagate, branch on the uncovered point with fewest
/// candidates (ties lexicographic), candidates in lexicographic order. Closed
/// means every leaf is a contradiction; hitting the depth limit or finding a
/// complete extension leaves the verdict inconclusive.
RefutationResult refute_by_branching(const PartialCover& state, int depth_limit = 64,
                                     std::uint64_t node_budget = 10'000'000);

/// Independent re-validation of an emitted tree with plain set arithmetic
/// (no engine internals): every deduction, contradiction and branch is
/// re-derived from scratch at its node.
bool replay_proof_tree(const ProofTree& tree, std::string* error = nullptr);

struct CoverFactsReport {
    bool progression_start_forced = false;        // in = {0}, out = P refutes
    std::uint64_t progression_start_nodes = 0;
    struct StepClosure {
        Idx x;
        bool closed = false;
        std::uint64_t nodes = 0;
        ProofTree tree;
    };
    std::vector<StepClosure> step_closures;       // per x: {0, x} in, {2x} out refutes
    struct PairExclusion {
        Idx x, y;
        bool contradiction = false;
    };
    std::vector<PairExclusion> pair_exclusions;   // per pair: {0, x, y} contradicts at once
    bool ok = false;
};

/// For each element of `pset`, closure of the three structure facts that
/// force complements of `tile` into arithmetic progressions with steps in
/// `pset`: a progression must start at every element, must continue once
/// started, and two different steps cannot leave the same element.
CoverFactsReport prove_cover_facts(const PointSet& tile, const PointSet& pset,
                                   int depth_limit = 64);

struct SixCycleReport {
    bool ok = false;
    int sums_checked = 0;
    bool step_orders_ok = false;              // every step has exact order 6
    std::vector<std::pair<Idx, Idx>> failures;  // (v, x) pairs whose inner sum is nonzero
};

/// Checks sum_{k=0}^{5} zeta_6^{k <v,x>} = 0 exactly for every v in vset and
/// x in pset (plus order-6 checks on the steps). Together with the cover
/// facts this certifies chi_hat_{T'}(v) = 0 for every complement T'.
SixCycleReport six_cycle_conclusion(const PointSet& tile, const PointSet& pset,
                                    const PointSet& vset);

struct Z64FactsReport {
    bool probe_candidates_match = false;  // candidates covering -(2,2,2,2) are exactly the steps
    CoverFactsReport facts;
    bool ok = false;
};

/// The three structure facts for the built-in Z6^4 tile and its four-point
/// step set, plus the exact candidate check at the probe point.
Z64FactsReport verify_z64_cover_facts(int depth_limit = 64);

} // namespace fuglab
