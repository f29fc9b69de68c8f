#include "fuglab/cover_logic.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "cover_engine.hpp"
#include "fuglab/builtin_data.hpp"
#include "fuglab/cyclotomic.hpp"

namespace fuglab {

namespace {

void check_state_groups(const PartialCover& state) {
    require_same_group(state.tile, state.in, "partial cover");
    require_same_group(state.tile, state.out, "partial cover");
}

// Loads a state into a fresh engine. Returns false on contradiction (invariant
// violations included), with *conflict set to the offending point. Candidates
// retired while loading are definitional exclusions of the input state, not
// deductions, so nothing is logged here.
bool load_state(detail::CoverEngine& engine, const PartialCover& state, Idx* conflict) {
    for (Idx c : state.out) {
        if (!engine.assert_out(c)) {
            if (conflict) *conflict = engine.conflict_point();
            return false;
        }
    }
    for (Idx c : state.in) {
        if (!engine.assert_in(c, nullptr)) {
            if (conflict) *conflict = engine.conflict_point();
            return false;
        }
    }
    return true;
}

Deduction convert(const detail::EngineDeduction& d) {
    return Deduction{d.kind == detail::EngineDeduction::ForcedIn ? DeductionKind::ForcedIn
                                                                 : DeductionKind::ForcedOut,
                     d.subject, d.reason};
}

std::vector<Deduction> convert_all(const std::vector<detail::EngineDeduction>& ds) {
    std::vector<Deduction> out;
    out.reserve(ds.size());
    for (const auto& d : ds) out.push_back(convert(d));
    return out;
}

} // namespace

CoverCandidates cover_candidates(const PartialCover& state, Idx g) {
    check_state_groups(state);
    const Group& grp = *state.tile.group();
    CoverCandidates result;
    // Covered marker: g already lies in in + T.
    for (Idx c : state.in)
        for (Idx t : state.tile)
            if (grp.add(c, t) == g) {
                result.already_covered = true;
                return result;
            }
    std::vector<std::uint8_t> covered(grp.order(), 0);
    for (Idx c : state.in)
        for (Idx t : state.tile)
            covered[grp.add(c, t)] = 1;
    for (Idx t : state.tile) {
        Idx c = grp.subtract(g, t);
        if (state.out.contains(c)) continue;
        bool collides = false;
        for (Idx t2 : state.tile)
            if (covered[grp.add(c, t2)]) {
                collides = true;
                break;
            }
        if (!collides) result.candidates.push_back(c);
    }
    std::sort(result.candidates.begin(), result.candidates.end());
    result.candidates.erase(std::unique(result.candidates.begin(), result.candidates.end()),
                            result.candidates.end());
    return result;
}

PropagationResult propagate(const PartialCover& state) {
    check_state_groups(state);
    PropagationResult result;
    detail::CoverEngine engine(state.tile.group(), state.tile.indices());
    Idx conflict = -1;
    std::vector<detail::EngineDeduction> log;
    if (!load_state(engine, state, &conflict)) {
        result.contradiction = true;
        result.conflict_point = conflict;
        return result;
    }
    if (!engine.propagate(&log)) {
        result.contradiction = true;
        result.conflict_point = engine.conflict_point();
        result.deductions = convert_all(log);
        return result;
    }
    result.deductions = convert_all(log);
    std::vector<Idx> in_pts, out_pts;
    for (Idx p = 0; p < state.tile.group()->order(); ++p) {
        if (engine.in(p)) in_pts.push_back(p);
        if (engine.out(p)) out_pts.push_back(p);
    }
    // Forced-out deductions extend `out`; killed-but-unasserted candidates are
    // in the log rather than the status array, so fold them in here.
    for (const auto& d : result.deductions)
        if (d.kind == DeductionKind::ForcedOut) out_pts.push_back(d.subject);
    result.fixpoint = PartialCover{state.tile, PointSet(state.tile.group(), std::move(in_pts)),
                                   PointSet(state.tile.group(), std::move(out_pts))};
    return result;
}

namespace {

struct RefuteContext {
    detail::CoverEngine* engine;
    ProofTree* tree;
    std::uint64_t nodes = 0;
    std::uint64_t budget = 0;
    int depth_limit = 0;
    int max_depth = 0;
    bool complete_cover = false;
    bool budget_exceeded = false;
};

// Returns true when the subtree is closed (every leaf a contradiction).
bool refute_node(RefuteContext& ctx, std::uint32_t node_id, int depth,
                 std::vector<detail::EngineDeduction>&& entry_log, bool entry_contradiction) {
    auto& engine = *ctx.engine;
    ctx.max_depth = std::max(ctx.max_depth, depth);
    ++ctx.nodes;

    std::vector<detail::EngineDeduction> log = std::move(entry_log);
    bool contradiction = entry_contradiction;
    if (!contradiction) contradiction = !engine.propagate(&log);
    ProofTreeNode& node = ctx.tree->nodes[node_id];
    node.forced = convert_all(log);
    if (contradiction) {
        node.result = ProofTreeNode::Result::Contradiction;
        node.conflict_point = engine.conflict_point();
        return true;
    }
    if (engine.uncovered_count() == 0) {
        node.result = ProofTreeNode::Result::CompleteCover;
        ctx.complete_cover = true;
        return false;
    }
    if (depth >= ctx.depth_limit || (ctx.budget && ctx.nodes >= ctx.budget)) {
        node.result = ProofTreeNode::Result::DepthLimit;
        if (ctx.budget && ctx.nodes >= ctx.budget) ctx.budget_exceeded = true;
        return false;
    }
    Idx p = engine.fewest_candidate_point();
    std::vector<Idx> candidates = engine.viable_candidates(p);
    node.result = ProofTreeNode::Result::Branch;
    node.branch_point = p;
    node.candidates = candidates;
    bool closed = true;
    for (Idx c : candidates) {
        std::uint32_t child_id = static_cast<std::uint32_t>(ctx.tree->nodes.size());
        ctx.tree->nodes.emplace_back();
        ctx.tree->nodes[node_id].children.push_back(child_id);
        std::size_t mark = engine.mark();
        std::vector<detail::EngineDeduction> child_log;
        bool child_contradiction = !engine.assert_in(c, &child_log);
        bool child_closed =
            refute_node(ctx, child_id, depth + 1, std::move(child_log), child_contradiction);
        engine.rewind(mark);
        closed = closed && child_closed;
        if (ctx.budget_exceeded) return false;
    }
    return closed;
}

} // namespace

RefutationResult refute_by_branching(const PartialCover& state, int depth_limit,
                                     std::uint64_t node_budget) {
    check_state_groups(state);
    RefutationResult result{RefutationResult::Status::Inconclusive, false, 0, 0,
                            ProofTree{state.tile, state.in, state.out, depth_limit, false, {}}};
    result.tree.nodes.emplace_back();

    detail::CoverEngine engine(state.tile.group(), state.tile.indices());
    RefuteContext ctx;
    ctx.engine = &engine;
    ctx.tree = &result.tree;
    ctx.budget = node_budget;
    ctx.depth_limit = depth_limit;

    Idx conflict = -1;
    bool contradiction = !load_state(engine, state, &conflict);
    bool closed = refute_node(ctx, 0, 0, {}, contradiction);

    result.nodes = ctx.nodes;
    result.max_depth = ctx.max_depth;
    result.found_complete_cover = ctx.complete_cover;
    result.status =
        closed ? RefutationResult::Status::Closed : RefutationResult::Status::Inconclusive;
    result.tree.closed = closed;
    return result;
}

namespace {

// Plain-set replay state; deliberately recomputes everything from scratch.
struct ReplayState {
    const Group* group;
    std::vector<Idx> tile;
    std::set<Idx> in, out;

    bool covered(Idx p) const {
        for (Idx c : in)
            for (Idx t : tile)
                if (group->add(c, t) == p) return true;
        return false;
    }
    std::vector<Idx> candidates(Idx p) const {
        std::vector<Idx> result;
        for (Idx t : tile) {
            Idx c = group->subtract(p, t);
            if (out.count(c) || in.count(c)) continue;
            bool collides = false;
            for (Idx t2 : tile)
                if (covered(group->add(c, t2))) {
                    collides = true;
                    break;
                }
            if (!collides) result.push_back(c);
        }
        std::sort(result.begin(), result.end());
        result.erase(std::unique(result.begin(), result.end()), result.end());
        return result;
    }
    bool double_cover_exists() const {
        std::set<Idx> seen;
        for (Idx c : in)
            for (Idx t : tile)
                if (!seen.insert(group->add(c, t)).second) return true;
        return false;
    }
};

bool replay_node(const ProofTree& tree, std::uint32_t node_id, ReplayState state,
                 std::string* error) {
    auto fail = [&](const std::string& msg) {
        if (error) *error = "node " + std::to_string(node_id) + ": " + msg;
        return false;
    };
    const ProofTreeNode& node = tree.nodes[node_id];
    for (const Deduction& d : node.forced) {
        if (d.kind == DeductionKind::ForcedOut) {
            // Legal when placing the subject would cover `reason` twice.
            bool touches = false;
            for (Idx t : state.tile)
                if (state.group->add(d.subject, t) == d.reason) touches = true;
            if (!touches || !state.covered(d.reason))
                return fail("forced-out deduction does not re-derive");
            state.out.insert(d.subject);
        } else {
            if (state.covered(d.reason)) return fail("forced-in reason already covered");
            std::vector<Idx> cands = state.candidates(d.reason);
            if (cands.size() != 1 || cands[0] != d.subject)
                return fail("forced-in deduction is not the unique candidate");
            state.in.insert(d.subject);
        }
    }
    switch (node.result) {
        case ProofTreeNode::Result::Contradiction: {
            if (state.double_cover_exists()) return true;
            if (node.conflict_point >= 0 && !state.covered(node.conflict_point) &&
                state.candidates(node.conflict_point).empty())
                return true;
            if (state.in.count(node.conflict_point) && state.out.count(node.conflict_point))
                return true;
            return fail("recorded contradiction does not re-derive");
        }
        case ProofTreeNode::Result::Branch: {
            if (node.branch_point < 0 || state.covered(node.branch_point))
                return fail("branch point is covered");
            std::vector<Idx> cands = state.candidates(node.branch_point);
            if (cands != node.candidates) return fail("branch candidates do not re-derive");
            if (node.children.size() != node.candidates.size())
                return fail("branch child count mismatch");
            for (std::size_t i = 0; i < node.children.size(); ++i) {
                ReplayState child = state;
                child.in.insert(node.candidates[i]);
                if (!replay_node(tree, node.children[i], std::move(child), error)) return false;
            }
            return true;
        }
        case ProofTreeNode::Result::DepthLimit:
        case ProofTreeNode::Result::CompleteCover:
            // Open leaves are legal only in trees not claiming closure.
            return !tree.closed || fail("closed tree contains an open leaf");
    }
    return fail("unknown node result");
}

} // namespace

bool replay_proof_tree(const ProofTree& tree, std::string* error) {
    if (tree.nodes.empty()) {
        if (error) *error = "empty tree";
        return false;
    }
    ReplayState state;
    state.group = tree.tile.group().get();
    state.tile.assign(tree.tile.begin(), tree.tile.end());
    state.in.insert(tree.root_in.begin(), tree.root_in.end());
    state.out.insert(tree.root_out.begin(), tree.root_out.end());
    for (Idx c : state.in)
        if (state.out.count(c)) {
            // in/out overlap is itself a root contradiction.
            return tree.nodes[0].result == ProofTreeNode::Result::Contradiction;
        }
    return replay_node(tree, 0, std::move(state), error);
}

CoverFactsReport prove_cover_facts(const PointSet& tile, const PointSet& pset, int depth_limit) {
    require_same_group(tile, pset, "prove_cover_facts");
    const GroupPtr& gp = tile.group();
    const Group& g = *gp;
    CoverFactsReport report;

    PointSet zero(gp, {0});
    PointSet empty(gp, {});

    // A progression step must leave every element: forbidding all of pset
    // around 0 has to contradict.
    {
        RefutationResult r = refute_by_branching({tile, zero, pset}, depth_limit);
        report.progression_start_forced = r.status == RefutationResult::Status::Closed;
        report.progression_start_nodes = r.nodes;
    }

    // Once 0 and x are present, 2x cannot be avoided. No symmetry shortcut:
    // every x is checked directly.
    for (Idx x : pset) {
        PartialCover state{tile, PointSet(gp, {0, x}), PointSet(gp, {g.add(x, x)})};
        RefutationResult r = refute_by_branching(state, depth_limit);
        report.step_closures.push_back({x, r.status == RefutationResult::Status::Closed, r.nodes,
                                        std::move(r.tree)});
    }

    // Two distinct steps from the same element collide immediately.
    for (std::size_t i = 0; i < pset.size(); ++i)
        for (std::size_t j = i + 1; j < pset.size(); ++j) {
            PartialCover state{tile, PointSet(gp, {0, pset[i], pset[j]}), empty};
            PropagationResult r = propagate(state);
            report.pair_exclusions.push_back({pset[i], pset[j], r.contradiction});
        }

    report.ok = report.progression_start_forced;
    for (const auto& s : report.step_closures) report.ok = report.ok && s.closed;
    for (const auto& p : report.pair_exclusions) report.ok = report.ok && p.contradiction;
    return report;
}

SixCycleReport six_cycle_conclusion(const PointSet& tile, const PointSet& pset,
                                    const PointSet& vset) {
    require_same_group(tile, pset, "six_cycle_conclusion");
    require_same_group(tile, vset, "six_cycle_conclusion");
    const Group& g = *tile.group();
    SixCycleReport report;

    report.step_orders_ok = true;
    for (Idx x : pset) {
        Idx acc = 0;
        for (int k = 1; k <= 6; ++k) {
            acc = g.add(acc, x);
            if (k < 6 && acc == 0) report.step_orders_ok = false;
        }
        if (acc != 0) report.step_orders_ok = false;
    }

    const Coord n = g.exponent();
    for (Idx v : vset) {
        for (Idx x : pset) {
            Coord e = g.pairing_exponent(v, x);
            Cyclotomic sum(n);
            for (int k = 0; k < 6; ++k)
                sum.accumulate_root((static_cast<Coord>(k) * e) % n);
            ++report.sums_checked;
            if (!sum.is_zero()) report.failures.emplace_back(v, x);
        }
    }
    report.ok = report.step_orders_ok && report.failures.empty();
    return report;
}

Z64FactsReport verify_z64_cover_facts(int depth_limit) {
    GroupPtr g = builtin::group_z6_fourth();
    PointSet tile = builtin::z64_tile();
    PointSet pset = builtin::z64_pset();
    Z64FactsReport report;
    Idx probe = g->negate(tile[tile.size() - 1]);
    CoverCandidates cc = cover_candidates({tile, PointSet(g, {0}), PointSet(g, {})}, probe);
    report.probe_candidates_match = !cc.already_covered && cc.candidates == pset.indices();
    report.facts = prove_cover_facts(tile, pset, depth_limit);
    report.ok = report.probe_candidates_match && report.facts.ok;
    return report;
}

} // namespace fuglab
