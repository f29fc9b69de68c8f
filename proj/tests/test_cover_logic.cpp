#include <doctest.h>

#include "fuglab/builtin_data.hpp"
#include "fuglab/cover_logic.hpp"
#include "fuglab/transcript.hpp"

using namespace fuglab;

namespace {

Idx idx(const GroupPtr& g, std::vector<Coord> coords) { return g->index_of(coords); }

} // namespace

TEST_CASE("cover candidates around the probe point") {
    GroupPtr g = builtin::group_z6_fourth();
    PointSet tile = builtin::z64_tile();
    PartialCover state{tile, PointSet(g, {0}), PointSet(g, {})};

    // Covering (4,4,4,4) with 0 placed: exactly the four progression steps
    // survive; the two other raw candidates would double-cover 0 or
    // (2,2,2,2).
    CoverCandidates cc = cover_candidates(state, idx(g, {4, 4, 4, 4}));
    CHECK(!cc.already_covered);
    CHECK(cc.candidates == builtin::z64_pset().indices());

    // A point already covered by in + T yields the marker.
    CHECK(cover_candidates(state, 0).already_covered);
    CHECK(cover_candidates(state, idx(g, {2, 2, 2, 2})).already_covered);

    // The second-level state from the step-closure proof.
    PartialCover deeper{tile, PointSet(g, {0, idx(g, {3, 4, 4, 4})}),
                        PointSet(g, {idx(g, {0, 2, 2, 2})})};
    CoverCandidates three = cover_candidates(deeper, idx(g, {1, 2, 2, 2}));
    CHECK(three.candidates == std::vector<Idx>{idx(g, {1, 1, 2, 2}), idx(g, {1, 2, 1, 2}),
                                               idx(g, {1, 2, 2, 1})});
}

TEST_CASE("propagation fixpoints and contradictions") {
    GroupPtr z6 = Group::make({6});
    PointSet t(z6, {0, 3});

    // Two candidates everywhere: no deduction, fixpoint = input.
    PropagationResult quiet = propagate({t, PointSet(z6, {0}), PointSet(z6, {})});
    CHECK(!quiet.contradiction);
    CHECK(quiet.deductions.empty());
    CHECK(quiet.fixpoint->in.indices() == std::vector<Idx>{0});
    CHECK(quiet.fixpoint->out.empty());

    // Input violating the no-double-cover invariant contradicts immediately.
    PropagationResult clash = propagate({t, PointSet(z6, {0, 3}), PointSet(z6, {})});
    CHECK(clash.contradiction);

    // in/out overlap contradicts immediately.
    PropagationResult overlap = propagate({t, PointSet(z6, {0}), PointSet(z6, {0})});
    CHECK(overlap.contradiction);

    // A long forced chain on the Z6^4 tile ends in a contradiction.
    GroupPtr g = builtin::group_z6_fourth();
    PointSet tile = builtin::z64_tile();
    PartialCover chain{tile,
                       PointSet(g, {0, idx(g, {3, 4, 4, 4}), idx(g, {1, 1, 2, 2}),
                                    idx(g, {0, 5, 0, 5})}),
                       PointSet(g, {idx(g, {0, 2, 2, 2})})};
    PropagationResult r = propagate(chain);
    CHECK(r.contradiction);
    CHECK(!r.deductions.empty());
}

TEST_CASE("propagation deductions are sound against real complements") {
    GroupPtr z6 = Group::make({6});
    PointSet t(z6, {0, 3});
    EnumerationResult e = enumerate_complements(t, 100);
    for (const PointSet& comp : e.complements) {
        // States consistent with comp: in from comp, out from its complement.
        std::vector<Idx> out_pts;
        for (Idx v = 0; v < z6->order(); ++v)
            if (!comp.contains(v)) out_pts.push_back(v);
        for (std::size_t take = 1; take < comp.size(); ++take) {
            PartialCover state{t,
                               PointSet(z6, std::vector<Idx>(comp.begin(), comp.begin() + take)),
                               PointSet(z6, {out_pts[0]})};
            PropagationResult r = propagate(state);
            CHECK(!r.contradiction);
            for (const Deduction& d : r.deductions) {
                if (d.kind == DeductionKind::ForcedIn) CHECK(comp.contains(d.subject));
                if (d.kind == DeductionKind::ForcedOut) CHECK(!comp.contains(d.subject));
            }
            // Branching can never close a refutation for an extendable state.
            RefutationResult rb = refute_by_branching(state, 64);
            CHECK(rb.status == RefutationResult::Status::Inconclusive);
            CHECK(rb.found_complete_cover);
        }
    }
}

TEST_CASE("step closure refutations on the Z6^4 tile") {
    GroupPtr g = builtin::group_z6_fourth();
    PointSet tile = builtin::z64_tile();
    Idx x = idx(g, {3, 4, 4, 4});

    PartialCover state{tile, PointSet(g, {0, x}), PointSet(g, {g->add(x, x)})};
    RefutationResult r = refute_by_branching(state, 64);
    CHECK(r.status == RefutationResult::Status::Closed);
    CHECK(r.nodes <= 100000);
    CHECK(r.tree.closed);

    // The root splits on (0,0,0,5) with the same three ways to cover it the
    // manual case analysis uses.
    const ProofTreeNode& root = r.tree.nodes[0];
    CHECK(root.forced.empty());
    CHECK(root.result == ProofTreeNode::Result::Branch);
    CHECK(root.branch_point == idx(g, {0, 0, 0, 5}));
    CHECK(root.candidates == std::vector<Idx>{idx(g, {0, 0, 0, 4}), idx(g, {0, 0, 5, 5}),
                                              idx(g, {0, 5, 0, 5})});

    // The emitted tree replays independently, and survives a JSON round trip.
    std::string error;
    CHECK(replay_proof_tree(r.tree, &error));
    Json j = proof_tree_to_json(r.tree);
    ProofTree back = proof_tree_from_json(j);
    CHECK(replay_proof_tree(back, &error));

    // Tampering breaks the replay.
    ProofTree tampered = back;
    bool flipped = false;
    for (ProofTreeNode& n : tampered.nodes) {
        if (n.result == ProofTreeNode::Result::Branch && !n.candidates.empty()) {
            n.candidates[0] = g->add(n.candidates[0], 1);
            flipped = true;
            break;
        }
    }
    REQUIRE(flipped);
    CHECK(!replay_proof_tree(tampered, &error));
    CHECK(!error.empty());
}

TEST_CASE("two steps from one element contradict immediately") {
    GroupPtr g = builtin::group_z6_fourth();
    PointSet tile = builtin::z64_tile();
    PointSet pset = builtin::z64_pset();
    for (std::size_t i = 0; i < pset.size(); ++i)
        for (std::size_t j = i + 1; j < pset.size(); ++j) {
            PropagationResult r =
                propagate({tile, PointSet(g, {0, pset[i], pset[j]}), PointSet(g, {})});
            CHECK(r.contradiction);
        }
}

TEST_CASE("bundled fact verification for the Z6^4 tile") {
    Z64FactsReport r = verify_z64_cover_facts();
    CHECK(r.ok);
    CHECK(r.probe_candidates_match);
    CHECK(r.facts.progression_start_forced);
    REQUIRE(r.facts.step_closures.size() == 4);
    for (const auto& s : r.facts.step_closures) {
        CHECK(s.closed);
        CHECK(s.nodes <= 100000);
    }
    REQUIRE(r.facts.pair_exclusions.size() == 6);
    for (const auto& p : r.facts.pair_exclusions) CHECK(p.contradiction);
}

TEST_CASE("six-cycle sums") {
    GroupPtr g = builtin::group_z6_fourth();
    PointSet tile = builtin::z64_tile();
    PointSet pset = builtin::z64_pset();
    PointSet u0 = builtin::z64_u0();

    SixCycleReport r = six_cycle_conclusion(tile, pset, u0);
    CHECK(r.ok);
    CHECK(r.sums_checked == 24);
    CHECK(r.step_orders_ok);
    CHECK(r.failures.empty());

    // v = 0 pairs to exponent 0 everywhere: the inner sum is 6, a refutation.
    SixCycleReport zero = six_cycle_conclusion(tile, pset, PointSet(g, {0}));
    CHECK(!zero.ok);
    CHECK(zero.failures.size() == pset.size());

    // Spot value: <(2,2,4,4), (3,4,4,4)> = 4, and the sum over the cycle
    // vanishes.
    CHECK(g->pairing_exponent(idx(g, {2, 2, 4, 4}), idx(g, {3, 4, 4, 4})) == 4);
}
