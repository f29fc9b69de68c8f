#include "fuglab/transcript.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "fuglab/constructions.hpp"
#include "fuglab/detail/hash.hpp"
#include "fuglab/setfile.hpp"

namespace fuglab {

Json transcript_header(const std::string& command) {
    Json j;
    j["schema_version"] = kTranscriptSchemaVersion;
    j["library"] = kLibraryVersion;
    j["command"] = command;
    return j;
}

Json point_set_to_json(const PointSet& s) {
    Json j;
    j["moduli"] = s.group()->moduli();
    Json pts = Json::array();
    for (std::size_t i = 0; i < s.size(); ++i) pts.push_back(s.coords(i));
    j["points"] = pts;
    return j;
}

PointSet point_set_from_json(const Json& j) {
    std::vector<Coord> moduli = j.at("moduli").get<std::vector<Coord>>();
    GroupPtr g = Group::make(moduli);
    std::vector<std::vector<Coord>> rows;
    for (const Json& p : j.at("points")) rows.push_back(p.get<std::vector<Coord>>());
    return PointSet::from_coords(g, rows);
}

Json coords_json(const Group& g, Idx p) {
    return Json(g.coords_of(p));
}

std::uint64_t file_checksum(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open file for checksum: " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return detail::fnv1a64(os.str());
}

namespace {

const char* deduction_kind_name(DeductionKind k) {
    return k == DeductionKind::ForcedIn ? "in" : "out";
}

Json deduction_json(const Group& g, const Deduction& d) {
    return Json{{"kind", deduction_kind_name(d.kind)},
                {"subject", coords_json(g, d.subject)},
                {"reason", coords_json(g, d.reason)}};
}

const char* node_result_name(ProofTreeNode::Result r) {
    switch (r) {
        case ProofTreeNode::Result::Contradiction: return "contradiction";
        case ProofTreeNode::Result::Branch: return "branch";
        case ProofTreeNode::Result::DepthLimit: return "depth-limit";
        case ProofTreeNode::Result::CompleteCover: return "complete-cover";
    }
    return "?";
}

ProofTreeNode::Result node_result_from_name(const std::string& s) {
    if (s == "contradiction") return ProofTreeNode::Result::Contradiction;
    if (s == "branch") return ProofTreeNode::Result::Branch;
    if (s == "depth-limit") return ProofTreeNode::Result::DepthLimit;
    if (s == "complete-cover") return ProofTreeNode::Result::CompleteCover;
    throw std::invalid_argument("unknown proof-tree node result: " + s);
}

} // namespace

Json proof_tree_to_json(const ProofTree& tree) {
    const Group& g = *tree.tile.group();
    Json j;
    j["schema_version"] = kTranscriptSchemaVersion;
    j["kind"] = "cover-refutation-tree";
    j["moduli"] = g.moduli();
    j["tile"] = point_set_to_json(tree.tile)["points"];
    j["root_in"] = point_set_to_json(tree.root_in)["points"];
    j["root_out"] = point_set_to_json(tree.root_out)["points"];
    j["depth_limit"] = tree.depth_limit;
    j["closed"] = tree.closed;
    Json nodes = Json::array();
    for (const ProofTreeNode& n : tree.nodes) {
        Json nj;
        Json forced = Json::array();
        for (const Deduction& d : n.forced) forced.push_back(deduction_json(g, d));
        nj["forced"] = forced;
        nj["result"] = node_result_name(n.result);
        if (n.result == ProofTreeNode::Result::Contradiction && n.conflict_point >= 0)
            nj["conflict"] = coords_json(g, n.conflict_point);
        if (n.result == ProofTreeNode::Result::Branch) {
            nj["branch"] = coords_json(g, n.branch_point);
            Json cands = Json::array();
            for (Idx c : n.candidates) cands.push_back(coords_json(g, c));
            nj["candidates"] = cands;
            nj["children"] = n.children;
        }
        nodes.push_back(nj);
    }
    j["nodes"] = nodes;
    return j;
}

ProofTree proof_tree_from_json(const Json& j) {
    if (j.at("kind").get<std::string>() != "cover-refutation-tree")
        throw std::invalid_argument("not a cover refutation tree");
    GroupPtr g = Group::make(j.at("moduli").get<std::vector<Coord>>());
    auto set_of = [&](const Json& pts) {
        std::vector<std::vector<Coord>> rows;
        for (const Json& p : pts) rows.push_back(p.get<std::vector<Coord>>());
        return PointSet::from_coords(g, rows);
    };
    auto idx_of = [&](const Json& coords) {
        return g->index_of(coords.get<std::vector<Coord>>());
    };
    ProofTree tree{set_of(j.at("tile")), set_of(j.at("root_in")), set_of(j.at("root_out")),
                   j.at("depth_limit").get<int>(), j.at("closed").get<bool>(), {}};
    for (const Json& nj : j.at("nodes")) {
        ProofTreeNode n;
        for (const Json& dj : nj.at("forced")) {
            Deduction d;
            d.kind = dj.at("kind").get<std::string>() == "in" ? DeductionKind::ForcedIn
                                                              : DeductionKind::ForcedOut;
            d.subject = idx_of(dj.at("subject"));
            d.reason = idx_of(dj.at("reason"));
            n.forced.push_back(d);
        }
        n.result = node_result_from_name(nj.at("result").get<std::string>());
        if (nj.contains("conflict")) n.conflict_point = idx_of(nj.at("conflict"));
        if (n.result == ProofTreeNode::Result::Branch) {
            n.branch_point = idx_of(nj.at("branch"));
            for (const Json& c : nj.at("candidates")) n.candidates.push_back(idx_of(c));
            n.children = nj.at("children").get<std::vector<std::uint32_t>>();
        }
        tree.nodes.push_back(std::move(n));
    }
    return tree;
}

ReplayOutcome replay_transcript(const Json& transcript) {
    ReplayOutcome outcome;
    std::string command = transcript.value("command", "");
    Certificate recomputed;
    if (command == "reproduce hadamard") {
        recomputed = reproduce_hadamard();
    } else if (command == "reproduce prop-usc") {
        recomputed = reproduce_prop_usc();
    } else if (command == "reproduce appendix") {
        recomputed = reproduce_appendix();
    } else if (command == "reproduce layered") {
        const Json& inputs = transcript.at("inputs");
        GroupPtr base = Group::make(inputs.at("moduli").get<std::vector<Coord>>());
        PointSet tile = point_set_from_json(inputs.at("tile"));
        recomputed = reproduce_layered(base, tile);
    } else {
        outcome.message = "unknown command in transcript: '" + command + "'";
        return outcome;
    }
    outcome.recognized = true;
    outcome.verdict = recomputed.verdict;
    outcome.byte_identical = recomputed.transcript.dump(2) == transcript.dump(2);
    outcome.message = outcome.byte_identical
                          ? "recomputed transcript is byte-identical"
                          : "recomputed transcript differs from the stored one";
    return outcome;
}

} // namespace fuglab
