#pragma once

#include <string>

#include <json.hpp>

#include "fuglab/cover_logic.hpp"
#include "fuglab/group.hpp"
#include "fuglab/tiling.hpp"

namespace fuglab {

using Json = nlohmann::ordered_json;

inline constexpr int kTranscriptSchemaVersion = 1;
inline constexpr const char* kLibraryVersion = "fuglede-lab 1.0.0";

/// A verification outcome plus its machine-checkable JSON transcript.
/// Transcripts carry no volatile data (no clocks, no paths), so a replay of
/// the same pipeline must reproduce them byte for byte.
struct Certificate {
    Verdict verdict = Verdict::Refuted;
    Json transcript;
};

Json transcript_header(const std::string& command);

Json point_set_to_json(const PointSet& s);
PointSet point_set_from_json(const Json& j);
Json coords_json(const Group& g, Idx p);

std::uint64_t file_checksum(const std::string& path);

Json proof_tree_to_json(const ProofTree& tree);
ProofTree proof_tree_from_json(const Json& j);

struct ReplayOutcome {
    bool recognized = false;      // command known to the replayer
    bool byte_identical = false;  // recomputed transcript matches
    Verdict verdict = Verdict::Refuted;
    std::string message;
};

/// Re-runs the pipeline a transcript came from and compares serialized bytes.
ReplayOutcome replay_transcript(const Json& transcript);

} // namespace fuglab
