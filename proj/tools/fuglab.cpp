// Command-line front end: tiling/spectrum checks, searches, the built-in
// reproduction pipelines, certificate replay, and the small-group scans.
//
// Exit codes: 0 verified/accepted, 1 refuted, 2 usage or I/O error,
// 3 inconclusive (budget or depth exhausted).

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fuglab/builtin_data.hpp"
#include "fuglab/constructions.hpp"
#include "fuglab/cover_logic.hpp"
#include "fuglab/scan.hpp"
#include "fuglab/setfile.hpp"
#include "fuglab/spectral.hpp"
#include "fuglab/tiling.hpp"
#include "fuglab/transcript.hpp"

namespace {

using namespace fuglab;

constexpr int kExitAccepted = 0;
constexpr int kExitRefuted = 1;
constexpr int kExitError = 2;
constexpr int kExitInconclusive = 3;

int exit_code(Verdict v) {
    switch (v) {
        case Verdict::Accepted: return kExitAccepted;
        case Verdict::Refuted: return kExitRefuted;
        case Verdict::Inconclusive: return kExitInconclusive;
    }
    return kExitError;
}

std::vector<Coord> parse_coord_list(const std::string& text) {
    std::vector<Coord> out;
    std::string token;
    std::istringstream in(text);
    while (std::getline(in, token, ',')) {
        if (token.empty()) continue;
        out.push_back(std::stoll(token));
    }
    if (out.empty()) throw std::invalid_argument("empty integer list: '" + text + "'");
    return out;
}

std::optional<std::vector<Coord>> moduli_option(const std::string& text) {
    if (text.empty()) return std::nullopt;
    return parse_coord_list(text);
}

void write_text(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out << text;
}

void emit_transcript(const std::string& path, const Json& transcript) {
    if (path.empty()) return;
    write_text(path, transcript.dump(2) + "\n");
}

std::string coords_str(const Group& g, Idx p) {
    std::ostringstream os;
    os << "(";
    auto c = g.coords_of(p);
    for (std::size_t j = 0; j < c.size(); ++j) os << (j ? "," : "") << c[j];
    os << ")";
    return os.str();
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"fuglede-lab: exact tiling and spectral-set toolkit for finite abelian groups"};
    app.require_subcommand(1);

    std::string moduli_text;
    app.add_option("--moduli", moduli_text,
                   "moduli for matrix text set files, e.g. \"24,24,24\" (JSON files are "
                   "self-describing)");

    // check-tiling
    auto* check_tiling = app.add_subcommand("check-tiling", "verify a tiling pair");
    std::string tile_path, complement_path;
    bool fourier_audit = false;
    check_tiling->add_option("--tile", tile_path)->required();
    check_tiling->add_option("--complement", complement_path)->required();
    check_tiling->add_flag("--fourier-audit", fourier_audit,
                           "cross-check with the Fourier criterion");

    // enumerate-complements
    auto* enumerate = app.add_subcommand("enumerate-complements",
                                         "list tiling complements containing 0");
    std::string enum_tile_path, enum_output;
    std::size_t enum_limit = 64;
    enumerate->add_option("--tile", enum_tile_path)->required();
    enumerate->add_option("--limit", enum_limit);
    enumerate->add_option("--output", enum_output, "write complements as JSON lines");

    // pullback
    auto* pullback = app.add_subcommand("pullback",
                                        "tiling complement as a homomorphism preimage");
    std::string pb_tile_path, pb_y_text, pb_target_text, pb_output;
    Coord pb_target_modulus = 0;
    pullback->add_option("--tile", pb_tile_path)->required();
    pullback->add_option("--y", pb_y_text, "coefficient vector, e.g. \"9,8,0\"")->required();
    pullback->add_option("--target-complement", pb_target_text, "e.g. \"0,3,6,9\"")->required();
    pullback->add_option("--target-modulus", pb_target_modulus,
                         "target Z_m (default: group exponent)");
    pullback->add_option("--output", pb_output);

    // zero-set
    auto* zset_cmd = app.add_subcommand("zero-set", "dump the Fourier zero-set of a set");
    std::string zs_set_path, zs_output;
    zset_cmd->add_option("--set", zs_set_path)->required();
    zset_cmd->add_option("--output", zs_output);

    // check-spectrum
    auto* check_spectrum = app.add_subcommand("check-spectrum", "verify a spectrum candidate");
    std::string cs_set_path, cs_candidate_path;
    check_spectrum->add_option("--set", cs_set_path)->required();
    check_spectrum->add_option("--candidate", cs_candidate_path)->required();

    // find-spectrum
    auto* find_spec = app.add_subcommand("find-spectrum", "search for a spectrum");
    std::string fs_set_path;
    std::uint64_t fs_budget = 50'000'000;
    find_spec->add_option("--set", fs_set_path)->required();
    find_spec->add_option("--budget", fs_budget, "clique search node budget");

    // check-universal
    auto* check_universal = app.add_subcommand(
        "check-universal", "exhaustively check a universal-spectrum candidate");
    std::string cu_set_path, cu_candidate_path;
    std::size_t cu_limit = 100000;
    check_universal->add_option("--set", cu_set_path)->required();
    check_universal->add_option("--candidate", cu_candidate_path)->required();
    check_universal->add_option("--limit", cu_limit, "complement enumeration limit");

    // witness-table
    auto* witness = app.add_subcommand("witness-table",
                                       "common zero-set and witness set of complements");
    std::string wt_set_path, wt_complements;
    witness->add_option("--set", wt_set_path)->required();
    witness->add_option("--complements", wt_complements,
                        "directory of complement set files (or one file)")
        ->required();

    // prove-facts
    auto* prove = app.add_subcommand(
        "prove-facts", "closure of the progression facts for a tile and step set");
    std::string pf_tile_path, pf_pset_path;
    int pf_depth = 64;
    prove->add_option("--tile", pf_tile_path)->required();
    prove->add_option("--p-set", pf_pset_path)->required();
    prove->add_option("--depth", pf_depth);

    // refute
    auto* refute = app.add_subcommand("refute",
                                      "refute a partial cover by propagation and branching");
    std::string rf_tile_path, rf_in_path, rf_out_path, rf_tree_path;
    int rf_depth = 64;
    refute->add_option("--tile", rf_tile_path)->required();
    refute->add_option("--in", rf_in_path)->required();
    refute->add_option("--out", rf_out_path);
    refute->add_option("--depth", rf_depth);
    refute->add_option("--emit-tree", rf_tree_path, "write the proof tree as JSON");

    // replay-tree
    auto* replay_tree_cmd = app.add_subcommand("replay-tree", "re-validate an emitted proof tree");
    std::string rt_path;
    replay_tree_cmd->add_option("tree", rt_path)->required();

    // reproduce
    auto* reproduce = app.add_subcommand("reproduce", "run a built-in verification pipeline");
    reproduce->require_subcommand(1);
    std::string rp_output;
    reproduce->add_option("--output", rp_output, "write the certificate transcript");
    auto* rp_hadamard = reproduce->add_subcommand("hadamard", "log-Hadamard orthogonality");
    auto* rp_usc = reproduce->add_subcommand(
        "prop-usc", "the Z24^3 tile without universal spectrum, end to end");
    auto* rp_appendix = reproduce->add_subcommand(
        "appendix", "the Z6^4 universal-spectrum example, end to end");
    auto* rp_layered = reproduce->add_subcommand("layered", "layered construction round trip");
    std::string rl_group_text = "6", rl_tile_path;
    rp_layered->add_option("--group", rl_group_text, "moduli, e.g. \"6\"");
    rp_layered->add_option("--tile", rl_tile_path, "tile set file (default {0, |G|/2})");

    // lift
    auto* lift = app.add_subcommand("lift", "grid lift into the k-fold box group");
    std::string lift_set_path, lift_output;
    Coord lift_k = 1;
    lift->add_option("--set", lift_set_path)->required();
    lift->add_option("--k", lift_k)->required();
    lift->add_option("--output", lift_output);

    // fuglede-scan
    auto* fscan = app.add_subcommand("fuglede-scan",
                                     "tile vs spectral over all subset classes of Z_n");
    Coord fs_n_max = 12;
    fscan->add_option("--n-max", fs_n_max)->required();

    // universal-scan
    auto* uscan = app.add_subcommand("universal-scan",
                                     "universal spectra of all size-s tiles of Z_n");
    Coord us_n = 8, us_size = 4;
    std::size_t us_limit = 100000;
    uscan->add_option("--n", us_n)->required();
    uscan->add_option("--size", us_size)->required();
    uscan->add_option("--limit", us_limit);

    // replay
    auto* replay_cmd = app.add_subcommand("replay", "re-validate a certificate transcript");
    std::string replay_path;
    replay_cmd->add_option("transcript", replay_path)->required();

    CLI11_PARSE(app, argc, argv);

    try {
        auto moduli = moduli_option(moduli_text);

        if (*check_tiling) {
            PointSet tile = read_point_set(tile_path, moduli);
            PointSet comp = read_point_set(complement_path, moduli);
            TilingReport r = is_tiling_pair(tile, comp, fourier_audit);
            std::cout << "tiling " << verdict_name(r.verdict) << " (criterion " << r.criterion
                      << ", sizes " << tile.size() << "x" << comp.size() << ")\n";
            if (!r.collisions.empty())
                std::cout << "  " << r.collisions.size() << " common nonzero differences\n";
            return exit_code(r.verdict);
        }
        if (*enumerate) {
            PointSet tile = read_point_set(enum_tile_path, moduli);
            EnumerationResult r = enumerate_complements(tile, enum_limit);
            std::cout << "found " << r.complements.size() << " complement(s), "
                      << (r.exhausted ? "search exhausted" : "limit reached") << ", " << r.nodes
                      << " nodes\n";
            std::ostringstream lines;
            for (const PointSet& c : r.complements)
                lines << point_set_to_json(c).dump() << "\n";
            if (!enum_output.empty())
                write_text(enum_output, lines.str());
            else
                std::cout << lines.str();
            if (!r.complements.empty()) return kExitAccepted;
            return r.exhausted ? kExitRefuted : kExitInconclusive;
        }
        if (*pullback) {
            PointSet tile = read_point_set(pb_tile_path, moduli);
            Coord m = pb_target_modulus ? pb_target_modulus : tile.group()->exponent();
            Homomorphism phi(tile.group(), m, parse_coord_list(pb_y_text));
            std::vector<Coord> target = parse_coord_list(pb_target_text);
            PointSet c(phi.target(), std::vector<Idx>(target.begin(), target.end()));
            PointSet pulled = pullback_complement(tile, phi, c, true);
            std::cout << "pullback complement of size " << pulled.size()
                      << " verified (difference-set + Fourier)\n";
            if (!pb_output.empty())
                write_point_set(pb_output, pulled);
            else
                std::cout << point_set_to_json(pulled).dump() << "\n";
            return kExitAccepted;
        }
        if (*zset_cmd) {
            PointSet set = read_point_set(zs_set_path, moduli);
            ZeroSet z = zero_set(set);
            PointSet members = z.members();
            std::cout << "zero set has " << members.size() << " element(s)\n";
            if (!zs_output.empty())
                write_point_set(zs_output, members);
            else
                std::cout << point_set_to_json(members).dump() << "\n";
            return kExitAccepted;
        }
        if (*check_spectrum) {
            PointSet set = read_point_set(cs_set_path, moduli);
            PointSet cand = read_point_set(cs_candidate_path, moduli);
            SpectrumCertificate r = is_spectrum(set, cand);
            std::cout << "spectrum " << verdict_name(r.verdict);
            if (!r.size_ok) std::cout << " (size mismatch)";
            if (!r.violations.empty())
                std::cout << " (" << r.violations.size() << " violating differences)";
            std::cout << "\n";
            return exit_code(r.verdict);
        }
        if (*find_spec) {
            PointSet set = read_point_set(fs_set_path, moduli);
            CliqueSearchResult r = find_spectrum(set, fs_budget);
            std::cout << "spectrum search " << verdict_name(r.verdict) << " after " << r.nodes
                      << " nodes\n";
            if (r.witness) std::cout << point_set_to_json(*r.witness).dump() << "\n";
            return exit_code(r.verdict);
        }
        if (*check_universal) {
            PointSet set = read_point_set(cu_set_path, moduli);
            PointSet cand = read_point_set(cu_candidate_path, moduli);
            UniversalCheckResult r = universal_spectrum_check_exhaustive(set, cand, cu_limit);
            std::cout << "universal spectrum " << verdict_name(r.verdict) << " ("
                      << r.complements_checked << " complements checked)\n";
            return exit_code(r.verdict);
        }
        if (*witness) {
            PointSet set = read_point_set(wt_set_path, moduli);
            std::vector<std::string> files;
            if (std::filesystem::is_directory(wt_complements)) {
                for (const auto& entry : std::filesystem::directory_iterator(wt_complements))
                    if (entry.is_regular_file()) files.push_back(entry.path().string());
                std::sort(files.begin(), files.end());
            } else {
                files.push_back(wt_complements);
            }
            if (files.empty()) throw std::runtime_error("no complement files in " + wt_complements);
            std::vector<PointSet> comps;
            for (const std::string& p : files) comps.push_back(read_point_set(p, moduli));
            WitnessTable table = build_witness_table(set, comps);
            std::cout << "witness table over " << comps.size() << " complement(s): common zero set "
                      << table.common_zero_set().size() << ", witnesses " << table.witness_count()
                      << "\n";
            return kExitAccepted;
        }
        if (*prove) {
            PointSet tile = read_point_set(pf_tile_path, moduli);
            PointSet pset = read_point_set(pf_pset_path, moduli);
            CoverFactsReport r = prove_cover_facts(tile, pset, pf_depth);
            std::cout << "progression start " << (r.progression_start_forced ? "forced" : "OPEN")
                      << " (" << r.progression_start_nodes << " nodes)\n";
            for (const auto& s : r.step_closures)
                std::cout << "  step " << coords_str(*tile.group(), s.x) << " closure "
                          << (s.closed ? "closed" : "OPEN") << " (" << s.nodes << " nodes)\n";
            for (const auto& p : r.pair_exclusions)
                std::cout << "  pair " << coords_str(*tile.group(), p.x) << ","
                          << coords_str(*tile.group(), p.y) << " "
                          << (p.contradiction ? "contradiction" : "OPEN") << "\n";
            std::cout << "facts " << (r.ok ? "verified" : "failed") << "\n";
            return r.ok ? kExitAccepted : kExitRefuted;
        }
        if (*refute) {
            PointSet tile = read_point_set(rf_tile_path, moduli);
            PointSet in = read_point_set(rf_in_path, moduli);
            PointSet out = rf_out_path.empty() ? PointSet(tile.group(), {})
                                               : read_point_set(rf_out_path, moduli);
            RefutationResult r = refute_by_branching({tile, in, out}, rf_depth);
            std::cout << "refutation "
                      << (r.status == RefutationResult::Status::Closed ? "closed" : "inconclusive")
                      << " (" << r.nodes << " nodes, depth " << r.max_depth << ")"
                      << (r.found_complete_cover ? ", complete cover found" : "") << "\n";
            if (!rf_tree_path.empty())
                write_text(rf_tree_path, proof_tree_to_json(r.tree).dump() + "\n");
            return r.status == RefutationResult::Status::Closed ? kExitAccepted
                                                                : kExitInconclusive;
        }
        if (*replay_tree_cmd) {
            std::ifstream in(rt_path, std::ios::binary);
            if (!in) throw std::runtime_error("cannot open tree file: " + rt_path);
            Json j = Json::parse(in);
            ProofTree tree = proof_tree_from_json(j);
            std::string error;
            bool ok = replay_proof_tree(tree, &error);
            std::cout << "proof tree " << (ok ? "re-validated" : "INVALID: " + error) << " ("
                      << tree.nodes.size() << " nodes, "
                      << (tree.closed ? "closed" : "not closed") << ")\n";
            return ok ? kExitAccepted : kExitRefuted;
        }
        if (*reproduce) {
            Certificate cert;
            std::string default_name;
            if (*rp_hadamard) {
                cert = reproduce_hadamard();
                default_name = "hadamard-certificate.json";
            }
            if (*rp_usc) {
                cert = reproduce_prop_usc();
                default_name = "prop-usc-certificate.json";
            }
            if (*rp_appendix) {
                cert = reproduce_appendix();
                default_name = "appendix-certificate.json";
            }
            if (*rp_layered) {
                GroupPtr base = Group::make(parse_coord_list(rl_group_text));
                PointSet tile = rl_tile_path.empty()
                                    ? PointSet(base, {0, base->order() / 2})
                                    : read_point_set(rl_tile_path, moduli);
                cert = reproduce_layered(base, tile);
                default_name = "layered-certificate.json";
            }
            if (rp_output.empty()) rp_output = default_name;
            emit_transcript(rp_output, cert.transcript);
            std::cout << "transcript written to " << rp_output << "\n";
            for (const Json& step : cert.transcript["steps"]) {
                std::cout << "  [" << step.value("step", "?") << "]";
                if (step.contains("verdict"))
                    std::cout << " " << step["verdict"].get<std::string>();
                std::cout << "\n";
            }
            std::cout << "pipeline " << verdict_name(cert.verdict) << "\n";
            return exit_code(cert.verdict);
        }
        if (*lift) {
            PointSet set = read_point_set(lift_set_path, moduli);
            PointSet lifted = grid_lift(set, lift_k);
            std::cout << "lifted set has " << lifted.size() << " points in "
                      << lifted.group()->describe() << "\n";
            if (!lift_output.empty())
                write_point_set(lift_output, lifted);
            else
                std::cout << point_set_to_json(lifted).dump() << "\n";
            return kExitAccepted;
        }
        if (*fscan) {
            FugledeScanReport r = fuglede_scan(fs_n_max);
            std::cout << "n  classes  tiles  spectral  discrepancies\n";
            for (const auto& row : r.rows) {
                std::cout << row.n << "  " << row.classes << "  " << row.tiles << "  "
                          << row.spectral << "  " << row.discrepancies.size() << "\n";
                for (const PointSet& d : row.discrepancies)
                    std::cout << "    !! " << point_set_to_json(d).dump() << "\n";
            }
            std::cout << "total discrepancies: " << r.total_discrepancies << "\n";
            return r.total_discrepancies == 0 ? kExitAccepted : kExitRefuted;
        }
        if (*uscan) {
            UniversalScanReport r = universal_scan(us_n, us_size, us_limit);
            std::cout << "tiles of Z" << r.n << " with " << r.size << " points: "
                      << r.tiles_scanned << " scanned, " << r.without_universal
                      << " without universal spectrum, " << r.inconclusive << " inconclusive\n";
            for (const auto& e : r.entries) {
                std::cout << "  " << point_set_to_json(e.tile)["points"].dump() << ": "
                          << e.complement_count << " complements, universal "
                          << verdict_name(e.universal) << "\n";
                if (e.universal == Verdict::Refuted)
                    std::cout << "    !! no universal spectrum; common zero set size "
                              << e.common_zero_size << "\n";
            }
            return r.without_universal == 0 && r.inconclusive == 0 ? kExitAccepted : kExitRefuted;
        }
        if (*replay_cmd) {
            std::ifstream in(replay_path, std::ios::binary);
            if (!in) throw std::runtime_error("cannot open transcript: " + replay_path);
            Json j = Json::parse(in);
            ReplayOutcome r = replay_transcript(j);
            std::cout << "replay: " << r.message << "\n";
            if (!r.recognized) return kExitError;
            if (!r.byte_identical) return kExitRefuted;
            std::cout << "verdict " << verdict_name(r.verdict) << "\n";
            return exit_code(r.verdict);
        }
    } catch (const SetFileError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    } catch (const CLI::ParseError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitError;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
    return kExitError;
}
