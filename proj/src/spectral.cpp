#include "fuglab/spectral.hpp"

#include <algorithm>
#include <stdexcept>

namespace fuglab {

SpectrumCertificate is_spectrum(const PointSet& t, const PointSet& lambda) {
    require_same_group(t, lambda, "is_spectrum");
    SpectrumCertificate cert;
    cert.size_ok = t.size() == lambda.size();
    if (t.empty()) {
        cert.verdict = cert.size_ok ? Verdict::Accepted : Verdict::Refuted;
        return cert;
    }
    const Group& g = *t.group();
    ZeroSet zt = zero_set(t);
    std::vector<std::uint8_t> seen(g.order(), 0);
    for (Idx a : lambda)
        for (Idx b : lambda) {
            Idx d = g.subtract(a, b);
            if (d != 0 && !zt.contains(d) && !seen[d]) {
                seen[d] = 1;
                cert.violations.push_back(d);
            }
        }
    std::sort(cert.violations.begin(), cert.violations.end());
    cert.verdict =
        (cert.size_ok && cert.violations.empty()) ? Verdict::Accepted : Verdict::Refuted;
    return cert;
}

namespace {

struct CliqueContext {
    const Group* group;
    const std::vector<std::uint8_t>* conn;
    std::size_t target;
    std::uint64_t budget;
    std::uint64_t nodes = 0;
    bool budget_exceeded = false;
    std::vector<Idx> current;
    std::vector<Idx> best;

    bool adjacent(Idx a, Idx b) const { return (*conn)[group->subtract(a, b)] != 0; }
};

// Candidates ordered by descending degree within the candidate set, ties by
// index; the suffix rule (only candidates after the chosen one stay in the
// child) makes each clique visited exactly once.
bool clique_extend(CliqueContext& ctx, std::vector<Idx>& cands) {
    if (ctx.current.size() == ctx.target) {
        ctx.best = ctx.current;
        return true;
    }
    if (ctx.current.size() + cands.size() < ctx.target) return false;
    if (++ctx.nodes > ctx.budget) {
        ctx.budget_exceeded = true;
        return false;
    }

    std::vector<int> degree(cands.size(), 0);
    for (std::size_t i = 0; i < cands.size(); ++i)
        for (std::size_t j = i + 1; j < cands.size(); ++j)
            if (ctx.adjacent(cands[i], cands[j])) {
                ++degree[i];
                ++degree[j];
            }
    std::vector<std::size_t> order(cands.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (degree[a] != degree[b]) return degree[a] > degree[b];
        return cands[a] < cands[b];
    });
    std::vector<Idx> ordered(cands.size());
    for (std::size_t i = 0; i < order.size(); ++i) ordered[i] = cands[order[i]];

    std::vector<Idx> child;
    for (std::size_t i = 0; i < ordered.size(); ++i) {
        if (ctx.current.size() + (ordered.size() - i) < ctx.target) return false;
        Idx v = ordered[i];
        child.clear();
        for (std::size_t j = i + 1; j < ordered.size(); ++j)
            if (ctx.adjacent(ordered[j], v)) child.push_back(ordered[j]);
        ctx.current.push_back(v);
        if (clique_extend(ctx, child)) return true;
        ctx.current.pop_back();
        if (ctx.budget_exceeded) return false;
    }
    return false;
}

} // namespace

CliqueSearchResult clique_of_size(const GroupPtr& dual, const std::vector<std::uint8_t>& connection,
                                  std::size_t target, std::uint64_t node_budget) {
    if (connection.size() != static_cast<std::size_t>(dual->order()))
        throw std::invalid_argument("connection mask size does not match the group order");
    CliqueSearchResult result;
    if (target == 0) {
        result.verdict = Verdict::Accepted;
        result.witness = PointSet(dual, {});
        result.exhausted = true;
        return result;
    }
    CliqueContext ctx;
    ctx.group = dual.get();
    ctx.conn = &connection;
    ctx.target = target;
    ctx.budget = node_budget;
    ctx.current.push_back(0);  // translation normalization: 0 joins the clique
    std::vector<Idx> cands;
    for (Idx v = 1; v < dual->order(); ++v)
        if (connection[v]) cands.push_back(v);
    bool found = clique_extend(ctx, cands);
    result.nodes = ctx.nodes;
    if (found) {
        result.verdict = Verdict::Accepted;
        result.witness = PointSet(dual, ctx.best);
        return result;
    }
    if (ctx.budget_exceeded) {
        result.verdict = Verdict::Inconclusive;
        return result;
    }
    result.verdict = Verdict::Refuted;
    result.exhausted = true;
    return result;
}

CliqueSearchResult find_spectrum(const PointSet& t, std::uint64_t node_budget) {
    if (t.empty())
        throw std::invalid_argument("find_spectrum: empty set");
    ZeroSet zt = zero_set(t);
    return clique_of_size(t.group(), zt.mask(), t.size(), node_budget);
}

LagariasSzaboResult lagarias_szabo_search(const PointSet& t, std::uint64_t node_budget) {
    if (t.empty())
        throw std::invalid_argument("lagarias_szabo_search: empty set");
    const Group& g = *t.group();
    if (g.order() % static_cast<Idx>(t.size()) != 0)
        throw std::invalid_argument("lagarias_szabo_search: |T| does not divide |G|");
    ZeroSet zt = zero_set(t);
    std::vector<std::uint8_t> conn(g.order(), 0);
    for (Idx v = 1; v < g.order(); ++v)
        conn[v] = zt.contains(v) ? 0 : 1;  // Z_T^c minus 0
    LagariasSzaboResult result;
    result.search =
        clique_of_size(t.group(), conn, static_cast<std::size_t>(g.order() / t.size()), node_budget);
    if (result.search.verdict == Verdict::Accepted) {
        const PointSet& s = *result.search.witness;
        bool ok = static_cast<Idx>(s.size()) == g.order() / static_cast<Idx>(t.size());
        for (Idx a : s)
            for (Idx b : s) {
                Idx d = g.subtract(a, b);
                if (d != 0 && zt.contains(d)) ok = false;
            }
        result.reverified = ok;
        if (!ok)
            throw std::logic_error("lagarias_szabo_search: witness failed re-verification");
    }
    return result;
}

DualityCertificate no_lagarias_szabo_via_duality(const PointSet& t, const PointSet& l) {
    require_same_group(t, l, "no_lagarias_szabo_via_duality");
    DualityCertificate cert;
    const Group& g = *t.group();
    cert.spectrum_size = static_cast<Idx>(l.size());
    cert.required_size = t.empty() ? 0 : g.order() / static_cast<Idx>(t.size());
    cert.spectrum_of_t = is_spectrum(t, l);
    if (cert.spectrum_of_t.verdict != Verdict::Accepted) {
        cert.reason = "candidate is not a spectrum of the set";
        return cert;
    }
    cert.obstruction = divisibility_obstruction(l);
    if (!cert.obstruction) {
        cert.reason = "no divisibility obstruction found; the spectrum may tile";
        return cert;
    }
    // Any S with |S| = |G|/|T| and S-S in the zero-set complement would tile
    // the dual against every spectrum of T, in particular against L; L cannot
    // tile, so no such S exists.
    cert.verdict = Verdict::Accepted;
    cert.reason = "spectrum cannot tile: translate lies in a subgroup of order " +
                  std::to_string(cert.obstruction->order()) + " not divisible by " +
                  std::to_string(l.size());
    return cert;
}

WitnessTable::WitnessTable(PointSet tile, std::vector<PointSet> complements)
    : tile_(std::move(tile)), complements_(std::move(complements)) {
    if (complements_.empty())
        throw std::invalid_argument("witness table needs at least one complement");
    const Group& g = *tile_.group();
    common_zero_.assign(g.order(), 1);
    common_zero_[0] = 0;
    for (const PointSet& c : complements_) {
        TilingReport check = is_tiling_pair(tile_, c);
        if (check.verdict != Verdict::Accepted)
            throw std::invalid_argument("witness table: listed complement fails verification");
        ZeroSet zc = zero_set(c);
        for (Idx v = 1; v < g.order(); ++v)
            if (!zc.contains(v)) common_zero_[v] = 0;
    }
    for (Idx v = 1; v < g.order(); ++v)
        if (!common_zero_[v]) ++witness_count_;
}

PointSet WitnessTable::common_zero_set() const {
    std::vector<Idx> pts;
    for (Idx v = 0; v < static_cast<Idx>(common_zero_.size()); ++v)
        if (common_zero_[v]) pts.push_back(v);
    return PointSet(tile_.group(), std::move(pts));
}

PointSet WitnessTable::witness_set() const {
    std::vector<Idx> pts;
    for (Idx v = 1; v < static_cast<Idx>(common_zero_.size()); ++v)
        if (!common_zero_[v]) pts.push_back(v);
    return PointSet(tile_.group(), std::move(pts));
}

Cyclotomic WitnessTable::entry(Idx witness, std::size_t complement_index) const {
    return fourier_coefficient(complements_.at(complement_index), witness);
}

bool WitnessTable::row_has_nonzero(Idx witness) const {
    for (std::size_t j = 0; j < complements_.size(); ++j)
        if (!entry(witness, j).is_zero()) return true;
    return false;
}

WitnessTable build_witness_table(const PointSet& tile, const std::vector<PointSet>& complements) {
    return WitnessTable(tile, complements);
}

UniversalSpectrumResult no_universal_spectrum_certificate(const PointSet& tile,
                                                          const std::vector<PointSet>& complements,
                                                          std::uint64_t node_budget) {
    WitnessTable table(tile, complements);
    const Group& g = *tile.group();
    UniversalSpectrumResult result;
    result.target_size = g.order() / static_cast<Idx>(tile.size());
    CliqueSearchResult clique = clique_of_size(tile.group(), table.common_zero_mask(),
                                               static_cast<std::size_t>(result.target_size),
                                               node_budget);
    result.nodes = clique.nodes;
    if (clique.verdict == Verdict::Accepted) {
        // A clique in D is a universal-spectrum candidate for the listed
        // complements: the certificate is refused.
        result.verdict = Verdict::Refuted;
        result.universal_spectrum_candidate = clique.witness;
        return result;
    }
    result.verdict = clique.exhausted ? Verdict::Accepted : Verdict::Inconclusive;
    return result;
}

UniversalCheckResult universal_spectrum_check_exhaustive(const PointSet& tile, const PointSet& s,
                                                         std::size_t enumeration_limit) {
    require_same_group(tile, s, "universal_spectrum_check_exhaustive");
    const Group& g = *tile.group();
    if (static_cast<Idx>(s.size()) * static_cast<Idx>(tile.size()) != g.order())
        throw std::invalid_argument("universal check: |S| must equal |G|/|T|");
    UniversalCheckResult result;
    // Complements are enumerated 0-normalized; zero-sets are translation
    // invariant, so this loses no generality.
    EnumerationResult e = enumerate_complements(tile, enumeration_limit);
    for (const PointSet& c : e.complements) {
        ++result.complements_checked;
        if (is_spectrum(c, s).verdict != Verdict::Accepted) {
            result.verdict = Verdict::Refuted;
            result.failing_complement = c;
            return result;
        }
    }
    result.verdict = e.exhausted ? Verdict::Accepted : Verdict::Inconclusive;
    return result;
}

} // namespace fuglab
