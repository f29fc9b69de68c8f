#include "fuglab/tiling.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

#include "cover_engine.hpp"
#include "fuglab/detail/hash.hpp"

namespace fuglab {

const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Accepted: return "accepted";
        case Verdict::Refuted: return "refuted";
        case Verdict::Inconclusive: return "inconclusive";
    }
    return "?";
}

bool tiling_difference_criterion(const PointSet& tile, const PointSet& complement,
                                 std::vector<Idx>* collisions) {
    require_same_group(tile, complement, "is_tiling_pair");
    const Group& g = *tile.group();
    if (collisions) collisions->clear();
    if (static_cast<Idx>(tile.size()) * static_cast<Idx>(complement.size()) != g.order())
        return false;
    std::vector<std::uint8_t> tile_diffs(g.order(), 0);
    for (Idx a : tile)
        for (Idx b : tile)
            tile_diffs[g.subtract(a, b)] = 1;
    bool ok = true;
    std::vector<std::uint8_t> seen(g.order(), 0);
    for (Idx a : complement)
        for (Idx b : complement) {
            Idx d = g.subtract(a, b);
            if (d != 0 && tile_diffs[d]) {
                ok = false;
                if (!collisions) return false;
                if (!seen[d]) {
                    seen[d] = 1;
                    collisions->push_back(d);
                }
            }
        }
    if (collisions) std::sort(collisions->begin(), collisions->end());
    return ok;
}

bool tiling_fourier_criterion(const PointSet& tile, const PointSet& complement) {
    require_same_group(tile, complement, "is_tiling_pair");
    const Group& g = *tile.group();
    if (static_cast<Idx>(tile.size()) * static_cast<Idx>(complement.size()) != g.order())
        return false;
    if (tile.empty() || complement.empty())
        return g.order() == 0;  // unreachable; group order >= 1
    ZeroSet zt = zero_set(tile);
    ZeroSet zc = zero_set(complement);
    for (Idx v = 1; v < g.order(); ++v)
        if (!zt.contains(v) && !zc.contains(v)) return false;
    return true;
}

TilingReport is_tiling_pair(const PointSet& tile, const PointSet& complement, bool fourier_audit) {
    TilingReport report;
    const Group& g = *tile.group();
    report.size_ok =
        static_cast<Idx>(tile.size()) * static_cast<Idx>(complement.size()) == g.order();
    report.difference_ok = tiling_difference_criterion(tile, complement, &report.collisions);
    report.criterion = "difference-set";
    bool accepted = report.size_ok && report.difference_ok;
    if (fourier_audit && !tile.empty() && !complement.empty()) {
        bool fourier = tiling_fourier_criterion(tile, complement);
        report.fourier_ok = fourier;
        report.criterion = "difference-set+fourier";
        if (fourier != accepted)
            throw std::logic_error("tiling criteria disagree on (" + tile.group()->describe() +
                                   "); this indicates an arithmetic bug");
    }
    report.verdict = accepted ? Verdict::Accepted : Verdict::Refuted;
    return report;
}

EnumerationResult enumerate_complements(const PointSet& tile, std::size_t limit) {
    if (tile.empty())
        throw std::invalid_argument("enumerate_complements: empty tile");
    const Group& g = *tile.group();
    if (g.order() % static_cast<Idx>(tile.size()) != 0)
        throw std::invalid_argument("enumerate_complements: |T| does not divide |G|");

    EnumerationResult result;
    detail::CoverEngine engine(tile.group(), tile.indices());
    struct Frame {
        std::size_t mark;
        std::vector<Idx> candidates;
        std::size_t next = 0;
        bool entered = false;
    };

    // Depth-first over candidate choices; the root asserts 0 in.
    std::vector<Frame> stack;
    stack.push_back({engine.mark(), {0}, 0, false});
    bool stopped = false;
    while (!stack.empty()) {
        Frame& frame = stack.back();
        if (!frame.entered) {
            frame.entered = true;
        } else {
            engine.rewind(frame.mark);
        }
        if (frame.next >= frame.candidates.size()) {
            stack.pop_back();
            continue;
        }
        Idx choice = frame.candidates[frame.next++];
        ++result.nodes;
        if (!engine.assert_in(choice, nullptr) || !engine.propagate(nullptr)) {
            engine.rewind(frame.mark);
            frame.entered = false;  // re-enter to try the next candidate
            continue;
        }
        if (engine.uncovered_count() == 0) {
            result.complements.emplace_back(tile.group(), engine.in_list());
            engine.rewind(frame.mark);
            frame.entered = false;
            if (result.complements.size() >= limit) {
                stopped = true;
                break;
            }
            continue;
        }
        Idx p = engine.least_uncovered();
        stack.push_back({engine.mark(), engine.viable_candidates(p), 0, false});
    }
    result.exhausted = !stopped;
    return result;
}

TilesResult tiles_group(const PointSet& tile) {
    TilesResult r;
    if (tile.empty()) {
        r.refuted = true;
        return r;
    }
    const Group& g = *tile.group();
    if (g.order() % static_cast<Idx>(tile.size()) != 0) {
        r.refuted = true;  // size obstruction
        return r;
    }
    EnumerationResult e = enumerate_complements(tile, 1);
    if (!e.complements.empty()) {
        r.complement = e.complements.front();
        return r;
    }
    r.refuted = e.exhausted;
    return r;
}

Homomorphism::Homomorphism(GroupPtr source, Coord target_modulus, std::vector<Coord> y)
    : source_(std::move(source)), modulus_(target_modulus), y_(std::move(y)) {
    const Coord n = source_->exponent();
    if (modulus_ < 1 || n % modulus_ != 0)
        throw std::invalid_argument("homomorphism target modulus must divide the group exponent");
    if (y_.size() != static_cast<std::size_t>(source_->dimension()))
        throw std::invalid_argument("homomorphism coefficient count does not match dimension");
    const auto& moduli = source_->moduli();
    step_.resize(y_.size());
    for (std::size_t j = 0; j < y_.size(); ++j) {
        Coord yj = y_[j] % moduli[j];
        if (yj < 0) yj += moduli[j];
        // Basis image y_j (N/n_j)(m/N) = y_j m / n_j must be integral.
        if ((yj * modulus_) % moduli[j] != 0)
            throw std::invalid_argument("coefficient vector does not induce a map into Z_m");
        step_[j] = (yj * modulus_ / moduli[j]) % modulus_;
    }
    target_ = Group::make({modulus_});
}

Coord Homomorphism::apply(Idx x) const {
    Coord acc = 0;
    for (std::size_t j = 0; j < step_.size(); ++j)
        acc = (acc + step_[j] * source_->digit(x, static_cast<int>(j))) % modulus_;
    return acc;
}

bool Homomorphism::is_surjective() const {
    Coord g = modulus_;
    for (Coord s : step_)
        g = std::gcd(g, s);
    return g == 1;
}

PointSet Homomorphism::image(const PointSet& s) const {
    std::vector<Idx> pts;
    pts.reserve(s.size());
    for (Idx p : s)
        pts.push_back(apply(p));
    return PointSet(target_, std::move(pts));
}

bool Homomorphism::injective_on(const PointSet& s) const {
    std::vector<Coord> values;
    values.reserve(s.size());
    for (Idx p : s)
        values.push_back(apply(p));
    std::sort(values.begin(), values.end());
    return std::adjacent_find(values.begin(), values.end()) == values.end();
}

PointSet Homomorphism::preimage(const PointSet& target_set) const {
    std::vector<std::uint8_t> wanted(modulus_, 0);
    for (Idx v : target_set)
        wanted[v] = 1;
    std::vector<Idx> pts;
    for (Idx x = 0; x < source_->order(); ++x)
        if (wanted[apply(x)]) pts.push_back(x);
    return PointSet(source_, std::move(pts));
}

PointSet pullback_complement(const PointSet& tile, const Homomorphism& phi,
                             const PointSet& target_complement, bool fourier_audit) {
    if (!tile.group()->same_presentation(*phi.source()))
        throw std::invalid_argument("pullback_complement: tile lives in a different group");
    if (!phi.injective_on(tile))
        throw std::invalid_argument("pullback_complement: homomorphism is not injective on the tile");
    PointSet img = phi.image(tile);
    TilingReport target_check = is_tiling_pair(img, target_complement, fourier_audit);
    if (target_check.verdict != Verdict::Accepted)
        throw std::invalid_argument("pullback_complement: image set and complement do not tile Z_m");
    PointSet pulled = phi.preimage(target_complement);
    TilingReport check = is_tiling_pair(tile, pulled, fourier_audit);
    if (check.verdict != Verdict::Accepted)
        throw std::logic_error("pullback_complement: pulled-back set failed re-verification");
    return pulled;
}

namespace {

std::uint64_t mask_fingerprint(const std::vector<std::uint8_t>& mask) {
    return detail::fnv1a64(std::string_view(reinterpret_cast<const char*>(mask.data()), mask.size()));
}

} // namespace

std::optional<Subgroup> divisibility_obstruction(const PointSet& l, std::size_t max_subgroups) {
    if (l.empty())
        throw std::invalid_argument("divisibility_obstruction: empty input");
    const GroupPtr& gp = l.group();
    const Group& g = *gp;
    const Idx size = static_cast<Idx>(l.size());

    Subgroup base = smallest_containing_subgroup(l);
    if (base.order() % size != 0) return base;

    // Breadth-first over the subgroup lattice above the base: extend by one
    // coset representative at a time, deduplicating by element bitmap.
    std::vector<Subgroup> queue{base};
    std::unordered_set<std::uint64_t> seen;
    {
        std::vector<std::uint8_t> mask(g.order(), 0);
        for (Idx e : base.elements()) mask[e] = 1;
        seen.insert(mask_fingerprint(mask));
    }
    std::size_t head = 0;
    while (head < queue.size() && queue.size() < max_subgroups) {
        Subgroup h = queue[head++];
        if (h.order() == g.order()) continue;
        // <H, rep> = <H, rep + h'> for h' in H, so one representative per coset.
        std::vector<std::uint8_t> tried(g.order(), 0);
        for (Idx e : h.elements()) tried[e] = 1;
        for (Idx rep = 0; rep < g.order() && queue.size() < max_subgroups; ++rep) {
            if (tried[rep]) continue;
            for (Idx e : h.elements()) tried[g.add(rep, e)] = 1;
            std::vector<Idx> gens = h.generators();
            gens.push_back(rep);
            Subgroup bigger = subgroup_generated(gp, gens);
            std::vector<std::uint8_t> mask(g.order(), 0);
            for (Idx e : bigger.elements()) mask[e] = 1;
            std::uint64_t fp = mask_fingerprint(mask);
            if (!seen.insert(fp).second) continue;
            if (bigger.order() % size != 0) return bigger;
            queue.push_back(std::move(bigger));
        }
    }
    return std::nullopt;
}

} // namespace fuglab
