#include "cover_engine.hpp"

#include <algorithm>
#include <stdexcept>

namespace fuglab::detail {

CoverEngine::CoverEngine(GroupPtr group, const std::vector<Idx>& tile)
    : group_(std::move(group)), tile_(tile) {
    if (tile_.empty())
        throw std::invalid_argument("cover engine needs a nonempty tile");
    const Idx order = group_->order();
    status_.assign(order, 0);
    viable_.assign(order, 1);
    covered_.assign(order, 0);
    // Every point starts with one candidate per tile element.
    cand_count_.assign(order, static_cast<std::int32_t>(tile_.size()));
    uncovered_ = order;
}

void CoverEngine::set_status(Idx c, std::int8_t s) {
    trail_.push_back({TrailOp::Status, c, status_[c]});
    status_[c] = s;
}

bool CoverEngine::kill_viable(Idx c, Idx reason, std::vector<EngineDeduction>* log, bool record) {
    if (!viable_[c]) return true;
    trail_.push_back({TrailOp::Viable, c, 0});
    viable_[c] = 0;
    if (record && log) log->push_back({EngineDeduction::ForcedOut, c, reason});
    const Group& g = *group_;
    for (Idx t : tile_) {
        Idx q = g.add(c, t);
        if (covered_[q]) continue;
        trail_.push_back({TrailOp::CandDec, q, 0});
        if (--cand_count_[q] == 1) {
            force_queue_.push_back(q);
        } else if (cand_count_[q] == 0) {
            zero_queue_.push_back(q);
        }
    }
    return true;
}

bool CoverEngine::assert_in(Idx c, std::vector<EngineDeduction>* log) {
    const Group& g = *group_;
    if (status_[c] == 2 || !viable_[c]) {
        // Either explicitly excluded or its translate collides with the
        // current cover: adding it double-covers something.
        conflict_point_ = c;
        return false;
    }
    set_status(c, 1);
    trail_.push_back({TrailOp::InListPush, c, 0});
    in_list_.push_back(c);
    trail_.push_back({TrailOp::Viable, c, 0});
    viable_[c] = 0;
    for (Idx t : tile_) {
        Idx p = g.add(c, t);
        if (covered_[p]) {
            conflict_point_ = p;
            return false;
        }
        trail_.push_back({TrailOp::Cover, p, 0});
        covered_[p] = 1;
        --uncovered_;
    }
    // Candidates whose translate now collides with the enlarged cover.
    for (Idx t : tile_) {
        Idx p = g.add(c, t);
        for (Idx t2 : tile_) {
            Idx q = g.subtract(p, t2);
            if (viable_[q]) kill_viable(q, p, log, true);
        }
    }
    return true;
}

bool CoverEngine::assert_out(Idx c) {
    if (status_[c] == 1) {
        conflict_point_ = c;
        return false;
    }
    if (status_[c] == 0) set_status(c, 2);
    return kill_viable(c, c, nullptr, false);
}

bool CoverEngine::propagate(std::vector<EngineDeduction>* log) {
    std::size_t fi = 0, zi = 0;
    while (zi < zero_queue_.size() || fi < force_queue_.size()) {
        if (zi < zero_queue_.size()) {
            Idx p = zero_queue_[zi++];
            if (!covered_[p] && cand_count_[p] == 0) {
                conflict_point_ = p;
                zero_queue_.clear();
                force_queue_.clear();
                return false;
            }
            continue;
        }
        Idx p = force_queue_[fi++];
        if (covered_[p] || cand_count_[p] != 1) continue;
        // The unique remaining candidate is forced in.
        Idx forced = -1;
        const Group& g = *group_;
        for (Idx t : tile_) {
            Idx c = g.subtract(p, t);
            if (viable_[c]) {
                forced = c;
                break;
            }
        }
        if (forced < 0) {
            conflict_point_ = p;
            zero_queue_.clear();
            force_queue_.clear();
            return false;
        }
        if (log) log->push_back({EngineDeduction::ForcedIn, forced, p});
        if (!assert_in(forced, log)) {
            zero_queue_.clear();
            force_queue_.clear();
            return false;
        }
    }
    zero_queue_.clear();
    force_queue_.clear();
    return true;
}

Idx CoverEngine::least_uncovered() const {
    for (Idx p = 0; p < static_cast<Idx>(covered_.size()); ++p)
        if (!covered_[p]) return p;
    return -1;
}

Idx CoverEngine::fewest_candidate_point() const {
    Idx best = -1;
    std::int32_t best_count = 0;
    for (Idx p = 0; p < static_cast<Idx>(covered_.size()); ++p) {
        if (covered_[p]) continue;
        if (best < 0 || cand_count_[p] < best_count) {
            best = p;
            best_count = cand_count_[p];
        }
    }
    return best;
}

std::vector<Idx> CoverEngine::viable_candidates(Idx p) const {
    std::vector<Idx> out;
    const Group& g = *group_;
    for (Idx t : tile_) {
        Idx c = g.subtract(p, t);
        if (viable_[c]) out.push_back(c);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

void CoverEngine::rewind(std::size_t mark) {
    while (trail_.size() > mark) {
        TrailEntry e = trail_.back();
        trail_.pop_back();
        switch (e.op) {
            case TrailOp::Status: status_[e.where] = e.old_status; break;
            case TrailOp::Viable: viable_[e.where] = 1; break;
            case TrailOp::Cover:
                covered_[e.where] = 0;
                ++uncovered_;
                break;
            case TrailOp::CandDec: ++cand_count_[e.where]; break;
            case TrailOp::InListPush: in_list_.pop_back(); break;
        }
    }
    conflict_point_ = -1;
    force_queue_.clear();
    zero_queue_.clear();
}

} // namespace fuglab::detail
