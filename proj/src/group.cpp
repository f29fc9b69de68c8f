#include "fuglab/group.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace fuglab {

Group::Group(std::vector<Coord> moduli) : moduli_(std::move(moduli)) {
    if (moduli_.empty())
        throw std::invalid_argument("group needs at least one modulus");
    for (Coord n : moduli_) {
        if (n < 1)
            throw std::invalid_argument("group moduli must be >= 1");
        if (order_ > max_order / n)
            throw std::length_error("group order exceeds the materializable bound");
        order_ *= n;
        exponent_ = std::lcm(exponent_, n);
    }
    stride_.assign(moduli_.size(), 1);
    for (int j = static_cast<int>(moduli_.size()) - 2; j >= 0; --j)
        stride_[j] = stride_[j + 1] * moduli_[j + 1];
    pair_scale_.resize(moduli_.size());
    for (std::size_t j = 0; j < moduli_.size(); ++j)
        pair_scale_[j] = exponent_ / moduli_[j];
}

GroupPtr Group::make(std::vector<Coord> moduli) {
    return GroupPtr(new Group(std::move(moduli)));
}

Idx Group::index_of(std::span<const Coord> coords) const {
    if (coords.size() != moduli_.size())
        throw std::invalid_argument("coordinate count does not match group dimension");
    Idx idx = 0;
    for (std::size_t j = 0; j < moduli_.size(); ++j) {
        Coord c = coords[j] % moduli_[j];
        if (c < 0) c += moduli_[j];
        idx += stride_[j] * c;
    }
    return idx;
}

void Group::coords_of(Idx index, std::span<Coord> out) const {
    for (std::size_t j = 0; j < moduli_.size(); ++j) {
        out[j] = (index / stride_[j]) % moduli_[j];
    }
}

std::vector<Coord> Group::coords_of(Idx index) const {
    std::vector<Coord> out(moduli_.size());
    coords_of(index, out);
    return out;
}

Idx Group::add(Idx a, Idx b) const {
    Idx idx = 0;
    for (std::size_t j = 0; j < moduli_.size(); ++j) {
        Coord ca = (a / stride_[j]) % moduli_[j];
        Coord cb = (b / stride_[j]) % moduli_[j];
        Coord c = ca + cb;
        if (c >= moduli_[j]) c -= moduli_[j];
        idx += stride_[j] * c;
    }
    return idx;
}

Idx Group::negate(Idx a) const {
    Idx idx = 0;
    for (std::size_t j = 0; j < moduli_.size(); ++j) {
        Coord ca = (a / stride_[j]) % moduli_[j];
        Coord c = ca == 0 ? 0 : moduli_[j] - ca;
        idx += stride_[j] * c;
    }
    return idx;
}

Coord Group::pairing_exponent(Idx v, Idx x) const {
    Coord acc = 0;
    for (std::size_t j = 0; j < moduli_.size(); ++j) {
        Coord cv = (v / stride_[j]) % moduli_[j];
        Coord cx = (x / stride_[j]) % moduli_[j];
        acc += ((cv * pair_scale_[j]) % exponent_) * cx % exponent_;
    }
    return acc % exponent_;
}

Coord Group::pairing_exponent(std::span<const Coord> v, std::span<const Coord> x) const {
    return pairing_exponent(index_of(v), index_of(x));
}

std::string Group::describe() const {
    std::ostringstream os;
    os << "Z" << moduli_[0];
    std::size_t run = 1;
    for (std::size_t j = 1; j <= moduli_.size(); ++j) {
        if (j < moduli_.size() && moduli_[j] == moduli_[j - run]) {
            ++run;
            continue;
        }
        if (run > 1) os << "^" << run;
        if (j < moduli_.size()) os << " x Z" << moduli_[j];
        run = 1;
    }
    return os.str();
}

PointSet::PointSet(GroupPtr group, std::vector<Idx> points)
    : group_(std::move(group)), points_(std::move(points)) {
    if (!group_)
        throw std::invalid_argument("point set needs a group");
    for (Idx p : points_)
        if (p < 0 || p >= group_->order())
            throw std::out_of_range("point index outside the group");
    std::sort(points_.begin(), points_.end());
    points_.erase(std::unique(points_.begin(), points_.end()), points_.end());
}

PointSet PointSet::from_coords(GroupPtr group, const std::vector<std::vector<Coord>>& rows) {
    std::vector<Idx> pts;
    pts.reserve(rows.size());
    for (const auto& row : rows)
        pts.push_back(group->index_of(row));
    return PointSet(std::move(group), std::move(pts));
}

PointSet PointSet::from_matrix_columns(GroupPtr group, const std::vector<std::vector<Coord>>& rows) {
    if (rows.size() != static_cast<std::size_t>(group->dimension()))
        throw std::invalid_argument("matrix row count does not match group dimension");
    std::size_t cols = rows.empty() ? 0 : rows[0].size();
    for (const auto& row : rows)
        if (row.size() != cols)
            throw std::invalid_argument("matrix rows have unequal lengths");
    std::vector<Idx> pts;
    std::vector<Coord> buf(rows.size());
    for (std::size_t c = 0; c < cols; ++c) {
        for (std::size_t r = 0; r < rows.size(); ++r)
            buf[r] = rows[r][c];
        pts.push_back(group->index_of(buf));
    }
    return PointSet(std::move(group), std::move(pts));
}

bool PointSet::contains(Idx p) const {
    return std::binary_search(points_.begin(), points_.end(), p);
}

PointSet PointSet::translated(Idx c) const {
    std::vector<Idx> pts;
    pts.reserve(points_.size());
    for (Idx p : points_)
        pts.push_back(group_->add(p, c));
    return PointSet(group_, std::move(pts));
}

PointSet PointSet::negated() const {
    std::vector<Idx> pts;
    pts.reserve(points_.size());
    for (Idx p : points_)
        pts.push_back(group_->negate(p));
    return PointSet(group_, std::move(pts));
}

bool PointSet::operator==(const PointSet& other) const {
    return group_->same_presentation(*other.group_) && points_ == other.points_;
}

Subgroup::Subgroup(PointSet elements, std::vector<Idx> generators)
    : elements_(std::move(elements)), generators_(std::move(generators)) {}

PointSet difference_set(const PointSet& a) {
    if (a.empty())
        throw std::invalid_argument("difference_set: empty input");
    const Group& g = *a.group();
    std::vector<std::uint8_t> seen(g.order(), 0);
    for (Idx p : a)
        for (Idx q : a)
            seen[g.subtract(p, q)] = 1;
    std::vector<Idx> pts;
    for (Idx i = 0; i < g.order(); ++i)
        if (seen[i]) pts.push_back(i);
    return PointSet(a.group(), std::move(pts));
}

Subgroup subgroup_generated(const GroupPtr& group, std::span<const Idx> generators) {
    const Group& g = *group;
    std::vector<std::uint8_t> seen(g.order(), 0);
    std::vector<Idx> worklist{0};
    seen[0] = 1;
    std::size_t head = 0;
    while (head < worklist.size()) {
        Idx e = worklist[head++];
        for (Idx gen : generators) {
            Idx s = g.add(e, gen);
            if (!seen[s]) {
                seen[s] = 1;
                worklist.push_back(s);
            }
        }
    }
    std::vector<Idx> pts;
    for (Idx i = 0; i < g.order(); ++i)
        if (seen[i]) pts.push_back(i);
    return Subgroup(PointSet(group, std::move(pts)),
                    std::vector<Idx>(generators.begin(), generators.end()));
}

Subgroup smallest_containing_subgroup(const PointSet& a) {
    if (a.empty())
        throw std::invalid_argument("smallest_containing_subgroup: empty input");
    const Group& g = *a.group();
    Idx base = a[0];
    std::vector<Idx> gens;
    for (Idx p : a) {
        Idx d = g.subtract(p, base);
        if (d != 0) gens.push_back(d);
    }
    return subgroup_generated(a.group(), gens);
}

void require_same_group(const PointSet& a, const PointSet& b, const char* what) {
    if (!a.group()->same_presentation(*b.group())) {
        throw std::invalid_argument(std::string(what) + ": mismatched group presentations (" +
                                    a.group()->describe() + " vs " + b.group()->describe() + ")");
    }
}

} // namespace fuglab
