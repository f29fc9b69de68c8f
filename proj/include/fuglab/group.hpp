#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace fuglab {

using Coord = long long;
using Idx = std::int64_t;

class Group;
using GroupPtr = std::shared_ptr<const Group>;

/// A finite abelian group presented as Z_{n1} x ... x Z_{nd}. Elements are
/// addressed by a mixed-radix index whose ordering coincides with the
/// lexicographic order of coordinate vectors; the dual group shares the same
/// presentation, with the pairing expressed as an exponent mod the group
/// exponent N = lcm(n1,...,nd).
class Group {
public:
    // Groups are materialized in memory; anything larger is rejected.
    static constexpr Idx max_order = 10'000'000;

    static GroupPtr make(std::vector<Coord> moduli);

    int dimension() const { return static_cast<int>(moduli_.size()); }
    Idx order() const { return order_; }
    Coord exponent() const { return exponent_; }
    const std::vector<Coord>& moduli() const { return moduli_; }

    bool same_presentation(const Group& other) const { return moduli_ == other.moduli_; }

    Idx index_of(std::span<const Coord> coords) const;  // coordinates reduced mod n_j
    void coords_of(Idx index, std::span<Coord> out) const;
    std::vector<Coord> coords_of(Idx index) const;
    Coord digit(Idx index, int j) const { return (index / stride_[j]) % moduli_[j]; }

    Idx add(Idx a, Idx b) const;
    Idx negate(Idx a) const;
    Idx subtract(Idx a, Idx b) const { return add(a, negate(b)); }

    /// Exponent e with <v,x> realized as zeta_N^e, i.e.
    /// e = sum_j v_j x_j (N/n_j) mod N.
    Coord pairing_exponent(Idx v, Idx x) const;
    Coord pairing_exponent(std::span<const Coord> v, std::span<const Coord> x) const;

    /// N/n_j factors used by the pairing; exposed for hot loops.
    const std::vector<Coord>& pairing_scale() const { return pair_scale_; }

    std::string describe() const;  // "Z24^3"-style label for diagnostics

private:
    explicit Group(std::vector<Coord> moduli);

    std::vector<Coord> moduli_;
    std::vector<Idx> stride_;
    std::vector<Coord> pair_scale_;
    Idx order_ = 1;
    Coord exponent_ = 1;
};

/// A finite subset of a group: strictly increasing, duplicate-free element
/// indices. Value type; all operations produce new sets.
class PointSet {
public:
    PointSet(GroupPtr group, std::vector<Idx> points);
    static PointSet from_coords(GroupPtr group, const std::vector<std::vector<Coord>>& rows);
    /// Paper-style matrix: d rows, one column per element.
    static PointSet from_matrix_columns(GroupPtr group, const std::vector<std::vector<Coord>>& rows);

    const GroupPtr& group() const { return group_; }
    std::size_t size() const { return points_.size(); }
    bool empty() const { return points_.empty(); }
    Idx operator[](std::size_t i) const { return points_[i]; }
    const std::vector<Idx>& indices() const { return points_; }
    bool contains(Idx p) const;
    std::vector<Coord> coords(std::size_t i) const { return group_->coords_of(points_[i]); }

    PointSet translated(Idx c) const;
    PointSet negated() const;

    std::vector<Idx>::const_iterator begin() const { return points_.begin(); }
    std::vector<Idx>::const_iterator end() const { return points_.end(); }

    bool operator==(const PointSet& other) const;

private:
    GroupPtr group_;
    std::vector<Idx> points_;
};

class Subgroup {
public:
    Subgroup(PointSet elements, std::vector<Idx> generators);

    const PointSet& elements() const { return elements_; }
    const std::vector<Idx>& generators() const { return generators_; }
    Idx order() const { return static_cast<Idx>(elements_.size()); }
    bool contains(Idx p) const { return elements_.contains(p); }

private:
    PointSet elements_;
    std::vector<Idx> generators_;
};

/// {a - a' : a, a' in A}. Contains 0, closed under negation.
PointSet difference_set(const PointSet& a);

/// Smallest subgroup containing the generators (the trivial subgroup for an
/// empty list).
Subgroup subgroup_generated(const GroupPtr& group, std::span<const Idx> generators);

/// Smallest subgroup containing a translate of A, namely the subgroup
/// generated by A - min(A).
Subgroup smallest_containing_subgroup(const PointSet& a);

void require_same_group(const PointSet& a, const PointSet& b, const char* what);

} // namespace fuglab
