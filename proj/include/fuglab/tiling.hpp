#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fuglab/cyclotomic.hpp"
#include "fuglab/group.hpp"

namespace fuglab {

enum class Verdict { Accepted, Refuted, Inconclusive };

const char* verdict_name(Verdict v);

/// Outcome of a tiling-pair check. The difference-set criterion is primary;
/// when the Fourier cross-check is requested the two criteria must agree or
/// the process aborts (a disagreement is an arithmetic bug, not a result).
struct TilingReport {
    Verdict verdict = Verdict::Refuted;
    bool size_ok = false;
    bool difference_ok = false;
    std::optional<bool> fourier_ok;      // present when audited
    std::vector<Idx> collisions;         // nonzero elements of (T-T) cap (T'-T')
    std::string criterion;               // "difference-set" or "difference-set+fourier"
};

/// |T| |T'| = |G| together with (T-T) cap (T'-T') = {0}.
bool tiling_difference_criterion(const PointSet& tile, const PointSet& complement,
                                 std::vector<Idx>* collisions = nullptr);

/// |T| |T'| = |G| together with Z_T cup Z_T' = dual minus {0}.
bool tiling_fourier_criterion(const PointSet& tile, const PointSet& complement);

TilingReport is_tiling_pair(const PointSet& tile, const PointSet& complement,
                            bool fourier_audit = false);

/// Exact-cover backtracking over translates of T, normalized to complements
/// containing 0. Branches on the least uncovered element with candidates in
/// lexicographic order, so the output order is deterministic; unit
/// propagation only prunes dead subtrees and cannot reorder solutions.
struct EnumerationResult {
    std::vector<PointSet> complements;
    bool exhausted = false;              // full search space explored
    std::uint64_t nodes = 0;
};

EnumerationResult enumerate_complements(const PointSet& tile, std::size_t limit);

struct TilesResult {
    std::optional<PointSet> complement;
    bool refuted = false;                // exhaustion (or size obstruction) proves no complement
};

TilesResult tiles_group(const PointSet& tile);

/// Homomorphism G -> Z_m (m dividing the exponent N) induced by a dual
/// coefficient vector y: x maps to sum_j y_j x_j (N/n_j) (m/N). For uniform
/// G = Z_n^d with m = n this is the inner product <y,x> mod n.
class Homomorphism {
public:
    Homomorphism(GroupPtr source, Coord target_modulus, std::vector<Coord> y);

    const GroupPtr& source() const { return source_; }
    const GroupPtr& target() const { return target_; }
    Coord target_modulus() const { return modulus_; }
    const std::vector<Coord>& coefficients() const { return y_; }

    Coord apply(Idx x) const;

    /// gcd of the per-coordinate images together with m equals 1.
    bool is_surjective() const;

    /// Image as a set in Z_m (collapses collisions).
    PointSet image(const PointSet& s) const;
    bool injective_on(const PointSet& s) const;
    PointSet preimage(const PointSet& target_set) const;

private:
    GroupPtr source_;
    GroupPtr target_;
    Coord modulus_;
    std::vector<Coord> y_;
    std::vector<Coord> step_;  // per-coordinate image of the basis vectors
};

/// Szegedy pullback: phi injective on T and (phi(T), C) a tiling pair in Z_m
/// give the complement phi^{-1}(C) of T; the result is re-verified, never
/// trusted.
PointSet pullback_complement(const PointSet& tile, const Homomorphism& phi,
                             const PointSet& target_complement, bool fourier_audit = false);

/// A subgroup H containing a translate of L with |L| not dividing |H|, when
/// one exists among the subgroups above smallest_containing_subgroup(L).
/// Absence proves nothing. The lattice walk visits at most `max_subgroups`
/// distinct subgroups.
std::optional<Subgroup> divisibility_obstruction(const PointSet& l,
                                                 std::size_t max_subgroups = 4096);

} // namespace fuglab
