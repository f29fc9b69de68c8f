#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "fuglab/group.hpp"

namespace fuglab {

/// Exact value of an integer combination sum_k c_k zeta_n^k of n-th roots of
/// unity. Ring operations only; zero-testing reduces the coefficient
/// polynomial modulo the n-th cyclotomic polynomial, never floating point.
/// Coefficients are overflow-checked 64-bit integers: a computation that
/// would leave the representable range throws instead of wrapping.
class Cyclotomic {
public:
    explicit Cyclotomic(Coord order);
    static Cyclotomic root(Coord order, Coord exponent);
    static Cyclotomic from_integer(Coord order, std::int64_t value);

    Coord order() const { return order_; }
    const std::vector<std::int64_t>& coefficients() const { return coeffs_; }

    void accumulate_root(Coord exponent, std::int64_t weight = 1);

    Cyclotomic& operator+=(const Cyclotomic& other);
    Cyclotomic& operator-=(const Cyclotomic& other);
    Cyclotomic operator+(const Cyclotomic& other) const;
    Cyclotomic operator-(const Cyclotomic& other) const;
    Cyclotomic operator*(const Cyclotomic& other) const;
    Cyclotomic operator*(std::int64_t scalar) const;
    Cyclotomic operator-() const;

    bool is_zero() const;
    /// Canonical form: coefficients reduced mod Phi_n, zero-padded to length n.
    Cyclotomic reduced() const;
    /// Re-expresses the value over a root order that this order divides.
    Cyclotomic promoted(Coord new_order) const;
    /// Representation-independent equality (promotes to the lcm order).
    bool equals(const Cyclotomic& other) const;
    bool operator==(const Cyclotomic& other) const { return equals(other); }

    /// Floating-point evaluation for reporting only; no decision in the
    /// library depends on it.
    std::complex<double> complex_estimate() const;

private:
    Coord order_;
    std::vector<std::int64_t> coeffs_;
};

/// Phi_n as ascending coefficients (monic). Computed by dividing x^n - 1 by
/// Phi_d over the proper divisors d; cached per n, safe for concurrent reads.
const std::vector<std::int64_t>& cyclotomic_polynomial(Coord n);

/// Exact chi_hat_T(v) = sum_{t in T} zeta_N^{<v,t>} over the group exponent N.
Cyclotomic fourier_coefficient(const PointSet& t, Idx v);

/// Z_T = { v != 0 : chi_hat_T(v) = 0 }, with an O(1) membership mask.
class ZeroSet {
public:
    ZeroSet(GroupPtr group, std::vector<std::uint8_t> mask);

    const GroupPtr& group() const { return group_; }
    bool contains(Idx v) const { return mask_[v] != 0; }
    const std::vector<std::uint8_t>& mask() const { return mask_; }
    PointSet members() const;
    std::size_t size() const { return count_; }

private:
    GroupPtr group_;
    std::vector<std::uint8_t> mask_;
    std::size_t count_ = 0;
};

ZeroSet zero_set(const PointSet& t);

} // namespace fuglab
