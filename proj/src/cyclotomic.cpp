#include "fuglab/cyclotomic.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <numbers>
#include <numeric>
#include <shared_mutex>
#include <stdexcept>
#include <unordered_map>

#include "fuglab/detail/checked.hpp"

namespace fuglab {

using detail::checked_add;
using detail::checked_mul;
using detail::checked_sub;

namespace {

// In-place remainder of `c` modulo the monic polynomial `phi`.
void reduce_mod(std::vector<std::int64_t>& c, const std::vector<std::int64_t>& phi) {
    const std::size_t deg = phi.size() - 1;
    if (c.size() <= deg) return;
    for (std::size_t i = c.size(); i-- > deg;) {
        std::int64_t q = c[i];
        if (q == 0) continue;
        c[i] = 0;
        for (std::size_t k = 0; k < deg; ++k)
            c[i - deg + k] = checked_sub(c[i - deg + k], checked_mul(q, phi[k]));
    }
}

// Exact division by a monic polynomial; throws if a remainder is left.
std::vector<std::int64_t> divide_exact(const std::vector<std::int64_t>& a,
                                       const std::vector<std::int64_t>& b) {
    std::vector<std::int64_t> rem = a;
    const std::size_t deg = b.size() - 1;
    std::vector<std::int64_t> quot(a.size() - deg, 0);
    for (std::size_t i = rem.size(); i-- > deg;) {
        std::int64_t q = rem[i];
        if (q == 0) continue;
        quot[i - deg] = q;
        for (std::size_t k = 0; k <= deg; ++k)
            rem[i - deg + k] = checked_sub(rem[i - deg + k], checked_mul(q, b[k]));
    }
    for (std::int64_t r : rem)
        if (r != 0)
            throw std::logic_error("cyclotomic polynomial division left a remainder");
    return quot;
}

const std::vector<std::int64_t>& cyclotomic_polynomial_locked(
    Coord n, std::unordered_map<Coord, std::vector<std::int64_t>>& cache) {
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    std::vector<std::int64_t> poly(n + 1, 0);
    poly[0] = -1;
    poly[n] = 1;  // x^n - 1
    for (Coord d = 1; d < n; ++d) {
        if (n % d != 0) continue;
        poly = divide_exact(poly, cyclotomic_polynomial_locked(d, cache));
    }
    return cache.emplace(n, std::move(poly)).first->second;
}

} // namespace

const std::vector<std::int64_t>& cyclotomic_polynomial(Coord n) {
    if (n < 1)
        throw std::invalid_argument("cyclotomic polynomial order must be >= 1");
    static std::shared_mutex mutex;
    static std::unordered_map<Coord, std::vector<std::int64_t>> cache;
    {
        std::shared_lock lock(mutex);
        auto it = cache.find(n);
        if (it != cache.end()) return it->second;
    }
    std::unique_lock lock(mutex);
    return cyclotomic_polynomial_locked(n, cache);
}

Cyclotomic::Cyclotomic(Coord order) : order_(order), coeffs_(order, 0) {
    if (order < 1)
        throw std::invalid_argument("root order must be >= 1");
}

Cyclotomic Cyclotomic::root(Coord order, Coord exponent) {
    Cyclotomic z(order);
    z.accumulate_root(exponent);
    return z;
}

Cyclotomic Cyclotomic::from_integer(Coord order, std::int64_t value) {
    Cyclotomic z(order);
    z.coeffs_[0] = value;
    return z;
}

void Cyclotomic::accumulate_root(Coord exponent, std::int64_t weight) {
    Coord e = exponent % order_;
    if (e < 0) e += order_;
    coeffs_[e] = checked_add(coeffs_[e], weight);
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& other) {
    if (order_ != other.order_)
        throw std::invalid_argument("cyclotomic addition across root orders; promote first");
    for (Coord k = 0; k < order_; ++k)
        coeffs_[k] = checked_add(coeffs_[k], other.coeffs_[k]);
    return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& other) {
    if (order_ != other.order_)
        throw std::invalid_argument("cyclotomic subtraction across root orders; promote first");
    for (Coord k = 0; k < order_; ++k)
        coeffs_[k] = checked_sub(coeffs_[k], other.coeffs_[k]);
    return *this;
}

Cyclotomic Cyclotomic::operator+(const Cyclotomic& other) const {
    Cyclotomic r = *this;
    r += other;
    return r;
}

Cyclotomic Cyclotomic::operator-(const Cyclotomic& other) const {
    Cyclotomic r = *this;
    r -= other;
    return r;
}

Cyclotomic Cyclotomic::operator*(const Cyclotomic& other) const {
    if (order_ != other.order_)
        throw std::invalid_argument("cyclotomic multiplication across root orders; promote first");
    Cyclotomic r(order_);
    for (Coord i = 0; i < order_; ++i) {
        if (coeffs_[i] == 0) continue;
        for (Coord j = 0; j < order_; ++j) {
            if (other.coeffs_[j] == 0) continue;
            Coord k = (i + j) % order_;
            r.coeffs_[k] = checked_add(r.coeffs_[k], checked_mul(coeffs_[i], other.coeffs_[j]));
        }
    }
    return r;
}

Cyclotomic Cyclotomic::operator*(std::int64_t scalar) const {
    Cyclotomic r(order_);
    for (Coord k = 0; k < order_; ++k)
        r.coeffs_[k] = checked_mul(coeffs_[k], scalar);
    return r;
}

Cyclotomic Cyclotomic::operator-() const {
    return *this * -1;
}

bool Cyclotomic::is_zero() const {
    std::vector<std::int64_t> c = coeffs_;
    reduce_mod(c, cyclotomic_polynomial(order_));
    return std::all_of(c.begin(), c.end(), [](std::int64_t v) { return v == 0; });
}

Cyclotomic Cyclotomic::reduced() const {
    Cyclotomic r(order_);
    std::vector<std::int64_t> c = coeffs_;
    reduce_mod(c, cyclotomic_polynomial(order_));
    for (std::size_t k = 0; k < c.size() && k < r.coeffs_.size(); ++k)
        r.coeffs_[k] = c[k];
    return r;
}

Cyclotomic Cyclotomic::promoted(Coord new_order) const {
    if (new_order % order_ != 0)
        throw std::invalid_argument("promotion target must be a multiple of the root order");
    Cyclotomic r(new_order);
    Coord factor = new_order / order_;
    for (Coord k = 0; k < order_; ++k)
        if (coeffs_[k] != 0) r.coeffs_[k * factor] = coeffs_[k];
    return r;
}

bool Cyclotomic::equals(const Cyclotomic& other) const {
    Coord common = std::lcm(order_, other.order_);
    Cyclotomic d = promoted(common);
    d -= other.promoted(common);
    return d.is_zero();
}

std::complex<double> Cyclotomic::complex_estimate() const {
    std::complex<double> acc{0.0, 0.0};
    const double step = 2.0 * std::numbers::pi / static_cast<double>(order_);
    for (Coord k = 0; k < order_; ++k) {
        if (coeffs_[k] == 0) continue;
        double angle = step * static_cast<double>(k);
        acc += static_cast<double>(coeffs_[k]) * std::complex<double>(std::cos(angle), std::sin(angle));
    }
    return acc;
}

Cyclotomic fourier_coefficient(const PointSet& t, Idx v) {
    if (t.empty())
        throw std::invalid_argument("fourier_coefficient: empty set");
    const Group& g = *t.group();
    Cyclotomic acc(g.exponent());
    for (Idx p : t)
        acc.accumulate_root(g.pairing_exponent(v, p));
    return acc;
}

ZeroSet::ZeroSet(GroupPtr group, std::vector<std::uint8_t> mask)
    : group_(std::move(group)), mask_(std::move(mask)) {
    for (std::uint8_t m : mask_)
        count_ += m ? 1 : 0;
}

PointSet ZeroSet::members() const {
    std::vector<Idx> pts;
    pts.reserve(count_);
    for (Idx i = 0; i < static_cast<Idx>(mask_.size()); ++i)
        if (mask_[i]) pts.push_back(i);
    return PointSet(group_, std::move(pts));
}

ZeroSet zero_set(const PointSet& t) {
    if (t.empty())
        throw std::invalid_argument("zero_set: empty set");
    const Group& g = *t.group();
    const Coord n = g.exponent();
    const int d = g.dimension();
    const auto& scale = g.pairing_scale();
    const auto& phi = cyclotomic_polynomial(n);

    // Flat coordinate table for the set; the per-dual pairing loop is the
    // hot path at Z24^3 scale.
    std::vector<Coord> tc(t.size() * d);
    {
        std::vector<Coord> buf(d);
        for (std::size_t i = 0; i < t.size(); ++i) {
            g.coords_of(t[i], buf);
            for (int j = 0; j < d; ++j) tc[i * d + j] = buf[j];
        }
    }

    std::vector<std::uint8_t> mask(g.order(), 0);
    std::vector<Coord> w(d);
    std::vector<Coord> vc(d);
    std::vector<std::int64_t> counts(n);
    for (Idx v = 0; v < g.order(); ++v) {
        if (v == 0) continue;  // chi_hat_T(0) = |T| > 0
        g.coords_of(v, vc);
        for (int j = 0; j < d; ++j) w[j] = (vc[j] * scale[j]) % n;
        std::fill(counts.begin(), counts.end(), 0);
        for (std::size_t i = 0; i < t.size(); ++i) {
            Coord e = 0;
            const Coord* row = &tc[i * d];
            for (int j = 0; j < d; ++j) e += w[j] * row[j];
            counts[e % n] += 1;
        }
        reduce_mod(counts, phi);
        bool zero = true;
        for (std::int64_t c : counts)
            if (c != 0) {
                zero = false;
                break;
            }
        if (zero) mask[v] = 1;
    }
    return ZeroSet(t.group(), std::move(mask));
}

} // namespace fuglab
