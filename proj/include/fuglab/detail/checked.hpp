#pragma once

#include <cstdint>
#include <stdexcept>

namespace fuglab::detail {

// Coefficient arithmetic that refuses to wrap. A silently overflowed
// coefficient would corrupt every zero-test downstream, so out-of-range
// values abort the computation instead.

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r))
        throw std::overflow_error("coefficient overflow in exact arithmetic (add)");
    return r;
}

inline std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_sub_overflow(a, b, &r))
        throw std::overflow_error("coefficient overflow in exact arithmetic (sub)");
    return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r))
        throw std::overflow_error("coefficient overflow in exact arithmetic (mul)");
    return r;
}

} // namespace fuglab::detail
