#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>

namespace fuglab::detail {

inline long long mod_reduce(long long a, long long m) {
    long long r = a % m;
    return r < 0 ? r + m : r;
}

// Extended gcd: returns g = gcd(a,b) and x,y with a*x + b*y = g.
inline long long egcd(long long a, long long b, long long& x, long long& y) {
    if (b == 0) {
        x = 1;
        y = 0;
        return a;
    }
    long long x1, y1;
    long long g = egcd(b, a % b, x1, y1);
    x = y1;
    y = x1 - (a / b) * y1;
    return g;
}

inline long long mod_inverse(long long a, long long m) {
    long long x, y;
    long long g = egcd(mod_reduce(a, m), m, x, y);
    if (g != 1)
        throw std::domain_error("mod_inverse: arguments not coprime");
    return mod_reduce(x, m);
}

// Solution of x = a (mod m), x = b (mod n) for coprime m, n; result mod m*n.
inline long long crt_pair(long long a, long long m, long long b, long long n) {
    long long inv = mod_inverse(m % n, n);
    long long diff = mod_reduce(b - a, n);
    return mod_reduce(a + m * ((diff * inv) % n), m * n);
}

} // namespace fuglab::detail
