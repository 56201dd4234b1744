#pragma once

#include <cstdint>
#include <numeric>
#include <vector>

namespace ltsig {

inline std::uint64_t euler_phi(std::uint64_t n) {
    std::uint64_t result = n;
    for (std::uint64_t p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            while (n % p == 0) n /= p;
            result -= result / p;
        }
    }
    if (n > 1) result -= result / n;
    return result;
}

inline std::vector<std::uint64_t> divisors_of(std::uint64_t n) {
    std::vector<std::uint64_t> small, large;
    for (std::uint64_t d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            small.push_back(d);
            if (d != n / d) large.push_back(n / d);
        }
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

// d = p^r for a prime p, r >= 1
inline bool is_prime_power(std::uint64_t d, std::uint64_t* prime_out = nullptr) {
    if (d < 2) return false;
    std::uint64_t p = 0;
    for (std::uint64_t q = 2; q * q <= d; ++q) {
        if (d % q == 0) {
            p = q;
            break;
        }
    }
    if (p == 0) p = d;  // d itself prime
    while (d % p == 0) d /= p;
    if (d != 1) return false;
    if (prime_out) *prime_out = p;
    return true;
}

inline std::uint64_t mul_mod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

}  // namespace ltsig
