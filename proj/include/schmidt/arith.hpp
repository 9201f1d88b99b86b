#pragma once

// Small integer helpers shared by the group and polynomial code.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace schmidt {

  constexpr bool is_prime(std::uint64_t n) noexcept {
    if (n < 2) {
      return false;
    }
    for (std::uint64_t d = 2; d * d <= n; ++d) {
      if (n % d == 0) {
        return false;
      }
    }
    return true;
  }

  constexpr std::uint64_t ipow(std::uint64_t base, unsigned exp) noexcept {
    std::uint64_t r = 1;
    while (exp-- > 0) {
      r *= base;
    }
    return r;
  }

  // Least k >= 1 with a^k = 1 (mod m). Requires gcd(a, m) = 1 and m >= 2.
  inline unsigned multiplicative_order(std::uint64_t a, std::uint64_t m) {
    if (m < 2) {
      throw std::invalid_argument("multiplicative_order: modulus must be >= 2");
    }
    a %= m;
    std::uint64_t x = a;
    for (unsigned k = 1; k <= m; ++k) {
      if (x == 1) {
        return k;
      }
      x = (x * a) % m;
    }
    throw std::invalid_argument("multiplicative_order: base not a unit");
  }

  // (prime, exponent) pairs, primes ascending.
  inline std::vector<std::pair<std::uint64_t, unsigned>>
  factorize(std::uint64_t n) {
    std::vector<std::pair<std::uint64_t, unsigned>> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
      if (n % d == 0) {
        unsigned e = 0;
        while (n % d == 0) {
          n /= d;
          ++e;
        }
        out.emplace_back(d, e);
      }
    }
    if (n > 1) {
      out.emplace_back(n, 1);
    }
    return out;
  }

  // n = r^k with r prime and k >= 1.
  struct PrimePower {
    std::uint64_t prime;
    unsigned      exponent;
  };

  inline std::optional<PrimePower> as_prime_power(std::uint64_t n) {
    auto f = factorize(n);
    if (f.size() != 1) {
      return std::nullopt;
    }
    return PrimePower{f[0].first, f[0].second};
  }

}  // namespace schmidt
