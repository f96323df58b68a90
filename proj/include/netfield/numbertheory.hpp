#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <vector>

namespace netfield {

/// n = p^k with p prime and k >= 1.
struct PrimePower {
  std::uint64_t n = 0;
  std::uint64_t p = 0;
  unsigned k = 0;
};

bool is_prime(std::uint64_t n);

/// Distinct prime factors of n in ascending order (empty for n < 2).
std::vector<std::uint64_t> prime_factors(std::uint64_t n);

/// Decomposes n as a prime power; std::nullopt when n < 2 or n has two or
/// more distinct prime factors.
std::optional<PrimePower> prime_power(std::uint64_t n);

bool is_prime_power(std::uint64_t n);

/// Ascending prime powers in [lo, hi].
std::vector<std::uint64_t> prime_powers_in(std::uint64_t lo, std::uint64_t hi);

/// True when n = 2^k - 1 is prime for some k.
bool is_mersenne_prime(std::uint64_t n);

/// Largest 2^k with 2^k - 1 prime and 2^k <= omega + 2. Requires omega >= 2.
std::uint64_t mersenne_q_star(std::uint64_t omega);

/// Cauchy-Davenport lower bound min(a + b - 1, p) on |A + B| in Z_p.
/// Throws Error(NotPrime) when p is not prime, InvalidParam when a or b is 0.
std::uint64_t cd_bound(std::uint64_t a, std::uint64_t b, std::uint64_t p);

/// {a + b mod n : a in A, b in B}.
std::set<std::uint32_t> exact_sumset(const std::set<std::uint32_t>& a,
                                     const std::set<std::uint32_t>& b, std::uint32_t n);

/// Subset-sum set {b_1 + ... + b_k mod n : b_i in {0, a_i}}.
std::set<std::uint32_t> subset_sums(std::span<const std::uint32_t> summands, std::uint32_t n);

}  // namespace netfield
