#include "netfield/numbertheory.hpp"

#include "netfield/error.hpp"

namespace netfield {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0) return false;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d != 0) continue;
    out.push_back(d);
    while (n % d == 0) n /= d;
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::optional<PrimePower> prime_power(std::uint64_t n) {
  if (n < 2) return std::nullopt;
  const auto factors = prime_factors(n);
  if (factors.size() != 1) return std::nullopt;
  PrimePower pp{n, factors.front(), 0};
  for (std::uint64_t r = n; r > 1; r /= pp.p) ++pp.k;
  return pp;
}

bool is_prime_power(std::uint64_t n) { return prime_power(n).has_value(); }

std::vector<std::uint64_t> prime_powers_in(std::uint64_t lo, std::uint64_t hi) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t q = lo; q <= hi; ++q) {
    if (is_prime_power(q)) out.push_back(q);
  }
  return out;
}

bool is_mersenne_prime(std::uint64_t n) {
  // n + 1 must be a power of two
  if (n < 3 || ((n + 1) & n) != 0) return false;
  return is_prime(n);
}

std::uint64_t mersenne_q_star(std::uint64_t omega) {
  if (omega < 2) throw Error(Errc::InvalidParam, "omega must be >= 2");
  std::uint64_t best = 0;
  for (std::uint64_t q = 4; q <= omega + 2; q *= 2) {
    if (is_prime(q - 1)) best = q;
  }
  return best;
}

std::uint64_t cd_bound(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  if (!is_prime(p)) throw Error(Errc::NotPrime, std::to_string(p) + " is not prime");
  if (a == 0 || b == 0) throw Error(Errc::InvalidParam, "set sizes must be >= 1");
  return std::min(a + b - 1, p);
}

std::set<std::uint32_t> exact_sumset(const std::set<std::uint32_t>& a,
                                     const std::set<std::uint32_t>& b, std::uint32_t n) {
  if (n == 0) throw Error(Errc::InvalidParam, "modulus must be positive");
  std::set<std::uint32_t> out;
  for (auto x : a) {
    for (auto y : b) out.insert(static_cast<std::uint32_t>((std::uint64_t{x} + y) % n));
  }
  return out;
}

std::set<std::uint32_t> subset_sums(std::span<const std::uint32_t> summands, std::uint32_t n) {
  std::set<std::uint32_t> acc{0};
  for (auto a : summands) acc = exact_sumset(acc, {0, a % n}, n);
  return acc;
}

}  // namespace netfield
