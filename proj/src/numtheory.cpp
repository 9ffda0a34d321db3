#include "npbrace/numtheory.hpp"

#include <numeric>
#include <sstream>

namespace npbrace {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 1; d <= n; ++d)
    if (n % d == 0) out.push_back(d);
  return out;
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

std::uint64_t euler_phi(std::uint64_t n) {
  std::uint64_t result = n;
  for (auto q : prime_factors(n)) result = result / q * (q - 1);
  return result;
}

std::uint64_t power_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod) {
  std::uint64_t result = 1 % mod;
  base %= mod;
  while (exp > 0) {
    if (exp & 1) result = result * base % mod;
    base = base * base % mod;
    exp >>= 1;
  }
  return result;
}

std::uint64_t unit_order(std::uint64_t u, std::uint64_t p) {
  u %= p;
  if (u == 0) throw std::invalid_argument("unit_order: not a unit");
  std::uint64_t k = 1;
  for (std::uint64_t x = u; x != 1 % p; x = x * u % p) ++k;
  return k;
}

std::uint64_t unit_of_order(std::uint64_t p, std::uint64_t k) {
  if (!is_prime(p)) throw std::invalid_argument("unit_of_order: p is not prime");
  if (k == 0 || (p - 1) % k != 0)
    throw std::invalid_argument("unit_of_order: k does not divide p - 1");
  for (std::uint64_t u = 1; u < p; ++u)
    if (unit_order(u, p) == k) return u;
  throw std::logic_error("unit_of_order: cyclic group of units has no such element");
}

namespace {

// Returns the offending divisor, or 0 when the hypothesis is established.
std::uint64_t failing_divisor(std::uint64_t n, std::uint64_t p) {
  if (p > n) return 0;
  const auto omega = prime_factors(n).size();
  for (auto d : divisors(n)) {
    if (d == 1 || d % p != 1) continue;
    const bool complement = std::gcd(n / d, p - 1) == 1;
    const bool trivial_action = p + omega > n;
    if (!(complement && trivial_action)) return d;
  }
  return 0;
}

}  // namespace

bool check_hypothesis(std::uint64_t n, std::uint64_t p) {
  if (n == 0 || !is_prime(p) || n % p == 0) return false;
  return failing_divisor(n, p) == 0;
}

std::string hypothesis_diagnostic(std::uint64_t n, std::uint64_t p) {
  std::ostringstream out;
  if (n == 0) {
    out << "n must be positive";
  } else if (!is_prime(p)) {
    out << p << " is not prime";
  } else if (n % p == 0) {
    out << "p = " << p << " divides n = " << n;
  } else if (auto d = failing_divisor(n, p); d != 0) {
    out << "divisor " << d << " of n = " << n << " is 1 mod " << p
        << "; a group of order " << n * p
        << " may have a non-normal Sylow " << p << "-subgroup";
  }
  return out.str();
}

}  // namespace npbrace
