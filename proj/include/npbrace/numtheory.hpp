#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace npbrace {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A computation would exceed a configured size bound.
class ResourceError : public Error {
 public:
  using Error::Error;
};

/// The (n, p) pair does not satisfy the normal Sylow-p hypothesis.
class HypothesisError : public Error {
 public:
  using Error::Error;
};

bool is_prime(std::uint64_t n);
std::vector<std::uint64_t> divisors(std::uint64_t n);
std::vector<std::uint64_t> prime_factors(std::uint64_t n);  // distinct, ascending
std::uint64_t euler_phi(std::uint64_t n);
std::uint64_t power_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod);

/// Multiplicative order of u modulo p (u coprime to p).
std::uint64_t unit_order(std::uint64_t u, std::uint64_t p);

/// Smallest positive integer of multiplicative order exactly k mod p.
/// Throws std::invalid_argument unless p is prime and k divides p - 1.
std::uint64_t unit_of_order(std::uint64_t p, std::uint64_t k);

/// Sufficient arithmetic test that every group of order n*p has a normal
/// subgroup of order p (and p does not divide n).
///
/// Accepts when p > n, or when every divisor d > 1 of n with d = 1 (mod p)
/// is excluded as a Sylow-p count: gcd(n/d, p-1) = 1 forces a normal
/// p-complement K (Burnside transfer), and p > n - omega(n) forces the
/// coprime action of the Sylow-p on K to be trivial, since a nontrivial
/// orbit would need p elements of one order in K.
/// Never returns true for a pair that could violate the hypothesis.
bool check_hypothesis(std::uint64_t n, std::uint64_t p);

/// Human readable reason for a check_hypothesis refusal ("" when accepted).
std::string hypothesis_diagnostic(std::uint64_t n, std::uint64_t p);

}  // namespace npbrace
