#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace galrep {

using Integer = mpz_class;
using Rational = mpq_class;

/// Parses `a` or `a/b` (base 10, optional sign). Throws ParseError.
Rational parse_rational(std::string_view text);

std::string to_string(const Integer& z);
std::string to_string(const Rational& r);

bool is_integer(const Rational& r);

// Small-integer number theory used across modules.
bool is_prime(std::uint64_t n);
std::uint64_t euler_phi(std::uint64_t n);
std::vector<std::uint64_t> divisors(std::uint64_t n);
std::vector<std::uint64_t> prime_factors(std::uint64_t n);
std::uint64_t lcm_u64(std::uint64_t a, std::uint64_t b);
std::vector<std::uint64_t> primes_up_to(std::uint64_t n);

struct PrimePower {
  std::uint64_t prime;
  unsigned exponent;
};
/// p^k decomposition of q (k >= 1), or nullopt when q is not a prime power.
std::optional<PrimePower> as_prime_power(const Integer& q);

Integer factorial(unsigned n);
Integer ipow(const Integer& base, unsigned exponent);

}  // namespace galrep
