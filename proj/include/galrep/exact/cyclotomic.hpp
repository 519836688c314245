#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "galrep/exact/rational.hpp"

namespace galrep {

/// An exact element of Q(ζ_n), stored over the power basis 1, ζ_n, ..., ζ_n^{φ(n)-1}
/// reduced modulo the n-th cyclotomic polynomial. ζ_n is e^{2πi/n} under the
/// standard complex embedding.
///
/// Values whose non-constant coefficients vanish are always stored at level 1, so
/// rational arithmetic never pays for a cyclotomic reduction. Operands at different
/// levels meet in Q(ζ_lcm).
class Cyclotomic {
 public:
  Cyclotomic();
  Cyclotomic(long value);  // NOLINT(google-explicit-constructor)
  Cyclotomic(const Integer& value);  // NOLINT(google-explicit-constructor)
  Cyclotomic(const Rational& value);  // NOLINT(google-explicit-constructor)

  /// ζ_n^k; negative k allowed.
  static Cyclotomic zeta(std::uint64_t n, std::int64_t k = 1);
  /// Coefficients of any length over powers of ζ_n; reduced on construction.
  static Cyclotomic from_powers(std::uint64_t n, const std::vector<Rational>& coeffs);
  /// Positive square root of a positive integer (Gauss sums).
  static Cyclotomic sqrt_of(const Integer& n);
  /// Literal grammar: `term := [sign] [rational "*"] "z(" int ")" ["^" int] | [sign] rational`,
  /// `expr := term {("+"|"-") term}`. Throws ParseError.
  static Cyclotomic parse(std::string_view literal);

  std::uint64_t level() const { return level_; }
  const std::vector<Rational>& coefficients() const { return coeffs_; }

  bool is_zero() const;
  bool is_rational() const { return level_ == 1; }
  std::optional<Rational> as_rational() const;
  std::optional<Integer> as_integer() const;
  /// Invariant under complex conjugation.
  bool is_real() const;

  /// Same value over Q(ζ_m); `level()` must divide m.
  Cyclotomic embed(std::uint64_t m) const;
  /// Same value at the smallest level that contains it.
  Cyclotomic minimal() const;
  /// The automorphism ζ ↦ ζ^k; k must be prime to the level.
  Cyclotomic galois(std::int64_t k) const;
  Cyclotomic conj() const { return galois(-1); }
  Cyclotomic inverse() const;
  Cyclotomic pow(std::int64_t e) const;

  std::complex<double> approx() const;
  /// Canonical literal at the minimal level.
  std::string str() const;

  Cyclotomic operator-() const;
  Cyclotomic& operator+=(const Cyclotomic& o);
  Cyclotomic& operator-=(const Cyclotomic& o);
  Cyclotomic& operator*=(const Cyclotomic& o);
  Cyclotomic& operator/=(const Cyclotomic& o);

  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
  friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }
  friend Cyclotomic operator/(Cyclotomic a, const Cyclotomic& b) { return a /= b; }
  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);

  /// Total order: minimal level first, then coefficients lexicographically.
  friend int compare(const Cyclotomic& a, const Cyclotomic& b);

 private:
  Cyclotomic(std::uint64_t level, std::vector<Rational> coeffs);
  void drop_to_rational_if_possible();

  std::uint64_t level_ = 1;
  std::vector<Rational> coeffs_;
};

/// Integer coefficients of Φ_n, constant term first.
const std::vector<Integer>& cyclotomic_polynomial(std::uint64_t n);

std::ostream& operator<<(std::ostream& os, const Cyclotomic& c);

}  // namespace galrep
