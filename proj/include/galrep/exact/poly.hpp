#pragma once

#include <span>
#include <string>
#include <vector>

#include "galrep/exact/cyclotomic.hpp"

namespace galrep {

/// Univariate polynomial over cyclotomic coefficients, constant term first.
/// Trailing zeros are always stripped; the zero polynomial has no coefficients.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Cyclotomic> coeffs);
  static UniPoly constant(const Cyclotomic& c) { return UniPoly({c}); }
  static UniPoly one() { return constant(Cyclotomic(1L)); }

  const std::vector<Cyclotomic>& coefficients() const { return coeffs_; }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  Cyclotomic coefficient(std::size_t i) const;
  Cyclotomic evaluate(const Cyclotomic& x) const;

  /// p(T) ↦ p(c·T).
  UniPoly scale_variable(const Cyclotomic& c) const;
  /// p(T) ↦ p(T^k).
  UniPoly substitute_power(unsigned k) const;

  /// e.g. "1 - T", "1 + 5*T^2", "1 + (z(4))*T".
  std::string str(const std::string& var = "T") const;

  UniPoly& operator+=(const UniPoly& o);
  UniPoly& operator-=(const UniPoly& o);
  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(const Cyclotomic& c, const UniPoly& p);
  friend bool operator==(const UniPoly& a, const UniPoly& b) = default;

 private:
  void strip();
  std::vector<Cyclotomic> coeffs_;
};

/// Coefficients a_0..a_N of a power series truncated at degree N.
class TruncatedSeries {
 public:
  TruncatedSeries(std::vector<Cyclotomic> coeffs, std::size_t order);
  static TruncatedSeries from_poly(const UniPoly& p, std::size_t order);

  std::size_t order() const { return order_; }
  const std::vector<Cyclotomic>& coefficients() const { return coeffs_; }
  const Cyclotomic& operator[](std::size_t i) const { return coeffs_[i]; }

  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) = default;

 private:
  std::vector<Cyclotomic> coeffs_;
  std::size_t order_;
};

/// 1/P to order N; P(0) must equal 1 (ValidationError otherwise).
TruncatedSeries series_invert(const UniPoly& p, std::size_t order);

struct CharPoly {
  UniPoly monic;     // x^d - e1 x^{d-1} + ... ± e_d
  UniPoly reversed;  // det(1 - ·T) = 1 - e1 T + ... ± e_d T^d
};

/// Characteristic polynomial from the power sums s_1..s_d of its roots (Newton).
CharPoly newton_charpoly(std::span<const Cyclotomic> power_sums);

}  // namespace galrep
