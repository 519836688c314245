#include "galrep/exact/poly.hpp"

#include "galrep/errors.hpp"

namespace galrep {

UniPoly::UniPoly(std::vector<Cyclotomic> coeffs) : coeffs_(std::move(coeffs)) { strip(); }

void UniPoly::strip() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Cyclotomic UniPoly::coefficient(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Cyclotomic(); }

Cyclotomic UniPoly::evaluate(const Cyclotomic& x) const {
  Cyclotomic acc;
  for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i];
  return acc;
}

UniPoly UniPoly::scale_variable(const Cyclotomic& c) const {
  std::vector<Cyclotomic> out = coeffs_;
  Cyclotomic power(1L);
  for (auto& a : out) {
    a *= power;
    power *= c;
  }
  return UniPoly(std::move(out));
}

UniPoly UniPoly::substitute_power(unsigned k) const {
  if (k == 0) throw ValidationError("substitute_power needs k >= 1");
  if (coeffs_.empty()) return {};
  std::vector<Cyclotomic> out((coeffs_.size() - 1) * k + 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i * k] = coeffs_[i];
  return UniPoly(std::move(out));
}

std::string UniPoly::str(const std::string& var) const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const Cyclotomic& c = coeffs_[i];
    if (c.is_zero()) continue;
    std::string monomial = i == 0 ? "" : (i == 1 ? var : var + "^" + std::to_string(i));
    bool negative = false;
    std::string body;
    if (auto r = c.as_rational()) {
      negative = *r < 0;
      Rational mag = abs(*r);
      if (i == 0)
        body = to_string(mag);
      else
        body = mag == 1 ? monomial : to_string(mag) + "*" + monomial;
    } else {
      body = "(" + c.str() + ")" + (i == 0 ? "" : "*" + monomial);
    }
    if (out.empty())
      out = (negative ? "-" : "") + body;
    else
      out += (negative ? " - " : " + ") + body;
  }
  return out;
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  strip();
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  strip();
  return *this;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Cyclotomic> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return UniPoly(std::move(out));
}

UniPoly operator*(const Cyclotomic& c, const UniPoly& p) {
  std::vector<Cyclotomic> out = p.coeffs_;
  for (auto& a : out) a *= c;
  return UniPoly(std::move(out));
}

TruncatedSeries::TruncatedSeries(std::vector<Cyclotomic> coeffs, std::size_t order)
    : coeffs_(std::move(coeffs)), order_(order) {
  coeffs_.resize(order_ + 1);
}

TruncatedSeries TruncatedSeries::from_poly(const UniPoly& p, std::size_t order) {
  return TruncatedSeries(p.coefficients(), order);
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  if (a.order_ != b.order_) throw ValidationError("truncated series of different orders");
  std::vector<Cyclotomic> out(a.order_ + 1);
  for (std::size_t i = 0; i <= a.order_; ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; i + j <= a.order_; ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return TruncatedSeries(std::move(out), a.order_);
}

TruncatedSeries series_invert(const UniPoly& p, std::size_t order) {
  if (p.coefficient(0) != Cyclotomic(1L))
    throw ValidationError("series_invert: constant term must be 1, got " + p.coefficient(0).str());
  // b_0 = 1, b_k = -Σ_{i=1..k} p_i b_{k-i}
  std::vector<Cyclotomic> b(order + 1);
  b[0] = Cyclotomic(1L);
  const auto& c = p.coefficients();
  for (std::size_t k = 1; k <= order; ++k) {
    Cyclotomic acc;
    for (std::size_t i = 1; i <= k && i < c.size(); ++i)
      if (!c[i].is_zero()) acc += c[i] * b[k - i];
    b[k] = -acc;
  }
  return TruncatedSeries(std::move(b), order);
}

CharPoly newton_charpoly(std::span<const Cyclotomic> power_sums) {
  const std::size_t d = power_sums.size();
  // k e_k = Σ_{i=1..k} (-1)^{i-1} e_{k-i} s_i
  std::vector<Cyclotomic> e(d + 1);
  e[0] = Cyclotomic(1L);
  for (std::size_t k = 1; k <= d; ++k) {
    Cyclotomic acc;
    for (std::size_t i = 1; i <= k; ++i) {
      Cyclotomic term = e[k - i] * power_sums[i - 1];
      if (i % 2 == 1)
        acc += term;
      else
        acc -= term;
    }
    e[k] = acc * Cyclotomic(Rational(1, static_cast<unsigned long>(k)));
  }
  std::vector<Cyclotomic> monic(d + 1), reversed(d + 1);
  for (std::size_t k = 0; k <= d; ++k) {
    Cyclotomic signed_e = k % 2 == 0 ? e[k] : -e[k];
    reversed[k] = signed_e;
    monic[d - k] = signed_e;
  }
  return {UniPoly(std::move(monic)), UniPoly(std::move(reversed))};
}

}  // namespace galrep
