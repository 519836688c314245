#include "galrep/exact/cyclotomic.hpp"

#include <cctype>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <numeric>
#include <ostream>

#include "galrep/errors.hpp"

namespace galrep {

namespace {

using QPoly = std::vector<Rational>;

std::vector<Integer> compute_cyclotomic(std::uint64_t n) {
  std::vector<Integer> num(n + 1, Integer(0));
  num[0] = -1;
  num[n] = 1;
  for (auto d : divisors(n)) {
    if (d == n) continue;
    const auto& div = cyclotomic_polynomial(d);
    const std::size_t dd = div.size() - 1;
    std::vector<Integer> quot(num.size() - dd, Integer(0));
    for (std::size_t k = num.size() - 1; k + 1 > dd; --k) {
      Integer c = num[k];
      if (c == 0) continue;
      quot[k - dd] = c;
      for (std::size_t j = 0; j <= dd; ++j) num[k - dd + j] -= c * div[j];
      if (k == dd) break;
    }
    num = std::move(quot);
  }
  return num;
}

std::mutex& cache_mutex() {
  static std::mutex m;
  return m;
}

std::map<std::uint64_t, std::vector<Integer>>& cache() {
  static std::map<std::uint64_t, std::vector<Integer>> c;
  return c;
}

// Integer numerators over a common denominator.
struct ScaledVector {
  std::vector<Integer> num;
  Integer den{1};
};

ScaledVector clear_denominators(const QPoly& c) {
  ScaledVector s;
  for (const auto& v : c)
    if (v != 0) mpz_lcm(s.den.get_mpz_t(), s.den.get_mpz_t(), v.get_den_mpz_t());
  s.num.reserve(c.size());
  for (const auto& v : c) s.num.push_back(v.get_num() * (s.den / v.get_den()));
  return s;
}

QPoly restore(const std::vector<Integer>& num, const Integer& den) {
  QPoly r;
  r.reserve(num.size());
  for (const auto& v : num) {
    r.emplace_back(v, den);
    r.back().canonicalize();
  }
  return r;
}

// In place modulo the monic Φ_n; leaves φ(n) entries.
void reduce_integer(std::vector<Integer>& c, std::uint64_t n) {
  const auto& phi = cyclotomic_polynomial(n);
  const std::size_t m = phi.size() - 1;
  std::vector<std::pair<std::size_t, Integer>> terms;
  for (std::size_t j = 0; j < m; ++j)
    if (phi[j] != 0) terms.emplace_back(j, phi[j]);
  for (std::size_t k = c.size(); k-- > m;) {
    if (c[k] == 0) continue;
    for (const auto& [j, pj] : terms) mpz_submul(c[k - m + j].get_mpz_t(), c[k].get_mpz_t(), pj.get_mpz_t());
    c[k] = 0;
  }
  c.resize(m, Integer(0));
}

// Reduces an arbitrary-length coefficient vector modulo Φ_n; result has φ(n) entries.
QPoly reduce(const QPoly& c, std::uint64_t n) {
  auto s = clear_denominators(c);
  reduce_integer(s.num, n);
  return restore(s.num, s.den);
}

std::uint64_t mod_exp(std::int64_t e, std::uint64_t n) {
  auto r = e % static_cast<std::int64_t>(n);
  return static_cast<std::uint64_t>(r < 0 ? r + static_cast<std::int64_t>(n) : r);
}

// Solves M x = rhs for a full-column-rank rational system, nullopt if inconsistent.
std::optional<QPoly> solve(std::vector<QPoly> rows, std::size_t ncols) {
  const std::size_t nrows = rows.size();
  std::size_t r = 0;
  std::vector<std::size_t> pivot_col;
  for (std::size_t c = 0; c < ncols && r < nrows; ++c) {
    std::size_t piv = r;
    while (piv < nrows && rows[piv][c] == 0) ++piv;
    if (piv == nrows) continue;
    std::swap(rows[piv], rows[r]);
    Rational inv = 1 / rows[r][c];
    for (auto& v : rows[r]) v *= inv;
    for (std::size_t i = 0; i < nrows; ++i) {
      if (i == r || rows[i][c] == 0) continue;
      Rational f = rows[i][c];
      for (std::size_t j = c; j <= ncols; ++j) rows[i][j] -= f * rows[r][j];
    }
    pivot_col.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < nrows; ++i)
    if (rows[i][ncols] != 0) return std::nullopt;
  if (pivot_col.size() != ncols) return std::nullopt;
  QPoly x(ncols, Rational(0));
  for (std::size_t i = 0; i < r; ++i) x[pivot_col[i]] = rows[i][ncols];
  return x;
}

Cyclotomic sqrt_of_prime(std::uint64_t p) {
  if (p == 2) return Cyclotomic::zeta(8, 1) + Cyclotomic::zeta(8, -1);
  // Quadratic Gauss sum g with g^2 = (-1)^{(p-1)/2} p.
  Cyclotomic g;
  for (std::uint64_t a = 1; a < p; ++a) {
    Integer ai(static_cast<unsigned long>(a)), pi(static_cast<unsigned long>(p));
    int legendre = mpz_legendre(ai.get_mpz_t(), pi.get_mpz_t());
    g += Cyclotomic(static_cast<long>(legendre)) * Cyclotomic::zeta(p, static_cast<std::int64_t>(a));
  }
  if (p % 4 == 1) return g;
  return -Cyclotomic::zeta(4, 1) * g;
}

class LiteralParser {
 public:
  explicit LiteralParser(std::string_view text) {
    for (char c : text)
      if (!std::isspace(static_cast<unsigned char>(c))) s_.push_back(c);
    original_ = std::string(text);
  }

  Cyclotomic parse() {
    if (s_.empty()) fail("empty literal");
    Cyclotomic total = term();
    while (pos_ < s_.size()) {
      char op = s_[pos_];
      if (op != '+' && op != '-') fail("expected '+' or '-'");
      ++pos_;
      Cyclotomic t = term();
      if (op == '+')
        total += t;
      else
        total -= t;
    }
    return total;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw ParseError("cyclotomic literal '" + original_ + "': " + why);
  }

  bool starts_with(std::string_view prefix) const {
    return std::string_view(s_).substr(pos_).starts_with(prefix);
  }

  std::string digits() {
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected digits");
    return s_.substr(start, pos_ - start);
  }

  std::int64_t signed_int() {
    bool neg = false;
    if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) neg = s_[pos_++] == '-';
    std::string d = digits();
    if (d.size() > 15) fail("integer too large");
    auto v = static_cast<std::int64_t>(std::stoll(d));
    return neg ? -v : v;
  }

  Cyclotomic zeta_power() {
    pos_ += 2;  // "z("
    std::string d = digits();
    if (d.size() > 9) fail("level too large");
    auto level = static_cast<std::uint64_t>(std::stoull(d));
    if (level == 0) fail("level 0 is not allowed");
    if (pos_ >= s_.size() || s_[pos_] != ')') fail("expected ')'");
    ++pos_;
    std::int64_t e = 1;
    if (pos_ < s_.size() && s_[pos_] == '^') {
      ++pos_;
      e = signed_int();
    }
    return Cyclotomic::zeta(level, e);
  }

  Cyclotomic term() {
    bool neg = false;
    if (pos_ < s_.size() && (s_[pos_] == '+' || s_[pos_] == '-')) neg = s_[pos_++] == '-';
    Cyclotomic value;
    if (starts_with("z(")) {
      value = zeta_power();
    } else {
      std::string num = digits();
      if (pos_ < s_.size() && s_[pos_] == '/') {
        ++pos_;
        num += "/" + digits();
      }
      value = Cyclotomic(parse_rational(num));
      if (pos_ < s_.size() && s_[pos_] == '*') {
        ++pos_;
        if (!starts_with("z(")) fail("expected z(n) after '*'");
        value *= zeta_power();
      }
    }
    return neg ? -value : value;
  }

  std::string s_;
  std::string original_;
  std::size_t pos_ = 0;
};

}  // namespace

const std::vector<Integer>& cyclotomic_polynomial(std::uint64_t n) {
  {
    std::lock_guard lock(cache_mutex());
    auto it = cache().find(n);
    if (it != cache().end()) return it->second;
  }
  auto poly = compute_cyclotomic(n);
  std::lock_guard lock(cache_mutex());
  return cache().emplace(n, std::move(poly)).first->second;
}

Cyclotomic::Cyclotomic() : coeffs_{Rational(0)} {}
Cyclotomic::Cyclotomic(long value) : coeffs_{Rational(value)} {}
Cyclotomic::Cyclotomic(const Integer& value) : coeffs_{Rational(value)} {}
Cyclotomic::Cyclotomic(const Rational& value) : coeffs_{value} { coeffs_[0].canonicalize(); }

Cyclotomic::Cyclotomic(std::uint64_t level, std::vector<Rational> coeffs)
    : level_(level), coeffs_(std::move(coeffs)) {
  drop_to_rational_if_possible();
}

void Cyclotomic::drop_to_rational_if_possible() {
  if (level_ == 1) return;
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return;
  level_ = 1;
  coeffs_.resize(1);
}

Cyclotomic Cyclotomic::zeta(std::uint64_t n, std::int64_t k) {
  if (n == 0) throw ValidationError("cyclotomic level 0");
  QPoly c(mod_exp(k, n) + 1, Rational(0));
  c.back() = 1;
  return Cyclotomic(n, reduce(std::move(c), n));
}

Cyclotomic Cyclotomic::from_powers(std::uint64_t n, const std::vector<Rational>& coeffs) {
  if (n == 0) throw ValidationError("cyclotomic level 0");
  QPoly c(std::min<std::size_t>(coeffs.size(), n), Rational(0));
  for (std::size_t i = 0; i < coeffs.size(); ++i) c[i % n] += coeffs[i];
  return Cyclotomic(n, reduce(std::move(c), n));
}

Cyclotomic Cyclotomic::sqrt_of(const Integer& n) {
  if (n <= 0 || !n.fits_ulong_p()) throw ValidationError("sqrt_of needs a positive machine-size integer");
  std::uint64_t m = n.get_ui();
  Cyclotomic result(1L);
  for (auto p : prime_factors(m)) {
    unsigned e = 0;
    while (m % p == 0) {
      m /= p;
      ++e;
    }
    result *= Cyclotomic(ipow(Integer(static_cast<unsigned long>(p)), e / 2));
    if (e % 2 == 1) result *= sqrt_of_prime(p);
  }
  return result;
}

Cyclotomic Cyclotomic::parse(std::string_view literal) { return LiteralParser(literal).parse(); }

bool Cyclotomic::is_zero() const { return level_ == 1 && coeffs_[0] == 0; }

std::optional<Rational> Cyclotomic::as_rational() const {
  if (level_ != 1) return std::nullopt;
  return coeffs_[0];
}

std::optional<Integer> Cyclotomic::as_integer() const {
  if (level_ != 1 || coeffs_[0].get_den() != 1) return std::nullopt;
  return coeffs_[0].get_num();
}

bool Cyclotomic::is_real() const { return conj() == *this; }

Cyclotomic Cyclotomic::embed(std::uint64_t m) const {
  if (m % level_ != 0) throw ValidationError("cannot embed level " + std::to_string(level_) + " into " + std::to_string(m));
  if (m == level_) return *this;
  const std::uint64_t step = m / level_;
  QPoly c(coeffs_.size() > 1 ? (coeffs_.size() - 1) * step + 1 : 1, Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) c[i * step] = coeffs_[i];
  Cyclotomic r;
  r.level_ = m;
  r.coeffs_ = reduce(std::move(c), m);
  return r;
}

Cyclotomic Cyclotomic::galois(std::int64_t k) const {
  if (level_ == 1) return *this;
  if (std::gcd(mod_exp(k, level_), level_) != 1) throw ValidationError("galois exponent not a unit");
  QPoly c(level_, Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) c[mod_exp(static_cast<std::int64_t>(i) * k, level_)] += coeffs_[i];
  return Cyclotomic(level_, reduce(std::move(c), level_));
}

Cyclotomic Cyclotomic::minimal() const {
  if (level_ == 1) return *this;
  if (Cyclotomic(level_, coeffs_).level_ == 1) return Cyclotomic(coeffs_[0]);
  for (auto d : divisors(level_)) {
    if (d == 1 || d == level_) continue;
    bool fixed = true;
    for (std::uint64_t k = d + 1; k < level_ && fixed; k += d)
      if (std::gcd(k, level_) == 1 && galois(static_cast<std::int64_t>(k)) != *this) fixed = false;
    if (!fixed) continue;
    const std::size_t nd = euler_phi(d);
    const std::size_t nn = coeffs_.size();
    std::vector<QPoly> rows(nn, QPoly(nd + 1, Rational(0)));
    for (std::size_t j = 0; j < nd; ++j) {
      auto col = zeta(d, static_cast<std::int64_t>(j)).embed(level_);
      for (std::size_t i = 0; i < col.coeffs_.size(); ++i) rows[i][j] = col.coeffs_[i];
    }
    for (std::size_t i = 0; i < nn; ++i) rows[i][nd] = coeffs_[i];
    if (auto x = solve(std::move(rows), nd)) return Cyclotomic(d, std::move(*x));
  }
  return *this;
}

Cyclotomic Cyclotomic::inverse() const {
  if (is_zero()) throw ValidationError("division by zero");
  if (level_ == 1) return Cyclotomic(Rational(1 / coeffs_[0]));
  // Fraction-free elimination on the matrix of multiplication by the cleared numerator.
  const auto& phi = cyclotomic_polynomial(level_);
  const std::size_t n = phi.size() - 1;
  auto a = clear_denominators(coeffs_);
  std::vector<std::vector<Integer>> m(n, std::vector<Integer>(n + 1, Integer(0)));
  std::vector<Integer> col = a.num;
  for (std::size_t c = 0; c < n; ++c) {
    for (std::size_t r = 0; r < n; ++r) m[r][c] = col[r];
    Integer top = col[n - 1];
    for (std::size_t r = n - 1; r > 0; --r) col[r] = col[r - 1] - top * phi[r];
    col[0] = -top * phi[0];
  }
  m[0][n] = 1;
  Integer prev(1);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    while (m[piv][k] == 0) ++piv;
    std::swap(m[piv], m[k]);
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j <= n; ++j) {
        m[i][j] = m[k][k] * m[i][j] - m[i][k] * m[k][j];
        mpz_divexact(m[i][j].get_mpz_t(), m[i][j].get_mpz_t(), prev.get_mpz_t());
      }
      m[i][k] = 0;
    }
    prev = m[k][k];
  }
  QPoly x(n, Rational(0));
  for (std::size_t k = n; k-- > 0;) {
    Rational acc(m[k][n]);
    for (std::size_t j = k + 1; j < n; ++j)
      if (x[j] != 0) acc -= Rational(m[k][j]) * x[j];
    x[k] = acc / Rational(m[k][k]);
  }
  for (auto& v : x) v *= Rational(a.den);
  return Cyclotomic(level_, std::move(x));
}

Cyclotomic Cyclotomic::pow(std::int64_t e) const {
  if (e < 0) return inverse().pow(-e);
  Cyclotomic result(1L), base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

std::complex<double> Cyclotomic::approx() const {
  std::complex<double> z = 0;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    double angle = 2 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(level_);
    z += coeffs_[i].get_d() * std::polar(1.0, angle);
  }
  return z;
}

std::string Cyclotomic::str() const {
  Cyclotomic m = minimal();
  if (m.level_ == 1) return to_string(m.coeffs_[0]);
  std::string out;
  const std::string zeta = "z(" + std::to_string(m.level_) + ")";
  for (std::size_t i = 0; i < m.coeffs_.size(); ++i) {
    const Rational& c = m.coeffs_[i];
    if (c == 0) continue;
    Rational mag = abs(c);
    std::string t;
    if (i == 0) {
      t = to_string(mag);
    } else {
      if (mag != 1) t = to_string(mag) + "*";
      t += zeta;
      if (i > 1) t += "^" + std::to_string(i);
    }
    if (out.empty())
      out = (c < 0 ? "-" : "") + t;
    else
      out += (c < 0 ? " - " : " + ") + t;
  }
  return out;
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) {
  if (o.level_ == 1) {
    coeffs_[0] += o.coeffs_[0];
    return *this;
  }
  if (level_ == o.level_) {
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    drop_to_rational_if_possible();
    return *this;
  }
  auto m = lcm_u64(level_, o.level_);
  Cyclotomic a = embed(m), b = o.embed(m);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) a.coeffs_[i] += b.coeffs_[i];
  a.drop_to_rational_if_possible();
  return *this = std::move(a);
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& o) { return *this += -o; }

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& o) {
  if (o.level_ == 1) {
    for (auto& c : coeffs_) c *= o.coeffs_[0];
    if (o.coeffs_[0] == 0) *this = Cyclotomic();
    return *this;
  }
  if (level_ == 1) {
    Rational s = coeffs_[0];
    *this = o;
    for (auto& c : coeffs_) c *= s;
    if (s == 0) *this = Cyclotomic();
    return *this;
  }
  const auto m = lcm_u64(level_, o.level_);
  const std::uint64_t sa = m / level_, sb = m / o.level_;
  auto a = clear_denominators(coeffs_), b = clear_denominators(o.coeffs_);
  std::vector<Integer> r(m, Integer(0));
  for (std::size_t i = 0; i < a.num.size(); ++i) {
    if (a.num[i] == 0) continue;
    for (std::size_t j = 0; j < b.num.size(); ++j)
      mpz_addmul(r[(i * sa + j * sb) % m].get_mpz_t(), a.num[i].get_mpz_t(), b.num[j].get_mpz_t());
  }
  reduce_integer(r, m);
  return *this = Cyclotomic(m, restore(r, a.den * b.den));
}

Cyclotomic& Cyclotomic::operator/=(const Cyclotomic& o) { return *this *= o.inverse(); }

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.level_ == b.level_) return a.coeffs_ == b.coeffs_;
  if (a.level_ == 1 || b.level_ == 1) return false;
  auto m = lcm_u64(a.level_, b.level_);
  return a.embed(m).coeffs_ == b.embed(m).coeffs_;
}

int compare(const Cyclotomic& a, const Cyclotomic& b) {
  Cyclotomic x = a.minimal(), y = b.minimal();
  if (x.level_ != y.level_) return x.level_ < y.level_ ? -1 : 1;
  for (std::size_t i = 0; i < x.coeffs_.size(); ++i) {
    int c = cmp(x.coeffs_[i], y.coeffs_[i]);
    if (c != 0) return c < 0 ? -1 : 1;
  }
  return 0;
}

std::ostream& operator<<(std::ostream& os, const Cyclotomic& c) { return os << c.str(); }

}  // namespace galrep
