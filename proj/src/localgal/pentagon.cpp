#include <boost/multiprecision/mpfr.hpp>

#include "galrep/errors.hpp"
#include "galrep/localgal.hpp"

namespace galrep {

namespace {

using Real = boost::multiprecision::mpfr_float;

struct Complex {
  Real re, im;
};

Complex operator+(const Complex& a, const Complex& b) { return {a.re + b.re, a.im + b.im}; }
Complex operator-(const Complex& a, const Complex& b) { return {a.re - b.re, a.im - b.im}; }
Complex operator*(const Complex& a, const Complex& b) { return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re}; }
Complex operator/(const Complex& a, const Complex& b) {
  Real d = b.re * b.re + b.im * b.im;
  return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
}
Real magnitude(const Complex& a) { return sqrt(a.re * a.re + a.im * a.im); }

class PrecisionGuard {
 public:
  explicit PrecisionGuard(unsigned bits) : saved_(Real::default_precision()) {
    Real::default_precision(bits * 30103 / 100000 + 2);
  }
  ~PrecisionGuard() { Real::default_precision(saved_); }
  PrecisionGuard(const PrecisionGuard&) = delete;
  PrecisionGuard& operator=(const PrecisionGuard&) = delete;

 private:
  unsigned saved_;
};

// Weierstrass (Durand–Kerner) iteration for all roots of a monic polynomial.
std::vector<Complex> all_roots(const IntPoly& f, unsigned bits) {
  const std::size_t n = f.size() - 1;
  std::vector<Real> c;
  for (const auto& a : f) c.emplace_back(a.get_str());
  auto eval = [&](const Complex& z) {
    Complex acc{Real(0), Real(0)};
    for (std::size_t i = f.size(); i-- > 0;) acc = acc * z + Complex{c[i], Real(0)};
    return acc;
  };
  std::vector<Complex> z;
  const Complex seed{Real("0.4"), Real("0.9")};
  Complex power{Real(1), Real(0)};
  for (std::size_t k = 0; k < n; ++k) {
    power = power * seed;
    z.push_back(power);
  }
  const Real tolerance = ldexp(Real(1), -static_cast<int>(bits) + 8);
  for (int iter = 0; iter < 5000; ++iter) {
    Real worst = 0;
    for (std::size_t k = 0; k < n; ++k) {
      Complex denom{Real(1), Real(0)};
      for (std::size_t j = 0; j < n; ++j)
        if (j != k) denom = denom * (z[k] - z[j]);
      const Complex step = eval(z[k]) / denom;
      z[k] = z[k] - step;
      const Real size = magnitude(step) / (1 + magnitude(z[k]));
      if (size > worst) worst = size;
    }
    if (worst < tolerance) return z;
  }
  return z;
}

bool near_integer(const Real& x, Integer& rounded) {
  const Real r = round(x);
  if (abs(x - r) >= Real("0.25")) return false;
  mpfr_get_z(rounded.get_mpz_t(), r.backend().data(), MPFR_RNDN);
  return true;
}

}  // namespace

PentagonResolvents pentagon_resolvents(const IntPoly& f, const std::vector<std::complex<double>>& hints) {
  if (f.size() != 6 || f.back() != 1) throw ValidationError("pentagon resolvents need a monic quintic");
  if (hints.size() != 5) throw ValidationError("pentagon resolvents need 5 root hints, got " + std::to_string(hints.size()));
  const Integer e2 = f[3];
  for (unsigned bits = 64; bits <= 4096; bits *= 2) {
    PrecisionGuard guard(bits);
    const auto roots = all_roots(f, bits);
    std::vector<Complex> alpha;
    std::vector<bool> used(roots.size(), false);
    for (const auto& h : hints) {
      std::size_t best = 0;
      double best_dist = 1e300;
      for (std::size_t j = 0; j < roots.size(); ++j) {
        const double d = std::abs(std::complex<double>(roots[j].re.convert_to<double>(), roots[j].im.convert_to<double>()) - h);
        if (d < best_dist) {
          best_dist = d;
          best = j;
        }
      }
      if (used[best]) throw ValidationError("root hints do not single out five distinct roots");
      used[best] = true;
      alpha.push_back(roots[best]);
    }
    Complex r1{Real(0), Real(0)}, r2{Real(0), Real(0)};
    for (std::size_t i = 0; i < 5; ++i) {
      r1 = r1 + alpha[i] * alpha[(i + 1) % 5];
      r2 = r2 + alpha[i] * alpha[(i + 2) % 5];
    }
    const Complex product = r1 * r2;
    Integer n, a, b;
    if (abs(product.im) >= Real("0.25") || !near_integer(product.re, n)) continue;
    if (abs(r1.im) >= Real("0.25") || abs(r2.im) >= Real("0.25")) continue;
    if (!near_integer(r1.re, a) || !near_integer(r2.re, b)) continue;
    if (a + b != e2 || a * b != n) continue;
    return {a, b, e2, bits};
  }
  throw ValidationError("numerical rounding of the pentagon resolvents is not within 0.25 of an integer");
}

}  // namespace galrep
