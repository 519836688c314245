#include "galrep/exact/finite_field.hpp"

#include <algorithm>

#include "galrep/errors.hpp"

namespace galrep {

std::string poly_to_string(const IntPoly& f, const std::string& var) {
  std::string out;
  for (std::size_t i = f.size(); i-- > 0;) {
    if (f[i] == 0) continue;
    Integer mag = abs(f[i]);
    std::string mono = i == 0 ? "" : (i == 1 ? var : var + "^" + std::to_string(i));
    std::string body = i == 0 ? to_string(mag) : (mag == 1 ? mono : to_string(mag) + "*" + mono);
    if (out.empty())
      out = (f[i] < 0 ? "-" : "") + body;
    else
      out += (f[i] < 0 ? " - " : " + ") + body;
  }
  return out.empty() ? "0" : out;
}

namespace fp {

namespace {

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

}  // namespace

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

std::uint64_t inverse(std::uint64_t a, std::uint64_t p) {
  if (a % p == 0) throw ValidationError("inverse of zero in F_" + std::to_string(p));
  return powmod(a, p - 2, p);
}

Poly from_integers(const IntPoly& f, std::uint64_t p) {
  Poly out(f.size());
  Integer pz(static_cast<unsigned long>(p));
  for (std::size_t i = 0; i < f.size(); ++i) {
    Integer r;
    mpz_fdiv_r(r.get_mpz_t(), f[i].get_mpz_t(), pz.get_mpz_t());
    out[i] = r.get_ui();
  }
  trim(out);
  return out;
}

int degree(const Poly& f) { return static_cast<int>(f.size()) - 1; }

Poly add(const Poly& a, const Poly& b, std::uint64_t p) {
  Poly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) {
    std::uint64_t x = i < a.size() ? a[i] : 0, y = i < b.size() ? b[i] : 0;
    r[i] = (x + y) % p;
  }
  trim(r);
  return r;
}

Poly sub(const Poly& a, const Poly& b, std::uint64_t p) {
  Poly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) {
    std::uint64_t x = i < a.size() ? a[i] : 0, y = i < b.size() ? b[i] : 0;
    r[i] = (x + p - y) % p;
  }
  trim(r);
  return r;
}

Poly mul(const Poly& a, const Poly& b, std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + mulmod(a[i], b[j], p)) % p;
  }
  trim(r);
  return r;
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b, std::uint64_t p) {
  if (b.empty()) throw ValidationError("polynomial division by zero");
  Poly rem = a;
  trim(rem);
  if (rem.size() < b.size()) return {{}, rem};
  const std::size_t db = b.size() - 1;
  const std::uint64_t lead_inv = inverse(b.back(), p);
  Poly quot(rem.size() - db, 0);
  for (std::size_t k = rem.size() - 1;; --k) {
    if (rem[k] != 0) {
      std::uint64_t c = mulmod(rem[k], lead_inv, p);
      quot[k - db] = c;
      for (std::size_t j = 0; j <= db; ++j) rem[k - db + j] = (rem[k - db + j] + p - mulmod(c, b[j], p)) % p;
    }
    if (k == db) break;
  }
  trim(rem);
  trim(quot);
  return {quot, rem};
}

Poly mod(const Poly& a, const Poly& b, std::uint64_t p) { return divmod(a, b, p).second; }

Poly monic(const Poly& a, std::uint64_t p) {
  if (a.empty()) return a;
  std::uint64_t inv = inverse(a.back(), p);
  Poly r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = mulmod(a[i], inv, p);
  return r;
}

Poly gcd(Poly a, Poly b, std::uint64_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a, p);
}

Poly derivative(const Poly& a, std::uint64_t p) {
  if (a.size() <= 1) return {};
  Poly r(a.size() - 1);
  for (std::size_t i = 1; i < a.size(); ++i) r[i - 1] = mulmod(a[i], i % p, p);
  trim(r);
  return r;
}

Poly powmod(const Poly& base, const Integer& e, const Poly& modulus, std::uint64_t p) {
  Poly result = mod(Poly{1}, modulus, p);
  Poly b = mod(base, modulus, p);
  const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    result = mod(mul(result, result, p), modulus, p);
    if (mpz_tstbit(e.get_mpz_t(), i)) result = mod(mul(result, b, p), modulus, p);
  }
  return result;
}

bool is_irreducible(const Poly& f, std::uint64_t p) {
  const int k = degree(f);
  if (k < 1) return false;
  if (k == 1) return true;
  const Poly x{0, 1};
  const Integer pz(static_cast<unsigned long>(p));
  // frob[j] = x^{p^j} mod f
  std::vector<Poly> frob{mod(x, f, p)};
  for (int j = 1; j <= k; ++j) frob.push_back(powmod(frob.back(), pz, f, p));
  if (sub(frob[static_cast<std::size_t>(k)], mod(x, f, p), p) != Poly{}) return false;
  for (auto r : prime_factors(static_cast<std::uint64_t>(k))) {
    const Poly& h = frob[static_cast<std::size_t>(k) / r];
    if (degree(gcd(f, sub(h, x, p), p)) > 0) return false;
  }
  return true;
}

}  // namespace fp

FiniteField::FiniteField(std::uint64_t p, fp::Poly modulus)
    : p_(p), k_(static_cast<unsigned>(fp::degree(modulus))), size_(1), modulus_(std::move(modulus)) {
  for (unsigned i = 0; i < k_; ++i) {
    if (size_ > UINT64_MAX / p_) throw ValidationError("finite field too large");
    size_ *= p_;
  }
}

FiniteField FiniteField::create(std::uint64_t p, unsigned k) {
  if (!is_prime(p)) throw ValidationError(std::to_string(p) + " is not prime");
  if (k == 0) throw ValidationError("extension degree must be positive");
  std::uint64_t count = 1;
  for (unsigned i = 0; i < k; ++i) count *= p;
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    fp::Poly f(k + 1, 0);
    std::uint64_t v = idx;
    for (unsigned i = 0; i < k; ++i) {
      f[i] = v % p;
      v /= p;
    }
    f[k] = 1;
    if (fp::is_irreducible(f, p)) return FiniteField(p, std::move(f));
  }
  throw InconsistencyError("no irreducible polynomial found");
}

FiniteField FiniteField::with_modulus(std::uint64_t p, fp::Poly modulus) {
  if (modulus.empty() || modulus.back() != 1 || !fp::is_irreducible(modulus, p))
    throw ValidationError("modulus must be monic irreducible over F_" + std::to_string(p));
  return FiniteField(p, std::move(modulus));
}

FiniteField::Element FiniteField::to_element(fp::Poly poly) const {
  poly = fp::mod(poly, modulus_, p_);
  poly.resize(k_, 0);
  return poly;
}

FiniteField::Element FiniteField::generator() const { return to_element({0, 1}); }

FiniteField::Element FiniteField::from_int(const Integer& v) const {
  return to_element(fp::from_integers(IntPoly{v}, p_));
}

FiniteField::Element FiniteField::element_at(std::uint64_t index) const {
  Element e(k_, 0);
  for (unsigned i = 0; i < k_; ++i) {
    e[i] = index % p_;
    index /= p_;
  }
  return e;
}

std::uint64_t FiniteField::index_of(const Element& e) const {
  std::uint64_t idx = 0;
  for (unsigned i = k_; i-- > 0;) idx = idx * p_ + e[i];
  return idx;
}

FiniteField::Element FiniteField::add(const Element& a, const Element& b) const {
  Element r(k_);
  for (unsigned i = 0; i < k_; ++i) r[i] = (a[i] + b[i]) % p_;
  return r;
}

FiniteField::Element FiniteField::sub(const Element& a, const Element& b) const {
  Element r(k_);
  for (unsigned i = 0; i < k_; ++i) r[i] = (a[i] + p_ - b[i]) % p_;
  return r;
}

FiniteField::Element FiniteField::neg(const Element& a) const { return sub(zero(), a); }

FiniteField::Element FiniteField::mul(const Element& a, const Element& b) const {
  return to_element(fp::mul(a, b, p_));
}

FiniteField::Element FiniteField::pow(const Element& a, const Integer& e) const {
  if (e < 0) return pow(inverse(a), -e);
  return to_element(fp::powmod(a, e, modulus_, p_));
}

FiniteField::Element FiniteField::inverse(const Element& a) const {
  if (is_zero(a)) throw ValidationError("inverse of zero in F_" + std::to_string(size_));
  Integer e(static_cast<unsigned long>(size_ - 2));
  return pow(a, e);
}

std::uint64_t FiniteField::trace(const Element& a) const {
  Element acc = zero(), conj = a;
  for (unsigned i = 0; i < k_; ++i) {
    acc = add(acc, conj);
    conj = frobenius(conj);
  }
  return acc[0];
}

bool FiniteField::is_zero(const Element& a) const {
  return std::all_of(a.begin(), a.end(), [](std::uint64_t v) { return v == 0; });
}

bool FiniteField::in_prime_field(const Element& a) const {
  return std::all_of(a.begin() + 1, a.end(), [](std::uint64_t v) { return v == 0; });
}

namespace {

fp::Poly pth_root(const fp::Poly& f, std::uint64_t p) {
  fp::Poly r(f.size() / p + 1, 0);
  for (std::size_t i = 0; i < f.size(); i += p) r[i / p] = f[i];
  while (!r.empty() && r.back() == 0) r.pop_back();
  return r;
}

void squarefree_parts(const fp::Poly& f, std::uint64_t p, unsigned scale,
                      std::vector<std::pair<fp::Poly, unsigned>>& out) {
  fp::Poly c = fp::gcd(f, fp::derivative(f, p), p);
  fp::Poly w = fp::divmod(f, c, p).first;
  unsigned i = 1;
  while (fp::degree(w) > 0) {
    fp::Poly y = fp::gcd(w, c, p);
    fp::Poly z = fp::divmod(w, y, p).first;
    if (fp::degree(z) > 0) out.emplace_back(fp::monic(z, p), i * scale);
    ++i;
    w = y;
    c = fp::divmod(c, y, p).first;
  }
  if (fp::degree(c) > 0)
    squarefree_parts(fp::monic(pth_root(c, p), p), p, scale * static_cast<unsigned>(p), out);
}

}  // namespace

std::vector<DistinctDegreeBlock> distinct_degree_blocks(const IntPoly& f, std::uint64_t p) {
  if (!is_prime(p)) throw ValidationError(std::to_string(p) + " is not prime");
  fp::Poly g = fp::from_integers(f, p);
  if (g.empty()) throw ValidationError("polynomial vanishes mod " + std::to_string(p));
  std::vector<DistinctDegreeBlock> blocks;
  if (fp::degree(g) == 0) return blocks;
  std::vector<std::pair<fp::Poly, unsigned>> parts;
  squarefree_parts(fp::monic(g, p), p, 1, parts);
  const Integer pz(static_cast<unsigned long>(p));
  const fp::Poly x{0, 1};
  for (auto& [part, mult] : parts) {
    fp::Poly rest = part;
    fp::Poly h = fp::mod(x, rest, p);
    for (unsigned d = 1; fp::degree(rest) >= 2 * static_cast<int>(d); ++d) {
      h = fp::powmod(h, pz, rest, p);
      fp::Poly common = fp::gcd(rest, fp::sub(h, x, p), p);
      if (fp::degree(common) > 0) {
        blocks.push_back({d, mult, common});
        rest = fp::divmod(rest, common, p).first;
        h = fp::mod(h, rest, p);
      }
    }
    if (fp::degree(rest) > 0) blocks.push_back({static_cast<unsigned>(fp::degree(rest)), mult, fp::monic(rest, p)});
  }
  return blocks;
}

std::vector<FactorDegree> ff_factor_degrees(const IntPoly& f, std::uint64_t p) {
  std::vector<FactorDegree> out;
  for (const auto& block : distinct_degree_blocks(f, p)) {
    const unsigned count = static_cast<unsigned>(fp::degree(block.product)) / block.degree;
    for (unsigned i = 0; i < count; ++i) out.push_back({block.degree, block.multiplicity});
  }
  std::sort(out.begin(), out.end(), [](const FactorDegree& a, const FactorDegree& b) {
    return a.degree != b.degree ? a.degree < b.degree : a.multiplicity < b.multiplicity;
  });
  return out;
}

std::map<unsigned, unsigned> degree_counts(const std::vector<FactorDegree>& factors) {
  std::map<unsigned, unsigned> counts;
  for (const auto& f : factors) counts[f.degree] += f.multiplicity;
  return counts;
}

std::uint64_t ff_orbit_resolvent(const IntPoly& f, std::uint64_t p, unsigned stride) {
  fp::Poly g = fp::from_integers(f, p);
  const int d = fp::degree(g);
  if (d != static_cast<int>(f.size()) - 1 || d < 2 || !fp::is_irreducible(g, p))
    throw ValidationError("orbit resolvent needs f irreducible of full degree mod " + std::to_string(p));
  if (stride < 1 || static_cast<int>(stride) >= d)
    throw ValidationError("stride must satisfy 1 <= s < " + std::to_string(d));
  const auto field = FiniteField::with_modulus(p, fp::monic(g, p));
  std::vector<FiniteField::Element> beta{field.generator()};
  for (int i = 1; i < d; ++i) beta.push_back(field.frobenius(beta.back()));
  // Frobenius orbit of the unordered pair {β_1, β_{1+s}}: d pairs, or d/2 when 2s = d.
  const int terms = 2 * static_cast<int>(stride) == d ? d / 2 : d;
  auto sum = field.zero();
  for (int i = 0; i < terms; ++i) {
    const auto& a = beta[static_cast<std::size_t>(i)];
    const auto& b = beta[static_cast<std::size_t>((i + static_cast<int>(stride)) % d)];
    sum = field.add(sum, field.mul(a, b));
  }
  if (!field.in_prime_field(sum)) throw InconsistencyError("orbit resolvent is not Frobenius-stable");
  return sum[0];
}

}  // namespace galrep
