#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "galrep/exact/rational.hpp"

namespace galrep {

/// Integer polynomial, constant term first.
using IntPoly = std::vector<Integer>;

std::string poly_to_string(const IntPoly& f, const std::string& var = "x");

namespace fp {

/// Polynomial over F_p with residues in [0, p), constant term first, no trailing zeros.
using Poly = std::vector<std::uint64_t>;

Poly from_integers(const IntPoly& f, std::uint64_t p);
int degree(const Poly& f);
Poly add(const Poly& a, const Poly& b, std::uint64_t p);
Poly sub(const Poly& a, const Poly& b, std::uint64_t p);
Poly mul(const Poly& a, const Poly& b, std::uint64_t p);
/// Quotient and remainder; b must be nonzero.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b, std::uint64_t p);
Poly mod(const Poly& a, const Poly& b, std::uint64_t p);
Poly monic(const Poly& a, std::uint64_t p);
/// Monic gcd.
Poly gcd(Poly a, Poly b, std::uint64_t p);
Poly derivative(const Poly& a, std::uint64_t p);
Poly powmod(const Poly& base, const Integer& e, const Poly& modulus, std::uint64_t p);
bool is_irreducible(const Poly& f, std::uint64_t p);

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p);
std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p);
std::uint64_t inverse(std::uint64_t a, std::uint64_t p);

}  // namespace fp

/// F_{p^k} = F_p[x]/(modulus). Elements are coefficient vectors of length k.
class FiniteField {
 public:
  using Element = std::vector<std::uint64_t>;

  /// Modulus: the lexicographically least monic irreducible of degree k, comparing
  /// coefficients from x^{k-1} down to the constant term.
  static FiniteField create(std::uint64_t p, unsigned k);
  /// `modulus` must be monic and irreducible over F_p.
  static FiniteField with_modulus(std::uint64_t p, fp::Poly modulus);

  std::uint64_t characteristic() const { return p_; }
  unsigned degree() const { return k_; }
  std::uint64_t size() const { return size_; }
  const fp::Poly& modulus() const { return modulus_; }

  Element zero() const { return Element(k_, 0); }
  Element one() const { return from_int(1); }
  Element generator() const;  // the class of x
  Element from_int(const Integer& v) const;
  /// Base-p digits of `index` as coefficients; a bijection [0, q) → F_q.
  Element element_at(std::uint64_t index) const;
  std::uint64_t index_of(const Element& e) const;

  Element add(const Element& a, const Element& b) const;
  Element sub(const Element& a, const Element& b) const;
  Element neg(const Element& a) const;
  Element mul(const Element& a, const Element& b) const;
  Element pow(const Element& a, const Integer& e) const;
  Element inverse(const Element& a) const;
  Element frobenius(const Element& a) const { return pow(a, Integer(static_cast<unsigned long>(p_))); }
  /// Absolute trace to F_p.
  std::uint64_t trace(const Element& a) const;

  bool is_zero(const Element& a) const;
  bool in_prime_field(const Element& a) const;

 private:
  FiniteField(std::uint64_t p, fp::Poly modulus);
  Element to_element(fp::Poly poly) const;

  std::uint64_t p_;
  unsigned k_;
  std::uint64_t size_;
  fp::Poly modulus_;
};

struct FactorDegree {
  unsigned degree;
  unsigned multiplicity;
  friend bool operator==(const FactorDegree&, const FactorDegree&) = default;
};

/// One distinct-degree block: the product of all irreducible factors of `degree`
/// occurring with `multiplicity` in f mod p.
struct DistinctDegreeBlock {
  unsigned degree;
  unsigned multiplicity;
  fp::Poly product;
};

std::vector<DistinctDegreeBlock> distinct_degree_blocks(const IntPoly& f, std::uint64_t p);

/// Degrees of the irreducible factors of f mod p, one entry per factor, sorted by
/// (degree, multiplicity). Throws ValidationError if f ≡ 0 mod p.
std::vector<FactorDegree> ff_factor_degrees(const IntPoly& f, std::uint64_t p);

/// degree ↦ number of irreducible factors of that degree counted with multiplicity.
std::map<unsigned, unsigned> degree_counts(const std::vector<FactorDegree>& factors);

/// Sum of β_i β_{i+s} over the Frobenius orbit of the pair {β_1, β_{1+s}}, where
/// β_i = β^{p^{i-1}} and β is a root of f in F_{p^d} (all d pairs unless 2s = d); f must be
/// irreducible of degree d mod p and 1 <= s < d.
std::uint64_t ff_orbit_resolvent(const IntPoly& f, std::uint64_t p, unsigned stride);

}  // namespace galrep
