#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "galrep/chars.hpp"
#include "galrep/exact/poly.hpp"
#include "galrep/groups.hpp"
#include "galrep/weildeligne.hpp"

namespace galrep {

/// Euler polynomial and conductor exponent supplied for a bad prime.
struct LocalFactor {
  UniPoly polynomial;
  Integer exponent;
};

/// Frobenius classes listed prime by prime.
struct ExplicitFrobenius {
  std::map<std::uint64_t, std::size_t> classes;
};

/// Frobenius read off the factorization of f mod p; `group` permutes the roots of f.
/// Root hints feed the pentagon resolvents when two 5-cycle classes need separating.
struct SplittingRule {
  IntPoly polynomial;
  std::vector<std::complex<double>> root_hints;
};

/// Good primes of an elliptic curve: 1 - a_p T + pT² with a_p = p + 1 - #E(F_p).
struct EllipticRule {
  Weierstrass curve;
};

enum class LKind { Artin, Elliptic };

/// An L-series over Q. Artin kind: `character` is a character of `group`, or of
/// `subgroup->group()` when the representation is induced from the fixed field of H.
struct GlobalConfig {
  LKind kind = LKind::Artin;
  int dim = 1;
  std::map<std::uint64_t, LocalFactor> ramified;
  std::variant<ExplicitFrobenius, SplittingRule, EllipticRule> unramified;
  GroupPtr group;
  std::optional<ClassFunction> character;
  std::optional<Subgroup> subgroup;
  std::optional<std::size_t> conjugation_class;
};

/// Checks degrees, exponents, and that the character, subgroup and dimension agree.
void validate(const GlobalConfig& config);

/// Character of the representation over Q: χ, or Ind_H^G χ for an induced config.
ClassFunction global_character(const GlobalConfig& config);

/// det(1 - ρ(σ⁻¹)T) from the power sums χ(σ^{-k}).
UniPoly frobenius_polynomial(const ClassFunction& chi, int sigma);

/// Euler factor of Ind_H^G χ_H at a prime with Frobenius σ, assembled over the primes of
/// the fixed field of H: Π over ⟨σ⟩-orbits O = {xH, σxH, ...} of det(1 - χ_H(x⁻¹σ^{-f}x)T^f),
/// f = |O|. With χ_H trivial this is the Dedekind zeta factor of that field.
UniPoly coset_orbit_factor(const Subgroup& h, const ClassFunction& chi_h, int sigma);

/// Euler factor at p. Stored polynomial for ramified primes; otherwise from the Frobenius
/// class. Candidate classes agreeing on the factor need no resolution; otherwise an
/// AmbiguityError names the prime.
UniPoly euler_factor(const GlobalConfig& config, std::uint64_t p);

/// Coefficients a_1..a_N.
class DirichletSeries {
 public:
  explicit DirichletSeries(std::vector<Cyclotomic> coefficients);
  std::size_t limit() const { return a_.size(); }
  const Cyclotomic& operator[](std::size_t n) const { return a_[n - 1]; }
  const std::vector<Cyclotomic>& coefficients() const { return a_; }
  friend bool operator==(const DirichletSeries&, const DirichletSeries&) = default;

 private:
  std::vector<Cyclotomic> a_;
};

/// Dirichlet convolution, truncated at the shorter limit.
DirichletSeries dirichlet_product(const DirichletSeries& a, const DirichletSeries& b);

/// Π_p 1/P_p(p^{-s}) expanded to n ≤ N.
DirichletSeries dirichlet_coefficients(const GlobalConfig& config, std::size_t limit);

/// Π_p p^{n_p}.
Integer global_conductor(const GlobalConfig& config);

struct FunctionalEquationData {
  Integer a;  // A = conductor · |Δ_Q|^{dim/2}
  Integer conductor;
  int d_plus = 0;
  int d_minus = 0;
  int gamma_c_count = 0;
  bool self_dual = true;
  std::string root_number = "unknown, |w| = 1";
};

/// Artin: d_± = (dim ± χ(c))/2 with c the conjugation class. Elliptic: one Γ_C factor.
FunctionalEquationData functional_equation_data(const GlobalConfig& config);

/// Σ m_i·ζ_{F^{H_i}} = Σ n_j·ζ_{F^{H_j}} as a product identity of Dedekind zetas.
struct TowerIdentity {
  std::vector<std::pair<Subgroup, int>> left;
  std::vector<std::pair<Subgroup, int>> right;
};

struct ZetaIdentityReport {
  bool character_identity = false;
  std::string character_failure;  // first class where Σ m·Ind 1 differs
  std::size_t limit = 0;
  bool coefficients_agree = false;
  std::optional<std::size_t> first_mismatch;
  bool routes_agree = false;  // induced-character and coset-orbit series coincide
  std::vector<std::uint64_t> skipped_primes;
};

/// Verifies Σ m·Ind_{H}^G 1 on both sides exactly, then, only if that holds, the
/// Dirichlet coefficients of both products to `limit`. Unramified Frobenius comes from
/// `config.unramified`; the primes in `config.ramified` contribute the factor 1 on every
/// side.
ZetaIdentityReport zeta_identity_check(const GlobalConfig& config, const TowerIdentity& tower, std::size_t limit);

}  // namespace galrep
