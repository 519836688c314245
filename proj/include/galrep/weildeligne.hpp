#pragma once

#include <array>
#include <memory>
#include <variant>
#include <vector>

#include "galrep/chars.hpp"
#include "galrep/localgal.hpp"

namespace galrep {

/// Matrices of sp(n): inertia acts by exp(tN) with entries t^k/k! in a formal
/// variable t, geometric Frobenius by diag(1, q, ..., q^{n-1}).
struct SpMatrices {
  std::vector<std::vector<UniPoly>> inertia;
  std::vector<std::vector<Integer>> frobenius;
};

/// Throws ValidationError for n < 1.
SpMatrices sp_matrices(int n, const Integer& q);

/// The unramified character Φ ↦ unit·q^{weight/2}.
struct UnramifiedTwist {
  Cyclotomic unit{1L};
  int weight = 0;

  /// Throws ValidationError when the unit is zero.
  static UnramifiedTwist make(Cyclotomic unit, int weight);
  Cyclotomic value(const Integer& q) const;
  friend UnramifiedTwist operator*(const UnramifiedTwist& a, const UnramifiedTwist& b);
  friend bool operator==(const UnramifiedTwist& a, const UnramifiedTwist& b) = default;
};

/// A 2-dimensional unramified block whose Frobenius has characteristic polynomial
/// x² - a·x + q; used when the eigenvalues are not a root of unity times √q.
struct QuadraticFrobenius {
  Integer a;
  Integer q;
  friend bool operator==(const QuadraticFrobenius&, const QuadraticFrobenius&) = default;
};

/// ρ ⊗ twist ⊗ sp(n), with ρ either an Artin character or a quadratic Frobenius block.
struct WDComponent {
  std::variant<ClassFunction, QuadraticFrobenius> artin;
  UnramifiedTwist twist;
  int sp = 1;

  int artin_dimension() const;
  int dimension() const { return artin_dimension() * sp; }
  friend bool operator==(const WDComponent& a, const WDComponent& b);
};

/// Weil–Deligne representation: components over one piece of ramification data, kept
/// in a canonical order so that equal multisets compare equal.
class WDRep {
 public:
  /// Checks that every Artin part is a genuine character of the data's group, sp ≥ 1,
  /// and quadratic blocks share the data's q. Artin parts are split into irreducible
  /// constituents. `table` must belong to the data's group; computed when absent.
  static WDRep create(std::shared_ptr<const RamificationData> data, std::vector<WDComponent> components,
                      std::shared_ptr<const CharacterTable> table = nullptr);

  const std::shared_ptr<const RamificationData>& data() const { return data_; }
  const std::vector<WDComponent>& components() const { return components_; }
  int dimension() const;
  const CharacterTable& table() const;
  const std::shared_ptr<const CharacterTable>& table_ptr() const { return table_; }

  friend bool operator==(const WDRep& a, const WDRep& b);

 private:
  std::shared_ptr<const RamificationData> data_;
  std::vector<WDComponent> components_;
  std::shared_ptr<const CharacterTable> table_;
};

/// Unramified data over a residue field of size q, on one shared trivial group.
std::shared_ptr<const RamificationData> unramified_data(const Integer& q);

/// Π_components P_artin(α·T) with α the twist value; the inertia invariants of
/// ρ ⊗ sp(n) are ρ^{I_0} ⊗ ker N, on which Frobenius acts with eigenvalue 1 in sp(n).
UniPoly wd_local_polynomial(const WDRep& w);

/// Σ n·dim ρ - dim ρ^{I_0} + n·wild(ρ) over the components.
Integer wd_conductor(const WDRep& w);

/// Artin parts tensor and decompose against the character table, twists multiply and
/// sp(n) ⊗ sp(m) = ⊕_{i<min(n,m)} sp(n+m-1-2i) with weight 2i. A quadratic block tensors
/// only with a trivial Artin part; other combinations throw ValidationError.
WDRep wd_tensor(const WDRep& a, const WDRep& b);

/// Order of the semisimple part of a generator of tame inertia together with its
/// characteristic polynomial. Throws ValidationError when the wild inertia acts
/// nontrivially.
struct InertiaImage {
  int order;
  UniPoly charpoly;  // monic, in x
};
InertiaImage tame_inertia_image(const WDRep& w);

enum class Reduction { Good, SplitMultiplicative, NonsplitMultiplicative, Additive };

class EllipticLocalData {
 public:
  /// Hasse bound a² ≤ 4q.
  static EllipticLocalData good(const Integer& a, const Integer& q);
  static EllipticLocalData split_multiplicative(const Integer& q);
  static EllipticLocalData nonsplit_multiplicative(const Integer& q);
  /// Two-dimensional WD data without inertia invariants; for p ≥ 5 inertia must act
  /// tamely through a group of order 1, 2, 3, 4 or 6 and the conductor must be at most 2.
  static EllipticLocalData additive(WDRep wd);

  Reduction kind() const { return kind_; }
  const Integer& a() const { return a_; }
  const Integer& q() const { return q_; }
  const std::optional<WDRep>& wd() const { return wd_; }

 private:
  EllipticLocalData() = default;
  Reduction kind_ = Reduction::Good;
  Integer a_;
  Integer q_;
  std::optional<WDRep> wd_;
};

/// Good reduction: the two Frobenius eigenvalues as twists u·q^{1/2} when a² ∈ {0, q, 2q,
/// 3q, 4q}, otherwise one quadratic block. Multiplicative: sp(2), twisted by the unit -1
/// when non-split. Additive: the supplied data.
WDRep ec_local_wd(const EllipticLocalData& data);

/// Coefficients a1, a2, a3, a4, a6 of y² + a1·xy + a3·y = x³ + a2·x² + a4·x + a6.
using Weierstrass = std::array<Integer, 5>;

/// Discriminant of the Weierstrass equation over Z.
Integer weierstrass_discriminant(const Weierstrass& a);

/// #E(F_q) including the point at infinity, by enumerating x ∈ F_q and counting the y
/// over each. Throws ValidationError for q > 10⁶ or a singular reduction (naming the
/// singular point).
Integer ec_point_count_bruteforce(const Weierstrass& a, const Integer& q);

/// q^n + 1 - s_n with s_0 = 2, s_1 = a, s_k = a·s_{k-1} - q·s_{k-2}.
Integer ec_count_extension(const Integer& a, const Integer& q, unsigned n);

}  // namespace galrep
