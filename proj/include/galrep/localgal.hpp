#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <vector>

#include "galrep/chars.hpp"
#include "galrep/exact/finite_field.hpp"
#include "galrep/exact/poly.hpp"
#include "galrep/groups.hpp"

namespace galrep {

/// Galois group of a finite extension of p-adic fields with its lower-numbering
/// ramification chain I_0 ⊇ I_1 ⊇ ... ⊇ I_m = {e}, a Frobenius lift and the residue
/// field size q of the base.
class RamificationData {
 public:
  /// Checks every structural invariant and names the first one that fails.
  static RamificationData create(GroupPtr group, std::vector<Subgroup> chain, int frobenius, std::uint64_t p,
                                 const Integer& q);

  const GroupPtr& group() const { return group_; }
  const std::vector<Subgroup>& chain() const { return chain_; }
  /// I_k, with I_k = I_m for k beyond the stored chain.
  const Subgroup& ramification_group(std::size_t k) const;
  const Subgroup& inertia() const { return chain_.front(); }
  int frobenius() const { return frobenius_; }
  std::uint64_t p() const { return p_; }
  const Integer& q() const { return q_; }
  /// |G/I_0|.
  int residue_degree() const { return group_->order() / inertia().order(); }
  /// max{k : g ∈ I_k} for g ∈ I_0 \ {e}; -1 outside I_0 or for the identity.
  int ramification_break(int g) const { return breaks_[static_cast<std::size_t>(g)]; }

 private:
  RamificationData() = default;
  GroupPtr group_;
  std::vector<Subgroup> chain_;
  int frobenius_ = 0;
  std::uint64_t p_ = 0;
  Integer q_;
  std::vector<int> breaks_;
};

/// det(1 - ΦT | ρ^{I_0}) with Φ the inverse of the Frobenius lift. The traces of Φ^k on
/// the invariants are averages of χ over the coset Φ^k·I_0.
UniPoly local_polynomial(const ClassFunction& chi, const RamificationData& data);

struct ConductorExponent {
  Integer tame;
  Rational wild;
  Rational total;
  bool integral;
};

/// tame = dim - dim ρ^{I_0}; wild = Σ_{k≥1} (|I_k|/|I_0|)(dim - dim ρ^{I_k}).
/// Throws ValidationError when the total is not an integer.
ConductorExponent conductor_exponent(const ClassFunction& chi, const RamificationData& data);

/// ⟨Res_{I_0} χ, b⟩ over I_0 with b(g) = -break(g), b(e) = Σ_{h≠e} break(h). Throws
/// InconsistencyError if it differs from the wild part of `conductor_exponent`.
Rational swan_pairing(const ClassFunction& chi, const RamificationData& data);

/// Valuation of the discriminant of the fixed field of H: the conductor exponent of
/// Ind_H^G 1.
Integer discriminant_valuation(const RamificationData& data, const Subgroup& h);

/// Residue degree f_{L/K} of the fixed field L of H: |G/I_0| over the order of the image
/// of H in G/I_0.
int residue_extension_degree(const RamificationData& data, const Subgroup& h);

/// Ramification data of F over the fixed field of H, on the group h.group(): chain
/// intersected with H, q' = q^{f_{L/K}}, Frobenius the least h ∈ H with h ≡ φ^{f_{L/K}}
/// modulo I_0.
RamificationData restrict_ramification(const RamificationData& data, const Subgroup& h);

/// Exact stride-1 and stride-2 pentagon sums Σ α_i α_{i+s} of the roots of a monic quintic.
struct PentagonResolvents {
  Integer r1;
  Integer r2;
  Integer e2;               // second elementary symmetric function, read off f
  unsigned precision_bits;  // working precision that certified the rounding
};

/// Roots are computed numerically and labeled α_1..α_5 by nearest match to `hints`; the
/// precision doubles (from 64 bits) until r1·r2 lies within 0.25 of an integer and the
/// rounded r1, r2 sum exactly to e2. Throws ValidationError when no precision up to
/// 4096 bits certifies the rounding or the hints do not single out the roots.
PentagonResolvents pentagon_resolvents(const IntPoly& f, const std::vector<std::complex<double>>& hints);

struct FrobeniusClass {
  std::vector<int> cycle_type;       // descending
  std::vector<std::size_t> candidates;  // classes of G with that cycle type
  std::size_t conjugacy_class;       // meaningful when `determined`
  bool determined;
  int order;                         // order of the Frobenius element
  std::optional<PentagonResolvents> resolvents;
  std::optional<std::uint64_t> resolvent_mod_p;  // Σ β_i β_{i+1} in F_p
};

/// Classes of G whose cycle type matches the factorization of f mod p. Throws
/// ValidationError when f is not squarefree mod p, or the type is not realized in G.
FrobeniusClass frobenius_candidates(const IntPoly& f, std::uint64_t p, const GroupPtr& g);

/// As `frobenius_candidates`, then separates the two 5-cycle classes of a dihedral
/// quintic with the pentagon resolvents. Throws AmbiguityError if more than one
/// class remains.
FrobeniusClass frobenius_class(const IntPoly& f, std::uint64_t p, const GroupPtr& g,
                               const std::vector<std::complex<double>>& root_hints);

}  // namespace galrep
