#pragma once

#include <string>
#include <vector>

#include "galrep/exact/cyclotomic.hpp"
#include "galrep/groups.hpp"

namespace galrep {

/// Cyclotomic-valued function on the conjugacy classes of a group, in the group's
/// canonical class order.
class ClassFunction {
 public:
  ClassFunction(GroupPtr group, std::vector<Cyclotomic> values);
  static ClassFunction trivial(GroupPtr group);
  static ClassFunction zero(GroupPtr group);
  /// Character of the regular representation.
  static ClassFunction regular(GroupPtr group);

  const GroupPtr& group() const { return group_; }
  const std::vector<Cyclotomic>& values() const { return values_; }
  const Cyclotomic& on_class(std::size_t c) const { return values_[c]; }
  const Cyclotomic& operator()(int element) const { return values_[group_->class_of(element)]; }
  const Cyclotomic& dimension() const { return values_[0]; }
  /// Dimension as an integer; throws ValidationError if it is not a non-negative integer.
  Integer degree() const;

  ClassFunction conj() const;
  ClassFunction galois(std::int64_t k) const;
  /// "2, -1, 0" in class order.
  std::string str() const;

  ClassFunction& operator+=(const ClassFunction& o);
  ClassFunction& operator-=(const ClassFunction& o);
  friend ClassFunction operator+(ClassFunction a, const ClassFunction& b) { return a += b; }
  friend ClassFunction operator-(ClassFunction a, const ClassFunction& b) { return a -= b; }
  friend ClassFunction operator*(const Cyclotomic& c, const ClassFunction& f);
  friend bool operator==(const ClassFunction& a, const ClassFunction& b);

 private:
  GroupPtr group_;
  std::vector<Cyclotomic> values_;
};

/// (1/|G|) Σ_g χ(g)·conj(ψ(g)). Throws ValidationError on a group mismatch.
Cyclotomic inner_product(const ClassFunction& chi, const ClassFunction& psi);
/// Frobenius formula: (Ind χ)(g) = (1/|H|) Σ_{x ∈ G, x⁻¹gx ∈ H} χ(x⁻¹gx).
ClassFunction induce(const Subgroup& h, const ClassFunction& chi_h);
/// χ transported to h.group() along the class fusion.
ClassFunction restrict(const ClassFunction& chi, const Subgroup& h);
/// Pointwise product.
ClassFunction tensor(const ClassFunction& chi, const ClassFunction& psi);
/// ⟨Res_H χ, 1⟩_H as an integer; throws ValidationError if χ is not a character there.
Integer invariant_dimension(const ClassFunction& chi, const Subgroup& h);

/// Irreducible characters of a group. Rows are orthonormal, Σ dim² = |G|, and the
/// trivial character comes first.
class CharacterTable {
 public:
  /// Burnside class-sum eigenvectors mod a prime p ≡ 1 (mod exponent), lifted to exact
  /// cyclotomic values from eigenvalue multiplicities. Rows after the trivial one are
  /// ordered by dimension, then lexicographically by values (see `compare`).
  static CharacterTable compute(const GroupPtr& group, std::size_t bound = kDefaultGroupBound);
  /// Accepts user-supplied rows after checking orthonormality, completeness and that
  /// the first row is trivial. Row order is kept.
  static CharacterTable from_rows(const GroupPtr& group, std::vector<ClassFunction> rows);

  const GroupPtr& group() const { return group_; }
  const std::vector<ClassFunction>& rows() const { return rows_; }
  const ClassFunction& operator[](std::size_t i) const { return rows_[i]; }
  std::size_t size() const { return rows_.size(); }
  /// Row index of an irreducible character, or -1.
  int index_of(const ClassFunction& chi) const;

 private:
  CharacterTable(GroupPtr group, std::vector<ClassFunction> rows);
  GroupPtr group_;
  std::vector<ClassFunction> rows_;
};

/// Multiplicities of the irreducibles in χ; throws ValidationError when one is
/// non-integral or negative (χ is not a character).
std::vector<Integer> decompose(const ClassFunction& chi, const CharacterTable& table);
/// Σ m_i·row_i.
ClassFunction from_multiplicities(const std::vector<Integer>& multiplicities, const CharacterTable& table);

}  // namespace galrep
