#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace galrep {

/// Permutation of {0..m-1}: perm[i] is the image of i.
using Perm = std::vector<int>;

class FiniteGroup;
class Subgroup;
struct Quotient;
using GroupPtr = std::shared_ptr<const FiniteGroup>;

inline constexpr std::size_t kDefaultGroupBound = 10080;

/// Finite group on element indices 0..n-1 with 0 the identity. Built either from a
/// Cayley table or as the closure of permutations; conjugacy classes are computed on
/// construction and ordered by (size, least element index).
class FiniteGroup {
 public:
  /// table[g][h] = g·h. Checks identity, inverses and associativity; the first failing
  /// triple is named in the error.
  static GroupPtr from_table(std::vector<std::vector<int>> table, std::vector<std::string> labels = {});
  /// Closure of permutations of {1..degree} given 0-based; (g·h)(i) = g(h(i)).
  /// Element labels are cycle notation on 1..degree.
  static GroupPtr from_permutations(const std::vector<Perm>& generators, int degree,
                                    std::size_t bound = kDefaultGroupBound);

  int order() const { return order_; }
  int mul(int a, int b) const;
  int inv(int a) const { return inverse_[static_cast<std::size_t>(a)]; }
  int pow(int a, long long e) const;
  int conjugate(int g, int x) const { return mul(inv(x), mul(g, x)); }  // x^{-1} g x
  int element_order(int a) const;
  const std::string& label(int a) const { return labels_[static_cast<std::size_t>(a)]; }
  std::optional<int> find_label(const std::string& label) const;
  /// Greedy generating set, deterministic.
  const std::vector<int>& generators() const { return generators_; }

  bool is_permutation_group() const { return degree_ > 0; }
  int degree() const { return degree_; }
  const Perm& permutation(int a) const;
  std::optional<int> index_of(const Perm& p) const;
  /// Cycle lengths including fixed points, descending. Throws for table groups.
  std::vector<int> cycle_type(int a) const;

  std::size_t class_count() const { return classes_.size(); }
  const std::vector<std::vector<int>>& classes() const { return classes_; }
  const std::vector<int>& conjugacy_class(std::size_t c) const { return classes_[c]; }
  std::size_t class_of(int a) const { return class_of_[static_cast<std::size_t>(a)]; }
  std::size_t class_size(std::size_t c) const { return classes_[c].size(); }
  int class_representative(std::size_t c) const { return classes_[c].front(); }
  /// Class of g^k for g in class c.
  std::size_t power_class(std::size_t c, long long k) const;
  /// Least common multiple of the element orders.
  int exponent() const { return exponent_; }

  /// Sorted elements of the subgroup generated by `gens`.
  std::vector<int> generate(const std::vector<int>& gens) const;

 private:
  FiniteGroup() = default;
  static GroupPtr finish(std::shared_ptr<FiniteGroup> g);

  int order_ = 0;
  int degree_ = 0;
  std::vector<int> table_;  // row-major, empty for large permutation groups
  std::vector<Perm> perms_;
  std::unordered_map<std::string, int> perm_index_;
  std::vector<int> inverse_;
  std::vector<std::string> labels_;
  std::vector<int> generators_;
  std::vector<std::vector<int>> classes_;
  std::vector<std::size_t> class_of_;
  int exponent_ = 1;

  friend class Subgroup;
  friend Quotient quotient(const Subgroup& normal);
};

/// Subgroup of a parent group, stored as a sorted element list. Its own abstract
/// group has index i ↔ elements()[i].
class Subgroup {
 public:
  /// Checks closure; elements need not be sorted.
  static Subgroup of(GroupPtr parent, std::vector<int> elements);
  static Subgroup generated(GroupPtr parent, const std::vector<int>& gens);
  static Subgroup whole(GroupPtr parent);
  static Subgroup trivial(GroupPtr parent);

  const GroupPtr& parent() const { return parent_; }
  const std::vector<int>& elements() const { return elements_; }
  int order() const { return static_cast<int>(elements_.size()); }
  int index() const { return parent_->order() / order(); }
  bool contains(int g) const { return position_[static_cast<std::size_t>(g)] >= 0; }
  /// The subgroup as a group in its own right.
  const GroupPtr& group() const { return group_; }
  int to_parent(int i) const { return elements_[static_cast<std::size_t>(i)]; }
  /// -1 when g is not in the subgroup.
  int from_parent(int g) const { return position_[static_cast<std::size_t>(g)]; }

  bool is_normal() const;
  bool is_subgroup_of(const Subgroup& other) const;
  Subgroup intersect(const Subgroup& other) const;
  Subgroup conjugate(int x) const;  // x^{-1} H x
  std::string str() const;  // "{e, (1 2)}" using parent labels

  friend bool operator==(const Subgroup& a, const Subgroup& b) {
    return a.parent_ == b.parent_ && a.elements_ == b.elements_;
  }

 private:
  Subgroup(GroupPtr parent, std::vector<int> sorted_elements);

  GroupPtr parent_;
  std::vector<int> elements_;
  std::vector<int> position_;
  GroupPtr group_;
};

struct Quotient {
  GroupPtr group;
  std::vector<int> projection;  // parent element → coset index
};

/// G/N with cosets ordered by least element. Throws ValidationError if N is not normal.
Quotient quotient(const Subgroup& normal);

/// Every subgroup, sorted by (order, elements).
std::vector<Subgroup> all_subgroups(const GroupPtr& g);

/// Cycle notation on 1..m, "()" for the identity.
std::string cycle_notation(const Perm& p);
/// Parses "(1 2 3)(4 5)" (1-based) into a permutation of {0..degree-1}. Throws ParseError.
Perm parse_cycles(const std::string& text, int degree);

}  // namespace galrep
