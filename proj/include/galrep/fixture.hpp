#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "galrep/exact/cyclotomic.hpp"
#include "galrep/exact/poly.hpp"

namespace galrep {

/// A group element: index in the group's element order, or cycle notation.
using ElementRef = std::variant<long, std::string>;
/// Generators of a subgroup; the empty list is the trivial subgroup.
using ElementList = std::vector<ElementRef>;

struct GroupSection {
  int degree = 0;
  std::vector<std::string> generators;
  std::vector<std::vector<long>> table;
  std::vector<std::string> labels;
  friend bool operator==(const GroupSection&, const GroupSection&) = default;
};

struct CharactersSection {
  bool compute_table = false;
  std::vector<std::string> names;  // names for the computed rows, in table order
  std::vector<std::pair<std::string, std::vector<Cyclotomic>>> rows;
  friend bool operator==(const CharactersSection&, const CharactersSection&) = default;
};

struct RamificationSection {
  std::vector<ElementList> chain;
  ElementRef frobenius;
  std::uint64_t p = 0;
  Integer q;
  friend bool operator==(const RamificationSection&, const RamificationSection&) = default;
};

struct WDComponentSpec {
  std::string character;        // empty for a quadratic block
  std::optional<Integer> quadratic_a;
  Cyclotomic unit{1L};
  int weight = 0;
  int sp = 1;
  friend bool operator==(const WDComponentSpec&, const WDComponentSpec&) = default;
};

struct WDSection {
  std::optional<Integer> q;  // residue field size when there is no ramification section
  std::vector<std::pair<std::string, std::vector<WDComponentSpec>>> reps;
  friend bool operator==(const WDSection&, const WDSection&) = default;
};

struct EllipticSection {
  std::string kind;  // good, split, nonsplit, additive
  std::optional<std::vector<Integer>> coefficients;  // a1 a2 a3 a4 a6
  Integer q;
  std::optional<Integer> a;
  std::optional<std::string> wd;
  friend bool operator==(const EllipticSection&, const EllipticSection&) = default;
};

struct RamifiedSpec {
  std::uint64_t p = 0;
  std::vector<Cyclotomic> polynomial;
  Integer exponent;
  friend bool operator==(const RamifiedSpec&, const RamifiedSpec&) = default;
};

struct GlobalSection {
  std::string kind = "artin";  // artin, elliptic
  std::optional<std::string> character;
  std::optional<std::string> subgroup;
  std::optional<long> subgroup_character;  // row of the subgroup's own table
  std::vector<RamifiedSpec> ramified;
  std::string rule;  // splitting, explicit, elliptic
  std::vector<Integer> polynomial;
  std::vector<std::pair<double, double>> root_hints;
  std::vector<std::pair<std::uint64_t, ElementRef>> frobenius;
  std::optional<ElementRef> conjugation;
  friend bool operator==(const GlobalSection&, const GlobalSection&) = default;
};

struct TowerSection {
  std::vector<std::pair<std::string, long>> left;
  std::vector<std::pair<std::string, long>> right;
  friend bool operator==(const TowerSection&, const TowerSection&) = default;
};

/// A fixture document. Names are checked to resolve at parse time; the mathematics is
/// validated by the owning modules when a command uses a section.
struct Fixture {
  std::optional<GroupSection> group;
  std::optional<CharactersSection> characters;
  std::vector<std::pair<std::string, ElementList>> subgroups;
  std::optional<RamificationSection> ramification;
  std::optional<WDSection> wd;
  std::optional<EllipticSection> elliptic;
  std::optional<GlobalSection> global;
  std::optional<TowerSection> tower;

  /// "section" or "section.key" → source line, for diagnostics after parsing.
  std::map<std::string, int> lines;

  /// Source line of a section or entry, 0 when unknown.
  int line_of(const std::string& where) const;
  friend bool operator==(const Fixture& a, const Fixture& b);
};

/// Throws ParseError naming the line and field on malformed input, unknown keys or
/// sections, type mismatches and dangling names.
Fixture parse_fixture_text(const std::string& text);
/// Throws IoError when the file cannot be read.
Fixture parse_fixture_file(const std::string& path);
/// Canonical text: fixed section and key order, one entry per line.
std::string serialize_fixture(const Fixture& f);

}  // namespace galrep
