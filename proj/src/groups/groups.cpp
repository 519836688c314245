#include "galrep/groups.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <map>
#include <numeric>
#include <set>

#include "galrep/errors.hpp"

namespace galrep {

namespace {

constexpr int kTableLimit = 2048;

std::string perm_key(const Perm& p) {
  return std::string(reinterpret_cast<const char*>(p.data()), p.size() * sizeof(int));
}

Perm compose(const Perm& g, const Perm& h) {
  Perm r(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) r[i] = g[static_cast<std::size_t>(h[i])];
  return r;
}

Perm invert(const Perm& g) {
  Perm r(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) r[static_cast<std::size_t>(g[i])] = static_cast<int>(i);
  return r;
}

}  // namespace

std::string cycle_notation(const Perm& p) {
  std::string out;
  std::vector<bool> seen(p.size(), false);
  for (std::size_t start = 0; start < p.size(); ++start) {
    if (seen[start] || p[start] == static_cast<int>(start)) continue;
    out += "(";
    std::size_t i = start;
    bool first = true;
    while (!seen[i]) {
      seen[i] = true;
      if (!first) out += " ";
      out += std::to_string(i + 1);
      first = false;
      i = static_cast<std::size_t>(p[i]);
    }
    out += ")";
  }
  return out.empty() ? "()" : out;
}

Perm parse_cycles(const std::string& text, int degree) {
  Perm result(static_cast<std::size_t>(degree));
  std::iota(result.begin(), result.end(), 0);
  std::size_t pos = 0;
  auto skip_space = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto fail = [&](const std::string& why) -> void {
    throw ParseError("permutation '" + text + "': " + why);
  };
  skip_space();
  if (pos == text.size()) fail("empty");
  while (pos < text.size()) {
    if (text[pos] != '(') fail("expected '('");
    ++pos;
    std::vector<int> cycle;
    while (true) {
      skip_space();
      if (pos < text.size() && text[pos] == ')') {
        ++pos;
        break;
      }
      if (pos < text.size() && text[pos] == ',') {
        ++pos;
        continue;
      }
      std::size_t start = pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
      if (start == pos || pos - start > 6) fail("expected a point number");
      int point = std::stoi(text.substr(start, pos - start));
      if (point < 1 || point > degree) fail("point " + std::to_string(point) + " outside 1.." + std::to_string(degree));
      if (std::find(cycle.begin(), cycle.end(), point - 1) != cycle.end()) fail("repeated point in a cycle");
      cycle.push_back(point - 1);
    }
    Perm c(static_cast<std::size_t>(degree));
    std::iota(c.begin(), c.end(), 0);
    for (std::size_t i = 0; i < cycle.size(); ++i)
      c[static_cast<std::size_t>(cycle[i])] = cycle[(i + 1) % cycle.size()];
    result = compose(result, c);
    skip_space();
  }
  return result;
}

GroupPtr FiniteGroup::from_table(std::vector<std::vector<int>> table, std::vector<std::string> labels) {
  const std::size_t n = table.size();
  if (n == 0) throw ValidationError("group table is empty");
  if (n > kDefaultGroupBound) throw ValidationError("group table larger than " + std::to_string(kDefaultGroupBound));
  for (std::size_t i = 0; i < n; ++i) {
    if (table[i].size() != n) throw ValidationError("group table row " + std::to_string(i) + " has wrong length");
    for (int v : table[i])
      if (v < 0 || static_cast<std::size_t>(v) >= n)
        throw ValidationError("group table entry " + std::to_string(v) + " out of range");
  }
  if (!labels.empty() && labels.size() != n) throw ValidationError("label count does not match group order");
  if (labels.empty()) {
    labels.push_back("e");
    for (std::size_t i = 1; i < n; ++i) labels.push_back("g" + std::to_string(i));
  }
  auto at = [&](int a, int b) { return table[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]; };
  for (std::size_t h = 0; h < n; ++h)
    if (at(0, static_cast<int>(h)) != static_cast<int>(h) || at(static_cast<int>(h), 0) != static_cast<int>(h))
      throw ValidationError("missing identity: element 0 is not a two-sided identity");
  for (std::size_t g = 0; g < n; ++g) {
    std::vector<bool> row(n, false), col(n, false);
    for (std::size_t h = 0; h < n; ++h) {
      row[static_cast<std::size_t>(table[g][h])] = true;
      col[static_cast<std::size_t>(table[h][g])] = true;
    }
    if (std::count(row.begin(), row.end(), false) || std::count(col.begin(), col.end(), false))
      throw ValidationError("missing inverse: element " + labels[g] + " is not invertible");
  }
  for (int a = 0; a < static_cast<int>(n); ++a)
    for (int b = 0; b < static_cast<int>(n); ++b) {
      const int ab = at(a, b);
      for (int c = 0; c < static_cast<int>(n); ++c)
        if (at(ab, c) != at(a, at(b, c)))
          throw ValidationError("not associative: (" + labels[static_cast<std::size_t>(a)] + ", " +
                                labels[static_cast<std::size_t>(b)] + ", " + labels[static_cast<std::size_t>(c)] + ")");
    }
  auto g = std::shared_ptr<FiniteGroup>(new FiniteGroup());
  g->order_ = static_cast<int>(n);
  g->table_.reserve(n * n);
  for (auto& row : table) g->table_.insert(g->table_.end(), row.begin(), row.end());
  g->labels_ = std::move(labels);
  return finish(std::move(g));
}

GroupPtr FiniteGroup::from_permutations(const std::vector<Perm>& generators, int degree, std::size_t bound) {
  if (degree < 1) throw ValidationError("permutation degree must be positive");
  for (const auto& p : generators) {
    if (p.size() != static_cast<std::size_t>(degree))
      throw ValidationError("generator of wrong degree (expected " + std::to_string(degree) + ")");
    std::vector<bool> hit(p.size(), false);
    for (int v : p) {
      if (v < 0 || v >= degree || hit[static_cast<std::size_t>(v)])
        throw ValidationError("generator is not a bijection of 1.." + std::to_string(degree));
      hit[static_cast<std::size_t>(v)] = true;
    }
  }
  auto g = std::shared_ptr<FiniteGroup>(new FiniteGroup());
  g->degree_ = degree;
  Perm id(static_cast<std::size_t>(degree));
  std::iota(id.begin(), id.end(), 0);
  g->perms_.push_back(id);
  g->perm_index_.emplace(perm_key(id), 0);
  std::vector<int> gen_index;
  for (std::size_t head = 0; head < g->perms_.size(); ++head) {
    for (const auto& s : generators) {
      Perm next = compose(g->perms_[head], s);
      auto [it, inserted] = g->perm_index_.emplace(perm_key(next), static_cast<int>(g->perms_.size()));
      if (inserted) {
        if (g->perms_.size() >= bound)
          throw ValidationError("permutation group closure exceeds bound " + std::to_string(bound));
        g->perms_.push_back(std::move(next));
      }
    }
  }
  for (const auto& s : generators) {
    int idx = g->perm_index_.at(perm_key(s));
    if (idx != 0 && std::find(gen_index.begin(), gen_index.end(), idx) == gen_index.end()) gen_index.push_back(idx);
  }
  const int n = static_cast<int>(g->perms_.size());
  g->order_ = n;
  for (const auto& p : g->perms_) g->labels_.push_back(cycle_notation(p));
  if (n <= kTableLimit) {
    g->table_.resize(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        g->table_[static_cast<std::size_t>(a) * static_cast<std::size_t>(n) + static_cast<std::size_t>(b)] =
            g->perm_index_.at(perm_key(compose(g->perms_[static_cast<std::size_t>(a)], g->perms_[static_cast<std::size_t>(b)])));
  }
  g->generators_ = std::move(gen_index);
  return finish(std::move(g));
}

GroupPtr FiniteGroup::finish(std::shared_ptr<FiniteGroup> g) {
  const int n = g->order_;
  g->inverse_.assign(static_cast<std::size_t>(n), 0);
  if (!g->perms_.empty() && g->table_.empty()) {
    for (int a = 0; a < n; ++a)
      g->inverse_[static_cast<std::size_t>(a)] = g->perm_index_.at(perm_key(invert(g->perms_[static_cast<std::size_t>(a)])));
  } else {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        if (g->mul(a, b) == 0) {
          g->inverse_[static_cast<std::size_t>(a)] = b;
          break;
        }
  }
  if (g->generators_.empty() && n > 1) {
    std::vector<int> span{0};
    std::vector<bool> in_span(static_cast<std::size_t>(n), false);
    in_span[0] = true;
    for (int x = 1; x < n; ++x) {
      if (in_span[static_cast<std::size_t>(x)]) continue;
      g->generators_.push_back(x);
      for (int e : g->generate(g->generators_)) in_span[static_cast<std::size_t>(e)] = true;
    }
  }
  // Conjugacy classes as orbits under conjugation by the generators.
  g->class_of_.assign(static_cast<std::size_t>(n), SIZE_MAX);
  std::vector<std::vector<int>> classes;
  for (int start = 0; start < n; ++start) {
    if (g->class_of_[static_cast<std::size_t>(start)] != SIZE_MAX) continue;
    std::vector<int> orbit{start};
    g->class_of_[static_cast<std::size_t>(start)] = classes.size();
    for (std::size_t head = 0; head < orbit.size(); ++head)
      for (int s : g->generators_) {
        int c = g->conjugate(orbit[head], s);
        if (g->class_of_[static_cast<std::size_t>(c)] == SIZE_MAX) {
          g->class_of_[static_cast<std::size_t>(c)] = classes.size();
          orbit.push_back(c);
        }
      }
    std::sort(orbit.begin(), orbit.end());
    classes.push_back(std::move(orbit));
  }
  std::stable_sort(classes.begin(), classes.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() < b.size() : a.front() < b.front();
  });
  for (std::size_t c = 0; c < classes.size(); ++c)
    for (int x : classes[c]) g->class_of_[static_cast<std::size_t>(x)] = c;
  g->classes_ = std::move(classes);
  g->exponent_ = 1;
  for (const auto& cls : g->classes_) g->exponent_ = std::lcm(g->exponent_, g->element_order(cls.front()));
  return g;
}

int FiniteGroup::mul(int a, int b) const {
  if (!table_.empty())
    return table_[static_cast<std::size_t>(a) * static_cast<std::size_t>(order_) + static_cast<std::size_t>(b)];
  return perm_index_.at(perm_key(compose(perms_[static_cast<std::size_t>(a)], perms_[static_cast<std::size_t>(b)])));
}

int FiniteGroup::pow(int a, long long e) const {
  if (e < 0) {
    a = inv(a);
    e = -e;
  }
  int result = 0;
  while (e > 0) {
    if (e & 1) result = mul(result, a);
    a = mul(a, a);
    e >>= 1;
  }
  return result;
}

int FiniteGroup::element_order(int a) const {
  int k = 1;
  for (int x = a; x != 0; x = mul(x, a)) ++k;
  return k;
}

std::optional<int> FiniteGroup::find_label(const std::string& label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i)
    if (labels_[i] == label) return static_cast<int>(i);
  return std::nullopt;
}

const Perm& FiniteGroup::permutation(int a) const {
  if (!is_permutation_group()) throw ValidationError("group was not built from permutations");
  return perms_[static_cast<std::size_t>(a)];
}

std::optional<int> FiniteGroup::index_of(const Perm& p) const {
  auto it = perm_index_.find(perm_key(p));
  if (it == perm_index_.end()) return std::nullopt;
  return it->second;
}

std::vector<int> FiniteGroup::cycle_type(int a) const {
  const Perm& p = permutation(a);
  std::vector<bool> seen(p.size(), false);
  std::vector<int> lengths;
  for (std::size_t s = 0; s < p.size(); ++s) {
    if (seen[s]) continue;
    int len = 0;
    for (std::size_t i = s; !seen[i]; i = static_cast<std::size_t>(p[i])) {
      seen[i] = true;
      ++len;
    }
    lengths.push_back(len);
  }
  std::sort(lengths.rbegin(), lengths.rend());
  return lengths;
}

std::size_t FiniteGroup::power_class(std::size_t c, long long k) const {
  return class_of(pow(class_representative(c), k));
}

std::vector<int> FiniteGroup::generate(const std::vector<int>& gens) const {
  std::vector<bool> in(static_cast<std::size_t>(order_), false);
  std::vector<int> elems{0};
  in[0] = true;
  for (std::size_t head = 0; head < elems.size(); ++head)
    for (int s : gens) {
      int y = mul(elems[head], s);
      if (!in[static_cast<std::size_t>(y)]) {
        in[static_cast<std::size_t>(y)] = true;
        elems.push_back(y);
      }
    }
  std::sort(elems.begin(), elems.end());
  return elems;
}

Subgroup::Subgroup(GroupPtr parent, std::vector<int> sorted_elements)
    : parent_(std::move(parent)), elements_(std::move(sorted_elements)) {
  const std::size_t n = static_cast<std::size_t>(parent_->order());
  position_.assign(n, -1);
  for (std::size_t i = 0; i < elements_.size(); ++i) position_[static_cast<std::size_t>(elements_[i])] = static_cast<int>(i);
  const int m = static_cast<int>(elements_.size());
  auto g = std::shared_ptr<FiniteGroup>(new FiniteGroup());
  g->order_ = m;
  for (int e : elements_) g->labels_.push_back(parent_->label(e));
  if (parent_->is_permutation_group()) {
    g->degree_ = parent_->degree();
    for (int i = 0; i < m; ++i) {
      g->perms_.push_back(parent_->permutation(elements_[static_cast<std::size_t>(i)]));
      g->perm_index_.emplace(perm_key(g->perms_.back()), i);
    }
  }
  if (m <= kTableLimit || !parent_->is_permutation_group()) {
    g->table_.resize(static_cast<std::size_t>(m) * static_cast<std::size_t>(m));
    for (int a = 0; a < m; ++a)
      for (int b = 0; b < m; ++b)
        g->table_[static_cast<std::size_t>(a) * static_cast<std::size_t>(m) + static_cast<std::size_t>(b)] =
            position_[static_cast<std::size_t>(parent_->mul(elements_[static_cast<std::size_t>(a)], elements_[static_cast<std::size_t>(b)]))];
  }
  group_ = FiniteGroup::finish(std::move(g));
}

Subgroup Subgroup::of(GroupPtr parent, std::vector<int> elements) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  if (elements.empty() || elements.front() != 0) throw ValidationError("subgroup must contain the identity");
  if (elements.back() >= parent->order() || elements.front() < 0) throw ValidationError("subgroup element out of range");
  std::vector<bool> in(static_cast<std::size_t>(parent->order()), false);
  for (int e : elements) in[static_cast<std::size_t>(e)] = true;
  for (int a : elements)
    for (int b : elements)
      if (!in[static_cast<std::size_t>(parent->mul(a, b))])
        throw ValidationError("subset is not closed: " + parent->label(a) + " * " + parent->label(b) + " escapes it");
  return Subgroup(std::move(parent), std::move(elements));
}

Subgroup Subgroup::generated(GroupPtr parent, const std::vector<int>& gens) {
  for (int g : gens)
    if (g < 0 || g >= parent->order()) throw ValidationError("generator index out of range");
  auto elems = parent->generate(gens);
  return Subgroup(std::move(parent), std::move(elems));
}

Subgroup Subgroup::whole(GroupPtr parent) {
  std::vector<int> all(static_cast<std::size_t>(parent->order()));
  std::iota(all.begin(), all.end(), 0);
  return Subgroup(std::move(parent), std::move(all));
}

Subgroup Subgroup::trivial(GroupPtr parent) { return Subgroup(std::move(parent), {0}); }

bool Subgroup::is_normal() const {
  for (int x : parent_->generators())
    for (int h : elements_)
      if (!contains(parent_->conjugate(h, x))) return false;
  return true;
}

bool Subgroup::is_subgroup_of(const Subgroup& other) const {
  return std::all_of(elements_.begin(), elements_.end(), [&](int e) { return other.contains(e); });
}

Subgroup Subgroup::intersect(const Subgroup& other) const {
  std::vector<int> common;
  for (int e : elements_)
    if (other.contains(e)) common.push_back(e);
  return Subgroup(parent_, std::move(common));
}

Subgroup Subgroup::conjugate(int x) const {
  std::vector<int> conj;
  for (int h : elements_) conj.push_back(parent_->conjugate(h, x));
  std::sort(conj.begin(), conj.end());
  return Subgroup(parent_, std::move(conj));
}

std::string Subgroup::str() const {
  std::string out = "{";
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    if (i) out += ", ";
    out += parent_->label(elements_[i]);
  }
  return out + "}";
}

Quotient quotient(const Subgroup& normal) {
  const GroupPtr& g = normal.parent();
  if (!normal.is_normal()) throw ValidationError("subgroup " + normal.str() + " is not normal");
  const int n = g->order();
  std::vector<int> projection(static_cast<std::size_t>(n), -1);
  std::vector<int> reps;
  for (int x = 0; x < n; ++x) {
    if (projection[static_cast<std::size_t>(x)] >= 0) continue;
    for (int h : normal.elements()) projection[static_cast<std::size_t>(g->mul(x, h))] = static_cast<int>(reps.size());
    reps.push_back(x);
  }
  const int m = static_cast<int>(reps.size());
  auto q = std::shared_ptr<FiniteGroup>(new FiniteGroup());
  q->order_ = m;
  q->table_.resize(static_cast<std::size_t>(m) * static_cast<std::size_t>(m));
  for (int a = 0; a < m; ++a) {
    q->labels_.push_back("[" + g->label(reps[static_cast<std::size_t>(a)]) + "]");
    for (int b = 0; b < m; ++b)
      q->table_[static_cast<std::size_t>(a) * static_cast<std::size_t>(m) + static_cast<std::size_t>(b)] =
          projection[static_cast<std::size_t>(g->mul(reps[static_cast<std::size_t>(a)], reps[static_cast<std::size_t>(b)]))];
  }
  GroupPtr qg = FiniteGroup::finish(std::move(q));
  // π(x·s) = π(x)·π(s) on all x and generators s makes π a homomorphism.
  for (int x = 0; x < n; ++x)
    for (int s : g->generators())
      if (projection[static_cast<std::size_t>(g->mul(x, s))] !=
          qg->mul(projection[static_cast<std::size_t>(x)], projection[static_cast<std::size_t>(s)]))
        throw InconsistencyError("quotient projection is not a homomorphism");
  return {qg, std::move(projection)};
}

std::vector<Subgroup> all_subgroups(const GroupPtr& g) {
  std::map<std::vector<int>, std::vector<int>> found;  // elements → generators
  std::vector<std::vector<int>> frontier;
  auto add = [&](std::vector<int> elems, std::vector<int> gens) {
    auto [it, inserted] = found.emplace(std::move(elems), std::move(gens));
    if (inserted) frontier.push_back(it->first);
  };
  add({0}, {});
  for (int x = 1; x < g->order(); ++x) add(g->generate({x}), {x});
  while (!frontier.empty()) {
    auto current = std::move(frontier);
    frontier.clear();
    for (const auto& elems : current) {
      const std::vector<int> gens = found.at(elems);
      std::vector<bool> in(static_cast<std::size_t>(g->order()), false);
      for (int e : elems) in[static_cast<std::size_t>(e)] = true;
      for (int x = 1; x < g->order(); ++x) {
        if (in[static_cast<std::size_t>(x)]) continue;
        auto next_gens = gens;
        next_gens.push_back(x);
        auto joined = g->generate(next_gens);
        if (!found.count(joined)) add(std::move(joined), std::move(next_gens));
      }
    }
  }
  std::vector<Subgroup> out;
  for (const auto& [elems, gens] : found) out.push_back(Subgroup::of(g, elems));
  std::sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
    return a.order() != b.order() ? a.order() < b.order() : a.elements() < b.elements();
  });
  return out;
}

}  // namespace galrep
