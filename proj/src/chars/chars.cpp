#include "galrep/chars.hpp"

#include <algorithm>
#include <cmath>

#include "galrep/errors.hpp"
#include "galrep/exact/finite_field.hpp"

namespace galrep {

namespace {

using Vec = std::vector<std::uint64_t>;

void require_same_group(const ClassFunction& a, const ClassFunction& b) {
  if (a.group() != b.group()) throw ValidationError("class functions live on different groups");
}

// Null space of an rows×cols matrix over F_p.
std::vector<Vec> nullspace(std::vector<Vec> m, std::size_t cols, std::uint64_t p) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t piv = r;
    while (piv < m.size() && m[piv][c] == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[piv], m[r]);
    const auto inv = fp::inverse(m[r][c], p);
    for (auto& v : m[r]) v = fp::mulmod(v, inv, p);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][c] == 0) continue;
      const auto f = m[i][c];
      for (std::size_t j = 0; j < cols; ++j) m[i][j] = (m[i][j] + p - fp::mulmod(f, m[r][j], p)) % p;
    }
    pivots.push_back(c);
    ++r;
  }
  std::vector<Vec> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (std::find(pivots.begin(), pivots.end(), free) != pivots.end()) continue;
    Vec v(cols, 0);
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = (p - m[i][free]) % p;
    basis.push_back(std::move(v));
  }
  return basis;
}

std::uint64_t primitive_root(std::uint64_t p) {
  const auto factors = prime_factors(p - 1);
  for (std::uint64_t g = 2;; ++g) {
    bool ok = true;
    for (auto q : factors)
      if (fp::powmod(g, (p - 1) / q, p) == 1) ok = false;
    if (ok) return g;
  }
}

bool is_trivial(const ClassFunction& chi) {
  return std::all_of(chi.values().begin(), chi.values().end(), [](const Cyclotomic& v) { return v == Cyclotomic(1L); });
}

int compare_rows(const ClassFunction& a, const ClassFunction& b) {
  if (is_trivial(a) != is_trivial(b)) return is_trivial(a) ? -1 : 1;
  if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
  for (std::size_t c = 0; c < a.values().size(); ++c)
    if (int r = compare(a.values()[c], b.values()[c]); r != 0) return r;
  return 0;
}

void verify_table(const GroupPtr& group, const std::vector<ClassFunction>& rows) {
  if (rows.size() != group->class_count())
    throw ValidationError("character table has " + std::to_string(rows.size()) + " rows, expected " +
                          std::to_string(group->class_count()));
  if (rows.empty() || !is_trivial(rows[0])) throw ValidationError("first character table row must be trivial");
  Integer sum_sq = 0;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].group() != group) throw ValidationError("character table row " + std::to_string(i) + " is on another group");
    for (std::size_t j = i; j < rows.size(); ++j) {
      const Cyclotomic ip = inner_product(rows[i], rows[j]);
      if (ip != Cyclotomic(i == j ? 1L : 0L))
        throw ValidationError("character table rows " + std::to_string(i) + " and " + std::to_string(j) +
                              " are not orthonormal (inner product " + ip.str() + ")");
    }
    const Integer d = rows[i].degree();
    sum_sq += d * d;
  }
  if (sum_sq != group->order()) throw ValidationError("sum of squared dimensions is not the group order");
}

}  // namespace

ClassFunction::ClassFunction(GroupPtr group, std::vector<Cyclotomic> values)
    : group_(std::move(group)), values_(std::move(values)) {
  if (values_.size() != group_->class_count())
    throw ValidationError("class function has " + std::to_string(values_.size()) + " values, group has " +
                          std::to_string(group_->class_count()) + " classes");
}

ClassFunction ClassFunction::trivial(GroupPtr group) {
  const auto n = group->class_count();
  return ClassFunction(std::move(group), std::vector<Cyclotomic>(n, Cyclotomic(1L)));
}

ClassFunction ClassFunction::zero(GroupPtr group) {
  const auto n = group->class_count();
  return ClassFunction(std::move(group), std::vector<Cyclotomic>(n));
}

ClassFunction ClassFunction::regular(GroupPtr group) {
  std::vector<Cyclotomic> v(group->class_count());
  v[0] = Cyclotomic(static_cast<long>(group->order()));
  return ClassFunction(std::move(group), std::move(v));
}

Integer ClassFunction::degree() const {
  auto d = values_[0].as_integer();
  if (!d || *d < 0) throw ValidationError("class function value at the identity is not a dimension: " + values_[0].str());
  return *d;
}

ClassFunction ClassFunction::conj() const { return galois(-1); }

ClassFunction ClassFunction::galois(std::int64_t k) const {
  std::vector<Cyclotomic> v;
  v.reserve(values_.size());
  for (const auto& x : values_) {
    const auto m = x.minimal();
    const auto level = static_cast<std::int64_t>(m.level());
    std::int64_t kk = level == 1 ? 1 : ((k % level) + level) % level;
    v.push_back(m.galois(kk));
  }
  return ClassFunction(group_, std::move(v));
}

std::string ClassFunction::str() const {
  std::string out;
  for (std::size_t i = 0; i < values_.size(); ++i) out += (i ? ", " : "") + values_[i].str();
  return out;
}

ClassFunction& ClassFunction::operator+=(const ClassFunction& o) {
  require_same_group(*this, o);
  for (std::size_t i = 0; i < values_.size(); ++i) values_[i] += o.values_[i];
  return *this;
}

ClassFunction& ClassFunction::operator-=(const ClassFunction& o) {
  require_same_group(*this, o);
  for (std::size_t i = 0; i < values_.size(); ++i) values_[i] -= o.values_[i];
  return *this;
}

ClassFunction operator*(const Cyclotomic& c, const ClassFunction& f) {
  std::vector<Cyclotomic> v = f.values_;
  for (auto& x : v) x *= c;
  return ClassFunction(f.group_, std::move(v));
}

bool operator==(const ClassFunction& a, const ClassFunction& b) {
  return a.group_ == b.group_ && a.values_ == b.values_;
}

Cyclotomic inner_product(const ClassFunction& chi, const ClassFunction& psi) {
  require_same_group(chi, psi);
  const auto& g = *chi.group();
  Cyclotomic sum;
  for (std::size_t c = 0; c < g.class_count(); ++c) {
    if (chi.on_class(c).is_zero() || psi.on_class(c).is_zero()) continue;
    sum += Cyclotomic(static_cast<long>(g.class_size(c))) * chi.on_class(c) * psi.on_class(c).conj();
  }
  return sum * Cyclotomic(Rational(1, g.order()));
}

ClassFunction induce(const Subgroup& h, const ClassFunction& chi_h) {
  if (chi_h.group() != h.group()) throw ValidationError("induce: character is not defined on the subgroup");
  const auto& g = *h.parent();
  std::vector<Cyclotomic> values(g.class_count());
  for (std::size_t c = 0; c < g.class_count(); ++c) {
    const int rep = g.class_representative(c);
    Cyclotomic sum;
    for (int x = 0; x < g.order(); ++x) {
      const int y = g.conjugate(rep, x);
      if (h.contains(y)) sum += chi_h(h.from_parent(y));
    }
    values[c] = sum * Cyclotomic(Rational(1, h.order()));
  }
  return ClassFunction(h.parent(), std::move(values));
}

ClassFunction restrict(const ClassFunction& chi, const Subgroup& h) {
  if (chi.group() != h.parent()) throw ValidationError("restrict: subgroup of a different group");
  const auto& hg = *h.group();
  std::vector<Cyclotomic> values;
  for (std::size_t c = 0; c < hg.class_count(); ++c) values.push_back(chi(h.to_parent(hg.class_representative(c))));
  return ClassFunction(h.group(), std::move(values));
}

ClassFunction tensor(const ClassFunction& chi, const ClassFunction& psi) {
  require_same_group(chi, psi);
  std::vector<Cyclotomic> values;
  for (std::size_t c = 0; c < chi.values().size(); ++c) values.push_back(chi.on_class(c) * psi.on_class(c));
  return ClassFunction(chi.group(), std::move(values));
}

Integer invariant_dimension(const ClassFunction& chi, const Subgroup& h) {
  const auto res = restrict(chi, h);
  const auto ip = inner_product(res, ClassFunction::trivial(h.group()));
  auto d = ip.as_integer();
  if (!d || *d < 0) throw ValidationError("not a character: invariant dimension " + ip.str() + " on " + h.str());
  return *d;
}

CharacterTable::CharacterTable(GroupPtr group, std::vector<ClassFunction> rows)
    : group_(std::move(group)), rows_(std::move(rows)) {}

CharacterTable CharacterTable::from_rows(const GroupPtr& group, std::vector<ClassFunction> rows) {
  verify_table(group, rows);
  return CharacterTable(group, std::move(rows));
}

CharacterTable CharacterTable::compute(const GroupPtr& group, std::size_t bound) {
  const auto& g = *group;
  if (static_cast<std::size_t>(g.order()) > bound)
    throw ValidationError("group order " + std::to_string(g.order()) + " exceeds bound " + std::to_string(bound));
  const std::size_t r = g.class_count();
  const auto e = static_cast<std::uint64_t>(g.exponent());
  const auto order = static_cast<std::uint64_t>(g.order());

  std::uint64_t p = e + 1;
  while (!is_prime(p) || p * p <= 4 * order) p += e;

  // c[j][k][l] = #{(x, y) : x ∈ C_j, y ∈ C_k, xy = z_l} for the representative z_l.
  std::vector<std::vector<std::vector<std::uint64_t>>> c(r, std::vector<std::vector<std::uint64_t>>(r, Vec(r, 0)));
  for (std::size_t j = 0; j < r; ++j)
    for (int x : g.conjugacy_class(j)) {
      const int xinv = g.inv(x);
      for (std::size_t l = 0; l < r; ++l) ++c[j][g.class_of(g.mul(xinv, g.class_representative(l)))][l];
    }

  // Simultaneous eigenspaces of A_j with (A_j)_{kl} = c[j][k][l].
  std::vector<std::vector<Vec>> spaces;
  {
    std::vector<Vec> basis;
    for (std::size_t i = 0; i < r; ++i) {
      Vec v(r, 0);
      v[i] = 1;
      basis.push_back(v);
    }
    spaces.push_back(std::move(basis));
  }
  for (std::size_t j = 1; j < r; ++j) {
    std::vector<std::vector<Vec>> next;
    for (auto& basis : spaces) {
      if (basis.size() == 1) {
        next.push_back(std::move(basis));
        continue;
      }
      const std::size_t d = basis.size();
      std::vector<Vec> image;
      for (const auto& b : basis) {
        Vec a(r, 0);
        for (std::size_t k = 0; k < r; ++k)
          for (std::size_t l = 0; l < r; ++l) a[k] = (a[k] + fp::mulmod(c[j][k][l] % p, b[l], p)) % p;
        image.push_back(std::move(a));
      }
      std::size_t found = 0;
      for (std::uint64_t lambda = 0; lambda < p && found < d; ++lambda) {
        std::vector<Vec> m(r, Vec(d, 0));
        for (std::size_t col = 0; col < d; ++col)
          for (std::size_t k = 0; k < r; ++k)
            m[k][col] = (image[col][k] + p - fp::mulmod(lambda, basis[col][k], p)) % p;
        auto kernel = nullspace(std::move(m), d, p);
        if (kernel.empty()) continue;
        std::vector<Vec> sub;
        for (const auto& coef : kernel) {
          Vec v(r, 0);
          for (std::size_t col = 0; col < d; ++col)
            for (std::size_t k = 0; k < r; ++k) v[k] = (v[k] + fp::mulmod(coef[col], basis[col][k], p)) % p;
          sub.push_back(std::move(v));
        }
        found += sub.size();
        next.push_back(std::move(sub));
      }
      if (found != d) throw InconsistencyError("class-sum matrix is not diagonalizable mod " + std::to_string(p));
    }
    spaces = std::move(next);
  }
  if (spaces.size() != r) throw InconsistencyError("class sums did not separate the characters");

  std::vector<std::size_t> inverse_class(r);
  for (std::size_t l = 0; l < r; ++l) inverse_class[l] = g.class_of(g.inv(g.class_representative(l)));
  std::vector<std::vector<std::size_t>> power(r, std::vector<std::size_t>(e));
  for (std::size_t l = 0; l < r; ++l)
    for (std::uint64_t k = 0; k < e; ++k) power[l][k] = g.power_class(l, static_cast<long long>(k));
  const std::uint64_t z = fp::powmod(primitive_root(p), (p - 1) / e, p);
  const std::uint64_t z_inv = fp::inverse(z, p);
  const std::uint64_t e_inv = fp::inverse(e % p, p);

  std::vector<ClassFunction> rows;
  for (const auto& space : spaces) {
    Vec omega = space[0];
    const auto norm = fp::inverse(omega[0], p);
    for (auto& v : omega) v = fp::mulmod(v, norm, p);
    std::uint64_t s = 0;
    for (std::size_t l = 0; l < r; ++l)
      s = (s + fp::mulmod(fp::mulmod(omega[l], omega[inverse_class[l]], p), fp::inverse(g.class_size(l) % p, p), p)) % p;
    const std::uint64_t d2 = fp::mulmod(order % p, fp::inverse(s, p), p);
    std::uint64_t dim = 0;
    for (std::uint64_t d = 1; d * d <= order; ++d)
      if (order % d == 0 && (d * d) % p == d2) dim = d;
    if (dim == 0) throw InconsistencyError("no character degree matches mod " + std::to_string(p));
    Vec chi(r);
    for (std::size_t l = 0; l < r; ++l)
      chi[l] = fp::mulmod(fp::mulmod(omega[l], dim, p), fp::inverse(g.class_size(l) % p, p), p);
    std::vector<Cyclotomic> values;
    for (std::size_t l = 0; l < r; ++l) {
      std::vector<Rational> mult(e);
      for (std::uint64_t k = 0; k < e; ++k) {
        // m_k = (1/e) Σ_j χ(g^j) z^{-jk}
        std::uint64_t sum = 0, step = fp::powmod(z_inv, k, p), w = 1;
        for (std::uint64_t jj = 0; jj < e; ++jj) {
          sum = (sum + fp::mulmod(chi[power[l][jj]], w, p)) % p;
          w = fp::mulmod(w, step, p);
        }
        const std::uint64_t m = fp::mulmod(sum, e_inv, p);
        if (m > dim) throw InconsistencyError("eigenvalue multiplicity out of range mod " + std::to_string(p));
        mult[k] = Rational(static_cast<unsigned long>(m));
      }
      values.push_back(Cyclotomic::from_powers(e, mult).minimal());
    }
    rows.emplace_back(group, std::move(values));
  }
  std::sort(rows.begin(), rows.end(), [](const ClassFunction& a, const ClassFunction& b) { return compare_rows(a, b) < 0; });
  try {
    verify_table(group, rows);
  } catch (const ValidationError& err) {
    throw InconsistencyError(std::string("computed character table failed verification: ") + err.what());
  }
  return CharacterTable(group, std::move(rows));
}

int CharacterTable::index_of(const ClassFunction& chi) const {
  for (std::size_t i = 0; i < rows_.size(); ++i)
    if (rows_[i] == chi) return static_cast<int>(i);
  return -1;
}

std::vector<Integer> decompose(const ClassFunction& chi, const CharacterTable& table) {
  if (chi.group() != table.group()) throw ValidationError("decompose: character table of a different group");
  std::vector<Integer> out;
  for (std::size_t i = 0; i < table.size(); ++i) {
    const auto m = inner_product(chi, table[i]);
    auto mi = m.as_integer();
    if (!mi) throw ValidationError("not a character: multiplicity " + m.str() + " of irreducible " + std::to_string(i) + " is not an integer");
    if (*mi < 0) throw ValidationError("not a character: multiplicity " + m.str() + " of irreducible " + std::to_string(i) + " is negative");
    out.push_back(*mi);
  }
  return out;
}

ClassFunction from_multiplicities(const std::vector<Integer>& multiplicities, const CharacterTable& table) {
  if (multiplicities.size() != table.size()) throw ValidationError("multiplicity vector has the wrong length");
  auto sum = ClassFunction::zero(table.group());
  for (std::size_t i = 0; i < table.size(); ++i) sum += Cyclotomic(multiplicities[i]) * table[i];
  return sum;
}

}  // namespace galrep
