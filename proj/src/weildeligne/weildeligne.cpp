#include "galrep/weildeligne.hpp"

#include <algorithm>
#include <numeric>

#include "galrep/errors.hpp"

namespace galrep {

namespace {

Rational rational_power(const Integer& q, int e) {
  const Integer m = ipow(q, static_cast<unsigned>(std::abs(e)));
  return e >= 0 ? Rational(m) : Rational(Integer(1), m);
}

const ClassFunction* artin_character(const WDComponent& c) { return std::get_if<ClassFunction>(&c.artin); }

int compare_components(const WDComponent& a, const WDComponent& b, const CharacterTable& table) {
  if (a.sp != b.sp) return a.sp < b.sp ? -1 : 1;
  if (a.twist.weight != b.twist.weight) return a.twist.weight < b.twist.weight ? -1 : 1;
  if (a.artin.index() != b.artin.index()) return a.artin.index() < b.artin.index() ? -1 : 1;
  if (const auto* chi = artin_character(a)) {
    const int ia = table.index_of(*chi), ib = table.index_of(*artin_character(b));
    if (ia != ib) return ia < ib ? -1 : 1;
  } else {
    const auto& qa = std::get<QuadraticFrobenius>(a.artin);
    const auto& qb = std::get<QuadraticFrobenius>(b.artin);
    if (qa.a != qb.a) return qa.a < qb.a ? -1 : 1;
  }
  return compare(a.twist.unit, b.twist.unit);
}

}  // namespace

SpMatrices sp_matrices(int n, const Integer& q) {
  if (n < 1) throw ValidationError("sp(n) needs n >= 1, got " + std::to_string(n));
  SpMatrices m;
  const auto size = static_cast<std::size_t>(n);
  m.inertia.assign(size, std::vector<UniPoly>(size));
  m.frobenius.assign(size, std::vector<Integer>(size, Integer(0)));
  for (std::size_t i = 0; i < size; ++i) {
    m.frobenius[i][i] = ipow(q, static_cast<unsigned>(i));
    for (std::size_t j = i; j < size; ++j) {
      std::vector<Cyclotomic> coeffs(j - i + 1);
      coeffs.back() = Cyclotomic(Rational(Integer(1), factorial(static_cast<unsigned>(j - i))));
      m.inertia[i][j] = UniPoly(coeffs);
    }
  }
  return m;
}

UnramifiedTwist UnramifiedTwist::make(Cyclotomic unit, int weight) {
  if (unit.is_zero()) throw ValidationError("unramified twist with zero unit");
  return {unit.minimal(), weight};
}

Cyclotomic UnramifiedTwist::value(const Integer& q) const {
  const int half = weight >= 0 ? weight / 2 : -((1 - weight) / 2);
  Cyclotomic v = unit * Cyclotomic(rational_power(q, half));
  if (weight % 2 != 0) v *= Cyclotomic::sqrt_of(q);
  return v;
}

UnramifiedTwist operator*(const UnramifiedTwist& a, const UnramifiedTwist& b) {
  return {(a.unit * b.unit).minimal(), a.weight + b.weight};
}

int WDComponent::artin_dimension() const {
  if (const auto* chi = std::get_if<ClassFunction>(&artin)) return static_cast<int>(chi->degree().get_si());
  return 2;
}

bool operator==(const WDComponent& a, const WDComponent& b) {
  return a.sp == b.sp && a.twist == b.twist && a.artin == b.artin;
}

WDRep WDRep::create(std::shared_ptr<const RamificationData> data, std::vector<WDComponent> components,
                    std::shared_ptr<const CharacterTable> table) {
  if (!data) throw ValidationError("WD representation without ramification data");
  if (table && table->group() != data->group()) throw ValidationError("character table of a different group");
  WDRep w;
  w.table_ = table ? std::move(table) : std::make_shared<const CharacterTable>(CharacterTable::compute(data->group()));
  for (std::size_t k = 0; k < components.size(); ++k) {
    auto& c = components[k];
    const std::string where = "WD component " + std::to_string(k + 1) + ": ";
    if (c.sp < 1) throw ValidationError(where + "sp(n) needs n >= 1, got " + std::to_string(c.sp));
    if (c.twist.unit.is_zero()) throw ValidationError(where + "twist unit is zero");
    c.twist.unit = c.twist.unit.minimal();
    if (const auto* quad = std::get_if<QuadraticFrobenius>(&c.artin)) {
      if (quad->q != data->q())
        throw ValidationError(where + "quadratic block has q = " + to_string(quad->q) + " but the residue field has q = " +
                              to_string(data->q()));
      w.components_.push_back(c);
      continue;
    }
    const auto& chi = std::get<ClassFunction>(c.artin);
    if (chi.group() != data->group()) throw ValidationError(where + "Artin part lives on a different group");
    std::vector<Integer> mult;
    try {
      mult = decompose(chi, *w.table_);
    } catch (const ValidationError& e) {
      throw ValidationError(where + "Artin part is not a character: " + e.what());
    }
    if (std::all_of(mult.begin(), mult.end(), [](const Integer& m) { return m == 0; }))
      throw ValidationError(where + "Artin part is zero");
    for (std::size_t i = 0; i < mult.size(); ++i)
      for (Integer m = 0; m < mult[i]; ++m) w.components_.push_back({(*w.table_)[i], c.twist, c.sp});
  }
  const auto& sorted_by = *w.table_;
  std::stable_sort(w.components_.begin(), w.components_.end(),
                   [&](const WDComponent& a, const WDComponent& b) { return compare_components(a, b, sorted_by) < 0; });
  w.data_ = std::move(data);
  return w;
}

int WDRep::dimension() const {
  int d = 0;
  for (const auto& c : components_) d += c.dimension();
  return d;
}

const CharacterTable& WDRep::table() const { return *table_; }

bool operator==(const WDRep& a, const WDRep& b) {
  return a.data_->group() == b.data_->group() && a.data_->q() == b.data_->q() && a.components_ == b.components_;
}

std::shared_ptr<const RamificationData> unramified_data(const Integer& q) {
  const auto pp = as_prime_power(q);
  if (!pp) throw ValidationError("residue field size " + to_string(q) + " is not a prime power");
  static const GroupPtr g = FiniteGroup::from_table({{0}}, {"e"});
  return std::make_shared<const RamificationData>(
      RamificationData::create(g, {Subgroup::trivial(g)}, 0, pp->prime, q));
}

UniPoly wd_local_polynomial(const WDRep& w) {
  const auto& data = *w.data();
  UniPoly out = UniPoly::one();
  for (const auto& c : w.components()) {
    const Cyclotomic alpha = c.twist.value(data.q());
    if (const auto* chi = artin_character(c)) {
      out = out * local_polynomial(*chi, data).scale_variable(alpha);
    } else {
      const auto& quad = std::get<QuadraticFrobenius>(c.artin);
      out = out * UniPoly({Cyclotomic(1L), Cyclotomic(Integer(-quad.a)), Cyclotomic(quad.q)}).scale_variable(alpha);
    }
  }
  return out;
}

Integer wd_conductor(const WDRep& w) {
  const auto& data = *w.data();
  Integer total = 0;
  for (const auto& c : w.components()) {
    const Integer n(c.sp);
    if (const auto* chi = artin_character(c)) {
      const auto exponent = conductor_exponent(*chi, data);
      const Rational wild = exponent.wild * Rational(n);
      if (!is_integer(wild)) throw InconsistencyError("wild conductor " + to_string(wild) + " is not an integer");
      total += n * chi->degree() - invariant_dimension(*chi, data.inertia()) + wild.get_num();
    } else {
      total += n * 2 - 2;
    }
  }
  return total;
}

WDRep wd_tensor(const WDRep& a, const WDRep& b) {
  if (a.data()->group() != b.data()->group() || a.data()->q() != b.data()->q())
    throw ValidationError("WD tensor product of representations over different ramification data");
  const auto trivial = ClassFunction::trivial(a.data()->group());
  std::vector<WDComponent> out;
  for (const auto& x : a.components()) {
    for (const auto& y : b.components()) {
      const auto* cx = artin_character(x);
      const auto* cy = artin_character(y);
      std::variant<ClassFunction, QuadraticFrobenius> artin = trivial;
      if (cx && cy) {
        artin = tensor(*cx, *cy);
      } else if (cx && *cx == trivial) {
        artin = y.artin;
      } else if (cy && *cy == trivial) {
        artin = x.artin;
      } else {
        throw ValidationError("tensor product of a quadratic Frobenius block with a non-trivial Artin part is not supported");
      }
      const UnramifiedTwist twist = x.twist * y.twist;
      for (int i = 0; i < std::min(x.sp, y.sp); ++i)
        out.push_back({artin, twist * UnramifiedTwist{Cyclotomic(1L), 2 * i}, x.sp + y.sp - 1 - 2 * i});
    }
  }
  return WDRep::create(a.data(), std::move(out), a.table_ptr());
}

InertiaImage tame_inertia_image(const WDRep& w) {
  const auto& data = *w.data();
  const auto& g = *data.group();
  const Subgroup& wild = data.ramification_group(1);
  for (const auto& c : w.components())
    if (const auto* chi = artin_character(c))
      if (invariant_dimension(*chi, wild) != chi->degree())
        throw ValidationError("wild inertia I_1 = " + wild.str() + " acts nontrivially");
  const int dim = w.dimension();
  auto trace = [&](int x) {
    Cyclotomic s;
    for (const auto& c : w.components()) {
      if (const auto* chi = artin_character(c))
        s += Cyclotomic(static_cast<long>(c.sp)) * (*chi)(x);
      else
        s += Cyclotomic(static_cast<long>(2 * c.sp));
    }
    return s;
  };
  InertiaImage best{0, UniPoly()};
  for (int h : data.inertia().elements()) {
    int order = 1;
    while (trace(g.pow(h, order)) != Cyclotomic(static_cast<long>(dim))) ++order;
    if (order > best.order) {
      std::vector<Cyclotomic> sums;
      for (int k = 1; k <= dim; ++k) sums.push_back(trace(g.pow(h, k)));
      best = {order, newton_charpoly(sums).monic};
    }
  }
  return best;
}

EllipticLocalData EllipticLocalData::good(const Integer& a, const Integer& q) {
  if (!as_prime_power(q)) throw ValidationError("residue field size " + to_string(q) + " is not a prime power");
  if (a * a > 4 * q)
    throw ValidationError("Hasse bound violated: a = " + to_string(a) + " but a^2 = " + to_string(Integer(a * a)) +
                          " > 4q = " + to_string(Integer(4 * q)));
  EllipticLocalData d;
  d.kind_ = Reduction::Good;
  d.a_ = a;
  d.q_ = q;
  return d;
}

EllipticLocalData EllipticLocalData::split_multiplicative(const Integer& q) {
  if (!as_prime_power(q)) throw ValidationError("residue field size " + to_string(q) + " is not a prime power");
  EllipticLocalData d;
  d.kind_ = Reduction::SplitMultiplicative;
  d.q_ = q;
  return d;
}

EllipticLocalData EllipticLocalData::nonsplit_multiplicative(const Integer& q) {
  auto d = split_multiplicative(q);
  d.kind_ = Reduction::NonsplitMultiplicative;
  return d;
}

EllipticLocalData EllipticLocalData::additive(WDRep wd) {
  if (wd.dimension() != 2)
    throw ValidationError("elliptic WD data must be 2-dimensional, got dimension " + std::to_string(wd.dimension()));
  const auto& data = *wd.data();
  if (wd_local_polynomial(wd) != UniPoly::one())
    throw ValidationError("additive reduction needs vanishing inertia invariants, but the local polynomial is " +
                          wd_local_polynomial(wd).str());
  if (data.p() >= 5) {
    InertiaImage image;
    try {
      image = tame_inertia_image(wd);
    } catch (const ValidationError& e) {
      throw ValidationError("additive reduction at p = " + std::to_string(data.p()) + " >= 5 must be tame: " + e.what());
    }
    if (image.order == 5 || image.order > 6)
      throw ValidationError("tame inertia generator has characteristic polynomial " + image.charpoly.str("x") + " of order " +
                            std::to_string(image.order) + "; for p >= 5 the order must be 1, 2, 3, 4 or 6");
    const Integer n = wd_conductor(wd);
    if (n > 2) throw ValidationError("conductor exponent " + to_string(n) + " exceeds 2 at p = " + std::to_string(data.p()));
  }
  EllipticLocalData d;
  d.kind_ = Reduction::Additive;
  d.q_ = data.q();
  d.wd_ = std::move(wd);
  return d;
}

WDRep ec_local_wd(const EllipticLocalData& data) {
  if (data.kind() == Reduction::Additive) return *data.wd();
  const auto unramified = unramified_data(data.q());
  const auto trivial = ClassFunction::trivial(unramified->group());
  switch (data.kind()) {
    case Reduction::SplitMultiplicative:
      return WDRep::create(unramified, {{trivial, {}, 2}});
    case Reduction::NonsplitMultiplicative:
      return WDRep::create(unramified, {{trivial, UnramifiedTwist::make(Cyclotomic(-1L), 0), 2}});
    default:
      break;
  }
  const Cyclotomic root_q = Cyclotomic::sqrt_of(data.q());
  for (std::uint64_t n : {1, 2, 3, 4, 6, 8, 12}) {
    for (std::uint64_t k = 0; k < n; ++k) {
      const Cyclotomic u = Cyclotomic::zeta(n, static_cast<std::int64_t>(k));
      if (u * root_q + u.conj() * root_q == Cyclotomic(data.a()))
        return WDRep::create(unramified, {{trivial, UnramifiedTwist::make(u, 1), 1}, {trivial, UnramifiedTwist::make(u.conj(), 1), 1}});
    }
  }
  return WDRep::create(unramified, {{QuadraticFrobenius{data.a(), data.q()}, {}, 1}});
}

Integer weierstrass_discriminant(const Weierstrass& c) {
  const auto& [a1, a2, a3, a4, a6] = c;
  const Integer b2 = a1 * a1 + 4 * a2;
  const Integer b4 = 2 * a4 + a1 * a3;
  const Integer b6 = a3 * a3 + 4 * a6;
  const Integer b8 = a1 * a1 * a6 + 4 * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4;
  return -b2 * b2 * b8 - 8 * b4 * b4 * b4 - 27 * b6 * b6 + 9 * b2 * b4 * b6;
}

namespace {

std::uint64_t reduce(const Integer& v, std::uint64_t p) {
  Integer r;
  const Integer pz(static_cast<unsigned long>(p));
  mpz_fdiv_r(r.get_mpz_t(), v.get_mpz_t(), pz.get_mpz_t());
  return r.get_ui();
}

std::string singular_point(const Weierstrass& c, std::uint64_t p) {
  std::array<std::uint64_t, 5> a{};
  for (std::size_t i = 0; i < 5; ++i) a[i] = reduce(c[i], p);
  const auto [a1, a2, a3, a4, a6] = a;
  auto m = [p](std::uint64_t x, std::uint64_t y) { return x * y % p; };
  auto singular_at = [&](std::uint64_t x, std::uint64_t y) {
    const std::uint64_t lhs = (m(y, y) + m(m(a1, x), y) + m(a3, y)) % p;
    const std::uint64_t rhs = (m(m(x, x), x) + m(m(a2, x), x) + m(a4, x) + a6) % p;
    const std::uint64_t fy = (2 * y + m(a1, x) + a3) % p;
    const std::uint64_t fx = (m(a1, y) + 3 * p - m(3, m(x, x)) - m(m(2, a2), x) - a4) % p;
    return lhs == rhs && fy == 0 && fx == 0;
  };
  // The singular point is unique, hence F_p-rational; for odd p the y-partial fixes y.
  const std::uint64_t half = p == 2 ? 0 : fp::inverse(2, p);
  for (std::uint64_t x = 0; x < p; ++x) {
    if (p == 2) {
      for (std::uint64_t y = 0; y < 2; ++y)
        if (singular_at(x, y)) return "(" + std::to_string(x) + ", " + std::to_string(y) + ")";
      continue;
    }
    const std::uint64_t y = m(p - (m(a1, x) + a3) % p, half);
    if (singular_at(x, y)) return "(" + std::to_string(x) + ", " + std::to_string(y) + ")";
  }
  return "not located";
}

// F_q with elements as base-p digit indices, multiplying through discrete logarithms.
class LogTables {
 public:
  explicit LogTables(const FiniteField& field)
      : field_(field), p_(field.characteristic()), size_(field.size()), log_(size_, 0) {
    const Integer order(static_cast<unsigned long>(size_ - 1));
    FiniteField::Element g = field.one();
    for (std::uint64_t i = 1; i < size_; ++i) {
      g = field.element_at(i);
      bool primitive = true;
      for (auto r : prime_factors(size_ - 1))
        if (field.pow(g, order / static_cast<unsigned long>(r)) == field.one()) primitive = false;
      if (primitive) break;
    }
    exp_.resize(size_ - 1);
    auto power = field.one();
    for (std::uint64_t i = 0; i + 1 < size_; ++i) {
      exp_[i] = field.index_of(power);
      log_[exp_[i]] = i;
      power = field.mul(power, g);
    }
    for (std::uint64_t place = 1; place < size_; place *= p_) places_.push_back(place);
    for (std::size_t i = 0; i < places_.size(); ++i) basis_trace_.push_back(field.trace(field.element_at(places_[i])));
  }

  std::uint64_t size() const { return size_; }
  std::uint64_t from_int(const Integer& v) const { return field_.index_of(field_.from_int(v)); }
  std::uint64_t add(std::uint64_t u, std::uint64_t v) const {
    if (places_.size() == 1) return (u + v) % p_;
    std::uint64_t out = 0;
    for (std::uint64_t place : places_) {
      out += ((u % p_ + v % p_) % p_) * place;
      u /= p_;
      v /= p_;
    }
    return out;
  }
  std::uint64_t mul(std::uint64_t u, std::uint64_t v) const {
    if (u == 0 || v == 0) return 0;
    return exp_[(log_[u] + log_[v]) % (size_ - 1)];
  }
  std::uint64_t inverse(std::uint64_t u) const { return exp_[(size_ - 1 - log_[u]) % (size_ - 1)]; }
  bool is_square(std::uint64_t u) const { return u == 0 || log_[u] % 2 == 0; }
  std::uint64_t trace(std::uint64_t u) const {
    std::uint64_t t = 0;
    for (std::size_t i = 0; i < places_.size(); ++i, u /= p_) t = (t + (u % p_) * basis_trace_[i]) % p_;
    return t;
  }

 private:
  FiniteField field_;
  std::uint64_t p_;
  std::uint64_t size_;
  std::vector<std::uint64_t> exp_;
  std::vector<std::uint64_t> log_;
  std::vector<std::uint64_t> places_;
  std::vector<std::uint64_t> basis_trace_;
};

}  // namespace

Integer ec_point_count_bruteforce(const Weierstrass& c, const Integer& q) {
  if (q > 1000000) throw ValidationError("brute-force point count needs q <= 10^6, got q = " + to_string(q));
  const auto pp = as_prime_power(q);
  if (!pp) throw ValidationError("field size " + to_string(q) + " is not a prime power");
  const std::uint64_t p = pp->prime;
  if (reduce(weierstrass_discriminant(c), p) == 0)
    throw ValidationError("curve is singular over F_" + to_string(q) + ": discriminant " + to_string(weierstrass_discriminant(c)) +
                          " vanishes mod " + std::to_string(p) + ", singular point " + singular_point(c, p));
  const LogTables f(FiniteField::create(p, pp->exponent));
  std::array<std::uint64_t, 5> a{};
  for (std::size_t i = 0; i < 5; ++i) a[i] = f.from_int(c[i]);
  const auto [a1, a2, a3, a4, a6] = a;
  const std::uint64_t four = f.from_int(4);
  std::uint64_t count = 1;
  for (std::uint64_t x = 0; x < f.size(); ++x) {
    const std::uint64_t b = f.add(f.mul(a1, x), a3);
    const std::uint64_t x2 = f.mul(x, x);
    const std::uint64_t rhs = f.add(f.add(f.add(f.mul(x2, x), f.mul(a2, x2)), f.mul(a4, x)), a6);
    if (p == 2) {
      // y = b·z turns y² + by = rhs into z² + z = rhs/b², solvable iff the trace vanishes.
      if (b == 0)
        count += 1;
      else if (f.trace(f.mul(rhs, f.inverse(f.mul(b, b)))) == 0)
        count += 2;
      continue;
    }
    const std::uint64_t disc = f.add(f.mul(b, b), f.mul(four, rhs));
    if (disc == 0)
      count += 1;
    else if (f.is_square(disc))
      count += 2;
  }
  return Integer(static_cast<unsigned long>(count));
}

Integer ec_count_extension(const Integer& a, const Integer& q, unsigned n) {
  if (a * a > 4 * q) throw ValidationError("Hasse bound violated: a^2 = " + to_string(Integer(a * a)) + " > 4q = " + to_string(Integer(4 * q)));
  if (n == 0) throw ValidationError("extension degree must be at least 1");
  Integer s_prev = 2, s = a;
  for (unsigned k = 2; k <= n; ++k) {
    Integer next = a * s - q * s_prev;
    s_prev = s;
    s = next;
  }
  return ipow(q, n) + 1 - s;
}

}  // namespace galrep
