#include "galrep/localgal.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "galrep/errors.hpp"

namespace galrep {

namespace {

bool is_cyclic(const GroupPtr& g) {
  for (int x = 0; x < g->order(); ++x)
    if (g->element_order(x) == g->order()) return true;
  return false;
}

bool is_power_of(std::uint64_t n, std::uint64_t p) {
  while (n % p == 0) n /= p;
  return n == 1;
}

std::uint64_t p_part(std::uint64_t n, std::uint64_t p) {
  std::uint64_t r = 1;
  while (n % p == 0) {
    n /= p;
    r *= p;
  }
  return r;
}

std::string chain_name(std::size_t k) { return "I_" + std::to_string(k); }

}  // namespace

RamificationData RamificationData::create(GroupPtr group, std::vector<Subgroup> chain, int frobenius,
                                          std::uint64_t p, const Integer& q) {
  if (chain.empty()) throw ValidationError("ramification chain is empty");
  for (std::size_t k = 0; k < chain.size(); ++k)
    if (chain[k].parent() != group) throw ValidationError(chain_name(k) + " is a subgroup of a different group");
  if (!is_prime(p)) throw ValidationError("residue characteristic " + std::to_string(p) + " is not prime");
  auto pp = as_prime_power(q);
  if (!pp || pp->prime != p) throw ValidationError("q = " + to_string(q) + " is not a power of p = " + std::to_string(p));
  if (frobenius < 0 || frobenius >= group->order()) throw ValidationError("frobenius element out of range");
  for (std::size_t k = 0; k + 1 < chain.size(); ++k)
    if (!chain[k + 1].is_subgroup_of(chain[k]))
      throw ValidationError("ramification chain is not descending: " + chain_name(k + 1) + " is not inside " + chain_name(k));
  for (std::size_t k = 0; k < chain.size(); ++k)
    if (!chain[k].is_normal()) throw ValidationError(chain_name(k) + " = " + chain[k].str() + " is not normal in G");
  if (chain.back().order() != 1) throw ValidationError("ramification chain must end with the trivial group");

  const Subgroup& i0 = chain.front();
  const Subgroup& i1 = chain.size() > 1 ? chain[1] : chain.back();
  const auto i0_order = static_cast<std::uint64_t>(i0.order());
  if (static_cast<std::uint64_t>(i1.order()) != p_part(i0_order, p) || !is_power_of(static_cast<std::uint64_t>(i1.order()), p))
    throw ValidationError("I_1 = " + i1.str() + " is not the Sylow-" + std::to_string(p) + " subgroup of I_0 = " + i0.str());
  {
    std::vector<int> inside;
    for (int e : i1.elements()) inside.push_back(i0.from_parent(e));
    auto tame = quotient(Subgroup::of(i0.group(), inside));
    if (!is_cyclic(tame.group)) throw ValidationError("I_0/I_1 is not cyclic");
  }
  auto unramified = quotient(i0);
  if (!is_cyclic(unramified.group)) throw ValidationError("G/I_0 is not cyclic");
  if (unramified.group->element_order(unramified.projection[static_cast<std::size_t>(frobenius)]) != unramified.group->order())
    throw ValidationError("frobenius image " + group->label(frobenius) + " does not generate G/I_0");

  RamificationData data;
  data.group_ = std::move(group);
  data.chain_ = std::move(chain);
  data.frobenius_ = frobenius;
  data.p_ = p;
  data.q_ = q;
  data.breaks_.assign(static_cast<std::size_t>(data.group_->order()), -1);
  for (std::size_t k = 0; k < data.chain_.size(); ++k)
    for (int e : data.chain_[k].elements())
      if (e != 0) data.breaks_[static_cast<std::size_t>(e)] = static_cast<int>(k);
  return data;
}

const Subgroup& RamificationData::ramification_group(std::size_t k) const {
  return k < chain_.size() ? chain_[k] : chain_.back();
}

UniPoly local_polynomial(const ClassFunction& chi, const RamificationData& data) {
  if (chi.group() != data.group()) throw ValidationError("local_polynomial: character of a different group");
  const auto& g = *data.group();
  const Subgroup& i0 = data.inertia();
  const long d = invariant_dimension(chi, i0).get_si();
  const int geometric = g.inv(data.frobenius());
  const Cyclotomic scale(Rational(1, i0.order()));
  std::vector<Cyclotomic> power_sums;
  for (long k = 1; k <= d; ++k) {
    const int phi_k = g.pow(geometric, k);
    Cyclotomic sum;
    for (int h : i0.elements()) sum += chi(g.mul(phi_k, h));
    power_sums.push_back(sum * scale);
  }
  return newton_charpoly(power_sums).reversed;
}

ConductorExponent conductor_exponent(const ClassFunction& chi, const RamificationData& data) {
  if (chi.group() != data.group()) throw ValidationError("conductor_exponent: character of a different group");
  const Integer dim = chi.degree();
  const Subgroup& i0 = data.inertia();
  ConductorExponent out;
  out.tame = dim - invariant_dimension(chi, i0);
  out.wild = 0;
  for (std::size_t k = 1; k < data.chain().size(); ++k) {
    const Subgroup& ik = data.chain()[k];
    out.wild += Rational(ik.order(), i0.order()) * Rational(dim - invariant_dimension(chi, ik));
  }
  out.wild.canonicalize();
  out.total = Rational(out.tame) + out.wild;
  out.integral = is_integer(out.total);
  if (!out.integral)
    throw ValidationError("conductor exponent " + to_string(out.total) +
                          " is not an integer; the ramification data is inconsistent");
  return out;
}

Rational swan_pairing(const ClassFunction& chi, const RamificationData& data) {
  const Subgroup& i0 = data.inertia();
  Cyclotomic sum;
  long b_identity = 0;
  for (int h : i0.elements()) {
    if (h == 0) continue;
    const int brk = data.ramification_break(h);
    b_identity += brk;
    sum -= Cyclotomic(static_cast<long>(brk)) * chi(h);
  }
  sum += Cyclotomic(b_identity) * chi(0);
  sum *= Cyclotomic(Rational(1, i0.order()));
  const auto value = sum.as_rational();
  const auto direct = conductor_exponent(chi, data).wild;
  if (!value || *value != direct)
    throw InconsistencyError("Swan pairing " + sum.str() + " differs from the wild conductor " + to_string(direct));
  return *value;
}

Integer discriminant_valuation(const RamificationData& data, const Subgroup& h) {
  const auto ind = induce(h, ClassFunction::trivial(h.group()));
  return conductor_exponent(ind, data).total.get_num();
}

int residue_extension_degree(const RamificationData& data, const Subgroup& h) {
  if (h.parent() != data.group()) throw ValidationError("subgroup of a different group");
  const auto q = quotient(data.inertia());
  std::set<int> image;
  for (int e : h.elements()) image.insert(q.projection[static_cast<std::size_t>(e)]);
  return q.group->order() / static_cast<int>(image.size());
}

RamificationData restrict_ramification(const RamificationData& data, const Subgroup& h) {
  const int f = residue_extension_degree(data, h);
  const auto& g = *data.group();
  const auto q = quotient(data.inertia());
  const int target = q.projection[static_cast<std::size_t>(g.pow(data.frobenius(), f))];
  int frob = -1;
  for (int e : h.elements())
    if (q.projection[static_cast<std::size_t>(e)] == target) {
      frob = e;
      break;
    }
  if (frob < 0) throw InconsistencyError("no element of H lifts the Frobenius power");
  std::vector<Subgroup> chain;
  for (const auto& ik : data.chain()) {
    std::vector<int> inside;
    for (int e : ik.elements())
      if (h.contains(e)) inside.push_back(h.from_parent(e));
    chain.push_back(Subgroup::of(h.group(), inside));
  }
  return RamificationData::create(h.group(), std::move(chain), h.from_parent(frob), data.p(),
                                  ipow(data.q(), static_cast<unsigned>(f)));
}

FrobeniusClass frobenius_candidates(const IntPoly& f, std::uint64_t p, const GroupPtr& g) {
  if (!g->is_permutation_group()) throw ValidationError("Frobenius probing needs a permutation group on the roots");
  const int n = static_cast<int>(f.size()) - 1;
  if (n < 1 || g->degree() != n)
    throw ValidationError("group acts on " + std::to_string(g->degree()) + " points but f has degree " + std::to_string(n));
  if (fp::degree(fp::from_integers(f, p)) != n)
    throw ValidationError("leading coefficient of f vanishes mod " + std::to_string(p));
  FrobeniusClass out;
  for (const auto& fd : ff_factor_degrees(f, p)) {
    if (fd.multiplicity > 1)
      throw ValidationError("f is not squarefree mod " + std::to_string(p) + "; the prime is ramified or divides the discriminant");
    out.cycle_type.push_back(static_cast<int>(fd.degree));
  }
  std::sort(out.cycle_type.rbegin(), out.cycle_type.rend());
  for (std::size_t c = 0; c < g->class_count(); ++c)
    if (g->cycle_type(g->class_representative(c)) == out.cycle_type) out.candidates.push_back(c);
  if (out.candidates.empty()) {
    std::string type;
    for (int len : out.cycle_type) type += (type.empty() ? "" : ",") + std::to_string(len);
    throw ValidationError("no element of the group has cycle type {" + type + "} found mod " + std::to_string(p));
  }
  out.order = std::accumulate(out.cycle_type.begin(), out.cycle_type.end(), 1, [](int a, int b) { return std::lcm(a, b); });
  out.determined = out.candidates.size() == 1;
  out.conjugacy_class = out.candidates.front();
  return out;
}

FrobeniusClass frobenius_class(const IntPoly& f, std::uint64_t p, const GroupPtr& g,
                               const std::vector<std::complex<double>>& root_hints) {
  auto out = frobenius_candidates(f, p, g);
  if (out.determined) return out;
  const std::string where = " at p = " + std::to_string(p);
  const bool pentagon = g->degree() == 5 && out.cycle_type == std::vector<int>{5} && out.candidates.size() == 2;
  if (!pentagon) throw AmbiguityError(std::to_string(out.candidates.size()) + " conjugacy classes share the Frobenius cycle type" + where);
  const auto sigma = g->index_of(parse_cycles("(1 2 3 4 5)", 5));
  if (!sigma) throw AmbiguityError("the 5-cycle (1 2 3 4 5) is not in the group; classes of 5-cycles not separated" + where);
  const std::size_t stride1 = g->class_of(*sigma), stride2 = g->class_of(g->pow(*sigma, 2));
  if (stride1 == stride2 || std::find(out.candidates.begin(), out.candidates.end(), stride1) == out.candidates.end() ||
      std::find(out.candidates.begin(), out.candidates.end(), stride2) == out.candidates.end())
    throw AmbiguityError("the classes of (1 2 3 4 5) and its square do not match the candidates" + where);
  if (root_hints.empty()) throw AmbiguityError("two classes of 5-cycles" + where + "; root hints are needed to separate them");
  const auto res = pentagon_resolvents(f, root_hints);
  out.resolvents = res;
  const Integer pz(static_cast<unsigned long>(p));
  const auto mod_p = [&](const Integer& v) {
    Integer r;
    mpz_fdiv_r(r.get_mpz_t(), v.get_mpz_t(), pz.get_mpz_t());
    return r.get_ui();
  };
  const auto r1 = mod_p(res.r1), r2 = mod_p(res.r2);
  if (r1 == r2)
    throw AmbiguityError("pentagon resolvents r1 = " + to_string(res.r1) + " and r2 = " + to_string(res.r2) +
                         " are congruent mod " + std::to_string(p));
  const auto beta_sum = ff_orbit_resolvent(f, p, 1);
  out.resolvent_mod_p = beta_sum;
  if (beta_sum == r1)
    out.conjugacy_class = stride1;
  else if (beta_sum == r2)
    out.conjugacy_class = stride2;
  else
    throw InconsistencyError("orbit resolvent " + std::to_string(beta_sum) + " matches neither r1 nor r2 mod " + std::to_string(p));
  out.determined = true;
  return out;
}

}  // namespace galrep
