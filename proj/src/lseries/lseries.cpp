#include "galrep/lseries.hpp"

#include <algorithm>

#include "galrep/errors.hpp"
#include "galrep/localgal.hpp"

namespace galrep {

namespace {

std::string at(std::uint64_t p) { return "p = " + std::to_string(p); }

Integer reduce_mod(const Integer& v, std::uint64_t p) {
  Integer r;
  const Integer pz(static_cast<unsigned long>(p));
  mpz_fdiv_r(r.get_mpz_t(), v.get_mpz_t(), pz.get_mpz_t());
  return r;
}

// Euler factor for Frobenius in class c of the config's group.
UniPoly factor_for_class(const GlobalConfig& config, std::size_t c) {
  const int sigma = config.group->class_representative(c);
  if (config.subgroup) return coset_orbit_factor(*config.subgroup, *config.character, sigma);
  return frobenius_polynomial(*config.character, sigma);
}

UniPoly splitting_factor(const GlobalConfig& config, const SplittingRule& rule, std::uint64_t p) {
  FrobeniusClass fc;
  try {
    fc = frobenius_candidates(rule.polynomial, p, config.group);
  } catch (const ValidationError& e) {
    throw ValidationError(at(p) + " has no local data but cannot be treated as unramified: " + e.what());
  }
  std::vector<UniPoly> factors;
  for (std::size_t c : fc.candidates) factors.push_back(factor_for_class(config, c));
  if (std::all_of(factors.begin(), factors.end(), [&](const UniPoly& f) { return f == factors.front(); }))
    return factors.front();
  try {
    fc = frobenius_class(rule.polynomial, p, config.group, rule.root_hints);
  } catch (const AmbiguityError& e) {
    throw AmbiguityError("Frobenius class at " + at(p) + " is ambiguous and the Euler factor depends on it: " + e.what());
  }
  return factor_for_class(config, fc.conjugacy_class);
}

}  // namespace

void validate(const GlobalConfig& config) {
  if (config.dim < 1) throw ValidationError("dimension must be positive, got " + std::to_string(config.dim));
  for (const auto& [p, local] : config.ramified) {
    if (!is_prime(p)) throw ValidationError("ramified key " + std::to_string(p) + " is not prime");
    if (local.polynomial.coefficient(0) != Cyclotomic(1L))
      throw ValidationError("Euler polynomial at " + at(p) + " must have constant term 1: " + local.polynomial.str());
    if (local.polynomial.degree() > config.dim)
      throw ValidationError("Euler polynomial at " + at(p) + " has degree " + std::to_string(local.polynomial.degree()) +
                            " > dim = " + std::to_string(config.dim));
    if (local.exponent < 1)
      throw ValidationError("conductor exponent at ramified " + at(p) + " must be at least 1, got " + to_string(local.exponent));
  }
  if (config.kind == LKind::Elliptic) {
    if (config.dim != 2) throw ValidationError("elliptic L-series have dimension 2");
    if (!std::holds_alternative<EllipticRule>(config.unramified))
      throw ValidationError("elliptic L-series need a curve for the good primes");
    return;
  }
  if (std::holds_alternative<EllipticRule>(config.unramified))
    throw ValidationError("an Artin L-series cannot use a curve for its unramified primes");
  if (!config.group || !config.character) throw ValidationError("Artin L-series need a group and a character");
  if (config.subgroup) {
    if (config.subgroup->parent() != config.group) throw ValidationError("inducing subgroup is not a subgroup of the group");
    if (config.character->group() != config.subgroup->group())
      throw ValidationError("character must live on the inducing subgroup");
  } else if (config.character->group() != config.group) {
    throw ValidationError("character lives on a different group");
  }
  const Integer deg = config.character->degree() * (config.subgroup ? config.subgroup->index() : 1);
  if (deg != config.dim)
    throw ValidationError("dim = " + std::to_string(config.dim) + " but the representation has dimension " + to_string(deg));
  if (const auto* rule = std::get_if<ExplicitFrobenius>(&config.unramified))
    for (const auto& [p, c] : rule->classes)
      if (c >= config.group->class_count())
        throw ValidationError("Frobenius class " + std::to_string(c) + " at " + at(p) + " is out of range");
  if (const auto* rule = std::get_if<SplittingRule>(&config.unramified)) {
    if (!config.group->is_permutation_group() || config.group->degree() + 1 != static_cast<int>(rule->polynomial.size()))
      throw ValidationError("splitting rule needs a permutation group on the roots of f");
  }
  if (config.conjugation_class) {
    if (*config.conjugation_class >= config.group->class_count())
      throw ValidationError("conjugation class " + std::to_string(*config.conjugation_class) + " is out of range");
    if (config.group->element_order(config.group->class_representative(*config.conjugation_class)) > 2)
      throw ValidationError("complex conjugation must have order at most 2");
  }
}

ClassFunction global_character(const GlobalConfig& config) {
  if (!config.character) throw ValidationError("config has no character");
  return config.subgroup ? induce(*config.subgroup, *config.character) : *config.character;
}

UniPoly frobenius_polynomial(const ClassFunction& chi, int sigma) {
  const auto& g = *chi.group();
  const int phi = g.inv(sigma);
  const long d = chi.degree().get_si();
  std::vector<Cyclotomic> sums;
  for (long k = 1; k <= d; ++k) sums.push_back(chi(g.pow(phi, k)));
  return newton_charpoly(sums).reversed;
}

UniPoly coset_orbit_factor(const Subgroup& h, const ClassFunction& chi_h, int sigma) {
  const auto& g = *h.parent();
  std::vector<int> coset(static_cast<std::size_t>(g.order()), -1);
  std::vector<int> representative;
  for (int x = 0; x < g.order(); ++x) {
    if (coset[static_cast<std::size_t>(x)] >= 0) continue;
    const int id = static_cast<int>(representative.size());
    representative.push_back(x);
    for (int y : h.elements()) coset[static_cast<std::size_t>(g.mul(x, y))] = id;
  }
  std::vector<bool> seen(representative.size(), false);
  UniPoly out = UniPoly::one();
  for (std::size_t start = 0; start < representative.size(); ++start) {
    if (seen[start]) continue;
    const int x = representative[start];
    unsigned f = 0;
    int y = x;
    do {
      seen[static_cast<std::size_t>(coset[static_cast<std::size_t>(y)])] = true;
      y = g.mul(sigma, y);
      ++f;
    } while (coset[static_cast<std::size_t>(y)] != static_cast<int>(start));
    // x⁻¹σ^f x lies in H; its inverse is the geometric Frobenius of this prime.
    const int frob = g.mul(g.inv(x), g.mul(g.pow(sigma, static_cast<long>(f)), x));
    const int local = h.from_parent(frob);
    if (local < 0) throw InconsistencyError("coset orbit Frobenius is not in H");
    out = out * frobenius_polynomial(chi_h, local).substitute_power(f);
  }
  return out;
}

UniPoly euler_factor(const GlobalConfig& config, std::uint64_t p) {
  if (!is_prime(p)) throw ValidationError(std::to_string(p) + " is not prime");
  if (auto it = config.ramified.find(p); it != config.ramified.end()) return it->second.polynomial;
  if (const auto* rule = std::get_if<EllipticRule>(&config.unramified)) {
    const Integer disc = weierstrass_discriminant(rule->curve);
    if (reduce_mod(disc, p) == 0)
      throw ValidationError("bad prime " + at(p) + " divides the discriminant " + to_string(disc) + " but has no local data");
    const Integer pz(static_cast<unsigned long>(p));
    const Integer a = pz + 1 - ec_point_count_bruteforce(rule->curve, pz);
    return UniPoly({Cyclotomic(1L), Cyclotomic(Integer(-a)), Cyclotomic(pz)});
  }
  if (const auto* rule = std::get_if<ExplicitFrobenius>(&config.unramified)) {
    auto it = rule->classes.find(p);
    if (it == rule->classes.end()) throw ValidationError("no Frobenius class given for unramified " + at(p));
    return factor_for_class(config, it->second);
  }
  return splitting_factor(config, std::get<SplittingRule>(config.unramified), p);
}

DirichletSeries::DirichletSeries(std::vector<Cyclotomic> coefficients) : a_(std::move(coefficients)) {}

DirichletSeries dirichlet_product(const DirichletSeries& a, const DirichletSeries& b) {
  const std::size_t n = std::min(a.limit(), b.limit());
  std::vector<Cyclotomic> c(n);
  for (std::size_t d = 1; d <= n; ++d) {
    if (a[d].is_zero()) continue;
    for (std::size_t m = 1; d * m <= n; ++m)
      if (!b[m].is_zero()) c[d * m - 1] += a[d] * b[m];
  }
  return DirichletSeries(std::move(c));
}

DirichletSeries dirichlet_coefficients(const GlobalConfig& config, std::size_t limit) {
  if (limit < 1) throw ValidationError("coefficient limit must be at least 1");
  validate(config);
  std::vector<std::size_t> smallest(limit + 1, 0);
  for (std::size_t i = 2; i <= limit; ++i)
    if (smallest[i] == 0)
      for (std::size_t j = i; j <= limit; j += i)
        if (smallest[j] == 0) smallest[j] = i;
  std::vector<std::vector<Cyclotomic>> local(limit + 1);
  for (std::size_t p = 2; p <= limit; ++p) {
    if (smallest[p] != p) continue;
    std::size_t order = 0;
    for (std::size_t pk = p; pk <= limit; pk *= p) ++order;
    local[p] = series_invert(euler_factor(config, p), order).coefficients();
  }
  std::vector<Cyclotomic> a(limit + 1);
  if (limit >= 1) a[1] = Cyclotomic(1L);
  for (std::size_t n = 2; n <= limit; ++n) {
    const std::size_t p = smallest[n];
    std::size_t m = n, k = 0;
    while (m % p == 0) {
      m /= p;
      ++k;
    }
    a[n] = local[p][k] * a[m];
  }
  a.erase(a.begin());
  return DirichletSeries(std::move(a));
}

Integer global_conductor(const GlobalConfig& config) {
  Integer n = 1;
  for (const auto& [p, local] : config.ramified) {
    if (local.exponent < 0) throw ValidationError("negative conductor exponent at " + at(p));
    n *= ipow(Integer(static_cast<unsigned long>(p)), static_cast<unsigned>(local.exponent.get_ui()));
  }
  return n;
}

FunctionalEquationData functional_equation_data(const GlobalConfig& config) {
  validate(config);
  FunctionalEquationData out;
  out.conductor = global_conductor(config);
  out.a = out.conductor;
  if (config.kind == LKind::Elliptic) {
    out.gamma_c_count = 1;
    return out;
  }
  if (!config.conjugation_class) throw ValidationError("functional equation data need the class of complex conjugation");
  const auto chi = global_character(config);
  const auto value = chi.on_class(*config.conjugation_class).as_integer();
  if (!value) throw ValidationError("χ(c) = " + chi.on_class(*config.conjugation_class).str() + " is not a rational integer");
  const Integer plus = config.dim + *value;
  if (plus < 0 || plus > 2 * config.dim || plus % 2 != 0)
    throw ValidationError("χ(c) = " + to_string(*value) + " is incompatible with dim = " + std::to_string(config.dim));
  out.d_plus = static_cast<int>(plus.get_si() / 2);
  out.d_minus = config.dim - out.d_plus;
  out.self_dual = std::all_of(chi.values().begin(), chi.values().end(), [](const Cyclotomic& v) { return v.is_real(); });
  return out;
}

ZetaIdentityReport zeta_identity_check(const GlobalConfig& config, const TowerIdentity& tower, std::size_t limit) {
  const GroupPtr& g = config.group;
  if (!g) throw ValidationError("zeta identity needs a group");
  ZetaIdentityReport report;
  report.limit = limit;
  auto side_character = [&](const std::vector<std::pair<Subgroup, int>>& side) {
    ClassFunction sum = ClassFunction::zero(g);
    for (const auto& [h, m] : side) {
      if (h.parent() != g) throw ValidationError("zeta identity subgroup " + h.str() + " is not in the group");
      if (m < 1) throw ValidationError("zeta identity multiplicities must be positive");
      sum += Cyclotomic(static_cast<long>(m)) * induce(h, ClassFunction::trivial(h.group()));
    }
    return sum;
  };
  const auto left = side_character(tower.left), right = side_character(tower.right);
  for (std::size_t c = 0; c < g->class_count(); ++c) {
    if (left.on_class(c) != right.on_class(c)) {
      report.character_failure = "class of " + g->label(g->class_representative(c)) + ": left = " + left.on_class(c).str() +
                                 ", right = " + right.on_class(c).str();
      return report;
    }
  }
  report.character_identity = true;

  GlobalConfig base = config;
  base.kind = LKind::Artin;
  base.conjugation_class.reset();
  for (auto& [p, local] : base.ramified) {
    local.polynomial = UniPoly::one();
    if (p <= limit) report.skipped_primes.push_back(p);
  }
  report.routes_agree = true;
  auto side_series = [&](const std::vector<std::pair<Subgroup, int>>& side) {
    std::vector<Cyclotomic> one(limit);
    one[0] = Cyclotomic(1L);
    DirichletSeries product(std::move(one));
    for (const auto& [h, m] : side) {
      GlobalConfig induced = base;
      induced.dim = static_cast<int>(h.index());
      induced.character = induce(h, ClassFunction::trivial(h.group()));
      induced.subgroup.reset();
      GlobalConfig orbits = base;
      orbits.dim = induced.dim;
      orbits.character = ClassFunction::trivial(h.group());
      orbits.subgroup = h;
      const auto by_orbits = dirichlet_coefficients(orbits, limit);
      if (dirichlet_coefficients(induced, limit) != by_orbits) report.routes_agree = false;
      for (int k = 0; k < m; ++k) product = dirichlet_product(product, by_orbits);
    }
    return product;
  };
  const auto lhs = side_series(tower.left), rhs = side_series(tower.right);
  report.coefficients_agree = true;
  for (std::size_t n = 1; n <= limit; ++n) {
    if (lhs[n] != rhs[n]) {
      report.coefficients_agree = false;
      report.first_mismatch = n;
      break;
    }
  }
  return report;
}

}  // namespace galrep
