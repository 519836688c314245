#include <numeric>
#include <random>

#include "doctest.h"
#include "galrep/errors.hpp"
#include "galrep/lseries.hpp"
#include "lseries_fixtures.hpp"

using namespace galrep;
using namespace testgroups;

namespace {

std::vector<std::string> strs(const DirichletSeries& s) {
  std::vector<std::string> out;
  for (const auto& c : s.coefficients()) out.push_back(c.str());
  return out;
}

long legendre3(std::size_t n) { return n % 3 == 0 ? 0 : (n % 3 == 1 ? 1 : -1); }

}  // namespace

TEST_CASE("mod-3 character") {
  auto c = chi3_config();
  CHECK(euler_factor(c, 7) == upoly({1, -1}));
  CHECK(euler_factor(c, 13) == upoly({1, -1}));
  CHECK(euler_factor(c, 2) == upoly({1, 1}));
  CHECK(euler_factor(c, 5) == upoly({1, 1}));
  CHECK(euler_factor(c, 3) == UniPoly::one());
  CHECK(strs(dirichlet_coefficients(c, 5)) == std::vector<std::string>{"1", "-1", "0", "1", "-1"});
  CHECK(global_conductor(c) == 3);
  auto fe = functional_equation_data(c);
  CHECK(fe.a == 3);
  CHECK(fe.d_plus == 0);
  CHECK(fe.d_minus == 1);
  CHECK(fe.self_dual);
  CHECK(fe.root_number == "unknown, |w| = 1");

  const auto series = dirichlet_coefficients(c, 500);
  for (std::size_t n = 1; n <= 500; ++n) CHECK(series[n] == Cyclotomic(legendre3(n)));

  // The same series from Frobenius classes listed by residue class.
  GlobalConfig listed = c;
  ExplicitFrobenius rule;
  for (auto p : primes_up_to(500))
    if (p != 3) rule.classes[p] = p % 3 == 1 ? 0 : 1;
  listed.unramified = rule;
  CHECK(dirichlet_coefficients(listed, 500) == series);
  rule.classes.erase(101);
  listed.unramified = rule;
  CHECK_THROWS_WITH_AS(dirichlet_coefficients(listed, 500), doctest::Contains("p = 101"), ValidationError);

  GlobalConfig unsupplied = c;
  unsupplied.ramified.clear();
  CHECK_THROWS_WITH_AS(euler_factor(unsupplied, 3), doctest::Contains("p = 3"), ValidationError);
}

TEST_CASE("trivial character gives the Riemann zeta function") {
  auto c = chi3_config();
  c.character = ClassFunction::trivial(c.group);
  c.ramified.clear();
  c.ramified[3] = {upoly({1, -1}), 1};
  const auto s = dirichlet_coefficients(c, 200);
  for (std::size_t n = 1; n <= 200; ++n) CHECK(s[n] == Cyclotomic(1L));
  c.ramified.clear();
  CHECK(global_conductor(c) == 1);
  c.ramified[3] = {upoly({1, -1}), 1};
  auto fe = functional_equation_data(c);
  CHECK(fe.d_plus == 1);
  CHECK(fe.d_minus == 0);
}

TEST_CASE("quadratic field: zeta of Q(sqrt -3) is zeta times the character series") {
  auto chi = chi3_config();
  auto regular = chi;
  regular.character = ClassFunction::regular(chi.group);
  regular.dim = 2;
  regular.ramified[3] = {upoly({1, -1}), 1};
  auto t = CharacterTable::compute(chi.group);
  CHECK(*regular.character == t[0] + t[1]);
  auto trivial = regular;
  trivial.character = t[0];
  trivial.dim = 1;
  CHECK(dirichlet_coefficients(regular, 300) ==
        dirichlet_product(dirichlet_coefficients(trivial, 300), dirichlet_coefficients(chi, 300)));
  // The fixed field of {e} counted prime by prime.
  auto field = trivial;
  field.dim = 2;
  const auto e = Subgroup::trivial(chi.group);
  field.character = ClassFunction::trivial(e.group());
  field.subgroup = e;
  CHECK(dirichlet_coefficients(field, 300) == dirichlet_coefficients(regular, 300));
}

TEST_CASE("elliptic L-series") {
  auto c = e11_config();
  CHECK(strs(dirichlet_coefficients(c, 5)) == std::vector<std::string>{"1", "-2", "-1", "2", "1"});
  CHECK(global_conductor(c) == 11);
  auto fe = functional_equation_data(c);
  CHECK(fe.a == 11);
  CHECK(fe.gamma_c_count == 1);
  const auto s = dirichlet_coefficients(c, 400);
  for (auto p : primes_up_to(400)) {
    if (p == 11) {
      CHECK(s[11] == Cyclotomic(1L));
      continue;
    }
    const Integer a = *s[p].as_integer();
    CHECK(a * a <= 4 * Integer(static_cast<unsigned long>(p)));
    CHECK(a == Integer(static_cast<unsigned long>(p + 1)) - ec_point_count_bruteforce({0, -1, 1, 0, 0}, p));
  }
  CHECK(s[4] == s[2] * s[2] - Cyclotomic(2L));
  auto missing = c;
  missing.ramified.clear();
  CHECK_THROWS_WITH_AS(dirichlet_coefficients(missing, 20), doctest::Contains("p = 11"), ValidationError);
}

TEST_CASE("D10 quintic: Frobenius ambiguity only where the character separates the classes") {
  auto g = d10();
  auto t = CharacterTable::compute(g);
  REQUIRE(t.size() == 4);
  // Rational characters never need the 5-cycle classes told apart.
  for (std::size_t i : {0, 1}) {
    const auto s = dirichlet_coefficients(d10_config(t[i]), 300);
    for (std::size_t n = 1; n <= 300; ++n) CHECK(s[n].as_integer().has_value());
  }
  CHECK_THROWS_WITH_AS(euler_factor(d10_config(t[2]), 7), doctest::Contains("p = 7"), AmbiguityError);
  // At p = 2 the resolvent pins Frobenius to the class of (1 2 3 4 5).
  const int sigma = element(g, "(1 2 3 4 5)");
  CHECK(euler_factor(d10_config(t[2]), 2) == frobenius_polynomial(t[2], sigma));
  CHECK(euler_factor(d10_config(t[3]), 2) == frobenius_polynomial(t[3], sigma));
  auto unsupplied = d10_config(t[0]);
  unsupplied.ramified.erase(47);
  CHECK_THROWS_WITH_AS(euler_factor(unsupplied, 47), doctest::Contains("p = 47"), ValidationError);
}

TEST_CASE("induction invariance over all subgroups of D10") {
  auto g = d10();
  int cases = 0;
  for (const auto& h : all_subgroups(g)) {
    auto th = CharacterTable::compute(h.group());
    for (const auto& chi_h : th.rows()) {
      auto over_h = d10_config(ClassFunction::trivial(g));
      over_h.character = chi_h;
      over_h.subgroup = h;
      over_h.dim = static_cast<int>(chi_h.degree().get_si()) * h.index();
      auto over_g = d10_config(induce(h, chi_h));
      for (auto p : primes_up_to(200)) {
        if (p == 5 || p == 47) continue;
        bool resolved_h = true, resolved_g = true;
        UniPoly fh, fg;
        try {
          fh = euler_factor(over_h, p);
        } catch (const AmbiguityError&) {
          resolved_h = false;
        }
        try {
          fg = euler_factor(over_g, p);
        } catch (const AmbiguityError&) {
          resolved_g = false;
        }
        CHECK(resolved_h == resolved_g);
        if (resolved_h && resolved_g) CHECK(fh == fg);
        ++cases;
      }
    }
  }
  CHECK(cases >= 200);
}

TEST_CASE("coset orbits reproduce induced Frobenius polynomials") {
  std::mt19937_64 rng(8080);
  int cases = 0;
  for (const auto& g : {s3(), s4(), d10(), a5()}) {
    for (const auto& h : all_subgroups(g)) {
      if (std::uniform_int_distribution<int>(0, 3)(rng) != 0 && h.order() > 1) continue;
      auto th = CharacterTable::compute(h.group());
      for (const auto& chi_h : th.rows()) {
        const auto ind = induce(h, chi_h);
        for (std::size_t c = 0; c < g->class_count(); ++c) {
          const int sigma = g->class_representative(c);
          CHECK(coset_orbit_factor(h, chi_h, sigma) == frobenius_polynomial(ind, sigma));
          ++cases;
        }
      }
    }
  }
  CHECK(cases >= 200);
}

TEST_CASE("D10 zeta identity") {
  auto g = d10();
  auto h_l = Subgroup::generated(g, {element(g, "(2 5)(3 4)")});
  auto h_k = Subgroup::generated(g, {element(g, "(1 2 3 4 5)")});
  REQUIRE(h_l.index() == 5);
  REQUIRE(h_k.index() == 2);
  TowerIdentity tower{{{Subgroup::trivial(g), 1}, {Subgroup::whole(g), 2}}, {{h_l, 2}, {h_k, 1}}};
  auto report = zeta_identity_check(d10_config(ClassFunction::trivial(g)), tower, 1000);
  CHECK(report.character_identity);
  CHECK(report.coefficients_agree);
  CHECK(report.routes_agree);
  CHECK(report.skipped_primes == std::vector<std::uint64_t>{5, 47});

  TowerIdentity wrong{{{Subgroup::trivial(g), 1}, {Subgroup::whole(g), 1}}, {{h_l, 2}, {h_k, 1}}};
  auto bad = zeta_identity_check(d10_config(ClassFunction::trivial(g)), wrong, 1000);
  CHECK_FALSE(bad.character_identity);
  CHECK(bad.character_failure.find("class of ()") != std::string::npos);
  CHECK_FALSE(bad.coefficients_agree);

  // S5 has index-5 and index-2 subgroups, but the dihedral identity fails there.
  auto s = s5();
  GlobalConfig c;
  c.group = s;
  auto s4_in_s5 = Subgroup::generated(s, {element(s, "(1 2 3 4)"), element(s, "(1 2)")});
  auto a5_in_s5 = Subgroup::generated(s, {element(s, "(1 2 3 4 5)"), element(s, "(1 2 3)")});
  TowerIdentity s5_tower{{{Subgroup::trivial(s), 1}, {Subgroup::whole(s), 2}}, {{s4_in_s5, 2}, {a5_in_s5, 1}}};
  auto negative = zeta_identity_check(c, s5_tower, 100);
  CHECK_FALSE(negative.character_identity);
  CHECK_FALSE(negative.character_failure.empty());
}

TEST_CASE("functional equation data") {
  auto g = d10();
  auto t = CharacterTable::compute(g);
  auto fe = functional_equation_data(d10_config(t[2]));
  CHECK(fe.d_plus == 1);
  CHECK(fe.d_minus == 1);
  CHECK(fe.self_dual);
  CHECK(fe.conductor == 5 * 47);

  // A cyclic cubic field: the characters of order 3 are not self-dual.
  auto c3 = cyclic(3);
  auto t3 = CharacterTable::compute(c3);
  GlobalConfig cubic;
  cubic.group = c3;
  cubic.character = t3[1];
  cubic.ramified[3] = {UniPoly::one(), 2};
  cubic.unramified = ExplicitFrobenius{};
  cubic.conjugation_class = 0;
  auto fc = functional_equation_data(cubic);
  CHECK_FALSE(fc.self_dual);
  CHECK(fc.d_plus == 1);
  CHECK(fc.a == 9);
  cubic.conjugation_class.reset();
  CHECK_THROWS_AS(functional_equation_data(cubic), ValidationError);
  cubic.conjugation_class = 1;
  CHECK_THROWS_AS(functional_equation_data(cubic), ValidationError);
}

TEST_CASE("config validation") {
  auto c = chi3_config();
  c.dim = 2;
  CHECK_THROWS_WITH_AS(validate(c), doctest::Contains("dim = 2"), ValidationError);
  c = chi3_config();
  c.ramified[3] = {upoly({2, 1}), 1};
  CHECK_THROWS_WITH_AS(validate(c), doctest::Contains("constant term 1"), ValidationError);
  c.ramified[3] = {upoly({1, 1, 1}), 1};
  CHECK_THROWS_WITH_AS(validate(c), doctest::Contains("degree 2"), ValidationError);
  c.ramified[3] = {upoly({1}), 0};
  CHECK_THROWS_WITH_AS(validate(c), doctest::Contains("at least 1"), ValidationError);
  c = chi3_config();
  c.ramified[4] = {UniPoly::one(), 1};
  CHECK_THROWS_AS(validate(c), ValidationError);
  auto e = e11_config();
  e.dim = 1;
  CHECK_THROWS_AS(validate(e), ValidationError);
}

TEST_CASE("Dirichlet coefficients are multiplicative and additive") {
  std::mt19937_64 rng(60606);
  const std::size_t limit = 600;
  auto g = d10();
  auto t = CharacterTable::compute(g);
  std::vector<DirichletSeries> all{dirichlet_coefficients(chi3_config(), limit), dirichlet_coefficients(e11_config(), limit),
                                   dirichlet_coefficients(d10_config(t[1]), limit)};
  std::uniform_int_distribution<std::size_t> pick(1, 40);
  int checked = 0;
  while (checked < 300) {
    const std::size_t m = pick(rng), n = pick(rng);
    if (std::gcd(m, n) != 1 || m * n > limit) continue;
    for (const auto& s : all) CHECK(s[m * n] == s[m] * s[n]);
    ++checked;
  }
  // Additivity: L(1 ⊕ ε) = L(1)·L(ε) on the D10 quintic.
  CHECK(dirichlet_coefficients(d10_config(t[0] + t[1]), limit) ==
        dirichlet_product(dirichlet_coefficients(d10_config(t[0]), limit), dirichlet_coefficients(d10_config(t[1]), limit)));
  auto chi = chi3_config();
  auto regular = chi;
  regular.character = ClassFunction::regular(chi.group);
  regular.dim = 2;
  regular.ramified[3] = {UniPoly::one(), 1};
  auto trivial = chi;
  trivial.character = ClassFunction::trivial(chi.group);
  trivial.ramified[3] = {UniPoly::one(), 1};
  CHECK(dirichlet_coefficients(regular, limit) ==
        dirichlet_product(dirichlet_coefficients(trivial, limit), dirichlet_coefficients(chi, limit)));
}
