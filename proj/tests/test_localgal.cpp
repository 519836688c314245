#include <random>

#include "doctest.h"
#include "galrep/errors.hpp"
#include "galrep/localgal.hpp"
#include "ramification_fixtures.hpp"

using namespace galrep;
using namespace testgroups;

namespace {

UniPoly poly(std::vector<long> c) {
  std::vector<Cyclotomic> v;
  for (long x : c) v.emplace_back(x);
  return UniPoly(v);
}

IntPoly ints(std::vector<long> c) { return {c.begin(), c.end()}; }

const IntPoly kQuintic = ints({1, 0, 0, -3, 2, 1});
const std::vector<std::complex<double>> kQuinticRoots{{-3.01, 0}, {-0.35, -0.53}, {0.85, -0.31}, {0.85, 0.31}, {-0.35, 0.53}};

// Independent count of the ramification contribution: Σ_{k≥0} (|I_k|/|I_0|)·codim ρ^{I_k}.
Rational conductor_by_definition(const ClassFunction& chi, const RamificationData& d) {
  Rational total = 0;
  const Rational dim(chi.degree());
  for (std::size_t k = 0; k < d.chain().size(); ++k) {
    const auto& ik = d.chain()[k];
    Cyclotomic fixed;
    for (int h : ik.elements()) fixed += chi(h);
    const Rational inv = *(fixed * Cyclotomic(Rational(1, ik.order()))).as_rational();
    total += Rational(ik.order(), d.inertia().order()) * (dim - inv);
  }
  total.canonicalize();
  return total;
}

}  // namespace

TEST_CASE("ramification data validation") {
  auto d = s3_q5();
  CHECK(d.inertia().order() == 3);
  CHECK(d.residue_degree() == 2);
  auto g = d.group();
  auto i0 = d.inertia();
  CHECK_THROWS_WITH_AS(RamificationData::create(g, {i0, i0, Subgroup::trivial(g)}, element(g, "(1 2)"), 5, 5),
                       doctest::Contains("Sylow-5"), ValidationError);
  auto c2 = Subgroup::generated(g, {element(g, "(1 2)")});
  CHECK_THROWS_WITH_AS(RamificationData::create(g, {c2, Subgroup::trivial(g)}, element(g, "(1 2 3)"), 2, 2),
                       doctest::Contains("not normal"), ValidationError);
  CHECK_THROWS_WITH_AS(RamificationData::create(g, {i0, Subgroup::trivial(g)}, element(g, "(1 2)"), 5, 25 * 3),
                       doctest::Contains("not a power of p"), ValidationError);
  CHECK_THROWS_WITH_AS(RamificationData::create(g, {i0, Subgroup::trivial(g)}, 0, 5, 5),
                       doctest::Contains("does not generate"), ValidationError);
  CHECK_THROWS_WITH_AS(RamificationData::create(g, {i0}, element(g, "(1 2)"), 5, 5), doctest::Contains("trivial group"),
                       ValidationError);
  CHECK_THROWS_WITH_AS(RamificationData::create(g, {Subgroup::trivial(g)}, 0, 5, 5), doctest::Contains("G/I_0 is not cyclic"),
                       ValidationError);
  // I_0/I_1 = C2 × C2 at p = 3 is not cyclic.
  auto v4g = perm_group({"(1 2)", "(3 4)"}, 4);
  CHECK_THROWS_WITH_AS(RamificationData::create(v4g, {Subgroup::whole(v4g), Subgroup::trivial(v4g)}, 0, 3, 3),
                       doctest::Contains("I_0/I_1 is not cyclic"), ValidationError);

  auto q2 = c2_q2();
  CHECK(q2.ramification_break(1) == 1);
  CHECK(q2.ramification_group(7).order() == 1);
}

TEST_CASE("local polynomials of the S3 example") {
  auto d = s3_q5();
  auto t = CharacterTable::compute(d.group());
  CHECK(local_polynomial(t[0], d) == poly({1, -1}));
  CHECK(local_polynomial(t[1], d) == poly({1, 1}));
  CHECK(local_polynomial(t[2], d) == UniPoly::one());
  CHECK(local_polynomial(t[0], d).str() == "1 - T");
}

TEST_CASE("local polynomial traces use powers of the geometric Frobenius") {
  // G = C2 × C2, I_0 = ⟨a⟩, Φ = b, ρ = 1 ⊕ (b ↦ -1) ⊕ (a ↦ -1): invariants carry Φ-eigenvalues 1, -1.
  auto g = perm_group({"(1 2)", "(3 4)"}, 4);
  const int a = element(g, "(1 2)"), b = element(g, "(3 4)");
  auto d = RamificationData::create(g, {Subgroup::generated(g, {a}), Subgroup::trivial(g)}, b, 3, 3);
  std::vector<Cyclotomic> v;
  for (std::size_t c = 0; c < g->class_count(); ++c) {
    const int x = g->class_representative(c);
    const long triv = 1, sign_b = (x == b || x == g->mul(a, b)) ? -1 : 1, sign_a = (x == a || x == g->mul(a, b)) ? -1 : 1;
    v.emplace_back(triv + sign_b + sign_a);
  }
  CHECK(local_polynomial(ClassFunction(g, v), d) == poly({1, 0, -1}));
}

TEST_CASE("conductors, Swan pairing and discriminants") {
  auto d = s3_q5();
  auto t = CharacterTable::compute(d.group());
  auto n = conductor_exponent(t[2], d);
  CHECK(n.tame == 2);
  CHECK(n.wild == 0);
  CHECK(n.total == 2);
  CHECK(n.integral);
  CHECK(swan_pairing(t[2], d) == 0);
  CHECK(conductor_exponent(t[0], d).total == 0);
  CHECK(swan_pairing(t[0], d) == 0);

  auto g = d.group();
  CHECK(discriminant_valuation(d, Subgroup::trivial(g)) == 4);
  CHECK(discriminant_valuation(d, Subgroup::generated(g, {element(g, "(1 2)")})) == 2);
  CHECK(discriminant_valuation(d, Subgroup::whole(g)) == 0);

  auto q2 = c2_q2();
  auto t2 = CharacterTable::compute(q2.group());
  auto n2 = conductor_exponent(t2[1], q2);
  CHECK(n2.tame == 1);
  CHECK(n2.wild == 1);
  CHECK(n2.total == 2);
  CHECK(swan_pairing(t2[1], q2) == 1);

  // A chain violating the upper-break integrality: C4 with lower breaks 1, 2.
  auto c4 = cyclic(4);
  auto bad = RamificationData::create(
      c4, {Subgroup::whole(c4), Subgroup::whole(c4), Subgroup::generated(c4, {element(c4, "(1 3)(2 4)")}), Subgroup::trivial(c4)},
      0, 2, 2);
  auto t4 = CharacterTable::compute(c4);
  int rejected = 0;
  for (const auto& chi : t4.rows()) {
    try {
      conductor_exponent(chi, bad);
    } catch (const ValidationError& e) {
      CHECK(std::string(e.what()).find("not an integer") != std::string::npos);
      ++rejected;
    }
  }
  CHECK(rejected == 2);
}

TEST_CASE("restricting ramification data") {
  auto d = s3_q5();
  auto g = d.group();
  auto same = restrict_ramification(d, Subgroup::whole(g));
  CHECK(same.q() == 5);
  CHECK(same.inertia().order() == 3);
  CHECK(same.group()->label(same.frobenius()) == "(1 2)");

  auto c2 = Subgroup::generated(g, {element(g, "(1 2)")});
  auto over_l = restrict_ramification(d, c2);
  CHECK(over_l.inertia().order() == 1);
  CHECK(over_l.q() == 5);
  CHECK(residue_extension_degree(d, c2) == 1);

  auto c3 = Subgroup::generated(g, {element(g, "(1 2 3)")});
  auto over_m = restrict_ramification(d, c3);
  CHECK(over_m.inertia().order() == 3);
  CHECK(over_m.q() == 25);
  CHECK(residue_extension_degree(d, c3) == 2);
}

TEST_CASE("Frobenius probe of the dihedral quintic") {
  auto g = d10();
  auto at2 = frobenius_class(kQuintic, 2, g, kQuinticRoots);
  CHECK(at2.cycle_type == std::vector<int>{5});
  CHECK(at2.order == 5);
  CHECK(at2.candidates.size() == 2);
  REQUIRE(at2.determined);
  REQUIRE(at2.resolvents.has_value());
  CHECK(at2.resolvents->r1 + at2.resolvents->r2 == -3);
  CHECK(at2.resolvents->e2 == -3);
  CHECK(at2.resolvents->r1 == 2);
  CHECK(at2.resolvents->r2 == -5);
  CHECK(*at2.resolvent_mod_p == 0);
  CHECK(at2.conjugacy_class == g->class_of(element(g, "(1 2 3 4 5)")));

  // r1 - r2 = 7: the discriminator cannot separate the classes at 7.
  auto f7 = frobenius_candidates(kQuintic, 7, g);
  CHECK(f7.cycle_type == std::vector<int>{5});
  CHECK_THROWS_AS(frobenius_class(kQuintic, 7, g, kQuinticRoots), AmbiguityError);
  CHECK_THROWS_AS(frobenius_class(kQuintic, 2, g, {}), AmbiguityError);

  // The two classes found at 3, 17, 37 are consistent with Σβ_iβ_{i+1} ≡ r1 or r2.
  for (std::uint64_t p : {3, 17, 37}) {
    auto fc = frobenius_class(kQuintic, p, g, kQuinticRoots);
    CHECK(fc.determined);
    const auto expected = *fc.resolvent_mod_p;
    const long r = fc.conjugacy_class == g->class_of(element(g, "(1 2 3 4 5)")) ? 2 : -5;
    CHECK(expected == static_cast<std::uint64_t>(((r % static_cast<long>(p)) + static_cast<long>(p)) % static_cast<long>(p)));
  }

  // Ramified primes and cycle types.
  CHECK_THROWS_AS(frobenius_candidates(kQuintic, 47, g), ValidationError);
  auto f13 = frobenius_candidates(kQuintic, 11, g);
  CHECK(f13.determined == (f13.candidates.size() == 1));
  CHECK_THROWS_AS(frobenius_candidates(kQuintic, 2, s3()), ValidationError);
}

TEST_CASE("pentagon resolvent numerics") {
  auto r = pentagon_resolvents(kQuintic, kQuinticRoots);
  CHECK(r.r1 == 2);
  CHECK(r.r2 == -5);
  CHECK(r.precision_bits >= 64);
  // Relabeling α by the square of the 5-cycle swaps the two sums.
  std::vector<std::complex<double>> swapped{kQuinticRoots[0], kQuinticRoots[2], kQuinticRoots[4], kQuinticRoots[1], kQuinticRoots[3]};
  auto s = pentagon_resolvents(kQuintic, swapped);
  CHECK(s.r1 == -5);
  CHECK(s.r2 == 2);
  CHECK_THROWS_AS(pentagon_resolvents(kQuintic, {{-3, 0}, {-3, 0.1}, {0.85, -0.31}, {0.85, 0.31}, {-0.35, 0.53}}), ValidationError);
  CHECK_THROWS_AS(pentagon_resolvents(ints({1, 1, 1}), kQuinticRoots), ValidationError);
}

TEST_CASE("Frobenius lift independence") {
  for (const auto& d : {s3_q5(), c2_q2()}) {
    auto t = CharacterTable::compute(d.group());
    for (int h : d.inertia().elements()) {
      auto moved = RamificationData::create(d.group(), d.chain(), d.group()->mul(d.frobenius(), h), d.p(), d.q());
      for (const auto& chi : t.rows()) CHECK(local_polynomial(chi, moved) == local_polynomial(chi, d));
    }
  }
}

TEST_CASE("additivity and degree bound") {
  std::mt19937_64 rng(4242);
  for (int trial = 0; trial < 40; ++trial) {
    auto d = random_local_data(rng);
    auto t = CharacterTable::compute(d.group());
    std::uniform_int_distribution<std::size_t> row(0, t.size() - 1);
    const auto& a = t[row(rng)];
    const auto& b = t[row(rng)];
    CHECK(local_polynomial(a + b, d) == local_polynomial(a, d) * local_polynomial(b, d));
    CHECK(conductor_exponent(a + b, d).total == conductor_exponent(a, d).total + conductor_exponent(b, d).total);
    CHECK(local_polynomial(a, d).degree() <= a.degree().get_si());
    CHECK(local_polynomial(a, d).degree() == invariant_dimension(a, d.inertia()).get_si());
  }
}

TEST_CASE("Swan pairing equals the wild sum; Artin integrality") {
  std::mt19937_64 rng(777);
  int cases = 0;
  while (cases < 200) {
    auto d = random_local_data(rng);
    auto t = CharacterTable::compute(d.group());
    for (const auto& chi : t.rows()) {
      const auto n = conductor_exponent(chi, d);
      CHECK(n.integral);
      CHECK(is_integer(n.total));
      CHECK(n.total == conductor_by_definition(chi, d));
      CHECK(swan_pairing(chi, d) == n.wild);
      ++cases;
    }
  }
}

TEST_CASE("induction identity and conductor-discriminant formula") {
  std::mt19937_64 rng(2024);
  int cases = 0;
  std::vector<RamificationData> fixtures{s3_q5(), c2_q2()};
  while (cases < 400) {
    if (fixtures.empty()) fixtures.push_back(random_local_data(rng));
    auto d = fixtures.back();
    fixtures.pop_back();
    for (const auto& h : all_subgroups(d.group())) {
      const auto dl = restrict_ramification(d, h);
      const int f = residue_extension_degree(d, h);
      const auto disc = discriminant_valuation(d, h);
      auto th = CharacterTable::compute(h.group());
      for (const auto& chi : th.rows()) {
        const auto ind = induce(h, chi);
        CHECK(local_polynomial(chi, dl).substitute_power(static_cast<unsigned>(f)) == local_polynomial(ind, d));
        CHECK(conductor_exponent(ind, d).total ==
              Rational(chi.degree() * disc) + Rational(f) * conductor_exponent(chi, dl).total);
        ++cases;
      }
    }
  }
}
