#include <random>

#include "doctest.h"
#include "galrep/chars.hpp"
#include "galrep/errors.hpp"
#include "standard_groups.hpp"

using namespace galrep;
using namespace testgroups;

namespace {

Cyclotomic lit(const char* s) { return Cyclotomic::parse(s); }

ClassFunction cf(const GroupPtr& g, std::vector<const char*> values) {
  std::vector<Cyclotomic> v;
  for (auto s : values) v.push_back(lit(s));
  return ClassFunction(g, v);
}

std::vector<long> dims(const CharacterTable& t) {
  std::vector<long> d;
  for (const auto& row : t.rows()) d.push_back(row.degree().get_si());
  return d;
}

std::vector<Integer> ints(std::vector<long> v) { return {v.begin(), v.end()}; }

ClassFunction random_class_function(std::mt19937_64& rng, const GroupPtr& g) {
  std::uniform_int_distribution<long> coef(-3, 3);
  std::uniform_int_distribution<int> lvl(0, 3);
  const std::uint64_t levels[] = {1, 3, 4, 5};
  std::vector<Cyclotomic> v;
  for (std::size_t c = 0; c < g->class_count(); ++c) {
    const auto n = levels[lvl(rng)];
    v.push_back(Cyclotomic(coef(rng)) + Cyclotomic(coef(rng)) * Cyclotomic::zeta(n, 1));
  }
  return ClassFunction(g, v);
}

}  // namespace

TEST_CASE("S3 table and inner products") {
  auto g = s3();
  auto t = CharacterTable::compute(g);
  CHECK(dims(t) == std::vector<long>{1, 1, 2});
  const auto& one = t[0];
  const auto& eps = t[1];
  const auto& rho = t[2];
  CHECK(one == ClassFunction::trivial(g));
  CHECK(eps == cf(g, {"1", "1", "-1"}));
  CHECK(rho == cf(g, {"2", "-1", "0"}));
  CHECK(inner_product(one, eps) == Cyclotomic(0L));
  CHECK(inner_product(rho, rho) == Cyclotomic(1L));
  for (const auto& chi : t.rows()) CHECK(inner_product(ClassFunction::regular(g), chi) == chi.dimension());
  CHECK(tensor(eps, eps) == one);
  CHECK(tensor(rho, eps) == rho);
  CHECK(decompose(ClassFunction::regular(g), t) == ints({1, 1, 2}));
  CHECK_THROWS_AS(inner_product(one, ClassFunction::trivial(d10())), ValidationError);
}

TEST_CASE("induction and restriction on S3") {
  auto g = s3();
  auto t = CharacterTable::compute(g);
  auto c2 = Subgroup::generated(g, {element(g, "(1 2)")});
  auto ind = induce(c2, ClassFunction::trivial(c2.group()));
  CHECK(ind.degree() == 3);
  CHECK(decompose(ind, t) == ints({1, 0, 1}));
  auto e = Subgroup::trivial(g);
  auto reg = induce(e, ClassFunction::trivial(e.group()));
  CHECK(reg == ClassFunction::regular(g));
  CHECK(decompose(reg, t) == ints({1, 1, 2}));

  auto c3 = Subgroup::generated(g, {element(g, "(1 2 3)")});
  CHECK(restrict(t[2], c3) == cf(c3.group(), {"2", "-1", "-1"}));
  CHECK(restrict(t[1], c3) == ClassFunction::trivial(c3.group()));
  CHECK(restrict(t[2], e) == cf(e.group(), {"2"}));
  CHECK(invariant_dimension(t[2], c3) == 0);
  CHECK(invariant_dimension(t[1], c3) == 1);
}

TEST_CASE("D10 and A5 tables") {
  auto d = d10();
  auto td = CharacterTable::compute(d);
  CHECK(dims(td) == std::vector<long>{1, 1, 2, 2});
  const auto golden1 = lit("z(5) + z(5)^4"), golden2 = lit("z(5)^2 + z(5)^3");
  int hits = 0;
  for (std::size_t i = 2; i < 4; ++i) {
    const auto& row = td[i];
    CHECK(row(element(d, "(2 5)(3 4)")) == Cyclotomic(0L));
    const auto v1 = row(element(d, "(1 2 3 4 5)"));
    const auto v2 = row(element(d, "(1 3 5 2 4)"));
    if (v1 == golden1 && v2 == golden2) ++hits;
    if (v1 == golden2 && v2 == golden1) ++hits;
  }
  CHECK(hits == 2);

  auto a = a5();
  auto ta = CharacterTable::compute(a);
  CHECK(dims(ta) == std::vector<long>{1, 3, 3, 4, 5});
  long sq = 0;
  for (long x : dims(ta)) sq += x * x;
  CHECK(sq == 60);
}

TEST_CASE("induction from D10 to A5") {
  auto a = a5();
  auto ta = CharacterTable::compute(a);
  auto h = Subgroup::generated(a, {element(a, "(1 2 3 4 5)"), element(a, "(2 5)(3 4)")});
  REQUIRE(h.order() == 10);
  auto th = CharacterTable::compute(h.group());
  for (std::size_t i = 2; i < 4; ++i) {
    auto ind = induce(h, th[i]);
    CHECK(ind.degree() == 12);
    CHECK(inner_product(ind, ind) == Cyclotomic(3L));
    auto m = decompose(ind, ta);
    for (std::size_t j = 0; j < ta.size(); ++j)
      CHECK(Cyclotomic(m[j]) == inner_product(th[i], restrict(ta[j], h)));
    // 12 = 3 + 4 + 5: one of the two 3-dimensional characters, then the 4 and the 5.
    CHECK(m[0] == 0);
    CHECK(m[1] + m[2] == 1);
    CHECK(m[3] == 1);
    CHECK(m[4] == 1);
  }
}

TEST_CASE("computed tables: orthogonality and small groups") {
  auto q8 = perm_group({"(1 2 3 4)(5 6 7 8)", "(1 5 3 7)(2 8 4 6)"}, 8);
  REQUIRE(q8->order() == 8);
  CHECK(dims(CharacterTable::compute(q8)) == std::vector<long>{1, 1, 1, 1, 2});
  CHECK(dims(CharacterTable::compute(s4())) == std::vector<long>{1, 1, 2, 3, 3});
  CHECK(dims(CharacterTable::compute(s5())) == std::vector<long>{1, 1, 4, 4, 5, 5, 6});
  auto c7 = cyclic(7);
  auto t7 = CharacterTable::compute(c7);
  CHECK(t7.size() == 7);
  CHECK(t7[1](element(c7, "(1 2 3 4 5 6 7)")).minimal().level() == 7);
  CHECK(dims(CharacterTable::compute(cyclic(1))) == std::vector<long>{1});

  // A table group with no permutation representation attached.
  std::vector<std::vector<int>> table(6, std::vector<int>(6));
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) table[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = (i + j) % 6;
  CHECK(CharacterTable::compute(FiniteGroup::from_table(table)).size() == 6);

  for (const auto& g : {s3(), s4(), d10(), a5(), q8, cyclic(12)}) {
    auto t = CharacterTable::compute(g);
    for (std::size_t a = 0; a < g->class_count(); ++a)
      for (std::size_t b = 0; b < g->class_count(); ++b) {
        Cyclotomic sum;
        for (const auto& chi : t.rows()) sum += chi.on_class(a) * chi.on_class(b).conj();
        const long expect = a == b ? g->order() / static_cast<long>(g->class_size(a)) : 0;
        CHECK(sum == Cyclotomic(expect));
      }
    for (const auto& h : all_subgroups(g))
      for (const auto& chi : t.rows()) CHECK(invariant_dimension(chi, h) >= 0);
  }
  CHECK_THROWS_AS(CharacterTable::compute(a5(), 59), ValidationError);
}

TEST_CASE("supplied tables and decomposition errors") {
  auto g = s3();
  auto t = CharacterTable::from_rows(g, {cf(g, {"1", "1", "1"}), cf(g, {"2", "-1", "0"}), cf(g, {"1", "1", "-1"})});
  CHECK(t.index_of(cf(g, {"2", "-1", "0"})) == 1);
  CHECK_THROWS_AS(CharacterTable::from_rows(g, {cf(g, {"1", "1", "-1"}), cf(g, {"1", "1", "1"}), cf(g, {"2", "-1", "0"})}),
                  ValidationError);
  CHECK_THROWS_AS(CharacterTable::from_rows(g, {cf(g, {"1", "1", "1"}), cf(g, {"2", "1", "0"}), cf(g, {"1", "1", "-1"})}),
                  ValidationError);
  CHECK_THROWS_AS(CharacterTable::from_rows(g, {cf(g, {"1", "1", "1"}), cf(g, {"1", "1", "-1"})}), ValidationError);
  CHECK_THROWS_WITH_AS(decompose(cf(g, {"1", "0", "0"}), t), doctest::Contains("not an integer"), ValidationError);
  CHECK_THROWS_WITH_AS(decompose(cf(g, {"0", "0", "-2"}), t), doctest::Contains("negative"), ValidationError);
  CHECK_THROWS_AS(ClassFunction(g, {lit("1")}), ValidationError);
}

TEST_CASE("Frobenius reciprocity on all subgroup pairs") {
  std::mt19937_64 rng(7331);
  int cases = 0;
  for (const auto& g : {s4(), d10(), a5()}) {
    for (const auto& h : all_subgroups(g)) {
      for (int rep = 0; rep < 3; ++rep) {
        auto chi = random_class_function(rng, h.group());
        auto psi = random_class_function(rng, g);
        CHECK(inner_product(induce(h, chi), psi) == inner_product(chi, restrict(psi, h)));
        CHECK(induce(h, chi).dimension() == Cyclotomic(static_cast<long>(h.index())) * chi.dimension());
        ++cases;
      }
    }
  }
  CHECK(cases >= 200);
}

TEST_CASE("decompose inverts from_multiplicities") {
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<long> mult(0, 4);
  for (const auto& g : {s3(), s4(), d10(), a5()}) {
    auto t = CharacterTable::compute(g);
    for (int trial = 0; trial < 60; ++trial) {
      std::vector<Integer> m;
      for (std::size_t i = 0; i < t.size(); ++i) m.push_back(mult(rng));
      CHECK(decompose(from_multiplicities(m, t), t) == m);
    }
  }
}
