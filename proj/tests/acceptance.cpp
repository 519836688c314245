// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any failure.
#include <algorithm>
#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <memory>
#include <regex>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "galrep/commands.hpp"
#include "galrep/errors.hpp"
#include "galrep/fixture.hpp"
#include "galrep/weildeligne.hpp"
#include "standard_groups.hpp"

using namespace galrep;

namespace {

struct Outcome {
  std::vector<std::string> failures;

  void expect(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
};

using Record = std::map<std::string, std::string>;

std::vector<Record> records(const std::string& text) {
  std::vector<Record> out;
  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) {
    std::istringstream fields(line);
    std::string field;
    Record r;
    fields >> r["command"];
    while (fields >> field) {
      const auto eq = field.find('=');
      if (eq != std::string::npos) r[field.substr(0, eq)] = field.substr(eq + 1);
    }
    out.push_back(r);
  }
  return out;
}

Fixture load(const std::string& name) { return parse_fixture_file(std::string(GALREP_FIXTURE_DIR) + "/" + name); }

CommandResult run(const std::vector<std::string>& words, const Fixture& fx, CommandOptions opt = {}) {
  opt.records = true;
  return run_command(words, fx, opt);
}

Record single(Outcome& o, const CommandResult& r, const std::string& what) {
  o.expect(r.status == 0, what + ": status " + std::to_string(r.status) + " " + r.error);
  const auto rs = records(r.output);
  o.expect(rs.size() == 1, what + ": expected one record, got '" + r.output + "'");
  return rs.empty() ? Record{} : rs.front();
}

void worked_example(Outcome& o) {
  const auto fx = load("s3_q5.fix");
  const std::map<std::string, std::string> expected{{"one", "1-T"}, {"eps", "1+T"}, {"rho2", "1"}};
  for (const auto& [rep, poly] : expected) {
    CommandOptions opt;
    opt.reps = {rep};
    const auto r = single(o, run({"local-poly"}, fx, opt), "local-poly " + rep);
    o.expect(r.count("P") && r.at("P") == poly, "P(" + rep + ") = " + (r.count("P") ? r.at("P") : "?"));
  }
  CommandOptions opt;
  opt.reps = {"rho2"};
  auto c = single(o, run({"conductor"}, fx, opt), "conductor rho2");
  o.expect(c["tame"] == "2" && c["wild"] == "0" && c["total"] == "2" && c["swan_check"] == "ok", "conductor of rho2");
  for (const auto& [sub, disc] : std::map<std::string, std::string>{{"F", "4"}, {"L", "2"}}) {
    CommandOptions d;
    d.subgroup = sub;
    auto r = single(o, run({"disc"}, fx, d), "disc " + sub);
    o.expect(r["disc"] == disc && r["from_irreducibles"] == disc, "v(disc) of " + sub + " = " + r["disc"] + "/" + r["from_irreducibles"]);
  }
}

bool is_prime(unsigned long n) {
  if (n < 2) return false;
  for (unsigned long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

void mod3_character(Outcome& o) {
  const auto fx = load("chi3.fix");
  for (unsigned long p = 2; p < 200; ++p) {
    if (!is_prime(p)) continue;
    CommandOptions opt;
    opt.prime = p;
    auto r = single(o, run({"lseries"}, fx, opt), "Euler factor at " + std::to_string(p));
    const std::string want = p == 3 ? "1" : p % 3 == 1 ? "1-T" : "1+T";
    o.expect(r["factor"] == want, "factor at " + std::to_string(p) + " = " + r["factor"]);
  }
  CommandOptions opt;
  opt.limit = 5;
  const auto r = run({"lseries"}, fx, opt);
  std::vector<std::string> a;
  for (auto& rec : records(r.output)) a.push_back(rec["a"]);
  o.expect(a == std::vector<std::string>{"1", "-1", "0", "1", "-1"}, "a_1..a_5");
  auto fe = single(o, run({"fe-data"}, fx), "fe-data");
  o.expect(fe["A"] == "3" && fe["d_plus"] == "0" && fe["d_minus"] == "1", "A, d+, d-");
}

void zeta_identity(Outcome& o) {
  CommandOptions opt;
  opt.limit = 1000;
  const auto r = run({"zeta-identity"}, load("d10_quintic.fix"), opt);
  o.expect(r.status == 0, "zeta-identity status " + std::to_string(r.status) + " " + r.error);
  Record all;
  for (auto& rec : records(r.output)) all.insert(rec.begin(), rec.end());
  o.expect(all["character_identity"] == "exact", "virtual character identity");
  o.expect(all["coefficients"] == "agree" && all["limit"] == "1000" && all["first_mismatch"] == "none", "coefficients up to 1000");
  o.expect(all["routes"] == "agree", "splitting routes agree");
  o.expect(all["skipped_primes"] == "5,47", "skipped primes " + all["skipped_primes"]);
}

void frobenius_probe(Outcome& o) {
  CommandOptions opt;
  opt.prime = 2;
  auto r = single(o, run({"frobenius"}, load("d10_quintic.fix"), opt), "frobenius at 2");
  o.expect(r["cycle_type"] == "5" && r["order"] == "5", "cycle type " + r["cycle_type"]);
  o.expect(!r["class"].empty(), "determinate class");
  o.expect(r["r1"] == "2" && r["r2"] == "-5" && r["e2"] == "-3" && r["witness"] == "ok", "r1 + r2 = e2 = -3");
}

Weierstrass curve(long a1, long a2, long a3, long a4, long a6) {
  return {Integer(a1), Integer(a2), Integer(a3), Integer(a4), Integer(a6)};
}

void elliptic_counts(Outcome& o) {
  const auto e1 = curve(0, 0, 0, 0, 1);
  o.expect(ec_point_count_bruteforce(e1, 5) == 6, "#E(F_5) for y^2 = x^3 + 1");
  const std::vector<std::array<long, 2>> listed{{0, 1}, {0, -1}, {2, 2}, {2, -2}, {-1, 0}};
  std::set<std::array<long, 2>> distinct;
  for (auto [x, y] : listed) {
    const long lhs = ((y * y) % 5 + 5) % 5, rhs = ((x * x * x + 1) % 5 + 5) % 5;
    o.expect(lhs == rhs, "listed point (" + std::to_string(x) + ", " + std::to_string(y) + ")");
    distinct.insert({(x % 5 + 5) % 5, (y % 5 + 5) % 5});
  }
  o.expect(distinct.size() + 1 == 6, "listed points plus infinity give 6");

  const auto e11 = curve(0, -1, 1, 0, 0);
  const Integer n2 = ec_point_count_bruteforce(e11, 2);
  const Integer a2 = Integer(3) - n2;
  o.expect(n2 == 5 && a2 == -2, "#E(F_2) = 5, a_2 = -2");
  for (unsigned n : {2u, 3u}) {
    const Integer q = n == 2 ? 4 : 8;
    o.expect(ec_count_extension(a2, 2, n) == ec_point_count_bruteforce(e11, q), "F_" + to_string(q) + " recurrence vs brute force");
  }
  const Integer a7 = Integer(8) - ec_point_count_bruteforce(e11, 7);
  o.expect(ec_count_extension(a7, 7, 2) == ec_point_count_bruteforce(e11, 49), "7^2 cross-check");
  o.expect(ec_count_extension(a7, 7, 3) == ec_point_count_bruteforce(e11, 343), "7^3 cross-check");
  const Integer n11 = ec_count_extension(a7, 7, 11);
  o.expect(n11 == Integer("1977406870"), "#E(F_{7^11}) = " + to_string(n11));
}

std::size_t rank(std::vector<std::vector<Rational>> a) {
  std::size_t r = 0;
  for (std::size_t col = 0; !a.empty() && col < a[0].size() && r < a.size(); ++col) {
    std::size_t pivot = r;
    while (pivot < a.size() && a[pivot][col] == 0) ++pivot;
    if (pivot == a.size()) continue;
    std::swap(a[pivot], a[r]);
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == r || a[i][col] == 0) continue;
      const Rational f = a[i][col] / a[r][col];
      for (std::size_t j = col; j < a[0].size(); ++j) a[i][j] -= f * a[r][j];
    }
    ++r;
  }
  return r;
}

using Matrix = std::vector<std::vector<Rational>>;

Matrix multiply(const Matrix& a, const Matrix& b) {
  Matrix c(a.size(), std::vector<Rational>(b[0].size(), Rational(0)));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < b.size(); ++k)
      for (std::size_t j = 0; j < b[0].size(); ++j) c[i][j] += a[i][k] * b[k][j];
  return c;
}

void wd_layer(Outcome& o) {
  const Integer q = 5;
  const auto data = unramified_data(q);
  const auto sp = [&](int n) { return WDRep::create(data, {{ClassFunction::trivial(data->group()), {}, n}}); };
  o.expect(wd_local_polynomial(sp(2)).str() == "1 - T", "P(sp(2)) = " + wd_local_polynomial(sp(2)).str());
  o.expect(wd_conductor(sp(2)) == 1, "conductor of sp(2)");

  const auto fx = load("s3_q5.fix");
  CommandOptions opt;
  opt.reps = {"rho"};
  auto p = single(o, run({"wd", "poly"}, fx, opt), "wd poly rho");
  auto c = single(o, run({"wd", "cond"}, fx, opt), "wd cond rho");
  o.expect(p["P"] == "1" && c["conductor"] == "2", "WD example over Q_5: P = " + p["P"] + ", conductor " + c["conductor"]);

  // Basis e_i ⊗ e_j at index 2i + j; N e_1 = e_0.
  Matrix n4(4, std::vector<Rational>(4, Rational(0)));
  std::array<unsigned, 4> degree{};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      const int col = 2 * i + j;
      degree[col] = static_cast<unsigned>(i + j);
      if (i == 1) n4[2 * 0 + j][col] += 1;
      if (j == 1) n4[2 * i + 0][col] += 1;
    }
  std::vector<std::size_t> ranks{4};
  Matrix power = n4;
  while (ranks.back() > 0) {
    ranks.push_back(rank(power));
    power = multiply(power, n4);
  }
  std::multiset<int> oracle_blocks;
  for (std::size_t k = 1; k < ranks.size(); ++k) {
    const std::size_t ge_k = ranks[k - 1] - ranks[k];
    const std::size_t ge_k1 = k + 1 < ranks.size() ? ranks[k] - ranks[k + 1] : 0;
    for (std::size_t m = 0; m < ge_k - ge_k1; ++m) oracle_blocks.insert(static_cast<int>(k));
  }
  // Frobenius is diagonal with eigenvalue q^degree and N lowers the degree, so ker N splits by degree.
  std::multiset<int> oracle_weights;
  for (unsigned d = 0; d <= 2; ++d) {
    Matrix cols(4);
    std::size_t dim = 0;
    for (int r = 0; r < 4; ++r)
      for (int col = 0; col < 4; ++col)
        if (degree[col] == d) cols[r].push_back(n4[r][col]);
    for (int col = 0; col < 4; ++col) dim += degree[col] == d;
    const std::size_t kernel = dim - rank(cols);
    for (std::size_t m = 0; m < kernel; ++m) oracle_weights.insert(static_cast<int>(2 * d));
  }
  std::multiset<Integer> oracle_spectrum;
  for (unsigned d : degree) oracle_spectrum.insert(ipow(q, d));

  const auto t = wd_tensor(sp(2), sp(2));
  std::multiset<int> blocks, weights;
  std::multiset<Integer> spectrum;
  for (const auto& comp : t.components()) {
    blocks.insert(comp.sp);
    weights.insert(comp.twist.weight);
    o.expect(comp.twist.unit == Cyclotomic(1L) && comp.twist.weight % 2 == 0, "integral twist");
    for (int k = 0; k < comp.sp; ++k) spectrum.insert(ipow(q, static_cast<unsigned>(comp.twist.weight / 2 + k)));
  }
  o.expect(oracle_blocks == std::multiset<int>{3, 1}, "oracle Jordan type {3, 1}");
  o.expect(blocks == oracle_blocks, "sp(2) x sp(2) Jordan type");
  o.expect(oracle_weights == std::multiset<int>{0, 2} && weights == oracle_weights, "weights on ker N");
  o.expect(spectrum == oracle_spectrum, "Frobenius spectrum");
  for (const auto& comp : t.components())
    o.expect((comp.sp == 3 && comp.twist.weight == 0) || (comp.sp == 1 && comp.twist.weight == 2), "sp(3) + sp(1)<2>");
}

struct Suite {
  const char* binary;
  const char* test_case;
};

void property_suites(Outcome& o) {
  const std::vector<Suite> suites{
      {GALREP_TEST_CHARS, "Frobenius reciprocity on all subgroup pairs"},
      {GALREP_TEST_LOCALGAL, "induction identity and conductor-discriminant formula"},
      {GALREP_TEST_LOCALGAL, "Swan pairing equals the wild sum; Artin integrality"},
      {GALREP_TEST_EXACT, "series_invert examples and property"},
      {GALREP_TEST_LSERIES, "Dirichlet coefficients are multiplicative and additive"},
  };
  for (const auto& s : suites) {
    const std::string cmd = std::string("\"") + s.binary + "\" --no-colors=true \"--test-case=" + s.test_case + "\" 2>&1";
    std::unique_ptr<FILE, int (*)(FILE*)> pipe(popen(cmd.c_str(), "r"), pclose);
    if (!pipe) {
      o.expect(false, std::string("could not start ") + s.binary);
      continue;
    }
    std::string output;
    std::array<char, 4096> buf{};
    while (std::fgets(buf.data(), buf.size(), pipe.get())) output += buf.data();
    const int status = pclose(pipe.release());
    static const std::regex summary(R"(test cases:\s+1 \|\s+1 passed \| 0 failed)");
    const bool ran = std::regex_search(output, summary);
    o.expect(status == 0 && ran, std::string(s.test_case) + ":\n" + output);
  }
}

std::string expect_validation_error(const std::function<void()>& f) {
  try {
    f();
  } catch (const ValidationError& e) {
    return e.what();
  }
  return "";
}

void validation_rules(Outcome& o) {
  const auto hasse = expect_validation_error([] { EllipticLocalData::good(5, 5); });
  o.expect(hasse.find("Hasse") != std::string::npos, "a = 5 over F_5 rejected by the Hasse bound");
  o.expect(expect_validation_error([] { EllipticLocalData::good(4, 4); }).empty(), "a = 4 over F_4 accepted");

  int accepted = 0;
  for (long p : {5L, 7L, 11L, 13L}) {
    for (int e : {1, 2, 3, 4, 5, 6, 8}) {
      if (e % p == 0) continue;
      auto g = testgroups::cyclic(e);
      auto data = std::make_shared<const RamificationData>(RamificationData::create(
          g, {Subgroup::whole(g), Subgroup::trivial(g)}, 0, static_cast<std::uint64_t>(p), p));
      auto table = CharacterTable::compute(g);
      std::vector<std::vector<WDComponent>> candidates;
      for (std::size_t i = 0; i < table.size(); ++i) {
        candidates.push_back({{table[i], {}, 2}});
        for (std::size_t j = i; j < table.size(); ++j) candidates.push_back({{table[i], {}, 1}, {table[j], {}, 1}});
      }
      for (auto& comps : candidates) {
        const auto wd = WDRep::create(data, comps);
        try {
          const auto ell = EllipticLocalData::additive(wd);
          o.expect(wd_conductor(ec_local_wd(ell)) <= 2, "accepted additive data has conductor <= 2");
          ++accepted;
        } catch (const ValidationError&) {
          o.expect(wd_conductor(wd) > 2 || wd_local_polynomial(wd) != UniPoly::one() ||
                       tame_inertia_image(wd).order == 5 || tame_inertia_image(wd).order > 6,
                   "additive data rejected without cause");
        }
      }
    }
  }
  o.expect(accepted > 0, "some additive data accepted");

  const auto r = run_command({"validate"}, load("additive_order5.fix"), {});
  o.expect(r.status == 1, "order-5 fixture status " + std::to_string(r.status));
  o.expect(r.error.find("[elliptic]") != std::string::npos && r.error.find("of order 5") != std::string::npos &&
               r.error.starts_with("line "),
           "order-5 diagnostic: " + r.error);
}

struct Criterion {
  int number;
  const char* description;
  double limit_ms;
  void (*body)(Outcome&);
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "S3 over Q5: local polynomials, conductor 2, discriminants 4 and 2", 1000, worked_example},
      {2, "mod-3 character: Euler factors, a_1..a_5, A = 3, (d+, d-) = (0, 1)", 1000, mod3_character},
      {3, "D10 zeta identity up to n = 1000", 30000, zeta_identity},
      {4, "Frobenius at 2 is a 5-cycle with r1 + r2 = -3", 1000, frobenius_probe},
      {5, "elliptic point counts and the 7^11 extension count", 10000, elliptic_counts},
      {6, "WD local polynomials, conductors and sp(2) x sp(2)", 1000, wd_layer},
      {7, "seeded property suites", 60000, property_suites},
      {8, "Hasse bound, conductor at most 2, order-5 inertia rejected", 0, validation_rules},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.body(o);
    } catch (const std::exception& e) {
      o.failures.push_back(std::string("exception: ") + e.what());
    }
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    if (c.limit_ms > 0 && ms > c.limit_ms)
      o.failures.push_back("took " + std::to_string(ms) + " ms, limit " + std::to_string(c.limit_ms) + " ms");
    const bool ok = o.failures.empty();
    failed += !ok;
    std::printf("criterion %d %s %.0f ms: %s\n", c.number, ok ? "PASS" : "FAIL", ms, c.description);
    for (const auto& f : o.failures) std::printf("    %s\n", f.c_str());
  }
  std::fflush(stdout);
  return failed == 0 ? 0 : 1;
}
