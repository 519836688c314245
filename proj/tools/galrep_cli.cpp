// Command-line front end over the C API.
#include <cstdio>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "galrep/galrep.h"

namespace {

struct Flags {
  std::string fixture;
  std::vector<std::string> reps;
  std::optional<std::string> subgroup;
  std::optional<std::uint64_t> limit;
  std::optional<std::uint64_t> prime;
  std::optional<std::uint64_t> stride;
  std::optional<std::uint32_t> degree;
  std::string format = "text";
};

void add_flags(CLI::App* cmd, Flags& f) {
  cmd->add_option("fixture", f.fixture, "fixture document")->required();
  cmd->add_option("--rep", f.reps, "character or WD representation name (repeatable)");
  cmd->add_option("--subgroup", f.subgroup, "subgroup name from [subgroups]");
  cmd->add_option("--limit", f.limit, "number of Dirichlet coefficients");
  cmd->add_option("--prime", f.prime, "a single prime");
  cmd->add_option("--stride", f.stride, "coefficients per output line");
  cmd->add_option("--degree", f.degree, "extension degree for `ec extension`");
  cmd->add_option("--format", f.format, "text or records")->check(CLI::IsMember({"text", "records"}));
}

int run(const std::vector<std::string>& words, const Flags& f) {
  galrep_fixture* fixture = nullptr;
  if (galrep_status s = galrep_fixture_load(f.fixture.c_str(), &fixture); s != GALREP_OK) {
    std::cerr << "error: " << galrep_last_error() << "\n";
    return s;
  }
  std::unique_ptr<galrep_fixture, decltype(&galrep_fixture_free)> fx(fixture, galrep_fixture_free);
  std::unique_ptr<galrep_options, decltype(&galrep_options_free)> opt(galrep_options_new(), galrep_options_free);
  for (const auto& r : f.reps) galrep_options_add_rep(opt.get(), r.c_str());
  if (f.subgroup) galrep_options_set_subgroup(opt.get(), f.subgroup->c_str());
  if (f.limit) galrep_options_set_limit(opt.get(), *f.limit);
  if (f.prime) galrep_options_set_prime(opt.get(), *f.prime);
  if (f.stride) galrep_options_set_stride(opt.get(), *f.stride);
  if (f.degree) galrep_options_set_degree(opt.get(), *f.degree);
  galrep_options_set_records(opt.get(), f.format == "records");

  std::vector<const char*> argv;
  for (const auto& w : words) argv.push_back(w.c_str());
  char* out = nullptr;
  const galrep_status s = galrep_run(fx.get(), argv.data(), argv.size(), opt.get(), &out);
  if (out) {
    std::fputs(out, stdout);
    galrep_string_free(out);
  }
  if (s != GALREP_OK) std::cerr << "error: " << galrep_last_error() << "\n";
  return s;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Galois representations, local polynomials, conductors and L-series from fixture documents"};
  app.require_subcommand(1);
  Flags flags;
  std::vector<std::string> words;

  const std::vector<std::pair<std::string, std::string>> simple{
      {"validate", "parse and validate every section"},
      {"table", "character table"},
      {"induce", "induce the irreducibles of --subgroup"},
      {"local-poly", "local polynomial det(1 - Frob T) on inertia invariants"},
      {"conductor", "conductor exponent with the Swan cross-check"},
      {"disc", "discriminant valuation of fixed fields"},
      {"frobenius", "Frobenius class at --prime"},
      {"lseries", "Dirichlet coefficients, or the Euler factor at --prime"},
      {"fe-data", "functional equation data"},
      {"zeta-identity", "Dedekind zeta identity of [tower]"},
  };
  for (const auto& [name, help] : simple) {
    auto* cmd = app.add_subcommand(name, help);
    add_flags(cmd, flags);
    cmd->callback([&words, n = name] { words = {n}; });
  }
  const std::vector<std::pair<std::string, std::vector<std::string>>> nested{
      {"wd", {"poly", "cond", "tensor"}},
      {"ec", {"count", "extension", "wd"}},
  };
  for (const auto& [name, subs] : nested) {
    auto* cmd = app.add_subcommand(name, name == "wd" ? "Weil-Deligne representations" : "elliptic curves");
    cmd->require_subcommand(1);
    for (const auto& s : subs) {
      auto* sub = cmd->add_subcommand(s);
      add_flags(sub, flags);
      sub->callback([&words, n = name, s] { words = {n, s}; });
    }
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return GALREP_ERR_VALIDATION;
  }
  return run(words, flags);
}
