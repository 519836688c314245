#include "galrep/commands.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <memory>
#include <sstream>

#include "galrep/chars.hpp"
#include "galrep/errors.hpp"
#include "galrep/localgal.hpp"
#include "galrep/lseries.hpp"
#include "galrep/weildeligne.hpp"

namespace galrep {

namespace {

using Fields = std::vector<std::pair<std::string, std::string>>;

std::string compact(const std::string& s) {
  std::string out;
  for (char c : s)
    if (c != ' ') out.push_back(c);
  return out;
}

std::string join(const std::vector<std::string>& items, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) out += (i ? sep : "") + items[i];
  return out;
}

std::string values_of(const ClassFunction& chi) {
  std::vector<std::string> v;
  for (const auto& x : chi.values()) v.push_back(x.str());
  return join(v, ", ");
}

std::string record_values(const ClassFunction& chi) {
  std::vector<std::string> v;
  for (const auto& x : chi.values()) v.push_back(compact(x.str()));
  return join(v, ",");
}

class Report {
 public:
  Report(std::string command, bool records) : command_(std::move(command)), records_(records) {}

  // Text mode skips empty text; records mode skips empty field lists.
  void add(const std::string& text, Fields fields) {
    if (!records_) {
      if (!text.empty()) out_ << text << "\n";
      return;
    }
    if (fields.empty()) return;
    std::sort(fields.begin(), fields.end());
    out_ << command_;
    for (const auto& [k, v] : fields) {
      out_ << " " << k << "=";
      if (v.find(' ') == std::string::npos) out_ << v;
      else out_ << '"' << v << '"';
    }
    out_ << "\n";
  }

  std::string str() const { return out_.str(); }

 private:
  std::string command_;
  bool records_;
  std::ostringstream out_;
};

// Builds the mathematical objects of a fixture on demand.
class Resolver {
 public:
  explicit Resolver(const Fixture& fx) : fx_(fx) {}

  const Fixture& fixture() const { return fx_; }

  const GroupPtr& group() {
    if (group_) return group_;
    if (!fx_.group) throw ValidationError("fixture has no [group] section");
    const auto& g = *fx_.group;
    try {
      if (!g.table.empty()) {
        std::vector<std::vector<int>> table;
        for (const auto& row : g.table) table.emplace_back(row.begin(), row.end());
        group_ = FiniteGroup::from_table(std::move(table), g.labels);
      } else {
        std::vector<Perm> perms;
        for (const auto& s : g.generators) perms.push_back(parse_cycles(s, g.degree));
        group_ = FiniteGroup::from_permutations(perms, g.degree);
      }
    } catch (const Error& e) {
      rethrow("group", e);
    }
    return group_;
  }

  int element(const ElementRef& ref, const std::string& where) {
    const auto& g = group();
    if (const long* i = std::get_if<long>(&ref)) {
      if (*i >= g->order()) fail(where, "element index " + std::to_string(*i) + " out of range for a group of order " + std::to_string(g->order()));
      return static_cast<int>(*i);
    }
    const auto& text = std::get<std::string>(ref);
    if (auto found = g->find_label(text)) return *found;
    if (g->is_permutation_group()) {
      try {
        if (auto idx = g->index_of(parse_cycles(text, g->degree()))) return *idx;
      } catch (const Error& e) {
        rethrow(where, e);
      }
    }
    fail(where, "'" + text + "' is not an element of the group");
  }

  const Subgroup& subgroup(const std::string& name) {
    if (auto it = subgroups_.find(name); it != subgroups_.end()) return it->second;
    for (const auto& [n, gens] : fx_.subgroups) {
      if (n != name) continue;
      std::vector<int> idx;
      for (const auto& e : gens) idx.push_back(element(e, "subgroups." + n));
      return subgroups_.emplace(name, Subgroup::generated(group(), idx)).first->second;
    }
    throw ValidationError("unknown subgroup '" + name + "'");
  }

  const std::shared_ptr<const CharacterTable>& table() {
    if (!table_) table_ = std::make_shared<const CharacterTable>(CharacterTable::compute(group()));
    return table_;
  }

  /// Names of the rows of the computed table, from [characters] where they match.
  std::string row_name(std::size_t i) {
    if (fx_.characters) {
      const auto& c = *fx_.characters;
      if (c.compute_table && i < c.names.size()) return c.names[i];
      for (const auto& [n, row] : c.rows)
        if (character(n) == (*table())[i]) return n;
    }
    return i == 0 ? "trivial" : "chi" + std::to_string(i);
  }

  std::vector<std::string> character_names() {
    std::vector<std::string> out;
    if (!fx_.characters) return out;
    out = fx_.characters->names;
    for (const auto& [n, row] : fx_.characters->rows) out.push_back(n);
    return out;
  }

  ClassFunction character(const std::string& name) {
    if (auto it = characters_.find(name); it != characters_.end()) return it->second;
    const auto& g = group();
    std::optional<ClassFunction> chi;
    if (fx_.characters) {
      const auto& c = *fx_.characters;
      for (std::size_t i = 0; i < c.names.size() && i < table()->size(); ++i)
        if (c.names[i] == name) chi = (*table())[i];
      if (!chi) {
        for (std::size_t i = c.names.size(); i-- > 0;)
          if (c.names[i] == name)
            fail("characters.names", "no row " + std::to_string(i) + " in a table with " + std::to_string(table()->size()) + " rows");
      }
      for (const auto& [n, row] : c.rows) {
        if (n != name) continue;
        if (row.size() != g->class_count())
          fail("characters." + n, std::to_string(row.size()) + " values for " + std::to_string(g->class_count()) + " classes");
        chi = ClassFunction(g, row);
      }
    }
    if (!chi && name == "trivial") chi = ClassFunction::trivial(g);
    if (!chi) throw ValidationError("unknown character '" + name + "'");
    return characters_.emplace(name, *chi).first->second;
  }

  const std::shared_ptr<const RamificationData>& ramification() {
    if (ramification_) return ramification_;
    if (!fx_.ramification) throw ValidationError("fixture has no [ramification] section");
    const auto& r = *fx_.ramification;
    std::vector<Subgroup> chain;
    for (const auto& gens : r.chain) {
      std::vector<int> idx;
      for (const auto& e : gens) idx.push_back(element(e, "ramification.chain"));
      chain.push_back(Subgroup::generated(group(), idx));
    }
    const int frob = element(r.frobenius, "ramification.frobenius");
    try {
      ramification_ = std::make_shared<const RamificationData>(RamificationData::create(group(), chain, frob, r.p, r.q));
    } catch (const Error& e) {
      rethrow("ramification", e);
    }
    return ramification_;
  }

  WDRep wd_rep(const std::string& name) {
    if (!fx_.wd) throw ValidationError("fixture has no [wd] section");
    const auto& w = *fx_.wd;
    const std::vector<WDComponentSpec>* specs = nullptr;
    for (const auto& [n, comps] : w.reps)
      if (n == name) specs = &comps;
    if (!specs) throw ValidationError("unknown WD representation '" + name + "'");
    const bool ramified = fx_.ramification.has_value();
    auto data = ramified ? ramification() : unramified_data(*w.q);
    std::vector<WDComponent> comps;
    for (const auto& s : *specs) {
      std::variant<ClassFunction, QuadraticFrobenius> artin = QuadraticFrobenius{s.quadratic_a.value_or(0), data->q()};
      if (!s.quadratic_a) {
        if (!ramified && s.character != "trivial") fail("wd." + name, "only 'trivial' is available without a [ramification] section");
        artin = ramified ? character(s.character) : ClassFunction::trivial(data->group());
      }
      UnramifiedTwist twist;
      try {
        twist = UnramifiedTwist::make(s.unit, s.weight);
      } catch (const Error& e) {
        rethrow("wd." + name, e);
      }
      comps.push_back(WDComponent{std::move(artin), twist, s.sp});
    }
    try {
      return WDRep::create(data, std::move(comps), ramified ? table() : nullptr);
    } catch (const Error& e) {
      rethrow("wd." + name, e);
    }
  }

  /// Name of an irreducible Artin part of a WD component.
  std::string artin_name(const WDComponent& c, const WDRep& w) {
    if (const auto* q = std::get_if<QuadraticFrobenius>(&c.artin)) return "quadratic(" + q->a.get_str() + ")";
    const auto& chi = std::get<ClassFunction>(c.artin);
    if (!fx_.ramification) return "trivial";
    const int i = w.table().index_of(chi);
    return i < 0 ? chi.str() : row_name(static_cast<std::size_t>(i));
  }

  Weierstrass curve() {
    if (!fx_.elliptic || !fx_.elliptic->coefficients) throw ValidationError("fixture has no [elliptic] coefficients");
    const auto& c = *fx_.elliptic->coefficients;
    return {c[0], c[1], c[2], c[3], c[4]};
  }

  EllipticLocalData elliptic() {
    if (!fx_.elliptic) throw ValidationError("fixture has no [elliptic] section");
    const auto& e = *fx_.elliptic;
    try {
      if (e.kind == "split") return EllipticLocalData::split_multiplicative(e.q);
      if (e.kind == "nonsplit") return EllipticLocalData::nonsplit_multiplicative(e.q);
      if (e.kind == "additive") return EllipticLocalData::additive(wd_rep(*e.wd));
      const Integer a = e.a ? *e.a : e.q + 1 - ec_point_count_bruteforce(curve(), e.q);
      return EllipticLocalData::good(a, e.q);
    } catch (const Error& err) {
      rethrow("elliptic", err);
    }
  }

  const GlobalConfig& global() {
    if (global_) return *global_;
    if (!fx_.global) throw ValidationError("fixture has no [global] section");
    const auto& g = *fx_.global;
    GlobalConfig c;
    c.kind = g.kind == "elliptic" ? LKind::Elliptic : LKind::Artin;
    for (const auto& r : g.ramified) c.ramified[r.p] = {UniPoly(r.polynomial), r.exponent};
    if (g.rule == "elliptic") {
      c.unramified = EllipticRule{curve()};
    } else if (g.rule == "explicit") {
      ExplicitFrobenius e;
      for (const auto& [p, ref] : g.frobenius) e.classes[p] = group()->class_of(element(ref, "global.frobenius"));
      c.unramified = e;
    } else {
      std::vector<std::complex<double>> hints;
      for (const auto& [re, im] : g.root_hints) hints.emplace_back(re, im);
      c.unramified = SplittingRule{IntPoly(g.polynomial.begin(), g.polynomial.end()), hints};
    }
    if (c.kind == LKind::Elliptic) {
      c.dim = 2;
    } else {
      c.group = group();
      if (g.subgroup) {
        c.subgroup = subgroup(*g.subgroup);
        const auto sub_table = CharacterTable::compute(c.subgroup->group());
        const auto row = static_cast<std::size_t>(g.subgroup_character.value_or(0));
        if (row >= sub_table.size())
          fail("global.subgroup_character", "the subgroup has only " + std::to_string(sub_table.size()) + " irreducible characters");
        c.character = sub_table[row];
        c.dim = static_cast<int>(c.character->degree().get_si()) * c.subgroup->index();
      } else {
        c.character = character(*g.character);
        try {
          c.dim = static_cast<int>(c.character->degree().get_si());
        } catch (const Error& e) {
          rethrow("global.character", e);
        }
      }
      if (g.conjugation) c.conjugation_class = group()->class_of(element(*g.conjugation, "global.conjugation"));
    }
    try {
      validate(c);
    } catch (const Error& e) {
      rethrow("global", e);
    }
    global_ = c;
    return *global_;
  }

  TowerIdentity tower() {
    if (!fx_.tower) throw ValidationError("fixture has no [tower] section");
    TowerIdentity t;
    for (const auto& [n, m] : fx_.tower->left) t.left.emplace_back(subgroup(n), static_cast<int>(m));
    for (const auto& [n, m] : fx_.tower->right) t.right.emplace_back(subgroup(n), static_cast<int>(m));
    return t;
  }

 private:
  std::string located(const std::string& where) const {
    const int line = fx_.line_of(where);
    const auto dot = where.find('.');
    std::string label = dot == std::string::npos ? "[" + where + "]" : "[" + where.substr(0, dot) + "] " + where.substr(dot + 1);
    return (line > 0 ? "line " + std::to_string(line) + ": " : "") + label + ": ";
  }
  [[noreturn]] void fail(const std::string& where, const std::string& what) const {
    throw ValidationError(located(where) + what);
  }
  [[noreturn]] void rethrow(const std::string& where, const Error& e) const {
    if (e.kind() == ErrorKind::Ambiguity) throw AmbiguityError(located(where) + e.what());
    throw ValidationError(located(where) + e.what());
  }

  const Fixture& fx_;
  GroupPtr group_;
  std::map<std::string, Subgroup> subgroups_;
  std::shared_ptr<const CharacterTable> table_;
  std::map<std::string, ClassFunction> characters_;
  std::shared_ptr<const RamificationData> ramification_;
  std::optional<GlobalConfig> global_;
};

struct Context {
  Resolver& fx;
  const CommandOptions& opt;
  Report& out;
};

std::vector<std::string> reps_or_all(Context& c) {
  return c.opt.reps.empty() ? c.fx.character_names() : c.opt.reps;
}

std::string require_subgroup(Context& c, const std::string& command) {
  if (!c.opt.subgroup) throw ValidationError(command + " needs --subgroup");
  return *c.opt.subgroup;
}

std::string require_rep(Context& c, const std::string& command) {
  if (c.opt.reps.size() != 1) throw ValidationError(command + " needs exactly one --rep");
  return c.opt.reps.front();
}

std::string decomposition_text(const std::vector<Integer>& mult, Resolver& fx, const std::string& plus) {
  std::vector<std::string> parts;
  for (std::size_t i = 0; i < mult.size(); ++i) {
    if (mult[i] == 0) continue;
    parts.push_back((mult[i] == 1 ? "" : mult[i].get_str() + "*") + fx.row_name(i));
  }
  return parts.empty() ? "0" : join(parts, plus);
}

void cmd_validate(Context& c) {
  const Fixture& f = c.fx.fixture();
  if (f.group) {
    const auto& g = c.fx.group();
    c.out.add("group: order " + std::to_string(g->order()) + ", " + std::to_string(g->class_count()) + " classes",
              {{"section", "group"}, {"order", std::to_string(g->order())}, {"classes", std::to_string(g->class_count())}});
  }
  if (f.characters) {
    for (const auto& n : c.fx.character_names()) {
      const auto chi = c.fx.character(n);
      try {
        decompose(chi, *c.fx.table());
      } catch (const Error& e) {
        throw ValidationError("[characters] " + n + ": " + e.what());
      }
      c.out.add("character " + n + ": " + values_of(chi),
                {{"section", "characters"}, {"name", n}, {"values", record_values(chi)}});
    }
  }
  for (const auto& [n, gens] : f.subgroups) {
    const auto& h = c.fx.subgroup(n);
    c.out.add("subgroup " + n + ": order " + std::to_string(h.order()) + ", index " + std::to_string(h.index()),
              {{"section", "subgroups"}, {"name", n}, {"order", std::to_string(h.order())}, {"index", std::to_string(h.index())}});
  }
  if (f.ramification) {
    const auto& d = *c.fx.ramification();
    const std::string e = std::to_string(d.inertia().order()), fdeg = std::to_string(d.residue_degree());
    c.out.add("ramification: p = " + std::to_string(d.p()) + ", q = " + d.q().get_str() + ", e = " + e + ", f = " + fdeg,
              {{"section", "ramification"}, {"p", std::to_string(d.p())}, {"q", d.q().get_str()}, {"e", e}, {"f", fdeg}});
  }
  if (f.wd) {
    for (const auto& [n, comps] : f.wd->reps) {
      const auto w = c.fx.wd_rep(n);
      c.out.add("wd " + n + ": dimension " + std::to_string(w.dimension()),
                {{"section", "wd"}, {"name", n}, {"dimension", std::to_string(w.dimension())}});
    }
  }
  if (f.elliptic) {
    const auto e = c.fx.elliptic();
    Fields fields{{"section", "elliptic"}, {"kind", f.elliptic->kind}, {"q", e.q().get_str()}};
    std::string text = "elliptic: " + f.elliptic->kind + " reduction, q = " + e.q().get_str();
    if (e.kind() == Reduction::Good) {
      fields.emplace_back("a", e.a().get_str());
      text += ", a = " + e.a().get_str();
    }
    c.out.add(text, fields);
  }
  if (f.global) {
    const auto& g = c.fx.global();
    const auto n = global_conductor(g);
    c.out.add("global: " + f.global->kind + ", dimension " + std::to_string(g.dim) + ", conductor " + n.get_str(),
              {{"section", "global"}, {"kind", f.global->kind}, {"dimension", std::to_string(g.dim)}, {"conductor", n.get_str()}});
  }
  if (f.tower) {
    const auto t = c.fx.tower();
    c.out.add("tower: " + std::to_string(t.left.size()) + " + " + std::to_string(t.right.size()) + " terms",
              {{"section", "tower"}, {"left", std::to_string(t.left.size())}, {"right", std::to_string(t.right.size())}});
  }
  c.out.add("valid", {{"status", "ok"}});
}

void cmd_table(Context& c) {
  const auto& g = c.fx.group();
  std::vector<std::string> reps, sizes;
  for (std::size_t k = 0; k < g->class_count(); ++k) {
    reps.push_back(g->label(g->class_representative(k)));
    sizes.push_back(std::to_string(g->class_size(k)));
    c.out.add("", {{"class", std::to_string(k)},
                   {"representative", std::to_string(g->class_representative(k))},
                   {"size", std::to_string(g->class_size(k))}});
  }
  c.out.add("classes: " + join(reps, ", ") + "\nsizes: " + join(sizes, ", "), {});
  const auto& t = *c.fx.table();
  for (std::size_t i = 0; i < t.size(); ++i)
    c.out.add(c.fx.row_name(i) + ": " + values_of(t[i]), {{"row", std::to_string(i)}, {"name", c.fx.row_name(i)}, {"values", record_values(t[i])}});
}

void cmd_induce(Context& c) {
  const auto name = require_subgroup(c, "induce");
  const auto& h = c.fx.subgroup(name);
  const auto sub_table = CharacterTable::compute(h.group());
  for (std::size_t i = 0; i < sub_table.size(); ++i) {
    const auto ind = induce(h, sub_table[i]);
    const auto mult = decompose(ind, *c.fx.table());
    c.out.add("Ind " + name + " psi" + std::to_string(i) + ": " + values_of(ind) + " = " + decomposition_text(mult, c.fx, " + "),
              {{"subgroup", name}, {"row", std::to_string(i)}, {"values", record_values(ind)},
               {"decomposition", decomposition_text(mult, c.fx, "+")}});
  }
}

// Character and ramification data over the fixed field of --subgroup, or over the base.
std::pair<ClassFunction, RamificationData> local_setting(Context& c, const std::string& rep) {
  const auto& data = *c.fx.ramification();
  const auto chi = c.fx.character(rep);
  if (!c.opt.subgroup) return {chi, data};
  const auto& h = c.fx.subgroup(*c.opt.subgroup);
  return {restrict(chi, h), restrict_ramification(data, h)};
}

Fields with_scope(Context& c, Fields f, const std::string& rep) {
  f.emplace_back("rep", rep);
  if (c.opt.subgroup) f.emplace_back("subgroup", *c.opt.subgroup);
  return f;
}

void cmd_local_poly(Context& c) {
  const auto reps = reps_or_all(c);
  for (const auto& rep : reps) {
    const auto [chi, data] = local_setting(c, rep);
    const auto p = local_polynomial(chi, data).str();
    c.out.add((reps.size() > 1 ? rep + ": " : "") + "P = " + p, with_scope(c, {{"P", compact(p)}}, rep));
  }
}

void cmd_conductor(Context& c) {
  const auto reps = reps_or_all(c);
  for (const auto& rep : reps) {
    const auto [chi, data] = local_setting(c, rep);
    const auto n = conductor_exponent(chi, data);
    swan_pairing(chi, data);
    const std::string tame = n.tame.get_str(), wild = n.wild.get_str(), total = n.total.get_str();
    c.out.add((reps.size() > 1 ? rep + ": " : "") + "tame=" + tame + " wild=" + wild + " total=" + total + " swan_check=ok",
              with_scope(c, {{"tame", tame}, {"wild", wild}, {"total", total}, {"swan_check", "ok"}}, rep));
  }
}

void cmd_disc(Context& c) {
  const auto& data = *c.fx.ramification();
  std::vector<std::string> names;
  if (c.opt.subgroup) names.push_back(*c.opt.subgroup);
  else
    for (const auto& [n, gens] : c.fx.fixture().subgroups) names.push_back(n);
  if (names.empty()) throw ValidationError("disc needs --subgroup or a [subgroups] section");
  const auto& table = *c.fx.table();
  std::vector<Integer> conductors;
  for (std::size_t i = 0; i < table.size(); ++i) conductors.push_back(Integer(conductor_exponent(table[i], data).total.get_num()));
  for (const auto& n : names) {
    const auto& h = c.fx.subgroup(n);
    const Integer v = discriminant_valuation(data, h);
    const auto mult = decompose(induce(h, ClassFunction::trivial(h.group())), table);
    Integer via = 0;
    for (std::size_t i = 0; i < mult.size(); ++i) via += mult[i] * conductors[i];
    if (via != v) throw InconsistencyError("discriminant of " + n + ": " + v.get_str() + " but the conductors give " + via.get_str());
    const std::string f = std::to_string(residue_extension_degree(data, h));
    c.out.add(n + ": v(disc) = " + v.get_str() + ", from irreducible conductors " + via.get_str() + ", f = " + f,
              {{"subgroup", n}, {"disc", v.get_str()}, {"from_irreducibles", via.get_str()}, {"residue_degree", f}});
  }
}

void print_components(Context& c, const WDRep& w, const std::string& command_rep) {
  for (const auto& comp : w.components()) {
    const auto name = c.fx.artin_name(comp, w);
    const auto unit = comp.twist.unit.str();
    c.out.add(name + ", unit " + unit + ", weight " + std::to_string(comp.twist.weight) + ", sp(" + std::to_string(comp.sp) + ")",
              {{"rep", command_rep}, {"artin", compact(name)}, {"unit", compact(unit)}, {"weight", std::to_string(comp.twist.weight)},
               {"sp", std::to_string(comp.sp)}});
  }
}

void cmd_wd(Context& c, const std::string& sub) {
  if (sub == "tensor") {
    if (c.opt.reps.size() != 2) throw ValidationError("wd tensor needs two --rep options");
    const auto t = wd_tensor(c.fx.wd_rep(c.opt.reps[0]), c.fx.wd_rep(c.opt.reps[1]));
    print_components(c, t, c.opt.reps[0] + "*" + c.opt.reps[1]);
    return;
  }
  const auto rep = require_rep(c, "wd " + sub);
  const auto w = c.fx.wd_rep(rep);
  if (sub == "poly") {
    const auto p = wd_local_polynomial(w).str();
    c.out.add("P = " + p, {{"rep", rep}, {"P", compact(p)}});
  } else if (sub == "cond") {
    const auto n = wd_conductor(w).get_str();
    c.out.add("conductor = " + n, {{"rep", rep}, {"conductor", n}});
  } else {
    throw ValidationError("unknown wd subcommand '" + sub + "' (poly, cond, tensor)");
  }
}

void cmd_ec(Context& c, const std::string& sub) {
  if (!c.fx.fixture().elliptic) throw ValidationError("fixture has no [elliptic] section");
  const Integer q = c.fx.fixture().elliptic->q;
  if (sub == "count") {
    const Integer n = ec_point_count_bruteforce(c.fx.curve(), q);
    const Integer a = q + 1 - n;
    c.out.add("#E(F_" + q.get_str() + ") = " + n.get_str() + ", a = " + a.get_str(), {{"q", q.get_str()}, {"count", n.get_str()}, {"a", a.get_str()}});
  } else if (sub == "extension") {
    if (!c.opt.degree) throw ValidationError("ec extension needs --degree");
    const unsigned k = *c.opt.degree;
    if (k < 1) throw ValidationError("--degree must be at least 1");
    const Integer a = c.fx.elliptic().a();
    if (c.fx.elliptic().kind() != Reduction::Good) throw ValidationError("ec extension needs good reduction");
    const Integer n = ec_count_extension(a, q, k);
    Integer qk;
    mpz_pow_ui(qk.get_mpz_t(), q.get_mpz_t(), k);
    std::string check = "none";
    if (qk <= 1000000 && c.fx.fixture().elliptic->coefficients) {
      const Integer brute = ec_point_count_bruteforce(c.fx.curve(), qk);
      if (brute != n) throw InconsistencyError("recurrence gives " + n.get_str() + " but enumeration over F_" + qk.get_str() + " gives " + brute.get_str());
      check = "bruteforce";
    }
    c.out.add("#E(F_" + q.get_str() + "^" + std::to_string(k) + ") = " + n.get_str() + " (check: " + check + ")",
              {{"q", q.get_str()}, {"degree", std::to_string(k)}, {"a", a.get_str()}, {"count", n.get_str()}, {"check", check}});
  } else if (sub == "wd") {
    const auto w = ec_local_wd(c.fx.elliptic());
    print_components(c, w, "elliptic");
    const auto p = wd_local_polynomial(w).str();
    const auto n = wd_conductor(w).get_str();
    c.out.add("P = " + p, {{"P", compact(p)}});
    c.out.add("conductor = " + n, {{"conductor", n}});
  } else {
    throw ValidationError("unknown ec subcommand '" + sub + "' (count, extension, wd)");
  }
}

std::string cycle_type_text(const std::vector<int>& t) {
  std::vector<std::string> parts;
  for (int x : t) parts.push_back(std::to_string(x));
  return join(parts, ",");
}

void cmd_frobenius(Context& c) {
  if (!c.opt.prime) throw ValidationError("frobenius needs --prime");
  const std::uint64_t p = *c.opt.prime;
  const auto& config = c.fx.global();
  if (config.ramified.count(p)) throw ValidationError("p = " + std::to_string(p) + " is ramified; no Frobenius class");
  if (const auto* rule = std::get_if<ExplicitFrobenius>(&config.unramified)) {
    auto it = rule->classes.find(p);
    if (it == rule->classes.end()) throw ValidationError("no Frobenius class given for p = " + std::to_string(p));
    const auto& g = *config.group;
    const int rep = g.class_representative(it->second);
    c.out.add("p = " + std::to_string(p) + ": class " + std::to_string(it->second) + " (" + g.label(rep) + "), order " +
                  std::to_string(g.element_order(rep)),
              {{"p", std::to_string(p)}, {"class", std::to_string(it->second)}, {"order", std::to_string(g.element_order(rep))}});
    return;
  }
  if (std::holds_alternative<EllipticRule>(config.unramified)) throw ValidationError("frobenius needs an Artin splitting or explicit rule");
  const auto& rule = std::get<SplittingRule>(config.unramified);
  const auto fc = frobenius_class(rule.polynomial, p, config.group, rule.root_hints);
  const std::string ps = std::to_string(p), type = cycle_type_text(fc.cycle_type);
  std::vector<std::string> cands;
  for (auto k : fc.candidates) cands.push_back(std::to_string(k));
  const auto& g = *config.group;
  Fields fields{{"p", ps}, {"cycle_type", type}, {"order", std::to_string(fc.order)}, {"candidates", join(cands, ",")},
                {"class", std::to_string(fc.conjugacy_class)}};
  std::string text = "p = " + ps + ": cycle type (" + type + "), order " + std::to_string(fc.order) + ", candidates " + join(cands, ", ");
  if (fc.resolvents) {
    const auto& r = *fc.resolvents;
    const bool witness = r.r1 + r.r2 == r.e2;
    if (!witness) throw InconsistencyError("resolvents r1 + r2 = " + Integer(r.r1 + r.r2).get_str() + " differ from e2 = " + r.e2.get_str());
    text += "\nresolvents: r1 = " + r.r1.get_str() + ", r2 = " + r.r2.get_str() + ", r1 + r2 = " + r.e2.get_str() + " = e2";
    fields.insert(fields.end(), {{"r1", r.r1.get_str()}, {"r2", r.r2.get_str()}, {"e2", r.e2.get_str()}, {"witness", "ok"}});
    if (fc.resolvent_mod_p) {
      text += ", reduction mod p = " + std::to_string(*fc.resolvent_mod_p);
      fields.emplace_back("resolvent_mod_p", std::to_string(*fc.resolvent_mod_p));
    }
  }
  text += "\nclass " + std::to_string(fc.conjugacy_class) + " (" + g.label(g.class_representative(fc.conjugacy_class)) + ")";
  c.out.add(text, fields);
}

void cmd_lseries(Context& c) {
  const auto& config = c.fx.global();
  if (c.opt.prime) {
    const auto p = std::to_string(*c.opt.prime);
    const auto f = euler_factor(config, *c.opt.prime).str();
    c.out.add("P_" + p + " = " + f, {{"p", p}, {"factor", compact(f)}});
    return;
  }
  const std::size_t limit = c.opt.limit.value_or(10);
  const auto series = dirichlet_coefficients(config, limit);
  const std::size_t stride = c.opt.stride.value_or(limit);
  if (stride < 1) throw ValidationError("--stride must be at least 1");
  if (c.opt.records) {
    for (std::size_t n = 1; n <= limit; ++n) c.out.add("", {{"n", std::to_string(n)}, {"a", compact(series[n].str())}});
    return;
  }
  for (std::size_t start = 1; start <= limit; start += stride) {
    std::vector<std::string> chunk;
    for (std::size_t n = start; n < start + stride && n <= limit; ++n) chunk.push_back(compact(series[n].str()));
    c.out.add(join(chunk, ","), {});
  }
}

void cmd_fe_data(Context& c) {
  const auto fe = functional_equation_data(c.fx.global());
  const std::string self = fe.self_dual ? "yes" : "no";
  c.out.add("A = " + fe.a.get_str(), {});
  c.out.add("conductor = " + fe.conductor.get_str(), {});
  if (fe.gamma_c_count > 0) c.out.add("gamma: Gamma_C^" + std::to_string(fe.gamma_c_count), {});
  else c.out.add("gamma: d+ = " + std::to_string(fe.d_plus) + ", d- = " + std::to_string(fe.d_minus), {});
  c.out.add("self-dual: " + self, {});
  c.out.add("root number: " + fe.root_number,
            {{"A", fe.a.get_str()}, {"conductor", fe.conductor.get_str()}, {"d_plus", std::to_string(fe.d_plus)},
             {"d_minus", std::to_string(fe.d_minus)}, {"gamma_c", std::to_string(fe.gamma_c_count)}, {"self_dual", self},
             {"root_number", "unknown"}, {"root_number_abs", "1"}});
}

// Failure of the identity is reported and then turned into status 1.
bool cmd_zeta_identity(Context& c) {
  const std::size_t limit = c.opt.limit.value_or(1000);
  const auto r = zeta_identity_check(c.fx.global(), c.fx.tower(), limit);
  std::vector<std::string> skipped;
  for (auto p : r.skipped_primes) skipped.push_back(std::to_string(p));
  c.out.add(std::string("character identity: ") + (r.character_identity ? "exact" : "fails (" + r.character_failure + ")"),
            {{"character_identity", r.character_identity ? "exact" : "fails"}});
  if (!r.character_identity) return false;
  const std::string n = std::to_string(r.limit);
  c.out.add(r.coefficients_agree ? "coefficients agree for n <= " + n
                                 : "coefficients differ at n = " + std::to_string(r.first_mismatch.value_or(0)),
            {{"limit", n}, {"coefficients", r.coefficients_agree ? "agree" : "differ"},
             {"first_mismatch", r.first_mismatch ? std::to_string(*r.first_mismatch) : "none"}});
  c.out.add(std::string("routes: ") + (r.routes_agree ? "agree" : "differ"), {{"routes", r.routes_agree ? "agree" : "differ"}});
  c.out.add("skipped primes: " + (skipped.empty() ? std::string("none") : join(skipped, ", ")),
            {{"skipped_primes", skipped.empty() ? "none" : join(skipped, ",")}});
  return r.coefficients_agree && r.routes_agree;
}

int status_of(const Error& e) { return static_cast<int>(e.kind()); }

}  // namespace

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names{"validate", "table", "induce", "local-poly", "conductor", "disc", "wd",
                                              "ec", "frobenius", "lseries", "fe-data", "zeta-identity"};
  return names;
}

CommandResult run_command(const std::vector<std::string>& command, const Fixture& fixture, const CommandOptions& options) {
  CommandResult result;
  if (command.empty()) {
    result.status = 1;
    result.error = "no command given";
    return result;
  }
  const std::string& name = command[0];
  const bool has_sub = name == "wd" || name == "ec";
  if (has_sub && command.size() != 2) {
    result.status = 1;
    result.error = name + " needs a subcommand";
    return result;
  }
  if (!has_sub && command.size() != 1) {
    result.status = 1;
    result.error = "unexpected argument '" + command[1] + "'";
    return result;
  }
  Report report(has_sub ? name + "-" + command[1] : name, options.records);
  Resolver resolver(fixture);
  Context ctx{resolver, options, report};
  try {
    bool ok = true;
    if (name == "validate") cmd_validate(ctx);
    else if (name == "table") cmd_table(ctx);
    else if (name == "induce") cmd_induce(ctx);
    else if (name == "local-poly") cmd_local_poly(ctx);
    else if (name == "conductor") cmd_conductor(ctx);
    else if (name == "disc") cmd_disc(ctx);
    else if (name == "wd") cmd_wd(ctx, command[1]);
    else if (name == "ec") cmd_ec(ctx, command[1]);
    else if (name == "frobenius") cmd_frobenius(ctx);
    else if (name == "lseries") cmd_lseries(ctx);
    else if (name == "fe-data") cmd_fe_data(ctx);
    else if (name == "zeta-identity") ok = cmd_zeta_identity(ctx);
    else throw ValidationError("unknown command '" + name + "'");
    if (!ok) {
      result.status = 1;
      result.error = "zeta identity does not hold";
    }
  } catch (const Error& e) {
    result.status = status_of(e);
    result.error = e.what();
  } catch (const std::exception& e) {
    result.status = 4;
    result.error = std::string("internal error: ") + e.what();
  }
  result.output = report.str();
  return result;
}

}  // namespace galrep
