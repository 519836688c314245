#include "galrep/fixture.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>

#include "galrep/errors.hpp"

namespace galrep {

namespace {

struct Value {
  enum class Kind { Atom, String, Array };
  Kind kind = Kind::Atom;
  std::string text;
  std::vector<Value> items;
};

std::string describe(const Value& v) {
  switch (v.kind) {
    case Value::Kind::Atom: return "'" + v.text + "'";
    case Value::Kind::String: return "string \"" + v.text + "\"";
    case Value::Kind::Array: return "array";
  }
  return "value";
}

class ValueParser {
 public:
  ValueParser(const std::string& text, int line) : s_(text), line_(line) {}

  Value parse() {
    Value v = value();
    skip_space();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "' after value");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, line_); }

  void skip_space() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  Value value() {
    skip_space();
    if (pos_ == s_.size()) fail("missing value");
    const char c = s_[pos_];
    if (c == '[') return array();
    if (c == '"') return string();
    if (c == ']' || c == ',') fail("unexpected '" + std::string(1, c) + "'");
    Value v;
    while (pos_ < s_.size()) {
      const char d = s_[pos_];
      if (d == ',' || d == '[' || d == ']' || d == '"' || std::isspace(static_cast<unsigned char>(d))) break;
      v.text.push_back(d);
      ++pos_;
    }
    return v;
  }

  Value string() {
    Value v;
    v.kind = Value::Kind::String;
    ++pos_;
    while (true) {
      if (pos_ == s_.size()) fail("unterminated string");
      char c = s_[pos_++];
      if (c == '"') break;
      if (c == '\\') {
        if (pos_ == s_.size()) fail("unterminated string");
        c = s_[pos_++];
        if (c != '"' && c != '\\') fail(std::string("unknown escape \\") + c);
      }
      v.text.push_back(c);
    }
    return v;
  }

  Value array() {
    Value v;
    v.kind = Value::Kind::Array;
    ++pos_;
    skip_space();
    if (pos_ < s_.size() && s_[pos_] == ']') {
      ++pos_;
      return v;
    }
    while (true) {
      v.items.push_back(value());
      skip_space();
      if (pos_ == s_.size()) fail("unterminated array");
      if (s_[pos_] == ',') {
        ++pos_;
        skip_space();
        if (pos_ < s_.size() && s_[pos_] == ']') {
          ++pos_;
          return v;
        }
        continue;
      }
      if (s_[pos_] == ']') {
        ++pos_;
        return v;
      }
      fail("expected ',' or ']' in array");
    }
  }

  const std::string& s_;
  std::size_t pos_ = 0;
  int line_;
};

// Field context for diagnostics: "[section] key".
struct Field {
  std::string section;
  std::string key;
  int line;

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("[" + section + "] " + key + ": " + what, line);
  }
  [[noreturn]] void expected(const std::string& what, const Value& got) const {
    fail("expected " + what + ", got " + describe(got));
  }
};

bool is_integer_text(const std::string& t) {
  std::size_t i = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
  if (i == t.size()) return false;
  return std::all_of(t.begin() + static_cast<long>(i), t.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
}

bool is_identifier(const std::string& t) {
  if (t.empty() || !(std::isalpha(static_cast<unsigned char>(t[0])) || t[0] == '_')) return false;
  return std::all_of(t.begin(), t.end(), [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

Integer get_integer(const Value& v, const Field& f) {
  if (v.kind != Value::Kind::Atom || !is_integer_text(v.text)) f.expected("an integer", v);
  return Integer(v.text[0] == '+' ? v.text.substr(1) : v.text);
}

long get_long(const Value& v, const Field& f) {
  Integer n = get_integer(v, f);
  if (!n.fits_slong_p()) f.fail("integer " + v.text + " out of range");
  return n.get_si();
}

std::uint64_t get_prime_like(const Value& v, const Field& f) {
  Integer n = get_integer(v, f);
  if (n < 2 || !n.fits_ulong_p()) f.fail("expected an integer >= 2, got " + v.text);
  return n.get_ui();
}

bool get_bool(const Value& v, const Field& f) {
  if (v.kind == Value::Kind::Atom && v.text == "true") return true;
  if (v.kind == Value::Kind::Atom && v.text == "false") return false;
  f.expected("true or false", v);
}

std::string get_identifier(const Value& v, const Field& f) {
  if (v.kind != Value::Kind::Atom || !is_identifier(v.text)) f.expected("a name", v);
  return v.text;
}

std::string get_text(const Value& v, const Field& f) {
  if (v.kind == Value::Kind::Array) f.expected("a string", v);
  return v.text;
}

double get_double(const Value& v, const Field& f) {
  double d = 0;
  const std::string& t = v.text;
  if (v.kind == Value::Kind::Array) f.expected("a number", v);
  auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), d);
  if (ec != std::errc() || ptr != t.data() + t.size()) f.expected("a number", v);
  return d;
}

Cyclotomic get_cyclotomic(const Value& v, const Field& f) {
  if (v.kind == Value::Kind::Array) f.expected("a cyclotomic literal", v);
  try {
    return Cyclotomic::parse(v.text);
  } catch (const ParseError& e) {
    f.fail(e.what());
  } catch (const ValidationError& e) {
    f.fail(e.what());
  }
}

const std::vector<Value>& get_array(const Value& v, const Field& f, std::size_t exact_size = 0) {
  if (v.kind != Value::Kind::Array) f.expected("an array", v);
  if (exact_size != 0 && v.items.size() != exact_size)
    f.fail("expected an array of " + std::to_string(exact_size) + " entries, got " + std::to_string(v.items.size()));
  return v.items;
}

ElementRef get_element(const Value& v, const Field& f) {
  if (v.kind == Value::Kind::String) return v.text;
  if (v.kind == Value::Kind::Atom && is_integer_text(v.text)) {
    long i = get_long(v, f);
    if (i < 0) f.fail("element index must be non-negative");
    return i;
  }
  f.expected("an element index or a quoted cycle", v);
}

ElementList get_element_list(const Value& v, const Field& f) {
  ElementList out;
  for (const auto& item : get_array(v, f)) out.push_back(get_element(item, f));
  return out;
}

template <class T, class F>
std::vector<T> get_list(const Value& v, const Field& f, F&& each) {
  std::vector<T> out;
  for (const auto& item : get_array(v, f)) out.push_back(each(item, f));
  return out;
}

struct Entry {
  std::string key;
  Value value;
  int line;
};

struct Section {
  std::string name;
  int line;
  std::vector<Entry> entries;
};

// Open brackets left at the end of `s`; -1 when a string is left open.
int bracket_balance(const std::string& s) {
  int depth = 0;
  bool in_string = false;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const char c = s[i];
    if (in_string) {
      if (c == '\\') ++i;
      else if (c == '"') in_string = false;
    } else if (c == '"') {
      in_string = true;
    } else if (c == '[') {
      ++depth;
    } else if (c == ']') {
      --depth;
    }
  }
  return in_string ? -1 : depth;
}

std::string strip_comment(const std::string& line) {
  bool in_string = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (in_string) {
      if (c == '\\') ++i;
      else if (c == '"') in_string = false;
    } else if (c == '"') {
      in_string = true;
    } else if (c == '#') {
      return line.substr(0, i);
    }
  }
  return line;
}

std::string trim(const std::string& s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

std::vector<Section> split_sections(const std::string& text) {
  std::vector<Section> sections;
  std::istringstream in(text);
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string line = trim(strip_comment(raw));
    if (line.empty()) continue;
    if (line.front() == '[' && line.find('=') == std::string::npos) {
      if (line.back() != ']') throw ParseError("malformed section header '" + line + "'", line_no);
      std::string name = trim(line.substr(1, line.size() - 2));
      for (const auto& s : sections)
        if (s.name == name) throw ParseError("duplicate section [" + name + "]", line_no);
      sections.push_back({name, line_no, {}});
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw ParseError("expected 'name = value'", line_no);
    if (sections.empty()) throw ParseError("entry outside any section", line_no);
    std::string key = trim(line.substr(0, eq));
    if (!is_identifier(key)) throw ParseError("invalid key '" + key + "'", line_no);
    std::string value = trim(line.substr(eq + 1));
    const int start = line_no;
    const auto unterminated_string = [&] {
      throw ParseError("[" + sections.back().name + "] " + key + ": unterminated string", line_no);
    };
    int balance = bracket_balance(value);
    if (balance < 0) unterminated_string();
    while (balance > 0) {
      if (!std::getline(in, raw)) throw ParseError("[" + sections.back().name + "] " + key + ": unterminated array", start);
      ++line_no;
      value += " " + trim(strip_comment(raw));
      balance = bracket_balance(value);
      if (balance < 0) unterminated_string();
    }
    for (const auto& e : sections.back().entries)
      if (e.key == key) throw ParseError("[" + sections.back().name + "] duplicate key '" + key + "'", start);
    sections.back().entries.push_back({key, ValueParser(value, start).parse(), start});
  }
  return sections;
}

Field field_of(const Section& s, const Entry& e) { return {s.name, e.key, e.line}; }

[[noreturn]] void unknown_key(const Section& s, const Entry& e) {
  throw ParseError("[" + s.name + "] unknown key '" + e.key + "'", e.line);
}

[[noreturn]] void missing(const Section& s, const std::string& key) {
  throw ParseError("[" + s.name + "] missing field '" + key + "'", s.line);
}

GroupSection parse_group(const Section& s) {
  GroupSection g;
  bool has_degree = false;
  for (const auto& e : s.entries) {
    const Field f = field_of(s, e);
    if (e.key == "degree") {
      g.degree = static_cast<int>(get_long(e.value, f));
      if (g.degree < 1) f.fail("degree must be positive");
      has_degree = true;
    } else if (e.key == "generators") {
      g.generators = get_list<std::string>(e.value, f, get_text);
    } else if (e.key == "table") {
      for (const auto& row : get_array(e.value, f)) g.table.push_back(get_list<long>(row, f, get_long));
      if (g.table.empty()) f.fail("empty table");
    } else if (e.key == "labels") {
      g.labels = get_list<std::string>(e.value, f, get_text);
    } else {
      unknown_key(s, e);
    }
  }
  if (g.table.empty() && !has_degree) missing(s, "degree");
  if (!g.table.empty() && (has_degree || !g.generators.empty()))
    throw ParseError("[group] give either a table or degree and generators", s.line);
  return g;
}

CharactersSection parse_characters(const Section& s) {
  CharactersSection c;
  for (const auto& e : s.entries) {
    const Field f = field_of(s, e);
    if (e.key == "compute_table") {
      c.compute_table = get_bool(e.value, f);
    } else if (e.key == "names") {
      c.names = get_list<std::string>(e.value, f, get_identifier);
    } else {
      c.rows.emplace_back(e.key, get_list<Cyclotomic>(e.value, f, get_cyclotomic));
    }
  }
  if (!c.names.empty() && !c.compute_table)
    throw ParseError("[characters] names need compute_table = true", s.line);
  std::set<std::string> seen;
  for (const auto& n : c.names)
    if (!seen.insert(n).second) throw ParseError("[characters] name '" + n + "' used twice", s.line);
  for (const auto& [n, row] : c.rows)
    if (!seen.insert(n).second) throw ParseError("[characters] name '" + n + "' used twice", s.line);
  return c;
}

RamificationSection parse_ramification(const Section& s) {
  RamificationSection r;
  bool has_chain = false, has_frob = false, has_p = false, has_q = false;
  for (const auto& e : s.entries) {
    const Field f = field_of(s, e);
    if (e.key == "chain") {
      for (const auto& item : get_array(e.value, f)) r.chain.push_back(get_element_list(item, f));
      if (r.chain.empty()) f.fail("empty chain");
      has_chain = true;
    } else if (e.key == "frobenius") {
      r.frobenius = get_element(e.value, f);
      has_frob = true;
    } else if (e.key == "p") {
      r.p = get_prime_like(e.value, f);
      has_p = true;
    } else if (e.key == "q") {
      r.q = get_integer(e.value, f);
      if (r.q < 2) f.fail("q must be at least 2");
      has_q = true;
    } else {
      unknown_key(s, e);
    }
  }
  if (!has_chain) missing(s, "chain");
  if (!has_frob) missing(s, "frobenius");
  if (!has_p) missing(s, "p");
  if (!has_q) r.q = Integer(static_cast<unsigned long>(r.p));
  return r;
}

WDComponentSpec parse_component(const Value& v, const Field& f) {
  const auto& items = get_array(v, f, 4);
  WDComponentSpec c;
  const Value& head = items[0];
  if (head.kind == Value::Kind::Atom && head.text.starts_with("quadratic(") && head.text.back() == ')') {
    Value inner{Value::Kind::Atom, head.text.substr(10, head.text.size() - 11), {}};
    c.quadratic_a = get_integer(inner, f);
  } else {
    c.character = get_identifier(head, f);
  }
  c.unit = get_cyclotomic(items[1], f);
  c.weight = static_cast<int>(get_long(items[2], f));
  c.sp = static_cast<int>(get_long(items[3], f));
  return c;
}

WDSection parse_wd(const Section& s) {
  WDSection w;
  for (const auto& e : s.entries) {
    const Field f = field_of(s, e);
    if (e.key == "q") {
      w.q = get_integer(e.value, f);
      if (*w.q < 2) f.fail("q must be at least 2");
    } else {
      w.reps.emplace_back(e.key, get_list<WDComponentSpec>(e.value, f, parse_component));
      if (w.reps.back().second.empty()) f.fail("a WD representation needs at least one component");
    }
  }
  return w;
}

EllipticSection parse_elliptic(const Section& s) {
  EllipticSection el;
  bool has_q = false;
  for (const auto& e : s.entries) {
    const Field f = field_of(s, e);
    if (e.key == "kind") {
      el.kind = get_identifier(e.value, f);
      if (el.kind != "good" && el.kind != "split" && el.kind != "nonsplit" && el.kind != "additive")
        f.fail("kind must be good, split, nonsplit or additive");
    } else if (e.key == "coefficients") {
      get_array(e.value, f, 5);
      el.coefficients = get_list<Integer>(e.value, f, get_integer);
    } else if (e.key == "q") {
      el.q = get_integer(e.value, f);
      if (el.q < 2) f.fail("q must be at least 2");
      has_q = true;
    } else if (e.key == "a") {
      el.a = get_integer(e.value, f);
    } else if (e.key == "wd") {
      el.wd = get_identifier(e.value, f);
    } else {
      unknown_key(s, e);
    }
  }
  if (el.kind.empty()) missing(s, "kind");
  if (!has_q) missing(s, "q");
  if (el.kind == "additive" && !el.wd) missing(s, "wd");
  if (el.kind == "good" && !el.a && !el.coefficients) missing(s, "coefficients");
  return el;
}

GlobalSection parse_global(const Section& s) {
  GlobalSection g;
  bool has_kind = false;
  for (const auto& e : s.entries) {
    const Field f = field_of(s, e);
    if (e.key == "kind") {
      g.kind = get_identifier(e.value, f);
      if (g.kind != "artin" && g.kind != "elliptic") f.fail("kind must be artin or elliptic");
      has_kind = true;
    } else if (e.key == "character") {
      g.character = get_identifier(e.value, f);
    } else if (e.key == "subgroup") {
      g.subgroup = get_identifier(e.value, f);
    } else if (e.key == "subgroup_character") {
      g.subgroup_character = get_long(e.value, f);
      if (*g.subgroup_character < 0) f.fail("row index must be non-negative");
    } else if (e.key == "ramified") {
      for (const auto& item : get_array(e.value, f)) {
        const auto& parts = get_array(item, f, 3);
        g.ramified.push_back({get_prime_like(parts[0], f), get_list<Cyclotomic>(parts[1], f, get_cyclotomic),
                              get_integer(parts[2], f)});
      }
    } else if (e.key == "rule") {
      g.rule = get_identifier(e.value, f);
      if (g.rule != "splitting" && g.rule != "explicit" && g.rule != "elliptic")
        f.fail("rule must be splitting, explicit or elliptic");
    } else if (e.key == "polynomial") {
      g.polynomial = get_list<Integer>(e.value, f, get_integer);
    } else if (e.key == "root_hints") {
      for (const auto& item : get_array(e.value, f)) {
        const auto& parts = get_array(item, f, 2);
        g.root_hints.emplace_back(get_double(parts[0], f), get_double(parts[1], f));
      }
    } else if (e.key == "frobenius") {
      for (const auto& item : get_array(e.value, f)) {
        const auto& parts = get_array(item, f, 2);
        g.frobenius.emplace_back(get_prime_like(parts[0], f), get_element(parts[1], f));
      }
    } else if (e.key == "conjugation") {
      g.conjugation = get_element(e.value, f);
    } else {
      unknown_key(s, e);
    }
  }
  if (!has_kind) missing(s, "kind");
  if (g.rule.empty()) missing(s, "rule");
  if (g.rule == "splitting" && g.polynomial.empty()) missing(s, "polynomial");
  if (g.rule == "explicit" && g.frobenius.empty()) missing(s, "frobenius");
  if (g.kind == "artin" && !g.character && !g.subgroup) missing(s, "character");
  if (g.subgroup_character && !g.subgroup) missing(s, "subgroup");
  if (g.character && g.subgroup)
    throw ParseError("[global] give either character, or subgroup with subgroup_character", s.line);
  return g;
}

TowerSection parse_tower(const Section& s) {
  TowerSection t;
  auto side = [](const Value& v, const Field& f) {
    std::vector<std::pair<std::string, long>> out;
    for (const auto& item : get_array(v, f)) {
      const auto& parts = get_array(item, f, 2);
      out.emplace_back(get_identifier(parts[0], f), get_long(parts[1], f));
    }
    return out;
  };
  for (const auto& e : s.entries) {
    const Field f = field_of(s, e);
    if (e.key == "left") t.left = side(e.value, f);
    else if (e.key == "right") t.right = side(e.value, f);
    else unknown_key(s, e);
  }
  if (t.left.empty()) missing(s, "left");
  if (t.right.empty()) missing(s, "right");
  return t;
}

void check_references(const Fixture& fx) {
  std::set<std::string> characters{"trivial"};
  if (fx.characters) {
    characters.insert(fx.characters->names.begin(), fx.characters->names.end());
    for (const auto& [n, row] : fx.characters->rows) characters.insert(n);
  }
  std::set<std::string> subgroups;
  for (const auto& [n, gens] : fx.subgroups) subgroups.insert(n);
  std::set<std::string> reps;
  if (fx.wd)
    for (const auto& [n, comps] : fx.wd->reps) reps.insert(n);

  auto dangling = [&](const std::string& where, const std::string& kind, const std::string& name) {
    throw ParseError("[" + where.substr(0, where.find('.')) + "] " + where.substr(where.find('.') + 1) + ": unknown " +
                         kind + " '" + name + "'",
                     fx.line_of(where));
  };
  const bool needs_group = fx.characters || !fx.subgroups.empty() || fx.ramification ||
                           (fx.global && fx.global->kind == "artin") || fx.tower;
  if (needs_group && !fx.group) throw ParseError("missing section [group]", 1);
  if (fx.wd) {
    if (!fx.ramification && !fx.wd->q) throw ParseError("[wd] missing field 'q' (no [ramification] section)", fx.line_of("wd"));
    for (const auto& [n, comps] : fx.wd->reps)
      for (const auto& c : comps)
        if (!c.quadratic_a && !characters.count(c.character)) dangling("wd." + n, "character", c.character);
  }
  if (fx.elliptic && fx.elliptic->wd && !reps.count(*fx.elliptic->wd))
    dangling("elliptic.wd", "WD representation", *fx.elliptic->wd);
  if (fx.global) {
    const auto& g = *fx.global;
    if (g.character && !characters.count(*g.character)) dangling("global.character", "character", *g.character);
    if (g.subgroup && !subgroups.count(*g.subgroup)) dangling("global.subgroup", "subgroup", *g.subgroup);
    if ((g.rule == "elliptic" || g.kind == "elliptic") && !(fx.elliptic && fx.elliptic->coefficients))
      throw ParseError("[global] elliptic L-series need [elliptic] coefficients", fx.line_of("global"));
  }
  if (fx.tower) {
    for (const auto* side : {&fx.tower->left, &fx.tower->right})
      for (const auto& [n, m] : *side)
        if (!subgroups.count(n)) dangling(side == &fx.tower->left ? "tower.left" : "tower.right", "subgroup", n);
    if (!fx.global) throw ParseError("[tower] needs a [global] section for the Frobenius rule", fx.line_of("tower"));
  }
}

// Serialization.

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  return out + "\"";
}

std::string literal(const Cyclotomic& c) {
  std::string s = c.str();
  return s.find(' ') == std::string::npos ? s : quote(s);
}

std::string element(const ElementRef& e) {
  if (const long* i = std::get_if<long>(&e)) return std::to_string(*i);
  return quote(std::get<std::string>(e));
}

std::string number(double d) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, d);
  return std::string(buf, ptr);
}

template <class T, class F>
std::string list(const std::vector<T>& v, F&& each) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + each(v[i]);
  return out + "]";
}

std::string integer(const Integer& n) { return n.get_str(); }

}  // namespace

int Fixture::line_of(const std::string& where) const {
  if (auto it = lines.find(where); it != lines.end()) return it->second;
  if (auto it = lines.find(where.substr(0, where.find('.'))); it != lines.end()) return it->second;
  return 0;
}

bool operator==(const Fixture& a, const Fixture& b) {
  return a.group == b.group && a.characters == b.characters && a.subgroups == b.subgroups &&
         a.ramification == b.ramification && a.wd == b.wd && a.elliptic == b.elliptic && a.global == b.global &&
         a.tower == b.tower;
}

Fixture parse_fixture_text(const std::string& text) {
  Fixture fx;
  for (const auto& s : split_sections(text)) {
    fx.lines[s.name] = s.line;
    for (const auto& e : s.entries) fx.lines[s.name + "." + e.key] = e.line;
    if (s.name == "group") {
      fx.group = parse_group(s);
    } else if (s.name == "characters") {
      fx.characters = parse_characters(s);
    } else if (s.name == "subgroups") {
      for (const auto& e : s.entries) fx.subgroups.emplace_back(e.key, get_element_list(e.value, field_of(s, e)));
    } else if (s.name == "ramification") {
      fx.ramification = parse_ramification(s);
    } else if (s.name == "wd") {
      fx.wd = parse_wd(s);
    } else if (s.name == "elliptic") {
      fx.elliptic = parse_elliptic(s);
    } else if (s.name == "global") {
      fx.global = parse_global(s);
    } else if (s.name == "tower") {
      fx.tower = parse_tower(s);
    } else {
      throw ParseError("unknown section [" + s.name + "]", s.line);
    }
  }
  check_references(fx);
  return fx;
}

Fixture parse_fixture_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw IoError("error reading " + path);
  try {
    return parse_fixture_text(buf.str());
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

std::string serialize_fixture(const Fixture& f) {
  std::ostringstream out;
  bool first = true;
  auto section = [&](const char* name) {
    out << (first ? "" : "\n") << "[" << name << "]\n";
    first = false;
  };
  if (f.group) {
    section("group");
    const auto& g = *f.group;
    if (g.table.empty()) {
      out << "degree = " << g.degree << "\n";
      out << "generators = " << list(g.generators, quote) << "\n";
    } else {
      out << "table = [\n";
      for (const auto& row : g.table) out << "  " << list(row, [](long x) { return std::to_string(x); }) << ",\n";
      out << "]\n";
    }
    if (!g.labels.empty()) out << "labels = " << list(g.labels, quote) << "\n";
  }
  if (f.characters) {
    section("characters");
    const auto& c = *f.characters;
    if (c.compute_table) out << "compute_table = true\n";
    if (!c.names.empty()) out << "names = " << list(c.names, [](const std::string& s) { return s; }) << "\n";
    for (const auto& [name, row] : c.rows) out << name << " = " << list(row, literal) << "\n";
  }
  if (!f.subgroups.empty()) {
    section("subgroups");
    for (const auto& [name, gens] : f.subgroups) out << name << " = " << list(gens, element) << "\n";
  }
  if (f.ramification) {
    section("ramification");
    const auto& r = *f.ramification;
    out << "chain = " << list(r.chain, [](const ElementList& l) { return list(l, element); }) << "\n";
    out << "frobenius = " << element(r.frobenius) << "\n";
    out << "p = " << r.p << "\n";
    out << "q = " << r.q.get_str() << "\n";
  }
  if (f.wd) {
    section("wd");
    if (f.wd->q) out << "q = " << f.wd->q->get_str() << "\n";
    for (const auto& [name, comps] : f.wd->reps) {
      out << name << " = " << list(comps, [](const WDComponentSpec& c) {
        std::string head = c.quadratic_a ? "quadratic(" + c.quadratic_a->get_str() + ")" : c.character;
        return "[" + head + ", " + literal(c.unit) + ", " + std::to_string(c.weight) + ", " + std::to_string(c.sp) + "]";
      }) << "\n";
    }
  }
  if (f.elliptic) {
    section("elliptic");
    const auto& e = *f.elliptic;
    out << "kind = " << e.kind << "\n";
    if (e.coefficients) out << "coefficients = " << list(*e.coefficients, integer) << "\n";
    out << "q = " << e.q.get_str() << "\n";
    if (e.a) out << "a = " << e.a->get_str() << "\n";
    if (e.wd) out << "wd = " << *e.wd << "\n";
  }
  if (f.global) {
    section("global");
    const auto& g = *f.global;
    out << "kind = " << g.kind << "\n";
    if (g.character) out << "character = " << *g.character << "\n";
    if (g.subgroup) out << "subgroup = " << *g.subgroup << "\n";
    if (g.subgroup_character) out << "subgroup_character = " << *g.subgroup_character << "\n";
    if (!g.ramified.empty()) {
      out << "ramified = " << list(g.ramified, [](const RamifiedSpec& r) {
        return "[" + std::to_string(r.p) + ", " + list(r.polynomial, literal) + ", " + r.exponent.get_str() + "]";
      }) << "\n";
    }
    out << "rule = " << g.rule << "\n";
    if (!g.polynomial.empty()) out << "polynomial = " << list(g.polynomial, integer) << "\n";
    if (!g.root_hints.empty()) {
      out << "root_hints = " << list(g.root_hints, [](const std::pair<double, double>& h) {
        return "[" + number(h.first) + ", " + number(h.second) + "]";
      }) << "\n";
    }
    if (!g.frobenius.empty()) {
      out << "frobenius = " << list(g.frobenius, [](const std::pair<std::uint64_t, ElementRef>& e) {
        return "[" + std::to_string(e.first) + ", " + element(e.second) + "]";
      }) << "\n";
    }
    if (g.conjugation) out << "conjugation = " << element(*g.conjugation) << "\n";
  }
  if (f.tower) {
    section("tower");
    auto side = [](const std::vector<std::pair<std::string, long>>& s) {
      return list(s, [](const std::pair<std::string, long>& e) { return "[" + e.first + ", " + std::to_string(e.second) + "]"; });
    };
    out << "left = " << side(f.tower->left) << "\n";
    out << "right = " << side(f.tower->right) << "\n";
  }
  return out.str();
}

}  // namespace galrep
