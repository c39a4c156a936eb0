#include "rlcm/config.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace rlcm {

namespace {

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  out.push_back(cur);
  return out;
}

bool parse_int_token(const std::string& s, Int& out) {
  std::string t = trim(s);
  if (t.empty()) return false;
  size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
  if (i == t.size()) return false;
  for (; i < t.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
  out = Int(trim(s));
  return true;
}

bool parse_long_token(const std::string& s, long& out) {
  Int v;
  if (!parse_int_token(s, v)) return false;
  if (!v.fits_slong_p()) return false;
  out = v.get_si();
  return true;
}

// "[[a,b],[c,d]]" -> matrix rows
std::optional<IntMatrix> parse_matrix(const std::string& text) {
  std::string t = trim(text);
  if (t.size() < 2 || t.front() != '[' || t.back() != ']') return std::nullopt;
  std::string inner = t.substr(1, t.size() - 2);
  std::vector<std::vector<Int>> rows;
  size_t i = 0;
  while (i < inner.size()) {
    while (i < inner.size() && (inner[i] == ',' || std::isspace(static_cast<unsigned char>(inner[i])))) ++i;
    if (i >= inner.size()) break;
    if (inner[i] != '[') return std::nullopt;
    size_t close = inner.find(']', i);
    if (close == std::string::npos) return std::nullopt;
    std::vector<Int> row;
    for (const auto& tok : split(inner.substr(i + 1, close - i - 1), ',')) {
      Int v;
      if (!parse_int_token(tok, v)) return std::nullopt;
      row.push_back(v);
    }
    rows.push_back(std::move(row));
    i = close + 1;
  }
  if (rows.empty()) return std::nullopt;
  size_t cols = rows[0].size();
  for (const auto& r : rows)
    if (r.size() != cols) return std::nullopt;
  IntMatrix m(static_cast<int>(rows.size()), static_cast<int>(cols));
  for (size_t r = 0; r < rows.size(); ++r)
    for (size_t c = 0; c < cols; ++c) m.at(static_cast<int>(r), static_cast<int>(c)) = rows[r][c];
  return m;
}

}  // namespace

ParseResult parse_config(const std::string& text) {
  ParseResult result;
  auto& diags = result.diagnostics;

  std::optional<int> rank;
  std::optional<MonoidKind> kind;
  std::optional<int> generators;
  std::vector<std::string> names;
  std::vector<std::pair<std::string, IntMatrix>> matrices;
  SystemConfig cfg;

  std::istringstream in(text);
  std::string line;
  std::string section;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string stripped = line;
    size_t hash = stripped.find('#');
    if (hash != std::string::npos) stripped = stripped.substr(0, hash);
    std::string t = trim(stripped);
    if (t.empty()) continue;
    if (t.front() == '[') {
      if (t.back() != ']') {
        diags.push_back({lineno, 1, "unterminated section header"});
        continue;
      }
      section = t.substr(1, t.size() - 2);
      if (section != "group" && section != "monoid" && section != "action" && section != "flags") {
        diags.push_back({lineno, 1, "unknown section [" + section + "]"});
        section.clear();
      }
      continue;
    }
    size_t eq = stripped.find('=');
    if (eq == std::string::npos) {
      diags.push_back({lineno, 1, "expected key = value"});
      continue;
    }
    std::string key = trim(stripped.substr(0, eq));
    std::string value = trim(stripped.substr(eq + 1));
    int col = static_cast<int>(eq) + 2;
    if (section == "group") {
      if (key == "rank") {
        long v;
        if (!parse_long_token(value, v) || v < 1) diags.push_back({lineno, col, "rank must be a positive integer"});
        else rank = static_cast<int>(v);
      } else {
        diags.push_back({lineno, 1, "unknown key '" + key + "' in [group]"});
      }
    } else if (section == "monoid") {
      if (key == "kind") {
        if (value == "free-abelian") kind = MonoidKind::FreeAbelian;
        else if (value == "free") kind = MonoidKind::Free;
        else diags.push_back({lineno, col, "kind must be free-abelian or free"});
      } else if (key == "generators") {
        long v;
        if (!parse_long_token(value, v) || v < 1)
          diags.push_back({lineno, col, "generators must be a positive integer"});
        else generators = static_cast<int>(v);
      } else if (key == "names") {
        names.clear();
        for (const auto& n : split(value, ',')) {
          std::string nn = trim(n);
          if (nn.empty()) diags.push_back({lineno, col, "empty generator name"});
          else names.push_back(nn);
        }
      } else {
        diags.push_back({lineno, 1, "unknown key '" + key + "' in [monoid]"});
      }
    } else if (section == "action") {
      if (key.rfind("theta.", 0) == 0) {
        auto m = parse_matrix(value);
        if (!m) diags.push_back({lineno, col, "expected an integer matrix like [[2,0],[0,3]]"});
        else matrices.emplace_back(key.substr(6), *m);
      } else {
        diags.push_back({lineno, 1, "unknown key '" + key + "' in [action]"});
      }
    } else if (section == "flags") {
      if (key == "amenable") {
        if (value == "assumed") cfg.amenability = Amenability::Assumed;
        else if (value == "asserted") cfg.amenability = Amenability::AssertedByUser;
        else if (value == "unknown") cfg.amenability = Amenability::Unknown;
        else diags.push_back({lineno, col, "amenable must be assumed, asserted or unknown"});
      } else if (key == "depth") {
        long v;
        if (!parse_long_token(value, v) || v < 0) diags.push_back({lineno, col, "depth must be non-negative"});
        else cfg.depth = static_cast<int>(v);
      } else if (key == "window") {
        long v;
        if (!parse_long_token(value, v) || v < 0) diags.push_back({lineno, col, "window must be non-negative"});
        else cfg.window = v;
      } else if (key == "ball_cap") {
        long v;
        if (!parse_long_token(value, v) || v < 1) diags.push_back({lineno, col, "ball_cap must be positive"});
        else cfg.ball_cap = static_cast<size_t>(v);
      } else {
        diags.push_back({lineno, 1, "unknown key '" + key + "' in [flags]"});
      }
    } else {
      diags.push_back({lineno, 1, "key outside of any section"});
    }
  }

  if (!rank) diags.push_back({0, 0, "[group] rank is required"});
  if (!kind) diags.push_back({0, 0, "[monoid] kind is required"});
  if (!generators) diags.push_back({0, 0, "[monoid] generators is required"});
  if (!diags.empty() && !(rank && kind && generators)) return result;

  if (names.empty()) {
    diags.push_back({0, 0, "[monoid] names is required"});
    return result;
  }
  if (static_cast<int>(names.size()) != *generators) {
    diags.push_back({0, 0, "names count does not match generators"});
    return result;
  }

  cfg.spec.group_rank = *rank;
  cfg.spec.monoid = MonoidSpec{*kind, *generators, names};
  cfg.spec.theta.resize(*generators, IntMatrix(*rank, *rank));
  std::vector<bool> seen(*generators, false);
  for (const auto& [name, m] : matrices) {
    int idx = cfg.spec.monoid.name_index(name);
    if (idx < 0) {
      diags.push_back({0, 0, "theta." + name + " does not match any generator"});
      continue;
    }
    if (seen[idx]) diags.push_back({0, 0, "duplicate matrix for theta." + name});
    seen[idx] = true;
    cfg.spec.theta[idx] = m;
  }
  for (int i = 0; i < *generators; ++i) {
    if (!seen[i]) diags.push_back({0, 0, "missing matrix theta." + names[i]});
  }
  if (!diags.empty()) return result;

  ValidationReport vr = validate_ads(cfg.spec);
  if (!vr.valid) {
    for (const auto& issue : vr.issues) diags.push_back({0, 0, issue.check + ": " + issue.detail});
    return result;
  }
  result.config = std::move(cfg);
  return result;
}

namespace {

std::optional<MonoidElement> parse_monoid_part(const MonoidSpec& monoid, const std::string& raw) {
  std::string t = trim(raw);
  if (t.empty() || t == "e") return MonoidElement::identity(monoid);

  int direct = monoid.name_index(t);
  if (direct >= 0) return MonoidElement::generator(monoid, direct);

  if (monoid.kind == MonoidKind::FreeAbelian) {
    if (t.find(',') != std::string::npos) {
      std::vector<long> exps;
      for (const auto& tok : split(t, ',')) {
        long v;
        if (!parse_long_token(tok, v) || v < 0) return std::nullopt;
        exps.push_back(v);
      }
      if (static_cast<int>(exps.size()) != monoid.generator_count) return std::nullopt;
      return MonoidElement::from_exponents(std::move(exps));
    }
    // numeric value over integer generator names, e.g. "4" for the square of
    // the generator named "2"
    Int value;
    if (parse_int_token(t, value) && value >= 1) {
      std::vector<Int> gen_values;
      for (const auto& n : monoid.names) {
        Int v;
        if (!parse_int_token(n, v) || v < 2) return std::nullopt;
        gen_values.push_back(v);
      }
      std::vector<std::vector<long>> hits;
      std::vector<long> exps(monoid.generator_count, 0);
      std::function<void(int, Int)> search = [&](int i, Int rest) {
        if (static_cast<int>(hits.size()) > 1) return;
        if (i == monoid.generator_count) {
          if (rest == 1) hits.push_back(exps);
          return;
        }
        Int pow(1);
        for (long e = 0;; ++e) {
          if (rest % pow == 0) {
            exps[i] = e;
            search(i + 1, rest / pow);
          } else {
            break;
          }
          pow *= gen_values[i];
          if (pow > rest) break;
        }
        exps[i] = 0;
      };
      search(0, value);
      if (hits.size() == 1) return MonoidElement::from_exponents(hits[0]);
      return std::nullopt;
    }
    return std::nullopt;
  }

  // free monoid word: dot-separated names, or letter concatenation when all
  // names are single characters
  if (t == "1" && monoid.name_index("1") < 0) return MonoidElement::identity(monoid);
  std::vector<int> word;
  if (t.find('.') != std::string::npos) {
    for (const auto& tok : split(t, '.')) {
      int idx = monoid.name_index(trim(tok));
      if (idx < 0) return std::nullopt;
      word.push_back(idx);
    }
    return MonoidElement::from_word(std::move(word));
  }
  for (const auto& n : monoid.names)
    if (n.size() != 1) return std::nullopt;
  for (char c : t) {
    int idx = monoid.name_index(std::string(1, c));
    if (idx < 0) return std::nullopt;
    word.push_back(idx);
  }
  return MonoidElement::from_word(std::move(word));
}

}  // namespace

SemidirectElement parse_element(const AdsSpec& spec, const std::string& text) {
  std::string t = trim(text);
  if (t.size() < 2 || t.front() != '(' || t.back() != ')') {
    throw std::invalid_argument("element must look like (g1,...,gd;p): " + text);
  }
  std::string inner = t.substr(1, t.size() - 2);
  size_t semi = inner.find(';');
  if (semi == std::string::npos) {
    throw std::invalid_argument("element needs a ';' separating group and monoid parts: " + text);
  }
  std::string gpart = inner.substr(0, semi);
  std::string ppart = inner.substr(semi + 1);
  Vec g;
  for (const auto& tok : split(gpart, ',')) {
    Int v;
    if (!parse_int_token(tok, v)) throw std::invalid_argument("bad group coordinate in " + text);
    g.push_back(v);
  }
  if (static_cast<int>(g.size()) != spec.group_rank) {
    throw std::invalid_argument("expected " + std::to_string(spec.group_rank) + " group coordinates in " + text);
  }
  auto p = parse_monoid_part(spec.monoid, ppart);
  if (!p) throw std::invalid_argument("cannot read monoid part '" + trim(ppart) + "' in " + text);
  return SemidirectElement{std::move(g), *p};
}

MonoidElement parse_monoid_element(const AdsSpec& spec, const std::string& text) {
  auto p = parse_monoid_part(spec.monoid, text);
  if (!p) throw std::invalid_argument("cannot read monoid element '" + text + "'");
  return *p;
}

long default_window(const AdsSpec& spec) {
  Int maxdet(1);
  for (const auto& m : spec.theta) {
    Int d = abs(m.det());
    if (d > maxdet) maxdet = d;
  }
  Int w = 2 * maxdet * maxdet;
  if (!w.fits_slong_p()) return 64;
  return w.get_si();
}

}  // namespace rlcm
