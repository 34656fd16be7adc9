#include "forge/report.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "forge/error.hpp"
#include "forge/groebner.hpp"
#include "forge/parser.hpp"

namespace forge {

namespace {

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

// Splits on `sep` outside parentheses and brackets.
std::vector<std::string> split_top(const std::string& s, char sep) {
  std::vector<std::string> out;
  int depth = 0;
  std::string cur;
  for (char c : s) {
    if (c == '(' || c == '[') ++depth;
    if (c == ')' || c == ']') --depth;
    if (c == sep && depth == 0) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

std::string strip_parens(const std::string& s, const std::string& what) {
  std::string t = trim(s);
  if (t.size() < 2 || t.front() != '(' || t.back() != ')') throw ParseError("expected parenthesized " + what, 1, 1);
  return t.substr(1, t.size() - 2);
}

Ideal parse_ideal_list(const std::string& body, const RingPtr& ring) {
  std::vector<Polynomial> gens;
  if (trim(body).empty()) return Ideal(ring);
  for (const auto& g : split_top(body, ',')) gens.push_back(parse_polynomial(trim(g), ring));
  return Ideal(ring, std::move(gens));
}

Point parse_point(const std::string& body) {
  static const RingPtr q = PolynomialRing::make(CoefficientRing::rationals(), {});
  Point pt;
  if (trim(body).empty()) return pt;
  for (const auto& c : split_top(body, ',')) {
    Polynomial v = parse_polynomial(trim(c), q);
    pt.push_back(v.constant_value());
  }
  return pt;
}

struct Sections {
  RingPtr ring;
  std::optional<Ideal> ideal;
  std::optional<Point> point;
  std::optional<Ideal> removed;
};

Sections parse_sections(const std::string& text) {
  Sections s;
  for (const auto& raw : split_top(text, ';')) {
    std::string part = trim(raw);
    if (part.empty()) continue;
    auto sp = part.find_first_of(" (");
    std::string key = part.substr(0, sp);
    std::string rest = sp == std::string::npos ? "" : part.substr(sp);
    if (key == "ring") {
      s.ring = parse_ring(trim(rest));
    } else if (!s.ring) {
      throw ParseError("presentation must start with a ring", 1, 1);
    } else if (key == "ideal") {
      s.ideal = parse_ideal_list(strip_parens(rest, "ideal"), s.ring);
    } else if (key == "point") {
      s.point = parse_point(strip_parens(rest, "point"));
    } else if (key == "removed") {
      s.removed = parse_ideal_list(strip_parens(rest, "removed ideal"), s.ring);
    } else {
      throw ParseError("unknown presentation section '" + key + "'", 1, 1);
    }
  }
  if (!s.ring || !s.ideal) throw ParseError("presentation needs a ring and an ideal", 1, 1);
  return s;
}

AffinePresentation make_affine(const Sections& s) {
  if (s.point) return AffinePresentation(*s.ideal, *s.point);
  return AffinePresentation(*s.ideal);
}

Json generators_json(const Ideal& ideal) {
  Json arr = Json::array();
  for (const auto& g : ideal.generators()) arr.push_back(g.to_string());
  return arr;
}


void render(std::ostringstream& out, const Json& value, const std::string& indent);

std::string scalar_text(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "none";
  return v.dump();
}

bool is_flat(const Json& v) {
  if (!v.is_array()) return !v.is_object();
  return std::all_of(v.begin(), v.end(), [](const Json& e) { return !e.is_array() && !e.is_object(); });
}

void render_entry(std::ostringstream& out, const std::string& key, const Json& v, const std::string& indent) {
  if (v.is_array() && is_flat(v)) {
    out << indent << key << ":";
    if (v.empty()) out << " none";
    for (std::size_t i = 0; i < v.size(); ++i) out << (i ? ", " : " ") << scalar_text(v[i]);
    out << "\n";
  } else if (is_flat(v)) {
    out << indent << key << ": " << scalar_text(v) << "\n";
  } else {
    out << indent << key << ":\n";
    render(out, v, indent + "  ");
  }
}

void render(std::ostringstream& out, const Json& value, const std::string& indent) {
  if (value.is_object()) {
    for (auto it = value.begin(); it != value.end(); ++it) render_entry(out, it.key(), it.value(), indent);
  } else if (value.is_array()) {
    for (const auto& e : value) {
      if (e.is_object()) {
        out << indent << "-\n";
        render(out, e, indent + "  ");
      } else if (e.is_array()) {
        out << indent << "-\n";
        render(out, e, indent + "  ");
      } else {
        out << indent << "- " << scalar_text(e) << "\n";
      }
    }
  } else {
    out << indent << scalar_text(value) << "\n";
  }
}

}  // namespace

Format parse_format(const std::string& name) {
  if (name == "text") return Format::Text;
  if (name == "json") return Format::Json;
  throw DomainError("unknown format '" + name + "' (expected text or json)");
}

RingPtr parse_ring(const std::string& text, MonomialOrder order) {
  std::string t = trim(text);
  auto open = t.find('[');
  if (open == std::string::npos || t.back() != ']') throw ParseError("expected a ring like Z[x,y], got '" + t + "'", 1, 1);
  CoefficientRing k = parse_coefficient_ring(trim(t.substr(0, open)));
  std::vector<std::string> vars;
  std::string body = t.substr(open + 1, t.size() - open - 2);
  if (!trim(body).empty())
    for (const auto& v : split_top(body, ',')) vars.push_back(trim(v));
  try {
    return PolynomialRing::make(k, std::move(vars), order);
  } catch (const DomainError& e) {
    throw ParseError(e.what(), 1, open + 2);
  }
}

Json to_json(const AffinePresentation& x) {
  Json j;
  j["ring"] = x.ring()->to_string();
  j["generators"] = generators_json(x.ideal());
  if (x.basepoint()) {
    Json pt = Json::array();
    for (const auto& c : *x.basepoint()) pt.push_back(CoefficientRing::format(c));
    j["basepoint"] = pt;
  } else {
    j["basepoint"] = nullptr;
  }
  j["text"] = to_text(x);
  return j;
}

Json to_json(const QuasiAffinePresentation& x) {
  Json j;
  j["ambient"] = to_json(x.ambient());
  j["removed"] = generators_json(x.removed());
  j["text"] = to_text(x);
  return j;
}

Json to_json(const CheckResult& c) {
  Json j;
  j["name"] = c.name;
  j["status"] = to_string(c.status);
  j["detail"] = c.detail;
  return j;
}

Json to_json(const VerificationReport& r) {
  Json j;
  j["subject"] = r.subject;
  j["status"] = r.passed() ? "pass" : "fail";
  Json checks = Json::array();
  for (const auto& c : r.checks) checks.push_back(to_json(c));
  j["checks"] = checks;
  Json counts = Json::array();
  for (const auto& c : r.counts) {
    Json e;
    e["label"] = c.label;
    e["prime"] = c.prime;
    e["brute_force"] = c.brute_force;
    e["predicted"] = c.predicted;
    counts.push_back(e);
  }
  j["counts"] = counts;
  j["budget_exceeded"] = r.budget_exceeded;
  return j;
}

std::string print_presentation(const AffinePresentation& x, Format format) {
  if (format == Format::Text) return to_text(x);
  return to_json(x).dump(2);
}

std::string print_presentation(const QuasiAffinePresentation& x, Format format) {
  if (format == Format::Text) return to_text(x);
  return to_json(x).dump(2);
}

AffinePresentation parse_presentation(const std::string& text) {
  auto s = parse_sections(text);
  if (s.removed) throw ParseError("quasi-affine text given where an affine presentation was expected", 1, 1);
  return make_affine(s);
}

QuasiAffinePresentation parse_quasi_affine(const std::string& text) {
  auto s = parse_sections(text);
  if (!s.removed) throw ParseError("missing removed section", 1, 1);
  return QuasiAffinePresentation(make_affine(s), *s.removed);
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::EqualAsStrings:
      return "equal-as-strings";
    case Verdict::EqualAsIdeals:
      return "equal-as-ideals";
    case Verdict::Different:
      return "different";
  }
  return "different";
}

Comparison diff_presentations(const AffinePresentation& a, const AffinePresentation& b,
                              const std::optional<Renaming>& renaming) {
  if (!(a.ring()->coefficients() == b.ring()->coefficients()))
    throw DomainError("cannot compare presentations over " + a.ring()->coefficients().name() + " and " +
                      b.ring()->coefficients().name());
  Renaming map;
  if (renaming) map = *renaming;
  // check the induced map on names is a bijection onto B's variables
  std::set<std::string> image;
  for (const auto& v : a.ring()->variables()) {
    auto it = map.find(v);
    const std::string& target = it == map.end() ? v : it->second.name;
    if (!b.ring()->index_of(target)) throw DomainError("variable " + v + " maps to " + target + ", not a variable of B");
    if (!image.insert(target).second) throw DomainError("renaming is not injective at " + target);
  }
  for (const auto& [from, _] : map)
    if (!a.ring()->index_of(from)) throw DomainError("renaming mentions unknown variable " + from);
  if (image.size() != b.ring()->arity()) throw DomainError("renaming does not reach every variable of B");

  Ideal ra = rename(a.ideal(), map, b.ring());
  const auto& ga = ra.generators();
  const auto& gb = b.ideal().generators();
  if (ga.size() == gb.size() && std::equal(ga.begin(), ga.end(), gb.begin(),
                                           [](const Polynomial& x, const Polynomial& y) { return x == y; }))
    return {Verdict::EqualAsStrings, ""};
  if (ideals_equal(ra, b.ideal())) return {Verdict::EqualAsIdeals, ""};
  for (const auto& g : ga)
    if (!ideal_membership(g, b.ideal())) return {Verdict::Different, "A generator " + g.to_string() + " is not in B"};
  for (const auto& g : gb)
    if (!ideal_membership(g, ra)) return {Verdict::Different, "B generator " + g.to_string() + " is not in A"};
  return {Verdict::Different, "ideals differ"};
}

std::string json_to_text(const Json& value) {
  std::ostringstream out;
  render(out, value, "");
  return out.str();
}

}  // namespace forge
