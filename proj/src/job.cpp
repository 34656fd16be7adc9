#include "forge/job.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "forge/error.hpp"
#include "forge/groebner.hpp"
#include "forge/parser.hpp"

namespace forge {

namespace {

const std::vector<std::uint64_t> kDefaultPrimes{2, 3, 5};

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

struct Token {
  std::string text;
  std::size_t column;  // 1-based
};

// Whitespace-separated tokens, keeping parenthesized groups together.
std::vector<Token> tokenize(const std::string& line, std::size_t from) {
  std::vector<Token> out;
  std::size_t i = from;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    if (i >= line.size()) break;
    std::size_t start = i;
    int depth = 0;
    while (i < line.size() && (depth > 0 || (line[i] != ' ' && line[i] != '\t'))) {
      if (line[i] == '(') ++depth;
      if (line[i] == ')') --depth;
      ++i;
    }
    if (depth != 0) throw ParseError("unbalanced parentheses", 0, start + 1);
    out.push_back({line.substr(start, i - start), start + 1});
  }
  return out;
}

std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> out;
  int depth = 0;
  std::string cur;
  for (char c : s) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == ',' && depth == 0) {
      out.push_back(trim(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!trim(cur).empty() || !out.empty()) out.push_back(trim(cur));
  return out;
}

bool parenthesized(const std::string& s) { return s.size() >= 2 && s.front() == '(' && s.back() == ')'; }

class JobParser {
public:
  explicit JobParser(std::string source) { job_.source_name = std::move(source); }

  Job parse(const std::string& text) {
    std::istringstream in(text);
    std::string raw;
    while (std::getline(in, raw)) {
      ++line_;
      std::string line = raw.substr(0, raw.find('#'));
      if (trim(line).empty()) continue;
      job_.echo.push_back(trim(line));
      try {
        directive(line);
      } catch (const ParseError& e) {
        throw ParseError(e.what(), line_, e.column());
      } catch (const Error& e) {
        throw ParseError(e.what(), line_, 1);
      }
    }
    return std::move(job_);
  }

private:
  void directive(const std::string& line) {
    auto toks = tokenize(line, 0);
    const std::string& head = toks[0].text;
    auto rest_from = [&](std::size_t k) {
      return k < toks.size() ? line.substr(toks[k].column - 1) : std::string();
    };
    if (head == "ring") {
      if (toks.size() < 2) throw ParseError("ring needs a declaration like Z[x,y]", 0, toks[0].column);
      std::string decl = trim(rest_from(1));
      try {
        ring_ = parse_ring(decl);
      } catch (const Error& e) {
        throw ParseError(e.what(), 0, toks[1].column);
      }
    } else if (head == "let") {
      let(line, toks);
    } else if (head == "task") {
      task(toks);
    } else {
      throw ParseError("unknown directive '" + head + "'", 0, toks[0].column);
    }
  }

  const RingPtr& ring(std::size_t column) const {
    if (!ring_) throw ParseError("no ring declared yet", 0, column);
    return ring_;
  }

  Polynomial polynomial(const std::string& text, std::size_t column) {
    try {
      return parse_polynomial(text, ring(column), &polys_);
    } catch (const ParseError& e) {
      throw ParseError(e.what(), 0, column + e.column() - 1);
    } catch (const Error& e) {
      throw ParseError(e.what(), 0, column);
    }
  }

  // "(g1, g2)" or the name of a let-bound ideal.
  Ideal ideal(const std::string& text, std::size_t column) {
    if (!parenthesized(text)) {
      auto it = ideals_.find(text);
      if (it != ideals_.end()) return it->second;
      auto p = polys_.find(text);
      if (p != polys_.end()) return Ideal(p->second.ring(), {p->second});
      throw ParseError("unknown ideal '" + text + "'", 0, column);
    }
    return Ideal(ring(column), list(text.substr(1, text.size() - 2), column + 1));
  }

  std::vector<Polynomial> list(const std::string& body, std::size_t column) {
    std::vector<Polynomial> out;
    for (const auto& item : split_commas(body)) {
      if (item.empty()) throw ParseError("empty list entry", 0, column);
      auto it = ideals_.find(item);
      if (it != ideals_.end()) {
        for (const auto& g : it->second.generators()) out.push_back(g.in_ring(ring(column)));
        continue;
      }
      out.push_back(polynomial(item, column));
    }
    return out;
  }

  void define(const std::string& name, std::size_t column) {
    if (!is_valid_identifier(name)) throw ParseError("invalid name '" + name + "'", 0, column);
    if (ring_ && ring_->index_of(name)) throw ParseError("name '" + name + "' is a ring variable", 0, column);
    if (polys_.count(name) || ideals_.count(name) || job_.schemes.count(name))
      throw ParseError("name '" + name + "' is already defined", 0, column);
  }

  void let(const std::string& line, const std::vector<Token>& toks) {
    if (toks.size() < 4 || toks[2].text != "=") throw ParseError("expected 'let <name> = <value>'", 0, toks[0].column);
    const std::string& name = toks[1].text;
    define(name, toks[1].column);
    const Token& v = toks[3];
    auto starts = [&](const std::string& kw) { return v.text.rfind(kw + "(", 0) == 0 && v.text.back() == ')'; };
    if (starts("ideal")) {
      if (toks.size() != 4) throw ParseError("trailing text after ideal", 0, toks[4].column);
      ideals_.emplace(name, ideal(v.text.substr(5), v.column + 5));
    } else if (starts("scheme")) {
      std::string body = v.text.substr(6);
      Ideal I = ideal(body, v.column + 6);
      std::optional<Point> point;
      if (toks.size() > 4) {
        if (toks[4].text != "point" || toks.size() != 6 || !parenthesized(toks[5].text))
          throw ParseError("expected 'point (c1, ..., cn)'", 0, toks[4].column);
        point = Point{};
        RingPtr q = PolynomialRing::make(CoefficientRing::rationals(), {});
        for (const auto& c : split_commas(toks[5].text.substr(1, toks[5].text.size() - 2))) {
          try {
            point->push_back(parse_polynomial(c, q).constant_value());
          } catch (const Error& e) {
            throw ParseError(std::string("bad point coordinate: ") + e.what(), 0, toks[5].column);
          }
        }
      }
      try {
        job_.schemes.emplace(name, point ? AffinePresentation(I, *point) : AffinePresentation(I));
      } catch (const Error& e) {
        throw ParseError(e.what(), 0, v.column);
      }
    } else {
      std::string expr = trim(line.substr(v.column - 1));
      polys_.emplace(name, polynomial(expr, v.column));
    }
  }

  AffinePresentation source(const Token& t) {
    auto it = job_.schemes.find(t.text);
    if (it != job_.schemes.end()) return it->second;
    auto seeds = builtin_seeds();
    auto s = seeds.find(t.text);
    if (s != seeds.end()) return s->second;
    if (parenthesized(t.text)) return AffinePresentation(ideal(t.text, t.column));
    auto i = ideals_.find(t.text);
    if (i != ideals_.end()) return AffinePresentation(i->second);
    throw ParseError("unknown scheme or seed '" + t.text + "'", 0, t.column);
  }

  std::uint64_t number(const Token& t, const std::string& value) {
    try {
      std::size_t used = 0;
      unsigned long long v = std::stoull(value, &used);
      if (used != value.size()) throw std::invalid_argument("trailing");
      return v;
    } catch (const std::exception&) {
      throw ParseError("expected a non-negative integer, got '" + value + "'", 0, t.column);
    }
  }

  void task(const std::vector<Token>& toks) {
    if (toks.size() < 3) throw ParseError("expected 'task <name> <op> [args]'", 0, toks[0].column);
    Task t;
    t.name = toks[1].text;
    t.op = toks[2].text;
    t.line = line_;
    if (!names_.insert(t.name).second) throw ParseError("duplicate task name '" + t.name + "'", 0, toks[1].column);
    static const std::set<std::string> ops{"seeds", "suspend", "verify", "family", "quasi-affine", "count"};
    if (!ops.count(t.op)) throw ParseError("unknown task operation '" + t.op + "'", 0, toks[2].column);

    std::vector<Token> positional;
    std::map<std::string, std::pair<std::string, Token>> named;
    for (std::size_t k = 3; k < toks.size(); ++k) {
      const auto& tok = toks[k];
      auto eq = tok.text.find('=');
      if (eq == std::string::npos || parenthesized(tok.text)) {
        positional.push_back(tok);
      } else {
        std::string key = tok.text.substr(0, eq);
        if (named.count(key)) throw ParseError("argument '" + key + "' given twice", 0, tok.column);
        named.emplace(key, std::make_pair(tok.text.substr(eq + 1), Token{tok.text.substr(eq + 1), tok.column + eq + 1}));
      }
    }
    auto take = [&](const std::string& key) -> std::optional<Token> {
      auto it = named.find(key);
      if (it == named.end()) return std::nullopt;
      Token v = it->second.second;
      named.erase(it);
      return v;
    };
    auto take_flag = [&](const std::string& flag) {
      auto it = std::find_if(positional.begin(), positional.end(), [&](const Token& x) { return x.text == flag; });
      if (it == positional.end()) return false;
      positional.erase(it);
      return true;
    };
    if (auto p = take("primes")) t.primes = primes(*p);
    if (auto p = take("p")) {
      if (t.primes) throw ParseError("give either p= or primes=", 0, p->column);
      t.primes = primes(*p);
    }
    if (auto n = take("times")) t.times = static_cast<unsigned>(number(*n, n->text));

    if (t.op == "suspend" || t.op == "verify" || t.op == "count") {
      if (positional.size() != 1) throw ParseError(t.op + " needs exactly one scheme", 0, toks[2].column);
      t.source_label = positional[0].text;
      t.source = source(positional[0]);
      positional.clear();
      if (t.op == "count" && !t.primes) throw ParseError("count needs p= or primes=", 0, toks[2].column);
    } else if (t.op == "family" || t.op == "quasi-affine") {
      t.verify = take_flag("verify");
      auto I = take("I");
      auto roots = take("roots");
      if (!roots) roots = take("a");
      if (!I || !roots) throw ParseError(t.op + " needs I=(..) and roots=(..)", 0, toks[2].column);
      FamilySpec spec;
      Ideal ideal_ = ideal(I->text, I->column);
      spec.base = ideal_.ring();
      spec.generators = ideal_.generators();
      if (!parenthesized(roots->text)) throw ParseError("roots must be a parenthesized list", 0, roots->column);
      for (const auto& a : list(roots->text.substr(1, roots->text.size() - 2), roots->column + 1))
        spec.roots.push_back(a.in_ring(spec.base));
      if (auto z = take("z")) spec.z = z->text;
      if (auto pre = take("prefix")) spec.torsor_prefix = pre->text;
      try {
        spec.validate();
      } catch (const Error& e) {
        throw ParseError(e.what(), 0, I->column);
      }
      t.family = spec;
      if (t.op == "quasi-affine") {
        auto j = take("j");
        if (!j) throw ParseError("quasi-affine needs j=<index>", 0, toks[2].column);
        t.j = number(*j, j->text);
      }
    }
    if (!positional.empty()) throw ParseError("unexpected argument '" + positional[0].text + "'", 0, positional[0].column);
    if (!named.empty()) {
      const auto& [key, v] = *named.begin();
      throw ParseError("unknown argument '" + key + "'", 0, v.second.column);
    }
    job_.tasks.push_back(std::move(t));
  }

  std::vector<std::uint64_t> primes(const Token& t) {
    try {
      return parse_prime_list(t.text);
    } catch (const Error& e) {
      throw ParseError(e.what(), 0, t.column);
    }
  }

  Job job_;
  std::size_t line_ = 0;
  RingPtr ring_;
  Bindings polys_;
  std::map<std::string, Ideal> ideals_;
  std::set<std::string> names_;
};

// ---- execution

std::string char_label(std::uint64_t p) { return p == 0 ? "Q" : "F" + std::to_string(p); }

struct TaskOutcome {
  Json body = Json::object();
  bool passed = true;
  bool budget = false;
};

Json ci_json(const AffinePresentation& x) {
  Json j;
  auto ci = complete_intersection_check(x);
  j["codimension"] = ci.codimension;
  j["generators"] = ci.generator_count;
  j["complete_intersection"] = ci.is_ci;
  return j;
}

void run_seeds(TaskOutcome& out, const std::vector<std::uint64_t>& primes) {
  Json arr = Json::array();
  for (const auto& [name, seed] : builtin_seeds()) {
    Json e;
    e["name"] = name;
    e["presentation"] = to_json(seed);
    Json sm = Json::array();
    for (const auto& c : smoothness_by_characteristic(seed, primes)) {
      sm.push_back(Json{{"characteristic", char_label(c.characteristic)}, {"smooth", c.smooth}});
      out.passed = out.passed && c.smooth;
    }
    e["smooth"] = sm;
    arr.push_back(e);
  }
  out.body["seeds"] = arr;
}

std::vector<DeformationResult> steps_of(const AffinePresentation& x, unsigned times) {
  std::vector<DeformationResult> steps;
  AffinePresentation cur = x;
  for (unsigned k = 0; k < times; ++k) {
    steps.push_back(suspension_model(cur));
    cur = steps.back().space;
  }
  return steps;
}

void run_suspend(TaskOutcome& out, const Task& t) {
  out.body["source"] = t.source_label;
  out.body["input"] = to_json(*t.source);
  out.body["times"] = t.times;
  auto steps = steps_of(*t.source, t.times);
  Json arr = Json::array();
  for (std::size_t k = 0; k < steps.size(); ++k)
    arr.push_back(Json{{"step", k + 1}, {"parameters", steps[k].parameter_vars}, {"torsors", steps[k].torsor_vars}});
  out.body["steps"] = arr;
  const AffinePresentation& result = steps.empty() ? *t.source : steps.back().space;
  out.body["result"] = to_json(result);
  out.body["shape"] = ci_json(result);
  if (t.times > 0 && t.source_label == "S0") {
    auto cmp = diff_presentations(result, quadric(t.times), suspension_to_quadric(t.times));
    Json q;
    q["quadric"] = to_json(quadric(t.times));
    q["verdict"] = to_string(cmp.verdict);
    if (!cmp.witness.empty()) q["witness"] = cmp.witness;
    out.body["quadric_identity"] = q;
    out.passed = cmp.verdict != Verdict::Different;
  }
}

void run_verify(TaskOutcome& out, const Task& t, const std::vector<std::uint64_t>& primes, std::uint64_t budget) {
  out.body["source"] = t.source_label;
  out.body["times"] = t.times;
  Json reports = Json::array();
  for (const auto& d : steps_of(*t.source, t.times)) {
    auto r = verify_suspension(d, primes, budget);
    out.passed = out.passed && r.passed();
    out.budget = out.budget || r.budget_exceeded;
    reports.push_back(to_json(r));
  }
  out.body["reports"] = reports;
}

void run_family(TaskOutcome& out, const Task& t, const std::vector<std::uint64_t>& primes, std::uint64_t budget) {
  const FamilySpec& spec = *t.family;
  out.body["family"] = describe(spec);
  out.body["presentation"] = to_json(danielewski_family(spec));
  if (!t.verify) return;
  FamilyOptions opts;
  opts.primes = primes;
  opts.budget = budget;
  auto r = verify_family(spec, opts);
  out.passed = r.passed();
  out.budget = r.budget_exceeded;
  out.body["report"] = to_json(r);
}

void run_quasi_affine(TaskOutcome& out, const Task& t, const std::vector<std::uint64_t>& primes,
                      std::uint64_t budget) {
  const FamilySpec& spec = *t.family;
  auto xj = quasi_affine_contractible(spec, t.j);
  out.body["family"] = describe(spec);
  out.body["j"] = t.j;
  out.body["presentation"] = to_json(xj);
  const std::size_t nr = spec.base->arity() + spec.generators.size();
  Json counts = Json::array();
  std::vector<std::uint64_t> ps = primes;
  const auto& k = spec.base->coefficients();
  if (k.kind() == CoefficientRing::Kind::PrimeField) ps = {k.characteristic()};
  for (auto p : ps) {
    Json e;
    e["prime"] = p;
    FamilySpec sp = k.kind() == CoefficientRing::Kind::PrimeField
                        ? spec
                        : spec.with_coefficients(CoefficientRing::prime_field(p));
    bool distinct = true;
    for (std::size_t a = 0; a < sp.roots.size(); ++a)
      for (std::size_t b = a + 1; b < sp.roots.size(); ++b) distinct = distinct && !(sp.roots[a] == sp.roots[b]);
    if (!distinct || !etale_split_check(sp.ideal(), sp.split_polynomial(), sp.z)) {
      e["status"] = "skipped";
      e["detail"] = "roots collide or the cover is not etale mod " + std::to_string(p);
      counts.push_back(e);
      continue;
    }
    try {
      std::uint64_t expected = 1;
      for (std::size_t i = 0; i < nr; ++i) expected *= p;
      std::uint64_t n = count_points_bruteforce(xj, p, budget);
      e["points"] = n;
      e["expected"] = expected;
      e["status"] = n == expected ? "pass" : "fail";
      e["detail"] = "affine-space count, a necessary condition only";
      out.passed = out.passed && n == expected;
    } catch (const BudgetExceeded& ex) {
      e["status"] = "fail";
      e["detail"] = ex.what();
      out.passed = false;
      out.budget = true;
    }
    counts.push_back(e);
  }
  out.body["counts"] = counts;
}

void run_count(TaskOutcome& out, const Task& t, std::uint64_t budget) {
  out.body["source"] = t.source_label;
  out.body["presentation"] = to_json(*t.source);
  Json counts = Json::array();
  for (auto p : *t.primes) counts.push_back(Json{{"prime", p}, {"points", count_points_bruteforce(*t.source, p, budget)}});
  out.body["counts"] = counts;
}

}  // namespace

std::vector<std::uint64_t> parse_prime_list(const std::string& text) {
  std::vector<std::uint64_t> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    item = trim(item);
    std::size_t used = 0;
    unsigned long long v = 0;
    try {
      v = std::stoull(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (item.empty() || used != item.size() || !is_prime(v)) throw DomainError("'" + item + "' is not a prime");
    out.push_back(v);
  }
  if (out.empty()) throw DomainError("empty prime list");
  return out;
}

Job parse_job(const std::string& text, const std::string& source_name) {
  return JobParser(source_name).parse(text);
}

Job load_job(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read job file " + path, 0, 0);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_job(buf.str(), std::filesystem::path(path).filename().string());
}

AffinePresentation resolve_reference(const std::string& ref) {
  auto seeds = builtin_seeds();
  if (auto it = seeds.find(ref); it != seeds.end()) return it->second;
  auto colon = ref.rfind(':');
  if (colon == std::string::npos) throw DomainError("unknown seed '" + ref + "' (use a seed name or file:scheme)");
  Job job = load_job(ref.substr(0, colon));
  std::string name = ref.substr(colon + 1);
  if (auto it = job.schemes.find(name); it != job.schemes.end()) return it->second;
  if (auto it = seeds.find(name); it != seeds.end()) return it->second;
  throw DomainError("no scheme named '" + name + "' in " + ref.substr(0, colon));
}

RunResult run_job(const Job& job, const RunOptions& options) {
  const std::vector<std::uint64_t>& global = options.primes ? *options.primes : kDefaultPrimes;
  RunResult result;
  Json doc;
  doc["schema"] = 1;
  doc["tool"] = "forge";
  doc["version"] = kToolVersion;
  doc["job"] = Json{{"source", job.source_name}, {"lines", job.echo}};
  doc["options"] = Json{{"primes", global}, {"budget", options.budget}, {"seed", options.seed}};
  Json tasks = Json::array();
  for (const auto& t : job.tasks) {
    TaskOutcome out;
    const auto& primes = t.primes ? *t.primes : global;
    try {
      if (t.op == "seeds") run_seeds(out, primes);
      else if (t.op == "suspend") run_suspend(out, t);
      else if (t.op == "verify") run_verify(out, t, primes, options.budget);
      else if (t.op == "family") run_family(out, t, primes, options.budget);
      else if (t.op == "quasi-affine") run_quasi_affine(out, t, primes, options.budget);
      else if (t.op == "count") run_count(out, t, options.budget);
    } catch (const BudgetExceeded& e) {
      out.passed = false;
      out.budget = true;
      out.body["error"] = e.what();
    } catch (const Error& e) {
      out.passed = false;
      out.body["error"] = e.what();
    }
    Json entry;
    entry["name"] = t.name;
    entry["op"] = t.op;
    entry["line"] = t.line;
    entry["status"] = out.passed ? "pass" : "fail";
    if (out.budget) entry["budget_exceeded"] = true;
    for (auto it = out.body.begin(); it != out.body.end(); ++it) entry[it.key()] = it.value();
    tasks.push_back(entry);
    result.passed = result.passed && out.passed;
    result.budget_exceeded = result.budget_exceeded || out.budget;
  }
  doc["tasks"] = tasks;
  doc["status"] = result.passed ? "pass" : "fail";
  doc["budget_exceeded"] = result.budget_exceeded;
  result.exit_code = result.budget_exceeded ? 3 : (result.passed ? 0 : 1);
  result.document = std::move(doc);
  return result;
}

std::string render_report(const Json& document, Format format) {
  if (format == Format::Json) return document.dump(2) + "\n";
  return json_to_text(document);
}

}  // namespace forge
