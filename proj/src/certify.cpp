#include "gcat/certify.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <set>

#include "gcat/error.hpp"

namespace gcat {

namespace {

// S name, C class, N nonnegative integer, R positive rate
const std::map<std::string, std::string>& signatures() {
  static const std::map<std::string, std::string> sig = {
      {"cat_upper", "SCN"},
      {"cat_lower", "SCN"},
      {"lscat_upper", "SN"},
      {"map_cat_upper", "SCN"},
      {"fca", "SCN"},
      {"fnca", "SR"},
      {"simvol_zero", "S"},
      {"simvol_positive", "S"},
      {"homology_seminorm_zero", "SN"},
      {"comp_zero", "SN"},
      {"ent_zero", "S"},
      {"ent_positive", "S"},
      {"pi1_equivalent", "SS"},
      {"uexp_lower", "SR"},
      // structural inputs
      {"dim", "SN"},
      {"manifold", "SN"},
      {"bundle", "SSS"},         // total, fibre, base
      {"mapping_torus", "SS"},   // total, fibre
      {"finite_cover", "SSN"},   // cover, base, sheets
      {"wedge", "SSN"},          // wedge, summand, copies
      {"subdivision", "SS"},     // subdivided, original
      {"map", "SSS"},            // map, source, target
      {"composition", "SSS"},    // h, g, f with h = g o f
      {"fibre_inclusion", "SSS"},  // map, fibre, total
  };
  return sig;
}

bool valid_name(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (std::isspace(static_cast<unsigned char>(c)) || c == ',' || c == '(' || c == ')') return false;
  return s != "_";
}

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::string canonical_arg(char type, const std::string& raw, const std::string& predicate) {
  const std::string a = trim(raw);
  auto bad = [&](const std::string& why) {
    return MalformedInput("bad argument '" + a + "' to " + predicate + ": " + why);
  };
  switch (type) {
    case 'S':
      if (!valid_name(a)) throw bad("expected a name");
      return a;
    case 'C':
      return GroupClass::parse(a).descriptor();
    case 'N': {
      if (a.empty() || !std::all_of(a.begin(), a.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
        throw bad("expected a nonnegative integer");
      return std::to_string(std::stoll(a));
    }
    case 'R': {
      auto q = parse_rational(a);
      if (q <= Rational(0)) throw bad("rate must be positive");
      return to_string(q);
    }
  }
  throw bad("unknown type");
}

long long num(const std::string& s) { return std::stoll(s); }
GroupClass cls(const std::string& s) { return GroupClass::parse(s); }
Rational rate(const std::string& s) { return parse_rational(s); }

const GroupClass kAmenable = GroupClass::of(ClassKind::Amenable);

}  // namespace

std::string Statement::str() const {
  std::string out = predicate + "(";
  for (std::size_t i = 0; i < args.size(); ++i) out += (i ? ", " : "") + args[i];
  return out + ")";
}

bool is_known_predicate(const std::string& p) { return signatures().count(p) > 0; }

Statement make_statement(std::string predicate, std::vector<std::string> args) {
  auto it = signatures().find(predicate);
  if (it == signatures().end()) throw MalformedInput("unknown predicate '" + predicate + "'");
  const std::string& sig = it->second;
  if (args.size() != sig.size())
    throw MalformedInput(predicate + " takes " + std::to_string(sig.size()) + " arguments, got " +
                         std::to_string(args.size()));
  for (std::size_t i = 0; i < args.size(); ++i) args[i] = canonical_arg(sig[i], args[i], predicate);
  return Statement{std::move(predicate), std::move(args)};
}

Statement parse_statement(const std::string& text, bool pattern) {
  const std::string t = trim(text);
  const auto open = t.find('(');
  if (open == std::string::npos || t.back() != ')') throw MalformedInput("expected predicate(args): '" + t + "'");
  const std::string pred = trim(t.substr(0, open));
  const std::string inner = t.substr(open + 1, t.size() - open - 2);
  std::vector<std::string> args;
  if (!trim(inner).empty()) {
    std::size_t start = 0;
    for (std::size_t i = 0; i <= inner.size(); ++i)
      if (i == inner.size() || inner[i] == ',') {
        args.push_back(trim(inner.substr(start, i - start)));
        start = i + 1;
      }
  }
  if (!pattern) return make_statement(pred, std::move(args));
  auto it = signatures().find(pred);
  if (it == signatures().end()) throw MalformedInput("unknown predicate '" + pred + "'");
  if (args.size() != it->second.size())
    throw MalformedInput(pred + " takes " + std::to_string(it->second.size()) + " arguments");
  for (std::size_t i = 0; i < args.size(); ++i)
    if (args[i] != "_") args[i] = canonical_arg(it->second[i], args[i], pred);
  return Statement{pred, std::move(args)};
}

bool matches(const Statement& fact, const Statement& pattern) {
  if (fact.predicate != pattern.predicate || fact.args.size() != pattern.args.size()) return false;
  for (std::size_t i = 0; i < fact.args.size(); ++i)
    if (pattern.args[i] != "_" && pattern.args[i] != fact.args[i]) return false;
  return true;
}

bool entails(const Statement& fact, const Statement& goal) {
  if (fact == goal) return true;
  if (fact.predicate != goal.predicate) return false;
  const auto& p = fact.predicate;
  const auto& a = fact.args;
  const auto& b = goal.args;
  if (p == "cat_upper" || p == "map_cat_upper" || p == "fca")
    return a[0] == b[0] && implies(cls(a[1]), cls(b[1])) && num(a[2]) <= num(b[2]);
  if (p == "cat_lower") return a[0] == b[0] && implies(cls(b[1]), cls(a[1])) && num(a[2]) >= num(b[2]);
  if (p == "lscat_upper") return a[0] == b[0] && num(a[1]) <= num(b[1]);
  if (p == "fnca" || p == "uexp_lower") return a[0] == b[0] && rate(a[1]) >= rate(b[1]);
  return false;
}

// ---------------------------------------------------------------------------

const std::vector<Rule>& rules() {
  static const std::vector<Rule> r = {
      {"R1", "fibration bound: cat_C(E) <= cat_C(F) * lscat(B)"},
      {"R2", "amenable cover of size n kills comparison maps and l1 seminorms in degrees >= n"},
      {"R3", "closed d-manifold with amenable category <= d has zero simplicial volume"},
      {"R4", "mapping torus: cat_C(M) <= 2 cat_C(N), and <= dim M when 2 cat_C(N) <= dim N + 1"},
      {"R5", "stars cover of the subdivision: cat_C(X) <= dim X + 1"},
      {"R6", "cat_C depends only on the fundamental group data"},
      {"R7", "FCA(C, k) gives cat_C(X) <= k + 1"},
      {"R8", "cat_C(X) <= k + 1 gives FCA(C, k) on an iterated subdivision, C subgroup-closed"},
      {"R9", "FCA for subexp<(n-k)/n in dimension k, n = dim X, gives zero minimal volume entropy"},
      {"R10", "cat_{exp<d}(X) >= dim X + 1 gives FNCA(d); FNCA gives positive minimal volume entropy"},
      {"R11", "FNCA(d) on a d'-sheeted cover descends with rate d / (2d' - 1)"},
      {"R12", "bundle with fibre category n for subexp<1/dim M and n (dim B + 1) <= dim M has zero entropy"},
      {"R13", "minimal volume entropy is invariant under barycentric subdivision"},
      {"R14", "wedge of m copies: ent(Z) >= m ent(Y) (external inequality)"},
      {"R15", "cat_C of a map is at most that of its source, target, or either factor; "
              "fibre inclusion category equals fibre category for amenable"},
  };
  return r;
}

const Rule& rule(const std::string& id) {
  for (const auto& r : rules())
    if (r.id == id) return r;
  throw std::out_of_range("no rule " + id);
}

std::size_t FactStore::add(Fact f) {
  if (auto it = index_.find(f.statement); it != index_.end()) return it->second;
  const std::size_t id = facts_.size();
  index_.emplace(f.statement, id);
  by_predicate_[f.statement.predicate].push_back(id);
  facts_.push_back(std::move(f));
  return id;
}

std::size_t FactStore::assert_axiom(const Statement& s, const std::string& citation) {
  if (trim(citation).empty()) throw MalformedInput("axiom " + s.str() + " needs a citation");
  const auto checked = make_statement(s.predicate, s.args);
  return add(Fact{checked, Provenance{ProvenanceKind::Axiom, citation, {}, {}, {}}, 0});
}

std::size_t FactStore::add_computed(const Statement& s, const std::string& witness) {
  if (s.predicate == "cat_upper")
    throw MalformedInput("computed cat_upper facts need a validated cover witness");
  if (trim(witness).empty()) throw MalformedInput("computed fact " + s.str() + " needs a witness");
  const auto checked = make_statement(s.predicate, s.args);
  return add(Fact{checked, Provenance{ProvenanceKind::Computed, witness, {}, {}, {}}, 0});
}

std::size_t FactStore::add_cover(const std::string& space, const VertexCover& cover, const GroupClass& c,
                                 const Budget& budget) {
  auto v = validate_cover(cover, c, budget);
  if (v.overall.answer != Answer::Yes)
    throw UnsupportedInput("cover of " + space + " does not validate for " + c.descriptor() + " (" +
                           to_string(v.overall.answer) + ")");
  auto s = make_statement("cat_upper", {space, c.descriptor(), std::to_string(cover.size())});
  Provenance p{ProvenanceKind::Computed,
               "validated " + std::to_string(cover.size()) + "-piece " + c.descriptor() + " cover of " +
                   cover.complex.name() + " on " + std::to_string(cover.complex.vertex_count()) + " vertices",
               {}, {}, {}};
  p.cover = cover;
  p.cover_class = c;
  return add(Fact{s, std::move(p), 0});
}

std::size_t FactStore::add_ls_cover(const std::string& space, const VertexCover& cover) {
  if (!cover.complex.connected() || !collapsible_pieces(cover))
    throw UnsupportedInput("LS cover of " + space + " needs collapsible pieces in a connected complex");
  auto s = make_statement("lscat_upper", {space, std::to_string(cover.size())});
  Provenance p{ProvenanceKind::Computed,
               std::to_string(cover.size()) + "-piece cover of " + cover.complex.name() + " by collapsible pieces",
               {}, {}, {}};
  p.cover = cover;
  return add(Fact{s, std::move(p), 0});
}

std::optional<std::size_t> FactStore::find(const Statement& s) const {
  auto it = index_.find(s);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::vector<std::size_t> FactStore::with(const std::string& predicate) const {
  auto it = by_predicate_.find(predicate);
  return it == by_predicate_.end() ? std::vector<std::size_t>{} : it->second;
}

// ---------------------------------------------------------------------------

namespace {

struct Candidate {
  Statement statement;
  std::string rule;
  std::vector<std::size_t> premises;
};

}  // namespace

SaturationReport FactStore::saturate(const SaturationBudget& budget) {
  SaturationReport report;
  exhausted_ = false;
  for (;;) {
    if (report.rounds >= budget.max_rounds) {
      report.complete = false;
      break;
    }
    const std::size_t snapshot = facts_.size();
    std::vector<Candidate> out;
    auto emit = [&](const std::string& rule_id, std::string pred, std::vector<std::string> args,
                    std::vector<std::size_t> premises) {
      out.push_back(Candidate{make_statement(std::move(pred), std::move(args)), rule_id, std::move(premises)});
    };
    auto of = [&](const std::string& pred) {
      std::vector<std::size_t> ids;
      for (auto id : with(pred))
        if (id < snapshot) ids.push_back(id);
      return ids;
    };
    auto arg = [&](std::size_t id, std::size_t i) -> const std::string& { return facts_[id].statement.args[i]; };
    auto dim_of = [&](const std::string& space) -> std::optional<std::pair<long long, std::size_t>> {
      for (auto id : of("dim"))
        if (arg(id, 0) == space) return std::make_pair(num(arg(id, 1)), id);
      return std::nullopt;
    };

    const auto cat_upper = of("cat_upper");

    // R1
    for (auto b : of("bundle"))
      for (auto c : cat_upper) {
        if (arg(c, 0) != arg(b, 1) || cls(arg(c, 1)).kind == ClassKind::ExpBelow) continue;
        for (auto l : of("lscat_upper"))
          if (arg(l, 0) == arg(b, 2))
            emit("R1", "cat_upper", {arg(b, 0), arg(c, 1), std::to_string(num(arg(c, 2)) * num(arg(l, 1)))},
                 {c, l, b});
      }
    // R2
    for (auto c : cat_upper) {
      if (!implies(cls(arg(c, 1)), kAmenable)) continue;
      const long long n = num(arg(c, 2));
      auto d = dim_of(arg(c, 0));
      const long long top = d ? std::max(n, d->first) : n;
      for (long long s = n; s <= top; ++s) {
        std::vector<std::size_t> prem{c};
        if (d && s > n) prem.push_back(d->second);
        emit("R2", "comp_zero", {arg(c, 0), std::to_string(s)}, prem);
        emit("R2", "homology_seminorm_zero", {arg(c, 0), std::to_string(s)}, prem);
      }
    }
    // R3
    for (auto m : of("manifold"))
      for (auto c : cat_upper)
        if (arg(c, 0) == arg(m, 0) && implies(cls(arg(c, 1)), kAmenable) && num(arg(c, 2)) <= num(arg(m, 1)))
          emit("R3", "simvol_zero", {arg(m, 0)}, {m, c});
    // R4
    for (auto t : of("mapping_torus"))
      for (auto c : cat_upper) {
        if (arg(c, 0) != arg(t, 1) || cls(arg(c, 1)).kind == ClassKind::ExpBelow) continue;
        const long long n = num(arg(c, 2));
        emit("R4", "cat_upper", {arg(t, 0), arg(c, 1), std::to_string(2 * n)}, {c, t});
        if (auto d = dim_of(arg(t, 1)); d && 2 * n <= d->first + 1)
          emit("R4", "cat_upper", {arg(t, 0), arg(c, 1), std::to_string(d->first + 1)}, {c, t, d->second});
      }
    // R5
    for (auto d : of("dim"))
      emit("R5", "cat_upper", {arg(d, 0), "trivial", std::to_string(num(arg(d, 1)) + 1)}, {d});
    // R6
    for (auto e : of("pi1_equivalent"))
      for (auto c : cat_upper) {
        if (arg(c, 0) == arg(e, 0)) emit("R6", "cat_upper", {arg(e, 1), arg(c, 1), arg(c, 2)}, {e, c});
        if (arg(c, 0) == arg(e, 1)) emit("R6", "cat_upper", {arg(e, 0), arg(c, 1), arg(c, 2)}, {e, c});
      }
    // R7
    for (auto f : of("fca"))
      emit("R7", "cat_upper", {arg(f, 0), arg(f, 1), std::to_string(num(arg(f, 2)) + 1)}, {f});
    // R8
    for (auto c : cat_upper)
      if (cls(arg(c, 1)).subgroup_closed() && num(arg(c, 2)) >= 1)
        emit("R8", "fca", {arg(c, 0), arg(c, 1), std::to_string(num(arg(c, 2)) - 1)}, {c});
    // R9, both forms
    for (auto pred : {"fca", "cat_upper"})
      for (auto f : of(pred)) {
        auto d = dim_of(arg(f, 0));
        if (!d) continue;
        const long long n = d->first;
        const long long k = std::string(pred) == "fca" ? num(arg(f, 2)) : num(arg(f, 2)) - 1;
        if (k < 0 || k >= n) continue;
        if (implies(cls(arg(f, 1)), GroupClass::subexp_below(Rational(n - k, n))))
          emit("R9", "ent_zero", {arg(f, 0)}, {f, d->second});
      }
    // R10
    for (auto c : of("cat_lower")) {
      const auto g = cls(arg(c, 1));
      if (g.kind != ClassKind::ExpBelow) continue;
      if (auto d = dim_of(arg(c, 0)); d && num(arg(c, 2)) >= d->first + 1)
        emit("R10", "fnca", {arg(c, 0), to_string(g.rate)}, {c, d->second});
    }
    for (auto f : of("fnca")) emit("R10", "ent_positive", {arg(f, 0)}, {f});
    // R11
    for (auto f : of("fnca"))
      for (auto c : of("finite_cover"))
        if (arg(c, 0) == arg(f, 0) && num(arg(c, 2)) >= 1) {
          auto r = finite_cover_rate(LogRate{rate(arg(f, 1)), Rounding::LowerBound}, static_cast<int>(num(arg(c, 2))));
          emit("R11", "fnca", {arg(c, 1), to_string(r.value)}, {f, c});
        }
    // R12
    for (auto b : of("bundle")) {
      auto dm = dim_of(arg(b, 0));
      auto db = dim_of(arg(b, 2));
      if (!dm || !db || dm->first < 1) continue;
      const auto target = GroupClass::subexp_below(Rational(1, dm->first));
      for (auto c : cat_upper)
        if (arg(c, 0) == arg(b, 1) && implies(cls(arg(c, 1)), target) &&
            num(arg(c, 2)) * (db->first + 1) <= dm->first)
          emit("R12", "ent_zero", {arg(b, 0)}, {c, b, dm->second, db->second});
    }
    // R13
    for (auto s : of("subdivision"))
      for (auto pred : {"ent_zero", "ent_positive"})
        for (auto e : of(pred)) {
          if (arg(e, 0) == arg(s, 1)) emit("R13", pred, {arg(s, 0)}, {e, s});
          if (arg(e, 0) == arg(s, 0)) emit("R13", pred, {arg(s, 1)}, {e, s});
        }
    // R14
    for (auto w : of("wedge"))
      for (auto e : of("ent_positive"))
        if (arg(e, 0) == arg(w, 1) && num(arg(w, 2)) >= 1) emit("R14", "ent_positive", {arg(w, 0)}, {e, w});
    // R15
    // map(f, X, Y) and fibre_inclusion(i, F, E): source arg 1, target arg 2
    for (auto pred : {"map", "fibre_inclusion"})
      for (auto m : of(pred))
        for (auto c : cat_upper)
          if (arg(c, 0) == arg(m, 1) || arg(c, 0) == arg(m, 2))
            emit("R15", "map_cat_upper", {arg(m, 0), arg(c, 1), arg(c, 2)}, {m, c});
    for (auto h : of("composition"))
      for (auto c : of("map_cat_upper"))
        if (arg(c, 0) == arg(h, 1) || arg(c, 0) == arg(h, 2))
          emit("R15", "map_cat_upper", {arg(h, 0), arg(c, 1), arg(c, 2)}, {h, c});
    for (auto i : of("fibre_inclusion"))
      for (auto c : of("map_cat_upper"))
        if (arg(c, 0) == arg(i, 0) && cls(arg(c, 1)).kind == ClassKind::Amenable)
          emit("R15", "cat_upper", {arg(i, 1), arg(c, 1), arg(c, 2)}, {i, c});

    // commit in rule order, then premise order
    auto rank = [](const std::string& id) { return std::stoi(id.substr(1)); };
    std::stable_sort(out.begin(), out.end(), [&](const Candidate& a, const Candidate& b) {
      if (rank(a.rule) != rank(b.rule)) return rank(a.rule) < rank(b.rule);
      return a.premises < b.premises;
    });
    std::size_t added = 0;
    for (auto& c : out) {
      if (index_.count(c.statement)) continue;
      if (facts_.size() >= budget.max_facts) {
        report.complete = false;
        exhausted_ = true;
        break;
      }
      int depth = 0;
      for (auto p : c.premises) depth = std::max(depth, facts_[p].depth);
      add(Fact{c.statement, Provenance{ProvenanceKind::Derived, c.rule, c.premises, {}, {}}, depth + 1});
      ++added;
    }
    ++report.rounds;
    report.derived += added;
    if (exhausted_ || added == 0) break;
  }
  if (!report.complete) exhausted_ = true;
  report.contradictions = contradictions();
  return report;
}

std::vector<std::string> FactStore::contradictions() const {
  std::vector<std::string> out;
  auto pair_up = [&](const std::string& a, const std::string& b) {
    for (auto x : with(a))
      for (auto y : with(b))
        if (facts_[x].statement.args[0] == facts_[y].statement.args[0])
          out.push_back(facts_[x].statement.str() + " contradicts " + facts_[y].statement.str());
  };
  pair_up("simvol_zero", "simvol_positive");
  pair_up("ent_zero", "ent_positive");
  for (auto u : with("cat_upper"))
    for (auto l : with("cat_lower")) {
      const auto& a = facts_[u].statement.args;
      const auto& b = facts_[l].statement.args;
      if (a[0] == b[0] && implies(cls(a[1]), cls(b[1])) && num(b[2]) > num(a[2]))
        out.push_back(facts_[u].statement.str() + " contradicts " + facts_[l].statement.str());
    }
  return out;
}

// ---------------------------------------------------------------------------

void FactStore::render(std::size_t id, int indent, std::string& out) const {
  const auto& f = facts_[id];
  out += std::string(static_cast<std::size_t>(indent) * 2, ' ') + f.statement.str() + "  [";
  switch (f.provenance.kind) {
    case ProvenanceKind::Axiom: out += "axiom: " + f.provenance.note; break;
    case ProvenanceKind::Computed: out += "computed: " + f.provenance.note; break;
    case ProvenanceKind::Derived: out += f.provenance.note + " " + rule(f.provenance.note).label; break;
  }
  out += "]\n";
  for (auto p : f.provenance.premises) render(p, indent + 1, out);
}

std::string FactStore::trace(std::size_t id) const {
  std::string out;
  render(id, 0, out);
  return out;
}

std::vector<std::size_t> FactStore::leaves(std::size_t id) const {
  std::set<std::size_t> seen;
  std::vector<std::size_t> out;
  std::function<void(std::size_t)> walk = [&](std::size_t i) {
    if (!seen.insert(i).second) return;
    if (facts_[i].provenance.kind != ProvenanceKind::Derived) out.push_back(i);
    for (auto p : facts_[i].provenance.premises) walk(p);
  };
  walk(id);
  std::sort(out.begin(), out.end());
  return out;
}

QueryResult FactStore::query(const Statement& goal) const {
  QueryResult r;
  const bool wildcard = std::count(goal.args.begin(), goal.args.end(), "_") > 0;
  std::optional<std::size_t> best;
  for (auto id : with(goal.predicate)) {
    const auto& s = facts_[id].statement;
    const bool ok = wildcard ? matches(s, goal) : entails(s, goal);
    if (ok && (!best || facts_[id].depth < facts_[*best].depth)) best = id;
  }
  if (best) {
    r.found = true;
    r.fact = best;
    const auto& f = facts_[*best];
    r.trace = "depth " + std::to_string(f.depth) + "\n";
    if (!(f.statement == goal) && !wildcard) r.trace += goal.str() + "  [follows from]\n";
    r.trace += trace(*best);
    return r;
  }
  r.missing = explain(goal);
  return r;
}

std::vector<std::string> FactStore::explain(const Statement& goal) const {
  std::vector<std::string> out;
  if (goal.args.empty() || goal.args[0] == "_") {
    out.push_back("no fact matches " + goal.str());
    return out;
  }
  const std::string& x = goal.args[0];
  auto about = [&](const std::string& pred) {
    std::vector<const Statement*> v;
    for (auto id : with(pred))
      if (facts_[id].statement.args[0] == x) v.push_back(&facts_[id].statement);
    return v;
  };
  auto dim = about("dim");
  auto best_upper = [&](const GroupClass& c) -> std::optional<long long> {
    std::optional<long long> b;
    for (auto* s : about("cat_upper"))
      if (implies(cls(s->args[1]), c) && (!b || num(s->args[2]) < *b)) b = num(s->args[2]);
    return b;
  };
  const auto& p = goal.predicate;
  if (p == "simvol_zero") {
    auto m = about("manifold");
    if (m.empty()) {
      out.push_back("R3 needs manifold(" + x + ", d)");
    } else {
      const auto d = m.front()->args[1];
      auto b = best_upper(kAmenable);
      out.push_back("R3 needs cat_upper(" + x + ", amenable, n) with n <= " + d +
                    (b ? "; best known n = " + std::to_string(*b) : "; no amenable upper bound known"));
    }
    if (!about("simvol_positive").empty()) out.push_back("store has simvol_positive(" + x + ")");
  } else if (p == "ent_zero") {
    if (dim.empty()) out.push_back("R9 needs dim(" + x + ", n)");
    else
      out.push_back("R9 needs fca(" + x + ", subexp<(n-k)/n, k) or cat_upper(" + x +
                    ", subexp<(n-k)/n, k+1) for some k < n = " + dim.front()->args[1]);
    if (about("bundle").empty()) out.push_back("R12 needs bundle(" + x + ", N, B)");
    else out.push_back("R12 needs cat_upper(N, subexp<1/dim " + x + ", n) with n (dim B + 1) <= dim " + x);
  } else if (p == "ent_positive") {
    out.push_back("R10 needs fnca(" + x + ", d) or cat_lower(" + x + ", exp<d, dim " + x + " + 1)" +
                  (dim.empty() ? " and dim(" + x + ", n)" : ""));
    out.push_back("R14 needs wedge(" + x + ", Y, m) with ent_positive(Y)");
  } else if (p == "cat_upper" || p == "fca") {
    if (goal.args[1] != "_") {
      auto b = best_upper(cls(goal.args[1]));
      out.push_back(b ? "best known cat_upper(" + x + ", " + goal.args[1] + ") is " + std::to_string(*b)
                      : "no upper bound for " + x + " in " + goal.args[1]);
    }
    if (dim.empty()) out.push_back("R5 needs dim(" + x + ", n)");
  } else if (p == "fnca") {
    out.push_back("R10 needs cat_lower(" + x + ", exp<d, dim " + x + " + 1)");
    out.push_back("R11 needs finite_cover(Y, " + x + ", s) with fnca(Y, d)");
  } else if (p == "comp_zero" || p == "homology_seminorm_zero") {
    auto b = best_upper(kAmenable);
    out.push_back("R2 needs cat_upper(" + x + ", amenable, n) with n <= degree" +
                  (b ? "; best known n = " + std::to_string(*b) : ""));
  } else {
    out.push_back("no fact or rule gives " + goal.str());
  }
  return out;
}

}  // namespace gcat
