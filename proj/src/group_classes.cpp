#include "gcat/group_classes.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include "gcat/error.hpp"

namespace gcat {

std::string to_string(const Rational& q) {
  if (q.denominator() == 1) return std::to_string(q.numerator());
  return std::to_string(q.numerator()) + "/" + std::to_string(q.denominator());
}

Rational parse_rational(const std::string& s) {
  try {
    std::size_t used = 0;
    const auto slash = s.find('/');
    const long long p = std::stoll(s.substr(0, slash), &used);
    if (used != (slash == std::string::npos ? s.size() : slash)) throw MalformedInput("");
    long long q = 1;
    if (slash != std::string::npos) {
      const std::string den = s.substr(slash + 1);
      q = std::stoll(den, &used);
      if (used != den.size()) throw MalformedInput("");
    }
    if (q == 0) throw MalformedInput("");
    return Rational(p, q);
  } catch (const std::exception&) {
    throw MalformedInput("bad rational '" + s + "'");
  }
}

LogRate log3_lower_bound() { return LogRate{Rational(549, 500), Rounding::LowerBound}; }

LogRate finite_cover_rate(const LogRate& rate, int d) {
  if (d < 1) throw MalformedInput("sheet count must be positive");
  return LogRate{rate.value / Rational(2 * d - 1), rate.rounding};
}

GroupClass GroupClass::subexp_below(Rational r) {
  if (r <= Rational(0)) throw MalformedInput("class rate must be positive");
  return GroupClass{ClassKind::SubexpBelow, r, false};
}

GroupClass GroupClass::exp_below(Rational r) {
  if (r <= Rational(0)) throw MalformedInput("class rate must be positive");
  return GroupClass{ClassKind::ExpBelow, r, false};
}

GroupClass GroupClass::parse(const std::string& s) {
  static const std::map<std::string, ClassKind> plain = {
      {"trivial", ClassKind::Trivial}, {"finite", ClassKind::Finite},
      {"abelian", ClassKind::Abelian}, {"amenable", ClassKind::Amenable},
      {"poly", ClassKind::Poly},       {"subexp", ClassKind::Subexp}};
  if (auto it = plain.find(s); it != plain.end()) return of(it->second);
  if (s.rfind("subexp<", 0) == 0) return subexp_below(parse_rational(s.substr(7)));
  if (s.rfind("exp<", 0) == 0) return exp_below(parse_rational(s.substr(4)));
  throw MalformedInput("unknown group class '" + s + "'");
}

std::string GroupClass::descriptor() const {
  switch (kind) {
    case ClassKind::Trivial: return "trivial";
    case ClassKind::Finite: return "finite";
    case ClassKind::Abelian: return "abelian";
    case ClassKind::Amenable: return "amenable";
    case ClassKind::Poly: return "poly";
    case ClassKind::Subexp: return "subexp";
    case ClassKind::SubexpBelow: return "subexp<" + to_string(rate);
    case ClassKind::ExpBelow: return "exp<" + to_string(rate);
  }
  return "?";
}

bool implies(const GroupClass& a, const GroupClass& b) {
  using K = ClassKind;
  auto poly_up = [&]() {
    return b.kind == K::Poly || b.kind == K::SubexpBelow || b.kind == K::Subexp ||
           b.kind == K::Amenable || b.kind == K::ExpBelow;
  };
  switch (a.kind) {
    case K::Trivial: return true;
    case K::Finite: return b.kind == K::Finite || poly_up();
    case K::Abelian: return b.kind == K::Abelian || poly_up();
    case K::Poly: return poly_up();
    case K::SubexpBelow:
      return ((b.kind == K::SubexpBelow || b.kind == K::ExpBelow) && a.rate <= b.rate) ||
             b.kind == K::Subexp || b.kind == K::Amenable;
    case K::Subexp: return b.kind == K::Subexp || b.kind == K::Amenable;
    case K::Amenable: return b.kind == K::Amenable;
    case K::ExpBelow: return b.kind == K::ExpBelow && a.rate <= b.rate;
  }
  return false;
}

std::string to_string(Answer a) {
  switch (a) {
    case Answer::Yes: return "yes";
    case Answer::No: return "no";
    case Answer::Unknown: return "unknown";
  }
  return "?";
}

// ---------------------------------------------------------------------------

namespace {

bool is_commutator_of(const Word& r, int i, int j) {
  if (r.size() != 4) return false;
  for (std::size_t k = 0; k < 4; ++k) {
    const int a = r[k], b = r[(k + 1) % 4], c = r[(k + 2) % 4], d = r[(k + 3) % 4];
    if (c != -a || d != -b) continue;
    const int x = std::abs(a), y = std::abs(b);
    if ((x == i && y == j) || (x == j && y == i)) return true;
  }
  return false;
}

bool all_commutators_present(const GroupPresentation& p) {
  for (int i = 1; i <= p.generator_count; ++i)
    for (int j = i + 1; j <= p.generator_count; ++j) {
      bool found = false;
      for (const auto& r : p.relators)
        if (is_commutator_of(cyclic_reduce(r), i, j)) found = true;
      if (!found) return false;
    }
  return true;
}

std::int64_t torsion_order(const AbelianInvariants& a) {
  std::int64_t n = 1;
  for (auto t : a.torsion) {
    if (__builtin_mul_overflow(n, t, &n)) return -1;
  }
  return n;
}

void evidence_free(GroupEvidence& e, int rank, const std::string& what) {
  const std::string why = what + " is free of rank " + std::to_string(rank);
  e.out.push_back({GroupClass::of(ClassKind::Amenable), why + ", not amenable"});
  e.out.push_back({GroupClass::exp_below(log3_lower_bound().value),
                   why + ", uniform exponential growth rate >= log 3 > 549/500"});
}

void check_consistent(const GroupEvidence& e) {
  for (const auto& y : e.in)
    for (const auto& n : e.out)
      if (implies(y.cls, n.cls))
        throw std::logic_error("inconsistent group evidence: " + y.reason + " / " + n.reason);
}

}  // namespace

int surface_genus(const GroupPresentation& p) {
  if (p.relators.size() != 1) return 0;
  const Word w = cyclic_reduce(p.relators[0]);
  const int n = p.generator_count;
  if (n < 2 || w.size() != static_cast<std::size_t>(2 * n)) return 0;
  std::vector<std::vector<std::size_t>> pos(static_cast<std::size_t>(n) + 1);
  for (std::size_t i = 0; i < w.size(); ++i) pos[static_cast<std::size_t>(std::abs(w[i]))].push_back(i);
  const std::size_t len = w.size();
  std::vector<std::size_t> parent(len);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  auto unite = [&](std::size_t a, std::size_t b) { parent[find(a)] = find(b); };
  // edge of letter i runs from corner i to corner i+1, reversed for inverse letters
  auto tail = [&](std::size_t i) { return w[i] > 0 ? i : (i + 1) % len; };
  auto head = [&](std::size_t i) { return w[i] > 0 ? (i + 1) % len : i; };
  for (int g = 1; g <= n; ++g) {
    const auto& ps = pos[static_cast<std::size_t>(g)];
    if (ps.size() != 2 || w[ps[0]] != -w[ps[1]]) return 0;
    unite(tail(ps[0]), tail(ps[1]));
    unite(head(ps[0]), head(ps[1]));
  }
  std::set<std::size_t> classes;
  for (std::size_t i = 0; i < len; ++i) classes.insert(find(i));
  if (classes.size() != 1) return 0;
  return n / 2;
}

GroupEvidence group_evidence(const GroupPresentation& p, const Budget& budget) {
  GroupEvidence e;
  const auto simp = simplify_with_substitution(p, budget.tietze_moves);
  const auto& s = simp.presentation;
  const std::string simp_note = "simplified to " + std::to_string(s.generator_count) +
                                " generators, " + std::to_string(s.relators.size()) + " relators";

  if (p.generator_count == 0 || s.generator_count == 0) {
    e.in.push_back({GroupClass::of(ClassKind::Trivial),
                    p.generator_count == 0 ? "no generators" : simp_note + ": trivial group"});
  } else if (p.generator_count == 1 || s.generator_count == 1) {
    e.in.push_back({GroupClass::of(ClassKind::Abelian),
                    (p.generator_count == 1 ? std::string("one generator") : simp_note) +
                        ": cyclic, hence abelian"});
  }

  const auto ab = abelianization(p);
  if (ab.rank > 0 || !ab.torsion.empty()) {
    e.out.push_back({GroupClass::of(ClassKind::Trivial), "abelianization is nontrivial"});
  }
  if (ab.rank > 0) {
    e.out.push_back({GroupClass::of(ClassKind::Finite),
                     "abelianization has rank " + std::to_string(ab.rank) + ", group is infinite"});
  } else {
    auto tc = todd_coxeter(s, {}, budget.max_cosets);
    if (auto* idx = std::get_if<CosetIndex>(&tc)) {
      const std::string order = "coset enumeration: order " + std::to_string(idx->index);
      if (idx->index == 1) {
        e.in.push_back({GroupClass::of(ClassKind::Trivial), order});
      } else {
        e.in.push_back({GroupClass::of(ClassKind::Finite), order});
        e.out.push_back({GroupClass::of(ClassKind::Trivial), order});
        if (torsion_order(ab) == idx->index)
          e.in.push_back({GroupClass::of(ClassKind::Abelian), order + " equals the order of the abelianization"});
        else
          e.out.push_back({GroupClass::of(ClassKind::Abelian), order + " exceeds the order of the abelianization"});
      }
    }
  }

  if (s.generator_count >= 2 && all_commutators_present(s))
    e.in.push_back({GroupClass::of(ClassKind::Abelian), simp_note + ": every generator pair commutes"});
  if (s.generator_count >= 2 && s.relators.empty()) evidence_free(e, s.generator_count, "group");

  const int genus = surface_genus(s);
  if (genus >= 2)
    e.out.push_back({GroupClass::of(ClassKind::Amenable),
                     "surface group of genus " + std::to_string(genus) +
                         " [axiom: closed hyperbolic surface groups are not amenable]"});
  check_consistent(e);
  return e;
}

Verdict decide(const GroupEvidence& e, const GroupClass& c) {
  Verdict v;
  for (const auto& y : e.in)
    if (implies(y.cls, c)) {
      v.answer = Answer::Yes;
      v.trace.push_back(y.reason + " => " + c.descriptor());
      return v;
    }
  for (const auto& n : e.out)
    if (implies(c, n.cls)) {
      v.answer = Answer::No;
      v.trace.push_back(n.reason + " => not " + c.descriptor());
      return v;
    }
  v.trace.push_back("no rule applies for " + c.descriptor());
  return v;
}

Verdict classify_group(const GroupPresentation& p, const GroupClass& c, const Budget& budget) {
  return decide(group_evidence(p, budget), c);
}

// ---------------------------------------------------------------------------

int free_subgroup_rank(const std::vector<Word>& words) {
  // edges (u, letter > 0, v); vertex 0 is the base
  std::vector<std::array<int, 3>> edges;
  int vertices = 1;
  for (const auto& raw : words) {
    const Word w = free_reduce(raw);
    if (w.empty()) continue;
    int cur = 0;
    for (std::size_t i = 0; i < w.size(); ++i) {
      const int next = (i + 1 == w.size()) ? 0 : vertices++;
      if (w[i] > 0) edges.push_back({cur, w[i], next});
      else edges.push_back({next, -w[i], cur});
      cur = next;
    }
  }
  std::vector<int> parent(static_cast<std::size_t>(vertices));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int a) {
    while (parent[static_cast<std::size_t>(a)] != a)
      a = parent[static_cast<std::size_t>(a)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(a)])];
    return a;
  };
  bool changed = true;
  while (changed) {
    changed = false;
    std::map<std::pair<int, int>, int> out;  // (vertex, +label) -> head, (vertex, -label) -> tail
    for (const auto& e : edges) {
      const int u = find(e[0]), v = find(e[2]);
      for (auto [key, val] : {std::pair{std::pair{u, e[1]}, v}, std::pair{std::pair{v, -e[1]}, u}}) {
        auto [it, fresh] = out.emplace(key, val);
        if (!fresh && find(it->second) != find(val)) {
          parent[static_cast<std::size_t>(find(val))] = find(it->second);
          changed = true;
        }
      }
    }
  }
  std::set<std::array<int, 3>> folded;
  std::set<int> used{find(0)};
  for (const auto& e : edges) {
    folded.insert({find(e[0]), e[1], find(e[2])});
    used.insert(find(e[0]));
    used.insert(find(e[2]));
  }
  return static_cast<int>(folded.size()) - static_cast<int>(used.size()) + 1;
}

AmbientGroup AmbientGroup::make(const GroupPresentation& p, const Budget& budget) {
  return AmbientGroup{p, group_evidence(p, budget), simplify_with_substitution(p, budget.tietze_moves)};
}

Verdict classify_image(const ComponentImage& image, const GroupPresentation& ambient,
                       const GroupClass& c, const Budget& budget) {
  return classify_image(image, AmbientGroup::make(ambient, budget), c, budget);
}

Verdict classify_image(const ComponentImage& image, const AmbientGroup& amb_group,
                       const GroupClass& c, const Budget& budget) {
  const GroupPresentation& ambient = amb_group.presentation;
  const bool trivial = std::all_of(image.generators.begin(), image.generators.end(),
                                   [](const Word& w) { return free_reduce(w).empty(); });
  if (trivial) return Verdict{Answer::Yes, {"image is trivial"}};

  GroupEvidence e;
  // quotient closure: the image is a quotient of the subspace group
  auto own = decide(group_evidence(image.presentation, budget), c);
  if (own.answer == Answer::Yes) {
    own.trace.insert(own.trace.begin(), "subspace group (the image is a quotient of it):");
    return own;
  }
  if (c.subgroup_closed()) {
    auto amb = decide(amb_group.evidence, c);
    if (amb.answer == Answer::Yes) {
      amb.trace.insert(amb.trace.begin(), "ambient group (the image is a subgroup of it):");
      return amb;
    }
  }

  // an image that is the whole ambient group inherits everything known about it
  {
    std::set<int> hit;
    for (const auto& w : image.generators) {
      const Word r = free_reduce(w);
      if (r.size() == 1) hit.insert(std::abs(r[0]));
    }
    bool whole = static_cast<int>(hit.size()) == ambient.generator_count;
    std::string why = "image contains every ambient generator";
    if (!whole) {
      auto tc = todd_coxeter(ambient, image.generators, budget.max_cosets);
      if (auto* idx = std::get_if<CosetIndex>(&tc); idx && idx->index == 1) {
        whole = true;
        why = "coset enumeration: image has index 1";
      }
    }
    if (whole) {
      auto v = decide(amb_group.evidence, c);
      v.trace.insert(v.trace.begin(), why + "; ambient group:");
      return v;
    }
  }

  const auto& simp = amb_group.simplified;
  if (simp.presentation.relators.empty()) {
    std::vector<Word> mapped;
    for (const auto& w : image.generators) mapped.push_back(apply_substitution(w, simp.substitution));
    const int rank = free_subgroup_rank(mapped);
    const std::string why = "ambient is free; folded image has rank " + std::to_string(rank);
    if (rank == 0) {
      e.in.push_back({GroupClass::of(ClassKind::Trivial), why});
    } else if (rank == 1) {
      e.in.push_back({GroupClass::of(ClassKind::Abelian), why + ", infinite cyclic"});
      e.out.push_back({GroupClass::of(ClassKind::Finite), why + ", infinite cyclic"});
    } else {
      evidence_free(e, rank, "image");
    }
  }

  // rank of the image in H_1(ambient) ⊗ Q
  std::vector<std::map<int, std::int64_t>> rows;
  for (const auto& r : ambient.relators) {
    auto row = exponent_row(r);
    if (!row.empty()) rows.push_back(std::move(row));
  }
  const auto base = smith_invariants(ambient.generator_count, rows).size();
  for (const auto& w : image.generators) {
    auto row = exponent_row(w);
    if (!row.empty()) rows.push_back(std::move(row));
  }
  const auto with_image = smith_invariants(ambient.generator_count, rows).size();
  if (with_image > base) {
    e.out.push_back({GroupClass::of(ClassKind::Finite),
                     "image has rank " + std::to_string(with_image - base) +
                         " in the ambient abelianization, so it is infinite"});
  }
  check_consistent(e);
  auto v = decide(e, c);
  if (v.answer == Answer::Unknown && own.answer == Answer::Unknown)
    v.trace.insert(v.trace.begin(), own.trace.begin(), own.trace.end());
  return v;
}

Verdict classify_image(const Pi1Image& image, const GroupClass& c, const Budget& budget) {
  Verdict out{Answer::Yes, {}};
  const auto amb = AmbientGroup::make(image.ambient, budget);
  for (std::size_t i = 0; i < image.components.size(); ++i) {
    auto v = classify_image(image.components[i], amb, c, budget);
    for (auto& t : v.trace) out.trace.push_back("component " + std::to_string(i) + ": " + t);
    if (v.answer == Answer::No) out.answer = Answer::No;
    else if (v.answer == Answer::Unknown && out.answer == Answer::Yes) out.answer = Answer::Unknown;
  }
  return out;
}

}  // namespace gcat
