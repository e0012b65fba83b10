#include "gcat/covers.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "gcat/error.hpp"

namespace gcat {

namespace {

std::string show(const VertexSet& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
  return out + "}";
}

VertexSet merged(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

}  // namespace

bool is_partition(const std::vector<VertexSet>& pieces) {
  std::set<Vertex> seen;
  for (const auto& p : pieces)
    for (Vertex v : p)
      if (!seen.insert(v).second) return false;
  return true;
}

VertexCover VertexCover::make(SimplicialComplex complex, std::vector<VertexSet> pieces, bool partition) {
  std::vector<bool> covered(static_cast<std::size_t>(complex.vertex_count()), false);
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    auto& p = pieces[i];
    std::sort(p.begin(), p.end());
    p.erase(std::unique(p.begin(), p.end()), p.end());
    if (p.empty()) throw MalformedInput("cover piece " + std::to_string(i) + " is empty");
    for (Vertex v : p) {
      if (v < 0 || v >= complex.vertex_count())
        throw MalformedInput("cover piece " + std::to_string(i) + " references unknown vertex " +
                             std::to_string(v));
      covered[static_cast<std::size_t>(v)] = true;
    }
  }
  for (std::size_t v = 0; v < covered.size(); ++v)
    if (!covered[v]) throw MalformedInput("cover misses vertex " + std::to_string(v));
  if (partition && !is_partition(pieces)) throw MalformedInput("cover marked as partition has overlapping pieces");
  return VertexCover{std::move(complex), std::move(pieces), partition};
}

PieceValidator::PieceValidator(SimplicialComplex x, GroupClass c, Budget budget)
    : x_(std::move(x)), class_(c), budget_(budget) {
  std::vector<bool> done(static_cast<std::size_t>(x_.component_count()), false);
  presentations_.resize(done.size());
  for (Vertex v = 0; v < x_.vertex_count(); ++v) {
    const auto label = static_cast<std::size_t>(x_.component_labels()[static_cast<std::size_t>(v)]);
    if (done[label]) continue;
    done[label] = true;
    presentations_[label] = edge_path_presentation(x_, v);
  }
  for (const auto& p : presentations_) ambients_.push_back(AmbientGroup::make(p.group, budget_));
}

Verdict PieceValidator::validate(const VertexSet& piece) const {
  std::map<int, VertexSet> by_component;
  for (Vertex v : piece) {
    if (v < 0 || v >= x_.vertex_count())
      throw MalformedInput("piece references unknown vertex " + std::to_string(v));
    by_component[x_.component_labels()[static_cast<std::size_t>(v)]].push_back(v);
  }
  Verdict out{Answer::Yes, {}};
  for (const auto& [label, part] : by_component) {
    const auto l = static_cast<std::size_t>(label);
    auto image = inclusion_image(x_, part, presentations_[l]);
    for (const auto& comp : image.components) {
      auto v = classify_image(comp, ambients_[l], class_, budget_);
      const std::string where = "component " + show(comp.vertices) + ": ";
      for (auto& t : v.trace) out.trace.push_back(where + t);
      if (v.answer == Answer::No) out.answer = Answer::No;
      else if (v.answer == Answer::Unknown && out.answer == Answer::Yes) out.answer = Answer::Unknown;
    }
  }
  return out;
}

bool is_collapsible(const SimplicialComplex& x) {
  if (!x.connected()) return false;
  std::set<Simplex> alive(x.simplices().begin(), x.simplices().end());
  bool progress = true;
  while (alive.size() > 1 && progress) {
    progress = false;
    for (auto it = alive.begin(); it != alive.end() && !progress; ++it) {
      const Simplex& t = *it;
      const Simplex* only = nullptr;
      int cofaces = 0;
      for (const auto& s : alive)
        if (s.size() > t.size() && std::includes(s.begin(), s.end(), t.begin(), t.end())) {
          ++cofaces;
          only = &s;
        }
      if (cofaces == 1 && only->size() == t.size() + 1) {
        const Simplex top = *only;
        const Simplex face = t;
        alive.erase(top);
        alive.erase(face);
        progress = true;
      }
    }
  }
  return alive.size() == 1;
}

bool collapsible_pieces(const VertexCover& c) {
  for (const auto& p : c.pieces) {
    auto sub = full_subcomplex(c.complex, p).complex;
    std::vector<VertexSet> parts(static_cast<std::size_t>(sub.component_count()));
    for (Vertex v = 0; v < sub.vertex_count(); ++v)
      parts[static_cast<std::size_t>(sub.component_labels()[static_cast<std::size_t>(v)])].push_back(v);
    for (const auto& q : parts)
      if (!is_collapsible(full_subcomplex(sub, q).complex)) return false;
  }
  return true;
}

CoverValidation validate_cover(const VertexCover& c, const GroupClass& cls, const Budget& budget) {
  PieceValidator validator(c.complex, cls, budget);
  CoverValidation out;
  out.overall.answer = Answer::Yes;
  for (std::size_t i = 0; i < c.pieces.size(); ++i) {
    auto v = validator.validate(c.pieces[i]);
    out.overall.trace.push_back("piece " + std::to_string(i) + ": " + to_string(v.answer));
    if (v.answer == Answer::No) out.overall.answer = Answer::No;
    else if (v.answer == Answer::Unknown && out.overall.answer == Answer::Yes)
      out.overall.answer = Answer::Unknown;
    out.pieces.push_back(std::move(v));
  }
  return out;
}

NerveResult multiplicity_and_nerve(const VertexCover& c) {
  std::vector<std::vector<int>> pieces_of(static_cast<std::size_t>(c.complex.vertex_count()));
  for (std::size_t i = 0; i < c.pieces.size(); ++i)
    for (Vertex v : c.pieces[i]) pieces_of[static_cast<std::size_t>(v)].push_back(static_cast<int>(i));
  std::set<Simplex> faces;
  int mult = 0;
  for (const auto& s : c.complex.simplices()) {
    std::set<int> meet;
    for (Vertex v : s) meet.insert(pieces_of[static_cast<std::size_t>(v)].begin(),
                                   pieces_of[static_cast<std::size_t>(v)].end());
    mult = std::max(mult, static_cast<int>(meet.size()));
    faces.insert(Simplex(meet.begin(), meet.end()));
  }
  NerveResult out;
  out.multiplicity = mult;
  out.nerve = faces.empty() ? SimplicialComplex()
                            : SimplicialComplex::from_maximal({faces.begin(), faces.end()},
                                                              c.complex.name() + "_nerve");
  if (c.partition) {
    std::vector<Vertex> map(static_cast<std::size_t>(c.complex.vertex_count()));
    for (std::size_t v = 0; v < map.size(); ++v) map[v] = pieces_of[v].front();
    out.index_map.emplace(c.complex, out.nerve, std::move(map));
  }
  return out;
}

StarsCover stars_cover(const SimplicialComplex& x) {
  auto sd = barycentric_subdivision(x);
  std::vector<VertexSet> pieces(static_cast<std::size_t>(std::max(x.dim() + 1, 0)));
  for (std::size_t i = 0; i < sd.carrier.size(); ++i)
    pieces[sd.carrier[i].size() - 1].push_back(static_cast<Vertex>(i));
  auto cover = VertexCover::make(sd.subdivided, std::move(pieces), true);
  return StarsCover{std::move(sd), std::move(cover)};
}

// ---------------------------------------------------------------------------

namespace {

CatUpperResult finish(VertexCover cover, const GroupClass& c, const Budget& budget,
                      std::vector<std::string> trace) {
  CatUpperResult r;
  r.validation = validate_cover(cover, c, budget);
  r.bound = static_cast<int>(cover.size());
  r.witness = std::move(cover);
  r.trace = std::move(trace);
  return r;
}

CatUpperResult stars_strategy(const SimplicialComplex& x, const GroupClass& c, const Budget& budget) {
  auto s = stars_cover(x);
  return finish(std::move(s.cover), c, budget,
                {"stars cover of the barycentric subdivision: " + std::to_string(x.dim() + 1) + " pieces"});
}

CatUpperResult greedy_strategy(const SimplicialComplex& x, const GroupClass& c, const Budget& budget,
                               const CatOptions& options) {
  auto base = iterated_subdivision(x, std::max(options.greedy_subdivisions - 1, 0));
  auto s = stars_cover(base);
  PieceValidator validator(s.cover.complex, c, budget);
  std::map<VertexSet, Answer> cache;
  auto verdict = [&](const VertexSet& p) {
    auto it = cache.find(p);
    if (it != cache.end()) return it->second;
    return cache[p] = validator.validate(p).answer;
  };
  std::vector<std::string> trace{"start: stars partition with " + std::to_string(s.cover.size()) + " pieces"};
  auto pieces = s.cover.pieces;
  for (const auto& p : pieces)
    if (verdict(p) != Answer::Yes) throw std::logic_error("stars piece failed validation");
  bool merged_any = true;
  while (merged_any) {
    merged_any = false;
    for (std::size_t i = 0; i < pieces.size() && !merged_any; ++i)
      for (std::size_t j = i + 1; j < pieces.size() && !merged_any; ++j) {
        auto u = merged(pieces[i], pieces[j]);
        const Answer a = verdict(u);
        if (a == Answer::Yes) {
          trace.push_back("merge " + std::to_string(i) + "+" + std::to_string(j));
          pieces[i] = std::move(u);
          pieces.erase(pieces.begin() + static_cast<long>(j));
          merged_any = true;
        } else if (a == Answer::Unknown) {
          trace.push_back("merge " + std::to_string(i) + "+" + std::to_string(j) + " rejected (unknown)");
        }
      }
  }
  std::sort(pieces.begin(), pieces.end());
  trace.push_back("result: " + std::to_string(pieces.size()) + " pieces");
  return finish(VertexCover::make(s.cover.complex, std::move(pieces), true), c, budget, std::move(trace));
}

CatUpperResult exact_strategy(const SimplicialComplex& x, const GroupClass& c, const Budget& budget,
                              const CatOptions& options) {
  const int n = x.vertex_count();
  if (n > options.exact_vertex_cap)
    throw UnsupportedInput("exact search allows at most " + std::to_string(options.exact_vertex_cap) +
                           " vertices, complex has " + std::to_string(n));
  PieceValidator validator(x, c, budget);
  std::map<VertexSet, Answer> cache;
  bool unknown_seen = false;
  auto verdict = [&](const VertexSet& p) {
    auto it = cache.find(p);
    Answer a = it != cache.end() ? it->second : (cache[p] = validator.validate(p).answer);
    if (a == Answer::Unknown) unknown_seen = true;
    return a;
  };
  std::vector<int> block(static_cast<std::size_t>(n), 0);
  for (int k = 1; k <= n; ++k) {
    std::optional<std::vector<VertexSet>> found;
    std::function<void(int, int)> rec = [&](int v, int used) {
      if (found) return;
      if (n - v < k - used) return;
      if (v == n) {
        if (used != k) return;
        std::vector<VertexSet> parts(static_cast<std::size_t>(k));
        for (int u = 0; u < n; ++u) parts[static_cast<std::size_t>(block[static_cast<std::size_t>(u)])].push_back(u);
        for (const auto& p : parts)
          if (verdict(p) != Answer::Yes) return;
        found = std::move(parts);
        return;
      }
      for (int b = 0; b <= std::min(used, k - 1); ++b) {
        block[static_cast<std::size_t>(v)] = b;
        rec(v + 1, std::max(used, b + 1));
        if (found) return;
      }
    };
    rec(0, 0);
    if (found) {
      std::sort(found->begin(), found->end());
      auto r = finish(VertexCover::make(x, std::move(*found), true), c, budget,
                      {"exhaustive search over vertex partitions: first success at " + std::to_string(k) +
                       " parts"});
      r.minimal = !unknown_seen;
      r.trace.push_back(r.minimal ? "no unknown verdicts: minimal among vertex partitions"
                                  : "unknown verdicts seen below this size: not claimed minimal");
      return r;
    }
  }
  throw std::logic_error("singleton partition failed validation");
}

}  // namespace

CatUpperResult cat_upper(const SimplicialComplex& x, const GroupClass& c, const std::string& strategy,
                         const Budget& budget, const CatOptions& options) {
  if (x.empty()) throw UnsupportedInput("cat bounds need a nonempty complex");
  if (!x.connected()) throw UnsupportedInput("cat bounds need a connected complex");
  if (strategy == "stars") return stars_strategy(x, c, budget);
  if (strategy == "greedy") return greedy_strategy(x, c, budget, options);
  if (strategy == "exact") return exact_strategy(x, c, budget, options);
  throw MalformedInput("unknown strategy '" + strategy + "' (stars, greedy, exact)");
}

CatLowerResult cat_lower(const SimplicialComplex& x, const GroupClass& c, const Budget& budget) {
  if (x.empty()) throw UnsupportedInput("cat bounds need a nonempty complex");
  if (!x.connected()) throw UnsupportedInput("cat bounds need a connected complex");
  CatLowerResult r;
  r.verdict = classify_group(edge_path_presentation(x, 0).group, c, budget);
  r.bound = r.verdict.answer == Answer::No ? 2 : 1;
  return r;
}

}  // namespace gcat
