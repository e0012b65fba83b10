#include "gcat/complex.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>

#include "gcat/error.hpp"

namespace gcat {

namespace {

std::string show(const Simplex& s) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < s.size(); ++i) os << (i ? "," : "") << s[i];
  os << ']';
  return os.str();
}

// Every nonempty subset of s, appended to out.
void append_faces(const Simplex& s, std::vector<Simplex>& out) {
  const std::size_t n = s.size();
  const std::size_t total = std::size_t{1} << n;
  for (std::size_t mask = 1; mask < total; ++mask) {
    Simplex face;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (std::size_t{1} << i)) face.push_back(s[i]);
    out.push_back(std::move(face));
  }
}

}  // namespace

bool simplex_less(const Simplex& a, const Simplex& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

struct SimplicialComplex::Data {
  std::string name;
  int vertex_count = 0;
  std::vector<Simplex> simplices;
  // dim_offsets[k] = index of the first k-simplex; size dim + 2.
  std::vector<std::size_t> dim_offsets;
  std::vector<std::vector<Vertex>> neighbours;
  std::vector<int> components;
  int component_count = 0;
};

SimplicialComplex::SimplicialComplex()
    : SimplicialComplex(finish(0, {}, "empty")) {}

SimplicialComplex::SimplicialComplex(std::shared_ptr<const Data> data)
    : data_(std::move(data)) {}

SimplicialComplex SimplicialComplex::finish(int vertex_count, std::vector<Simplex> simplices,
                                            std::string name) {
  auto d = std::make_shared<Data>();
  d->name = std::move(name);
  d->vertex_count = vertex_count;
  std::sort(simplices.begin(), simplices.end(), simplex_less);
  simplices.erase(std::unique(simplices.begin(), simplices.end()), simplices.end());
  d->simplices = std::move(simplices);

  std::size_t max_size = d->simplices.empty() ? 0 : d->simplices.back().size();
  d->dim_offsets.assign(max_size + 1, 0);
  for (std::size_t k = 0; k <= max_size; ++k) {
    d->dim_offsets[k] = static_cast<std::size_t>(
        std::lower_bound(d->simplices.begin(), d->simplices.end(), k + 1,
                         [](const Simplex& s, std::size_t sz) { return s.size() < sz; }) -
        d->simplices.begin());
  }

  d->neighbours.assign(static_cast<std::size_t>(vertex_count), {});
  for (const auto& s : d->simplices) {
    if (s.size() != 2) continue;
    d->neighbours[static_cast<std::size_t>(s[0])].push_back(s[1]);
    d->neighbours[static_cast<std::size_t>(s[1])].push_back(s[0]);
  }
  for (auto& n : d->neighbours) std::sort(n.begin(), n.end());

  d->components.assign(static_cast<std::size_t>(vertex_count), -1);
  for (Vertex v = 0; v < vertex_count; ++v) {
    if (d->components[static_cast<std::size_t>(v)] >= 0) continue;
    const int label = d->component_count++;
    std::queue<Vertex> q;
    q.push(v);
    d->components[static_cast<std::size_t>(v)] = label;
    while (!q.empty()) {
      Vertex u = q.front();
      q.pop();
      for (Vertex w : d->neighbours[static_cast<std::size_t>(u)]) {
        if (d->components[static_cast<std::size_t>(w)] < 0) {
          d->components[static_cast<std::size_t>(w)] = label;
          q.push(w);
        }
      }
    }
  }
  return SimplicialComplex(std::move(d));
}

SimplicialComplex SimplicialComplex::from_maximal(std::vector<Simplex> generators,
                                                  std::string name) {
  Vertex max_vertex = -1;
  std::vector<Simplex> all;
  for (auto& g : generators) {
    if (g.empty()) throw MalformedInput("empty simplex in generating list");
    std::sort(g.begin(), g.end());
    if (std::adjacent_find(g.begin(), g.end()) != g.end())
      throw MalformedInput("duplicate vertex inside simplex " + show(g));
    if (g.front() < 0) throw MalformedInput("negative vertex index in simplex " + show(g));
    max_vertex = std::max(max_vertex, g.back());
    append_faces(g, all);
  }
  const int vertex_count = max_vertex + 1;
  std::vector<bool> seen(static_cast<std::size_t>(vertex_count), false);
  for (const auto& s : all)
    if (s.size() == 1) seen[static_cast<std::size_t>(s[0])] = true;
  for (Vertex v = 0; v < vertex_count; ++v)
    if (!seen[static_cast<std::size_t>(v)])
      throw MalformedInput("phantom vertex " + std::to_string(v) + " (in no simplex)");
  return finish(vertex_count, std::move(all), std::move(name));
}

SimplicialComplex SimplicialComplex::from_simplices(int vertex_count,
                                                    std::vector<Simplex> simplices,
                                                    std::string name) {
  if (vertex_count < 0) throw MalformedInput("negative vertex_count");
  for (const auto& s : simplices) {
    if (s.empty()) throw MalformedInput("empty simplex");
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (s[i] < 0 || s[i] >= vertex_count)
        throw MalformedInput("index bound: vertex " + std::to_string(s[i]) + " of simplex " +
                             show(s) + " outside [0, " + std::to_string(vertex_count) + ")");
      if (i > 0 && s[i - 1] >= s[i])
        throw MalformedInput("simplex " + show(s) + " not strictly increasing");
    }
  }
  std::set<Simplex> present(simplices.begin(), simplices.end());
  for (const auto& s : simplices) {
    if (s.size() < 2) continue;
    for (std::size_t drop = 0; drop < s.size(); ++drop) {
      Simplex face;
      for (std::size_t i = 0; i < s.size(); ++i)
        if (i != drop) face.push_back(s[i]);
      if (!present.count(face))
        throw MalformedInput("face closure: face " + show(face) + " of " + show(s) +
                             " missing");
    }
  }
  for (Vertex v = 0; v < vertex_count; ++v)
    if (!present.count(Simplex{v}))
      throw MalformedInput("phantom vertex " + std::to_string(v) + " (in no simplex)");
  return finish(vertex_count, std::move(simplices), std::move(name));
}

const std::string& SimplicialComplex::name() const { return data_->name; }

SimplicialComplex SimplicialComplex::renamed(std::string name) const {
  auto d = std::make_shared<Data>(*data_);
  d->name = std::move(name);
  return SimplicialComplex(std::move(d));
}

int SimplicialComplex::vertex_count() const { return data_->vertex_count; }

int SimplicialComplex::dim() const {
  return data_->simplices.empty() ? -1 : static_cast<int>(data_->simplices.back().size()) - 1;
}

const std::vector<Simplex>& SimplicialComplex::simplices() const { return data_->simplices; }

std::span<const Simplex> SimplicialComplex::simplices_of_dim(int k) const {
  if (k < 0 || k > dim()) return {};
  const auto& off = data_->dim_offsets;
  const auto k1 = static_cast<std::size_t>(k) + 1;
  const std::size_t begin = off[k1 - 1];
  const std::size_t end = off[k1];
  return std::span<const Simplex>(data_->simplices).subspan(begin, end - begin);
}

std::vector<std::size_t> SimplicialComplex::f_vector() const {
  std::vector<std::size_t> f;
  for (int k = 0; k <= dim(); ++k) f.push_back(simplices_of_dim(k).size());
  return f;
}

std::optional<std::size_t> SimplicialComplex::index_of(const Simplex& s) const {
  const auto& all = data_->simplices;
  auto it = std::lower_bound(all.begin(), all.end(), s, simplex_less);
  if (it == all.end() || *it != s) return std::nullopt;
  return static_cast<std::size_t>(it - all.begin());
}

bool SimplicialComplex::contains(const Simplex& s) const { return index_of(s).has_value(); }

std::vector<Simplex> SimplicialComplex::maximal_simplices() const {
  // A simplex is maximal iff no simplex one dimension up contains it.
  std::set<Simplex> covered;
  for (int k = 1; k <= dim(); ++k) {
    for (const auto& s : simplices_of_dim(k)) {
      for (std::size_t drop = 0; drop < s.size(); ++drop) {
        Simplex face;
        for (std::size_t i = 0; i < s.size(); ++i)
          if (i != drop) face.push_back(s[i]);
        covered.insert(std::move(face));
      }
    }
  }
  std::vector<Simplex> out;
  for (const auto& s : data_->simplices)
    if (!covered.count(s)) out.push_back(s);
  return out;
}

bool SimplicialComplex::is_pure() const {
  for (const auto& s : maximal_simplices())
    if (static_cast<int>(s.size()) - 1 != dim()) return false;
  return true;
}

const std::vector<std::vector<Vertex>>& SimplicialComplex::neighbours() const {
  return data_->neighbours;
}

const std::vector<int>& SimplicialComplex::component_labels() const { return data_->components; }

int SimplicialComplex::component_count() const { return data_->component_count; }

long long euler_characteristic(const SimplicialComplex& x) {
  long long chi = 0;
  for (int k = 0; k <= x.dim(); ++k) {
    const auto n = static_cast<long long>(x.simplices_of_dim(k).size());
    chi += (k % 2 == 0) ? n : -n;
  }
  return chi;
}

// ---------------------------------------------------------------------------

SimplicialMap::SimplicialMap(SimplicialComplex source, SimplicialComplex target,
                             std::vector<Vertex> vertex_map)
    : source_(std::move(source)), target_(std::move(target)), vertex_map_(std::move(vertex_map)) {
  if (static_cast<int>(vertex_map_.size()) != source_.vertex_count())
    throw MalformedInput("vertex_map has length " + std::to_string(vertex_map_.size()) +
                         ", source has " + std::to_string(source_.vertex_count()) + " vertices");
  for (Vertex v : vertex_map_)
    if (v < 0 || v >= target_.vertex_count())
      throw MalformedInput("vertex_map entry " + std::to_string(v) + " outside target range");
  for (const auto& s : source_.maximal_simplices()) {
    Simplex img = image(s);
    if (!target_.contains(img))
      throw MalformedInput("simplicial map: image " + show(img) + " of " + show(s) +
                           " is not a simplex of the target");
  }
}

Simplex SimplicialMap::image(const Simplex& s) const {
  Simplex img;
  img.reserve(s.size());
  for (Vertex v : s) img.push_back(vertex_map_[static_cast<std::size_t>(v)]);
  std::sort(img.begin(), img.end());
  img.erase(std::unique(img.begin(), img.end()), img.end());
  return img;
}

bool SimplicialMap::is_bijective() const {
  if (source_.vertex_count() != target_.vertex_count()) return false;
  std::vector<bool> hit(static_cast<std::size_t>(target_.vertex_count()), false);
  for (Vertex v : vertex_map_) {
    if (hit[static_cast<std::size_t>(v)]) return false;
    hit[static_cast<std::size_t>(v)] = true;
  }
  return true;
}

SimplicialMap identity_map(const SimplicialComplex& x) {
  std::vector<Vertex> id(static_cast<std::size_t>(x.vertex_count()));
  std::iota(id.begin(), id.end(), 0);
  return SimplicialMap(x, x, std::move(id));
}

// ---------------------------------------------------------------------------

Vertex SubdivisionCarrier::barycenter(const Simplex& s) const {
  auto idx = original.index_of(s);
  if (!idx) throw MalformedInput("not a simplex of the original complex: " + show(s));
  return static_cast<Vertex>(*idx);
}

SubdivisionCarrier barycentric_subdivision(const SimplicialComplex& x) {
  // Maximal chains inside a maximal simplex correspond to vertex orderings.
  std::vector<Simplex> chains;
  for (const auto& sigma : x.maximal_simplices()) {
    Simplex order = sigma;
    do {
      Simplex chain;
      Simplex prefix;
      for (Vertex v : order) {
        prefix.insert(std::upper_bound(prefix.begin(), prefix.end(), v), v);
        chain.push_back(static_cast<Vertex>(*x.index_of(prefix)));
      }
      std::sort(chain.begin(), chain.end());
      chains.push_back(std::move(chain));
    } while (std::next_permutation(order.begin(), order.end()));
  }
  SubdivisionCarrier out{x, SimplicialComplex(), x.simplices()};
  if (!chains.empty()) out.subdivided = SimplicialComplex::from_maximal(std::move(chains), x.name() + "_sd");
  else out.subdivided = x;
  return out;
}

SimplicialComplex iterated_subdivision(const SimplicialComplex& x, int n) {
  SimplicialComplex cur = x;
  for (int i = 0; i < n; ++i) cur = barycentric_subdivision(cur).subdivided;
  return cur;
}

SubdividedMap subdivide_map(const SimplicialMap& f) {
  auto src = barycentric_subdivision(f.source());
  auto tgt = barycentric_subdivision(f.target());
  std::vector<Vertex> vm;
  vm.reserve(src.carrier.size());
  for (const auto& sigma : src.carrier) vm.push_back(tgt.barycenter(f.image(sigma)));
  SimplicialMap map(src.subdivided, tgt.subdivided, std::move(vm));
  return SubdividedMap{std::move(src), std::move(tgt), std::move(map)};
}

InducedSubcomplex full_subcomplex(const SimplicialComplex& x, VertexSet s) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  for (Vertex v : s)
    if (v < 0 || v >= x.vertex_count())
      throw MalformedInput("vertex " + std::to_string(v) + " not in complex " + x.name());
  std::vector<Vertex> to_new(static_cast<std::size_t>(x.vertex_count()), -1);
  for (std::size_t i = 0; i < s.size(); ++i) to_new[static_cast<std::size_t>(s[i])] = static_cast<Vertex>(i);
  std::vector<Simplex> kept;
  for (const auto& sigma : x.simplices()) {
    Simplex t;
    bool inside = true;
    for (Vertex v : sigma) {
      Vertex w = to_new[static_cast<std::size_t>(v)];
      if (w < 0) {
        inside = false;
        break;
      }
      t.push_back(w);
    }
    if (inside) kept.push_back(std::move(t));
  }
  InducedSubcomplex out;
  out.to_parent = s;
  out.complex = kept.empty() ? SimplicialComplex()
                             : SimplicialComplex::from_maximal(std::move(kept), x.name() + "_sub");
  return out;
}

// ---------------------------------------------------------------------------

namespace {

// All monotone lattice paths through sigma x tau, as product vertex lists.
void staircase_paths(const Simplex& sigma, const Simplex& tau, int ny, std::size_t a,
                     std::size_t b, Simplex& path, std::vector<Simplex>& out) {
  path.push_back(sigma[a] * ny + tau[b]);
  if (a + 1 == sigma.size() && b + 1 == tau.size()) {
    Simplex s = path;
    std::sort(s.begin(), s.end());
    out.push_back(std::move(s));
  } else {
    if (a + 1 < sigma.size()) staircase_paths(sigma, tau, ny, a + 1, b, path, out);
    if (b + 1 < tau.size()) staircase_paths(sigma, tau, ny, a, b + 1, path, out);
  }
  path.pop_back();
}

}  // namespace

ProductComplex product(const SimplicialComplex& x, const SimplicialComplex& y) {
  const int ny = y.vertex_count();
  std::vector<Simplex> tops;
  const auto mx = x.maximal_simplices();
  const auto my = y.maximal_simplices();
  for (const auto& sigma : mx) {
    for (const auto& tau : my) {
      Simplex path;
      staircase_paths(sigma, tau, ny, 0, 0, path, tops);
    }
  }
  SimplicialComplex p = tops.empty()
                            ? SimplicialComplex()
                            : SimplicialComplex::from_maximal(std::move(tops), x.name() + "_x_" + y.name());
  std::vector<Vertex> pf, ps;
  for (Vertex a = 0; a < x.vertex_count(); ++a)
    for (Vertex b = 0; b < ny; ++b) {
      pf.push_back(a);
      ps.push_back(b);
    }
  SimplicialMap first(p, x, std::move(pf));
  SimplicialMap second(p, y, std::move(ps));
  return ProductComplex{p, std::move(first), std::move(second)};
}

WedgeComplex wedge(const std::vector<SimplicialComplex>& complexes,
                   const std::vector<Vertex>& basepoints) {
  if (complexes.size() != basepoints.size())
    throw MalformedInput("wedge needs one basepoint per complex");
  if (complexes.empty()) throw MalformedInput("wedge of no complexes");
  WedgeComplex out;
  std::vector<Simplex> tops;
  Vertex next = 0;
  Vertex shared = -1;
  std::string name;
  for (std::size_t i = 0; i < complexes.size(); ++i) {
    const auto& c = complexes[i];
    const Vertex bp = basepoints[i];
    if (bp < 0 || bp >= c.vertex_count())
      throw MalformedInput("basepoint " + std::to_string(bp) + " out of range for " + c.name());
    std::vector<Vertex> emb(static_cast<std::size_t>(c.vertex_count()));
    for (Vertex v = 0; v < c.vertex_count(); ++v) {
      if (i > 0 && v == bp) {
        emb[static_cast<std::size_t>(v)] = shared;
      } else {
        emb[static_cast<std::size_t>(v)] = next++;
      }
    }
    if (i == 0) shared = emb[static_cast<std::size_t>(bp)];
    for (const auto& s : c.maximal_simplices()) {
      Simplex t;
      for (Vertex v : s) t.push_back(emb[static_cast<std::size_t>(v)]);
      tops.push_back(std::move(t));
    }
    name += (i ? "_v_" : "") + c.name();
    out.embeddings.push_back(std::move(emb));
  }
  out.complex = SimplicialComplex::from_maximal(std::move(tops), complexes.size() == 1 ? complexes[0].name() : name);
  return out;
}

MappingTorus mapping_torus(const SimplicialMap& g, int layers) {
  const auto& x = g.source();
  if (!(x == g.target())) throw UnsupportedInput("mapping torus needs a self-map");
  if (layers < 3) throw UnsupportedInput("mapping torus needs at least 3 layers");
  if (!g.is_bijective()) throw UnsupportedInput("mapping torus needs a bijective vertex map");
  {
    std::vector<Vertex> inv(g.vertex_map().size());
    for (std::size_t v = 0; v < inv.size(); ++v)
      inv[static_cast<std::size_t>(g.vertex_map()[v])] = static_cast<Vertex>(v);
    try {
      SimplicialMap check(x, x, std::move(inv));
    } catch (const MalformedInput&) {
      throw UnsupportedInput("mapping torus needs a simplicial automorphism (inverse not simplicial)");
    }
  }
  const int n = x.vertex_count();
  auto at = [n](Vertex v, int level) { return level * n + v; };
  std::vector<Simplex> tops;
  for (int l = 0; l < layers; ++l) {
    const bool glue = (l == layers - 1);
    const int up = glue ? 0 : l + 1;
    for (const auto& sigma : x.maximal_simplices()) {
      for (std::size_t i = 0; i < sigma.size(); ++i) {
        Simplex s;
        for (std::size_t j = 0; j <= i; ++j) s.push_back(at(sigma[j], l));
        for (std::size_t j = i; j < sigma.size(); ++j)
          s.push_back(at(glue ? g(sigma[j]) : sigma[j], up));
        std::sort(s.begin(), s.end());
        tops.push_back(std::move(s));
      }
    }
  }
  auto total = SimplicialComplex::from_maximal(std::move(tops), "mt_" + x.name());
  auto base = cycle_complex(layers);
  std::vector<Vertex> proj(static_cast<std::size_t>(layers * n));
  for (int l = 0; l < layers; ++l)
    for (Vertex v = 0; v < n; ++v) proj[static_cast<std::size_t>(at(v, l))] = l;
  VertexSet fibre(static_cast<std::size_t>(n));
  std::iota(fibre.begin(), fibre.end(), 0);
  return MappingTorus{total, x, g, SimplicialMap(total, base, std::move(proj)), std::move(fibre),
                      layers};
}

SimplicialComplex cycle_complex(int n, std::string name) {
  if (n < 3) throw MalformedInput("a cycle needs at least 3 vertices");
  std::vector<Simplex> edges;
  for (int i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n});
  return SimplicialComplex::from_maximal(std::move(edges), std::move(name));
}

SimplicialComplex simplex_complex(int d, std::string name) {
  Simplex s(static_cast<std::size_t>(d) + 1);
  std::iota(s.begin(), s.end(), 0);
  return SimplicialComplex::from_maximal({s}, std::move(name));
}

SimplicialComplex simplex_boundary(int d, std::string name) {
  if (d < 1) throw MalformedInput("boundary of a simplex needs d >= 1");
  std::vector<Simplex> faces;
  for (int drop = 0; drop <= d; ++drop) {
    Simplex s;
    for (int v = 0; v <= d; ++v)
      if (v != drop) s.push_back(v);
    faces.push_back(std::move(s));
  }
  return SimplicialComplex::from_maximal(std::move(faces), std::move(name));
}

SimplicialComplex point_complex(std::string name) {
  return SimplicialComplex::from_maximal({{0}}, std::move(name));
}

}  // namespace gcat
