#include "gcat/pi1.hpp"

#include <algorithm>
#include <cstdlib>
#include <queue>
#include <sstream>
#include <stdexcept>

#include "gcat/error.hpp"

namespace gcat {

Word free_reduce(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (int x : w) {
    if (!out.empty() && out.back() == -x) out.pop_back();
    else out.push_back(x);
  }
  return out;
}

Word cyclic_reduce(const Word& w) {
  Word r = free_reduce(w);
  std::size_t lo = 0;
  std::size_t hi = r.size();
  while (hi - lo >= 2 && r[lo] == -r[hi - 1]) {
    ++lo;
    --hi;
  }
  return Word(r.begin() + static_cast<long>(lo), r.begin() + static_cast<long>(hi));
}

Word inverse(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(-*it);
  return out;
}

Word concat(const Word& a, const Word& b) {
  Word out = a;
  out.insert(out.end(), b.begin(), b.end());
  return free_reduce(out);
}

std::string to_string(const Word& w) {
  if (w.empty()) return "1";
  std::ostringstream os;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) os << ' ';
    os << (w[i] > 0 ? "x" : "X") << std::abs(w[i]);
  }
  return os.str();
}

Word apply_substitution(const Word& w, const std::vector<Word>& images) {
  Word out;
  for (int x : w) {
    const auto& img = images[static_cast<std::size_t>(std::abs(x) - 1)];
    if (x > 0) out.insert(out.end(), img.begin(), img.end());
    else {
      Word inv = inverse(img);
      out.insert(out.end(), inv.begin(), inv.end());
    }
  }
  return free_reduce(out);
}

GroupPresentation GroupPresentation::make(int generator_count, std::vector<Word> relators) {
  if (generator_count < 0) throw MalformedInput("negative generator count");
  GroupPresentation p;
  p.generator_count = generator_count;
  for (auto& r : relators) {
    for (int x : r)
      if (x == 0 || std::abs(x) > generator_count)
        throw MalformedInput("relator letter " + std::to_string(x) + " outside generator range");
    p.relators.push_back(free_reduce(r));
  }
  return p;
}

// ---------------------------------------------------------------------------

Word EdgePathPresentation::edge_word(Vertex u, Vertex v) const {
  auto key = std::minmax(u, v);
  auto it = edge_generator.find({key.first, key.second});
  if (it == edge_generator.end())
    throw MalformedInput("no edge " + std::to_string(u) + "-" + std::to_string(v) +
                         " in the basepoint component");
  if (it->second == 0) return {};
  return {u < v ? it->second : -it->second};
}

Word EdgePathPresentation::path_word(const std::vector<Vertex>& path) const {
  Word w;
  for (std::size_t i = 0; i + 1 < path.size(); ++i) {
    Word e = edge_word(path[i], path[i + 1]);
    w.insert(w.end(), e.begin(), e.end());
  }
  return free_reduce(w);
}

std::vector<Vertex> EdgePathPresentation::tree_path(Vertex v) const {
  std::vector<Vertex> path{v};
  while (path.back() != basepoint) {
    Vertex p = tree_parent.at(static_cast<std::size_t>(path.back()));
    if (p < 0) throw MalformedInput("vertex " + std::to_string(v) + " not in the basepoint component");
    path.push_back(p);
  }
  std::reverse(path.begin(), path.end());
  return path;
}

EdgePathPresentation edge_path_presentation(const SimplicialComplex& x, Vertex basepoint) {
  if (basepoint < 0 || basepoint >= x.vertex_count())
    throw MalformedInput("basepoint " + std::to_string(basepoint) + " out of range");
  EdgePathPresentation out;
  out.basepoint = basepoint;
  out.tree_parent.assign(static_cast<std::size_t>(x.vertex_count()), -1);
  std::vector<bool> seen(static_cast<std::size_t>(x.vertex_count()), false);
  std::queue<Vertex> q;
  q.push(basepoint);
  seen[static_cast<std::size_t>(basepoint)] = true;
  while (!q.empty()) {
    Vertex u = q.front();
    q.pop();
    out.component.push_back(u);
    for (Vertex w : x.neighbours()[static_cast<std::size_t>(u)]) {
      if (seen[static_cast<std::size_t>(w)]) continue;
      seen[static_cast<std::size_t>(w)] = true;
      out.tree_parent[static_cast<std::size_t>(w)] = u;
      q.push(w);
    }
  }
  std::sort(out.component.begin(), out.component.end());

  int next = 0;
  for (const auto& e : x.simplices_of_dim(1)) {
    if (!seen[static_cast<std::size_t>(e[0])]) continue;
    const bool tree = out.tree_parent[static_cast<std::size_t>(e[1])] == e[0] ||
                      out.tree_parent[static_cast<std::size_t>(e[0])] == e[1];
    out.edge_generator[{e[0], e[1]}] = tree ? 0 : ++next;
  }
  std::vector<Word> relators;
  for (const auto& t : x.simplices_of_dim(2)) {
    if (!seen[static_cast<std::size_t>(t[0])]) continue;
    Word w = out.path_word({t[0], t[1], t[2], t[0]});
    if (!w.empty()) relators.push_back(std::move(w));
  }
  out.group = GroupPresentation::make(next, std::move(relators));
  return out;
}

Pi1Image inclusion_image(const SimplicialComplex& x, const VertexSet& s,
                         const EdgePathPresentation& ambient) {
  Pi1Image out;
  out.ambient = ambient.group;
  auto sub = full_subcomplex(x, s);
  const auto& sc = sub.complex;
  std::vector<bool> done(static_cast<std::size_t>(sc.vertex_count()), false);
  for (Vertex base = 0; base < sc.vertex_count(); ++base) {
    if (done[static_cast<std::size_t>(base)]) continue;
    auto own = edge_path_presentation(sc, base);
    ComponentImage comp;
    for (Vertex v : own.component) {
      done[static_cast<std::size_t>(v)] = true;
      comp.vertices.push_back(sub.to_parent[static_cast<std::size_t>(v)]);
    }
    comp.presentation = own.group;
    comp.generators.resize(static_cast<std::size_t>(own.group.generator_count));
    for (const auto& [edge, gen] : own.edge_generator) {
      if (gen == 0) continue;
      auto path = own.tree_path(edge.first);
      auto back = own.tree_path(edge.second);
      path.insert(path.end(), back.rbegin(), back.rend());
      for (auto& v : path) v = sub.to_parent[static_cast<std::size_t>(v)];
      comp.generators[static_cast<std::size_t>(gen - 1)] = ambient.path_word(path);
    }
    out.components.push_back(std::move(comp));
  }
  return out;
}

// ---------------------------------------------------------------------------

namespace {

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("integer overflow in Smith form");
  return r;
}

std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw std::overflow_error("integer overflow in Smith form");
  return r;
}

std::int64_t abs64(std::int64_t a) { return a < 0 ? -a : a; }

std::int64_t gcd64(std::int64_t a, std::int64_t b) {
  a = abs64(a);
  b = abs64(b);
  while (b) {
    auto t = a % b;
    a = b;
    b = t;
  }
  return a;
}

// Diagonal entries (not yet in divisibility order) of a dense integer matrix.
std::vector<std::int64_t> dense_diagonal(std::vector<std::vector<std::int64_t>> a) {
  const std::size_t m = a.size();
  const std::size_t n = m ? a[0].size() : 0;
  std::vector<std::int64_t> diag;
  for (std::size_t t = 0; t < std::min(m, n); ++t) {
    auto move_min = [&](bool whole) {
      std::size_t bi = m, bj = n;
      std::int64_t best = 0;
      for (std::size_t i = t; i < m; ++i)
        for (std::size_t j = t; j < n; ++j) {
          if (!whole && i != t && j != t) continue;
          if (a[i][j] != 0 && (best == 0 || abs64(a[i][j]) < best)) {
            best = abs64(a[i][j]);
            bi = i;
            bj = j;
          }
        }
      if (bi == m) return false;
      std::swap(a[t], a[bi]);
      for (auto& row : a) std::swap(row[t], row[bj]);
      return true;
    };
    if (!move_min(true)) break;
    while (true) {
      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (a[i][t] == 0) continue;
        const std::int64_t q = a[i][t] / a[t][t];
        for (std::size_t j = t; j < n; ++j) a[i][j] = checked_sub(a[i][j], checked_mul(q, a[t][j]));
        if (a[i][t] != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (a[t][j] == 0) continue;
        const std::int64_t q = a[t][j] / a[t][t];
        for (std::size_t i = t; i < m; ++i) a[i][j] = checked_sub(a[i][j], checked_mul(q, a[i][t]));
        if (a[t][j] != 0) clean = false;
      }
      if (clean) break;
      move_min(false);
    }
    diag.push_back(abs64(a[t][t]));
  }
  return diag;
}

}  // namespace

std::map<int, std::int64_t> exponent_row(const Word& w) {
  std::map<int, std::int64_t> row;
  for (int x : w) {
    auto& e = row[std::abs(x) - 1];
    e += x > 0 ? 1 : -1;
  }
  for (auto it = row.begin(); it != row.end();) {
    if (it->second == 0) it = row.erase(it);
    else ++it;
  }
  return row;
}

std::vector<std::int64_t> smith_invariants(int columns,
                                           const std::vector<std::map<int, std::int64_t>>& input) {
  std::vector<std::map<int, std::int64_t>> rows = input;
  std::vector<std::vector<std::size_t>> col_rows(static_cast<std::size_t>(columns));
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (const auto& [c, v] : rows[r]) col_rows[static_cast<std::size_t>(c)].push_back(r);
  std::vector<bool> dead(rows.size(), false);
  std::vector<std::int64_t> factors;

  // Unit pivots first: each one contributes an invariant factor 1.
  while (true) {
    std::size_t best_row = rows.size();
    int best_col = -1;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (dead[r] || rows[r].empty()) continue;
      if (best_row != rows.size() && rows[r].size() >= rows[best_row].size()) continue;
      for (const auto& [c, v] : rows[r])
        if (v == 1 || v == -1) {
          best_row = r;
          best_col = c;
          break;
        }
    }
    if (best_row == rows.size()) break;
    const std::int64_t u = rows[best_row][best_col];
    const auto pivot = rows[best_row];
    for (std::size_t r : col_rows[static_cast<std::size_t>(best_col)]) {
      if (r == best_row || dead[r]) continue;
      auto it = rows[r].find(best_col);
      if (it == rows[r].end()) continue;
      const std::int64_t factor = checked_mul(it->second, u);
      for (const auto& [c, v] : pivot) {
        auto& e = rows[r][c];
        const bool was_zero = (e == 0);
        e = checked_sub(e, checked_mul(factor, v));
        if (e == 0) rows[r].erase(c);
        else if (was_zero) col_rows[static_cast<std::size_t>(c)].push_back(r);
      }
    }
    dead[best_row] = true;
    factors.push_back(1);
  }

  std::vector<int> cols_left;
  for (int c = 0; c < columns; ++c) {
    bool used = false;
    for (std::size_t r : col_rows[static_cast<std::size_t>(c)])
      if (!dead[r] && rows[r].count(c)) used = true;
    if (used) cols_left.push_back(c);
  }
  std::vector<std::vector<std::int64_t>> dense;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (dead[r] || rows[r].empty()) continue;
    std::vector<std::int64_t> row(cols_left.size(), 0);
    for (std::size_t j = 0; j < cols_left.size(); ++j) {
      auto it = rows[r].find(cols_left[j]);
      if (it != rows[r].end()) row[j] = it->second;
    }
    dense.push_back(std::move(row));
  }
  auto diag = dense_diagonal(std::move(dense));
  diag.erase(std::remove(diag.begin(), diag.end(), 0), diag.end());
  for (std::size_t i = 0; i < diag.size(); ++i)
    for (std::size_t j = i + 1; j < diag.size(); ++j) {
      const std::int64_t g = gcd64(diag[i], diag[j]);
      const std::int64_t l = checked_mul(diag[i] / g, diag[j]);
      diag[i] = g;
      diag[j] = l;
    }
  factors.insert(factors.end(), diag.begin(), diag.end());
  std::sort(factors.begin(), factors.end());
  return factors;
}

AbelianInvariants abelianization(const GroupPresentation& p) {
  std::vector<std::map<int, std::int64_t>> rows;
  for (const auto& r : p.relators) {
    auto row = exponent_row(r);
    if (!row.empty()) rows.push_back(std::move(row));
  }
  auto factors = smith_invariants(p.generator_count, rows);
  AbelianInvariants out;
  out.rank = p.generator_count - static_cast<int>(factors.size());
  for (auto f : factors)
    if (f > 1) out.torsion.push_back(f);
  return out;
}

}  // namespace gcat
