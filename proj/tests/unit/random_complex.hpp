#pragma once

#include <algorithm>
#include <random>

#include "gcat/complex.hpp"

namespace testing {

// Face closure of a few random simplices; vertices relabelled to avoid gaps.
inline gcat::SimplicialComplex random_complex(std::mt19937& rng, int max_vertices, int max_dim,
                                              int max_generators) {
  const int n = 1 + static_cast<int>(rng() % static_cast<unsigned>(max_vertices));
  const int g = 1 + static_cast<int>(rng() % static_cast<unsigned>(max_generators));
  std::vector<gcat::Simplex> gens;
  for (int i = 0; i < g; ++i) {
    const int k = 1 + static_cast<int>(rng() % static_cast<unsigned>(std::min(n, max_dim + 1)));
    std::vector<int> all(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) all[static_cast<std::size_t>(v)] = v;
    std::shuffle(all.begin(), all.end(), rng);
    all.resize(static_cast<std::size_t>(k));
    gens.push_back(all);
  }
  std::vector<int> used;
  for (const auto& s : gens) used.insert(used.end(), s.begin(), s.end());
  std::sort(used.begin(), used.end());
  used.erase(std::unique(used.begin(), used.end()), used.end());
  for (auto& s : gens)
    for (auto& v : s) v = static_cast<int>(std::lower_bound(used.begin(), used.end(), v) - used.begin());
  return gcat::SimplicialComplex::from_maximal(gens, "random");
}

}  // namespace testing
