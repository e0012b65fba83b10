#include <algorithm>
#include <cstdlib>
#include <set>

#include "gcat/pi1.hpp"

namespace gcat {

namespace {

constexpr std::size_t kMaxRelatorLength = 200000;

// Smallest rotation of w or of its inverse.
Word canonical_cyclic(const Word& w) {
  Word best;
  bool first = true;
  for (const Word& base : {w, inverse(w)}) {
    for (std::size_t k = 0; k < base.size(); ++k) {
      Word r(base.begin() + static_cast<long>(k), base.end());
      r.insert(r.end(), base.begin(), base.begin() + static_cast<long>(k));
      if (first || r < best) {
        best = std::move(r);
        first = false;
      }
    }
  }
  return best;
}

std::vector<Word> normalise(const std::vector<Word>& relators) {
  std::set<Word> seen;
  std::vector<Word> out;
  for (const auto& r : relators) {
    Word c = cyclic_reduce(r);
    if (c.empty()) continue;
    c = canonical_cyclic(c);
    if (seen.insert(c).second) out.push_back(std::move(c));
  }
  std::stable_sort(out.begin(), out.end(), [](const Word& a, const Word& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return out;
}

}  // namespace

SimplifiedPresentation simplify_with_substitution(const GroupPresentation& p, int move_budget) {
  int gens = p.generator_count;
  std::vector<Word> relators = normalise(p.relators);
  std::vector<Word> substitution;
  for (int g = 1; g <= gens; ++g) substitution.push_back({g});
  int moves = 0;

  while (moves < move_budget) {
    // relators are sorted by length, so the first hit uses the shortest one
    std::size_t which = relators.size();
    int gen = 0;
    for (std::size_t i = 0; i < relators.size() && which == relators.size(); ++i) {
      std::vector<int> count(static_cast<std::size_t>(gens) + 1, 0);
      for (int x : relators[i]) ++count[static_cast<std::size_t>(std::abs(x))];
      for (int g = 1; g <= gens; ++g)
        if (count[static_cast<std::size_t>(g)] == 1) {
          which = i;
          gen = g;
          break;
        }
    }
    if (which == relators.size()) break;

    const Word r = relators[which];
    const auto pos = static_cast<std::size_t>(
        std::find_if(r.begin(), r.end(), [gen](int x) { return std::abs(x) == gen; }) - r.begin());
    Word rest(r.begin() + static_cast<long>(pos) + 1, r.end());
    rest.insert(rest.end(), r.begin(), r.begin() + static_cast<long>(pos));
    // r ~ g^e rest, so g = rest^-1 when e = 1 and g = rest when e = -1
    const Word value = free_reduce(r[pos] > 0 ? inverse(rest) : rest);

    // images of the current generators, with gen removed and the rest renumbered
    std::vector<Word> images;
    for (int g = 1; g <= gens; ++g) {
      if (g == gen) images.push_back({});
      else images.push_back({g < gen ? g : g - 1});
    }
    Word renumbered_value;
    for (int x : value) {
      const int a = std::abs(x);
      const int b = a < gen ? a : a - 1;
      renumbered_value.push_back(x > 0 ? b : -b);
    }
    images[static_cast<std::size_t>(gen - 1)] = renumbered_value;

    std::vector<Word> next;
    bool too_long = false;
    for (std::size_t i = 0; i < relators.size(); ++i) {
      if (i == which) continue;
      Word w = apply_substitution(relators[i], images);
      if (w.size() > kMaxRelatorLength) too_long = true;
      next.push_back(std::move(w));
    }
    if (too_long) break;
    for (auto& s : substitution) s = apply_substitution(s, images);
    relators = normalise(next);
    --gens;
    ++moves;
  }

  SimplifiedPresentation out;
  out.presentation.generator_count = gens;
  out.presentation.relators = std::move(relators);
  out.substitution = std::move(substitution);
  out.moves_used = moves;
  return out;
}

GroupPresentation simplify_presentation(const GroupPresentation& p, int move_budget) {
  return simplify_with_substitution(p, move_budget).presentation;
}

}  // namespace gcat
