#include <deque>

#include "gcat/pi1.hpp"

namespace gcat {

namespace {

// HLT coset enumeration. Columns 2g and 2g+1 hold generator g+1 and its
// inverse. Dead cosets forward to their representative through `parent_`.
class CosetTable {
 public:
  CosetTable(int generators, std::int64_t limit)
      : columns_(static_cast<std::size_t>(2 * generators)), limit_(limit) {
    add_row();
  }

  bool exceeded() const { return exceeded_; }

  std::int64_t live_count() const {
    std::int64_t n = 0;
    for (std::size_t c = 0; c < parent_.size(); ++c)
      if (parent_[c] == static_cast<long>(c)) ++n;
    return n;
  }

  std::size_t size() const { return parent_.size(); }
  bool alive(std::size_t c) const { return parent_[c] == static_cast<long>(c); }

  static std::size_t column(int letter) {
    return letter > 0 ? static_cast<std::size_t>(2 * (letter - 1))
                      : static_cast<std::size_t>(2 * (-letter - 1) + 1);
  }
  static std::size_t inverse_column(std::size_t col) { return col ^ 1U; }

  // Returns false if the coset limit was hit.
  bool define(std::size_t c, std::size_t col) {
    if (static_cast<std::int64_t>(parent_.size()) >= limit_) {
      exceeded_ = true;
      return false;
    }
    const std::size_t d = add_row();
    set(c, col, static_cast<long>(d));
    set(d, inverse_column(col), static_cast<long>(c));
    return true;
  }

  bool fill_row(std::size_t c) {
    for (std::size_t col = 0; col < columns_; ++col) {
      if (!alive(c)) return true;
      if (at(c, col) < 0 && !define(c, col)) return false;
    }
    return true;
  }

  bool scan_and_fill(std::size_t c, const Word& w) {
    if (w.empty()) return true;
    std::size_t f = c;
    std::size_t b = c;
    long i = 0;
    long j = static_cast<long>(w.size()) - 1;
    while (true) {
      while (i <= j && at(f, column(w[static_cast<std::size_t>(i)])) >= 0) {
        f = static_cast<std::size_t>(at(f, column(w[static_cast<std::size_t>(i)])));
        ++i;
      }
      if (i > j) {
        if (f != b) coincidence(f, b);
        return true;
      }
      while (j >= i && at(b, inverse_column(column(w[static_cast<std::size_t>(j)]))) >= 0) {
        b = static_cast<std::size_t>(at(b, inverse_column(column(w[static_cast<std::size_t>(j)]))));
        --j;
      }
      if (j < i) {
        coincidence(f, b);
        return true;
      }
      if (i == j) {
        const std::size_t col = column(w[static_cast<std::size_t>(i)]);
        set(f, col, static_cast<long>(b));
        set(b, inverse_column(col), static_cast<long>(f));
        return true;
      }
      if (!define(f, column(w[static_cast<std::size_t>(i)]))) return false;
    }
  }

 private:
  std::size_t add_row() {
    table_.insert(table_.end(), columns_, -1L);
    parent_.push_back(static_cast<long>(parent_.size()));
    return parent_.size() - 1;
  }

  long at(std::size_t c, std::size_t col) const { return table_[c * columns_ + col]; }
  void set(std::size_t c, std::size_t col, long v) { table_[c * columns_ + col] = v; }

  std::size_t rep(std::size_t c) {
    std::size_t r = c;
    while (parent_[r] != static_cast<long>(r)) r = static_cast<std::size_t>(parent_[r]);
    while (parent_[c] != static_cast<long>(r)) {
      const auto next = static_cast<std::size_t>(parent_[c]);
      parent_[c] = static_cast<long>(r);
      c = next;
    }
    return r;
  }

  void merge(std::size_t a, std::size_t b, std::deque<std::size_t>& queue) {
    a = rep(a);
    b = rep(b);
    if (a == b) return;
    if (b < a) std::swap(a, b);
    parent_[b] = static_cast<long>(a);
    queue.push_back(b);
  }

  void coincidence(std::size_t a, std::size_t b) {
    std::deque<std::size_t> queue;
    merge(a, b, queue);
    while (!queue.empty()) {
      const std::size_t g = queue.front();
      queue.pop_front();
      for (std::size_t col = 0; col < columns_; ++col) {
        if (at(g, col) < 0) continue;
        const auto d = static_cast<std::size_t>(at(g, col));
        const std::size_t icol = inverse_column(col);
        if (at(d, icol) == static_cast<long>(g)) set(d, icol, -1);
        const std::size_t mu = rep(g);
        const std::size_t nu = rep(d);
        if (at(mu, col) >= 0) {
          merge(nu, static_cast<std::size_t>(at(mu, col)), queue);
        } else if (at(nu, icol) >= 0) {
          merge(mu, static_cast<std::size_t>(at(nu, icol)), queue);
        } else {
          set(mu, col, static_cast<long>(nu));
          set(nu, icol, static_cast<long>(mu));
        }
      }
    }
  }

  std::size_t columns_;
  std::int64_t limit_;
  bool exceeded_ = false;
  std::vector<long> table_;
  std::vector<long> parent_;
};

}  // namespace

CosetResult todd_coxeter(const GroupPresentation& p, const std::vector<Word>& subgroup_words,
                         std::int64_t max_cosets) {
  if (max_cosets < 1) max_cosets = 1;
  CosetTable table(p.generator_count, max_cosets);
  std::vector<Word> relators;
  for (const auto& r : p.relators) {
    Word w = cyclic_reduce(r);
    if (!w.empty()) relators.push_back(std::move(w));
  }
  for (const auto& h : subgroup_words) {
    if (!table.scan_and_fill(0, free_reduce(h))) return CosetsExceeded{max_cosets};
  }
  for (std::size_t c = 0; c < table.size(); ++c) {
    if (!table.alive(c)) continue;
    for (const auto& r : relators) {
      if (!table.scan_and_fill(c, r)) return CosetsExceeded{max_cosets};
      if (!table.alive(c)) break;
    }
    if (table.alive(c) && !table.fill_row(c)) return CosetsExceeded{max_cosets};
  }
  return CosetIndex{table.live_count()};
}

}  // namespace gcat
