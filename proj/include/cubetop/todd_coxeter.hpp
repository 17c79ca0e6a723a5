#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cubetop/cube_complex.hpp"

namespace cubetop {

/// Words over free generators; the flag marks an inverse letter.
using GroupWord = std::vector<std::pair<int, bool>>;

inline GroupWord inverse_word(const GroupWord& w) {
  GroupWord out;
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back({it->first, !it->second});
  return out;
}

/// Coset table over 2*ngens columns, with union-find coincidence handling.
class CosetTable {
 public:
  explicit CosetTable(int ngens) : ngens_(ngens) { new_coset(); }

  int ngens() const { return ngens_; }

  int column(int gen, bool inv) const { return 2 * gen + (inv ? 1 : 0); }

  int get(int coset, int gen, bool inv) const {
    int c = rows_[find(coset)][column(gen, inv)];
    return c < 0 ? -1 : find(c);
  }

  void set(int coset, int gen, bool inv, int target) {
    coset = find(coset);
    target = find(target);
    deduce(coset, column(gen, inv), target);
    deduce(target, column(gen, !inv), coset);
    process_queue();
  }

  int new_coset() {
    rows_.emplace_back(2 * ngens_, -1);
    parent_.push_back(static_cast<int>(parent_.size()));
    alive_.push_back(true);
    return static_cast<int>(rows_.size()) - 1;
  }

  size_t live() const {
    size_t n = 0;
    for (size_t i = 0; i < parent_.size(); ++i)
      if (alive_[i] && parent_[i] == static_cast<int>(i)) ++n;
    return n;
  }
  size_t allocated() const { return rows_.size(); }

  bool complete() const {
    for (size_t i = 0; i < rows_.size(); ++i) {
      if (!alive_[i] || parent_[i] != static_cast<int>(i)) continue;
      for (int j = 0; j < 2 * ngens_; ++j)
        if (get(static_cast<int>(i), j / 2, j % 2 == 1) < 0) return false;
    }
    return true;
  }

  /// Trace a word; -1 when the walk leaves the defined part.
  int trace(int coset, const GroupWord& w) const {
    int c = find(coset);
    for (const auto& [g, inv] : w) {
      c = get(c, g, inv);
      if (c < 0) return -1;
    }
    return c;
  }

  /// Scan-and-fill a word between two cosets; defines nothing, only deduces
  /// or records a coincidence. Returns false if the scan is incomplete.
  bool scan(int from, const GroupWord& w, int to) {
    int f = find(from), t = find(to);
    size_t i = 0, j = w.size();
    while (true) {
      while (i < j) {
        int next = get(f, w[i].first, w[i].second);
        if (next < 0) break;
        f = next;
        ++i;
      }
      while (j > i) {
        int prev = get(t, w[j - 1].first, !w[j - 1].second);
        if (prev < 0) break;
        t = prev;
        --j;
      }
      if (i == j) {
        if (f != t) coincide(f, t);
        return true;
      }
      if (i + 1 == j) {
        set(f, w[i].first, w[i].second, t);
        return true;
      }
      return false;
    }
  }

  /// Scan filling the gap with fresh cosets (used to trace subgroup
  /// generators and relator cycles when building tables).
  void scan_and_define(int from, const GroupWord& w, int to, size_t max_cosets) {
    int f = find(from);
    for (size_t i = 0; i < w.size(); ++i) {
      int next = get(f, w[i].first, w[i].second);
      if (next < 0) {
        if (i + 1 == w.size()) {
          set(f, w[i].first, w[i].second, find(to));
          return;
        }
        if (allocated() >= max_cosets) throw Error("BudgetExceeded", "coset cap");
        next = new_coset();
        set(f, w[i].first, w[i].second, next);
      }
      f = find(next);
    }
    if (f != find(to)) coincide(f, find(to));
    process_queue();
  }

  int find(int c) const {
    while (parent_[c] != c) c = parent_[c];
    return c;
  }

 private:
  void deduce(int coset, int col, int target) {
    int cur = rows_[coset][col];
    if (cur < 0) {
      rows_[coset][col] = target;
    } else if (find(cur) != target) {
      queue_.push_back({find(cur), target});
    }
  }

  void coincide(int a, int b) {
    queue_.push_back({a, b});
    process_queue();
  }

  void process_queue() {
    while (!queue_.empty()) {
      auto [a, b] = queue_.back();
      queue_.pop_back();
      a = find(a);
      b = find(b);
      if (a == b) continue;
      if (b < a) std::swap(a, b);
      parent_[b] = a;
      alive_[b] = false;
      for (int j = 0; j < 2 * ngens_; ++j) {
        int tb = rows_[b][j];
        if (tb < 0) continue;
        int col_inv = (j % 2 == 0) ? j + 1 : j - 1;
        int ta = rows_[a][j];
        if (ta < 0) {
          rows_[a][j] = find(tb);
          // the reverse entry of tb must point back at a
          int r = rows_[find(tb)][col_inv];
          if (r < 0)
            rows_[find(tb)][col_inv] = a;
          else if (find(r) != a)
            queue_.push_back({find(r), a});
        } else if (find(ta) != find(tb)) {
          queue_.push_back({find(ta), find(tb)});
        }
      }
    }
  }

  int ngens_;
  std::vector<std::vector<int>> rows_;
  std::vector<int> parent_;
  std::vector<bool> alive_;
  std::vector<std::pair<int, int>> queue_;
};

/// Folded coset table of a subgroup of a free group: trace the generators at
/// the base coset and fold. Membership and finite-index queries are exact.
inline CosetTable schreier_table(int ngens, const std::vector<GroupWord>& subgens,
                                 size_t max_cosets = 100000) {
  CosetTable t(ngens);
  for (const auto& w : subgens) t.scan_and_define(0, w, 0, max_cosets);
  return t;
}

inline bool schreier_member(const CosetTable& t, const GroupWord& w) {
  int c = t.trace(0, w);
  return c == t.find(0);
}

/// Index of the subgroup: the table is complete iff the index is finite.
inline std::optional<int> schreier_index(const CosetTable& t) {
  if (!t.complete()) return std::nullopt;
  return static_cast<int>(t.live());
}

/// Coset enumeration for a finitely presented group: returns the completed
/// table iff the index closes within the coset cap.
inline std::optional<CosetTable> todd_coxeter(int ngens, const std::vector<GroupWord>& relators,
                                              const std::vector<GroupWord>& subgens,
                                              size_t max_cosets) {
  CosetTable t(ngens);
  try {
    for (const auto& w : subgens) t.scan_and_define(0, w, 0, max_cosets);
    bool progress = true;
    while (progress) {
      progress = false;
      // scan relators at every live coset
      for (int c = 0; c < static_cast<int>(t.allocated()); ++c) {
        if (t.find(c) != c) continue;
        for (const auto& r : relators) t.scan(c, r, c);
      }
      if (t.complete()) return t;
      // define a coset at the first hole
      for (int c = 0; c < static_cast<int>(t.allocated()) && !progress; ++c) {
        if (t.find(c) != c) continue;
        for (int j = 0; j < 2 * t.ngens() && !progress; ++j) {
          if (t.get(c, j / 2, j % 2 == 1) >= 0) continue;
          if (t.allocated() >= max_cosets) return std::nullopt;
          int n = t.new_coset();
          t.set(c, j / 2, j % 2 == 1, n);
          progress = true;
        }
      }
    }
    return t.complete() ? std::optional<CosetTable>(t) : std::nullopt;
  } catch (const Error&) {
    return std::nullopt;
  }
}

/// Order of a finitely presented group within a cap: enumerate cosets of the
/// trivial subgroup.
inline std::optional<int> group_order(int ngens, const std::vector<GroupWord>& relators,
                                      size_t max_cosets) {
  auto t = todd_coxeter(ngens, relators, {}, max_cosets);
  if (!t) return std::nullopt;
  return static_cast<int>(t->live());
}

}  // namespace cubetop
