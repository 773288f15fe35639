#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "hwcls/scalar.hpp"

namespace hwcls {

/* Weakly decreasing positive parts. */
struct Partition {
  std::vector<long long> parts;

  long long size() const {
    long long n = 0;
    for (long long p : parts)
      n += p;
    return n;
  }

  friend bool operator==(const Partition& a, const Partition& b) { return a.parts == b.parts; }
  friend bool operator!=(const Partition& a, const Partition& b) { return !(a == b); }
};

inline std::string to_string(const Partition& p) {
  std::string r = "(";
  for (std::size_t i = 0; i < p.parts.size(); ++i) {
    if (i)
      r += ",";
    r += std::to_string(p.parts[i]);
  }
  return r + ")";
}

/* Largest part; the length of the longest strictly decreasing
   integer-congruent subsequence of the shifted sequence. */
inline long long corank(const Partition& p) { return p.parts.empty() ? 0 : p.parts.front(); }

inline long long rank(const Partition& p) { return p.size() - corank(p); }

/* An entry of the shifted sequence together with its original index. Equal
   values are disambiguated by position: among equal values the later
   position counts as the larger entry. */
struct TaggedEntry {
  ScalarValue value;
  std::size_t position = 0;
};

/* Strict order within one integrality class, larger-first semantics:
   a ▷ b iff a has the larger offset, ties going to the later position. */
inline bool tri_greater(const TaggedEntry& a, const TaggedEntry& b) {
  if (a.value.offset() != b.value.offset())
    return a.value.offset() > b.value.offset();
  return a.position > b.position;
}

/* Insertion tableau over one integrality class. Rows read strictly
   ▷-decreasing left to right, so the first row length is the longest
   strictly ▷-decreasing subsequence. */
class Tableau {
public:
  void insert(TaggedEntry e) {
    std::size_t r = 0;
    for (;;) {
      if (r == rows_.size()) {
        rows_.push_back({std::move(e)});
        return;
      }
      auto& row = rows_[r];
      // Bump the leftmost entry that does not exceed e in the ▷ order.
      auto it = std::find_if(row.begin(), row.end(), [&](const TaggedEntry& y) {
        return !tri_greater(y, e);
      });
      if (it == row.end()) {
        row.push_back(std::move(e));
        return;
      }
      std::swap(*it, e);
      ++r;
    }
  }

  const std::vector<std::vector<TaggedEntry>>& rows() const { return rows_; }

  Partition shape() const {
    Partition p;
    for (const auto& row : rows_)
      p.parts.push_back(static_cast<long long>(row.size()));
    return p;
  }

private:
  std::vector<std::vector<TaggedEntry>> rows_;
};

/* f+ = (f(1), f(2)-1, ..., f(n)-n+1). */
inline std::vector<ScalarValue> f_plus(const std::vector<ScalarValue>& f) {
  std::vector<ScalarValue> g;
  g.reserve(f.size());
  for (std::size_t i = 0; i < f.size(); ++i)
    g.push_back(shift(f[i], -static_cast<long long>(i)));
  return g;
}

/* Inverse shift: g# = (g(1), g(2)+1, ..., g(n)+n-1). */
inline std::vector<ScalarValue> f_sharp(const std::vector<ScalarValue>& f) {
  std::vector<ScalarValue> g;
  g.reserve(f.size());
  for (std::size_t i = 0; i < f.size(); ++i)
    g.push_back(shift(f[i], static_cast<long long>(i)));
  return g;
}

/* Positions grouped by the integer-difference relation, classes listed by
   first occurrence, positions in original order. The relation is evaluated
   on the given sequence; applying it to f or to f+ yields the same classes
   since the two differ by integer shifts. */
inline std::vector<std::vector<std::size_t>> class_split_positions(
    const std::vector<ScalarValue>& g) {
  std::vector<std::vector<std::size_t>> classes;
  for (std::size_t i = 0; i < g.size(); ++i) {
    bool placed = false;
    for (auto& c : classes)
      if (int_congruent(g[c.front()], g[i])) {
        c.push_back(i);
        placed = true;
        break;
      }
    if (!placed)
      classes.push_back({i});
  }
  return classes;
}

/* Same split, as value subsequences. */
inline std::vector<std::vector<ScalarValue>> class_split(const std::vector<ScalarValue>& g) {
  std::vector<std::vector<ScalarValue>> out;
  for (const auto& c : class_split_positions(g)) {
    std::vector<ScalarValue> seq;
    seq.reserve(c.size());
    for (std::size_t i : c)
      seq.push_back(g[i]);
    out.push_back(std::move(seq));
  }
  return out;
}

/* Multiset union of parts, sorted weakly decreasing. */
inline Partition merge_partitions(const std::vector<Partition>& ps) {
  Partition m;
  for (const auto& p : ps)
    m.parts.insert(m.parts.end(), p.parts.begin(), p.parts.end());
  std::sort(m.parts.begin(), m.parts.end(), std::greater<long long>());
  return m;
}

inline Partition insertion_shape(const std::vector<ScalarValue>& g,
                                 const std::vector<std::size_t>& positions) {
  Tableau t;
  for (std::size_t i : positions)
    t.insert({g[i], i});
  return t.shape();
}

/* The partition attached to a finite weight sequence: shift, split into
   integrality classes, run Schensted insertion per class against the
   larger-first order, and merge the class shapes. */
inline Partition modified_rs(const std::vector<ScalarValue>& f) {
  std::vector<ScalarValue> g = f_plus(f);
  std::vector<Partition> shapes;
  for (const auto& c : class_split_positions(g))
    shapes.push_back(insertion_shape(g, c));
  return merge_partitions(shapes);
}

/* Independent check for the largest part: exhaustive dynamic programming for
   the longest subsequence of f+ that is strictly decreasing and stays in a
   single integrality class. */
inline long long lds_oracle(const std::vector<ScalarValue>& f) {
  std::vector<ScalarValue> g = f_plus(f);
  const std::size_t n = g.size();
  std::vector<long long> best(n, 1);
  long long ans = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < i; ++j)
      if (g[j].label() == g[i].label() && g[j].offset() > g[i].offset())
        best[i] = std::max(best[i], best[j] + 1);
    ans = std::max(ans, best[i]);
  }
  return ans;
}

/* Concatenates the class subsequences of f+ and undoes the shift. The
   resulting sequence generates the same partition as f. */
inline std::vector<ScalarValue> class_rearrange(const std::vector<ScalarValue>& f) {
  std::vector<ScalarValue> g = f_plus(f);
  std::vector<ScalarValue> concat;
  concat.reserve(g.size());
  for (const auto& c : class_split(g))
    concat.insert(concat.end(), c.begin(), c.end());
  return f_sharp(concat);
}

} // namespace hwcls
