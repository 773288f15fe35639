#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "hwcls/cls.hpp"
#include "hwcls/errors.hpp"
#include "hwcls/rational.hpp"

namespace hwcls {

/* A dominant integral sl(n) weight, normalized so the implicit n-th
   coordinate is 0: a partition with at most n-1 parts, stored without
   trailing zeros. */
class DominantWeight {
public:
  DominantWeight(int rank, std::vector<long long> parts) : rank_(rank) {
    if (rank < 2)
      throw std::invalid_argument("weight rank must be at least 2");
    if (static_cast<int>(parts.size()) > rank)
      throw std::invalid_argument("too many parts for the rank");
    for (std::size_t i = 0; i + 1 < parts.size(); ++i)
      if (parts[i] < parts[i + 1])
        throw std::invalid_argument("parts must be weakly decreasing");
    if (!parts.empty() && parts.back() < 0)
      throw std::invalid_argument("parts must be nonnegative");
    // A full-length list with positive last coordinate is shifted down.
    if (static_cast<int>(parts.size()) == rank && parts.back() > 0) {
      const long long last = parts.back();
      for (auto& p : parts)
        p -= last;
    }
    while (!parts.empty() && parts.back() == 0)
      parts.pop_back();
    parts_ = std::move(parts);
  }

  static DominantWeight trivial(int rank) { return DominantWeight(rank, {}); }

  int rank() const { return rank_; }
  const std::vector<long long>& parts() const { return parts_; }
  bool is_trivial() const { return parts_.empty(); }

  long long part(std::size_t i) const { // 0-based, zero-padded
    return i < parts_.size() ? parts_[i] : 0;
  }

  long long size() const {
    long long n = 0;
    for (long long p : parts_)
      n += p;
    return n;
  }

  friend bool operator==(const DominantWeight& a, const DominantWeight& b) {
    return a.rank_ == b.rank_ && a.parts_ == b.parts_;
  }
  friend bool operator!=(const DominantWeight& a, const DominantWeight& b) { return !(a == b); }
  friend bool operator<(const DominantWeight& a, const DominantWeight& b) {
    if (a.rank_ != b.rank_)
      return a.rank_ < b.rank_;
    return a.parts_ < b.parts_;
  }

private:
  int rank_;
  std::vector<long long> parts_;
};

inline std::string to_string(const DominantWeight& w) {
  std::string r = "(";
  for (std::size_t i = 0; i < w.parts().size(); ++i) {
    if (i)
      r += ",";
    r += std::to_string(w.parts()[i]);
  }
  return r + ")";
}

/* Highest weight of the Cartan product: the coordinate sum. */
inline DominantWeight cartan_mul(const DominantWeight& a, const DominantWeight& b) {
  if (a.rank() != b.rank())
    throw RankMismatch(a.rank(), b.rank());
  std::vector<long long> sum(std::max(a.parts().size(), b.parts().size()), 0);
  for (std::size_t i = 0; i < sum.size(); ++i)
    sum[i] = a.part(i) + b.part(i);
  return DominantWeight(a.rank(), std::move(sum));
}

/* The contragredient weight: reverse the padded coordinates and renormalize. */
inline DominantWeight dualize(const DominantWeight& w) {
  std::vector<long long> d(static_cast<std::size_t>(w.rank()));
  const long long top = w.part(0);
  for (int i = 0; i < w.rank(); ++i)
    d[static_cast<std::size_t>(i)] = top - w.part(static_cast<std::size_t>(w.rank() - 1 - i));
  return DominantWeight(w.rank(), std::move(d));
}

/* Weyl dimension formula for type A on the padded coordinates. */
inline long long weyl_dim(const DominantWeight& w) {
  Rational dim(1);
  const int n = w.rank();
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      dim *= Rational(w.part(static_cast<std::size_t>(i - 1)) -
                          w.part(static_cast<std::size_t>(j - 1)) + j - i,
                      j - i);
  if (!is_integer(dim))
    throw Error("dimension product did not reduce to an integer");
  return to_integer(dim);
}

/* A finite set of common-rank weights; if it truncates an infinite level
   set, the degree cap of the truncation is carried along. */
struct WeightSet {
  int rank = 2;
  std::set<DominantWeight> weights;
  std::optional<long long> cap; // set iff the set is a truncation

  bool contains(const DominantWeight& w) const { return weights.count(w) != 0; }

  friend bool operator==(const WeightSet& a, const WeightSet& b) {
    return a.rank == b.rank && a.weights == b.weights && a.cap == b.cap;
  }
};

inline std::string to_string(const WeightSet& s) {
  std::string r = "{";
  bool first = true;
  for (const auto& w : s.weights) {
    if (!first)
      r += ", ";
    first = false;
    r += to_string(w);
  }
  r += "}";
  if (s.cap)
    r += " cap=" + std::to_string(*s.cap);
  return r;
}

/* Setwise Cartan products, deduplicated; caps combine by minimum. */
inline WeightSet set_mul(const WeightSet& a, const WeightSet& b) {
  if (a.rank != b.rank)
    throw RankMismatch(a.rank, b.rank);
  WeightSet out;
  out.rank = a.rank;
  if (a.cap && b.cap)
    out.cap = std::min(*a.cap, *b.cap);
  else
    out.cap = a.cap ? a.cap : b.cap;
  for (const auto& x : a.weights)
    for (const auto& y : b.weights)
      out.weights.insert(cartan_mul(x, y));
  return out;
}

namespace detail {

inline DominantWeight column(int rank, long long height) {
  return DominantWeight(rank, std::vector<long long>(static_cast<std::size_t>(height), 1));
}

/* All partitions with at most max_rows rows and at most max_size boxes. */
inline void enumerate_partitions(long long max_rows, long long max_size, long long max_part,
                                 std::vector<long long>& cur,
                                 std::vector<std::vector<long long>>& out) {
  out.push_back(cur);
  if (static_cast<long long>(cur.size()) == max_rows)
    return;
  const long long prev = cur.empty() ? max_part : cur.back();
  long long used = 0;
  for (long long p : cur)
    used += p;
  for (long long next = 1; next <= std::min(prev, max_size - used); ++next) {
    cur.push_back(next);
    enumerate_partitions(max_rows, max_size, max_part, cur, out);
    cur.pop_back();
  }
}

} // namespace detail

/* Level sets of the basic systems at a given rank. The finite-type symbols
   enumerate exactly; the infinite ones are truncated at the degree cap. */
struct BasicSymbol {
  enum class Kind { E, L, Linf, R, Rinf };
  Kind kind = Kind::E;
  long long index = 0; // unused for E
};

inline WeightSet basic_level(const BasicSymbol& sym, int n, long long cap) {
  if (n < 2)
    throw std::invalid_argument("rank must be at least 2");
  WeightSet out;
  out.rank = n;
  switch (sym.kind) {
  case BasicSymbol::Kind::E:
    for (long long j = 0; j <= n - 1; ++j)
      out.weights.insert(detail::column(n, j));
    break;
  case BasicSymbol::Kind::L:
    for (long long j = 0; j <= std::min(sym.index, static_cast<long long>(n - 1)); ++j)
      out.weights.insert(detail::column(n, j));
    break;
  case BasicSymbol::Kind::R:
    for (long long j = 0; j <= std::min(sym.index, static_cast<long long>(n)); ++j)
      out.weights.insert(detail::column(n, n - j));
    break;
  case BasicSymbol::Kind::Linf: {
    out.cap = cap;
    const long long rows = std::min(sym.index, static_cast<long long>(n - 1));
    std::vector<long long> cur;
    std::vector<std::vector<long long>> parts;
    detail::enumerate_partitions(rows, cap, cap, cur, parts);
    for (auto& p : parts)
      out.weights.insert(DominantWeight(n, std::move(p)));
    break;
  }
  case BasicSymbol::Kind::Rinf: {
    out.cap = cap;
    // Image of the matching left family under dualization; a dual of size
    // <= cap forces the first part <= cap, so this enumeration is complete.
    const long long rows = std::min(sym.index, static_cast<long long>(n - 1));
    std::vector<long long> cur;
    std::vector<std::vector<long long>> parts;
    detail::enumerate_partitions(rows, rows * cap, cap, cur, parts);
    for (auto& p : parts) {
      DominantWeight d = dualize(DominantWeight(n, std::move(p)));
      if (d.size() <= cap)
        out.weights.insert(d);
    }
    break;
  }
  }
  return out;
}

/* Level-n set of a canonical c.l.s.: the product of the basic level sets of
   its factors. Exact for finite type, capped otherwise. */
inline WeightSet cls_level(const ClsCanonical& q, int n, long long cap) {
  if (q.is_e_infinity())
    throw EInfinityNotEnumerable();
  WeightSet acc;
  acc.rank = n;
  acc.weights.insert(DominantWeight::trivial(n));
  if (q.v() > 0)
    acc = set_mul(acc, basic_level({BasicSymbol::Kind::Linf, q.v()}, n, cap));
  for (const auto& [idx, exp] : q.left())
    for (long long k = 0; k < exp; ++k)
      acc = set_mul(acc, basic_level({BasicSymbol::Kind::L, idx}, n, cap));
  for (long long k = 0; k < q.m(); ++k)
    acc = set_mul(acc, basic_level({BasicSymbol::Kind::E, 0}, n, cap));
  if (q.w() > 0)
    acc = set_mul(acc, basic_level({BasicSymbol::Kind::Rinf, q.w()}, n, cap));
  for (const auto& [idx, exp] : q.right())
    for (long long k = 0; k < exp; ++k)
      acc = set_mul(acc, basic_level({BasicSymbol::Kind::R, idx}, n, cap));
  return acc;
}

/* Raw Gelfand-Tsetlin interlacing patterns, un-normalized and with
   multiplicity: mu with lambda_1 >= mu_1 >= lambda_2 >= ... >= mu_{n-1} >=
   lambda_n = 0. Dimension bookkeeping needs this form. */
inline std::vector<std::vector<long long>> branch_raw(const DominantWeight& w) {
  if (w.rank() < 3)
    throw std::invalid_argument("branching requires rank at least 3");
  const int n = w.rank();
  std::vector<std::vector<long long>> out;
  std::vector<long long> mu(static_cast<std::size_t>(n - 1));
  auto rec = [&](auto&& self, int i) -> void {
    if (i == n - 1) {
      out.push_back(mu);
      return;
    }
    for (long long x = w.part(static_cast<std::size_t>(i) + 1);
         x <= w.part(static_cast<std::size_t>(i)); ++x) {
      mu[static_cast<std::size_t>(i)] = x;
      self(self, i + 1);
    }
  };
  rec(rec, 0);
  return out;
}

/* Restriction to the next rank down: normalized, deduplicated. */
inline WeightSet branch(const DominantWeight& w) {
  WeightSet out;
  out.rank = w.rank() - 1;
  for (auto& mu : branch_raw(w))
    out.weights.insert(DominantWeight(w.rank() - 1, std::move(mu)));
  return out;
}

/* Verdict of the defining coherence property Q_{n-1} = <Q_n>_{n-1} at one
   rank step. Exact sets are compared outright. Truncated sets are compared
   in two directions: every branched weight of degree within the cap must
   appear one rank down (the truncations are degree-complete up to the cap),
   while the reverse containment is only decidable below cap minus the
   largest degree drop branching exhibits, which is usually vacuous; the
   report records the windows used. */
struct CoherenceReport {
  bool coherent = false;
  bool exact = false;
  long long soundness_degree = -1;    // closure ⊆ low window (-1: unbounded)
  long long completeness_degree = -1; // low ⊆ closure window (-1: unbounded)
  std::size_t high_size = 0, low_size = 0, closure_size = 0;
  std::vector<DominantWeight> not_in_low;      // branched weights missing below
  std::vector<DominantWeight> not_in_closure;  // low weights never reached
};

inline CoherenceReport coherence_check(const ClsCanonical& q, int n, long long cap) {
  if (q.is_e_infinity())
    throw EInfinityNotEnumerable();
  if (n < 3)
    throw std::invalid_argument("coherence check requires rank at least 3");

  const WeightSet high = cls_level(q, n, cap);
  const WeightSet low = cls_level(q, n - 1, cap);

  WeightSet closure;
  closure.rank = n - 1;
  long long max_drop = 0;
  for (const auto& lam : high.weights) {
    long long min_size = lam.size();
    for (const auto& mu : branch(lam).weights) {
      closure.weights.insert(mu);
      min_size = std::min(min_size, mu.size());
    }
    max_drop = std::max(max_drop, lam.size() - min_size);
  }

  CoherenceReport rep;
  rep.exact = !high.cap && !low.cap;
  rep.high_size = high.weights.size();
  rep.low_size = low.weights.size();
  rep.closure_size = closure.weights.size();

  if (rep.exact) {
    for (const auto& w : closure.weights)
      if (!low.contains(w))
        rep.not_in_low.push_back(w);
    for (const auto& w : low.weights)
      if (!closure.contains(w))
        rep.not_in_closure.push_back(w);
  } else {
    rep.soundness_degree = *low.cap;
    rep.completeness_degree = std::max<long long>(0, *high.cap - max_drop);
    for (const auto& w : closure.weights)
      if (w.size() <= rep.soundness_degree && !low.contains(w))
        rep.not_in_low.push_back(w);
    for (const auto& w : low.weights)
      if (w.size() <= rep.completeness_degree && !closure.contains(w))
        rep.not_in_closure.push_back(w);
  }
  rep.coherent = rep.not_in_low.empty() && rep.not_in_closure.empty();
  return rep;
}

} // namespace hwcls
