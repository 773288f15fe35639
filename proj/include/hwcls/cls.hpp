#pragma once

#include <map>
#include <string>
#include <vector>

#include "hwcls/errors.hpp"
#include "hwcls/function_spec.hpp"
#include "hwcls/scalar.hpp"

namespace hwcls {

/* An irreducible coherent local system in canonical factored form:

       (Linf(v) L(i1)^x1 ... L(ik)^xk)  E^m  (Rinf(w) R(j1)^z1 ... R(jl)^zl)

   with all finite indices strictly above the corresponding infinite level,
   plus the absorbing element Einf. Level v or w equal to 0 means the
   infinite factor is absent; the all-zero form is the identity. */
class ClsCanonical {
public:
  ClsCanonical() = default;

  static ClsCanonical identity() { return {}; }

  static ClsCanonical e_infinity() {
    ClsCanonical q;
    q.e_infinity_ = true;
    return q;
  }

  /* Normalizes: nonpositive exponents are dropped, finite indices at or
     below the infinite level are absorbed by it. */
  static ClsCanonical make(long long v, std::map<long long, long long> left, long long m,
                           long long w, std::map<long long, long long> right) {
    if (v < 0 || w < 0 || m < 0)
      throw MalformedFactorList("negative level or exponent");
    ClsCanonical q;
    q.v_ = v;
    q.m_ = m;
    q.w_ = w;
    for (const auto& [idx, exp] : left)
      if (exp > 0 && idx > v)
        q.left_[idx] = exp;
    for (const auto& [idx, exp] : right)
      if (exp > 0 && idx > w)
        q.right_[idx] = exp;
    return q;
  }

  bool is_e_infinity() const { return e_infinity_; }
  long long v() const { return v_; }
  long long m() const { return m_; }
  long long w() const { return w_; }
  const std::map<long long, long long>& left() const { return left_; }
  const std::map<long long, long long>& right() const { return right_; }

  bool is_identity() const {
    return !e_infinity_ && v_ == 0 && w_ == 0 && m_ == 0 && left_.empty() && right_.empty();
  }

  friend bool operator==(const ClsCanonical& a, const ClsCanonical& b) {
    if (a.e_infinity_ != b.e_infinity_)
      return false;
    if (a.e_infinity_)
      return true;
    return a.v_ == b.v_ && a.m_ == b.m_ && a.w_ == b.w_ && a.left_ == b.left_ &&
           a.right_ == b.right_;
  }
  friend bool operator!=(const ClsCanonical& a, const ClsCanonical& b) { return !(a == b); }

private:
  bool e_infinity_ = false;
  long long v_ = 0, m_ = 0, w_ = 0;
  std::map<long long, long long> left_, right_;
};

/* Finite type means finite level sets: no infinite left/right factor. */
inline bool cls_is_finite_type(const ClsCanonical& q) {
  return !q.is_e_infinity() && q.v() == 0 && q.w() == 0;
}

/* Monoid law on canonical forms: Einf absorbs, levels and exponents add,
   then finite factors swallowed by the grown infinite levels are deleted.
   The deletion rewrites are validated against level-set enumeration; the
   additivity of the two infinite levels is a convention (the source
   calculus never multiplies two infinite factors of the same side). */
inline ClsCanonical cls_mul(const ClsCanonical& a, const ClsCanonical& b) {
  if (a.is_e_infinity() || b.is_e_infinity())
    return ClsCanonical::e_infinity();
  std::map<long long, long long> left = a.left(), right = a.right();
  for (const auto& [idx, exp] : b.left())
    left[idx] += exp;
  for (const auto& [idx, exp] : b.right())
    right[idx] += exp;
  return ClsCanonical::make(a.v() + b.v(), std::move(left), a.m() + b.m(), a.w() + b.w(),
                            std::move(right));
}

/* Multiplicity of a weight value: a count or the symbol infinity. */
struct Multiplicity {
  bool infinite = false;
  long long count = 0;

  static Multiplicity inf() { return {true, 0}; }
  static Multiplicity finite(long long n) { return {false, n}; }

  Multiplicity& operator+=(const Multiplicity& o) {
    infinite = infinite || o.infinite;
    count = infinite ? 0 : count + o.count;
    return *this;
  }
  friend bool operator==(const Multiplicity& a, const Multiplicity& b) {
    return a.infinite == b.infinite && (a.infinite || a.count == b.count);
  }
};

/* Value histogram of an integral dominant function with finitely many
   values: d[c] is the multiplicity of b+c where b is the least value and s
   the span; p and q mark the first and last infinite multiplicity (both 0
   when every multiplicity is finite). */
struct ClsProfile {
  long long s = 0;
  std::vector<Multiplicity> d;
  long long p = 0, q = 0;
};

inline ClsProfile profile_of(const FunctionSpec& f) {
  if (!is_integral(f))
    throw NotIntegral();
  if (!is_dominant(f))
    throw NotDominant();
  if (f.has_arith())
    throw InfinitelyManyValues();

  // One integrality class, so offsets alone identify the values.
  std::map<Rational, Multiplicity> hist;
  for (const auto& s : f.segments()) {
    for (const auto& val : s.values)
      hist[val.offset()] += Multiplicity::finite(1);
    if (s.infinite())
      hist[s.tail.offset()] += Multiplicity::inf();
  }

  ClsProfile prof;
  if (hist.empty())
    return prof;
  const Rational b = hist.begin()->first;
  const Rational top = hist.rbegin()->first;
  prof.s = to_integer(top - b);
  prof.d.assign(static_cast<std::size_t>(prof.s) + 1, Multiplicity::finite(0));
  for (const auto& [off, mult] : hist)
    prof.d[static_cast<std::size_t>(to_integer(off - b))] = mult;

  bool any_inf = false;
  for (long long c = 0; c <= prof.s; ++c)
    if (prof.d[static_cast<std::size_t>(c)].infinite) {
      if (!any_inf)
        prof.p = c;
      prof.q = c;
      any_inf = true;
    }
  if (!any_inf)
    prof.p = prof.q = 0;
  return prof;
}

/* Closed form of the c.l.s. of an integrable highest weight module: the
   left factors are the cumulative counts below the first infinite value,
   the E power bridges the infinite plateau, and the right factors are the
   cumulative counts above the last infinite value, read downward. A
   function with infinitely many values yields the absorbing element. */
inline ClsCanonical cls_of_dominant(const FunctionSpec& f) {
  if (!is_dominant(f)) // throws NonIntegralInput for non-integral input
    throw NotDominant();
  if (f.has_arith())
    return ClsCanonical::e_infinity();

  const ClsProfile prof = profile_of(f);
  std::map<long long, long long> left, right;
  long long cum = 0;
  for (long long j = 0; j < prof.p; ++j) {
    cum += prof.d[static_cast<std::size_t>(j)].count;
    ++left[cum];
  }
  cum = 0;
  for (long long j = prof.s; j > prof.q; --j) {
    cum += prof.d[static_cast<std::size_t>(j)].count;
    ++right[cum];
  }
  return ClsCanonical::make(0, std::move(left), prof.q - prof.p, 0, std::move(right));
}

/* Inverse construction on an ideal order: reads the multiplicity sequence
   back off the canonical factors and lays the values out non-increasingly
   along the order — the top values descend through the leading omega block
   onto its tail plateau, the middle keeps that plateau, and the trailing
   omega* block carries the lower plateau with the small values stacked at
   the ≺-greatest positions. Contract: cls_of_dominant(duflo_function(Q, o))
   == Q. */
inline FunctionSpec duflo_function(const ClsCanonical& q, const BorelOrder& o) {
  if (!cls_is_finite_type(q))
    throw NotFiniteType();
  if (!is_ideal_order(o))
    throw NotIdealOrder();

  auto cumulative = [](const std::map<long long, long long>& factors) {
    std::vector<long long> sums;
    for (const auto& [idx, exp] : factors)
      for (long long k = 0; k < exp; ++k)
        sums.push_back(idx);
    return sums; // ascending: map iteration order
  };

  const std::vector<long long> lsums = cumulative(q.left());
  const std::vector<long long> rsums = cumulative(q.right());
  const long long p = static_cast<long long>(lsums.size());
  const long long qq = p + q.m();
  const long long s = qq + static_cast<long long>(rsums.size());

  // d[0..p-1] from the left cumulative sums, d[s..q+1] from the right ones.
  auto increments = [](const std::vector<long long>& sums) {
    std::vector<long long> d;
    long long prev = 0;
    for (long long c : sums) {
      if (c < prev)
        throw MalformedFactorList("cumulative sums must be non-decreasing");
      d.push_back(c - prev);
      prev = c;
    }
    return d;
  };
  const std::vector<long long> dlow = increments(lsums);  // d[0], d[1], ..., d[p-1]
  const std::vector<long long> dhigh = increments(rsums); // d[s], d[s-1], ..., d[q+1]

  auto rat = [](long long k) { return ScalarValue(Rational(k)); };

  std::vector<Segment> segs;
  const auto& blocks = o.blocks();

  // Leading omega block: head descends s, ..., q+1 with multiplicities, then
  // the constant plateau q.
  std::vector<ScalarValue> head;
  for (long long j = 0; j < static_cast<long long>(dhigh.size()); ++j)
    for (long long k = 0; k < dhigh[static_cast<std::size_t>(j)]; ++k)
      head.push_back(rat(s - j));
  segs.push_back(Segment::omega(rat(qq), std::move(head)));

  // Middle blocks stay on the plateau q.
  for (std::size_t i = 1; i + 1 < blocks.size(); ++i) {
    switch (blocks[i].kind) {
    case OrderBlock::Kind::Fin:
      segs.push_back(Segment::fin(std::vector<ScalarValue>(
          static_cast<std::size_t>(blocks[i].size), rat(qq))));
      break;
    case OrderBlock::Kind::Omega:
      segs.push_back(Segment::omega(rat(qq)));
      break;
    case OrderBlock::Kind::OmegaStar:
      segs.push_back(Segment::omega_star(rat(qq)));
      break;
    }
  }

  // Trailing omega* block: plateau p, then 0s, 1s, ... stacked from the
  // ≺-greatest position downward.
  std::vector<ScalarValue> top;
  for (long long j = 0; j < p; ++j)
    for (long long k = 0; k < dlow[static_cast<std::size_t>(j)]; ++k)
      top.push_back(rat(j));
  segs.push_back(Segment::omega_star(rat(p), std::move(top)));

  return FunctionSpec(std::move(segs));
}

/* The ascent sum, descent sum and finite-piece total of the coarsest
   constant partition; finite exactly when the nonvanishing criterion holds. */
struct BoundData {
  long long nint = 0, wid = 0, gamma = 0;
};

inline BoundData bound_data(const FunctionSpec& f) {
  if (!annihilator_nonzero(f))
    throw CriterionFails();

  BoundData bd;
  std::vector<ScalarValue> tails;
  for (const auto& piece : coarsest_constant_partition(f)) {
    if (piece.infinite)
      tails.push_back(piece.value);
    else
      bd.gamma += piece.size;
  }
  for (std::size_t j = 0; j + 1 < tails.size(); ++j) {
    // Almost integrality makes consecutive tail differences integers.
    const long long diff = to_integer(tails[j + 1].offset() - tails[j].offset());
    if (diff > 0)
      bd.nint += diff;
    else
      bd.wid += -diff;
  }
  return bd;
}

/* The bounding c.l.s. Linf(nint+gamma) E^wid, in canonical form. */
inline ClsCanonical bound_cls(const FunctionSpec& f) {
  const BoundData bd = bound_data(f);
  return ClsCanonical::make(bd.nint + bd.gamma, {}, bd.wid, 0, {});
}

/* Wraps a finite-type c.l.s. with infinite factors at levels l and r. */
inline ClsCanonical attach_infinite(const ClsCanonical& q, long long l, long long r) {
  if (!cls_is_finite_type(q))
    throw NotFiniteType();
  return cls_mul(q, ClsCanonical::make(l, {}, 0, r, {}));
}

/* Canonical text: left factors ascending, E power, right factors ascending;
   the identity prints as `1`. */
inline std::string to_string(const ClsCanonical& q) {
  if (q.is_e_infinity())
    return "Einf";
  if (q.is_identity())
    return "1";
  std::vector<std::string> parts;
  if (q.v() > 0)
    parts.push_back("Linf(" + std::to_string(q.v()) + ")");
  for (const auto& [idx, exp] : q.left())
    parts.push_back("L(" + std::to_string(idx) + ")" +
                    (exp > 1 ? "^" + std::to_string(exp) : ""));
  if (q.m() == 1)
    parts.push_back("E");
  else if (q.m() > 1)
    parts.push_back("E^" + std::to_string(q.m()));
  if (q.w() > 0)
    parts.push_back("Rinf(" + std::to_string(q.w()) + ")");
  for (const auto& [idx, exp] : q.right())
    parts.push_back("R(" + std::to_string(idx) + ")" +
                    (exp > 1 ? "^" + std::to_string(exp) : ""));
  std::string r;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i)
      r += " ";
    r += parts[i];
  }
  return r;
}

} // namespace hwcls
