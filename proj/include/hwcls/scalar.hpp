#pragma once

#include <compare>
#include <string>
#include <utility>

#include "hwcls/rational.hpp"

namespace hwcls {

/* An exact stand-in for a complex number, recorded as a coset of the
   rationals: an opaque label naming the coset plus a rational offset inside
   it. The empty label is the rational coset itself. Every predicate the
   algorithms need (integer difference, ordering inside one integrality
   class) is decidable in this model, and every concrete value appearing in
   the source material (sqrt(2)-1, 5, 9, ...) embeds faithfully via a fresh
   label per irrational generator.

   Values with distinct labels are never integer-congruent and are treated
   as incomparable. The label carries no arithmetic meaning beyond its
   identity. */
class ScalarValue {
public:
  ScalarValue() : offset_(0) {}
  explicit ScalarValue(Rational offset) : offset_(std::move(offset)) {}
  ScalarValue(std::string label, Rational offset)
      : label_(std::move(label)), offset_(std::move(offset)) {}

  const std::string& label() const { return label_; }
  const Rational& offset() const { return offset_; }

  bool rational() const { return label_.empty(); }

  friend bool operator==(const ScalarValue& a, const ScalarValue& b) {
    return a.label_ == b.label_ && a.offset_ == b.offset_;
  }
  friend bool operator!=(const ScalarValue& a, const ScalarValue& b) { return !(a == b); }

private:
  std::string label_;
  Rational offset_;
};

/* Whether a - b is an integer; requires equal labels and integer offset gap. */
inline bool int_congruent(const ScalarValue& a, const ScalarValue& b) {
  return a.label() == b.label() && is_integer(a.offset() - b.offset());
}

/* Same coset, equal offsets up to rational difference. */
inline bool comparable(const ScalarValue& a, const ScalarValue& b) {
  return a.label() == b.label();
}

/* Order within one integrality class; caller must ensure comparability. */
inline bool less_than(const ScalarValue& a, const ScalarValue& b) {
  return a.offset() < b.offset();
}

inline ScalarValue shift(const ScalarValue& a, long long k) {
  return ScalarValue(a.label(), a.offset() + Rational(k));
}

/* Canonical text: `r2+3`, `r2-1/2`, `r2`, `5`, `-3/2`. */
inline std::string to_string(const ScalarValue& v) {
  if (v.rational())
    return to_string(v.offset());
  if (is_zero(v.offset()))
    return v.label();
  if (sign(v.offset()) > 0)
    return v.label() + "+" + to_string(v.offset());
  return v.label() + "-" + to_string(-v.offset());
}

/* Lexicographic helper so values can key ordered containers. */
inline bool scalar_key_less(const ScalarValue& a, const ScalarValue& b) {
  if (a.label() != b.label())
    return a.label() < b.label();
  return a.offset() < b.offset();
}

} // namespace hwcls
