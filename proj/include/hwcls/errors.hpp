#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hwcls {

/* Base class for all domain errors thrown by this library. */
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/* Raised by the text parsers; carries the byte offset of the failure and a
   short description of what was expected there. */
class ParseError : public Error {
public:
  ParseError(std::size_t pos, std::string expected)
      : Error("parse error at " + std::to_string(pos) + ": expected " + expected),
        pos_(pos), expected_(std::move(expected)) {}

  std::size_t pos() const { return pos_; }
  const std::string& expected() const { return expected_; }

private:
  std::size_t pos_;
  std::string expected_;
};

class NonIntegralInput : public Error {
public:
  NonIntegralInput() : Error("dominance is defined for integral functions only") {}
};

class NotLocallyConstant : public Error {
public:
  NotLocallyConstant() : Error("function is not locally constant") {}
};

class NotIntegral : public Error {
public:
  NotIntegral() : Error("function is not integral") {}
};

class NotDominant : public Error {
public:
  NotDominant() : Error("function is not dominant") {}
};

class InfinitelyManyValues : public Error {
public:
  InfinitelyManyValues() : Error("function takes infinitely many values") {}
};

class NotFiniteType : public Error {
public:
  NotFiniteType() : Error("coherent local system is not of finite type") {}
};

class NotIdealOrder : public Error {
public:
  NotIdealOrder() : Error("order is not ideal (needs leading omega and trailing omega* block)") {}
};

class MalformedFactorList : public Error {
public:
  explicit MalformedFactorList(const std::string& what) : Error("malformed factor list: " + what) {}
};

class CriterionFails : public Error {
public:
  CriterionFails() : Error("nonvanishing criterion fails; no finite bound exists") {}
};

class RankMismatch : public Error {
public:
  RankMismatch(int a, int b)
      : Error("rank mismatch: " + std::to_string(a) + " vs " + std::to_string(b)) {}
};

class EInfinityNotEnumerable : public Error {
public:
  EInfinityNotEnumerable() : Error("the absorbing c.l.s. has no finite level sets") {}
};

} // namespace hwcls
