#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace gs {

using BigNat = boost::multiprecision::cpp_int;  // non-negative throughout

enum class Cmp { LT, EQ, GT };

// Classification of a positive integer by its k-normal form: limit type when
// the remainder is 0 and the index is positive, successor type otherwise.
enum class KType { SuccessorType, LimitType };

inline Cmp flip(Cmp c) {
  return c == Cmp::LT ? Cmp::GT : (c == Cmp::GT ? Cmp::LT : Cmp::EQ);
}

template <class T>
Cmp cmp_scalar(const T& a, const T& b) {
  return a < b ? Cmp::LT : (b < a ? Cmp::GT : Cmp::EQ);
}

struct precondition_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct invalid_filler_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct not_countable_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct certification_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct internal_error : std::logic_error {
  using std::logic_error::logic_error;
};

// Syntax error with byte offset into the input.
struct parse_error : std::runtime_error {
  size_t pos;
  parse_error(size_t p, const std::string& msg)
      : std::runtime_error(msg + " at position " + std::to_string(p)), pos(p) {}
};

struct EvalCaps {
  uint64_t cap_bits = 65536;      // values needing more bits report Exceeded
  uint64_t node_budget = 100000;  // symbolic term-size stop for Goodstein runs
  uint64_t ncap = 8;              // ncount bound for ordinal-index enumeration
};

inline uint64_t bit_length(const BigNat& v) {
  if (v == 0) return 0;
  return boost::multiprecision::msb(v) + 1;
}

// Arbitrary-precision natural carrying an overflow budget. Exceeded is a value,
// not a failure: the exact number has more than cap_bits bits. An Exceeded
// compares greater than any Exact of the same budget; two Exceeded values are
// incomparable.
class BudgetedNat {
 public:
  BudgetedNat() : exceeded_(false), cap_bits_(EvalCaps{}.cap_bits), v_(0) {}

  static BudgetedNat of(BigNat v, uint64_t cap_bits) {
    BudgetedNat r;
    r.cap_bits_ = cap_bits;
    if (bit_length(v) > cap_bits) {
      r.exceeded_ = true;
    } else {
      r.v_ = std::move(v);
    }
    return r;
  }

  static BudgetedNat exceeded(uint64_t cap_bits) {
    BudgetedNat r;
    r.cap_bits_ = cap_bits;
    r.exceeded_ = true;
    return r;
  }

  bool is_exact() const { return !exceeded_; }
  bool is_exceeded() const { return exceeded_; }
  uint64_t cap_bits() const { return cap_bits_; }

  const BigNat& value() const {
    if (exceeded_) throw internal_error("value() on Exceeded BudgetedNat");
    return v_;
  }

  bool is_zero() const { return !exceeded_ && v_ == 0; }

  bool fits_u64() const {
    return !exceeded_ && v_ <= BigNat(UINT64_MAX);
  }
  uint64_t as_u64() const {
    if (!fits_u64()) throw internal_error("BudgetedNat does not fit machine word");
    return v_.convert_to<uint64_t>();
  }

  std::string str() const { return exceeded_ ? "overflow" : v_.str(); }

 private:
  bool exceeded_;
  uint64_t cap_bits_;
  BigNat v_;
};

inline BudgetedNat bn_exact(uint64_t v, const EvalCaps& caps) {
  return BudgetedNat::of(BigNat(v), caps.cap_bits);
}

inline BudgetedNat bn_add(const BudgetedNat& a, const BudgetedNat& b) {
  uint64_t cap = std::min(a.cap_bits(), b.cap_bits());
  if (a.is_exceeded() || b.is_exceeded()) return BudgetedNat::exceeded(cap);
  return BudgetedNat::of(a.value() + b.value(), cap);
}

inline BudgetedNat bn_add_u(const BudgetedNat& a, uint64_t b) {
  if (a.is_exceeded()) return a;
  return BudgetedNat::of(a.value() + b, a.cap_bits());
}

// Truncated subtraction; only meaningful for exact operands.
inline BudgetedNat bn_sub(const BudgetedNat& a, const BudgetedNat& b) {
  uint64_t cap = std::min(a.cap_bits(), b.cap_bits());
  if (a.is_exceeded() || b.is_exceeded()) return BudgetedNat::exceeded(cap);
  if (a.value() <= b.value()) return BudgetedNat::of(BigNat(0), cap);
  return BudgetedNat::of(a.value() - b.value(), cap);
}

inline BudgetedNat bn_mul(const BudgetedNat& a, const BudgetedNat& b) {
  uint64_t cap = std::min(a.cap_bits(), b.cap_bits());
  if (a.is_exceeded() || b.is_exceeded()) return BudgetedNat::exceeded(cap);
  // quick size gate so we never materialize absurd products
  if (a.value() > 1 && b.value() > 1 &&
      bit_length(a.value()) + bit_length(b.value()) > cap + 1)
    return BudgetedNat::exceeded(cap);
  return BudgetedNat::of(a.value() * b.value(), cap);
}

// Three-way compare; nullopt when both sides are Exceeded.
inline std::optional<Cmp> bn_cmp(const BudgetedNat& a, const BudgetedNat& b) {
  if (a.is_exceeded() && b.is_exceeded()) return std::nullopt;
  if (a.is_exceeded()) return Cmp::GT;
  if (b.is_exceeded()) return Cmp::LT;
  return cmp_scalar(a.value(), b.value());
}

inline bool bn_le(const BudgetedNat& a, const BudgetedNat& b) {
  auto c = bn_cmp(a, b);
  return c && *c != Cmp::GT;
}

inline bool bn_lt(const BudgetedNat& a, const BudgetedNat& b) {
  auto c = bn_cmp(a, b);
  return c && *c == Cmp::LT;
}

inline BigNat parse_bignat(const std::string& s) {
  if (s.empty()) throw parse_error(0, "empty number");
  for (size_t i = 0; i < s.size(); ++i)
    if (!isdigit((unsigned char)s[i])) throw parse_error(i, "expected digit");
  return BigNat(s);
}

}  // namespace gs
