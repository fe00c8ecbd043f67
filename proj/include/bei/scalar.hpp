#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace bei {

// Coefficient field. p == 0 selects the rationals, p > 0 the prime field F_p.
// All scalar arithmetic goes through Field so both cases share one element type.
struct Field {
  std::uint32_t p = 0;

  bool is_fp() const { return p != 0; }
  friend bool operator==(const Field&, const Field&) = default;
  std::string name() const { return p == 0 ? "Q" : "F" + std::to_string(p); }
};

inline constexpr std::uint32_t kDefaultPrime = 32003;

// Field element. Over Q a canonical mpq; over F_p the residue 0..p-1 with
// denominator 1. Construction from raw values must pass through Field::reduce.
class Scalar {
 public:
  Scalar() : v_(0) {}
  explicit Scalar(const mpq_class& v) : v_(v) {}

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_one() const { return v_ == 1; }
  int sign() const { return sgn(v_); }
  const mpq_class& value() const { return v_; }

  friend bool operator==(const Scalar&, const Scalar&) = default;

  // "3/2", "-1", "17"
  std::string str() const { return v_.get_str(); }

 private:
  mpq_class v_;
};

Scalar reduce(const Field& F, const mpq_class& v);
Scalar scalar_of(const Field& F, long num, long den = 1);
Scalar parse_scalar(const Field& F, const std::string& s);

// residue in [0, p-1] of a scalar under a prime field; requires F.is_fp()
std::uint32_t fp_value(const Field& F, const Scalar& a);

Scalar add(const Field& F, const Scalar& a, const Scalar& b);
Scalar sub(const Field& F, const Scalar& a, const Scalar& b);
Scalar mul(const Field& F, const Scalar& a, const Scalar& b);
Scalar neg(const Field& F, const Scalar& a);
Scalar inv(const Field& F, const Scalar& a);   // throws on zero
Scalar div(const Field& F, const Scalar& a, const Scalar& b);

}  // namespace bei
