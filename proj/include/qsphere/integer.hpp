#pragma once

#include <cstdint>
#include <string>
#include <variant>

#include <gmpxx.h>

namespace qsphere {

/// Arbitrary-precision integer with an int64 fast path.
///
/// Values that fit in 64 bits are held inline; anything larger is promoted to
/// a GMP integer and demoted again as soon as it fits. Equality is value
/// equality regardless of representation.
class Integer {
 public:
  Integer() = default;
  Integer(std::int64_t value) : rep_(value) {}  // NOLINT: implicit by design of a numeric type
  explicit Integer(mpz_class value);

  bool is_zero() const;
  int sign() const;
  bool is_small() const { return std::holds_alternative<std::int64_t>(rep_); }
  std::int64_t small_value() const { return std::get<std::int64_t>(rep_); }
  mpz_class to_mpz() const;
  std::string to_string() const;

  Integer abs() const;
  Integer operator-() const;
  Integer& operator+=(const Integer& other);
  Integer& operator-=(const Integer& other);
  Integer& operator*=(const Integer& other);

  friend Integer operator+(Integer a, const Integer& b) { return a += b; }
  friend Integer operator-(Integer a, const Integer& b) { return a -= b; }
  friend Integer operator*(Integer a, const Integer& b) { return a *= b; }
  friend bool operator==(const Integer& a, const Integer& b);

 private:
  void demote();

  std::variant<std::int64_t, mpz_class> rep_{std::int64_t{0}};
};

}  // namespace qsphere
