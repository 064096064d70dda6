#pragma once

#include <string>
#include <vector>

#include <gmpxx.h>

#include "qsphere/integer.hpp"

namespace qsphere {

/// Element of Z[q, q^-1].
///
/// Terms are kept sorted by strictly descending exponent and no stored
/// coefficient is zero, so structural equality is ring equality.
class LaurentPoly {
 public:
  struct Term {
    int exponent;
    Integer coefficient;
    friend bool operator==(const Term&, const Term&) = default;
  };

  LaurentPoly() = default;
  explicit LaurentPoly(Integer constant) : LaurentPoly(monomial(0, std::move(constant))) {}

  /// coefficient * q^exponent; the zero polynomial when coefficient is 0.
  static LaurentPoly monomial(int exponent, Integer coefficient);

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  bool is_monomial() const { return terms_.size() == 1; }

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& other);
  LaurentPoly& operator-=(const LaurentPoly& other);
  LaurentPoly& operator*=(const LaurentPoly& other) { return *this = *this * other; }

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

  /// Text form, e.g. "q^9 - q^7", "-q^2 + 1", "q^-1", "0".
  std::string to_string() const;

 private:
  std::vector<Term> terms_;
};

/// Substitutes q := value exactly. Throws std::domain_error for value == 0.
mpq_class evaluate(const LaurentPoly& p, const mpq_class& value);

/// q^exponent
inline LaurentPoly q_power(int exponent) { return LaurentPoly::monomial(exponent, 1); }

}  // namespace qsphere
