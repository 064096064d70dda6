#pragma once

#include <map>
#include <string>

#include "qsphere/laurent.hpp"
#include "qsphere/word.hpp"

namespace qsphere {

/// Element of the free algebra Z[q, q^-1]<X>: a finite Word -> LaurentPoly map.
///
/// Terms are stored in canonical word order (length, then letter order) and
/// zero coefficients are never stored.
class NCPolynomial {
 public:
  using TermMap = std::map<Word, LaurentPoly>;

  NCPolynomial() = default;
  explicit NCPolynomial(Word w) { add_term(std::move(w), LaurentPoly(1)); }
  NCPolynomial(LaurentPoly coefficient, Word w) { add_term(std::move(w), std::move(coefficient)); }

  static NCPolynomial constant(LaurentPoly c) { return NCPolynomial(std::move(c), Word()); }

  /// Adds coefficient * w, merging with an existing term and pruning zeros.
  void add_term(Word w, LaurentPoly coefficient);

  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  /// Zero if w is absent.
  LaurentPoly coefficient(const Word& w) const;

  NCPolynomial star() const;

  NCPolynomial& operator+=(const NCPolynomial& other);
  NCPolynomial& operator-=(const NCPolynomial& other);
  NCPolynomial operator-() const;

  friend NCPolynomial operator+(NCPolynomial a, const NCPolynomial& b) { return a += b; }
  friend NCPolynomial operator-(NCPolynomial a, const NCPolynomial& b) { return a -= b; }
  friend NCPolynomial operator*(const NCPolynomial& a, const NCPolynomial& b);
  friend NCPolynomial operator*(const LaurentPoly& c, const NCPolynomial& p);
  friend bool operator==(const NCPolynomial&, const NCPolynomial&) = default;

  /// e.g. "q^6·x1* x3 y3 y2 + (q^9 - q^7)·x1* x1 y2 y1", "1 - y1* y1", "0".
  std::string to_string() const;

 private:
  TermMap terms_;
};

}  // namespace qsphere
