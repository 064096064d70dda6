#include "qsphere/laurent.hpp"

#include <algorithm>
#include <stdexcept>

namespace qsphere {

namespace {

using Term = LaurentPoly::Term;

// Merge two descending term lists; `sign` selects addition or subtraction.
std::vector<Term> merge(const std::vector<Term>& a, const std::vector<Term>& b, bool subtract) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() || j != b.end()) {
    if (j == b.end() || (i != a.end() && i->exponent > j->exponent)) {
      out.push_back(*i++);
    } else if (i == a.end() || j->exponent > i->exponent) {
      out.push_back({j->exponent, subtract ? -j->coefficient : j->coefficient});
      ++j;
    } else {
      Integer c = subtract ? i->coefficient - j->coefficient : i->coefficient + j->coefficient;
      if (!c.is_zero()) out.push_back({i->exponent, std::move(c)});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

LaurentPoly LaurentPoly::monomial(int exponent, Integer coefficient) {
  LaurentPoly p;
  if (!coefficient.is_zero()) p.terms_.push_back({exponent, std::move(coefficient)});
  return p;
}

bool LaurentPoly::is_one() const {
  return terms_.size() == 1 && terms_[0].exponent == 0 && terms_[0].coefficient == Integer(1);
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& t : r.terms_) t.coefficient = -t.coefficient;
  return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other) {
  if (other.is_zero()) return *this;
  if (is_zero()) return *this = other;
  terms_ = merge(terms_, other.terms_, false);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& other) {
  if (other.is_zero()) return *this;
  terms_ = merge(terms_, other.terms_, true);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly r;
  if (a.is_zero() || b.is_zero()) return r;
  if (a.is_monomial() || b.is_monomial()) {
    const auto& single = a.is_monomial() ? a.terms_[0] : b.terms_[0];
    const auto& other = a.is_monomial() ? b : a;
    r.terms_.reserve(other.terms_.size());
    for (const auto& t : other.terms_) {
      r.terms_.push_back({t.exponent + single.exponent, t.coefficient * single.coefficient});
    }
    return r;
  }
  std::vector<Term> products;
  products.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& s : a.terms_) {
    for (const auto& t : b.terms_) {
      products.push_back({s.exponent + t.exponent, s.coefficient * t.coefficient});
    }
  }
  std::stable_sort(products.begin(), products.end(),
                   [](const Term& x, const Term& y) { return x.exponent > y.exponent; });
  for (auto& p : products) {
    if (!r.terms_.empty() && r.terms_.back().exponent == p.exponent) {
      r.terms_.back().coefficient += p.coefficient;
      if (r.terms_.back().coefficient.is_zero()) r.terms_.pop_back();
    } else {
      r.terms_.push_back(std::move(p));
    }
  }
  return r;
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (std::size_t k = 0; k < terms_.size(); ++k) {
    const auto& t = terms_[k];
    bool negative = t.coefficient.sign() < 0;
    if (k == 0) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    Integer magnitude = t.coefficient.abs();
    bool unit = magnitude == Integer(1);
    if (t.exponent == 0) {
      out += magnitude.to_string();
      continue;
    }
    if (!unit) out += magnitude.to_string();
    out += 'q';
    if (t.exponent != 1) out += '^' + std::to_string(t.exponent);
  }
  return out;
}

mpq_class evaluate(const LaurentPoly& p, const mpq_class& value) {
  if (value == 0) throw std::domain_error("cannot evaluate a Laurent polynomial at q = 0");
  mpq_class sum = 0;
  for (const auto& t : p.terms()) {
    mpq_class power = 1;
    mpz_pow_ui(power.get_num_mpz_t(), value.get_num_mpz_t(), static_cast<unsigned long>(std::abs(t.exponent)));
    mpz_pow_ui(power.get_den_mpz_t(), value.get_den_mpz_t(), static_cast<unsigned long>(std::abs(t.exponent)));
    power.canonicalize();
    if (t.exponent < 0) power = 1 / power;
    sum += power * mpq_class(t.coefficient.to_mpz());
  }
  return sum;
}

}  // namespace qsphere
