#include "qsphere/polynomial.hpp"

namespace qsphere {

void NCPolynomial::add_term(Word w, LaurentPoly coefficient) {
  if (coefficient.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(std::move(w), std::move(coefficient));
  if (inserted) return;
  it->second += coefficient;
  if (it->second.is_zero()) terms_.erase(it);
}

LaurentPoly NCPolynomial::coefficient(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? LaurentPoly() : it->second;
}

NCPolynomial NCPolynomial::star() const {
  NCPolynomial r;
  for (const auto& [w, c] : terms_) r.terms_.emplace(w.star(), c);
  return r;
}

NCPolynomial& NCPolynomial::operator+=(const NCPolynomial& other) {
  for (const auto& [w, c] : other.terms_) add_term(w, c);
  return *this;
}

NCPolynomial& NCPolynomial::operator-=(const NCPolynomial& other) {
  for (const auto& [w, c] : other.terms_) add_term(w, -c);
  return *this;
}

NCPolynomial NCPolynomial::operator-() const {
  NCPolynomial r;
  for (const auto& [w, c] : terms_) r.terms_.emplace(w, -c);
  return r;
}

NCPolynomial operator*(const NCPolynomial& a, const NCPolynomial& b) {
  NCPolynomial r;
  for (const auto& [u, c] : a.terms_) {
    for (const auto& [v, d] : b.terms_) r.add_term(u * v, c * d);
  }
  return r;
}

NCPolynomial operator*(const LaurentPoly& c, const NCPolynomial& p) {
  NCPolynomial r;
  if (c.is_zero()) return r;
  for (const auto& [w, d] : p.terms_) r.add_term(w, c * d);
  return r;
}

std::string NCPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [w, c] : terms_) {
    bool negative = false;
    std::string coeff;
    if (c.is_monomial()) {
      negative = c.terms()[0].coefficient.sign() < 0;
      coeff = (negative ? -c : c).to_string();
    } else {
      coeff = c.to_string();
      if (!w.empty() || terms_.size() > 1) coeff = "(" + coeff + ")";
    }
    std::string body;
    if (w.empty()) {
      body = coeff;
    } else if (coeff == "1") {
      body = w.to_string();
    } else {
      body = coeff + "·" + w.to_string();
    }
    if (first) {
      out += negative ? "-" + body : body;
    } else {
      out += negative ? " - " : " + ";
      out += body;
    }
    first = false;
  }
  return out;
}

}  // namespace qsphere
