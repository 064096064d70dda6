#include "qsphere/integer.hpp"

#include <climits>

namespace qsphere {

namespace {

mpz_class from_int64(std::int64_t v) {
  static_assert(sizeof(long) == sizeof(std::int64_t), "LP64 platform expected");
  return mpz_class(static_cast<long>(v));
}

}  // namespace

Integer::Integer(mpz_class value) : rep_(std::move(value)) { demote(); }

void Integer::demote() {
  if (auto* big = std::get_if<mpz_class>(&rep_); big && mpz_fits_slong_p(big->get_mpz_t())) {
    rep_ = static_cast<std::int64_t>(mpz_get_si(big->get_mpz_t()));
  }
}

bool Integer::is_zero() const { return sign() == 0; }

int Integer::sign() const {
  if (is_small()) {
    auto v = small_value();
    return (v > 0) - (v < 0);
  }
  return sgn(std::get<mpz_class>(rep_));
}

mpz_class Integer::to_mpz() const {
  return is_small() ? from_int64(small_value()) : std::get<mpz_class>(rep_);
}

std::string Integer::to_string() const {
  return is_small() ? std::to_string(small_value()) : std::get<mpz_class>(rep_).get_str();
}

Integer Integer::abs() const { return sign() < 0 ? -*this : *this; }

Integer Integer::operator-() const {
  if (is_small()) {
    std::int64_t r;
    if (!__builtin_sub_overflow(std::int64_t{0}, small_value(), &r)) return Integer(r);
  }
  return Integer(mpz_class(-to_mpz()));
}

Integer& Integer::operator+=(const Integer& other) {
  if (is_small() && other.is_small()) {
    std::int64_t r;
    if (!__builtin_add_overflow(small_value(), other.small_value(), &r)) {
      rep_ = r;
      return *this;
    }
  }
  rep_ = mpz_class(to_mpz() + other.to_mpz());
  demote();
  return *this;
}

Integer& Integer::operator-=(const Integer& other) {
  if (is_small() && other.is_small()) {
    std::int64_t r;
    if (!__builtin_sub_overflow(small_value(), other.small_value(), &r)) {
      rep_ = r;
      return *this;
    }
  }
  rep_ = mpz_class(to_mpz() - other.to_mpz());
  demote();
  return *this;
}

Integer& Integer::operator*=(const Integer& other) {
  if (is_small() && other.is_small()) {
    std::int64_t r;
    if (!__builtin_mul_overflow(small_value(), other.small_value(), &r)) {
      rep_ = r;
      return *this;
    }
  }
  rep_ = mpz_class(to_mpz() * other.to_mpz());
  demote();
  return *this;
}

bool operator==(const Integer& a, const Integer& b) {
  // Representations are canonical: a big value never fits in int64.
  if (a.is_small() != b.is_small()) return false;
  if (a.is_small()) return a.small_value() == b.small_value();
  return std::get<mpz_class>(a.rep_) == std::get<mpz_class>(b.rep_);
}

}  // namespace qsphere
