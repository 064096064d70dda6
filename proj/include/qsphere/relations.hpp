#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "qsphere/order.hpp"
#include "qsphere/polynomial.hpp"

namespace qsphere {

/// Oriented rewrite lhs -> rhs with a length-2 lhs.
struct Rule {
  Word lhs;
  NCPolynomial rhs;
  PairType type;
};

/// The reduction system of O(S_q^{4n-1}).
///
/// One rule for every letter pair (a, b) with a after b in list order, plus the
/// sphere rule x_n* x_n -> 1 - sum_{i<n} x_i* x_i - sum_i y_i* y_i. Immutable
/// after construction and safe to share between threads.
class ReductionSystem {
 public:
  /// Throws std::invalid_argument for n < 1 or n > kMaxN.
  explicit ReductionSystem(unsigned n);

  static constexpr unsigned kMaxN = 1024;

  unsigned n() const { return n_; }

  /// Rules ordered by (list position of first letter, list position of second letter).
  std::span<const Rule> rules() const { return rules_; }

  /// Rule with lhs `a b`, or nullptr. Letters must be valid for n.
  const Rule* rule_for(Generator a, Generator b) const {
    auto id = table_[slot(a) * 4 * n_ + slot(b)];
    return id < 0 ? nullptr : &rules_[static_cast<std::size_t>(id)];
  }

  /// Lookup by a two-letter word; nullptr when it is not a lhs.
  /// Throws std::invalid_argument if `pair` is not two letters valid for n.
  const Rule* rule_for(const Word& pair) const;

  /// Type of a lhs; throws std::invalid_argument if `pair` is not a lhs.
  PairType classify(const Word& pair) const;

  /// 0-based list position.
  std::size_t slot(Generator g) const { return list_position(g, n_) - 1; }

 private:
  unsigned n_;
  std::vector<Rule> rules_;
  std::vector<std::int32_t> table_;
};

inline ReductionSystem build_system(unsigned n) { return ReductionSystem(n); }

}  // namespace qsphere
