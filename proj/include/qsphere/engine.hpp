#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "qsphere/relations.hpp"

namespace qsphere {

/// Which redex of a word is rewritten first.
enum class Strategy {
  leftmost,
  rightmost,
  /// T1 first, then the sphere rule, T3(n) .. T3(1), T4, T5, T6; leftmost among equals.
  priority,
};

inline constexpr std::uint64_t kDefaultMaxSteps = 10'000'000;

struct Redex {
  std::size_t position;
  const Rule* rule;
};

/// Redex chosen by `strategy`, or nullopt iff w is irreducible.
std::optional<Redex> find_redex(const Word& w, const ReductionSystem& system,
                                Strategy strategy = Strategy::leftmost);

struct TraceStep {
  Word word;
  std::size_t position;
  Word rule_lhs;
};

struct ReductionTrace {
  std::uint64_t steps = 0;
  std::vector<TraceStep> sequence;  // filled only when requested
};

struct ReductionOptions {
  Strategy strategy = Strategy::leftmost;
  std::uint64_t max_steps = kDefaultMaxSteps;
  bool record_trace = false;
};

class StepLimitExceeded : public std::runtime_error {
 public:
  StepLimitExceeded(std::uint64_t limit, Word term);
  const Word& term() const { return term_; }

 private:
  Word term_;
};

struct NormalForm {
  NCPolynomial polynomial;
  ReductionTrace trace;
};

/// Rewrites until every word is irreducible.
///
/// Terms are processed largest first under rank_key so that like terms meet
/// before they are rewritten; within a word the redex is picked by the
/// strategy. Throws StepLimitExceeded after max_steps rule applications and
/// ParseError for letters outside the system's n.
NormalForm normal_form(const NCPolynomial& p, const ReductionSystem& system,
                       const ReductionOptions& options = {});

bool is_irreducible(const Word& w, const ReductionSystem& system);

/// y_1*^m1 .. y_n*^mn x_1*^k1 .. x_n*^kn x_n^sn .. x_1^s1 y_n^tn .. y_1^t1
/// with not both k_n > 0 and s_n > 0.
bool is_basis_monomial(const Word& w, unsigned n);

}  // namespace qsphere
