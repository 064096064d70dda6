#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "qsphere/engine.hpp"

namespace qsphere {

/// Overlap a b c where `a b` is the lhs of sigma and `b c` the lhs of tau.
/// The rule pointers refer into the system the ambiguity was enumerated from.
struct Ambiguity {
  Generator a, b, c;
  const Rule* sigma;
  const Rule* tau;

  Word word() const { return Word{a, b, c}; }
};

struct Resolution {
  Ambiguity ambiguity;
  bool resolvable = false;
  NCPolynomial left_nf;   // normal form of f_sigma * c
  NCPolynomial right_nf;  // normal form of a * f_tau
  std::uint64_t steps_left = 0;
  std::uint64_t steps_right = 0;
};

struct Report {
  unsigned n = 0;
  std::uint64_t total = 0;
  std::uint64_t checked = 0;
  std::uint64_t resolved = 0;
  std::vector<Resolution> unresolved;  // in enumeration order
  std::chrono::milliseconds elapsed{0};
  std::optional<std::string> error;    // set when the run was aborted

  bool all_resolved() const { return !error && resolved == total; }
};

/// Every overlap abc with ab and bc both rule lhs, ordered lexicographically
/// by the list positions of (a, b, c).
std::vector<Ambiguity> enumerate_ambiguities(const ReductionSystem& system);

/// (8/3)(4n^3 - 3n^2 + 2n)
std::uint64_t ambiguity_count(std::uint64_t n);

/// Reduces both branches to normal form and compares them exactly. A false
/// verdict only means the branches disagree under the configured strategy.
Resolution check_ambiguity(const Ambiguity& amb, const ReductionSystem& system,
                           const ReductionOptions& options = {});

struct CheckOptions {
  unsigned jobs = 1;
  ReductionOptions reduction;
  /// Called with (done, total); may be invoked from worker threads, serialized.
  std::function<void(std::uint64_t, std::uint64_t)> progress;
};

/// Checks every ambiguity on `jobs` worker threads. The report does not
/// depend on `jobs`. A step-limit failure stops the run and is recorded in
/// Report::error; the counts then cover only what was checked.
Report check_all(const ReductionSystem& system, const CheckOptions& options = {});

}  // namespace qsphere
