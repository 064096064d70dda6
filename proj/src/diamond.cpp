#include "qsphere/diamond.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <stdexcept>
#include <thread>

namespace qsphere {

std::vector<Ambiguity> enumerate_ambiguities(const ReductionSystem& system) {
  const auto letters = alphabet(system.n());
  std::vector<Ambiguity> out;
  for (auto a : letters) {
    for (auto b : letters) {
      const Rule* sigma = system.rule_for(a, b);
      if (!sigma) continue;
      for (auto c : letters) {
        if (const Rule* tau = system.rule_for(b, c)) out.push_back({a, b, c, sigma, tau});
      }
    }
  }
  return out;
}

std::uint64_t ambiguity_count(std::uint64_t n) {
  return 8 * (4 * n * n * n - 3 * n * n + 2 * n) / 3;
}

Resolution check_ambiguity(const Ambiguity& amb, const ReductionSystem& system, const ReductionOptions& options) {
  const NCPolynomial left = amb.sigma->rhs * NCPolynomial(Word{amb.c});
  const NCPolynomial right = NCPolynomial(Word{amb.a}) * amb.tau->rhs;
  auto left_nf = normal_form(left, system, options);
  auto right_nf = normal_form(right, system, options);
  Resolution r{amb, false, std::move(left_nf.polynomial), std::move(right_nf.polynomial),
               left_nf.trace.steps, right_nf.trace.steps};
  r.resolvable = r.left_nf == r.right_nf;
  return r;
}

Report check_all(const ReductionSystem& system, const CheckOptions& options) {
  if (options.jobs < 1) throw std::invalid_argument("jobs must be at least 1");
  const auto start = std::chrono::steady_clock::now();
  const auto ambiguities = enumerate_ambiguities(system);
  const std::size_t count = ambiguities.size();

  // Slot per ambiguity; merged in enumeration order afterwards.
  std::vector<std::optional<Resolution>> results(count);
  std::atomic<std::size_t> next{0};
  std::atomic<std::uint64_t> done{0};
  std::atomic<bool> abort{false};
  std::mutex error_mutex;
  std::optional<std::pair<std::size_t, std::string>> first_error;

  auto worker = [&] {
    while (!abort.load(std::memory_order_relaxed)) {
      std::size_t i = next.fetch_add(1);
      if (i >= count) return;
      try {
        results[i] = check_ambiguity(ambiguities[i], system, options.reduction);
      } catch (const std::exception& e) {
        std::lock_guard lock(error_mutex);
        if (!first_error || i < first_error->first) {
          first_error = {i, ambiguities[i].word().to_string() + ": " + e.what()};
        }
        abort = true;
        return;
      }
      auto d = done.fetch_add(1) + 1;
      if (options.progress) {
        std::lock_guard lock(error_mutex);
        options.progress(d, count);
      }
    }
  };

  const unsigned threads = static_cast<unsigned>(std::min<std::size_t>(options.jobs, std::max<std::size_t>(count, 1)));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }

  Report report;
  report.n = system.n();
  report.total = count;
  for (auto& r : results) {
    if (!r) continue;
    ++report.checked;
    if (r->resolvable) {
      ++report.resolved;
    } else {
      report.unresolved.push_back(std::move(*r));
    }
  }
  if (first_error) report.error = first_error->second;
  report.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
  return report;
}

}  // namespace qsphere
