#include "qsphere/engine.hpp"

#include <functional>
#include <map>

namespace qsphere {

StepLimitExceeded::StepLimitExceeded(std::uint64_t limit, Word term)
    : std::runtime_error("step limit of " + std::to_string(limit) + " exceeded while reducing term '" +
                         term.to_string() + "'"),
      term_(std::move(term)) {}

std::optional<Redex> find_redex(const Word& w, const ReductionSystem& system, Strategy strategy) {
  if (w.size() < 2) return std::nullopt;
  switch (strategy) {
    case Strategy::leftmost:
      for (std::size_t p = 0; p + 1 < w.size(); ++p) {
        if (const Rule* r = system.rule_for(w[p], w[p + 1])) return Redex{p, r};
      }
      return std::nullopt;
    case Strategy::rightmost:
      for (std::size_t p = w.size() - 1; p-- > 0;) {
        if (const Rule* r = system.rule_for(w[p], w[p + 1])) return Redex{p, r};
      }
      return std::nullopt;
    case Strategy::priority: {
      std::optional<Redex> best;
      unsigned best_priority = 0;
      for (std::size_t p = 0; p + 1 < w.size(); ++p) {
        const Rule* r = system.rule_for(w[p], w[p + 1]);
        if (!r) continue;
        unsigned pr = r->type.priority(system.n());
        if (!best || pr < best_priority) {
          best = Redex{p, r};
          best_priority = pr;
        }
      }
      return best;
    }
  }
  return std::nullopt;
}

namespace {

struct PendingKey {
  std::vector<std::uint64_t> rank;
  Word word;
  friend auto operator<=>(const PendingKey&, const PendingKey&) = default;
};

using PendingMap = std::map<PendingKey, LaurentPoly, std::greater<>>;

void add_pending(PendingMap& pending, Word w, LaurentPoly c, unsigned n) {
  if (c.is_zero()) return;
  PendingKey key{rank_key(metrics(w, n)), std::move(w)};
  auto [it, inserted] = pending.try_emplace(std::move(key), std::move(c));
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) pending.erase(it);
}

}  // namespace

NormalForm normal_form(const NCPolynomial& p, const ReductionSystem& system, const ReductionOptions& options) {
  const unsigned n = system.n();
  NormalForm out;
  PendingMap pending;
  for (const auto& [w, c] : p.terms()) {
    validate_word(w, n);
    add_pending(pending, w, c, n);
  }

  while (!pending.empty()) {
    auto node = pending.extract(pending.begin());
    Word& w = node.key().word;
    LaurentPoly& c = node.mapped();
    auto redex = find_redex(w, system, options.strategy);
    if (!redex) {
      out.polynomial.add_term(std::move(w), std::move(c));
      continue;
    }
    if (out.trace.steps >= options.max_steps) throw StepLimitExceeded(options.max_steps, std::move(w));
    ++out.trace.steps;
    if (options.record_trace) out.trace.sequence.push_back({w, redex->position, redex->rule->lhs});
    for (const auto& [m, rc] : redex->rule->rhs.terms()) {
      add_pending(pending, w.splice(redex->position, 2, m), c * rc, n);
    }
  }
  return out;
}

bool is_irreducible(const Word& w, const ReductionSystem& system) { return !find_redex(w, system); }

bool is_basis_monomial(const Word& w, unsigned n) {
  bool has_xn = false;
  bool has_xn_star = false;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i > 0 && w[i] < w[i - 1]) return false;
    has_xn = has_xn || w[i] == Generator::x(n);
    has_xn_star = has_xn_star || w[i] == Generator::xs(n);
  }
  return !(has_xn && has_xn_star);
}

}  // namespace qsphere
