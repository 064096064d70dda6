#include "qsphere/relations.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace qsphere {

namespace {

using G = Generator;

// (q^2 - 1)
LaurentPoly q2_minus_1() { return q_power(2) - LaurentPoly(1); }

NCPolynomial term(LaurentPoly c, std::initializer_list<Generator> letters) {
  return NCPolynomial(std::move(c), Word(letters));
}

NCPolynomial sum_xs_x(unsigned from, unsigned to) {
  NCPolynomial s;
  for (unsigned k = from; k <= to; ++k) s.add_term(Word{G::xs(k), G::x(k)}, LaurentPoly(1));
  return s;
}

NCPolynomial sum_ys_y(unsigned from, unsigned to) {
  NCPolynomial s;
  for (unsigned k = from; k <= to; ++k) s.add_term(Word{G::ys(k), G::y(k)}, LaurentPoly(1));
  return s;
}

struct Relation {
  Word lhs;
  NCPolynomial rhs;
};

// The defining relations as written, one orientation each. Adjoints are
// added afterwards by star-closure.
std::vector<Relation> defining_relations(unsigned n) {
  std::vector<Relation> out;
  auto add = [&](Word lhs, NCPolynomial rhs) { out.push_back({std::move(lhs), std::move(rhs)}); };

  for (unsigned i = 1; i <= n; ++i) {
    for (unsigned j = 1; j <= n; ++j) {
      if (i < j) {
        add({G::x(i), G::x(j)}, term(q_power(-1), {G::x(j), G::x(i)}));
        add({G::y(i), G::y(j)}, term(q_power(1), {G::y(j), G::y(i)}));
        add({G::x(i), G::ys(j)}, term(q_power(1), {G::ys(j), G::x(i)}));
      }
      if (i != j) {
        add({G::y(j), G::x(i)}, term(q_power(1), {G::x(i), G::y(j)}));
        add({G::x(i), G::xs(j)}, term(q_power(1), {G::xs(j), G::x(i)}));
        NCPolynomial rhs = term(q_power(1), {G::ys(j), G::y(i)});
        rhs.add_term(Word{G::xs(i), G::x(j)},
                     -(q2_minus_1() * q_power(static_cast<int>(2 * n + 2 - i - j))));
        add({G::y(i), G::ys(j)}, std::move(rhs));
      }
      if (i > j) {
        NCPolynomial rhs = term(q_power(1), {G::ys(j), G::x(i)});
        rhs.add_term(Word{G::ys(i), G::x(j)},
                     q2_minus_1() * q_power(static_cast<int>(i) - static_cast<int>(j)));
        add({G::x(i), G::ys(j)}, std::move(rhs));
      }
    }

    NCPolynomial yx = term(q_power(2), {G::x(i), G::y(i)});
    for (unsigned k = 1; k < i; ++k) {
      yx.add_term(Word{G::x(k), G::y(k)}, q2_minus_1() * q_power(static_cast<int>(i - k)));
    }
    add({G::y(i), G::x(i)}, std::move(yx));

    const LaurentPoly one_minus_q2 = -q2_minus_1();
    add({G::x(i), G::xs(i)}, term(LaurentPoly(1), {G::xs(i), G::x(i)}) + one_minus_q2 * sum_xs_x(1, i - 1));

    NCPolynomial inner = term(q_power(static_cast<int>(2 * (n + 1 - i))), {G::xs(i), G::x(i)});
    inner += sum_xs_x(1, n);
    inner += sum_ys_y(i + 1, n);
    add({G::y(i), G::ys(i)}, term(LaurentPoly(1), {G::ys(i), G::y(i)}) + one_minus_q2 * inner);

    add({G::x(i), G::ys(i)}, term(q_power(2), {G::ys(i), G::x(i)}));
  }

  NCPolynomial sphere = NCPolynomial::constant(LaurentPoly(1));
  sphere -= sum_xs_x(1, n - 1);
  sphere -= sum_ys_y(1, n);
  add({G::xs(n), G::x(n)}, std::move(sphere));
  return out;
}

}  // namespace

ReductionSystem::ReductionSystem(unsigned n) : n_(n) {
  if (n < 1) throw std::invalid_argument("n must be at least 1");
  if (n > kMaxN) throw std::invalid_argument("n must be at most " + std::to_string(kMaxN));

  const Word sphere_lhs{G::xs(n), G::x(n)};
  const std::size_t width = 4 * static_cast<std::size_t>(n);
  table_.assign(width * width, -1);

  auto insert = [&](Word lhs, NCPolynomial rhs) {
    auto& id = table_[slot(lhs[0]) * width + slot(lhs[1])];
    if (id >= 0) {
      if (rules_[static_cast<std::size_t>(id)].rhs != rhs) {
        throw std::logic_error("inconsistent relations for " + lhs.to_string());
      }
      return;
    }
    auto type = lhs == sphere_lhs ? PairType{PairType::Tag::T2Sphere} : inverted_pair_type(lhs[0], lhs[1]);
    if (!type) throw std::logic_error("relation lhs is not an inverted pair: " + lhs.to_string());
    id = static_cast<std::int32_t>(rules_.size());
    rules_.push_back({std::move(lhs), std::move(rhs), *type});
  };

  for (auto& rel : defining_relations(n)) {
    Word star_lhs = rel.lhs.star();
    NCPolynomial star_rhs = rel.rhs.star();
    insert(std::move(rel.lhs), std::move(rel.rhs));
    insert(std::move(star_lhs), std::move(star_rhs));
  }

  // Reorder rules by lhs list positions and rebuild the lookup table.
  std::sort(rules_.begin(), rules_.end(), [&](const Rule& a, const Rule& b) {
    return std::pair(slot(a.lhs[0]), slot(a.lhs[1])) < std::pair(slot(b.lhs[0]), slot(b.lhs[1]));
  });
  std::fill(table_.begin(), table_.end(), -1);
  for (std::size_t k = 0; k < rules_.size(); ++k) {
    table_[slot(rules_[k].lhs[0]) * width + slot(rules_[k].lhs[1])] = static_cast<std::int32_t>(k);
  }
}

const Rule* ReductionSystem::rule_for(const Word& pair) const {
  if (pair.size() != 2) throw std::invalid_argument("rule lookup needs a two-letter word");
  validate_word(pair, n_);
  return rule_for(pair[0], pair[1]);
}

PairType ReductionSystem::classify(const Word& pair) const {
  const Rule* rule = rule_for(pair);
  if (!rule) throw std::invalid_argument("not a rule lhs: " + pair.to_string());
  return rule->type;
}

}  // namespace qsphere
