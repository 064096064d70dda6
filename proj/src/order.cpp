#include "qsphere/order.hpp"

#include <algorithm>
#include <stdexcept>

namespace qsphere {

std::string PairType::to_string() const {
  switch (tag) {
    case Tag::T1: return "T1";
    case Tag::T2Sphere: return "T2_sphere";
    case Tag::T3: return "T3(" + std::to_string(index) + ")";
    case Tag::T4: return "T4";
    case Tag::T5: return "T5";
    case Tag::T6: return "T6";
  }
  return "?";
}

unsigned PairType::priority(unsigned n) const {
  switch (tag) {
    case Tag::T1: return 0;
    case Tag::T2Sphere: return 1;
    case Tag::T3: return 2 + (n - index);
    case Tag::T4: return 2 + n;
    case Tag::T5: return 3 + n;
    case Tag::T6: return 4 + n;
  }
  return 5 + n;
}

unsigned list_position(Generator g, unsigned n) {
  unsigned i = g.index();
  if (g.family() == Family::Y) return g.starred() ? i : 4 * n + 1 - i;
  return g.starred() ? n + i : 3 * n + 1 - i;
}

Generator letter_at(unsigned position, unsigned n) {
  if (position < 1 || position > 4 * n) throw std::out_of_range("list position out of range");
  if (position <= n) return Generator::ys(position);
  if (position <= 2 * n) return Generator::xs(position - n);
  if (position <= 3 * n) return Generator::x(3 * n + 1 - position);
  return Generator::y(4 * n + 1 - position);
}

std::vector<Generator> alphabet(unsigned n) {
  std::vector<Generator> letters;
  letters.reserve(4 * n);
  for (unsigned p = 1; p <= 4 * n; ++p) letters.push_back(letter_at(p, n));
  return letters;
}

std::optional<PairType> inverted_pair_type(Generator a, Generator b) {
  using Tag = PairType::Tag;
  if (!(b < a)) return std::nullopt;
  if (!a.starred() && b.starred()) return PairType{Tag::T1};
  // Both letters now have the same starredness.
  if (a.family() != b.family()) {
    // (y_j, x_i) unstarred or (x_i*, y_j*) starred.
    unsigned i = a.family() == Family::X ? a.index() : b.index();
    unsigned j = a.family() == Family::Y ? a.index() : b.index();
    return i == j ? PairType{Tag::T3, i} : PairType{Tag::T4};
  }
  return a.family() == Family::Y ? PairType{Tag::T5} : PairType{Tag::T6};
}

bool MetricVector::is_zero() const {
  return n1 == 0 && n2 == 0 && n4 == 0 && n5 == 0 && n6 == 0 &&
         std::all_of(n3.begin(), n3.end(), [](auto v) { return v == 0; });
}

std::string MetricVector::to_string() const {
  std::string s = "N1=" + std::to_string(n1) + " N2=" + std::to_string(n2) + " N3=[";
  for (std::size_t i = 0; i < n3.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(n3[i]);
  }
  s += "] N4=" + std::to_string(n4) + " N5=" + std::to_string(n5) + " N6=" + std::to_string(n6);
  return s;
}

MetricVector metrics(const Word& w, unsigned n) {
  using Tag = PairType::Tag;
  MetricVector m;
  m.n3.assign(n, 0);
  std::uint64_t xn = 0;
  std::uint64_t xn_star = 0;
  for (std::size_t s = 0; s < w.size(); ++s) {
    if (w[s] == Generator::x(n)) ++xn;
    if (w[s] == Generator::xs(n)) ++xn_star;
    for (std::size_t t = s + 1; t < w.size(); ++t) {
      auto type = inverted_pair_type(w[s], w[t]);
      if (!type) continue;
      switch (type->tag) {
        case Tag::T1: ++m.n1; break;
        case Tag::T3: ++m.n3[type->index - 1]; break;
        case Tag::T4: ++m.n4; break;
        case Tag::T5: ++m.n5; break;
        case Tag::T6: ++m.n6; break;
        case Tag::T2Sphere: break;
      }
    }
  }
  m.n2 = std::min(xn, xn_star);
  return m;
}

bool less_than(const MetricVector& u, const MetricVector& v) {
  // Condition 1, k = 1 or 2.
  if (u.n1 < v.n1) return true;
  if (u.n1 == v.n1 && u.n2 < v.n2) return true;
  if (u.n1 != v.n1 || u.n2 != v.n2) return false;

  // Condition 2: scan N_{3,i} from i = n downwards.
  for (std::size_t i = u.n3.size(); i-- > 0;) {
    if (u.n3[i] < v.n3[i]) return true;
    if (u.n3[i] != v.n3[i]) return false;
  }

  // Condition 1, k = 4, 5, 6 with all N_{3,i} equal.
  if (u.n4 != v.n4) return u.n4 < v.n4;
  if (u.n5 != v.n5) return u.n5 < v.n5;
  return u.n6 < v.n6;
}

bool less_than(const Word& u, const Word& v, unsigned n) {
  return less_than(metrics(u, n), metrics(v, n));
}

std::vector<std::uint64_t> rank_key(const MetricVector& m) {
  std::vector<std::uint64_t> key;
  key.reserve(m.n3.size() + 5);
  key.push_back(m.n1);
  key.push_back(m.n2);
  key.insert(key.end(), m.n3.rbegin(), m.n3.rend());
  key.push_back(m.n4);
  key.push_back(m.n5);
  key.push_back(m.n6);
  return key;
}

}  // namespace qsphere
