#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qsphere/word.hpp"

namespace qsphere {

/// Type of a letter pair (a, b) that is out of list order, or of the sphere pair.
///
///   T1         (unstarred, starred)
///   T2_sphere  (x_n*, x_n)
///   T3(i)      (y_i, x_i), (x_i*, y_i*)
///   T4         (y_j, x_i), (x_i*, y_j*), i != j
///   T5         (y_i, y_j), (y_j*, y_i*), i < j
///   T6         (x_i, x_j), (x_j*, x_i*), i < j
struct PairType {
  enum class Tag : std::uint8_t { T1, T2Sphere, T3, T4, T5, T6 };

  Tag tag;
  unsigned index = 0;  // only meaningful for T3

  std::string to_string() const;
  /// Position in the reduction priority T1, T2, T3(n), ..., T3(1), T4, T5, T6 (0 = first).
  unsigned priority(unsigned n) const;

  friend bool operator==(const PairType&, const PairType&) = default;
};

/// Position of g in y_1* .. y_n* x_1* .. x_n* x_n .. x_1 y_n .. y_1, in [1, 4n].
unsigned list_position(Generator g, unsigned n);

/// Inverse of list_position.
Generator letter_at(unsigned position, unsigned n);

/// All 4n letters in list order.
std::vector<Generator> alphabet(unsigned n);

/// Type of the pair (a, b) when a comes strictly after b in list order, else nullopt.
std::optional<PairType> inverted_pair_type(Generator a, Generator b);

/// Inversion counts of a word.
struct MetricVector {
  std::uint64_t n1 = 0;
  std::uint64_t n2 = 0;
  std::vector<std::uint64_t> n3;  // n3[i - 1] counts type T3(i)
  std::uint64_t n4 = 0;
  std::uint64_t n5 = 0;
  std::uint64_t n6 = 0;

  bool is_zero() const;
  /// "N1=8 N2=1 N3=[2,0,1] N4=1 N5=0 N6=0"
  std::string to_string() const;

  friend bool operator==(const MetricVector&, const MetricVector&) = default;
};

/// Counts over all position pairs s < t whose letters are inverted; equal
/// letters are never inverted. N2 is min(#x_n, #x_n*).
MetricVector metrics(const Word& w, unsigned n);

/// Strict comparison on metric vectors: either some N_k (k in 1, 2, 4, 5, 6)
/// drops with all earlier ones equal (and all N_{3,i} equal when k >= 4), or
/// some N_{3,m} drops with N_{3,i} equal for i > m and N_1, N_2 equal.
bool less_than(const MetricVector& u, const MetricVector& v);
bool less_than(const Word& u, const Word& v, unsigned n);

/// Lexicographic key (N1, N2, N3_n, ..., N3_1, N4, N5, N6). Every pair related
/// by less_than is ordered the same way by this key, so it linearly extends it.
std::vector<std::uint64_t> rank_key(const MetricVector& m);

}  // namespace qsphere
