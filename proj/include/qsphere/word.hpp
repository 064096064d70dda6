#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace qsphere {

enum class Family : std::uint8_t { X, Y };

/// Largest generator index (and hence largest n) the letter encoding supports.
inline constexpr unsigned kMaxIndex = 0xFFFE;

/// One of x_i, x_i*, y_i, y_i* (1-based index).
///
/// Letters compare in the order of the reference list
///   y_1* .. y_n*  x_1* .. x_n*  x_n .. x_1  y_n .. y_1
/// and that order does not depend on n, so no ambient n is stored.
class Generator {
 public:
  constexpr Generator(Family family, unsigned index, bool starred)
      : code_(encode(family, index, starred)) {}

  static constexpr Generator x(unsigned i) { return {Family::X, i, false}; }
  static constexpr Generator xs(unsigned i) { return {Family::X, i, true}; }
  static constexpr Generator y(unsigned i) { return {Family::Y, i, false}; }
  static constexpr Generator ys(unsigned i) { return {Family::Y, i, true}; }

  constexpr Family family() const { return block() == 1 || block() == 2 ? Family::X : Family::Y; }
  constexpr bool starred() const { return block() < 2; }
  constexpr unsigned index() const { return block() < 2 ? slot() : 0xFFFFu - slot(); }
  constexpr Generator star() const { return {family(), index(), !starred()}; }

  std::string to_string() const;

  friend constexpr auto operator<=>(const Generator&, const Generator&) = default;

 private:
  static constexpr std::uint32_t encode(Family f, unsigned index, bool starred) {
    std::uint32_t block = f == Family::Y ? (starred ? 0u : 3u) : (starred ? 1u : 2u);
    std::uint32_t slot = block < 2 ? index : 0xFFFFu - index;
    return (block << 16) | slot;
  }
  constexpr std::uint32_t block() const { return code_ >> 16; }
  constexpr std::uint32_t slot() const { return code_ & 0xFFFFu; }

  std::uint32_t code_;
};

/// Element of the free monoid on the generators; the empty word is the unit.
///
/// Words are ordered by length, then lexicographically by letter order.
class Word {
 public:
  using const_iterator = std::vector<Generator>::const_iterator;

  Word() = default;
  explicit Word(std::vector<Generator> letters) : letters_(std::move(letters)) {}
  Word(std::initializer_list<Generator> letters) : letters_(letters) {}

  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  const Generator& operator[](std::size_t i) const { return letters_[i]; }
  const_iterator begin() const { return letters_.begin(); }
  const_iterator end() const { return letters_.end(); }
  const std::vector<Generator>& letters() const { return letters_; }

  /// Reversed word with every letter starred/unstarred.
  Word star() const;

  /// Copy with letters [pos, pos + len) replaced by `replacement`.
  Word splice(std::size_t pos, std::size_t len, const Word& replacement) const;

  /// Space-separated tokens, "" for the unit.
  std::string to_string() const;

  friend Word operator*(const Word& a, const Word& b);
  friend bool operator==(const Word&, const Word&) = default;
  friend std::strong_ordering operator<=>(const Word& a, const Word& b);

 private:
  std::vector<Generator> letters_;
};

class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Parses `token (SP token)*` where token is [xy][1-9][0-9]*\*? and SP is one
/// or more spaces. Throws ParseError on malformed tokens or indices outside [1, n].
Word parse_word(std::string_view text, unsigned n);

/// Throws ParseError if any letter index exceeds n.
void validate_word(const Word& w, unsigned n);

}  // namespace qsphere
