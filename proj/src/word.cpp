#include "qsphere/word.hpp"

#include <algorithm>
#include <charconv>

namespace qsphere {

std::string Generator::to_string() const {
  std::string s(1, family() == Family::X ? 'x' : 'y');
  s += std::to_string(index());
  if (starred()) s += '*';
  return s;
}

Word Word::star() const {
  std::vector<Generator> out;
  out.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) out.push_back(it->star());
  return Word(std::move(out));
}

Word Word::splice(std::size_t pos, std::size_t len, const Word& replacement) const {
  std::vector<Generator> out;
  out.reserve(letters_.size() - len + replacement.size());
  out.insert(out.end(), letters_.begin(), letters_.begin() + static_cast<std::ptrdiff_t>(pos));
  out.insert(out.end(), replacement.letters_.begin(), replacement.letters_.end());
  out.insert(out.end(), letters_.begin() + static_cast<std::ptrdiff_t>(pos + len), letters_.end());
  return Word(std::move(out));
}

std::string Word::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (i) s += ' ';
    s += letters_[i].to_string();
  }
  return s;
}

Word operator*(const Word& a, const Word& b) {
  std::vector<Generator> out;
  out.reserve(a.size() + b.size());
  out.insert(out.end(), a.letters_.begin(), a.letters_.end());
  out.insert(out.end(), b.letters_.begin(), b.letters_.end());
  return Word(std::move(out));
}

std::strong_ordering operator<=>(const Word& a, const Word& b) {
  if (auto c = a.size() <=> b.size(); c != 0) return c;
  return std::lexicographical_compare_three_way(a.letters_.begin(), a.letters_.end(),
                                                b.letters_.begin(), b.letters_.end());
}

namespace {

std::string out_of_range_message(std::string_view token, unsigned n) {
  return "index out of range: " + std::string(token) + " (n=" + std::to_string(n) + ")";
}

Generator parse_token(std::string_view token, unsigned n) {
  auto malformed = [&] { return ParseError("malformed token: '" + std::string(token) + "'"); };
  if (token.size() < 2 || (token[0] != 'x' && token[0] != 'y')) throw malformed();
  bool starred = token.back() == '*';
  std::string_view digits = token.substr(1, token.size() - 1 - (starred ? 1 : 0));
  if (digits.empty() || !std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; })) {
    throw malformed();
  }
  if (digits == "0") throw ParseError(out_of_range_message(token, n));
  if (digits[0] == '0') throw malformed();
  unsigned long long index = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), index);
  if (ec == std::errc::result_out_of_range || index > n || index > kMaxIndex) {
    throw ParseError(out_of_range_message(token, n));
  }
  if (ec != std::errc() || ptr != digits.data() + digits.size()) throw malformed();
  return Generator(token[0] == 'x' ? Family::X : Family::Y, static_cast<unsigned>(index), starred);
}

}  // namespace

Word parse_word(std::string_view text, unsigned n) {
  std::vector<Generator> letters;
  if (text.empty()) return Word();
  std::size_t pos = 0;
  while (true) {
    std::size_t end = text.find(' ', pos);
    std::string_view token = text.substr(pos, end == std::string_view::npos ? std::string_view::npos : end - pos);
    if (token.empty()) throw ParseError("malformed word: unexpected space in '" + std::string(text) + "'");
    letters.push_back(parse_token(token, n));
    if (end == std::string_view::npos) break;
    pos = text.find_first_not_of(' ', end);
    if (pos == std::string_view::npos) {
      throw ParseError("malformed word: trailing space in '" + std::string(text) + "'");
    }
  }
  return Word(std::move(letters));
}

void validate_word(const Word& w, unsigned n) {
  for (const auto& g : w) {
    if (g.index() < 1 || g.index() > n) throw ParseError(out_of_range_message(g.to_string(), n));
  }
}

}  // namespace qsphere
