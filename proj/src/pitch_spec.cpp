#include "harmony/pitch_spec.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <string>
#include <vector>

#include "harmony/errors.hpp"

namespace harmony {

namespace {

struct Token {
  std::string_view text;
  std::size_t offset;
};

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> out;
  std::size_t i = 0;
  auto is_sep = [](char c) { return c == ',' || std::isspace(static_cast<unsigned char>(c)); };
  while (i < text.size()) {
    while (i < text.size() && is_sep(text[i])) ++i;
    const std::size_t start = i;
    while (i < text.size() && !is_sep(text[i])) ++i;
    if (i > start) out.push_back({text.substr(start, i - start), start});
  }
  return out;
}

std::optional<int> parse_int(std::string_view s) {
  int v = 0;
  const char* begin = s.data();
  if (!s.empty() && s.front() == '+') ++begin;
  const auto [ptr, ec] = std::from_chars(begin, s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size() || begin == s.data() + s.size()) {
    return std::nullopt;
  }
  return v;
}

[[noreturn]] void fail(const Token& token, std::string_view what) {
  throw ParseError(std::string(what) + " '" + std::string(token.text) + "' at offset " +
                       std::to_string(token.offset),
                   std::string(token.text), token.offset);
}

}  // namespace

std::optional<int> pitch_number(std::string_view name) {
  static constexpr int kLetterClass[7] = {9, 11, 0, 2, 4, 5, 7};  // A..G
  if (name.empty() || name.front() < 'A' || name.front() > 'G') return std::nullopt;
  int pitch_class = kLetterClass[name.front() - 'A'];
  std::string_view rest = name.substr(1);
  if (!rest.empty() && (rest.front() == '#' || rest.front() == 'b')) {
    pitch_class += rest.front() == '#' ? 1 : -1;
    rest.remove_prefix(1);
  }
  if (rest.empty() || rest.front() == '+') return std::nullopt;
  const auto octave = parse_int(rest);
  if (!octave) return std::nullopt;
  return 12 * (*octave + 1) + pitch_class;
}

PitchSpec parse_pitch_spec(std::string_view text) {
  const std::vector<Token> tokens = tokenize(text);
  if (tokens.empty()) throw ParseError("empty pitch specification", "", 0);

  const char first = tokens.front().text.front();
  const bool names = first >= 'A' && first <= 'G';
  std::vector<int> pitches;
  for (const Token& token : tokens) {
    const auto value = names ? pitch_number(token.text) : parse_int(token.text);
    if (!value) fail(token, names ? "malformed pitch name" : "malformed semitone number");
    if (std::find(pitches.begin(), pitches.end(), *value) != pitches.end()) {
      throw UsageError("duplicate pitch '" + std::string(token.text) + "' at offset " +
                       std::to_string(token.offset));
    }
    pitches.push_back(*value);
  }

  PitchSpec spec{Harmony::from_pitches(pitches), std::nullopt};
  if (names) {
    const int lowest = *std::min_element(pitches.begin(), pitches.end());
    spec.lowest_frequency = kConcertA * std::exp2((lowest - 69) / 12.0);
  }
  return spec;
}

}  // namespace harmony
