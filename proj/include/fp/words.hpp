#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace fp {

// Letters of the alphabet S = {x_1..x_n, y, t_1..t_n} and their inverses,
// packed into one signed 16-bit code. The magnitude selects the generator,
// the sign the exponent:
//
//   1      -> y
//   2*i    -> x_i   (i >= 1)
//   2*i+1  -> t_i   (i >= 1)
//
// Inversion is negation, so a cancelling pair is (a, -a).
using letter_t = std::int16_t;

enum class Kind : std::uint8_t { X, Y, T };

constexpr letter_t y_letter(int sign = 1) { return static_cast<letter_t>(sign); }
constexpr letter_t x_letter(int i, int sign = 1) { return static_cast<letter_t>(sign * 2 * i); }
constexpr letter_t t_letter(int i, int sign = 1) { return static_cast<letter_t>(sign * (2 * i + 1)); }

inline int letter_sign(letter_t l) { return l > 0 ? 1 : -1; }
inline int letter_mag(letter_t l) { return l > 0 ? l : -l; }

inline Kind letter_kind(letter_t l) {
  const int m = letter_mag(l);
  if (m == 1) return Kind::Y;
  return (m % 2 == 0) ? Kind::X : Kind::T;
}

// Generator index (1-based); 0 for y.
inline int letter_index(letter_t l) {
  const int m = letter_mag(l);
  if (m == 1) return 0;
  return (m % 2 == 0) ? m / 2 : (m - 1) / 2;
}

inline bool is_horizontal_letter(letter_t l) { return letter_kind(l) != Kind::T; }
inline bool is_vertical_letter(letter_t l) { return letter_kind(l) == Kind::T; }

struct ParseError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// A word over S u S^-1. Kept freely reduced by every operation in this
// library that produces one; is_reduced() checks the invariant.
struct Word {
  std::vector<letter_t> ls;

  Word() = default;
  explicit Word(std::vector<letter_t> v) : ls(std::move(v)) {}

  bool empty() const { return ls.empty(); }
  std::size_t size() const { return ls.size(); }
  letter_t operator[](std::size_t i) const { return ls[i]; }

  bool operator==(const Word& o) const { return ls == o.ls; }
  bool operator!=(const Word& o) const { return ls != o.ls; }
  bool operator<(const Word& o) const { return ls < o.ls; }

  void push_reduce(letter_t l) {
    if (!ls.empty() && ls.back() == static_cast<letter_t>(-l))
      ls.pop_back();
    else
      ls.push_back(l);
  }
};

bool is_reduced(const Word& w);
bool is_horizontal_word(const Word& w);
bool is_vertical_word(const Word& w);

Word reduce(const Word& w);
Word concat_reduce(const Word& a, const Word& b);
Word inverse(const Word& w);

// Grammar: space-separated tokens, token := gen | gen "^" signed-integer,
// gen := "y" | "x"<idx> | "t"<idx>. The empty string (or "e") is the
// identity. Indices are validated against the rank n.
Word parse_word(std::string_view text, int n);

// Canonical print: adjacent equal letters collapse into one caret token;
// the empty word prints as "e".
std::string print_word(const Word& w);

} // namespace fp
