#include "fp/words.hpp"

#include <cctype>
#include <cstdlib>

namespace fp {

bool is_reduced(const Word& w) {
  for (std::size_t i = 1; i < w.ls.size(); ++i)
    if (w.ls[i] == static_cast<letter_t>(-w.ls[i - 1])) return false;
  return true;
}

bool is_horizontal_word(const Word& w) {
  for (letter_t l : w.ls)
    if (!is_horizontal_letter(l)) return false;
  return true;
}

bool is_vertical_word(const Word& w) {
  for (letter_t l : w.ls)
    if (!is_vertical_letter(l)) return false;
  return true;
}

Word reduce(const Word& w) {
  Word out;
  out.ls.reserve(w.ls.size());
  for (letter_t l : w.ls) out.push_reduce(l);
  return out;
}

Word concat_reduce(const Word& a, const Word& b) {
  Word out;
  out.ls.reserve(a.ls.size() + b.ls.size());
  for (letter_t l : a.ls) out.push_reduce(l);
  for (letter_t l : b.ls) out.push_reduce(l);
  return out;
}

Word inverse(const Word& w) {
  Word out;
  out.ls.reserve(w.ls.size());
  for (auto it = w.ls.rbegin(); it != w.ls.rend(); ++it)
    out.ls.push_back(static_cast<letter_t>(-*it));
  return out;
}

namespace {

letter_t parse_gen(std::string_view tok, std::size_t& pos, int n) {
  if (pos >= tok.size()) throw ParseError("empty generator token");
  const char c = tok[pos];
  if (c == 'y') {
    ++pos;
    return y_letter();
  }
  if (c != 'x' && c != 't')
    throw ParseError("unknown generator '" + std::string(tok) + "'");
  ++pos;
  std::size_t start = pos;
  while (pos < tok.size() && std::isdigit(static_cast<unsigned char>(tok[pos]))) ++pos;
  if (pos == start) throw ParseError("missing index in '" + std::string(tok) + "'");
  const int idx = std::atoi(std::string(tok.substr(start, pos - start)).c_str());
  if (idx < 1 || idx > n)
    throw ParseError("generator index out of range 1.." + std::to_string(n) + " in '" +
                     std::string(tok) + "'");
  return c == 'x' ? x_letter(idx) : t_letter(idx);
}

long parse_exponent(std::string_view tok, std::size_t& pos) {
  if (pos >= tok.size() || tok[pos] != '^') throw ParseError("expected '^'");
  ++pos;
  bool neg = false;
  if (pos < tok.size() && (tok[pos] == '-' || tok[pos] == '+')) {
    neg = tok[pos] == '-';
    ++pos;
  }
  std::size_t start = pos;
  while (pos < tok.size() && std::isdigit(static_cast<unsigned char>(tok[pos]))) ++pos;
  if (pos == start) throw ParseError("missing exponent in '" + std::string(tok) + "'");
  const long e = std::atol(std::string(tok.substr(start, pos - start)).c_str());
  return neg ? -e : e;
}

} // namespace

Word parse_word(std::string_view text, int n) {
  Word out;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && text[i] == ' ') ++i;
    if (i >= text.size()) break;
    std::size_t j = i;
    while (j < text.size() && text[j] != ' ') ++j;
    std::string_view tok = text.substr(i, j - i);
    i = j;
    if (tok == "e") continue; // identity token
    std::size_t pos = 0;
    letter_t base = parse_gen(tok, pos, n);
    long exp = 1;
    if (pos < tok.size()) exp = parse_exponent(tok, pos);
    if (pos != tok.size()) throw ParseError("trailing characters in '" + std::string(tok) + "'");
    const letter_t l = exp >= 0 ? base : static_cast<letter_t>(-base);
    for (long k = 0; k < (exp >= 0 ? exp : -exp); ++k) out.ls.push_back(l);
  }
  return out;
}

std::string print_word(const Word& w) {
  if (w.empty()) return "e";
  std::string out;
  std::size_t i = 0;
  while (i < w.ls.size()) {
    std::size_t j = i;
    while (j < w.ls.size() && w.ls[j] == w.ls[i]) ++j;
    const letter_t l = w.ls[i];
    if (!out.empty()) out += ' ';
    switch (letter_kind(l)) {
      case Kind::Y: out += 'y'; break;
      case Kind::X: out += 'x' + std::to_string(letter_index(l)); break;
      case Kind::T: out += 't' + std::to_string(letter_index(l)); break;
    }
    const long run = static_cast<long>(j - i);
    const long exp = letter_sign(l) * run;
    if (exp != 1) out += '^' + std::to_string(exp);
    i = j;
  }
  return out;
}

} // namespace fp
