#include "fp/group.hpp"

namespace fp {

Element identity() { return Element{}; }

namespace {

// sigma(t_i^sign) applied to one horizontal letter, appended reduced.
inline void sigma_letter_push(Word& out, int i, int sign, letter_t l) {
  if (letter_kind(l) == Kind::X) {
    out.push_reduce(l);
    return;
  }
  // y -> y x_i^sign ; y^-1 -> x_i^-sign y^-1
  if (l > 0) {
    out.push_reduce(y_letter());
    out.push_reduce(x_letter(i, sign));
  } else {
    out.push_reduce(x_letter(i, -sign));
    out.push_reduce(y_letter(-1));
  }
}

Word sigma_one(int i, int sign, const Word& w) {
  Word out;
  out.ls.reserve(w.size() + 8);
  for (letter_t l : w.ls) sigma_letter_push(out, i, sign, l);
  return out;
}

} // namespace

Word sigma_apply(const Word& t, const Word& w) {
  Word cur = reduce(w);
  for (letter_t l : t.ls) cur = sigma_one(letter_index(l), letter_sign(l), cur);
  return cur;
}

Element multiply(const Element& a, const Element& b) {
  Element out;
  out.vert = concat_reduce(a.vert, b.vert);
  out.horiz = concat_reduce(sigma_apply(b.vert, a.horiz), b.horiz);
  return out;
}

Element invert(const Element& a) {
  Element out;
  out.vert = inverse(a.vert);
  out.horiz = sigma_apply(out.vert, inverse(a.horiz));
  return out;
}

Element mul_letter(const Element& a, letter_t l) {
  Element out;
  if (is_horizontal_letter(l)) {
    out.vert = a.vert;
    out.horiz = a.horiz;
    out.horiz.push_reduce(l);
  } else {
    out.vert = a.vert;
    out.vert.push_reduce(l);
    out.horiz = sigma_one(letter_index(l), letter_sign(l), a.horiz);
  }
  return out;
}

Element element_of_word(const Word& w) {
  Element acc;
  for (letter_t l : w.ls) acc = mul_letter(acc, l);
  return acc;
}

Element element_of_string(std::string_view text, int n) {
  return element_of_word(parse_word(text, n));
}

Word to_smin_word(const Element& a) {
  Word out;
  out.ls.reserve(a.vert.size() + 4 * a.horiz.size());
  for (letter_t l : a.vert.ls) out.push_reduce(l);
  for (letter_t l : a.horiz.ls) {
    if (letter_kind(l) == Kind::Y) {
      out.push_reduce(l);
      continue;
    }
    const int i = letter_index(l);
    if (l > 0) {
      // x_i = y^-1 t_i^-1 y t_i
      out.push_reduce(y_letter(-1));
      out.push_reduce(t_letter(i, -1));
      out.push_reduce(y_letter());
      out.push_reduce(t_letter(i));
    } else {
      out.push_reduce(t_letter(i, -1));
      out.push_reduce(y_letter(-1));
      out.push_reduce(t_letter(i));
      out.push_reduce(y_letter());
    }
  }
  return out;
}

std::pair<Word, Word> to_wt_form(const Element& a) {
  return {sigma_apply(inverse(a.vert), a.horiz), a.vert};
}

Word grid_word(int i, const std::vector<long>& exponents) {
  if (exponents.size() < 2 || exponents.size() % 2 != 0)
    throw std::invalid_argument("grid_word needs an even number (>= 2) of exponents");
  Word out;
  for (std::size_t j = 0; j + 1 < exponents.size(); j += 2) {
    const long k0 = exponents[j], k1 = exponents[j + 1];
    for (long m = 0; m < std::abs(k0); ++m) out.ls.push_back(t_letter(i, k0 > 0 ? 1 : -1));
    out.ls.push_back(y_letter());
    for (long m = 0; m < std::abs(k1); ++m) out.ls.push_back(t_letter(i, k1 > 0 ? 1 : -1));
    out.ls.push_back(y_letter(-1));
  }
  return out;
}

std::string print_element(const Element& a) {
  return "(" + print_word(a.vert) + ", " + print_word(a.horiz) + ")";
}

} // namespace fp
