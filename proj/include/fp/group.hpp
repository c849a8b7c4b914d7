#pragma once

#include <cstddef>
#include <functional>
#include <string>

#include "fp/words.hpp"

namespace fp {

// Rank parameter: the vertical free group has rank n, the horizontal one
// rank n+1. Everything in this library is parametric in n >= 2.
struct GroupContext {
  int n = 2;

  explicit GroupContext(int rank = 2) : n(rank) {
    if (n < 2) throw std::invalid_argument("rank n must be >= 2");
  }
};

// Canonical normal form ("tw-form"): the group element is vert * horiz with
// vert a reduced word in the t_i and horiz a reduced word in the x_i and y.
// Equality of elements is componentwise equality of the two words.
struct Element {
  Word vert;
  Word horiz;

  bool operator==(const Element& o) const { return vert == o.vert && horiz == o.horiz; }
  bool operator!=(const Element& o) const { return !(*this == o); }
  bool operator<(const Element& o) const {
    if (vert != o.vert) return vert < o.vert;
    return horiz < o.horiz;
  }
  bool is_identity() const { return vert.empty() && horiz.empty(); }
  std::size_t length() const { return vert.size() + horiz.size(); }
};

struct ElementHash {
  std::size_t operator()(const Element& e) const {
    // FNV-1a over both letter streams with a separator.
    std::size_t h = 1469598103934665603ull;
    auto mix = [&h](letter_t l) {
      h ^= static_cast<std::size_t>(static_cast<std::uint16_t>(l));
      h *= 1099511628211ull;
    };
    for (letter_t l : e.vert.ls) mix(l);
    mix(static_cast<letter_t>(0x7fff));
    for (letter_t l : e.horiz.ls) mix(l);
    return h;
  }
};

Element identity();

// Image of the reduced horizontal word w under sigma(t): sigma(t_i) fixes
// every x_j and sends y to y x_i. The composition convention is forced by
// t^-1 u t = sigma(t)(u), i.e. sigma(t t') = sigma(t') o sigma(t), so the
// letters of t act left to right.
Word sigma_apply(const Word& t, const Word& w);

Element multiply(const Element& a, const Element& b);
Element invert(const Element& a);

// Right multiplication by a single generator letter; the hot path of every
// ball search.
Element mul_letter(const Element& a, letter_t l);

Element element_of_word(const Word& w);
Element element_of_string(std::string_view text, int n);

// A word over {y, t_i}^{+-1} evaluating to a, obtained by substituting
// x_i -> y^-1 t_i^-1 y t_i and reducing.
Word to_smin_word(const Element& a);

// The unique decomposition a = w' * t with w' horizontal and t vertical
// (w' = sigma(t^-1)(horiz part)).
std::pair<Word, Word> to_wt_form(const Element& a);

// Builder for the alternating words t_i^{k0} y t_i^{k1} y^-1 ... used all
// over the test fixtures. exponents must have even length 2l+2, l >= 0.
Word grid_word(int i, const std::vector<long>& exponents);

std::string print_element(const Element& a);

} // namespace fp
