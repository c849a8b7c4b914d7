#include "fp/walls.hpp"

#include <algorithm>

namespace fp {

WallKey WallKey::horizontal(Word rep_word) {
  WallKey k;
  k.family = WallFamily::Horizontal;
  k.rep = std::move(rep_word);
  return k;
}

WallKey WallKey::vertical(Word prefix_word, int j_idx) {
  WallKey k;
  k.family = WallFamily::Vertical;
  k.prefix = std::move(prefix_word);
  k.j = j_idx;
  return k;
}

WallKey WallKey::vertizontal(int i_idx, Element base_elt) {
  WallKey k;
  k.family = WallFamily::Vertizontal;
  k.i = i_idx;
  k.base = std::move(base_elt);
  return k;
}

std::string print_wall(const WallKey& k) {
  switch (k.family) {
    case WallFamily::Horizontal: return "H[" + print_word(k.rep) + "]";
    case WallFamily::Vertical:
      return "V" + std::to_string(k.j) + "[" + print_word(k.prefix) + "]";
    case WallFamily::Vertizontal:
      return "T" + std::to_string(k.i) + "[" + print_element(k.base) + "]";
  }
  return "?";
}

bool exact_wall_equal(const WallKey& a, const WallKey& b) {
  if (a.family != b.family) return false;
  switch (a.family) {
    case WallFamily::Horizontal: return a.rep == b.rep;
    case WallFamily::Vertical: return a.j == b.j && a.prefix == b.prefix;
    case WallFamily::Vertizontal: return a.i == b.i && a.base == b.base;
  }
  return false;
}

Side side_horizontal(const WallKey& key, const Element& g) {
  Element rep_elt;
  rep_elt.horiz = key.rep;
  const Element h = multiply(invert(rep_elt), g);
  const bool block = !h.horiz.empty() && h.horiz.ls.front() == y_letter();
  return block ? Side::Block : Side::Co;
}

Side side_vertical(const WallKey& key, const Element& g) {
  const Word w = concat_reduce(inverse(key.prefix), g.vert);
  const bool block = !w.empty() && w.ls.front() == t_letter(key.j);
  return block ? Side::Block : Side::Co;
}

SideResult side_vertizontal(SubgroupOracle& oracle, const WallKey& key, const Element& g,
                            const SearchBudget& budget) {
  SideResult out;
  const int i = key.i;
  const Word path = to_smin_word(multiply(invert(key.base), g));
  Element v = identity();
  int parity = 0;
  for (letter_t l : path.ls) {
    if (letter_kind(l) == Kind::T && letter_index(l) == i) {
      const Element cell_base = l > 0 ? v : mul_letter(v, l);
      const Membership3 m = oracle.membership(cell_base, budget);
      if (m.tier == Tier::Unknown) {
        out.side = std::nullopt;
        out.confidence = Tier::Unknown;
        return out;
      }
      out.confidence = weaker_tier(out.confidence, m.tier);
      if (m.tier == Tier::CertifiedIn) parity ^= 1;
    }
    v = mul_letter(v, l);
  }
  out.side = parity == 0 ? Side::Block : Side::Co;
  return out;
}

WallKey horizontal_key_of_edge(const Element& u) {
  return WallKey::horizontal(sigma_apply(inverse(u.vert), u.horiz));
}

WallKey vertical_key_of_cell(const Element& u, int j) {
  return WallKey::vertical(u.vert, j);
}

WallKey vertizontal_key_of_cell(const Element& u, int i) {
  return WallKey::vertizontal(i, u);
}

TriBool same_vertizontal(SubgroupOracle& oracle, const WallKey& a, const WallKey& b,
                         const SearchBudget& budget) {
  TriBool out;
  if (a.i != b.i) {
    out.value = false;
    return out;
  }
  if (a.base == b.base) {
    out.value = true;
    return out;
  }
  const Membership3 m = oracle.membership(multiply(invert(a.base), b.base), budget);
  out.confidence = m.tier;
  switch (m.tier) {
    case Tier::CertifiedIn: out.value = true; break;
    case Tier::CertifiedOut:
    case Tier::StabilizedOut: out.value = false; break;
    case Tier::Unknown: out.value = std::nullopt; break;
  }
  return out;
}

CrossingReport walls_crossed(std::vector<SubgroupOracle*>& oracles, const Element& base,
                             const Word& path, const SearchBudget& budget) {
  CrossingReport rep;
  // Raw crossing events first.
  struct Event {
    int pos;
    WallKey key;
    int sign;
  };
  std::vector<Event> events;
  Element v = base;
  int pos = 0;
  for (letter_t l : path.ls) {
    if (letter_kind(l) == Kind::Y) {
      const Element u = l > 0 ? v : mul_letter(v, l);
      events.push_back(Event{pos, horizontal_key_of_edge(u), letter_sign(l)});
    } else {
      const int j = letter_index(l);
      const Element u = l > 0 ? v : mul_letter(v, l);
      events.push_back(Event{pos, vertical_key_of_cell(u, j), letter_sign(l)});
      // H_i sits on the block side of its own wall, so the positive
      // traversal of a cut cell leaves the block.
      events.push_back(Event{pos, vertizontal_key_of_cell(u, j), -letter_sign(l)});
    }
    v = mul_letter(v, l);
    ++pos;
  }

  // Deduplicate: exact for horizontal/vertical keys, oracle-backed coset
  // equality for vertizontal ones (unknown comparisons stay distinct).
  for (const Event& ev : events) {
    int idx = -1;
    for (std::size_t k = 0; k < rep.keys.size(); ++k) {
      const WallKey& ex = rep.keys[k];
      if (ex.family != ev.key.family) continue;
      if (ev.key.family == WallFamily::Vertizontal) {
        if (ex.i != ev.key.i) continue;
        TriBool same = same_vertizontal(*oracles[static_cast<std::size_t>(ev.key.i - 1)], ex,
                                        ev.key, budget);
        rep.confidence = weaker_tier(rep.confidence, same.confidence);
        if (!same.value.has_value()) {
          ++rep.unresolved_pairs;
          continue;
        }
        if (*same.value) {
          idx = static_cast<int>(k);
          break;
        }
      } else if (exact_wall_equal(ex, ev.key)) {
        idx = static_cast<int>(k);
        break;
      }
    }
    if (idx < 0) {
      idx = static_cast<int>(rep.keys.size());
      rep.keys.push_back(ev.key);
      rep.net.push_back(0);
      rep.count.push_back(0);
    }
    rep.crossings.push_back(WallCrossing{ev.pos, idx, ev.sign});
    rep.net[static_cast<std::size_t>(idx)] += ev.sign;
    rep.count[static_cast<std::size_t>(idx)] += 1;
  }
  return rep;
}

OmegaResult omega(std::vector<SubgroupOracle*>& oracles, const Element& g, const Element& h,
                  const SearchBudget& budget) {
  OmegaResult out;
  const int n = oracles.empty() ? 2 : oracles[0]->context().n;
  out.vertizontal.assign(static_cast<std::size_t>(n), 0);

  const Word path = to_smin_word(multiply(invert(g), h));
  const CrossingReport rep = walls_crossed(oracles, g, path, budget);
  out.confidence = rep.confidence;
  out.unresolved_pairs = rep.unresolved_pairs;

  long vertical_by_keys = 0;
  for (std::size_t k = 0; k < rep.keys.size(); ++k) {
    if (rep.count[k] % 2 == 0) continue; // crossed back, does not separate
    switch (rep.keys[k].family) {
      case WallFamily::Horizontal: ++out.horizontal; break;
      case WallFamily::Vertical: ++vertical_by_keys; break;
      case WallFamily::Vertizontal:
        ++out.vertizontal[static_cast<std::size_t>(rep.keys[k].i - 1)];
        break;
    }
  }
  // Exact vertical count: tree distance of the vertical parts.
  out.vertical = static_cast<long>(concat_reduce(inverse(g.vert), h.vert).size());
  if (out.vertical != vertical_by_keys)
    throw std::logic_error("vertical wall count disagrees with the tree distance");
  out.total = out.vertical + out.horizontal;
  for (long c : out.vertizontal) out.total += c;
  return out;
}

TriBool separates(std::vector<SubgroupOracle*>& oracles, const WallKey& key, const Element& g,
                  const Element& h, const SearchBudget& budget) {
  TriBool out;
  switch (key.family) {
    case WallFamily::Horizontal:
      out.value = side_horizontal(key, g) != side_horizontal(key, h);
      return out;
    case WallFamily::Vertical:
      out.value = side_vertical(key, g) != side_vertical(key, h);
      return out;
    case WallFamily::Vertizontal: {
      SubgroupOracle& oracle = *oracles[static_cast<std::size_t>(key.i - 1)];
      const SideResult a = side_vertizontal(oracle, key, g, budget);
      const SideResult b = side_vertizontal(oracle, key, h, budget);
      out.confidence = weaker_tier(a.confidence, b.confidence);
      if (a.side && b.side) out.value = *a.side != *b.side;
      return out;
    }
  }
  return out;
}

} // namespace fp
