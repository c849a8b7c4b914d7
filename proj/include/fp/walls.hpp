#pragma once

#include <optional>

#include "fp/cayley.hpp"

namespace fp {

enum class Side { Block, Co };
enum class WallFamily { Horizontal, Vertical, Vertizontal };

// Canonical identity of a wall:
//  - Horizontal: the left translate rep*(Y, Y^c) with rep the unique
//    horizontal representative of the right vertical coset.
//  - Vertical: the tree 1-cell {prefix, prefix*t_j}, named by the initial
//    vertex of the positively labelled edge.
//  - Vertizontal: the left translate base*(T_i, T_i^c); equality of keys is
//    coset equality base1 H_i = base2 H_i resolved through the oracle.
struct WallKey {
  WallFamily family = WallFamily::Horizontal;
  Word rep;            // Horizontal
  Word prefix;         // Vertical
  int j = 0;           // Vertical
  int i = 0;           // Vertizontal
  Element base;        // Vertizontal

  static WallKey horizontal(Word rep_word);
  static WallKey vertical(Word prefix_word, int j);
  static WallKey vertizontal(int i, Element base_elt);
};

std::string print_wall(const WallKey& k);

// Exact equality for horizontal/vertical keys; vertizontal keys compare by
// component only (coset equality needs the oracle; see same_vertizontal).
bool exact_wall_equal(const WallKey& a, const WallKey& b);

Side side_horizontal(const WallKey& key, const Element& g);
Side side_vertical(const WallKey& key, const Element& g);

struct SideResult {
  std::optional<Side> side; // withheld when an edge stayed unresolved
  Tier confidence = Tier::CertifiedOut;
};

// Side of g for the wall base*(T_i, T_i^c): walks an S_min word of
// base^-1 g from the identity and flips a parity bit at every t_i-cell
// lying in E_i. Block is the side of the identity (even parity).
SideResult side_vertizontal(SubgroupOracle& oracle, const WallKey& key, const Element& g,
                            const SearchBudget& budget = {});

// The wall crossed by the y-edge at u (canonical horizontal representative
// of u's right vertical coset).
WallKey horizontal_key_of_edge(const Element& u);
// The vertical wall crossed by the t_j-cell at u.
WallKey vertical_key_of_cell(const Element& u, int j);
// The vertizontal i-wall crossed by the t_i-cell at u.
WallKey vertizontal_key_of_cell(const Element& u, int i);

struct TriBool {
  std::optional<bool> value;
  Tier confidence = Tier::CertifiedOut;
};

// Coset equality of two vertizontal keys (same i required).
TriBool same_vertizontal(SubgroupOracle& oracle, const WallKey& a, const WallKey& b,
                         const SearchBudget& budget = {});

// One crossing event along a path: edge position, the wall, and the signed
// direction (+1 into the block side).
struct WallCrossing {
  int pos = 0;
  int key_index = 0;
  int sign = 0;
};

struct CrossingReport {
  std::vector<WallKey> keys; // deduplicated
  std::vector<WallCrossing> crossings;
  std::vector<long> net;       // per key
  std::vector<long> count;     // unsigned crossing count per key
  std::size_t unresolved_pairs = 0; // vertizontal dedup left unmerged
  Tier confidence = Tier::CertifiedOut;
};

CrossingReport walls_crossed(std::vector<SubgroupOracle*>& oracles, const Element& base,
                             const Word& path, const SearchBudget& budget = {});

struct OmegaResult {
  long total = 0;
  long vertical = 0;
  long horizontal = 0;
  std::vector<long> vertizontal; // per i = 1..n
  Tier confidence = Tier::CertifiedOut;
  std::size_t unresolved_pairs = 0;
};

// Wall pseudo-metric: counts the deduplicated walls crossed an odd number
// of times by the canonical path from g to h; the vertical count is checked
// against the exact tree distance of the vertical parts.
OmegaResult omega(std::vector<SubgroupOracle*>& oracles, const Element& g, const Element& h,
                  const SearchBudget& budget = {});

TriBool separates(std::vector<SubgroupOracle*>& oracles, const WallKey& key, const Element& g,
                  const Element& h, const SearchBudget& budget = {});

} // namespace fp
