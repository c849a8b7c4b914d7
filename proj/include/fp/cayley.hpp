#pragma once

#include <unordered_map>
#include <vector>

#include "fp/subgroup.hpp"

namespace fp {

struct ResourceLimit : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class GenSet { S, Smin };

// Positive letters of the chosen generating set.
std::vector<letter_t> genset_letters(const GroupContext& ctx, GenSet gs);

// A finite Cayley ball. Vertices are stored in a deterministic order
// (sorted canonical print); dist holds BFS distances; adjacency lists keep
// the generator label of each neighbor edge.
struct Ball {
  GroupContext ctx{2};
  GenSet genset = GenSet::Smin;
  int radius = 0;
  std::vector<Element> verts;
  std::vector<int> dist;
  std::vector<std::vector<std::pair<letter_t, int>>> adj; // empty unless adjacency built
  std::unordered_map<Element, int, ElementHash> index;
  bool has_adjacency = false;

  int index_of(const Element& e) const {
    auto it = index.find(e);
    return it == index.end() ? -1 : it->second;
  }
  std::size_t size() const { return verts.size(); }
  std::size_t count_at_distance(int d) const;
};

// Exact BFS with normal-form deduplication. Throws ResourceLimit when the
// vertex count would exceed cap.
Ball make_ball(const GroupContext& ctx, int radius, GenSet gs, std::size_t cap = 8'000'000,
               bool adjacency = true);

// Hash-free reference BFS (ordered set), for two-implementation agreement.
std::size_t naive_ball_count(const GroupContext& ctx, int radius, GenSet gs);

// One 1-cell of the ball: the unordered pair {u, u*letter} with letter
// positive, keyed by the initial vertex of the positively oriented edge.
struct Cell {
  int base = -1; // vertex index of u
  letter_t letter = 0;
  int other = -1; // vertex index of u*letter
};

std::vector<Cell> ball_cells(const Ball& b);

// Status of the t_i-labelled 1-cell at u: in E_i iff u is certified in H_i.
struct EdgeStatus {
  Element base;
  int i = 0;
  Membership3 verdict;
  bool in_Ei = false;      // CertifiedIn
  bool resolved = false;   // anything but Unknown
};

EdgeStatus edge_in_Ei(SubgroupOracle& oracle, const Element& u, const SearchBudget& budget = {});

// Union-find components of the ball minus the certified E_i cells.
struct ComponentsReport {
  int i = 0;
  int radius = 0;
  bool disjoint = false;
  bool certified = false; // zero unresolved and zero stabilized reliance
  std::size_t component_e = 0;
  std::size_t component_ti = 0;
  std::size_t stranded = 0;
  std::size_t unresolved = 0;
  std::size_t stabilized_reliance = 0;
  std::size_t t_cells = 0;
  std::size_t cut_cells = 0;
  std::vector<int> side; // per vertex: 0 = e's component, 1 = t_i's, -1 neither
};

ComponentsReport components_minus_Ei(SubgroupOracle& oracle, const Ball& b,
                                     const SearchBudget& budget = {});

// Fraction of the sub-ball of radius R - margin covered by the two tracked
// components.
double coverage_minus_Ei(const ComponentsReport& rep, const Ball& b, int margin);

// The explicit rerouting paths: base point, edge word, expected endpoint,
// and which of the two components the path stays in.
struct FixturePath {
  Element base;
  Word word;
  Element expected_end;
  bool ti_side = false;
  std::string label;
};

std::vector<FixturePath> fixture_paths(const GroupContext& ctx, int i);

struct FixtureCheck {
  bool endpoint_ok = false;
  bool avoids_Ei = false;
  Tier weakest = Tier::CertifiedOut;
  std::size_t ti_edges = 0;
};

FixtureCheck validate_fixture(SubgroupOracle& oracle, const FixturePath& f,
                              const SearchBudget& budget = {});

} // namespace fp
