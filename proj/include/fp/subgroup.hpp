#pragma once

#include <mutex>
#include <optional>
#include <unordered_map>
#include <vector>

#include "fp/levels.hpp"

namespace fp {

struct SubgroupId {
  int i = 1;
};

enum class Tier : int { CertifiedIn = 0, CertifiedOut = 1, StabilizedOut = 2, Unknown = 3 };

const char* tier_name(Tier t);

// Weakest of two confidence tiers (CertifiedIn/Out are both "certified").
inline Tier weaker_tier(Tier a, Tier b) {
  auto rank = [](Tier t) { return t == Tier::CertifiedIn ? 1 : static_cast<int>(t); };
  return rank(a) >= rank(b) ? a : b;
}

// Certified three-valued membership verdict for the subgroups H_i.
struct Membership3 {
  Tier tier = Tier::Unknown;
  std::vector<int> witness;   // CertifiedIn: signed 1-based generator indices
  std::string certificate;    // CertifiedOut: name of the violated invariant
  int depth = 0;              // generator depth reached / found at
  std::size_t nodes = 0;      // search nodes visited
};

struct SearchBudget {
  int depth = 14;      // max generator depth of the subgroup search
  int radius = 6;      // retention radius (canonical S_min word length)
  int slack = 4;       // stabilization slack, in depth increments
  int cushion = 8;     // visited pruning: keep smin length <= radius + cushion
  std::size_t max_nodes = 4'000'000;

  bool covers(const SearchBudget& o) const {
    return depth >= o.depth && radius >= o.radius && slack >= o.slack &&
           cushion >= o.cushion && max_nodes >= o.max_nodes;
  }
  SearchBudget max_with(const SearchBudget& o) const {
    SearchBudget b;
    b.depth = std::max(depth, o.depth);
    b.radius = std::max(radius, o.radius);
    b.slack = std::max(slack, o.slack);
    b.cushion = std::max(cushion, o.cushion);
    b.max_nodes = std::max(max_nodes, o.max_nodes);
    return b;
  }
};

struct EnumReport {
  bool stabilized = false;
  bool budget_exhausted = false;
  int depth_reached = 0;
  int last_new_retained_depth = 0;
  std::size_t visited = 0;
  std::size_t retained = 0;
};

// The 2n generators {x_j, t_j : j != i} u {y x_i y^-1 t_i, x_i t_i^-1}.
std::vector<Element> h_generators(const GroupContext& ctx, int i);

// The same list rewritten over S_min (x_j = y^-1 t_j^-1 y t_j and so on);
// equal to h_generators elementwise, which the oracle asserts on startup.
std::vector<Element> h_generators_smin_form(const GroupContext& ctx, int i);

// Integer lattice spanned by a list of level vectors, with exact membership
// via column Hermite reduction. Backs the "alpha-support" certificate.
class LevelLattice {
public:
  explicit LevelLattice(const std::vector<LevelVector>& gens);
  bool contains(const LevelVector& v) const;
  // Canonical representative of v modulo the lattice (floored-division
  // reduction against the column basis; off-lattice coordinates pass
  // through). Equal cosets of the lattice get equal residuals.
  LevelVector residual(const LevelVector& v) const;
  const std::vector<std::pair<int, long>>& coords() const { return coords_; }

private:
  std::vector<std::pair<int, long>> coords_;        // row labels
  std::vector<std::vector<long long>> basis_;       // reduced column basis
};

// Membership oracle for one H_i. Memoizes verdicts (pure-cache semantics:
// a repeated query at equal or smaller budget returns the same verdict) and
// shares one growable subgroup enumeration across queries. Thread safe.
class SubgroupOracle {
public:
  SubgroupOracle(const GroupContext& ctx, int i);

  const GroupContext& context() const { return ctx_; }
  int index() const { return i_; }
  const std::vector<Element>& generators() const { return gens_; }

  Membership3 membership(const Element& g, const SearchBudget& budget = {});

  // BFS over products of the generators, deduplicated by normal form,
  // retaining elements of canonical S_min length <= radius. Standalone and
  // deterministic given (radius, depth, slack).
  std::pair<std::vector<Element>, EnumReport> enumerate_ball(int radius, int depth,
                                                             int slack) const;

  // Invariant layers, exposed for tests and for the soundness self-checks.
  bool alpha_in_lattice(const LevelVector& v) const { return lattice_.contains(v); }
  bool chain_retract_ok(const Element& g) const; // requires phi(g) = 0
  std::optional<std::string> failed_invariant(const Element& g) const;

  // Sound right-coset invariant of v H_i: elements in one coset share a
  // fingerprint (the converse may fail). Used to bucket wall bases before
  // the pairwise coset-equality queries.
  std::string coset_fingerprint(const Element& v);

  // Statistics of the shared enumeration (for reports).
  EnumReport shared_report() const;

private:
  struct EnumState {
    SearchBudget budget;
    std::vector<Element> elems;
    std::vector<std::pair<int, int>> parent; // (parent index, signed generator)
    std::vector<int> depth;
    std::unordered_map<Element, int, ElementHash> index;
    EnumReport report;
    long generation = 0;
  };

  void ensure_enum(const SearchBudget& budget);
  void run_bfs(EnumState& st) const;
  std::vector<int> witness_of(const EnumState& st, int idx) const;

  GroupContext ctx_;
  int i_;
  std::vector<Element> gens_;
  std::vector<Element> gens_with_inverses_;
  LevelLattice lattice_;
  std::unordered_map<long, LevelLattice> shifted_; // per phi-class lattices

  mutable std::mutex mu_;
  EnumState en_;
  struct MemoEntry {
    Membership3 verdict;
    long generation;
  };
  std::unordered_map<Element, MemoEntry, ElementHash> memo_;
};

// Evaluates a witness (signed 1-based indices into gens) back to an element.
Element evaluate_witness(const std::vector<Element>& gens, const std::vector<int>& witness);

} // namespace fp
