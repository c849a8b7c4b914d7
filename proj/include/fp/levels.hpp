#pragma once

#include <map>
#include <utility>
#include <vector>

#include "fp/group.hpp"

namespace fp {

struct NotInKernel : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// The y-exponent morphism: phi(y) = 1, phi(t_j) = 0 (hence phi(x_i) = 0).
long phi(const Element& a);

// The x_i exponent sum of the horizontal part of the wt-form of a.
// Not a morphism; never used as one.
long phi_i(const Element& a, int i);

// One occurrence of the level letter u_{j,k} = y^k t_j y^-k.
struct LevelLetter {
  int j;
  long k;
  int sign; // +1 / -1

  bool operator==(const LevelLetter& o) const { return j == o.j && k == o.k && sign == o.sign; }
  bool same_base(const LevelLetter& o) const { return j == o.j && k == o.k; }
};

using LevelWord = std::vector<LevelLetter>; // freely reduced in the u_{j,k}

// Abelianized level exponents: (j,k) -> exponent sum, zero entries dropped.
using LevelVector = std::map<std::pair<int, long>, long>;

LevelWord level_reduce(const LevelWord& lw);
LevelWord level_inverse(const LevelWord& lw);

// Scans an S_min word left to right, tracking the running y-level; each
// t_j^{+-1} seen at level k emits u_{j,k}^{+-1}. level_scan ignores the
// final level; rewrite_levels requires it to be zero (the kernel of phi).
LevelWord level_scan(const Word& smin_word);
LevelWord rewrite_levels(const Word& smin_word);

Element eval_levels(const LevelWord& lw);

LevelVector level_abelianize(const LevelWord& lw);

// alpha(a) = abelianized level rewriting of to_smin_word(a); additive on
// the kernel of phi. Throws NotInKernel when phi(a) != 0.
LevelVector alpha(const Element& a);

LevelVector level_vector_add(const LevelVector& a, const LevelVector& b);
LevelVector level_vector_neg(const LevelVector& a);

std::string print_level_word(const LevelWord& lw);
std::string print_level_vector(const LevelVector& v);

// One rewritten relator of the kernel presentation: the G-relator
// t_j^-1 x_i t_j x_i^-1 conjugated by y^k, rewritten into level letters.
// Soundness of alpha rests on every one of these being a commutator; the
// flags record the machine checks.
struct KernelRelation {
  int i = 0, j = 0;
  long k = 0;
  Word relator_smin;
  LevelWord rewritten;
  bool commutator_shape = false; // cyclic rotation of [u(i,k-1)^-1 u(i,k), u(j,k)]^{+-1}
  bool evals_to_identity = false;
  bool zero_alpha = false;
};

// Rewrites the conjugates of the G-relators by y^k for |k| <= level_range
// and checks each against the expected commutator form. Also covers the
// relator family t_j^-1 y t_j x_j^-1 y^-1, which dies under the x_j
// substitution (verified).
std::vector<KernelRelation> kernel_relations(const GroupContext& ctx, long level_range);

// -- chain projection ------------------------------------------------------
//
// Killing every u_{j,k} with j != i maps the kernel onto the group
//   < v_k (k in Z) | [v_k, v_{k-1}] = 1 >,
// the right-angled Artin group of the integer path. Words there reduce by
// shuffle cancellation (v_k commutes with v_k' iff |k - k'| <= 1) and
// reduced words have well-defined letter support, so support gives sound
// negative membership certificates for subgroups generated by v-letters.

using ChainWord = std::vector<std::pair<long, int>>; // (level, sign)

ChainWord project_chain(const LevelWord& lw, int i);
ChainWord chain_reduce(ChainWord w);
bool chain_trivial(const ChainWord& w);

// True when the reduced form of w only uses levels from `levels`.
bool chain_supported_in(const ChainWord& w, const std::vector<long>& levels);

} // namespace fp
