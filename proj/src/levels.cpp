#include "fp/levels.hpp"

#include <algorithm>

namespace fp {

long phi(const Element& a) {
  // Vertical letters contribute 0 and every x_i has zero y-exponent, so
  // only the y letters of the horizontal part count.
  long s = 0;
  for (letter_t l : a.horiz.ls)
    if (letter_kind(l) == Kind::Y) s += letter_sign(l);
  return s;
}

long phi_i(const Element& a, int i) {
  const auto [w, t] = to_wt_form(a);
  (void)t;
  long s = 0;
  for (letter_t l : w.ls)
    if (letter_kind(l) == Kind::X && letter_index(l) == i) s += letter_sign(l);
  return s;
}

LevelWord level_reduce(const LevelWord& lw) {
  LevelWord out;
  out.reserve(lw.size());
  for (const LevelLetter& l : lw) {
    if (!out.empty() && out.back().same_base(l) && out.back().sign == -l.sign)
      out.pop_back();
    else
      out.push_back(l);
  }
  return out;
}

LevelWord level_inverse(const LevelWord& lw) {
  LevelWord out;
  out.reserve(lw.size());
  for (auto it = lw.rbegin(); it != lw.rend(); ++it)
    out.push_back(LevelLetter{it->j, it->k, -it->sign});
  return out;
}

LevelWord level_scan(const Word& smin_word) {
  long level = 0;
  LevelWord out;
  for (letter_t l : smin_word.ls) {
    switch (letter_kind(l)) {
      case Kind::Y:
        level += letter_sign(l);
        break;
      case Kind::T: {
        LevelLetter u{letter_index(l), level, letter_sign(l)};
        if (!out.empty() && out.back().same_base(u) && out.back().sign == -u.sign)
          out.pop_back();
        else
          out.push_back(u);
        break;
      }
      case Kind::X:
        throw std::invalid_argument("level rewriting expects a word over {y, t_j}");
    }
  }
  return out;
}

LevelWord rewrite_levels(const Word& smin_word) {
  long level = 0;
  for (letter_t l : smin_word.ls)
    if (letter_kind(l) == Kind::Y) level += letter_sign(l);
  if (level != 0) throw NotInKernel("word has nonzero y-exponent " + std::to_string(level));
  return level_scan(smin_word);
}

Element eval_levels(const LevelWord& lw) {
  Element acc;
  for (const LevelLetter& u : lw) {
    Word w;
    for (long m = 0; m < std::abs(u.k); ++m) w.ls.push_back(y_letter(u.k > 0 ? 1 : -1));
    w.ls.push_back(t_letter(u.j, u.sign));
    for (long m = 0; m < std::abs(u.k); ++m) w.ls.push_back(y_letter(u.k > 0 ? -1 : 1));
    acc = multiply(acc, element_of_word(w));
  }
  return acc;
}

LevelVector level_abelianize(const LevelWord& lw) {
  LevelVector v;
  for (const LevelLetter& u : lw) {
    auto key = std::make_pair(u.j, u.k);
    long& e = v[key];
    e += u.sign;
    if (e == 0) v.erase(key);
  }
  return v;
}

LevelVector alpha(const Element& a) {
  if (phi(a) != 0) throw NotInKernel("alpha requires phi(a) = 0, got " + std::to_string(phi(a)));
  return level_abelianize(rewrite_levels(to_smin_word(a)));
}

LevelVector level_vector_add(const LevelVector& a, const LevelVector& b) {
  LevelVector v = a;
  for (const auto& [key, e] : b) {
    long& s = v[key];
    s += e;
    if (s == 0) v.erase(key);
  }
  return v;
}

LevelVector level_vector_neg(const LevelVector& a) {
  LevelVector v;
  for (const auto& [key, e] : a) v[key] = -e;
  return v;
}

std::string print_level_word(const LevelWord& lw) {
  if (lw.empty()) return "e";
  std::string out;
  for (const LevelLetter& u : lw) {
    if (!out.empty()) out += ' ';
    out += "u(" + std::to_string(u.j) + "," + std::to_string(u.k) + ")";
    if (u.sign < 0) out += "^-1";
  }
  return out;
}

std::string print_level_vector(const LevelVector& v) {
  std::string out;
  for (const auto& [key, e] : v) {
    if (!out.empty()) out += ' ';
    out += "(" + std::to_string(key.first) + "," + std::to_string(key.second) +
           "):" + std::to_string(e);
  }
  return out;
}

namespace {

bool is_cyclic_rotation(const LevelWord& a, const LevelWord& b) {
  if (a.size() != b.size()) return false;
  const std::size_t m = a.size();
  if (m == 0) return true;
  for (std::size_t s = 0; s < m; ++s) {
    bool ok = true;
    for (std::size_t p = 0; p < m && ok; ++p) ok = a[(s + p) % m] == b[p];
    if (ok) return true;
  }
  return false;
}

} // namespace

std::vector<KernelRelation> kernel_relations(const GroupContext& ctx, long level_range) {
  if (level_range < 1) throw std::invalid_argument("level_range must be >= 1");
  std::vector<KernelRelation> out;
  for (int i = 1; i <= ctx.n; ++i) {
    for (int j = 1; j <= ctx.n; ++j) {
      for (long k = -level_range; k <= level_range; ++k) {
        KernelRelation rel;
        rel.i = i;
        rel.j = j;
        rel.k = k;
        // y^k (t_j^-1 x_i t_j x_i^-1) y^-k over S, then pushed down to S_min.
        Word over_s;
        for (long m = 0; m < std::abs(k); ++m) over_s.ls.push_back(y_letter(k > 0 ? 1 : -1));
        over_s.ls.push_back(t_letter(j, -1));
        over_s.ls.push_back(x_letter(i));
        over_s.ls.push_back(t_letter(j));
        over_s.ls.push_back(x_letter(i, -1));
        for (long m = 0; m < std::abs(k); ++m) over_s.ls.push_back(y_letter(k > 0 ? -1 : 1));
        // The element is trivial in G, so its canonical smin word would be
        // empty; keep the substituted (unnormalized) relator word instead.
        Word raw;
        for (letter_t l : over_s.ls) {
          if (letter_kind(l) != Kind::X) {
            raw.ls.push_back(l);
            continue;
          }
          const int xi = letter_index(l);
          if (l > 0) {
            raw.ls.push_back(y_letter(-1));
            raw.ls.push_back(t_letter(xi, -1));
            raw.ls.push_back(y_letter());
            raw.ls.push_back(t_letter(xi));
          } else {
            raw.ls.push_back(t_letter(xi, -1));
            raw.ls.push_back(y_letter(-1));
            raw.ls.push_back(t_letter(xi));
            raw.ls.push_back(y_letter());
          }
        }
        rel.relator_smin = raw;
        rel.rewritten = rewrite_levels(raw);
        // Expected shape: a cyclic rotation of [A, B]^{+-1} with
        // A = u(i,k-1)^-1 u(i,k) and B = u(j,k).
        LevelWord A{LevelLetter{i, k - 1, -1}, LevelLetter{i, k, 1}};
        LevelWord B{LevelLetter{j, k, 1}};
        LevelWord comm;
        auto append = [&comm](const LevelWord& w) {
          for (const LevelLetter& l : w) comm.push_back(l);
        };
        append(A);
        append(B);
        append(level_inverse(A));
        append(level_inverse(B));
        comm = level_reduce(comm);
        rel.commutator_shape = is_cyclic_rotation(rel.rewritten, comm) ||
                               is_cyclic_rotation(rel.rewritten, level_inverse(comm));
        rel.evals_to_identity = eval_levels(rel.rewritten).is_identity();
        rel.zero_alpha = level_abelianize(rel.rewritten).empty();
        out.push_back(std::move(rel));
      }
    }
  }
  // The other defining relator family, t_j^-1 y t_j x_j^-1 y^-1, reduces
  // freely to nothing once x_j is substituted; record one check per j.
  for (int j = 1; j <= ctx.n; ++j) {
    KernelRelation rel;
    rel.i = j;
    rel.j = j;
    rel.k = 0;
    Word raw;
    raw.ls.push_back(t_letter(j, -1));
    raw.ls.push_back(y_letter());
    raw.ls.push_back(t_letter(j));
    // x_j^-1 = t_j^-1 y^-1 t_j y
    raw.ls.push_back(t_letter(j, -1));
    raw.ls.push_back(y_letter(-1));
    raw.ls.push_back(t_letter(j));
    raw.ls.push_back(y_letter());
    raw.ls.push_back(y_letter(-1));
    rel.relator_smin = reduce(raw);
    rel.rewritten = rewrite_levels(reduce(raw));
    rel.commutator_shape = rel.rewritten.empty();
    rel.evals_to_identity = eval_levels(rel.rewritten).is_identity();
    rel.zero_alpha = level_abelianize(rel.rewritten).empty();
    out.push_back(std::move(rel));
  }
  return out;
}

ChainWord project_chain(const LevelWord& lw, int i) {
  ChainWord out;
  for (const LevelLetter& u : lw)
    if (u.j == i) out.emplace_back(u.k, u.sign);
  return out;
}

namespace {

inline bool chain_commute(long a, long b) { return std::abs(a - b) <= 1; }

} // namespace

ChainWord chain_reduce(ChainWord w) {
  // Shuffle cancellation: delete a pair v_k^s ... v_k^-s whenever every
  // letter in between commutes with v_k. Repeat to a fixpoint.
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t p = 0; p < w.size() && !changed; ++p) {
      for (std::size_t q = p + 1; q < w.size(); ++q) {
        if (w[q].first == w[p].first) {
          if (w[q].second == -w[p].second) {
            bool clear = true;
            for (std::size_t m = p + 1; m < q && clear; ++m)
              clear = chain_commute(w[m].first, w[p].first);
            if (clear) {
              w.erase(w.begin() + static_cast<long>(q));
              w.erase(w.begin() + static_cast<long>(p));
              changed = true;
              break;
            }
          }
        }
        if (!chain_commute(w[q].first, w[p].first)) break;
      }
    }
  }
  return w;
}

bool chain_trivial(const ChainWord& w) { return chain_reduce(w).empty(); }

bool chain_supported_in(const ChainWord& w, const std::vector<long>& levels) {
  ChainWord r = chain_reduce(w);
  for (const auto& [k, s] : r) {
    (void)s;
    if (std::find(levels.begin(), levels.end(), k) == levels.end()) return false;
  }
  return true;
}

} // namespace fp
