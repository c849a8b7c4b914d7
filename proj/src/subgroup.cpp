#include "fp/subgroup.hpp"

#include <algorithm>
#include <deque>

namespace fp {

const char* tier_name(Tier t) {
  switch (t) {
    case Tier::CertifiedIn: return "certified-in";
    case Tier::CertifiedOut: return "certified-out";
    case Tier::StabilizedOut: return "stabilized-out";
    case Tier::Unknown: return "unknown";
  }
  return "?";
}

std::vector<Element> h_generators(const GroupContext& ctx, int i) {
  if (i < 1 || i > ctx.n) throw std::invalid_argument("subgroup index out of range");
  std::vector<Element> out;
  for (int j = 1; j <= ctx.n; ++j) {
    if (j == i) continue;
    out.push_back(element_of_word(Word{{x_letter(j)}}));
    out.push_back(element_of_word(Word{{t_letter(j)}}));
  }
  // y x_i y^-1 t_i and x_i t_i^-1
  out.push_back(element_of_word(
      Word{{y_letter(), x_letter(i), y_letter(-1), t_letter(i)}}));
  out.push_back(element_of_word(Word{{x_letter(i), t_letter(i, -1)}}));
  return out;
}

std::vector<Element> h_generators_smin_form(const GroupContext& ctx, int i) {
  if (i < 1 || i > ctx.n) throw std::invalid_argument("subgroup index out of range");
  std::vector<Element> out;
  for (int j = 1; j <= ctx.n; ++j) {
    if (j == i) continue;
    out.push_back(element_of_word(
        Word{{y_letter(-1), t_letter(j, -1), y_letter(), t_letter(j)}}));
    out.push_back(element_of_word(Word{{t_letter(j)}}));
  }
  // y x_i y^-1 t_i = y t_i y^-1 and x_i t_i^-1 = y^-1 t_i^-1 y
  out.push_back(element_of_word(Word{{y_letter(), t_letter(i), y_letter(-1)}}));
  out.push_back(element_of_word(Word{{y_letter(-1), t_letter(i, -1), y_letter()}}));
  return out;
}

// -- LevelLattice -----------------------------------------------------------

LevelLattice::LevelLattice(const std::vector<LevelVector>& gens) {
  for (const LevelVector& g : gens)
    for (const auto& [key, e] : g) {
      (void)e;
      if (std::find(coords_.begin(), coords_.end(), key) == coords_.end())
        coords_.push_back(key);
    }
  std::sort(coords_.begin(), coords_.end());

  const std::size_t rows = coords_.size();
  std::vector<std::vector<long long>> cols;
  for (const LevelVector& g : gens) {
    std::vector<long long> c(rows, 0);
    for (const auto& [key, e] : g) {
      auto it = std::lower_bound(coords_.begin(), coords_.end(), key);
      c[static_cast<std::size_t>(it - coords_.begin())] = e;
    }
    cols.push_back(std::move(c));
  }

  // Column Hermite reduction: for each row in order, sweep to a single
  // pivot column via the Euclidean algorithm on column operations.
  std::size_t pivot = 0;
  for (std::size_t r = 0; r < rows && pivot < cols.size(); ++r) {
    while (true) {
      std::size_t best = cols.size();
      for (std::size_t c = pivot; c < cols.size(); ++c) {
        if (cols[c][r] == 0) continue;
        if (best == cols.size() ||
            std::abs(cols[c][r]) < std::abs(cols[best][r]))
          best = c;
      }
      if (best == cols.size()) break;
      std::swap(cols[pivot], cols[best]);
      bool cleared = true;
      for (std::size_t c = pivot + 1; c < cols.size(); ++c) {
        if (cols[c][r] == 0) continue;
        const long long q = cols[c][r] / cols[pivot][r];
        for (std::size_t rr = 0; rr < rows; ++rr) cols[c][rr] -= q * cols[pivot][rr];
        if (cols[c][r] != 0) cleared = false;
      }
      if (cleared) {
        ++pivot;
        break;
      }
    }
  }
  basis_ = std::move(cols);
}

LevelVector LevelLattice::residual(const LevelVector& v) const {
  LevelVector out;
  std::vector<long long> t(coords_.size(), 0);
  for (const auto& [key, e] : v) {
    auto it = std::lower_bound(coords_.begin(), coords_.end(), key);
    if (it == coords_.end() || *it != key)
      out[key] = e; // off-lattice coordinate, passes through
    else
      t[static_cast<std::size_t>(it - coords_.begin())] = e;
  }
  for (std::size_t r = 0; r < coords_.size(); ++r) {
    if (t[r] == 0) continue;
    for (const auto& col : basis_) {
      bool leading = col[r] != 0;
      for (std::size_t rr = 0; rr < r && leading; ++rr) leading = col[rr] == 0;
      if (!leading) continue;
      // floored division keeps the remainder canonical in [0, |pivot|)
      long long q = t[r] / col[r];
      if (t[r] % col[r] != 0 && ((t[r] < 0) != (col[r] < 0))) --q;
      for (std::size_t rr = 0; rr < coords_.size(); ++rr) t[rr] -= q * col[rr];
      break;
    }
  }
  for (std::size_t r = 0; r < coords_.size(); ++r)
    if (t[r] != 0) out[coords_[r]] = t[r];
  return out;
}

bool LevelLattice::contains(const LevelVector& v) const {
  std::vector<long long> target(coords_.size(), 0);
  for (const auto& [key, e] : v) {
    auto it = std::lower_bound(coords_.begin(), coords_.end(), key);
    if (it == coords_.end() || *it != key) return false; // support outside the lattice
    target[static_cast<std::size_t>(it - coords_.begin())] = e;
  }
  std::vector<long long> t = target;
  for (std::size_t r = 0; r < coords_.size(); ++r) {
    if (t[r] == 0) continue;
    bool hit = false;
    for (const auto& col : basis_) {
      bool leading = col[r] != 0;
      for (std::size_t rr = 0; rr < r && leading; ++rr) leading = col[rr] == 0;
      if (!leading) continue;
      if (t[r] % col[r] != 0) return false;
      const long long q = t[r] / col[r];
      for (std::size_t rr = 0; rr < coords_.size(); ++rr) t[rr] -= q * col[rr];
      hit = true;
      break;
    }
    if (!hit) return false;
  }
  for (long long x : t)
    if (x != 0) return false;
  return true;
}

// -- SubgroupOracle ---------------------------------------------------------

namespace {

std::vector<LevelVector> generator_alphas(const std::vector<Element>& gens) {
  std::vector<LevelVector> out;
  out.reserve(gens.size());
  for (const Element& g : gens) out.push_back(alpha(g));
  return out;
}

} // namespace

SubgroupOracle::SubgroupOracle(const GroupContext& ctx, int i)
    : ctx_(ctx), i_(i), gens_(h_generators(ctx, i)), lattice_(generator_alphas(gens_)) {
  // Startup self-checks: the Remark form of the generators agrees
  // elementwise, and every invariant layer accepts every generator.
  const auto alt = h_generators_smin_form(ctx, i);
  if (alt.size() != gens_.size()) throw std::logic_error("generator list size mismatch");
  for (std::size_t k = 0; k < gens_.size(); ++k)
    if (!(alt[k] == gens_[k]))
      throw std::logic_error("S_min form of generator " + std::to_string(k) + " disagrees");
  for (const Element& g : gens_) {
    if (phi(g) != 0) throw std::logic_error("generator outside Ker phi");
    if (!lattice_.contains(alpha(g))) throw std::logic_error("generator alpha escapes lattice");
    if (!chain_retract_ok(g)) throw std::logic_error("generator fails chain retraction");
  }
  // The chain projection must kill every rewritten kernel relator, or its
  // negative certificates would be unsound.
  for (const KernelRelation& rel : kernel_relations(ctx_, 3)) {
    if (!rel.commutator_shape || !rel.evals_to_identity || !rel.zero_alpha)
      throw std::logic_error("kernel relator failed its commutator checks");
    if (!chain_trivial(project_chain(rel.rewritten, i_)))
      throw std::logic_error("kernel relator survives the chain projection");
  }
  gens_with_inverses_ = gens_;
  for (const Element& g : gens_) gens_with_inverses_.push_back(invert(g));
}

bool SubgroupOracle::chain_retract_ok(const Element& g) const {
  const ChainWord cw = project_chain(rewrite_levels(to_smin_word(g)), i_);
  // Retraction onto <v_-1, v_1>: delete every other level, then compare.
  ChainWord retracted;
  for (const auto& [k, s] : cw)
    if (k == -1 || k == 1) retracted.emplace_back(k, s);
  ChainWord diff = cw;
  for (auto it = retracted.rbegin(); it != retracted.rend(); ++it)
    diff.emplace_back(it->first, -it->second);
  return chain_trivial(diff);
}

std::optional<std::string> SubgroupOracle::failed_invariant(const Element& g) const {
  if (phi(g) != 0) return "phi";
  if (!lattice_.contains(alpha(g))) return "alpha-support";
  if (!chain_retract_ok(g)) return "chain-retract";
  return std::nullopt;
}

void SubgroupOracle::run_bfs(EnumState& st) const {
  st.elems.clear();
  st.parent.clear();
  st.depth.clear();
  st.index.clear();
  st.report = EnumReport{};

  const int prune_len = st.budget.radius + st.budget.cushion;
  st.elems.push_back(identity());
  st.parent.emplace_back(-1, 0);
  st.depth.push_back(0);
  st.index.emplace(identity(), 0);
  st.report.retained = 1;
  st.report.last_new_retained_depth = 0;

  std::size_t frontier_begin = 0, frontier_end = 1;
  int depth = 0;
  while (frontier_begin < frontier_end) {
    if (st.report.stabilized) break;
    ++depth;
    bool new_retained = false;
    for (std::size_t p = frontier_begin; p < frontier_end; ++p) {
      for (std::size_t gi = 0; gi < gens_with_inverses_.size(); ++gi) {
        const Element child = multiply(st.elems[p], gens_with_inverses_[gi]);
        if (st.index.count(child)) continue;
        const int len = static_cast<int>(to_smin_word(child).size());
        if (len > prune_len) continue;
        if (st.elems.size() >= st.budget.max_nodes) {
          st.report.budget_exhausted = true;
          break;
        }
        const int signed_gen = gi < gens_.size() ? static_cast<int>(gi) + 1
                                                 : -(static_cast<int>(gi - gens_.size()) + 1);
        st.index.emplace(child, static_cast<int>(st.elems.size()));
        st.elems.push_back(child);
        st.parent.emplace_back(static_cast<int>(p), signed_gen);
        st.depth.push_back(depth);
        if (len <= st.budget.radius) {
          ++st.report.retained;
          new_retained = true;
        }
      }
      if (st.report.budget_exhausted) break;
    }
    st.report.depth_reached = depth;
    if (new_retained) st.report.last_new_retained_depth = depth;
    if (st.report.budget_exhausted) break;
    if (depth - st.report.last_new_retained_depth >= st.budget.slack)
      st.report.stabilized = true;
    if (depth >= st.budget.depth) break;
    frontier_begin = frontier_end;
    frontier_end = st.elems.size();
  }
  st.report.visited = st.elems.size();
}

void SubgroupOracle::ensure_enum(const SearchBudget& budget) {
  if (!en_.elems.empty() && en_.budget.covers(budget)) return;
  en_.budget = en_.elems.empty() ? budget : en_.budget.max_with(budget);
  run_bfs(en_);
  ++en_.generation;
}

std::vector<int> SubgroupOracle::witness_of(const EnumState& st, int idx) const {
  std::vector<int> w;
  int cur = idx;
  while (cur > 0) {
    w.push_back(st.parent[static_cast<std::size_t>(cur)].second);
    cur = st.parent[static_cast<std::size_t>(cur)].first;
  }
  std::reverse(w.begin(), w.end());
  return w;
}

Element evaluate_witness(const std::vector<Element>& gens, const std::vector<int>& witness) {
  Element acc;
  for (int w : witness) {
    if (w == 0 || std::abs(w) > static_cast<int>(gens.size()))
      throw std::invalid_argument("witness index out of range");
    const Element& g = gens[static_cast<std::size_t>(std::abs(w) - 1)];
    acc = multiply(acc, w > 0 ? g : invert(g));
  }
  return acc;
}

Membership3 SubgroupOracle::membership(const Element& g, const SearchBudget& budget) {
  std::lock_guard<std::mutex> lock(mu_);
  if (auto it = memo_.find(g); it != memo_.end()) {
    const MemoEntry& m = it->second;
    const bool hard =
        m.verdict.tier == Tier::CertifiedIn || m.verdict.tier == Tier::CertifiedOut;
    if (hard || (m.generation == en_.generation && en_.budget.covers(budget)))
      return m.verdict;
  }

  Membership3 v;
  if (phi(g) != 0) {
    v.tier = Tier::CertifiedOut;
    v.certificate = "phi";
  } else if (!lattice_.contains(alpha(g))) {
    v.tier = Tier::CertifiedOut;
    v.certificate = "alpha-support";
  } else if (!chain_retract_ok(g)) {
    v.tier = Tier::CertifiedOut;
    v.certificate = "chain-retract";
  } else {
    ensure_enum(budget);
    v.depth = en_.report.depth_reached;
    v.nodes = en_.report.visited;
    if (auto it = en_.index.find(g); it != en_.index.end()) {
      v.tier = Tier::CertifiedIn;
      v.witness = witness_of(en_, it->second);
      v.depth = en_.depth[static_cast<std::size_t>(it->second)];
      if (!(evaluate_witness(gens_, v.witness) == g))
        throw std::logic_error("witness failed to reproduce the element");
    } else if (en_.report.stabilized &&
               static_cast<int>(to_smin_word(g).size()) <= en_.budget.radius) {
      v.tier = Tier::StabilizedOut;
    } else {
      v.tier = Tier::Unknown;
    }
  }
  memo_[g] = MemoEntry{v, en_.generation};
  return v;
}

std::pair<std::vector<Element>, EnumReport> SubgroupOracle::enumerate_ball(int radius, int depth,
                                                                           int slack) const {
  EnumState st;
  st.budget.radius = radius;
  st.budget.depth = depth;
  st.budget.slack = slack;
  st.budget.cushion = SearchBudget{}.cushion;
  st.budget.max_nodes = SearchBudget{}.max_nodes;
  run_bfs(st);
  std::vector<Element> retained;
  for (const Element& e : st.elems)
    if (static_cast<int>(to_smin_word(e).size()) <= radius) retained.push_back(e);
  std::sort(retained.begin(), retained.end(),
            [](const Element& a, const Element& b) { return print_element(a) < print_element(b); });
  return {retained, st.report};
}

EnumReport SubgroupOracle::shared_report() const {
  std::lock_guard<std::mutex> lock(mu_);
  return en_.report;
}

} // namespace fp
