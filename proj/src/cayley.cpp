#include "fp/cayley.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace fp {

std::vector<letter_t> genset_letters(const GroupContext& ctx, GenSet gs) {
  std::vector<letter_t> out;
  if (gs == GenSet::S)
    for (int i = 1; i <= ctx.n; ++i) out.push_back(x_letter(i));
  out.push_back(y_letter());
  for (int i = 1; i <= ctx.n; ++i) out.push_back(t_letter(i));
  return out;
}

std::size_t Ball::count_at_distance(int d) const {
  std::size_t c = 0;
  for (int x : dist)
    if (x == d) ++c;
  return c;
}

Ball make_ball(const GroupContext& ctx, int radius, GenSet gs, std::size_t cap, bool adjacency) {
  Ball b;
  b.ctx = ctx;
  b.genset = gs;
  b.radius = radius;
  b.has_adjacency = adjacency;

  const std::vector<letter_t> pos = genset_letters(ctx, gs);
  std::vector<letter_t> letters;
  for (letter_t l : pos) {
    letters.push_back(l);
    letters.push_back(static_cast<letter_t>(-l));
  }

  std::vector<Element> verts{identity()};
  std::vector<int> dist{0};
  std::unordered_map<Element, int, ElementHash> index;
  index.emplace(identity(), 0);

  std::size_t lo = 0, hi = 1;
  for (int d = 1; d <= radius && lo < hi; ++d) {
    for (std::size_t p = lo; p < hi; ++p) {
      for (letter_t l : letters) {
        Element child = mul_letter(verts[p], l);
        if (index.count(child)) continue;
        if (verts.size() >= cap)
          throw ResourceLimit("ball exceeds vertex cap " + std::to_string(cap));
        index.emplace(child, static_cast<int>(verts.size()));
        verts.push_back(std::move(child));
        dist.push_back(d);
      }
    }
    lo = hi;
    hi = verts.size();
  }

  // Deterministic vertex order: sorted canonical print.
  std::vector<int> order(verts.size());
  std::iota(order.begin(), order.end(), 0);
  std::vector<std::string> prints(verts.size());
  for (std::size_t k = 0; k < verts.size(); ++k) prints[k] = print_element(verts[k]);
  std::sort(order.begin(), order.end(),
            [&prints](int a, int b) { return prints[static_cast<std::size_t>(a)] < prints[static_cast<std::size_t>(b)]; });

  b.verts.reserve(verts.size());
  b.dist.reserve(verts.size());
  for (int old : order) {
    b.verts.push_back(std::move(verts[static_cast<std::size_t>(old)]));
    b.dist.push_back(dist[static_cast<std::size_t>(old)]);
  }
  b.index.reserve(b.verts.size());
  for (std::size_t k = 0; k < b.verts.size(); ++k)
    b.index.emplace(b.verts[k], static_cast<int>(k));

  if (adjacency) {
    b.adj.assign(b.verts.size(), {});
    for (std::size_t k = 0; k < b.verts.size(); ++k) {
      for (letter_t l : letters) {
        const int nb = b.index_of(mul_letter(b.verts[k], l));
        if (nb >= 0) b.adj[k].emplace_back(l, nb);
      }
    }
  }
  return b;
}

std::size_t naive_ball_count(const GroupContext& ctx, int radius, GenSet gs) {
  const std::vector<letter_t> pos = genset_letters(ctx, gs);
  std::set<Element> seen{identity()};
  std::vector<Element> frontier{identity()};
  for (int d = 1; d <= radius && !frontier.empty(); ++d) {
    std::vector<Element> next;
    for (const Element& u : frontier) {
      for (letter_t l : pos)
        for (int s : {1, -1}) {
          Element child = mul_letter(u, static_cast<letter_t>(s * l));
          if (seen.insert(child).second) next.push_back(std::move(child));
        }
    }
    frontier = std::move(next);
  }
  return seen.size();
}

std::vector<Cell> ball_cells(const Ball& b) {
  if (!b.has_adjacency) throw std::logic_error("ball built without adjacency");
  std::vector<Cell> cells;
  for (std::size_t u = 0; u < b.verts.size(); ++u)
    for (const auto& [l, v] : b.adj[u])
      if (l > 0) cells.push_back(Cell{static_cast<int>(u), l, v});
  return cells;
}

EdgeStatus edge_in_Ei(SubgroupOracle& oracle, const Element& u, const SearchBudget& budget) {
  EdgeStatus st;
  st.base = u;
  st.i = oracle.index();
  st.verdict = oracle.membership(u, budget);
  st.in_Ei = st.verdict.tier == Tier::CertifiedIn;
  st.resolved = st.verdict.tier != Tier::Unknown;
  return st;
}

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int a) {
    while (parent[static_cast<std::size_t>(a)] != a) {
      parent[static_cast<std::size_t>(a)] =
          parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(a)])];
      a = parent[static_cast<std::size_t>(a)];
    }
    return a;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[static_cast<std::size_t>(b)] = a;
  }
};

} // namespace

ComponentsReport components_minus_Ei(SubgroupOracle& oracle, const Ball& b,
                                     const SearchBudget& budget) {
  if (b.genset != GenSet::Smin) throw std::invalid_argument("components run needs an S_min ball");
  ComponentsReport rep;
  rep.i = oracle.index();
  rep.radius = b.radius;

  // The stabilization tier is only claimed for elements inside the
  // enumeration's retention radius, so that radius must cover the longest
  // canonical S_min word among the queried cell bases.
  const std::vector<Cell> cells = ball_cells(b);
  SearchBudget eff = budget;
  for (const Cell& c : cells) {
    if (letter_kind(c.letter) != Kind::T || letter_index(c.letter) != rep.i) continue;
    const int len = static_cast<int>(to_smin_word(b.verts[static_cast<std::size_t>(c.base)]).size());
    eff.radius = std::max(eff.radius, len);
  }

  UnionFind uf(b.size());
  for (const Cell& c : cells) {
    bool cut = false;
    if (letter_kind(c.letter) == Kind::T && letter_index(c.letter) == rep.i) {
      ++rep.t_cells;
      const Membership3 v = oracle.membership(b.verts[static_cast<std::size_t>(c.base)], eff);
      switch (v.tier) {
        case Tier::CertifiedIn:
          cut = true;
          ++rep.cut_cells;
          break;
        case Tier::CertifiedOut:
          break;
        case Tier::StabilizedOut:
          ++rep.stabilized_reliance;
          break;
        case Tier::Unknown:
          ++rep.unresolved;
          break;
      }
    }
    if (!cut) uf.unite(c.base, c.other);
  }

  const int e_idx = b.index_of(identity());
  const int ti_idx = b.index_of(element_of_word(Word{{t_letter(rep.i)}}));
  if (e_idx < 0 || ti_idx < 0) throw std::invalid_argument("ball too small for a component run");
  const int root_e = uf.find(e_idx);
  const int root_ti = uf.find(ti_idx);
  rep.disjoint = root_e != root_ti;

  rep.side.assign(b.size(), -1);
  for (std::size_t k = 0; k < b.size(); ++k) {
    const int r = uf.find(static_cast<int>(k));
    if (r == root_e)
      rep.side[k] = 0;
    else if (r == root_ti)
      rep.side[k] = 1;
  }
  for (int s : rep.side) {
    if (s == 0) ++rep.component_e;
    else if (s == 1) ++rep.component_ti;
    else ++rep.stranded;
  }
  if (!rep.disjoint) {
    // A merged run still reports sizes, but the split is meaningless.
    rep.component_ti = 0;
  }
  rep.certified = rep.unresolved == 0 && rep.stabilized_reliance == 0;
  return rep;
}

double coverage_minus_Ei(const ComponentsReport& rep, const Ball& b, int margin) {
  if (margin < 0) throw std::invalid_argument("margin must be >= 0");
  const int inner = b.radius - margin;
  std::size_t total = 0, covered = 0;
  for (std::size_t k = 0; k < b.size(); ++k) {
    if (b.dist[k] > inner) continue;
    ++total;
    if (rep.side[k] >= 0) ++covered;
  }
  return total == 0 ? 1.0 : static_cast<double>(covered) / static_cast<double>(total);
}

std::vector<FixturePath> fixture_paths(const GroupContext& ctx, int i) {
  if (i < 1 || i > ctx.n) throw std::invalid_argument("subgroup index out of range");
  std::vector<FixturePath> out;
  const Element e = identity();
  const Element ti = element_of_word(Word{{t_letter(i)}});

  auto add = [&out](Element base, Word w, bool ti_side, std::string label) {
    FixturePath f;
    f.base = base;
    f.word = std::move(w);
    f.expected_end = f.base;
    for (letter_t l : f.word.ls) f.expected_end = mul_letter(f.expected_end, l);
    f.ti_side = ti_side;
    f.label = std::move(label);
    out.push_back(std::move(f));
  };

  const std::string si = std::to_string(i);
  add(e, Word{{y_letter(-1), t_letter(i, -1), y_letter()}}, false, "e to x" + si + " t" + si + "^-1");
  add(e, Word{{y_letter(), t_letter(i), y_letter(-1)}}, false,
      "e to y x" + si + " y^-1 t" + si);
  for (int j = 1; j <= ctx.n; ++j) {
    if (j == i) continue;
    const std::string sj = std::to_string(j);
    add(e, Word{{t_letter(j)}}, false, "e to t" + sj);
    add(e, Word{{t_letter(j, -1), y_letter(), t_letter(j), y_letter(-1)}}, false,
        "e to x" + sj);
  }
  add(ti, Word{{y_letter(-1), t_letter(i, -1), y_letter()}}, true, "t" + si + " to x" + si);
  add(ti, Word{{y_letter(), t_letter(i), y_letter(-1)}}, true,
      "t" + si + " to y x" + si + " y^-1 t" + si + "^2");
  for (int j = 1; j <= ctx.n; ++j) {
    if (j == i) continue;
    const std::string sj = std::to_string(j);
    add(ti, Word{{t_letter(j, -1), y_letter(), t_letter(j), y_letter(-1)}}, true,
        "t" + si + " to x" + sj + " t" + si);
    add(ti,
        Word{{y_letter(-1), t_letter(i, -1), y_letter(), t_letter(j), y_letter(-1), t_letter(i),
              y_letter()}},
        true, "t" + si + " to t" + sj + " t" + si);
  }
  return out;
}

FixtureCheck validate_fixture(SubgroupOracle& oracle, const FixturePath& f,
                              const SearchBudget& budget) {
  FixtureCheck chk;
  chk.avoids_Ei = true;
  const int i = oracle.index();
  Element v = f.base;
  for (letter_t l : f.word.ls) {
    if (letter_kind(l) == Kind::T && letter_index(l) == i) {
      ++chk.ti_edges;
      const Element cell_base = l > 0 ? v : mul_letter(v, l);
      const Membership3 m = oracle.membership(cell_base, budget);
      if (m.tier == Tier::CertifiedIn) chk.avoids_Ei = false;
      chk.weakest = weaker_tier(chk.weakest, m.tier);
    }
    v = mul_letter(v, l);
  }
  chk.endpoint_ok = v == f.expected_end;
  return chk;
}

} // namespace fp
