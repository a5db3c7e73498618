#include "dblkit/constructions.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "dblkit/error.hpp"

namespace dblkit {

namespace {

std::string first_failed(const law_report& rep) {
  for (const auto& lr : rep.laws)
    if (!lr.passed) return lr.law;
  return "unknown law";
}

void require_lawful(const fin_cat& c, const std::string& who) {
  law_report rep = check_category_laws(c);
  if (!rep.ok())
    fail(errc::malformed_table,
         who + ": base category " + c.name + " fails " + first_failed(rep));
}

// inverse of an isomorphism, or -1 when f is not invertible
int inverse_arrow(const fin_cat& c, int f) {
  const int x = c.arrows[f].src;
  const int y = c.arrows[f].tgt;
  for (int g : c.hom(y, x))
    if (c.comp(f, g) == c.identity[x] && c.comp(g, f) == c.identity[y]) return g;
  return -1;
}

// hom sets of c as a table, so hot loops avoid rebuilding vectors
std::vector<std::vector<std::vector<int>>> hom_table(const fin_cat& c) {
  std::vector<std::vector<std::vector<int>>> t(
      c.n_objects(), std::vector<std::vector<int>>(c.n_objects()));
  for (int a = 0; a < c.n_arrows(); ++a) t[c.arrows[a].src][c.arrows[a].tgt].push_back(a);
  return t;
}

}  // namespace

pseudo_double_cat square_double_cat(const fin_cat& c) {
  require_lawful(c, "square_double_cat");
  pseudo_double_cat d;
  d.name = "Sq(" + c.name + ")";
  d.vcat = c;
  d.mode = check_mode::exhaustive;
  d.hor_set_presented = true;

  const int na = c.n_arrows();
  for (const auto& a : c.arrows) d.hors.push_back({a.src, a.tgt, a.name});
  d.horid = c.identity;
  d.hcomp_table.assign(static_cast<size_t>(na) * na, -1);
  for (int h = 0; h < na; ++h)
    for (int k = 0; k < na; ++k)
      if (c.composable(h, k)) d.hcomp_ref(h, k) = c.comp(h, k);

  std::map<std::array<int, 4>, int> idx;  // (v1, v2, h1, h2) -> square id
  for (int h1 = 0; h1 < na; ++h1)
    for (int h2 = 0; h2 < na; ++h2)
      for (int v1 = 0; v1 < na; ++v1) {
        if (c.arrows[v1].src != c.arrows[h1].src || c.arrows[v1].tgt != c.arrows[h2].src)
          continue;
        for (int v2 = 0; v2 < na; ++v2) {
          if (c.arrows[v2].src != c.arrows[h1].tgt || c.arrows[v2].tgt != c.arrows[h2].tgt)
            continue;
          if (c.comp(h1, v2) != c.comp(v1, h2)) continue;
          idx[{v1, v2, h1, h2}] = d.n_squares();
          d.squares.push_back({v1, v2, h1, h2,
                               "[" + c.arrows[h1].name + "|" + c.arrows[v1].name + "," +
                                   c.arrows[v2].name + "|" + c.arrows[h2].name + "]"});
        }
      }
  auto cell = [&](int v1, int v2, int h1, int h2) {
    auto it = idx.find({v1, v2, h1, h2});
    if (it == idx.end())
      fail(errc::internal, d.name + ": commuting square not found in its own carrier");
    return it->second;
  };

  d.sqvid.assign(na, -1);
  d.sqhid.assign(na, -1);
  for (int h = 0; h < na; ++h)
    d.sqvid[h] = cell(c.identity[c.arrows[h].src], c.identity[c.arrows[h].tgt], h, h);
  for (int v = 0; v < na; ++v)
    d.sqhid[v] = cell(v, v, c.identity[c.arrows[v].src], c.identity[c.arrows[v].tgt]);

  const int ns = d.n_squares();
  d.vcomp_sq_table.assign(static_cast<size_t>(ns) * ns, -1);
  d.hcomp_sq_table.assign(static_cast<size_t>(ns) * ns, -1);
  for (int s = 0; s < ns; ++s)
    for (int t = 0; t < ns; ++t) {
      const auto& a = d.squares[s];
      const auto& b = d.squares[t];
      if (d.vstackable(s, t))
        d.sq_vcomp_ref(s, t) = cell(c.comp(a.v1, b.v1), c.comp(a.v2, b.v2), a.h1, b.h2);
      if (d.hpastable(s, t))
        d.sq_hcomp_ref(s, t) = cell(a.v1, b.v2, c.comp(a.h1, b.h1), c.comp(a.h2, b.h2));
    }

  d.lunitor = d.sqvid;
  d.runitor = d.sqvid;
  for (int h1 = 0; h1 < na; ++h1)
    for (int h2 = 0; h2 < na; ++h2) {
      if (!c.composable(h1, h2)) continue;
      for (int h3 = 0; h3 < na; ++h3) {
        if (!c.composable(h2, h3)) continue;
        d.associator[{h1, h2, h3}] = d.sqvid[c.comp(h1, c.comp(h2, h3))];
      }
    }
  return d;
}

limit_choice canonical_pullbacks(const fin_cat& c) {
  limit_choice lc;
  for (int f = 0; f < c.n_arrows(); ++f)
    for (int g = 0; g < c.n_arrows(); ++g) {
      if (c.arrows[f].tgt != c.arrows[g].tgt) continue;
      if (auto k = pullback(c, f, g)) lc.at[{f, g}] = *k;
    }
  return lc;
}

limit_choice canonical_pushouts(const fin_cat& c) {
  limit_choice lc;
  for (int f = 0; f < c.n_arrows(); ++f)
    for (int g = 0; g < c.n_arrows(); ++g) {
      if (c.arrows[f].src != c.arrows[g].src) continue;
      if (auto k = pushout(c, f, g)) lc.at[{f, g}] = *k;
    }
  return lc;
}

limit_choice finset_pullbacks(const finset_cat& fs, int carrier_bound) {
  const fin_cat& c = fs.cat;
  limit_choice lc;
  for (int f = 0; f < c.n_arrows(); ++f)
    for (int g = 0; g < c.n_arrows(); ++g) {
      if (c.arrows[f].tgt != c.arrows[g].tgt) continue;
      const int m1 = c.arrows[f].src;
      const int m2 = c.arrows[g].src;
      std::vector<int> p0;
      std::vector<int> p1;
      for (int u = 0; u < m1; ++u)
        for (int w = 0; w < m2; ++w) {
          if (fs.graph[f][u] != fs.graph[g][w]) continue;
          p0.push_back(u);
          p1.push_back(w);
        }
      const int k = static_cast<int>(p0.size());
      if (k > carrier_bound)
        fail(errc::closure_exceeded, "finset_pullbacks: carrier of size " + std::to_string(k) +
                                         " exceeds bound " + std::to_string(carrier_bound));
      if (k > fs.size_bound) continue;
      lc.at[{f, g}] = cone{k, fs.arrow_of(k, m1, p0), fs.arrow_of(k, m2, p1)};
    }
  return lc;
}

limit_choice finset_pushouts(const finset_cat& fs, int carrier_bound) {
  const fin_cat& c = fs.cat;
  limit_choice lc;
  for (int f = 0; f < c.n_arrows(); ++f)
    for (int g = 0; g < c.n_arrows(); ++g) {
      if (c.arrows[f].src != c.arrows[g].src) continue;
      const int z = c.arrows[f].src;
      const int a = c.arrows[f].tgt;
      const int b = c.arrows[g].tgt;
      // quotient of the disjoint sum a + b by f(u) ~ g(u)
      std::vector<int> root(a + b);
      for (int i = 0; i < a + b; ++i) root[i] = i;
      auto find = [&](int i) {
        while (root[i] != i) i = root[i] = root[root[i]];
        return i;
      };
      for (int u = 0; u < z; ++u) {
        const int ra = find(fs.graph[f][u]);
        const int rb = find(a + fs.graph[g][u]);
        if (ra != rb) root[std::max(ra, rb)] = std::min(ra, rb);
      }
      std::vector<int> cls(a + b, -1);
      int k = 0;
      for (int i = 0; i < a + b; ++i)
        if (cls[find(i)] < 0) cls[find(i)] = k++;
      if (k > carrier_bound)
        fail(errc::closure_exceeded, "finset_pushouts: carrier of size " + std::to_string(k) +
                                         " exceeds bound " + std::to_string(carrier_bound));
      if (k > fs.size_bound) continue;
      std::vector<int> q0(a);
      std::vector<int> q1(b);
      for (int i = 0; i < a; ++i) q0[i] = cls[find(i)];
      for (int j = 0; j < b; ++j) q1[j] = cls[find(a + j)];
      lc.at[{f, g}] = cone{k, fs.arrow_of(a, k, q0), fs.arrow_of(b, k, q1)};
    }
  return lc;
}

span_model span_double_cat(const fin_cat& c, const limit_choice& pb, const span_options& opt) {
  require_lawful(c, "span_double_cat");
  span_model mm;
  pseudo_double_cat& d = mm.d;
  d.name = "Span(" + c.name + ")";
  d.vcat = c;
  d.hor_set_presented = false;
  const auto homs = hom_table(c);

  // horizontal carrier: every span of c, ordered by (apex, left leg, right leg)
  std::map<std::array<int, 3>, int> hor_idx;
  for (int a = 0; a < c.n_objects(); ++a)
    for (int l = 0; l < c.n_arrows(); ++l) {
      if (c.arrows[l].src != a) continue;
      for (int r = 0; r < c.n_arrows(); ++r) {
        if (c.arrows[r].src != a) continue;
        const bool is_identity_span = l == c.identity[a] && r == c.identity[a];
        if (opt.apex_bound >= 0 && a > opt.apex_bound && !is_identity_span) continue;
        if (d.n_hors() >= opt.hor_bound)
          fail(errc::closure_exceeded,
               d.name + ": span carrier exceeds bound " + std::to_string(opt.hor_bound));
        hor_idx[{a, l, r}] = d.n_hors();
        d.hors.push_back({c.arrows[l].tgt, c.arrows[r].tgt,
                          "sp(" + c.arrows[l].name + ";" + c.arrows[r].name + ")"});
        mm.hor_span.push_back({a, l, r});
      }
    }
  const int nh = d.n_hors();
  d.horid.assign(c.n_objects(), -1);
  for (int x = 0; x < c.n_objects(); ++x)
    d.horid[x] = hor_idx.at({x, c.identity[x], c.identity[x]});

  // chosen pullbacks, each used entry checked for universality once
  std::set<std::pair<int, int>> seen;
  auto chosen = [&](int f, int g) -> const cone* {
    auto it = pb.at.find({f, g});
    if (it == pb.at.end()) {
      if (opt.require_total)
        fail(errc::missing_pullback, d.name + ": no chosen pullback for cospan (" +
                                         c.arrows[f].name + ", " + c.arrows[g].name + ")");
      return nullptr;
    }
    if (seen.insert({f, g}).second && !is_pullback_cone(c, f, g, it->second))
      fail(errc::malformed_table, d.name + ": chosen pullback for (" + c.arrows[f].name + ", " +
                                      c.arrows[g].name + ") is not universal");
    return &it->second;
  };

  d.hcomp_table.assign(static_cast<size_t>(nh) * nh, -1);
  for (int s = 0; s < nh; ++s)
    for (int t = 0; t < nh; ++t) {
      if (!d.hcomposable(s, t)) continue;
      const auto& sp = mm.hor_span[s];
      const auto& tp = mm.hor_span[t];
      if (const cone* k = chosen(sp.right, tp.left)) {
        const auto it =
            hor_idx.find({k->apex, c.comp(k->leg0, sp.left), c.comp(k->leg1, tp.right)});
        if (it != hor_idx.end())
          d.hcomp_ref(s, t) = it->second;
        else if (opt.require_total)
          fail(errc::closure_exceeded, d.name + ": composite of " + d.hors[s].name + " and " +
                                           d.hors[t].name + " leaves the apex bound");
      }
    }

  std::map<std::array<int, 5>, int> sq_idx;  // (v1, v2, h1, h2, m) -> square id
  auto commutes = [&](int v1, int v2, int h1, int h2, int m) {
    const auto& a = mm.hor_span[h1];
    const auto& b = mm.hor_span[h2];
    return c.comp(a.left, v1) == c.comp(m, b.left) && c.comp(a.right, v2) == c.comp(m, b.right);
  };
  auto find_square = [&](int v1, int v2, int h1, int h2, int m) {
    auto it = sq_idx.find({v1, v2, h1, h2, m});
    return it == sq_idx.end() ? -1 : it->second;
  };
  auto add_square = [&](int v1, int v2, int h1, int h2, int m) -> int {
    const int have = find_square(v1, v2, h1, h2, m);
    if (have >= 0) return have;
    if (!commutes(v1, v2, h1, h2, m))
      fail(errc::internal, d.name + ": constructed square does not commute");
    const int id = d.n_squares();
    sq_idx[{v1, v2, h1, h2, m}] = id;
    d.squares.push_back({v1, v2, h1, h2, "q" + std::to_string(id)});
    mm.square_arrow.push_back(m);
    return id;
  };

  // the full square set is materialized when it fits; otherwise the carrier is
  // a virtual fragment grown from the identity and coherence cells
  long long full_count = 0;
  for (int h1 = 0; h1 < nh && full_count <= opt.square_bound; ++h1)
    for (int h2 = 0; h2 < nh && full_count <= opt.square_bound; ++h2) {
      const auto& a = mm.hor_span[h1];
      const auto& b = mm.hor_span[h2];
      for (int m : homs[a.apex][b.apex])
        for (int v1 : homs[d.hors[h1].src][d.hors[h2].src])
          for (int v2 : homs[d.hors[h1].tgt][d.hors[h2].tgt])
            if (commutes(v1, v2, h1, h2, m)) ++full_count;
    }
  const bool full = full_count <= opt.square_bound;
  if (full) {
    for (int h1 = 0; h1 < nh; ++h1)
      for (int h2 = 0; h2 < nh; ++h2) {
        const auto& a = mm.hor_span[h1];
        const auto& b = mm.hor_span[h2];
        for (int m : homs[a.apex][b.apex])
          for (int v1 : homs[d.hors[h1].src][d.hors[h2].src])
            for (int v2 : homs[d.hors[h1].tgt][d.hors[h2].tgt])
              if (commutes(v1, v2, h1, h2, m)) add_square(v1, v2, h1, h2, m);
      }
  }

  d.sqvid.assign(nh, -1);
  for (int h = 0; h < nh; ++h)
    d.sqvid[h] = add_square(c.identity[d.hors[h].src], c.identity[d.hors[h].tgt], h, h,
                            c.identity[mm.hor_span[h].apex]);
  d.sqhid.assign(c.n_arrows(), -1);
  for (int v = 0; v < c.n_arrows(); ++v)
    d.sqhid[v] = add_square(v, v, d.horid[c.arrows[v].src], d.horid[c.arrows[v].tgt], v);
  if (d.n_squares() > opt.square_bound)
    fail(errc::closure_exceeded,
         d.name + ": identity cells alone exceed square bound " + std::to_string(opt.square_bound));

  d.lunitor.assign(nh, -1);
  d.runitor.assign(nh, -1);
  for (int h = 0; h < nh; ++h) {
    if (!full && d.n_squares() + 4 > opt.square_bound) break;
    const auto& sp = mm.hor_span[h];
    const int x = d.hors[h].src;
    const int y = d.hors[h].tgt;
    const int idx = c.identity[x];
    const int idy = c.identity[y];
    if (const int lcomp = d.hcomp(d.horid[x], h); lcomp >= 0) {
      const cone* k = chosen(idx, sp.left);
      d.lunitor[h] = add_square(idx, idy, lcomp, h, k->leg1);
      if (const int inv = inverse_arrow(c, k->leg1); inv >= 0)
        add_square(idx, idy, h, lcomp, inv);
    }
    if (const int rcomp = d.hcomp(h, d.horid[y]); rcomp >= 0) {
      const cone* k = chosen(sp.right, idy);
      d.runitor[h] = add_square(idx, idy, rcomp, h, k->leg0);
      if (const int inv = inverse_arrow(c, k->leg0); inv >= 0)
        add_square(idx, idy, h, rcomp, inv);
    }
  }

  for (int h1 = 0; h1 < nh; ++h1)
    for (int h2 = 0; h2 < nh; ++h2) {
      if (!d.hcomposable(h1, h2)) continue;
      const int c12 = d.hcomp(h1, h2);
      if (c12 < 0) continue;
      for (int h3 = 0; h3 < nh; ++h3) {
        if (!d.hcomposable(h2, h3)) continue;
        const int c23 = d.hcomp(h2, h3);
        const int lsrc = d.hcomp(h1, c23);
        const int ltgt = d.hcomp(c12, h3);
        if (c23 < 0 || lsrc < 0 || ltgt < 0) continue;
        if (!full && d.n_squares() + 2 > opt.square_bound) continue;
        const auto& s1 = mm.hor_span[h1];
        const auto& s2 = mm.hor_span[h2];
        const auto& s3 = mm.hor_span[h3];
        const cone* k23 = chosen(s2.right, s3.left);
        const cone* k1_23 = chosen(s1.right, mm.hor_span[c23].left);
        const cone* k12 = chosen(s1.right, s2.left);
        const cone* k12_3 = chosen(mm.hor_span[c12].right, s3.left);
        const auto u = pullback_mediator(
            c, *k12, cone{k1_23->apex, k1_23->leg0, c.comp(k1_23->leg1, k23->leg0)});
        if (!u) fail(errc::internal, d.name + ": associator lacks its first mediator");
        const auto m =
            pullback_mediator(c, *k12_3, cone{k1_23->apex, *u, c.comp(k1_23->leg1, k23->leg1)});
        if (!m) fail(errc::internal, d.name + ": associator lacks its mediator");
        const int idx = c.identity[d.hors[h1].src];
        const int idw = c.identity[d.hors[h3].tgt];
        d.associator[{h1, h2, h3}] = add_square(idx, idw, lsrc, ltgt, *m);
        if (const int inv = inverse_arrow(c, *m); inv >= 0)
          add_square(idx, idw, ltgt, lsrc, inv);
      }
    }

  // mediating apex arrow of a horizontal paste, defined when both composite
  // spans are present
  auto paste_arrow = [&](int i, int j) -> int {
    const cone* kt = chosen(mm.hor_span[d.squares[i].h1].right, mm.hor_span[d.squares[j].h1].left);
    const cone* kb = chosen(mm.hor_span[d.squares[i].h2].right, mm.hor_span[d.squares[j].h2].left);
    const auto u = pullback_mediator(
        c, *kb,
        cone{kt->apex, c.comp(kt->leg0, mm.square_arrow[i]), c.comp(kt->leg1, mm.square_arrow[j])});
    if (!u) fail(errc::internal, d.name + ": square paste lacks its mediator");
    return *u;
  };

  if (!full) {
    bool grew = true;
    while (grew && d.n_squares() < opt.square_bound) {
      grew = false;
      const int n = d.n_squares();
      for (int i = 0; i < n && d.n_squares() < opt.square_bound; ++i)
        for (int j = 0; j < n && d.n_squares() < opt.square_bound; ++j) {
          const auto a = d.squares[i];
          const auto b = d.squares[j];
          if (d.vstackable(i, j)) {
            const int m = c.comp(mm.square_arrow[i], mm.square_arrow[j]);
            if (find_square(c.comp(a.v1, b.v1), c.comp(a.v2, b.v2), a.h1, b.h2, m) < 0) {
              add_square(c.comp(a.v1, b.v1), c.comp(a.v2, b.v2), a.h1, b.h2, m);
              grew = true;
            }
          }
          if (d.hpastable(i, j)) {
            const int top = d.hcomp(a.h1, b.h1);
            const int bot = d.hcomp(a.h2, b.h2);
            if (top >= 0 && bot >= 0) {
              const int m = paste_arrow(i, j);
              if (find_square(a.v1, b.v2, top, bot, m) < 0) {
                add_square(a.v1, b.v2, top, bot, m);
                grew = true;
              }
            }
          }
        }
    }
  }

  const int ns = d.n_squares();
  d.vcomp_sq_table.assign(static_cast<size_t>(ns) * ns, -1);
  d.hcomp_sq_table.assign(static_cast<size_t>(ns) * ns, -1);
  for (int i = 0; i < ns; ++i)
    for (int j = 0; j < ns; ++j) {
      const auto& a = d.squares[i];
      const auto& b = d.squares[j];
      if (d.vstackable(i, j)) {
        const int got =
            find_square(c.comp(a.v1, b.v1), c.comp(a.v2, b.v2), a.h1, b.h2,
                        c.comp(mm.square_arrow[i], mm.square_arrow[j]));
        if (full && got < 0)
          fail(errc::internal, d.name + ": stacking fell outside the full square set");
        d.sq_vcomp_ref(i, j) = got;
      }
      if (d.hpastable(i, j)) {
        const int top = d.hcomp(a.h1, b.h1);
        const int bot = d.hcomp(a.h2, b.h2);
        if (top >= 0 && bot >= 0) {
          const int got = find_square(a.v1, b.v2, top, bot, paste_arrow(i, j));
          if (full && got < 0)
            fail(errc::internal, d.name + ": pasting fell outside the full square set");
          d.sq_hcomp_ref(i, j) = got;
        }
      }
    }

  bool total = true;
  for (int s = 0; s < nh && total; ++s)
    for (int t = 0; t < nh && total; ++t)
      if (d.hcomposable(s, t) && d.hcomp(s, t) < 0) total = false;
  d.mode = (full && total) ? check_mode::exhaustive : check_mode::probe;
  return mm;
}

cospan_model structured_cospan_double_cat(const fin_cat& c1, const fin_cat& c2,
                                          const fin_functor& l, const limit_choice& po,
                                          const span_options& opt) {
  require_lawful(c1, "structured_cospan_double_cat");
  require_lawful(c2, "structured_cospan_double_cat");
  if (!check_functor_laws(c1, c2, l).ok())
    fail(errc::malformed_table,
         "structured_cospan_double_cat: " + l.name + " is not a functor");
  cospan_model mm;
  pseudo_double_cat& d = mm.d;
  d.name = "Csp(" + l.name + ")";
  d.vcat = c1;
  d.hor_set_presented = false;
  const auto homs = hom_table(c2);
  auto lo = [&](int x) { return l.obj_map[x]; };
  auto la = [&](int v) { return l.arr_map[v]; };

  // horizontal carrier: cospans l(x) -> z <- l(y), ordered by (x, y, z, legs)
  std::map<std::array<int, 5>, int> hor_idx;
  std::vector<std::pair<int, int>> feet;  // hor id -> (x, y), matching d.hors
  for (int x = 0; x < c1.n_objects(); ++x)
    for (int y = 0; y < c1.n_objects(); ++y)
      for (int z = 0; z < c2.n_objects(); ++z)
        for (int lf : homs[lo(x)][z])
          for (int rf : homs[lo(y)][z]) {
            const bool is_identity_cospan =
                x == y && z == lo(x) && lf == c2.identity[z] && rf == c2.identity[z];
            if (opt.apex_bound >= 0 && z > opt.apex_bound && !is_identity_cospan) continue;
            if (d.n_hors() >= opt.hor_bound)
              fail(errc::closure_exceeded,
                   d.name + ": cospan carrier exceeds bound " + std::to_string(opt.hor_bound));
            hor_idx[{x, y, z, lf, rf}] = d.n_hors();
            d.hors.push_back(
                {x, y, "csp(" + c2.arrows[lf].name + ";" + c2.arrows[rf].name + ")"});
            mm.hor_cospan.push_back({z, lf, rf});
            feet.push_back({x, y});
          }
  const int nh = d.n_hors();
  d.horid.assign(c1.n_objects(), -1);
  for (int x = 0; x < c1.n_objects(); ++x)
    d.horid[x] = hor_idx.at({x, x, lo(x), c2.identity[lo(x)], c2.identity[lo(x)]});

  std::set<std::pair<int, int>> seen;
  auto chosen = [&](int f, int g) -> const cone* {
    auto it = po.at.find({f, g});
    if (it == po.at.end()) {
      if (opt.require_total)
        fail(errc::missing_pushout, d.name + ": no chosen pushout for span (" +
                                        c2.arrows[f].name + ", " + c2.arrows[g].name + ")");
      return nullptr;
    }
    if (seen.insert({f, g}).second && !is_pushout_cocone(c2, f, g, it->second))
      fail(errc::malformed_table, d.name + ": chosen pushout for (" + c2.arrows[f].name + ", " +
                                      c2.arrows[g].name + ") is not universal");
    return &it->second;
  };

  d.hcomp_table.assign(static_cast<size_t>(nh) * nh, -1);
  for (int s = 0; s < nh; ++s)
    for (int t = 0; t < nh; ++t) {
      if (!d.hcomposable(s, t)) continue;
      const auto& sp = mm.hor_cospan[s];
      const auto& tp = mm.hor_cospan[t];
      if (const cone* k = chosen(sp.right, tp.left)) {
        const auto it = hor_idx.find({feet[s].first, feet[t].second, k->apex,
                                      c2.comp(sp.left, k->leg0), c2.comp(tp.right, k->leg1)});
        if (it != hor_idx.end())
          d.hcomp_ref(s, t) = it->second;
        else if (opt.require_total)
          fail(errc::closure_exceeded, d.name + ": composite of " + d.hors[s].name + " and " +
                                           d.hors[t].name + " leaves the apex bound");
      }
    }

  std::map<std::array<int, 5>, int> sq_idx;
  auto commutes = [&](int v1, int v2, int h1, int h2, int m) {
    const auto& a = mm.hor_cospan[h1];
    const auto& b = mm.hor_cospan[h2];
    return c2.comp(a.left, m) == c2.comp(la(v1), b.left) &&
           c2.comp(a.right, m) == c2.comp(la(v2), b.right);
  };
  auto find_square = [&](int v1, int v2, int h1, int h2, int m) {
    auto it = sq_idx.find({v1, v2, h1, h2, m});
    return it == sq_idx.end() ? -1 : it->second;
  };
  auto add_square = [&](int v1, int v2, int h1, int h2, int m) -> int {
    const int have = find_square(v1, v2, h1, h2, m);
    if (have >= 0) return have;
    if (!commutes(v1, v2, h1, h2, m))
      fail(errc::internal, d.name + ": constructed square does not commute");
    const int id = d.n_squares();
    sq_idx[{v1, v2, h1, h2, m}] = id;
    d.squares.push_back({v1, v2, h1, h2, "q" + std::to_string(id)});
    mm.square_arrow.push_back(m);
    return id;
  };

  long long full_count = 0;
  for (int h1 = 0; h1 < nh && full_count <= opt.square_bound; ++h1)
    for (int h2 = 0; h2 < nh && full_count <= opt.square_bound; ++h2) {
      const auto& a = mm.hor_cospan[h1];
      const auto& b = mm.hor_cospan[h2];
      for (int m : homs[a.apex][b.apex])
        for (int v1 : c1.hom(feet[h1].first, feet[h2].first))
          for (int v2 : c1.hom(feet[h1].second, feet[h2].second))
            if (commutes(v1, v2, h1, h2, m)) ++full_count;
    }
  const bool full = full_count <= opt.square_bound;
  if (full) {
    for (int h1 = 0; h1 < nh; ++h1)
      for (int h2 = 0; h2 < nh; ++h2) {
        const auto& a = mm.hor_cospan[h1];
        const auto& b = mm.hor_cospan[h2];
        for (int m : homs[a.apex][b.apex])
          for (int v1 : c1.hom(feet[h1].first, feet[h2].first))
            for (int v2 : c1.hom(feet[h1].second, feet[h2].second))
              if (commutes(v1, v2, h1, h2, m)) add_square(v1, v2, h1, h2, m);
      }
  }

  d.sqvid.assign(nh, -1);
  for (int h = 0; h < nh; ++h)
    d.sqvid[h] = add_square(c1.identity[feet[h].first], c1.identity[feet[h].second], h, h,
                            c2.identity[mm.hor_cospan[h].apex]);
  d.sqhid.assign(c1.n_arrows(), -1);
  for (int v = 0; v < c1.n_arrows(); ++v)
    d.sqhid[v] = add_square(v, v, d.horid[c1.arrows[v].src], d.horid[c1.arrows[v].tgt], la(v));
  if (d.n_squares() > opt.square_bound)
    fail(errc::closure_exceeded,
         d.name + ": identity cells alone exceed square bound " + std::to_string(opt.square_bound));

  d.lunitor.assign(nh, -1);
  d.runitor.assign(nh, -1);
  for (int h = 0; h < nh; ++h) {
    if (!full && d.n_squares() + 4 > opt.square_bound) break;
    const auto& sp = mm.hor_cospan[h];
    const int idx = c1.identity[feet[h].first];
    const int idy = c1.identity[feet[h].second];
    const int idz = c2.identity[sp.apex];
    if (const int lcomp = d.hcomp(d.horid[feet[h].first], h); lcomp >= 0) {
      const cone* k = chosen(c2.identity[lo(feet[h].first)], sp.left);
      const auto m = pushout_mediator(c2, *k, cone{sp.apex, sp.left, idz});
      if (!m) fail(errc::internal, d.name + ": left unitor lacks its mediator");
      d.lunitor[h] = add_square(idx, idy, lcomp, h, *m);
      if (const int inv = inverse_arrow(c2, *m); inv >= 0) add_square(idx, idy, h, lcomp, inv);
    }
    if (const int rcomp = d.hcomp(h, d.horid[feet[h].second]); rcomp >= 0) {
      const cone* k = chosen(sp.right, c2.identity[lo(feet[h].second)]);
      const auto m = pushout_mediator(c2, *k, cone{sp.apex, idz, sp.right});
      if (!m) fail(errc::internal, d.name + ": right unitor lacks its mediator");
      d.runitor[h] = add_square(idx, idy, rcomp, h, *m);
      if (const int inv = inverse_arrow(c2, *m); inv >= 0) add_square(idx, idy, h, rcomp, inv);
    }
  }

  for (int h1 = 0; h1 < nh; ++h1)
    for (int h2 = 0; h2 < nh; ++h2) {
      if (!d.hcomposable(h1, h2)) continue;
      const int c12 = d.hcomp(h1, h2);
      if (c12 < 0) continue;
      for (int h3 = 0; h3 < nh; ++h3) {
        if (!d.hcomposable(h2, h3)) continue;
        const int c23 = d.hcomp(h2, h3);
        const int lsrc = d.hcomp(h1, c23);
        const int ltgt = d.hcomp(c12, h3);
        if (c23 < 0 || lsrc < 0 || ltgt < 0) continue;
        if (!full && d.n_squares() + 2 > opt.square_bound) continue;
        const auto& s1 = mm.hor_cospan[h1];
        const auto& s2 = mm.hor_cospan[h2];
        const auto& s3 = mm.hor_cospan[h3];
        const cone* k23 = chosen(s2.right, s3.left);
        const cone* k1_23 = chosen(s1.right, mm.hor_cospan[c23].left);
        const cone* k12 = chosen(s1.right, s2.left);
        const cone* k12_3 = chosen(mm.hor_cospan[c12].right, s3.left);
        const auto u = pushout_mediator(
            c2, *k23,
            cone{k12_3->apex, c2.comp(k12->leg1, k12_3->leg0), k12_3->leg1});
        if (!u) fail(errc::internal, d.name + ": associator lacks its first mediator");
        const auto m = pushout_mediator(
            c2, *k1_23, cone{k12_3->apex, c2.comp(k12->leg0, k12_3->leg0), *u});
        if (!m) fail(errc::internal, d.name + ": associator lacks its mediator");
        const int idx = c1.identity[feet[h1].first];
        const int idw = c1.identity[feet[h3].second];
        d.associator[{h1, h2, h3}] = add_square(idx, idw, lsrc, ltgt, *m);
        if (const int inv = inverse_arrow(c2, *m); inv >= 0)
          add_square(idx, idw, ltgt, lsrc, inv);
      }
    }

  auto paste_arrow = [&](int i, int j) -> int {
    const auto& a = d.squares[i];
    const auto& b = d.squares[j];
    const cone* kt = chosen(mm.hor_cospan[a.h1].right, mm.hor_cospan[b.h1].left);
    const cone* kb = chosen(mm.hor_cospan[a.h2].right, mm.hor_cospan[b.h2].left);
    const auto u = pushout_mediator(
        c2, *kt,
        cone{kb->apex, c2.comp(mm.square_arrow[i], kb->leg0), c2.comp(mm.square_arrow[j], kb->leg1)});
    if (!u) fail(errc::internal, d.name + ": square paste lacks its mediator");
    return *u;
  };

  if (!full) {
    bool grew = true;
    while (grew && d.n_squares() < opt.square_bound) {
      grew = false;
      const int n = d.n_squares();
      for (int i = 0; i < n && d.n_squares() < opt.square_bound; ++i)
        for (int j = 0; j < n && d.n_squares() < opt.square_bound; ++j) {
          const auto a = d.squares[i];
          const auto b = d.squares[j];
          if (d.vstackable(i, j)) {
            const int m = c2.comp(mm.square_arrow[i], mm.square_arrow[j]);
            if (find_square(c1.comp(a.v1, b.v1), c1.comp(a.v2, b.v2), a.h1, b.h2, m) < 0) {
              add_square(c1.comp(a.v1, b.v1), c1.comp(a.v2, b.v2), a.h1, b.h2, m);
              grew = true;
            }
          }
          if (d.hpastable(i, j)) {
            const int top = d.hcomp(a.h1, b.h1);
            const int bot = d.hcomp(a.h2, b.h2);
            if (top >= 0 && bot >= 0) {
              const int m = paste_arrow(i, j);
              if (find_square(a.v1, b.v2, top, bot, m) < 0) {
                add_square(a.v1, b.v2, top, bot, m);
                grew = true;
              }
            }
          }
        }
    }
  }

  const int ns = d.n_squares();
  d.vcomp_sq_table.assign(static_cast<size_t>(ns) * ns, -1);
  d.hcomp_sq_table.assign(static_cast<size_t>(ns) * ns, -1);
  for (int i = 0; i < ns; ++i)
    for (int j = 0; j < ns; ++j) {
      const auto& a = d.squares[i];
      const auto& b = d.squares[j];
      if (d.vstackable(i, j)) {
        const int got = find_square(c1.comp(a.v1, b.v1), c1.comp(a.v2, b.v2), a.h1, b.h2,
                                    c2.comp(mm.square_arrow[i], mm.square_arrow[j]));
        if (full && got < 0)
          fail(errc::internal, d.name + ": stacking fell outside the full square set");
        d.sq_vcomp_ref(i, j) = got;
      }
      if (d.hpastable(i, j)) {
        const int top = d.hcomp(a.h1, b.h1);
        const int bot = d.hcomp(a.h2, b.h2);
        if (top >= 0 && bot >= 0) {
          const int got = find_square(a.v1, b.v2, top, bot, paste_arrow(i, j));
          if (full && got < 0)
            fail(errc::internal, d.name + ": pasting fell outside the full square set");
          d.sq_hcomp_ref(i, j) = got;
        }
      }
    }

  bool total = true;
  for (int s = 0; s < nh && total; ++s)
    for (int t = 0; t < nh && total; ++t)
      if (d.hcomposable(s, t) && d.hcomp(s, t) < 0) total = false;
  d.mode = (full && total) ? check_mode::exhaustive : check_mode::probe;
  return mm;
}

namespace {

// representative pair of a coend class
std::array<int, 3> class_rep(const prof_composite& pc, int e, int c, int cls) {
  const auto& s = pc.slots[e][c];
  for (size_t i = 0; i < s.pairs.size(); ++i)
    if (s.class_of[i] == cls) return s.pairs[i];
  fail(errc::internal, "prof_double_cat: coend class without representative");
}

std::vector<int> flatten_family(const prof_family& fam) {
  std::vector<int> flat;
  for (const auto& row : fam)
    for (const auto& slot : row) {
      flat.push_back(static_cast<int>(slot.size()));
      flat.insert(flat.end(), slot.begin(), slot.end());
    }
  return flat;
}

}  // namespace

prof_model prof_double_cat(const prof_seed& seed, const prof_options& opt) {
  prof_model mm;
  pseudo_double_cat& d = mm.d;
  mm.cats = seed.cats;
  const int nc = static_cast<int>(seed.cats.size());
  std::string joined;
  for (int i = 0; i < nc; ++i) joined += (i ? "," : "") + seed.cats[i].name;
  d.name = "Prof(" + joined + ")";
  d.hor_set_presented = false;
  d.mode = check_mode::probe;
  for (int i = 0; i < nc; ++i) require_lawful(seed.cats[i], "prof_double_cat");

  // vertical category: seed functors with identities, closed under composition
  std::vector<std::pair<int, int>> vframe;
  std::map<std::pair<std::pair<int, int>, std::pair<std::vector<int>, std::vector<int>>>, int>
      vf_idx;
  auto add_functor = [&](int src, int tgt, const fin_functor& f) -> int {
    const auto key = std::make_pair(std::make_pair(src, tgt), std::make_pair(f.obj_map, f.arr_map));
    if (auto it = vf_idx.find(key); it != vf_idx.end()) return it->second;
    if (static_cast<int>(mm.vert_functor.size()) >= opt.vert_bound)
      fail(errc::closure_exceeded,
           d.name + ": functor carrier exceeds bound " + std::to_string(opt.vert_bound));
    const int id = static_cast<int>(mm.vert_functor.size());
    vf_idx[key] = id;
    mm.vert_functor.push_back(f);
    vframe.push_back({src, tgt});
    return id;
  };
  d.vcat.name = "V" + d.name;
  for (int i = 0; i < nc; ++i) {
    d.vcat.objects.push_back(seed.cats[i].name);
    d.vcat.identity.push_back(add_functor(i, i, identity_functor(seed.cats[i])));
  }
  for (const auto& vf : seed.functors) {
    if (vf.src < 0 || vf.src >= nc || vf.tgt < 0 || vf.tgt >= nc)
      fail(errc::malformed_table, d.name + ": functor " + vf.f.name + " has unseeded endpoints");
    if (!check_functor_laws(seed.cats[vf.src], seed.cats[vf.tgt], vf.f).ok())
      fail(errc::malformed_table, d.name + ": seed " + vf.f.name + " is not a functor");
    add_functor(vf.src, vf.tgt, vf.f);
  }
  for (bool grew = true; grew;) {
    grew = false;
    const int n = static_cast<int>(mm.vert_functor.size());
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        if (vframe[i].second != vframe[j].first) continue;
        const int before = static_cast<int>(mm.vert_functor.size());
        add_functor(vframe[i].first, vframe[j].second,
                    compose_functors(mm.vert_functor[i], mm.vert_functor[j]));
        if (static_cast<int>(mm.vert_functor.size()) > before) grew = true;
      }
  }
  const int nv = static_cast<int>(mm.vert_functor.size());
  for (int v = 0; v < nv; ++v)
    d.vcat.arrows.push_back({vframe[v].first, vframe[v].second, mm.vert_functor[v].name});
  d.vcat.comp_table.assign(static_cast<size_t>(nv) * nv, -1);
  for (int i = 0; i < nv; ++i)
    for (int j = 0; j < nv; ++j) {
      if (vframe[i].second != vframe[j].first) continue;
      const fin_functor comp = compose_functors(mm.vert_functor[i], mm.vert_functor[j]);
      d.vcat.comp_table[static_cast<size_t>(i) * nv + j] = vf_idx.at(
          {{vframe[i].first, vframe[j].second}, {comp.obj_map, comp.arr_map}});
    }

  // horizontal carrier: hom profunctors and seeds, closed for closure_depth passes
  std::map<std::string, int> hp_idx;
  auto add_prof = [&](int src, int tgt, const fin_profunctor& p) -> int {
    const std::string key =
        std::to_string(src) + "|" + std::to_string(tgt) + "|" + p.intern_key();
    if (auto it = hp_idx.find(key); it != hp_idx.end()) return it->second;
    if (d.n_hors() >= opt.hor_bound)
      fail(errc::closure_exceeded,
           d.name + ": profunctor carrier exceeds bound " + std::to_string(opt.hor_bound));
    const int id = d.n_hors();
    hp_idx[key] = id;
    d.hors.push_back({src, tgt, p.name});
    mm.hor_prof.push_back(p);
    return id;
  };
  d.horid.assign(nc, -1);
  for (int i = 0; i < nc; ++i) d.horid[i] = add_prof(i, i, hom_profunctor(seed.cats[i]));
  for (const auto& hp : seed.profs) {
    if (hp.src < 0 || hp.src >= nc || hp.tgt < 0 || hp.tgt >= nc)
      fail(errc::middle_mismatch, d.name + ": profunctor " + hp.p.name + " has unseeded endpoints");
    if (hp.p.n_src() != seed.cats[hp.src].n_objects() ||
        hp.p.n_tgt() != seed.cats[hp.tgt].n_objects())
      fail(errc::middle_mismatch,
           d.name + ": profunctor " + hp.p.name + " does not fit its declared categories");
    if (!check_profunctor_laws(seed.cats[hp.src], seed.cats[hp.tgt], hp.p).ok())
      fail(errc::malformed_table, d.name + ": seed " + hp.p.name + " is not a profunctor");
    add_prof(hp.src, hp.tgt, hp.p);
  }
  std::map<std::pair<int, int>, prof_composite> comp_cache;
  auto composite = [&](int s, int t) -> const prof_composite& {
    auto it = comp_cache.find({s, t});
    if (it == comp_cache.end())
      it = comp_cache
               .emplace(std::make_pair(s, t),
                        prof_compose(seed.cats[d.hors[s].src], seed.cats[d.hors[s].tgt],
                                     seed.cats[d.hors[t].tgt], mm.hor_prof[s], mm.hor_prof[t]))
               .first;
    return it->second;
  };
  for (int pass = 0; pass < opt.closure_depth; ++pass) {
    const int n = d.n_hors();
    for (int s = 0; s < n; ++s)
      for (int t = 0; t < n; ++t)
        if (d.hcomposable(s, t)) add_prof(d.hors[s].src, d.hors[t].tgt, composite(s, t).prof);
  }
  const int nh = d.n_hors();
  d.hcomp_table.assign(static_cast<size_t>(nh) * nh, -1);
  for (int s = 0; s < nh; ++s)
    for (int t = 0; t < nh; ++t) {
      if (!d.hcomposable(s, t)) continue;
      const fin_profunctor& p = composite(s, t).prof;
      const std::string key = std::to_string(d.hors[s].src) + "|" +
                              std::to_string(d.hors[t].tgt) + "|" + p.intern_key();
      if (auto it = hp_idx.find(key); it != hp_idx.end()) d.hcomp_ref(s, t) = it->second;
    }

  // squares: natural families, validated on insertion
  std::map<std::pair<std::array<int, 4>, std::vector<int>>, int> sq_idx;
  auto fam_natural = [&](int v1, int v2, int h1, int h2, const prof_family& fam) {
    const fin_profunctor& p = mm.hor_prof[h1];
    const fin_profunctor& q = mm.hor_prof[h2];
    const fin_functor& f = mm.vert_functor[v1];
    const fin_functor& g = mm.vert_functor[v2];
    const fin_cat& sc = seed.cats[d.hors[h1].src];
    const fin_cat& tc = seed.cats[d.hors[h1].tgt];
    if (static_cast<int>(fam.size()) != p.n_tgt()) return false;
    for (int dd = 0; dd < p.n_tgt(); ++dd) {
      if (static_cast<int>(fam[dd].size()) != p.n_src()) return false;
      for (int cc = 0; cc < p.n_src(); ++cc) {
        if (static_cast<int>(fam[dd][cc].size()) != p.count[dd][cc]) return false;
        for (int e : fam[dd][cc])
          if (e < 0 || e >= q.count[g.obj_map[dd]][f.obj_map[cc]]) return false;
      }
    }
    for (int ar = 0; ar < sc.n_arrows(); ++ar) {
      const int cc = sc.arrows[ar].src;
      const int c2 = sc.arrows[ar].tgt;
      for (int dd = 0; dd < p.n_tgt(); ++dd)
        for (int e = 0; e < p.count[dd][cc]; ++e)
          if (fam[dd][c2][p.right[ar][dd][e]] !=
              q.right[f.arr_map[ar]][g.obj_map[dd]][fam[dd][cc][e]])
            return false;
    }
    for (int ar = 0; ar < tc.n_arrows(); ++ar) {
      const int d1 = tc.arrows[ar].src;
      const int d2 = tc.arrows[ar].tgt;
      for (int cc = 0; cc < p.n_src(); ++cc)
        for (int e = 0; e < p.count[d2][cc]; ++e)
          if (fam[d1][cc][p.left[ar][cc][e]] !=
              q.left[g.arr_map[ar]][f.obj_map[cc]][fam[d2][cc][e]])
            return false;
    }
    return true;
  };
  auto find_square = [&](int v1, int v2, int h1, int h2, const prof_family& fam) {
    auto it = sq_idx.find({{v1, v2, h1, h2}, flatten_family(fam)});
    return it == sq_idx.end() ? -1 : it->second;
  };
  auto add_square = [&](int v1, int v2, int h1, int h2, const prof_family& fam) -> int {
    const int have = find_square(v1, v2, h1, h2, fam);
    if (have >= 0) return have;
    if (!fam_natural(v1, v2, h1, h2, fam))
      fail(errc::internal, d.name + ": constructed family is not natural");
    const int id = d.n_squares();
    sq_idx[{{v1, v2, h1, h2}, flatten_family(fam)}] = id;
    d.squares.push_back({v1, v2, h1, h2, "th" + std::to_string(id)});
    mm.square_family.push_back(fam);
    return id;
  };
  auto identity_family = [&](int h) {
    const fin_profunctor& p = mm.hor_prof[h];
    prof_family fam(p.n_tgt(), std::vector<std::vector<int>>(p.n_src()));
    for (int dd = 0; dd < p.n_tgt(); ++dd)
      for (int cc = 0; cc < p.n_src(); ++cc) {
        fam[dd][cc].resize(p.count[dd][cc]);
        for (int e = 0; e < p.count[dd][cc]; ++e) fam[dd][cc][e] = e;
      }
    return fam;
  };
  auto inverse_family = [&](int h2, const prof_family& fam) -> std::optional<prof_family> {
    const fin_profunctor& q = mm.hor_prof[h2];
    prof_family inv(fam.size());
    for (size_t dd = 0; dd < fam.size(); ++dd) {
      inv[dd].resize(fam[dd].size());
      for (size_t cc = 0; cc < fam[dd].size(); ++cc) {
        const int n = q.count[dd][cc];
        if (static_cast<int>(fam[dd][cc].size()) != n) return std::nullopt;
        inv[dd][cc].assign(n, -1);
        for (int e = 0; e < n; ++e) {
          if (inv[dd][cc][fam[dd][cc][e]] >= 0) return std::nullopt;
          inv[dd][cc][fam[dd][cc][e]] = e;
        }
      }
    }
    return inv;
  };

  d.sqvid.assign(nh, -1);
  for (int h = 0; h < nh; ++h) d.sqvid[h] = add_square(d.vcat.identity[d.hors[h].src],
                                                       d.vcat.identity[d.hors[h].tgt], h, h,
                                                       identity_family(h));
  d.sqhid.assign(nv, -1);
  for (int v = 0; v < nv; ++v) {
    const fin_cat& sc = seed.cats[vframe[v].first];
    const fin_cat& tc = seed.cats[vframe[v].second];
    const fin_functor& f = mm.vert_functor[v];
    prof_family fam(sc.n_objects(), std::vector<std::vector<int>>(sc.n_objects()));
    for (int dd = 0; dd < sc.n_objects(); ++dd)
      for (int cc = 0; cc < sc.n_objects(); ++cc)
        fam[dd][cc].resize(sc.hom(dd, cc).size());
    for (int ar = 0; ar < sc.n_arrows(); ++ar)
      fam[sc.arrows[ar].src][sc.arrows[ar].tgt][hom_prof_elem(sc, ar)] =
          hom_prof_elem(tc, f.arr_map[ar]);
    d.sqhid[v] = add_square(v, v, d.horid[vframe[v].first], d.horid[vframe[v].second], fam);
  }
  if (d.n_squares() > opt.square_bound)
    fail(errc::closure_exceeded,
         d.name + ": identity cells alone exceed square bound " + std::to_string(opt.square_bound));

  d.lunitor.assign(nh, -1);
  d.runitor.assign(nh, -1);
  for (int h = 0; h < nh; ++h) {
    if (d.n_squares() + 4 > opt.square_bound) break;
    const int si = d.hors[h].src;
    const int ti = d.hors[h].tgt;
    const fin_profunctor& p = mm.hor_prof[h];
    const int idv = d.vcat.identity[si];
    const int idw = d.vcat.identity[ti];
    if (const int lcomp = d.hcomp(d.horid[si], h); lcomp >= 0) {
      const prof_composite& pc = composite(d.horid[si], h);
      prof_family fam(p.n_tgt(), std::vector<std::vector<int>>(p.n_src()));
      for (int dd = 0; dd < p.n_tgt(); ++dd)
        for (int cc = 0; cc < p.n_src(); ++cc) {
          fam[dd][cc].resize(pc.prof.count[dd][cc]);
          for (int cls = 0; cls < pc.prof.count[dd][cc]; ++cls) {
            const auto rep = class_rep(pc, dd, cc, cls);  // (mid, p-elem, hom-elem)
            const int ar = hom_prof_arrow(seed.cats[si], rep[0], cc, rep[2]);
            fam[dd][cc][cls] = p.right[ar][dd][rep[1]];
          }
        }
      d.lunitor[h] = add_square(idv, idw, lcomp, h, fam);
      if (auto inv = inverse_family(lcomp, fam)) add_square(idv, idw, h, lcomp, *inv);
    }
    if (const int rcomp = d.hcomp(h, d.horid[ti]); rcomp >= 0) {
      const prof_composite& pc = composite(h, d.horid[ti]);
      prof_family fam(p.n_tgt(), std::vector<std::vector<int>>(p.n_src()));
      for (int dd = 0; dd < p.n_tgt(); ++dd)
        for (int cc = 0; cc < p.n_src(); ++cc) {
          fam[dd][cc].resize(pc.prof.count[dd][cc]);
          for (int cls = 0; cls < pc.prof.count[dd][cc]; ++cls) {
            const auto rep = class_rep(pc, dd, cc, cls);  // (mid, hom-elem, p-elem)
            const int ar = hom_prof_arrow(seed.cats[ti], dd, rep[0], rep[1]);
            fam[dd][cc][cls] = p.left[ar][cc][rep[2]];
          }
        }
      d.runitor[h] = add_square(idv, idw, rcomp, h, fam);
      if (auto inv = inverse_family(rcomp, fam)) add_square(idv, idw, h, rcomp, *inv);
    }
  }

  for (int h1 = 0; h1 < nh; ++h1)
    for (int h2 = 0; h2 < nh; ++h2) {
      if (!d.hcomposable(h1, h2)) continue;
      const int c12 = d.hcomp(h1, h2);
      if (c12 < 0) continue;
      for (int h3 = 0; h3 < nh; ++h3) {
        if (!d.hcomposable(h2, h3)) continue;
        const int c23 = d.hcomp(h2, h3);
        const int lsrc = d.hcomp(h1, c23);
        const int ltgt = d.hcomp(c12, h3);
        if (c23 < 0 || lsrc < 0 || ltgt < 0) continue;
        if (d.n_squares() + 2 > opt.square_bound) continue;
        const prof_composite& right = composite(h2, h3);
        const prof_composite& whole_r = composite(h1, c23);
        const prof_composite& left = composite(h1, h2);
        const prof_composite& whole_l = composite(c12, h3);
        const fin_profunctor& src_p = whole_r.prof;
        prof_family fam(src_p.n_tgt(), std::vector<std::vector<int>>(src_p.n_src()));
        for (int dd = 0; dd < src_p.n_tgt(); ++dd)
          for (int cc = 0; cc < src_p.n_src(); ++cc) {
            fam[dd][cc].resize(src_p.count[dd][cc]);
            for (int cls = 0; cls < src_p.count[dd][cc]; ++cls) {
              const auto rep = class_rep(whole_r, dd, cc, cls);  // (mid j, qr-class, p-elem)
              const auto rep2 = class_rep(right, dd, rep[0], rep[1]);  // (mid k, r-elem, q-elem)
              const int pq = left.class_of_pair(rep2[0], cc, rep[0], rep2[2], rep[2]);
              fam[dd][cc][cls] = whole_l.class_of_pair(dd, cc, rep2[0], rep2[1], pq);
            }
          }
        const int idv = d.vcat.identity[d.hors[h1].src];
        const int idw = d.vcat.identity[d.hors[h3].tgt];
        d.associator[{h1, h2, h3}] = add_square(idv, idw, lsrc, ltgt, fam);
        if (auto inv = inverse_family(ltgt, fam)) add_square(idv, idw, ltgt, lsrc, *inv);
      }
    }

  auto stack_family = [&](int i, int j) {
    const auto& a = d.squares[i];
    const fin_functor& f1 = mm.vert_functor[a.v1];
    const fin_functor& g1 = mm.vert_functor[a.v2];
    const prof_family& fa = mm.square_family[i];
    const prof_family& fb = mm.square_family[j];
    prof_family fam(fa.size());
    for (size_t dd = 0; dd < fa.size(); ++dd) {
      fam[dd].resize(fa[dd].size());
      for (size_t cc = 0; cc < fa[dd].size(); ++cc) {
        fam[dd][cc].resize(fa[dd][cc].size());
        for (size_t e = 0; e < fa[dd][cc].size(); ++e)
          fam[dd][cc][e] = fb[g1.obj_map[dd]][f1.obj_map[cc]][fa[dd][cc][e]];
      }
    }
    return fam;
  };
  auto paste_family = [&](int i, int j) {
    const auto& a = d.squares[i];
    const auto& b = d.squares[j];
    const prof_composite& tc = composite(a.h1, b.h1);
    const prof_composite& bc = composite(a.h2, b.h2);
    const fin_functor& f1 = mm.vert_functor[a.v1];
    const fin_functor& fmid = mm.vert_functor[a.v2];
    const fin_functor& g2 = mm.vert_functor[b.v2];
    const fin_profunctor& tp = tc.prof;
    prof_family fam(tp.n_tgt(), std::vector<std::vector<int>>(tp.n_src()));
    for (int dd = 0; dd < tp.n_tgt(); ++dd)
      for (int cc = 0; cc < tp.n_src(); ++cc) {
        fam[dd][cc].resize(tp.count[dd][cc]);
        for (int cls = 0; cls < tp.count[dd][cc]; ++cls) {
          const auto rep = class_rep(tc, dd, cc, cls);  // (mid, right-elem, left-elem)
          fam[dd][cc][cls] =
              bc.class_of_pair(g2.obj_map[dd], f1.obj_map[cc], fmid.obj_map[rep[0]],
                               mm.square_family[j][dd][rep[0]][rep[1]],
                               mm.square_family[i][rep[0]][cc][rep[2]]);
        }
      }
    return fam;
  };

  {
    bool grew = true;
    while (grew && d.n_squares() < opt.square_bound) {
      grew = false;
      const int n = d.n_squares();
      for (int i = 0; i < n && d.n_squares() < opt.square_bound; ++i)
        for (int j = 0; j < n && d.n_squares() < opt.square_bound; ++j) {
          const auto a = d.squares[i];
          const auto b = d.squares[j];
          if (d.vstackable(i, j)) {
            const prof_family fam = stack_family(i, j);
            const int v1 = d.vcat.comp(a.v1, b.v1);
            const int v2 = d.vcat.comp(a.v2, b.v2);
            if (find_square(v1, v2, a.h1, b.h2, fam) < 0) {
              add_square(v1, v2, a.h1, b.h2, fam);
              grew = true;
            }
          }
          if (d.hpastable(i, j)) {
            const int top = d.hcomp(a.h1, b.h1);
            const int bot = d.hcomp(a.h2, b.h2);
            if (top >= 0 && bot >= 0) {
              const prof_family fam = paste_family(i, j);
              if (find_square(a.v1, b.v2, top, bot, fam) < 0) {
                add_square(a.v1, b.v2, top, bot, fam);
                grew = true;
              }
            }
          }
        }
    }
  }

  const int ns = d.n_squares();
  d.vcomp_sq_table.assign(static_cast<size_t>(ns) * ns, -1);
  d.hcomp_sq_table.assign(static_cast<size_t>(ns) * ns, -1);
  for (int i = 0; i < ns; ++i)
    for (int j = 0; j < ns; ++j) {
      const auto& a = d.squares[i];
      const auto& b = d.squares[j];
      if (d.vstackable(i, j))
        d.sq_vcomp_ref(i, j) = find_square(d.vcat.comp(a.v1, b.v1), d.vcat.comp(a.v2, b.v2), a.h1,
                                           b.h2, stack_family(i, j));
      if (d.hpastable(i, j)) {
        const int top = d.hcomp(a.h1, b.h1);
        const int bot = d.hcomp(a.h2, b.h2);
        if (top >= 0 && bot >= 0)
          d.sq_hcomp_ref(i, j) = find_square(a.v1, b.v2, top, bot, paste_family(i, j));
      }
    }
  return mm;
}

}  // namespace dblkit
