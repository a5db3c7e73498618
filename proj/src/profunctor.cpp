#include "dblkit/profunctor.hpp"

#include <numeric>

#include "dblkit/error.hpp"

namespace dblkit {

std::string fin_profunctor::intern_key() const {
  std::string k = "P";
  auto put = [&k](int v) {
    k += std::to_string(v);
    k += ',';
  };
  put(n_tgt());
  put(n_src());
  for (const auto& row : count)
    for (int v : row) put(v);
  k += "|L";
  for (const auto& per_arrow : left)
    for (const auto& col : per_arrow) {
      for (int v : col) put(v);
      k += ';';
    }
  k += "|R";
  for (const auto& per_arrow : right)
    for (const auto& col : per_arrow) {
      for (int v : col) put(v);
      k += ';';
    }
  return k;
}

namespace {

void validate_shape(const fin_cat& src, const fin_cat& tgt, const fin_profunctor& p) {
  if (p.n_tgt() != tgt.n_objects())
    fail(errc::malformed_table, "profunctor '" + p.name + "': value table row count mismatch");
  for (const auto& row : p.count)
    if (static_cast<int>(row.size()) != src.n_objects())
      fail(errc::malformed_table, "profunctor '" + p.name + "': value table column count mismatch");
  if (static_cast<int>(p.left.size()) != tgt.n_arrows() ||
      static_cast<int>(p.right.size()) != src.n_arrows())
    fail(errc::malformed_table, "profunctor '" + p.name + "': action table arrow count mismatch");
  for (int g = 0; g < tgt.n_arrows(); ++g) {
    const int d1 = tgt.arrows[g].src, d2 = tgt.arrows[g].tgt;
    if (static_cast<int>(p.left[g].size()) != src.n_objects())
      fail(errc::malformed_table, "profunctor '" + p.name + "': left action shape");
    for (int c = 0; c < src.n_objects(); ++c) {
      if (static_cast<int>(p.left[g][c].size()) != p.count[d2][c])
        fail(errc::malformed_table, "profunctor '" + p.name + "': left action domain size");
      for (int v : p.left[g][c])
        if (v < 0 || v >= p.count[d1][c])
          fail(errc::malformed_table, "profunctor '" + p.name + "': left action out of range");
    }
  }
  for (int f = 0; f < src.n_arrows(); ++f) {
    const int c1 = src.arrows[f].src, c2 = src.arrows[f].tgt;
    if (static_cast<int>(p.right[f].size()) != tgt.n_objects())
      fail(errc::malformed_table, "profunctor '" + p.name + "': right action shape");
    for (int d = 0; d < tgt.n_objects(); ++d) {
      if (static_cast<int>(p.right[f][d].size()) != p.count[d][c1])
        fail(errc::malformed_table, "profunctor '" + p.name + "': right action domain size");
      for (int v : p.right[f][d])
        if (v < 0 || v >= p.count[d][c2])
          fail(errc::malformed_table, "profunctor '" + p.name + "': right action out of range");
    }
  }
}

}  // namespace

law_report check_profunctor_laws(const fin_cat& src, const fin_cat& tgt, const fin_profunctor& p) {
  validate_shape(src, tgt, p);
  law_report rep;
  rep.mode = check_mode::exhaustive;
  rep.artifact = "profunctor:" + (p.name.empty() ? std::string("?") : p.name);

  law_acc ids("identity-actions");
  for (int d = 0; d < tgt.n_objects(); ++d)
    for (int c = 0; c < src.n_objects(); ++c)
      for (int e = 0; e < p.count[d][c]; ++e) {
        ids.tally(p.left[tgt.identity[d]][c][e] == e, {0, d, c, e},
                  "left identity action at (" + tgt.objects[d] + ", " + src.objects[c] + ")");
        ids.tally(p.right[src.identity[c]][d][e] == e, {1, d, c, e},
                  "right identity action at (" + tgt.objects[d] + ", " + src.objects[c] + ")");
      }
  rep.laws.push_back(ids.take());

  law_acc lf("left-functoriality");
  for (int g1 = 0; g1 < tgt.n_arrows(); ++g1)
    for (int g2 = 0; g2 < tgt.n_arrows(); ++g2) {
      if (!tgt.composable(g1, g2)) continue;
      const int d2 = tgt.arrows[g2].tgt;
      for (int c = 0; c < src.n_objects(); ++c)
        for (int e = 0; e < p.count[d2][c]; ++e)
          lf.tally(p.left[tgt.comp(g1, g2)][c][e] == p.left[g1][c][p.left[g2][c][e]], {g1, g2, c, e},
                   "left action of " + tgt.arrows[g1].name + ";" + tgt.arrows[g2].name);
    }
  rep.laws.push_back(lf.take());

  law_acc rf("right-functoriality");
  for (int f1 = 0; f1 < src.n_arrows(); ++f1)
    for (int f2 = 0; f2 < src.n_arrows(); ++f2) {
      if (!src.composable(f1, f2)) continue;
      const int c0 = src.arrows[f1].src;
      for (int d = 0; d < tgt.n_objects(); ++d)
        for (int e = 0; e < p.count[d][c0]; ++e)
          rf.tally(p.right[src.comp(f1, f2)][d][e] == p.right[f2][d][p.right[f1][d][e]],
                   {f1, f2, d, e},
                   "right action of " + src.arrows[f1].name + ";" + src.arrows[f2].name);
    }
  rep.laws.push_back(rf.take());

  law_acc comm("action-commutation");
  for (int g = 0; g < tgt.n_arrows(); ++g)
    for (int f = 0; f < src.n_arrows(); ++f) {
      const int d2 = tgt.arrows[g].tgt, c1 = src.arrows[f].src;
      for (int e = 0; e < p.count[d2][c1]; ++e)
        comm.tally(p.right[f][tgt.arrows[g].src][p.left[g][c1][e]] ==
                       p.left[g][src.arrows[f].tgt][p.right[f][d2][e]],
                   {g, f, e}, "commutation of " + tgt.arrows[g].name + " and " + src.arrows[f].name);
    }
  rep.laws.push_back(comm.take());
  return rep;
}

fin_profunctor hom_profunctor(const fin_cat& c) {
  fin_profunctor p;
  p.name = "hom_" + c.name;
  const int n = c.n_objects();
  p.count.assign(n, std::vector<int>(n, 0));
  for (int d = 0; d < n; ++d)
    for (int cc = 0; cc < n; ++cc) p.count[d][cc] = static_cast<int>(c.hom(d, cc).size());
  p.left.resize(c.n_arrows());
  p.right.resize(c.n_arrows());
  for (int g = 0; g < c.n_arrows(); ++g) {
    const int d1 = c.arrows[g].src, d2 = c.arrows[g].tgt;
    p.left[g].resize(n);
    p.right[g].resize(n);
    for (int cc = 0; cc < n; ++cc)
      for (int a : c.hom(d2, cc)) p.left[g][cc].push_back(hom_prof_elem(c, c.comp(g, a)));
    for (int d = 0; d < n; ++d)
      for (int a : c.hom(d, d1)) p.right[g][d].push_back(hom_prof_elem(c, c.comp(a, g)));
  }
  return p;
}

int hom_prof_arrow(const fin_cat& c, int d, int cc, int e) { return c.hom(d, cc)[e]; }

int hom_prof_elem(const fin_cat& c, int arrow) {
  const auto h = c.hom(c.arrows[arrow].src, c.arrows[arrow].tgt);
  for (size_t i = 0; i < h.size(); ++i)
    if (h[i] == arrow) return static_cast<int>(i);
  fail(errc::internal, "hom_prof_elem: arrow not found in its own hom set");
}

fin_profunctor representable_profunctor(const fin_cat& c1, const fin_cat& c2, const fin_functor& f) {
  fin_profunctor p;
  p.name = "repr_" + f.name;
  const int nd = c2.n_objects(), nc = c1.n_objects();
  p.count.assign(nd, std::vector<int>(nc, 0));
  auto slot = [&](int y, int x) { return c2.hom(y, f.obj_map[x]); };
  auto elem_of = [&](int y, int x, int arrow) {
    const auto h = slot(y, x);
    for (size_t i = 0; i < h.size(); ++i)
      if (h[i] == arrow) return static_cast<int>(i);
    fail(errc::internal, "representable_profunctor: arrow missing from slot");
  };
  for (int y = 0; y < nd; ++y)
    for (int x = 0; x < nc; ++x) p.count[y][x] = static_cast<int>(slot(y, x).size());
  p.left.resize(c2.n_arrows());
  for (int g = 0; g < c2.n_arrows(); ++g) {
    const int y2 = c2.arrows[g].tgt;
    p.left[g].resize(nc);
    for (int x = 0; x < nc; ++x)
      for (int a : slot(y2, x)) p.left[g][x].push_back(elem_of(c2.arrows[g].src, x, c2.comp(g, a)));
  }
  p.right.resize(c1.n_arrows());
  for (int u = 0; u < c1.n_arrows(); ++u) {
    const int x1 = c1.arrows[u].src;
    p.right[u].resize(nd);
    for (int y = 0; y < nd; ++y)
      for (int a : slot(y, x1))
        p.right[u][y].push_back(elem_of(y, c1.arrows[u].tgt, c2.comp(a, f.arr_map[u])));
  }
  return p;
}

// --- composition ----------------------------------------------------------------

namespace {

struct union_find {
  std::vector<int> parent;
  explicit union_find(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (a > b) std::swap(a, b);  // keep the least index as root
    parent[b] = a;
  }
};

}  // namespace

int prof_composite::class_of_pair(int e, int c, int d, int q, int p) const {
  const auto& s = slots[e][c];
  // pairs are enumerated in (d, q, p) order; scan the block for middle d
  for (size_t i = 0; i < s.pairs.size(); ++i)
    if (s.pairs[i][0] == d && s.pairs[i][1] == q && s.pairs[i][2] == p)
      return s.class_of[i];
  fail(errc::internal, "prof_composite: pair outside enumeration");
}

prof_composite prof_compose(const fin_cat& cat_c, const fin_cat& cat_d, const fin_cat& cat_e,
                            const fin_profunctor& p, const fin_profunctor& q) {
  if (p.n_tgt() != cat_d.n_objects() || q.n_src() != cat_d.n_objects())
    fail(errc::middle_mismatch, "prof_compose: middle category mismatch between " + p.name +
                                    " and " + q.name);
  validate_shape(cat_c, cat_d, p);
  validate_shape(cat_d, cat_e, q);

  prof_composite out;
  out.prof.name = "(" + p.name + " . " + q.name + ")";
  const int ne = cat_e.n_objects(), nc = cat_c.n_objects(), nd = cat_d.n_objects();
  out.prof.count.assign(ne, std::vector<int>(nc, 0));
  out.slots.assign(ne, std::vector<prof_composite::slot>(nc));

  for (int e = 0; e < ne; ++e) {
    for (int c = 0; c < nc; ++c) {
      auto& s = out.slots[e][c];
      std::vector<int> base(nd + 1, 0);
      for (int d = 0; d < nd; ++d) {
        base[d + 1] = base[d] + q.count[e][d] * p.count[d][c];
        for (int qq = 0; qq < q.count[e][d]; ++qq)
          for (int pp = 0; pp < p.count[d][c]; ++pp) s.pairs.push_back({d, qq, pp});
      }
      union_find uf(static_cast<int>(s.pairs.size()));
      for (int f = 0; f < cat_d.n_arrows(); ++f) {
        if (cat_d.is_identity(f)) continue;
        const int d = cat_d.arrows[f].src, d2 = cat_d.arrows[f].tgt;
        for (int qq = 0; qq < q.count[e][d]; ++qq) {
          const int qf = q.right[f][e][qq];  // q.f in Q(e, d2)
          for (int pp = 0; pp < p.count[d2][c]; ++pp) {
            const int fp = p.left[f][c][pp];  // f.p in P(d, c)
            uf.unite(base[d2] + qf * p.count[d2][c] + pp, base[d] + qq * p.count[d][c] + fp);
          }
        }
      }
      // classes in order of least representative
      s.class_of.assign(s.pairs.size(), -1);
      int next = 0;
      for (size_t i = 0; i < s.pairs.size(); ++i) {
        const int root = uf.find(static_cast<int>(i));
        if (s.class_of[root] < 0) s.class_of[root] = next++;
        s.class_of[i] = s.class_of[root];
      }
      out.prof.count[e][c] = next;
    }
  }

  // representative pair of each class, for transporting actions
  auto rep_of = [&](int e, int c, int cls) -> std::array<int, 3> {
    const auto& s = out.slots[e][c];
    for (size_t i = 0; i < s.pairs.size(); ++i)
      if (s.class_of[i] == cls) return s.pairs[i];
    fail(errc::internal, "prof_compose: class without representative");
  };

  out.prof.left.resize(cat_e.n_arrows());
  for (int h = 0; h < cat_e.n_arrows(); ++h) {
    const int e2 = cat_e.arrows[h].tgt, e1 = cat_e.arrows[h].src;
    out.prof.left[h].resize(nc);
    for (int c = 0; c < nc; ++c) {
      out.prof.left[h][c].resize(out.prof.count[e2][c]);
      for (int cls = 0; cls < out.prof.count[e2][c]; ++cls) {
        const auto [d, qq, pp] = rep_of(e2, c, cls);
        out.prof.left[h][c][cls] = out.class_of_pair(e1, c, d, q.left[h][d][qq], pp);
      }
    }
  }
  out.prof.right.resize(cat_c.n_arrows());
  for (int f = 0; f < cat_c.n_arrows(); ++f) {
    const int c1 = cat_c.arrows[f].src, c2 = cat_c.arrows[f].tgt;
    out.prof.right[f].resize(ne);
    for (int e = 0; e < ne; ++e) {
      out.prof.right[f][e].resize(out.prof.count[e][c1]);
      for (int cls = 0; cls < out.prof.count[e][c1]; ++cls) {
        const auto [d, qq, pp] = rep_of(e, c1, cls);
        out.prof.right[f][e][cls] = out.class_of_pair(e, c2, d, qq, p.right[f][d][pp]);
      }
    }
  }
  return out;
}

bool is_prof_iso(const fin_cat& src, const fin_cat& tgt, const fin_profunctor& a,
                 const fin_profunctor& b, const std::vector<std::vector<std::vector<int>>>& family) {
  const int nd = tgt.n_objects(), nc = src.n_objects();
  if (static_cast<int>(family.size()) != nd) return false;
  for (int d = 0; d < nd; ++d) {
    if (static_cast<int>(family[d].size()) != nc) return false;
    for (int c = 0; c < nc; ++c) {
      if (static_cast<int>(family[d][c].size()) != a.count[d][c]) return false;
      if (a.count[d][c] != b.count[d][c]) return false;
      std::vector<bool> hit(b.count[d][c], false);
      for (int v : family[d][c]) {
        if (v < 0 || v >= b.count[d][c] || hit[v]) return false;
        hit[v] = true;
      }
    }
  }
  for (int g = 0; g < tgt.n_arrows(); ++g) {
    const int d1 = tgt.arrows[g].src, d2 = tgt.arrows[g].tgt;
    for (int c = 0; c < nc; ++c)
      for (int e = 0; e < a.count[d2][c]; ++e)
        if (family[d1][c][a.left[g][c][e]] != b.left[g][c][family[d2][c][e]]) return false;
  }
  for (int f = 0; f < src.n_arrows(); ++f) {
    const int c1 = src.arrows[f].src, c2 = src.arrows[f].tgt;
    for (int d = 0; d < nd; ++d)
      for (int e = 0; e < a.count[d][c1]; ++e)
        if (family[d][c2][a.right[f][d][e]] != b.right[f][d][family[d][c1][e]]) return false;
  }
  return true;
}

}  // namespace dblkit
