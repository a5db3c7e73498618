#include "dblkit/double_cat.hpp"

#include <algorithm>

#include "dblkit/error.hpp"

namespace dblkit {

namespace {

void validate_double_ids(const pseudo_double_cat& d) {
  const int n0 = d.n_objects(), nv = d.n_vert(), nh = d.n_hors(), ns = d.n_squares();
  auto bad = [&](const std::string& what) {
    fail(errc::malformed_table, d.name + ": " + what);
  };
  if (static_cast<int>(d.horid.size()) != n0) bad("horid table size mismatch");
  if (static_cast<int>(d.sqvid.size()) != nh || static_cast<int>(d.lunitor.size()) != nh ||
      static_cast<int>(d.runitor.size()) != nh)
    bad("per-horizontal table size mismatch");
  if (static_cast<int>(d.sqhid.size()) != nv) bad("sqhid table size mismatch");
  if (d.hcomp_table.size() != static_cast<size_t>(nh) * nh) bad("hcomp table size mismatch");
  if (d.vcomp_sq_table.size() != static_cast<size_t>(ns) * ns ||
      d.hcomp_sq_table.size() != static_cast<size_t>(ns) * ns)
    bad("square composition table size mismatch");
  for (const auto& h : d.hors)
    if (h.src < 0 || h.src >= n0 || h.tgt < 0 || h.tgt >= n0)
      bad("horizontal endpoint out of range");
  for (const auto& q : d.squares)
    if (q.v1 < 0 || q.v1 >= nv || q.v2 < 0 || q.v2 >= nv || q.h1 < 0 || q.h1 >= nh || q.h2 < 0 ||
        q.h2 >= nh)
      bad("square side out of range");
  for (int v : d.horid)
    if (v < 0 || v >= nh) bad("horid references unknown horizontal morphism");
  for (int v : d.sqvid)
    if (v < 0 || v >= ns) bad("sqvid references unknown square");
  for (int v : d.sqhid)
    if (v < 0 || v >= ns) bad("sqhid references unknown square");
  for (int v : d.lunitor)
    if (v < -1 || v >= ns) bad("lunitor references unknown square");
  for (int v : d.runitor)
    if (v < -1 || v >= ns) bad("runitor references unknown square");
  for (int v : d.hcomp_table)
    if (v < -1 || v >= nh) bad("hcomp references unknown horizontal morphism");
  for (int v : d.vcomp_sq_table)
    if (v < -1 || v >= ns) bad("square vcomp references unknown square");
  for (int v : d.hcomp_sq_table)
    if (v < -1 || v >= ns) bad("square hcomp references unknown square");
  for (const auto& [key, v] : d.associator) {
    for (int h : key)
      if (h < 0 || h >= nh) bad("associator key references unknown horizontal morphism");
    if (v < 0 || v >= ns) bad("associator references unknown square");
  }
}

// law instances evaluate to 1 (holds), 0 (violated) or -1 (meets an absent
// entry); exhaustive checking counts -1 as a violation, probe checking skips it
constexpr int eval_skip = -1;

int eval_eq(int lhs, int rhs) {
  if (lhs < 0 || rhs < 0) return eval_skip;
  return lhs == rhs ? 1 : 0;
}

bool typing_instance(const pseudo_double_cat& d, const std::vector<long long>& w, bool probe) {
  switch (w.empty() ? -1 : w[0]) {
    case 0: {
      const auto& h = d.hors[d.horid[w[1]]];
      return h.src == w[1] && h.tgt == w[1];
    }
    case 1: {
      const auto& q = d.squares[w[1]];
      const auto& a1 = d.vcat.arrows[q.v1];
      const auto& a2 = d.vcat.arrows[q.v2];
      return d.hors[q.h1].src == a1.src && d.hors[q.h1].tgt == a2.src &&
             d.hors[q.h2].src == a1.tgt && d.hors[q.h2].tgt == a2.tgt;
    }
    case 2: {
      const int h = static_cast<int>(w[1]);
      const auto& q = d.squares[d.sqvid[h]];
      return q.h1 == h && q.h2 == h && q.v1 == d.vcat.identity[d.hors[h].src] &&
             q.v2 == d.vcat.identity[d.hors[h].tgt];
    }
    case 3: {
      const int v = static_cast<int>(w[1]);
      const auto& q = d.squares[d.sqhid[v]];
      return q.v1 == v && q.v2 == v && q.h1 == d.horid[d.vcat.arrows[v].src] &&
             q.h2 == d.horid[d.vcat.arrows[v].tgt];
    }
    case 4: {
      const int h = static_cast<int>(w[1]), k = static_cast<int>(w[2]);
      const int r = d.hcomp(h, k);
      if (r < 0) return probe || !d.hcomposable(h, k);
      return d.hcomposable(h, k) && d.hors[r].src == d.hors[h].src &&
             d.hors[r].tgt == d.hors[k].tgt;
    }
    case 5: {
      const int s = static_cast<int>(w[1]), t = static_cast<int>(w[2]);
      const int r = d.sq_vcomp(s, t);
      if (r < 0) return probe || !d.vstackable(s, t);
      if (!d.vstackable(s, t)) return false;
      const auto& qs = d.squares[s];
      const auto& qt = d.squares[t];
      if (!d.vcat.composable(qs.v1, qt.v1) || !d.vcat.composable(qs.v2, qt.v2)) return false;
      const int cv1 = d.vcat.comp(qs.v1, qt.v1), cv2 = d.vcat.comp(qs.v2, qt.v2);
      if (cv1 < 0 || cv2 < 0) return probe;
      const auto& q = d.squares[r];
      return q.v1 == cv1 && q.v2 == cv2 && q.h1 == qs.h1 && q.h2 == qt.h2;
    }
    case 6: {
      const int s = static_cast<int>(w[1]), t = static_cast<int>(w[2]);
      const int r = d.sq_hcomp(s, t);
      if (r < 0) return probe || !d.hpastable(s, t);
      if (!d.hpastable(s, t)) return false;
      const auto& qs = d.squares[s];
      const auto& qt = d.squares[t];
      const int th = d.hcomposable(qs.h1, qt.h1) ? d.hcomp(qs.h1, qt.h1) : -1;
      const int bh = d.hcomposable(qs.h2, qt.h2) ? d.hcomp(qs.h2, qt.h2) : -1;
      if (th < 0 || bh < 0) return probe;
      const auto& q = d.squares[r];
      return q.v1 == qs.v1 && q.v2 == qt.v2 && q.h1 == th && q.h2 == bh;
    }
    case 7: {
      const int h = static_cast<int>(w[1]);
      const int l = d.lunitor[h];
      if (l < 0) return probe;
      const int x = d.hors[h].src, y = d.hors[h].tgt;
      const int top = d.hcomp(d.horid[x], h);
      if (top < 0) return probe;
      const auto& q = d.squares[l];
      return q.v1 == d.vcat.identity[x] && q.v2 == d.vcat.identity[y] && q.h1 == top && q.h2 == h;
    }
    case 8: {
      const int h = static_cast<int>(w[1]);
      const int l = d.runitor[h];
      if (l < 0) return probe;
      const int x = d.hors[h].src, y = d.hors[h].tgt;
      const int top = d.hcomp(h, d.horid[y]);
      if (top < 0) return probe;
      const auto& q = d.squares[l];
      return q.v1 == d.vcat.identity[x] && q.v2 == d.vcat.identity[y] && q.h1 == top && q.h2 == h;
    }
    case 9: {
      const int h1 = static_cast<int>(w[1]), h2 = static_cast<int>(w[2]),
                h3 = static_cast<int>(w[3]);
      const bool comp = d.hcomposable(h1, h2) && d.hcomposable(h2, h3);
      const auto it = d.associator.find({h1, h2, h3});
      if (it == d.associator.end()) return probe || !comp;
      if (!comp) return false;
      const int top = d.hcomp(h1, d.hcomp(h2, h3)), bot = d.hcomp(d.hcomp(h1, h2), h3);
      if (top < 0 || bot < 0) return probe;
      const auto& q = d.squares[it->second];
      return q.v1 == d.vcat.identity[d.hors[h1].src] &&
             q.v2 == d.vcat.identity[d.hors[h3].tgt] && q.h1 == top && q.h2 == bot;
    }
    default: return false;
  }
}

int vsq_chain(const pseudo_double_cat& d, std::initializer_list<int> ss) {
  int acc = -2;
  for (int s : ss) {
    if (s < 0) return -1;
    if (acc == -2) {
      acc = s;
      continue;
    }
    if (!d.vstackable(acc, s)) return -1;
    acc = d.sq_vcomp(acc, s);
    if (acc < 0) return -1;
  }
  return acc;
}

int sq_identity_instance(const pseudo_double_cat& d, int s) {
  const int l = d.sq_vcomp(d.sqvid[d.squares[s].h1], s);
  const int r = d.sq_vcomp(s, d.sqvid[d.squares[s].h2]);
  if (l < 0 || r < 0) return eval_skip;
  return l == s && r == s ? 1 : 0;
}

int hid_functorial_instance(const pseudo_double_cat& d, const std::vector<long long>& w) {
  if (w[0] == 0) {
    const int x = static_cast<int>(w[1]);
    return d.sqhid[d.vcat.identity[x]] == d.sqvid[d.horid[x]] ? 1 : 0;
  }
  const int v = static_cast<int>(w[1]), u = static_cast<int>(w[2]);
  const int vw = d.vcat.comp(v, u);
  return eval_eq(vw < 0 ? -1 : d.sqhid[vw], d.sq_vcomp(d.sqhid[v], d.sqhid[u]));
}

int hcomp_functorial_instance(const pseudo_double_cat& d, int h, int k) {
  const int hk = d.hcomp(h, k);
  return eval_eq(d.sq_hcomp(d.sqvid[h], d.sqvid[k]), hk < 0 ? -1 : d.sqvid[hk]);
}

int interchange_instance(const pseudo_double_cat& d, int t1, int t2, int u1, int u2) {
  return eval_eq(d.sq_hcomp(d.sq_vcomp(t1, t2), d.sq_vcomp(u1, u2)),
                 d.sq_vcomp(d.sq_hcomp(t1, u1), d.sq_hcomp(t2, u2)));
}

int lunitor_nat_instance(const pseudo_double_cat& d, int s) {
  const auto& q = d.squares[s];
  return eval_eq(d.sq_vcomp(d.lunitor[q.h1], s),
                 d.sq_vcomp(d.sq_hcomp(d.sqhid[q.v1], s), d.lunitor[q.h2]));
}

int runitor_nat_instance(const pseudo_double_cat& d, int s) {
  const auto& q = d.squares[s];
  return eval_eq(d.sq_vcomp(d.runitor[q.h1], s),
                 d.sq_vcomp(d.sq_hcomp(s, d.sqhid[q.v2]), d.runitor[q.h2]));
}

int assoc_nat_instance(const pseudo_double_cat& d, int s1, int s2, int s3) {
  const auto& q1 = d.squares[s1];
  const auto& q2 = d.squares[s2];
  const auto& q3 = d.squares[s3];
  return eval_eq(
      d.sq_vcomp(d.assoc(q1.h1, q2.h1, q3.h1), d.sq_hcomp(d.sq_hcomp(s1, s2), s3)),
      d.sq_vcomp(d.sq_hcomp(s1, d.sq_hcomp(s2, s3)), d.assoc(q1.h2, q2.h2, q3.h2)));
}

int invertibility_instance(const pseudo_double_cat& d, int s) {
  if (s < 0) return eval_skip;
  return vertical_inverse_square(d, s).has_value() ? 1 : 0;
}

int triangle_instance(const pseudo_double_cat& d, int h1, int h2) {
  const int y = d.hors[h1].tgt;
  return eval_eq(d.sq_vcomp(d.assoc(h1, d.horid[y], h2), d.sq_hcomp(d.runitor[h1], d.sqvid[h2])),
                 d.sq_hcomp(d.sqvid[h1], d.lunitor[h2]));
}

int pentagon_instance(const pseudo_double_cat& d, int h1, int h2, int h3, int h4) {
  const int h12 = d.hcomp(h1, h2), h23 = d.hcomp(h2, h3), h34 = d.hcomp(h3, h4);
  return eval_eq(vsq_chain(d, {d.assoc(h1, h2, h34), d.assoc(h12, h3, h4)}),
                 vsq_chain(d, {d.sq_hcomp(d.sqvid[h1], d.assoc(h2, h3, h4)),
                               d.assoc(h1, h23, h4),
                               d.sq_hcomp(d.assoc(h1, h2, h3), d.sqvid[h4])}));
}

int strict_unitality_instance(const pseudo_double_cat& d, int h) {
  const int l = d.hcomp(d.horid[d.hors[h].src], h);
  const int r = d.hcomp(h, d.horid[d.hors[h].tgt]);
  if (l < 0 || r < 0) return eval_skip;
  return l == h && r == h ? 1 : 0;
}

int identity_square_instance(const pseudo_double_cat& d, int s) {
  if (s < 0) return eval_skip;
  const auto& q = d.squares[s];
  return q.h1 == q.h2 && s == d.sqvid[q.h1] ? 1 : 0;
}

int identity_coherence_instance(const pseudo_double_cat& d, const std::vector<long long>& w) {
  if (w[0] == 0) return identity_square_instance(d, d.lunitor[w[1]]);
  if (w[0] == 1) return identity_square_instance(d, d.runitor[w[1]]);
  return identity_square_instance(
      d, d.assoc(static_cast<int>(w[1]), static_cast<int>(w[2]), static_cast<int>(w[3])));
}

law_report check_double_impl(const pseudo_double_cat& d, bool strict_laws) {
  law_report vrep = check_category_laws(d.vcat);
  validate_double_ids(d);
  const bool probe = d.mode == check_mode::probe;
  law_report rep;
  rep.mode = d.mode;
  rep.artifact = "double:" + (d.name.empty() ? std::string("?") : d.name);
  for (auto& lr : vrep.laws) {
    lr.law = "vcat-" + lr.law;
    rep.laws.push_back(std::move(lr));
  }
  const int nh = d.n_hors(), ns = d.n_squares();

  auto note = [&](law_acc& acc, int state, std::vector<long long> w, const std::string& detail) {
    if (state == eval_skip) {
      if (!probe) acc.tally(false, std::move(w), detail + " meets an absent entry");
      return;
    }
    acc.tally(state == 1, std::move(w), detail);
  };

  law_acc typing("typing");
  auto note_typing = [&](std::vector<long long> w, const std::string& detail) {
    const bool ok = typing_instance(d, w, probe);
    typing.tally(ok, std::move(w), detail);
  };
  for (int x = 0; x < d.n_objects(); ++x)
    note_typing({0, x}, "horizontal identity at " + d.vcat.objects[x]);
  for (int s = 0; s < ns; ++s) note_typing({1, s}, "boundary of " + d.squares[s].name);
  for (int h = 0; h < nh; ++h) note_typing({2, h}, "identity square on " + d.hors[h].name);
  for (int v = 0; v < d.n_vert(); ++v)
    note_typing({3, v}, "identity square on " + d.vcat.arrows[v].name);
  for (int h = 0; h < nh; ++h)
    for (int k = 0; k < nh; ++k)
      note_typing({4, h, k}, "hcomp(" + d.hors[h].name + ", " + d.hors[k].name + ")");
  for (int s = 0; s < ns; ++s)
    for (int t = 0; t < ns; ++t) {
      note_typing({5, s, t}, "stack(" + d.squares[s].name + ", " + d.squares[t].name + ")");
      note_typing({6, s, t}, "paste(" + d.squares[s].name + ", " + d.squares[t].name + ")");
    }
  for (int h = 0; h < nh; ++h) {
    note_typing({7, h}, "lunitor at " + d.hors[h].name);
    note_typing({8, h}, "runitor at " + d.hors[h].name);
  }
  for (int h1 = 0; h1 < nh; ++h1)
    for (int h2 = 0; h2 < nh; ++h2)
      for (int h3 = 0; h3 < nh; ++h3)
        note_typing({9, h1, h2, h3}, "associator at (" + d.hors[h1].name + ", " +
                                         d.hors[h2].name + ", " + d.hors[h3].name + ")");
  rep.laws.push_back(typing.take());

  law_acc svid("square-vertical-identity");
  for (int s = 0; s < ns; ++s)
    note(svid, sq_identity_instance(d, s), {s}, "identities around " + d.squares[s].name);
  rep.laws.push_back(svid.take());

  law_acc svassoc("square-vertical-associativity");
  for (int s1 = 0; s1 < ns; ++s1)
    for (int s2 = 0; s2 < ns; ++s2) {
      if (!d.vstackable(s1, s2)) continue;
      for (int s3 = 0; s3 < ns; ++s3) {
        if (!d.vstackable(s2, s3)) continue;
        note(svassoc,
             eval_eq(d.sq_vcomp(d.sq_vcomp(s1, s2), s3), d.sq_vcomp(s1, d.sq_vcomp(s2, s3))),
             {s1, s2, s3},
             "(" + d.squares[s1].name + " ; " + d.squares[s2].name + " ; " + d.squares[s3].name +
                 ")");
      }
    }
  rep.laws.push_back(svassoc.take());

  law_acc hidf("horizontal-identity-functorial");
  for (int x = 0; x < d.n_objects(); ++x)
    note(hidf, hid_functorial_instance(d, {0, x}), {0, x},
         "identity square over " + d.vcat.objects[x]);
  for (int v = 0; v < d.n_vert(); ++v)
    for (int u = 0; u < d.n_vert(); ++u) {
      if (!d.vcat.composable(v, u)) continue;
      note(hidf, hid_functorial_instance(d, {1, v, u}), {1, v, u},
           "identity squares over (" + d.vcat.arrows[v].name + ", " + d.vcat.arrows[u].name +
               ")");
    }
  rep.laws.push_back(hidf.take());

  law_acc hcf("horizontal-composition-functorial");
  for (int h = 0; h < nh; ++h)
    for (int k = 0; k < nh; ++k) {
      if (!d.hcomposable(h, k)) continue;
      note(hcf, hcomp_functorial_instance(d, h, k), {h, k},
           "identity squares over (" + d.hors[h].name + ", " + d.hors[k].name + ")");
    }
  rep.laws.push_back(hcf.take());

  law_acc inter("interchange");
  for (int t1 = 0; t1 < ns; ++t1)
    for (int t2 = 0; t2 < ns; ++t2) {
      if (!d.vstackable(t1, t2)) continue;
      for (int u1 = 0; u1 < ns; ++u1) {
        if (!d.hpastable(t1, u1)) continue;
        for (int u2 = 0; u2 < ns; ++u2) {
          if (!d.hpastable(t2, u2) || !d.vstackable(u1, u2)) continue;
          note(inter, interchange_instance(d, t1, t2, u1, u2), {t1, t2, u1, u2},
               "interchange at (" + d.squares[t1].name + ", " + d.squares[t2].name + ", " +
                   d.squares[u1].name + ", " + d.squares[u2].name + ")");
        }
      }
    }
  rep.laws.push_back(inter.take());

  law_acc lnat("lunitor-naturality");
  law_acc rnat("runitor-naturality");
  for (int s = 0; s < ns; ++s) {
    note(lnat, lunitor_nat_instance(d, s), {s}, "lunitor square at " + d.squares[s].name);
    note(rnat, runitor_nat_instance(d, s), {s}, "runitor square at " + d.squares[s].name);
  }
  rep.laws.push_back(lnat.take());
  rep.laws.push_back(rnat.take());

  law_acc anat("associator-naturality");
  for (int s1 = 0; s1 < ns; ++s1)
    for (int s2 = 0; s2 < ns; ++s2) {
      if (!d.hpastable(s1, s2)) continue;
      for (int s3 = 0; s3 < ns; ++s3) {
        if (!d.hpastable(s2, s3)) continue;
        note(anat, assoc_nat_instance(d, s1, s2, s3), {s1, s2, s3},
             "associator square at (" + d.squares[s1].name + ", " + d.squares[s2].name + ", " +
                 d.squares[s3].name + ")");
      }
    }
  rep.laws.push_back(anat.take());

  law_acc linv("lunitor-invertibility");
  law_acc rinv("runitor-invertibility");
  for (int h = 0; h < nh; ++h) {
    note(linv, invertibility_instance(d, d.lunitor[h]), {h}, "lunitor at " + d.hors[h].name);
    note(rinv, invertibility_instance(d, d.runitor[h]), {h}, "runitor at " + d.hors[h].name);
  }
  rep.laws.push_back(linv.take());
  rep.laws.push_back(rinv.take());

  law_acc ainv("associator-invertibility");
  for (const auto& [key, v] : d.associator)
    note(ainv, invertibility_instance(d, v), {key[0], key[1], key[2]},
         "associator at (" + d.hors[key[0]].name + ", " + d.hors[key[1]].name + ", " +
             d.hors[key[2]].name + ")");
  rep.laws.push_back(ainv.take());

  law_acc tri("triangle");
  for (int h1 = 0; h1 < nh; ++h1)
    for (int h2 = 0; h2 < nh; ++h2) {
      if (!d.hcomposable(h1, h2)) continue;
      note(tri, triangle_instance(d, h1, h2), {h1, h2},
           "triangle at (" + d.hors[h1].name + ", " + d.hors[h2].name + ")");
    }
  rep.laws.push_back(tri.take());

  law_acc pent("pentagon");
  for (int h1 = 0; h1 < nh; ++h1)
    for (int h2 = 0; h2 < nh; ++h2) {
      if (!d.hcomposable(h1, h2)) continue;
      for (int h3 = 0; h3 < nh; ++h3) {
        if (!d.hcomposable(h2, h3)) continue;
        for (int h4 = 0; h4 < nh; ++h4) {
          if (!d.hcomposable(h3, h4)) continue;
          note(pent, pentagon_instance(d, h1, h2, h3, h4), {h1, h2, h3, h4},
               "pentagon at (" + d.hors[h1].name + ", " + d.hors[h2].name + ", " +
                   d.hors[h3].name + ", " + d.hors[h4].name + ")");
        }
      }
    }
  rep.laws.push_back(pent.take());

  if (!strict_laws) return rep;

  law_acc sunit("strict-unitality");
  for (int h = 0; h < nh; ++h)
    note(sunit, strict_unitality_instance(d, h), {h},
         "horizontal identities around " + d.hors[h].name);
  rep.laws.push_back(sunit.take());

  law_acc sassoc("strict-associativity");
  for (int h1 = 0; h1 < nh; ++h1)
    for (int h2 = 0; h2 < nh; ++h2) {
      if (!d.hcomposable(h1, h2)) continue;
      for (int h3 = 0; h3 < nh; ++h3) {
        if (!d.hcomposable(h2, h3)) continue;
        note(sassoc, eval_eq(d.hcomp(d.hcomp(h1, h2), h3), d.hcomp(h1, d.hcomp(h2, h3))),
             {h1, h2, h3},
             "(" + d.hors[h1].name + " ; " + d.hors[h2].name + " ; " + d.hors[h3].name + ")");
      }
    }
  rep.laws.push_back(sassoc.take());

  law_acc idcoh("identity-coherence");
  for (int h = 0; h < nh; ++h) {
    note(idcoh, identity_coherence_instance(d, {0, h}), {0, h},
         "lunitor at " + d.hors[h].name);
    note(idcoh, identity_coherence_instance(d, {1, h}), {1, h},
         "runitor at " + d.hors[h].name);
  }
  for (const auto& [key, v] : d.associator)
    note(idcoh, identity_coherence_instance(d, {2, key[0], key[1], key[2]}),
         {2, key[0], key[1], key[2]},
         "associator at (" + d.hors[key[0]].name + ", " + d.hors[key[1]].name + ", " +
             d.hors[key[2]].name + ")");
  rep.laws.push_back(idcoh.take());
  return rep;
}

}  // namespace

law_report check_double_laws(const pseudo_double_cat& d) { return check_double_impl(d, false); }

law_report check_strict_double_laws(const pseudo_double_cat& d) {
  return check_double_impl(d, true);
}

bool replay_double_law(const pseudo_double_cat& d, const law_result& r) {
  if (r.law.rfind("vcat-", 0) == 0) {
    law_result inner = r;
    inner.law = r.law.substr(5);
    return replay_category_law(d.vcat, inner);
  }
  const bool probe = d.mode == check_mode::probe;
  const auto& w = r.witness;
  auto as_int = [&](size_t i) { return static_cast<int>(w[i]); };
  auto refails = [&](int state) { return probe ? state == 0 : state != 1; };
  if (r.law == "typing") return !typing_instance(d, w, probe);
  if (r.law == "square-vertical-identity" && w.size() == 1)
    return refails(sq_identity_instance(d, as_int(0)));
  if (r.law == "square-vertical-associativity" && w.size() == 3)
    return refails(eval_eq(d.sq_vcomp(d.sq_vcomp(as_int(0), as_int(1)), as_int(2)),
                           d.sq_vcomp(as_int(0), d.sq_vcomp(as_int(1), as_int(2)))));
  if (r.law == "horizontal-identity-functorial" && (w.size() == 2 || w.size() == 3))
    return refails(hid_functorial_instance(d, w));
  if (r.law == "horizontal-composition-functorial" && w.size() == 2)
    return refails(hcomp_functorial_instance(d, as_int(0), as_int(1)));
  if (r.law == "interchange" && w.size() == 4)
    return refails(interchange_instance(d, as_int(0), as_int(1), as_int(2), as_int(3)));
  if (r.law == "lunitor-naturality" && w.size() == 1)
    return refails(lunitor_nat_instance(d, as_int(0)));
  if (r.law == "runitor-naturality" && w.size() == 1)
    return refails(runitor_nat_instance(d, as_int(0)));
  if (r.law == "associator-naturality" && w.size() == 3)
    return refails(assoc_nat_instance(d, as_int(0), as_int(1), as_int(2)));
  if (r.law == "lunitor-invertibility" && w.size() == 1)
    return refails(invertibility_instance(d, d.lunitor[as_int(0)]));
  if (r.law == "runitor-invertibility" && w.size() == 1)
    return refails(invertibility_instance(d, d.runitor[as_int(0)]));
  if (r.law == "associator-invertibility" && w.size() == 3)
    return refails(invertibility_instance(d, d.assoc(as_int(0), as_int(1), as_int(2))));
  if (r.law == "triangle" && w.size() == 2)
    return refails(triangle_instance(d, as_int(0), as_int(1)));
  if (r.law == "pentagon" && w.size() == 4)
    return refails(pentagon_instance(d, as_int(0), as_int(1), as_int(2), as_int(3)));
  if (r.law == "strict-unitality" && w.size() == 1)
    return refails(strict_unitality_instance(d, as_int(0)));
  if (r.law == "strict-associativity" && w.size() == 3)
    return refails(eval_eq(d.hcomp(d.hcomp(as_int(0), as_int(1)), as_int(2)),
                           d.hcomp(as_int(0), d.hcomp(as_int(1), as_int(2)))));
  if (r.law == "identity-coherence" && (w.size() == 2 || w.size() == 4))
    return refails(identity_coherence_instance(d, w));
  return false;
}

std::optional<int> vertical_inverse_square(const pseudo_double_cat& d, int s) {
  if (s < 0) return std::nullopt;
  const auto& q = d.squares[s];
  for (int t = 0; t < d.n_squares(); ++t) {
    const auto& p = d.squares[t];
    if (p.h1 != q.h2 || p.h2 != q.h1) continue;
    if (d.sq_vcomp(s, t) == d.sqvid[q.h1] && d.sq_vcomp(t, s) == d.sqvid[q.h2]) return t;
  }
  return std::nullopt;
}

bool is_strict(const pseudo_double_cat& d) {
  for (int h = 0; h < d.n_hors(); ++h) {
    if (d.lunitor[h] >= 0 && identity_square_instance(d, d.lunitor[h]) != 1) return false;
    if (d.runitor[h] >= 0 && identity_square_instance(d, d.runitor[h]) != 1) return false;
  }
  for (const auto& [key, v] : d.associator)
    if (identity_square_instance(d, v) != 1) return false;
  return true;
}

const char* set_level_name(set_level_kind k) {
  switch (k) {
    case set_level_kind::strict_double_setcat: return "strict double setcategory";
    case set_level_kind::pseudo_double_setcat: return "pseudo double setcategory";
    default: return "not demonstrated";
  }
}

set_level_kind set_level(const pseudo_double_cat& d) {
  if (d.mode == check_mode::probe) return set_level_kind::not_demonstrated;
  if (!check_double_laws(d).ok()) return set_level_kind::not_demonstrated;
  return is_strict(d) ? set_level_kind::strict_double_setcat
                      : set_level_kind::pseudo_double_setcat;
}

dbl_hom_view horizontal_hom_category(const pseudo_double_cat& d, int x, int y) {
  dbl_hom_view v;
  v.cat.name = "hhom(" + d.vcat.objects[x] + ", " + d.vcat.objects[y] + ")";
  std::vector<int> local1(d.n_hors(), -1), local2(d.n_squares(), -1);
  for (int h = 0; h < d.n_hors(); ++h)
    if (d.hors[h].src == x && d.hors[h].tgt == y) {
      local1[h] = static_cast<int>(v.object_of.size());
      v.object_of.push_back(h);
      v.cat.objects.push_back(d.hors[h].name);
    }
  const int idx = d.vcat.identity[x], idy = d.vcat.identity[y];
  for (int s = 0; s < d.n_squares(); ++s) {
    const auto& q = d.squares[s];
    if (q.v1 != idx || q.v2 != idy || local1[q.h1] < 0 || local1[q.h2] < 0) continue;
    local2[s] = static_cast<int>(v.square_of.size());
    v.square_of.push_back(s);
    v.cat.arrows.push_back({local1[q.h1], local1[q.h2], q.name});
  }
  v.cat.identity.resize(v.object_of.size());
  for (size_t i = 0; i < v.object_of.size(); ++i)
    v.cat.identity[i] = local2[d.sqvid[v.object_of[i]]];
  const int na = static_cast<int>(v.square_of.size());
  v.cat.comp_table.assign(static_cast<size_t>(na) * na, -1);
  for (int a = 0; a < na; ++a)
    for (int c = 0; c < na; ++c)
      if (d.vstackable(v.square_of[a], v.square_of[c])) {
        const int r = d.sq_vcomp(v.square_of[a], v.square_of[c]);
        v.cat.comp_ref(a, c) = r < 0 ? -1 : local2[r];
      }
  return v;
}

namespace {

// a, b squares with horizontal identity sides and a.v2 = b.v1; pastes them and
// carries the result back across hcomp(horid, horid) = horid along the left
// unitor, giving another square with horizontal identity sides
int transported_paste(const pseudo_double_cat& d, int a, int b) {
  const int x = d.vcat.arrows[d.squares[a].v1].src;
  const int y = d.vcat.arrows[d.squares[a].v1].tgt;
  const int lx = d.lunitor[d.horid[x]], ly = d.lunitor[d.horid[y]];
  if (lx < 0 || ly < 0) return -1;
  const auto lxi = vertical_inverse_square(d, lx);
  if (!lxi) return -1;
  return vsq_chain(d, {*lxi, d.sq_hcomp(a, b), ly});
}

}  // namespace

dbl_hom_view vertical_hom_category(const pseudo_double_cat& d, int x, int y) {
  dbl_hom_view v;
  v.cat.name = "vhom(" + d.vcat.objects[x] + ", " + d.vcat.objects[y] + ")";
  std::vector<int> local1(d.n_vert(), -1), local2(d.n_squares(), -1);
  for (int a = 0; a < d.n_vert(); ++a)
    if (d.vcat.arrows[a].src == x && d.vcat.arrows[a].tgt == y) {
      local1[a] = static_cast<int>(v.object_of.size());
      v.object_of.push_back(a);
      v.cat.objects.push_back(d.vcat.arrows[a].name);
    }
  for (int s = 0; s < d.n_squares(); ++s) {
    const auto& q = d.squares[s];
    if (q.h1 != d.horid[x] || q.h2 != d.horid[y] || local1[q.v1] < 0 || local1[q.v2] < 0) continue;
    local2[s] = static_cast<int>(v.square_of.size());
    v.square_of.push_back(s);
    v.cat.arrows.push_back({local1[q.v1], local1[q.v2], q.name});
  }
  v.cat.identity.resize(v.object_of.size());
  for (size_t i = 0; i < v.object_of.size(); ++i)
    v.cat.identity[i] = local2[d.sqhid[v.object_of[i]]];
  const int na = static_cast<int>(v.square_of.size());
  v.cat.comp_table.assign(static_cast<size_t>(na) * na, -1);
  for (int a = 0; a < na; ++a)
    for (int c = 0; c < na; ++c) {
      if (d.squares[v.square_of[a]].v2 != d.squares[v.square_of[c]].v1) continue;
      const int r = transported_paste(d, v.square_of[a], v.square_of[c]);
      v.cat.comp_ref(a, c) = r < 0 ? -1 : local2[r];
    }
  return v;
}

fin_cat horizontal_category(const pseudo_double_cat& d) {
  fin_cat c;
  c.name = "hor(" + d.name + ")";
  c.objects = d.vcat.objects;
  for (const auto& h : d.hors) c.arrows.push_back({h.src, h.tgt, h.name});
  c.identity = d.horid;
  c.comp_table = d.hcomp_table;
  const law_report rep = check_category_laws(c);
  if (!rep.ok()) {
    std::string which;
    for (const auto& lr : rep.laws)
      if (!lr.passed) {
        which = lr.law;
        break;
      }
    fail(errc::not_strict,
         d.name + ": horizontal composition is not a category on the nose (fails " + which + ")");
  }
  return c;
}

univalence_verdict univalence_surrogate(const pseudo_double_cat& d) {
  if (d.mode == check_mode::probe)
    fail(errc::precondition_failed,
         d.name + ": univalence needs a materialized structure; gauntness of a probe fragment "
                  "is not decidable");
  univalence_verdict out;
  if (!is_gaunt(d.vcat)) {
    out.details = "vertical category is not gaunt";
    return out;
  }
  for (int x = 0; x < d.n_objects(); ++x)
    for (int y = 0; y < d.n_objects(); ++y)
      if (!is_gaunt(horizontal_hom_category(d, x, y).cat)) {
        out.details = "horizontal hom category at (" + d.vcat.objects[x] + ", " +
                      d.vcat.objects[y] + ") is not gaunt";
        return out;
      }
  out.univalent = true;
  if (!is_strict(d)) {
    out.details = "univalent; not symmetric: the structure is not strict";
    return out;
  }
  if (!d.hor_set_presented) {
    out.details =
        "univalent; not symmetric: horizontal morphisms are object-indexed, not set-presented";
    return out;
  }
  if (!is_gaunt(horizontal_category(d))) {
    out.details = "univalent; not symmetric: horizontal category is not gaunt";
    return out;
  }
  for (int x = 0; x < d.n_objects(); ++x)
    for (int y = 0; y < d.n_objects(); ++y)
      if (!is_gaunt(vertical_hom_category(d, x, y).cat)) {
        out.details = "univalent; not symmetric: vertical hom category at (" +
                      d.vcat.objects[x] + ", " + d.vcat.objects[y] + ") is not gaunt";
        return out;
      }
  out.symmetric = true;
  out.details = "univalent and symmetric";
  return out;
}

bool symmetric_univalence_surrogate(const pseudo_double_cat& d) {
  if (d.mode == check_mode::probe)
    fail(errc::precondition_failed,
         d.name + ": symmetric univalence needs a materialized structure");
  if (!is_strict(d))
    fail(errc::not_strict, d.name + ": symmetric univalence is asked of strict structures only");
  return univalence_surrogate(d).symmetric;
}

fin_bicat underlying_vertical_two_cat(const pseudo_double_cat& d) {
  fin_bicat b;
  b.name = "V(" + d.name + ")";
  b.objects = d.vcat.objects;
  for (const auto& a : d.vcat.arrows) b.cells1.push_back({a.src, a.tgt, a.name});
  b.id1 = d.vcat.identity;
  b.hcomp1_table = d.vcat.comp_table;

  std::vector<int> local2(d.n_squares(), -1);
  for (int s = 0; s < d.n_squares(); ++s) {
    const auto& q = d.squares[s];
    const int x = d.vcat.arrows[q.v1].src, y = d.vcat.arrows[q.v1].tgt;
    if (q.h1 != d.horid[x] || q.h2 != d.horid[y]) continue;
    local2[s] = static_cast<int>(b.cells2.size());
    b.cells2.push_back({q.v1, q.v2, q.name});
  }
  std::vector<int> global2(b.cells2.size());
  for (int s = 0; s < d.n_squares(); ++s)
    if (local2[s] >= 0) global2[local2[s]] = s;

  const int n1 = d.n_vert(), n2 = static_cast<int>(b.cells2.size());
  b.id2.resize(n1);
  b.lunitor.resize(n1);
  b.runitor.resize(n1);
  for (int v = 0; v < n1; ++v) {
    b.id2[v] = local2[d.sqhid[v]];
    b.lunitor[v] = b.id2[v];
    b.runitor[v] = b.id2[v];
  }
  b.vcomp_table.assign(static_cast<size_t>(n2) * n2, -1);
  b.hcomp2_table.assign(static_cast<size_t>(n2) * n2, -1);
  for (int a = 0; a < n2; ++a)
    for (int c = 0; c < n2; ++c) {
      const int ga = global2[a], gc = global2[c];
      if (d.squares[ga].v2 == d.squares[gc].v1) {
        const int r = transported_paste(d, ga, gc);
        b.vcomp_ref(a, c) = r < 0 ? -1 : local2[r];
      }
      if (d.vstackable(ga, gc)) {
        const int r = d.sq_vcomp(ga, gc);
        b.hcomp2_ref(a, c) = r < 0 ? -1 : local2[r];
      }
    }
  for (int u = 0; u < n1; ++u)
    for (int v = 0; v < n1; ++v) {
      if (!d.vcat.composable(u, v)) continue;
      for (int w = 0; w < n1; ++w) {
        if (!d.vcat.composable(v, w)) continue;
        b.associator[{u, v, w}] = b.id2[d.vcat.comp(u, d.vcat.comp(v, w))];
      }
    }
  return b;
}

fin_bicat underlying_horizontal_bicat(const pseudo_double_cat& d) {
  fin_bicat b;
  b.name = "H(" + d.name + ")";
  b.objects = d.vcat.objects;
  for (const auto& h : d.hors) b.cells1.push_back({h.src, h.tgt, h.name});
  b.id1 = d.horid;
  b.hcomp1_table = d.hcomp_table;

  std::vector<int> local2(d.n_squares(), -1);
  for (int s = 0; s < d.n_squares(); ++s) {
    const auto& q = d.squares[s];
    if (q.v1 != d.vcat.identity[d.hors[q.h1].src] || q.v2 != d.vcat.identity[d.hors[q.h1].tgt])
      continue;
    local2[s] = static_cast<int>(b.cells2.size());
    b.cells2.push_back({q.h1, q.h2, q.name});
  }
  std::vector<int> global2(b.cells2.size());
  for (int s = 0; s < d.n_squares(); ++s)
    if (local2[s] >= 0) global2[local2[s]] = s;

  const int n1 = d.n_hors(), n2 = static_cast<int>(b.cells2.size());
  b.id2.resize(n1);
  b.lunitor.resize(n1);
  b.runitor.resize(n1);
  for (int h = 0; h < n1; ++h) {
    b.id2[h] = local2[d.sqvid[h]];
    b.lunitor[h] = d.lunitor[h] < 0 ? -1 : local2[d.lunitor[h]];
    b.runitor[h] = d.runitor[h] < 0 ? -1 : local2[d.runitor[h]];
  }
  b.vcomp_table.assign(static_cast<size_t>(n2) * n2, -1);
  b.hcomp2_table.assign(static_cast<size_t>(n2) * n2, -1);
  for (int a = 0; a < n2; ++a)
    for (int c = 0; c < n2; ++c) {
      const int ga = global2[a], gc = global2[c];
      if (d.vstackable(ga, gc)) {
        const int r = d.sq_vcomp(ga, gc);
        b.vcomp_ref(a, c) = r < 0 ? -1 : local2[r];
      }
      if (d.hpastable(ga, gc)) {
        const int r = d.sq_hcomp(ga, gc);
        b.hcomp2_ref(a, c) = r < 0 ? -1 : local2[r];
      }
    }
  for (const auto& [key, v] : d.associator) b.associator[key] = local2[v];
  return b;
}

pseudo_double_cat trivial_double_cat() {
  pseudo_double_cat d;
  d.name = "trivial";
  d.vcat = cat_one();
  d.hors = {{0, 0, "hid_star"}};
  d.squares = {{0, 0, 0, 0, "sq_star"}};
  d.horid = {0};
  d.hcomp_table = {0};
  d.sqvid = {0};
  d.sqhid = {0};
  d.vcomp_sq_table = {0};
  d.hcomp_sq_table = {0};
  d.lunitor = {0};
  d.runitor = {0};
  d.associator[{0, 0, 0}] = 0;
  return d;
}

}  // namespace dblkit
