#include "dblkit/verity.hpp"

#include <array>
#include <cstddef>
#include <initializer_list>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "dblkit/error.hpp"
#include "dblkit/fincat.hpp"

namespace dblkit {

namespace {

// law instances evaluate to 1 (holds), 0 (violated) or -1 (meets an absent
// entry); exhaustive checking counts -1 as a violation, probe checking skips it
constexpr int eval_skip = -1;

int eval_eq(int lhs, int rhs) {
  if (lhs < 0 || rhs < 0) return eval_skip;
  return lhs == rhs ? 1 : 0;
}

int inv_or(const fin_bicat& b, int t) {
  if (t < 0) return -1;
  const auto u = inverse2(b, t);
  return u ? *u : -1;
}

void validate_verity_ids(const verity_double_bicat& vb) {
  const std::string who = vb.name.empty() ? std::string("?") : vb.name;
  if (vb.horb.objects != vb.verb.objects)
    fail(errc::malformed_table, who + ": horb and verb disagree on the object list");
  const int ns = vb.n_squares();
  for (const auto& q : vb.squares)
    if (q.v1 < 0 || q.v1 >= vb.verb.n1() || q.v2 < 0 || q.v2 >= vb.verb.n1() || q.h1 < 0 ||
        q.h1 >= vb.horb.n1() || q.h2 < 0 || q.h2 >= vb.horb.n1())
      fail(errc::malformed_table, who + ": square " + q.name + " has an out-of-range boundary");
  auto check_unit = [&](const std::vector<int>& u, int want, const char* what) {
    if (static_cast<int>(u.size()) != want)
      fail(errc::malformed_table, who + ": " + what + " has the wrong length");
    for (int s : u)
      if (s < 0 || s >= ns)
        fail(errc::malformed_table, who + ": " + what + " points outside the square list");
  };
  check_unit(vb.sqhid, vb.horb.n1(), "sqhid");
  check_unit(vb.sqvid, vb.verb.n1(), "sqvid");
  auto check_table = [&](const std::vector<int>& t, int rows, const char* what) {
    if (t.size() != static_cast<size_t>(rows) * ns)
      fail(errc::malformed_table, who + ": " + what + " has the wrong shape");
    for (int e : t)
      if (e < -1 || e >= ns)
        fail(errc::malformed_table, who + ": " + what + " points outside the square list");
  };
  check_table(vb.vcomp_sq_table, ns, "vcomp_sq_table");
  check_table(vb.hcomp_sq_table, ns, "hcomp_sq_table");
  check_table(vb.lwhisker_table, vb.verb.n2(), "lwhisker_table");
  check_table(vb.rwhisker_table, vb.verb.n2(), "rwhisker_table");
  check_table(vb.uwhisker_table, vb.horb.n2(), "uwhisker_table");
  check_table(vb.dwhisker_table, vb.horb.n2(), "dwhisker_table");
}

bool typing_instance(const verity_double_bicat& vb, const std::vector<long long>& w, bool probe) {
  switch (w.empty() ? -1 : w[0]) {
    case 0: {
      const auto& q = vb.squares[w[1]];
      const auto& h1 = vb.horb.cells1[q.h1];
      const auto& h2 = vb.horb.cells1[q.h2];
      const auto& v1 = vb.verb.cells1[q.v1];
      const auto& v2 = vb.verb.cells1[q.v2];
      return h1.src == v1.src && h1.tgt == v2.src && h2.src == v1.tgt && h2.tgt == v2.tgt;
    }
    case 1: {
      const int h = static_cast<int>(w[1]);
      const auto& q = vb.squares[vb.sqhid[h]];
      const int x = vb.horb.cells1[h].src, y = vb.horb.cells1[h].tgt;
      return q.v1 == vb.verb.id1[x] && q.v2 == vb.verb.id1[y] && q.h1 == h && q.h2 == h;
    }
    case 2: {
      const int v = static_cast<int>(w[1]);
      const auto& q = vb.squares[vb.sqvid[v]];
      const int x = vb.verb.cells1[v].src, y = vb.verb.cells1[v].tgt;
      return q.v1 == v && q.v2 == v && q.h1 == vb.horb.id1[x] && q.h2 == vb.horb.id1[y];
    }
    case 3: {
      const int s = static_cast<int>(w[1]), t = static_cast<int>(w[2]);
      const int r = vb.sq_vcomp(s, t);
      if (r < 0) return probe || !vb.vstackable(s, t);
      if (!vb.vstackable(s, t)) return false;
      const auto& qs = vb.squares[s];
      const auto& qt = vb.squares[t];
      if (!vb.verb.hcomposable1(qs.v1, qt.v1) || !vb.verb.hcomposable1(qs.v2, qt.v2))
        return false;
      const int lv = vb.verb.hcomp1(qs.v1, qt.v1);
      const int rv = vb.verb.hcomp1(qs.v2, qt.v2);
      if (lv < 0 || rv < 0) return probe;
      const auto& q = vb.squares[r];
      return q.v1 == lv && q.v2 == rv && q.h1 == qs.h1 && q.h2 == qt.h2;
    }
    case 4: {
      const int s = static_cast<int>(w[1]), t = static_cast<int>(w[2]);
      const int r = vb.sq_hcomp(s, t);
      if (r < 0) return probe || !vb.hpastable(s, t);
      if (!vb.hpastable(s, t)) return false;
      const auto& qs = vb.squares[s];
      const auto& qt = vb.squares[t];
      if (!vb.horb.hcomposable1(qs.h1, qt.h1) || !vb.horb.hcomposable1(qs.h2, qt.h2))
        return false;
      const int th = vb.horb.hcomp1(qs.h1, qt.h1);
      const int bh = vb.horb.hcomp1(qs.h2, qt.h2);
      if (th < 0 || bh < 0) return probe;
      const auto& q = vb.squares[r];
      return q.v1 == qs.v1 && q.v2 == qt.v2 && q.h1 == th && q.h2 == bh;
    }
    case 5: {
      const int a = static_cast<int>(w[1]), s = static_cast<int>(w[2]);
      const int r = vb.lwhisker(a, s);
      if (r < 0) return probe || !vb.lwhiskerable(a, s);
      if (!vb.lwhiskerable(a, s)) return false;
      const auto& qs = vb.squares[s];
      const auto& q = vb.squares[r];
      return q.v1 == vb.verb.cells2[a].src && q.v2 == qs.v2 && q.h1 == qs.h1 && q.h2 == qs.h2;
    }
    case 6: {
      const int a = static_cast<int>(w[1]), s = static_cast<int>(w[2]);
      const int r = vb.rwhisker(a, s);
      if (r < 0) return probe || !vb.rwhiskerable(a, s);
      if (!vb.rwhiskerable(a, s)) return false;
      const auto& qs = vb.squares[s];
      const auto& q = vb.squares[r];
      return q.v1 == qs.v1 && q.v2 == vb.verb.cells2[a].tgt && q.h1 == qs.h1 && q.h2 == qs.h2;
    }
    case 7: {
      const int t = static_cast<int>(w[1]), s = static_cast<int>(w[2]);
      const int r = vb.uwhisker(t, s);
      if (r < 0) return probe || !vb.uwhiskerable(t, s);
      if (!vb.uwhiskerable(t, s)) return false;
      const auto& qs = vb.squares[s];
      const auto& q = vb.squares[r];
      return q.v1 == qs.v1 && q.v2 == qs.v2 && q.h1 == vb.horb.cells2[t].src && q.h2 == qs.h2;
    }
    case 8: {
      const int t = static_cast<int>(w[1]), s = static_cast<int>(w[2]);
      const int r = vb.dwhisker(t, s);
      if (r < 0) return probe || !vb.dwhiskerable(t, s);
      if (!vb.dwhiskerable(t, s)) return false;
      const auto& qs = vb.squares[s];
      const auto& q = vb.squares[r];
      return q.v1 == qs.v1 && q.v2 == qs.v2 && q.h1 == qs.h1 && q.h2 == vb.horb.cells2[t].tgt;
    }
    default: return false;
  }
}

int stack_unit_top_instance(const verity_double_bicat& vb, int s) {
  const auto& q = vb.squares[s];
  const int fix = vb.lwhisker(inv_or(vb.verb, vb.verb.lunitor[q.v1]),
                              vb.sq_vcomp(vb.sqhid[q.h1], s));
  return eval_eq(vb.rwhisker(vb.verb.lunitor[q.v2], fix), s);
}

int stack_unit_bottom_instance(const verity_double_bicat& vb, int s) {
  const auto& q = vb.squares[s];
  const int fix = vb.lwhisker(inv_or(vb.verb, vb.verb.runitor[q.v1]),
                              vb.sq_vcomp(s, vb.sqhid[q.h2]));
  return eval_eq(vb.rwhisker(vb.verb.runitor[q.v2], fix), s);
}

int paste_unit_left_instance(const verity_double_bicat& vb, int s) {
  const auto& q = vb.squares[s];
  const int fix = vb.uwhisker(inv_or(vb.horb, vb.horb.lunitor[q.h1]),
                              vb.sq_hcomp(vb.sqvid[q.v1], s));
  return eval_eq(vb.dwhisker(vb.horb.lunitor[q.h2], fix), s);
}

int paste_unit_right_instance(const verity_double_bicat& vb, int s) {
  const auto& q = vb.squares[s];
  const int fix = vb.uwhisker(inv_or(vb.horb, vb.horb.runitor[q.h1]),
                              vb.sq_hcomp(s, vb.sqvid[q.v2]));
  return eval_eq(vb.dwhisker(vb.horb.runitor[q.h2], fix), s);
}

int stack_assoc_instance(const verity_double_bicat& vb, int s, int t, int u) {
  const auto& qs = vb.squares[s];
  const auto& qt = vb.squares[t];
  const auto& qu = vb.squares[u];
  const int fix = vb.lwhisker(vb.verb.assoc(qs.v1, qt.v1, qu.v1),
                              vb.sq_vcomp(vb.sq_vcomp(s, t), u));
  return eval_eq(vb.rwhisker(inv_or(vb.verb, vb.verb.assoc(qs.v2, qt.v2, qu.v2)), fix),
                 vb.sq_vcomp(s, vb.sq_vcomp(t, u)));
}

int paste_assoc_instance(const verity_double_bicat& vb, int s, int t, int u) {
  const auto& qs = vb.squares[s];
  const auto& qt = vb.squares[t];
  const auto& qu = vb.squares[u];
  const int fix = vb.uwhisker(vb.horb.assoc(qs.h1, qt.h1, qu.h1),
                              vb.sq_hcomp(vb.sq_hcomp(s, t), u));
  return eval_eq(vb.dwhisker(inv_or(vb.horb, vb.horb.assoc(qs.h2, qt.h2, qu.h2)), fix),
                 vb.sq_hcomp(s, vb.sq_hcomp(t, u)));
}

int interchange_instance(const verity_double_bicat& vb, int s, int t, int u, int w) {
  return eval_eq(vb.sq_vcomp(vb.sq_hcomp(s, t), vb.sq_hcomp(u, w)),
                 vb.sq_hcomp(vb.sq_vcomp(s, u), vb.sq_vcomp(t, w)));
}

int lw_functorial_instance(const verity_double_bicat& vb, const std::vector<long long>& w) {
  if (w[0] == 0) {
    const int s = static_cast<int>(w[1]);
    return eval_eq(vb.lwhisker(vb.verb.id2[vb.squares[s].v1], s), s);
  }
  const int a = static_cast<int>(w[1]), b = static_cast<int>(w[2]), s = static_cast<int>(w[3]);
  return eval_eq(vb.lwhisker(vb.verb.vcomp(a, b), s), vb.lwhisker(a, vb.lwhisker(b, s)));
}

int rw_functorial_instance(const verity_double_bicat& vb, const std::vector<long long>& w) {
  if (w[0] == 0) {
    const int s = static_cast<int>(w[1]);
    return eval_eq(vb.rwhisker(vb.verb.id2[vb.squares[s].v2], s), s);
  }
  const int a = static_cast<int>(w[1]), b = static_cast<int>(w[2]), s = static_cast<int>(w[3]);
  return eval_eq(vb.rwhisker(vb.verb.vcomp(a, b), s), vb.rwhisker(b, vb.rwhisker(a, s)));
}

int uw_functorial_instance(const verity_double_bicat& vb, const std::vector<long long>& w) {
  if (w[0] == 0) {
    const int s = static_cast<int>(w[1]);
    return eval_eq(vb.uwhisker(vb.horb.id2[vb.squares[s].h1], s), s);
  }
  const int a = static_cast<int>(w[1]), b = static_cast<int>(w[2]), s = static_cast<int>(w[3]);
  return eval_eq(vb.uwhisker(vb.horb.vcomp(a, b), s), vb.uwhisker(a, vb.uwhisker(b, s)));
}

int dw_functorial_instance(const verity_double_bicat& vb, const std::vector<long long>& w) {
  if (w[0] == 0) {
    const int s = static_cast<int>(w[1]);
    return eval_eq(vb.dwhisker(vb.horb.id2[vb.squares[s].h2], s), s);
  }
  const int a = static_cast<int>(w[1]), b = static_cast<int>(w[2]), s = static_cast<int>(w[3]);
  return eval_eq(vb.dwhisker(vb.horb.vcomp(a, b), s), vb.dwhisker(b, vb.dwhisker(a, s)));
}

int whisker_commutation_instance(const verity_double_bicat& vb,
                                 const std::vector<long long>& w) {
  const int a = static_cast<int>(w[1]), b = static_cast<int>(w[2]), s = static_cast<int>(w[3]);
  switch (w[0]) {
    case 0:
      return eval_eq(vb.lwhisker(a, vb.rwhisker(b, s)), vb.rwhisker(b, vb.lwhisker(a, s)));
    case 1:
      return eval_eq(vb.lwhisker(a, vb.uwhisker(b, s)), vb.uwhisker(b, vb.lwhisker(a, s)));
    case 2:
      return eval_eq(vb.lwhisker(a, vb.dwhisker(b, s)), vb.dwhisker(b, vb.lwhisker(a, s)));
    case 3:
      return eval_eq(vb.rwhisker(a, vb.uwhisker(b, s)), vb.uwhisker(b, vb.rwhisker(a, s)));
    case 4:
      return eval_eq(vb.rwhisker(a, vb.dwhisker(b, s)), vb.dwhisker(b, vb.rwhisker(a, s)));
    case 5:
      return eval_eq(vb.uwhisker(a, vb.dwhisker(b, s)), vb.dwhisker(b, vb.uwhisker(a, s)));
    default: return 0;
  }
}

int whisker_over_stacking_instance(const verity_double_bicat& vb,
                                   const std::vector<long long>& w) {
  const int c = static_cast<int>(w[1]), s = static_cast<int>(w[2]), t = static_cast<int>(w[3]);
  if (w[0] == 0)
    return eval_eq(vb.uwhisker(c, vb.sq_vcomp(s, t)), vb.sq_vcomp(vb.uwhisker(c, s), t));
  return eval_eq(vb.dwhisker(c, vb.sq_vcomp(s, t)), vb.sq_vcomp(s, vb.dwhisker(c, t)));
}

int whisker_over_pasting_instance(const verity_double_bicat& vb,
                                  const std::vector<long long>& w) {
  const int c = static_cast<int>(w[1]), s = static_cast<int>(w[2]), t = static_cast<int>(w[3]);
  if (w[0] == 0)
    return eval_eq(vb.lwhisker(c, vb.sq_hcomp(s, t)), vb.sq_hcomp(vb.lwhisker(c, s), t));
  return eval_eq(vb.rwhisker(c, vb.sq_hcomp(s, t)), vb.sq_hcomp(s, vb.rwhisker(c, t)));
}

int stack_exchange_instance(const verity_double_bicat& vb, int c, int s, int t) {
  return eval_eq(vb.sq_vcomp(vb.dwhisker(c, s), t), vb.sq_vcomp(s, vb.uwhisker(c, t)));
}

int paste_exchange_instance(const verity_double_bicat& vb, int c, int s, int t) {
  return eval_eq(vb.sq_hcomp(vb.rwhisker(c, s), t), vb.sq_hcomp(s, vb.lwhisker(c, t)));
}

int id_square_whisker_instance(const verity_double_bicat& vb,
                               const std::vector<long long>& w) {
  const int c = static_cast<int>(w[1]);
  if (w[0] == 0)
    return eval_eq(vb.lwhisker(c, vb.sqvid[vb.verb.cells2[c].tgt]),
                   vb.rwhisker(c, vb.sqvid[vb.verb.cells2[c].src]));
  return eval_eq(vb.uwhisker(c, vb.sqhid[vb.horb.cells2[c].tgt]),
                 vb.dwhisker(c, vb.sqhid[vb.horb.cells2[c].src]));
}

// diagrammatic vertical pasting of 2-cells, -1 propagating
int chain2(const fin_bicat& b, std::initializer_list<int> cells) {
  int acc = -2;
  for (int c : cells) {
    if (c < 0) return -1;
    acc = acc == -2 ? c : b.vcomp(acc, c);
    if (acc < 0) return -1;
  }
  return acc;
}

}  // namespace

law_report check_verity_laws(const verity_double_bicat& vb) {
  validate_verity_ids(vb);
  const bool probe = vb.mode == check_mode::probe;
  law_report rep;
  rep.mode = vb.mode;
  rep.artifact = "verity:" + (vb.name.empty() ? std::string("?") : vb.name);
  law_report hrep = check_bicat_laws(vb.horb, vb.mode);
  for (auto& lr : hrep.laws) {
    lr.law = "horb-" + lr.law;
    rep.laws.push_back(std::move(lr));
  }
  law_report vrep = check_bicat_laws(vb.verb, vb.mode);
  for (auto& lr : vrep.laws) {
    lr.law = "verb-" + lr.law;
    rep.laws.push_back(std::move(lr));
  }

  const int ns = vb.n_squares();
  const int nh1 = vb.horb.n1(), nv1 = vb.verb.n1();
  const int nh2 = vb.horb.n2(), nv2 = vb.verb.n2();

  auto note = [&](law_acc& acc, int state, std::vector<long long> w, const std::string& detail) {
    if (state == eval_skip) {
      if (!probe) acc.tally(false, std::move(w), detail + " meets an absent entry");
      return;
    }
    acc.tally(state == 1, std::move(w), detail);
  };

  // squares and 2-cells bucketed by each boundary 1-cell
  std::vector<std::vector<int>> sq_h1(nh1), sq_h2(nh1), sq_v1(nv1), sq_v2(nv1);
  for (int s = 0; s < ns; ++s) {
    sq_h1[vb.squares[s].h1].push_back(s);
    sq_h2[vb.squares[s].h2].push_back(s);
    sq_v1[vb.squares[s].v1].push_back(s);
    sq_v2[vb.squares[s].v2].push_back(s);
  }
  std::vector<std::vector<int>> v2_src(nv1), v2_tgt(nv1), h2_src(nh1), h2_tgt(nh1);
  for (int a = 0; a < nv2; ++a) {
    v2_src[vb.verb.cells2[a].src].push_back(a);
    v2_tgt[vb.verb.cells2[a].tgt].push_back(a);
  }
  for (int t = 0; t < nh2; ++t) {
    h2_src[vb.horb.cells2[t].src].push_back(t);
    h2_tgt[vb.horb.cells2[t].tgt].push_back(t);
  }

  law_acc typing("typing");
  auto note_typing = [&](std::vector<long long> w, const std::string& detail) {
    const bool ok = typing_instance(vb, w, probe);
    typing.tally(ok, std::move(w), detail);
  };
  for (int s = 0; s < ns; ++s) note_typing({0, s}, "boundary of " + vb.squares[s].name);
  for (int h = 0; h < nh1; ++h) note_typing({1, h}, "stacking unit on " + vb.horb.cells1[h].name);
  for (int v = 0; v < nv1; ++v) note_typing({2, v}, "pasting unit on " + vb.verb.cells1[v].name);
  for (int s = 0; s < ns; ++s)
    for (int t = 0; t < ns; ++t) {
      note_typing({3, s, t}, "stack(" + vb.squares[s].name + ", " + vb.squares[t].name + ")");
      note_typing({4, s, t}, "paste(" + vb.squares[s].name + ", " + vb.squares[t].name + ")");
    }
  for (int a = 0; a < nv2; ++a)
    for (int s = 0; s < ns; ++s) {
      note_typing({5, a, s},
                  vb.verb.cells2[a].name + " into the left edge of " + vb.squares[s].name);
      note_typing({6, a, s},
                  vb.verb.cells2[a].name + " into the right edge of " + vb.squares[s].name);
    }
  for (int t = 0; t < nh2; ++t)
    for (int s = 0; s < ns; ++s) {
      note_typing({7, t, s},
                  vb.horb.cells2[t].name + " into the top edge of " + vb.squares[s].name);
      note_typing({8, t, s},
                  vb.horb.cells2[t].name + " into the bottom edge of " + vb.squares[s].name);
    }
  rep.laws.push_back(typing.take());

  law_acc sut("stack-unit-top");
  law_acc sbt("stack-unit-bottom");
  law_acc pul("paste-unit-left");
  law_acc pur("paste-unit-right");
  for (int s = 0; s < ns; ++s) {
    const std::string& nm = vb.squares[s].name;
    note(sut, stack_unit_top_instance(vb, s), {s}, "the stacking unit above " + nm);
    note(sbt, stack_unit_bottom_instance(vb, s), {s}, "the stacking unit below " + nm);
    note(pul, paste_unit_left_instance(vb, s), {s}, "the pasting unit left of " + nm);
    note(pur, paste_unit_right_instance(vb, s), {s}, "the pasting unit right of " + nm);
  }
  rep.laws.push_back(sut.take());
  rep.laws.push_back(sbt.take());
  rep.laws.push_back(pul.take());
  rep.laws.push_back(pur.take());

  law_acc sas("stack-associativity");
  for (int s = 0; s < ns; ++s)
    for (int t : sq_h1[vb.squares[s].h2])
      for (int u : sq_h1[vb.squares[t].h2])
        note(sas, stack_assoc_instance(vb, s, t, u), {s, t, u},
             "(" + vb.squares[s].name + " ; " + vb.squares[t].name + " ; " +
                 vb.squares[u].name + ")");
  rep.laws.push_back(sas.take());

  law_acc pas("paste-associativity");
  for (int s = 0; s < ns; ++s)
    for (int t : sq_v1[vb.squares[s].v2])
      for (int u : sq_v1[vb.squares[t].v2])
        note(pas, paste_assoc_instance(vb, s, t, u), {s, t, u},
             "(" + vb.squares[s].name + " | " + vb.squares[t].name + " | " +
                 vb.squares[u].name + ")");
  rep.laws.push_back(pas.take());

  law_acc inter("interchange");
  for (int s = 0; s < ns; ++s)
    for (int t : sq_v1[vb.squares[s].v2])
      for (int u : sq_h1[vb.squares[s].h2])
        for (int w : sq_h1[vb.squares[t].h2]) {
          if (vb.squares[w].v1 != vb.squares[u].v2) continue;
          note(inter, interchange_instance(vb, s, t, u, w), {s, t, u, w},
               "interchange at (" + vb.squares[s].name + ", " + vb.squares[t].name + ", " +
                   vb.squares[u].name + ", " + vb.squares[w].name + ")");
        }
  rep.laws.push_back(inter.take());

  law_acc lwf("left-whisker-functorial");
  for (int s = 0; s < ns; ++s)
    note(lwf, lw_functorial_instance(vb, {0, s}), {0, s},
         "identity 2-cell into the left edge of " + vb.squares[s].name);
  for (int s = 0; s < ns; ++s)
    for (int b : v2_tgt[vb.squares[s].v1])
      for (int a : v2_tgt[vb.verb.cells2[b].src])
        note(lwf, lw_functorial_instance(vb, {1, a, b, s}), {1, a, b, s},
             "(" + vb.verb.cells2[a].name + " ; " + vb.verb.cells2[b].name +
                 ") into the left edge of " + vb.squares[s].name);
  rep.laws.push_back(lwf.take());

  law_acc rwf("right-whisker-functorial");
  for (int s = 0; s < ns; ++s)
    note(rwf, rw_functorial_instance(vb, {0, s}), {0, s},
         "identity 2-cell into the right edge of " + vb.squares[s].name);
  for (int s = 0; s < ns; ++s)
    for (int a : v2_src[vb.squares[s].v2])
      for (int b : v2_src[vb.verb.cells2[a].tgt])
        note(rwf, rw_functorial_instance(vb, {1, a, b, s}), {1, a, b, s},
             "(" + vb.verb.cells2[a].name + " ; " + vb.verb.cells2[b].name +
                 ") into the right edge of " + vb.squares[s].name);
  rep.laws.push_back(rwf.take());

  law_acc uwf("up-whisker-functorial");
  for (int s = 0; s < ns; ++s)
    note(uwf, uw_functorial_instance(vb, {0, s}), {0, s},
         "identity 2-cell into the top edge of " + vb.squares[s].name);
  for (int s = 0; s < ns; ++s)
    for (int b : h2_tgt[vb.squares[s].h1])
      for (int a : h2_tgt[vb.horb.cells2[b].src])
        note(uwf, uw_functorial_instance(vb, {1, a, b, s}), {1, a, b, s},
             "(" + vb.horb.cells2[a].name + " ; " + vb.horb.cells2[b].name +
                 ") into the top edge of " + vb.squares[s].name);
  rep.laws.push_back(uwf.take());

  law_acc dwf("down-whisker-functorial");
  for (int s = 0; s < ns; ++s)
    note(dwf, dw_functorial_instance(vb, {0, s}), {0, s},
         "identity 2-cell into the bottom edge of " + vb.squares[s].name);
  for (int s = 0; s < ns; ++s)
    for (int a : h2_src[vb.squares[s].h2])
      for (int b : h2_src[vb.horb.cells2[a].tgt])
        note(dwf, dw_functorial_instance(vb, {1, a, b, s}), {1, a, b, s},
             "(" + vb.horb.cells2[a].name + " ; " + vb.horb.cells2[b].name +
                 ") into the bottom edge of " + vb.squares[s].name);
  rep.laws.push_back(dwf.take());

  law_acc wcm("whisker-commutation");
  for (int s = 0; s < ns; ++s) {
    const auto& q = vb.squares[s];
    const std::string& nm = vb.squares[s].name;
    for (int a : v2_tgt[q.v1]) {
      for (int b : v2_src[q.v2])
        note(wcm, whisker_commutation_instance(vb, {0, a, b, s}), {0, a, b, s},
             "left and right whiskers on " + nm);
      for (int t : h2_tgt[q.h1])
        note(wcm, whisker_commutation_instance(vb, {1, a, t, s}), {1, a, t, s},
             "left and top whiskers on " + nm);
      for (int t : h2_src[q.h2])
        note(wcm, whisker_commutation_instance(vb, {2, a, t, s}), {2, a, t, s},
             "left and bottom whiskers on " + nm);
    }
    for (int a : v2_src[q.v2]) {
      for (int t : h2_tgt[q.h1])
        note(wcm, whisker_commutation_instance(vb, {3, a, t, s}), {3, a, t, s},
             "right and top whiskers on " + nm);
      for (int t : h2_src[q.h2])
        note(wcm, whisker_commutation_instance(vb, {4, a, t, s}), {4, a, t, s},
             "right and bottom whiskers on " + nm);
    }
    for (int t : h2_tgt[q.h1])
      for (int u : h2_src[q.h2])
        note(wcm, whisker_commutation_instance(vb, {5, t, u, s}), {5, t, u, s},
             "top and bottom whiskers on " + nm);
  }
  rep.laws.push_back(wcm.take());

  law_acc wst("whisker-over-stacking");
  for (int s = 0; s < ns; ++s)
    for (int t : sq_h1[vb.squares[s].h2]) {
      for (int c : h2_tgt[vb.squares[s].h1])
        note(wst, whisker_over_stacking_instance(vb, {0, c, s, t}), {0, c, s, t},
             vb.horb.cells2[c].name + " over stack(" + vb.squares[s].name + ", " +
                 vb.squares[t].name + ")");
      for (int c : h2_src[vb.squares[t].h2])
        note(wst, whisker_over_stacking_instance(vb, {1, c, s, t}), {1, c, s, t},
             vb.horb.cells2[c].name + " under stack(" + vb.squares[s].name + ", " +
                 vb.squares[t].name + ")");
    }
  rep.laws.push_back(wst.take());

  law_acc wpt("whisker-over-pasting");
  for (int s = 0; s < ns; ++s)
    for (int t : sq_v1[vb.squares[s].v2]) {
      for (int c : v2_tgt[vb.squares[s].v1])
        note(wpt, whisker_over_pasting_instance(vb, {0, c, s, t}), {0, c, s, t},
             vb.verb.cells2[c].name + " left of paste(" + vb.squares[s].name + ", " +
                 vb.squares[t].name + ")");
      for (int c : v2_src[vb.squares[t].v2])
        note(wpt, whisker_over_pasting_instance(vb, {1, c, s, t}), {1, c, s, t},
             vb.verb.cells2[c].name + " right of paste(" + vb.squares[s].name + ", " +
                 vb.squares[t].name + ")");
    }
  rep.laws.push_back(wpt.take());

  law_acc sex("stack-exchange");
  for (int c = 0; c < nh2; ++c)
    for (int s : sq_h2[vb.horb.cells2[c].src])
      for (int t : sq_h1[vb.horb.cells2[c].tgt])
        note(sex, stack_exchange_instance(vb, c, s, t), {c, s, t},
             vb.horb.cells2[c].name + " between " + vb.squares[s].name + " and " +
                 vb.squares[t].name);
  rep.laws.push_back(sex.take());

  law_acc pex("paste-exchange");
  for (int c = 0; c < nv2; ++c)
    for (int s : sq_v2[vb.verb.cells2[c].src])
      for (int t : sq_v1[vb.verb.cells2[c].tgt])
        note(pex, paste_exchange_instance(vb, c, s, t), {c, s, t},
             vb.verb.cells2[c].name + " between " + vb.squares[s].name + " and " +
                 vb.squares[t].name);
  rep.laws.push_back(pex.take());

  law_acc isw("identity-square-whiskering");
  for (int a = 0; a < nv2; ++a)
    note(isw, id_square_whisker_instance(vb, {0, a}), {0, a},
         "pasting units around " + vb.verb.cells2[a].name);
  for (int t = 0; t < nh2; ++t)
    note(isw, id_square_whisker_instance(vb, {1, t}), {1, t},
         "stacking units around " + vb.horb.cells2[t].name);
  rep.laws.push_back(isw.take());

  return rep;
}

bool replay_verity_law(const verity_double_bicat& vb, const law_result& r) {
  if (r.law.rfind("horb-", 0) == 0) {
    law_result inner = r;
    inner.law = r.law.substr(5);
    return replay_bicat_law(vb.horb, inner, vb.mode);
  }
  if (r.law.rfind("verb-", 0) == 0) {
    law_result inner = r;
    inner.law = r.law.substr(5);
    return replay_bicat_law(vb.verb, inner, vb.mode);
  }
  const bool probe = vb.mode == check_mode::probe;
  const auto& w = r.witness;
  auto as_int = [&](size_t i) { return static_cast<int>(w[i]); };
  auto refails = [&](int state) { return probe ? state == 0 : state != 1; };
  if (r.law == "typing") return !typing_instance(vb, w, probe);
  if (r.law == "stack-unit-top" && w.size() == 1)
    return refails(stack_unit_top_instance(vb, as_int(0)));
  if (r.law == "stack-unit-bottom" && w.size() == 1)
    return refails(stack_unit_bottom_instance(vb, as_int(0)));
  if (r.law == "paste-unit-left" && w.size() == 1)
    return refails(paste_unit_left_instance(vb, as_int(0)));
  if (r.law == "paste-unit-right" && w.size() == 1)
    return refails(paste_unit_right_instance(vb, as_int(0)));
  if (r.law == "stack-associativity" && w.size() == 3)
    return refails(stack_assoc_instance(vb, as_int(0), as_int(1), as_int(2)));
  if (r.law == "paste-associativity" && w.size() == 3)
    return refails(paste_assoc_instance(vb, as_int(0), as_int(1), as_int(2)));
  if (r.law == "interchange" && w.size() == 4)
    return refails(interchange_instance(vb, as_int(0), as_int(1), as_int(2), as_int(3)));
  if (r.law == "left-whisker-functorial" && (w.size() == 2 || w.size() == 4))
    return refails(lw_functorial_instance(vb, w));
  if (r.law == "right-whisker-functorial" && (w.size() == 2 || w.size() == 4))
    return refails(rw_functorial_instance(vb, w));
  if (r.law == "up-whisker-functorial" && (w.size() == 2 || w.size() == 4))
    return refails(uw_functorial_instance(vb, w));
  if (r.law == "down-whisker-functorial" && (w.size() == 2 || w.size() == 4))
    return refails(dw_functorial_instance(vb, w));
  if (r.law == "whisker-commutation" && w.size() == 4)
    return refails(whisker_commutation_instance(vb, w));
  if (r.law == "whisker-over-stacking" && w.size() == 4)
    return refails(whisker_over_stacking_instance(vb, w));
  if (r.law == "whisker-over-pasting" && w.size() == 4)
    return refails(whisker_over_pasting_instance(vb, w));
  if (r.law == "stack-exchange" && w.size() == 3)
    return refails(stack_exchange_instance(vb, as_int(0), as_int(1), as_int(2)));
  if (r.law == "paste-exchange" && w.size() == 3)
    return refails(paste_exchange_instance(vb, as_int(0), as_int(1), as_int(2)));
  if (r.law == "identity-square-whiskering" && w.size() == 2)
    return refails(id_square_whisker_instance(vb, w));
  return false;
}

int cell_to_square_h(const verity_double_bicat& vb, int t) {
  if (t < 0 || t >= vb.horb.n2())
    fail(errc::precondition_failed, "cell_to_square_h: no horizontal 2-cell with that id");
  return vb.uwhisker(t, vb.sqhid[vb.horb.cells2[t].tgt]);
}

int cell_to_square_v(const verity_double_bicat& vb, int t) {
  if (t < 0 || t >= vb.verb.n2())
    fail(errc::precondition_failed, "cell_to_square_v: no vertical 2-cell with that id");
  return vb.lwhisker(t, vb.sqvid[vb.verb.cells2[t].tgt]);
}

saturation_result saturation(const verity_double_bicat& vb) {
  validate_verity_ids(vb);
  saturation_result out;
  const int ns = vb.n_squares();
  out.horizontally = true;
  out.vertically = true;
  out.h_cell_of_square.assign(ns, -1);
  out.v_cell_of_square.assign(ns, -1);
  for (int t = 0; t < vb.horb.n2(); ++t) {
    const auto& c = vb.horb.cells2[t];
    const int s = cell_to_square_h(vb, t);
    if (s < 0) {
      out.horizontally = false;
      continue;
    }
    const auto& q = vb.squares[s];
    const int x = vb.horb.cells1[c.src].src, y = vb.horb.cells1[c.src].tgt;
    const bool slot_ok = q.v1 == vb.verb.id1[x] && q.v2 == vb.verb.id1[y] && q.h1 == c.src &&
                         q.h2 == c.tgt;
    if (!slot_ok || out.h_cell_of_square[s] != -1) {
      out.horizontally = false;
      continue;
    }
    out.h_cell_of_square[s] = t;
  }
  for (int s = 0; s < ns; ++s) {
    const auto& q = vb.squares[s];
    const int x = vb.horb.cells1[q.h1].src, y = vb.horb.cells1[q.h1].tgt;
    if (q.v1 == vb.verb.id1[x] && q.v2 == vb.verb.id1[y] && out.h_cell_of_square[s] < 0)
      out.horizontally = false;
  }
  for (int t = 0; t < vb.verb.n2(); ++t) {
    const auto& c = vb.verb.cells2[t];
    const int s = cell_to_square_v(vb, t);
    if (s < 0) {
      out.vertically = false;
      continue;
    }
    const auto& q = vb.squares[s];
    const int x = vb.verb.cells1[c.src].src, y = vb.verb.cells1[c.src].tgt;
    const bool slot_ok = q.v1 == c.src && q.v2 == c.tgt && q.h1 == vb.horb.id1[x] &&
                         q.h2 == vb.horb.id1[y];
    if (!slot_ok || out.v_cell_of_square[s] != -1) {
      out.vertically = false;
      continue;
    }
    out.v_cell_of_square[s] = t;
  }
  for (int s = 0; s < ns; ++s) {
    const auto& q = vb.squares[s];
    const int x = vb.verb.cells1[q.v1].src, y = vb.verb.cells1[q.v1].tgt;
    if (q.h1 == vb.horb.id1[x] && q.h2 == vb.horb.id1[y] && out.v_cell_of_square[s] < 0)
      out.vertically = false;
  }
  return out;
}

bool is_weak_double_cat(const verity_double_bicat& vb) {
  const saturation_result s = saturation(vb);
  return s.horizontally && s.vertically;
}

verity_double_bicat double_cat_to_verity(const pseudo_double_cat& d) {
  if (!check_double_laws(d).ok())
    fail(errc::precondition_failed,
         "double_cat_to_verity needs a lawful pseudo double category, got " + d.name);
  verity_double_bicat vb;
  vb.name = "V(" + d.name + ")";
  vb.horb = discrete_bicat(d.vcat);
  vb.verb = underlying_horizontal_bicat(d);
  vb.mode = d.mode;
  vb.squares.reserve(d.squares.size());
  for (const auto& q : d.squares) vb.squares.push_back({q.h1, q.h2, q.v1, q.v2, q.name});
  vb.sqhid = d.sqhid;
  vb.sqvid = d.sqvid;
  vb.vcomp_sq_table = d.hcomp_sq_table;
  vb.hcomp_sq_table = d.vcomp_sq_table;

  // the globular squares in square-id order are the vertical 2-cells
  std::vector<int> cell_square;
  for (int s = 0; s < d.n_squares(); ++s) {
    const auto& q = d.squares[s];
    if (q.v1 == d.vcat.identity[d.hors[q.h1].src] && q.v2 == d.vcat.identity[d.hors[q.h1].tgt])
      cell_square.push_back(s);
  }
  if (static_cast<int>(cell_square.size()) != vb.verb.n2())
    fail(errc::internal, "double_cat_to_verity: globular square count drifted from " +
                             vb.verb.name);

  const int ns = vb.n_squares();
  vb.lwhisker_table.assign(static_cast<size_t>(vb.verb.n2()) * ns, -1);
  vb.rwhisker_table.assign(static_cast<size_t>(vb.verb.n2()) * ns, -1);
  for (int a = 0; a < vb.verb.n2(); ++a)
    for (int s = 0; s < ns; ++s) {
      if (vb.lwhiskerable(a, s)) vb.lwhisker_ref(a, s) = d.sq_vcomp(cell_square[a], s);
      if (vb.rwhiskerable(a, s)) vb.rwhisker_ref(a, s) = d.sq_vcomp(s, cell_square[a]);
    }
  vb.uwhisker_table.assign(static_cast<size_t>(vb.horb.n2()) * ns, -1);
  vb.dwhisker_table.assign(static_cast<size_t>(vb.horb.n2()) * ns, -1);
  for (int t = 0; t < vb.horb.n2(); ++t)
    for (int s = 0; s < ns; ++s) {
      if (vb.uwhiskerable(t, s)) vb.uwhisker_ref(t, s) = s;
      if (vb.dwhiskerable(t, s)) vb.dwhisker_ref(t, s) = s;
    }
  return vb;
}

verity_double_bicat square_verity(const fin_bicat& b, check_mode mode) {
  if (!check_bicat_laws(b, mode).ok())
    fail(errc::precondition_failed, "square_verity needs a lawful bicategory, got " + b.name);
  verity_double_bicat vb;
  vb.name = "SquareV(" + b.name + ")";
  vb.horb = b;
  vb.verb = co_dual(b);
  vb.mode = mode;

  // one square per 2-cell theta : hcomp1(h, w) => hcomp1(v, k) in each slot
  // (v, w, h, k); squares remember their theta through cell_of
  std::vector<int> cell_of;
  std::map<std::array<int, 5>, int> index;
  for (int v = 0; v < b.n1(); ++v)
    for (int w = 0; w < b.n1(); ++w)
      for (int h = 0; h < b.n1(); ++h)
        for (int k = 0; k < b.n1(); ++k) {
          if (b.cells1[h].src != b.cells1[v].src || b.cells1[h].tgt != b.cells1[w].src ||
              b.cells1[k].src != b.cells1[v].tgt || b.cells1[k].tgt != b.cells1[w].tgt)
            continue;
          const int top = b.hcomp1(h, w), bot = b.hcomp1(v, k);
          if (top < 0 || bot < 0) continue;
          for (int th = 0; th < b.n2(); ++th) {
            if (b.cells2[th].src != top || b.cells2[th].tgt != bot) continue;
            index[{v, w, h, k, th}] = static_cast<int>(vb.squares.size());
            vb.squares.push_back({v, w, h, k,
                                  "sq[" + b.cells1[v].name + "," + b.cells1[w].name + "," +
                                      b.cells1[h].name + "," + b.cells1[k].name + ":" +
                                      b.cells2[th].name + "]"});
            cell_of.push_back(th);
          }
        }

  auto lookup = [&](int v, int w, int h, int k, int e) {
    if (v < 0 || w < 0 || h < 0 || k < 0 || e < 0) return -1;
    const auto it = index.find({v, w, h, k, e});
    return it == index.end() ? -1 : it->second;
  };
  auto require = [&](int s, const std::string& what) {
    if (s < 0 && mode == check_mode::exhaustive)
      fail(errc::internal, vb.name + ": " + what + " did not land on a square");
    return s;
  };

  vb.sqhid.assign(b.n1(), -1);
  vb.sqvid.assign(b.n1(), -1);
  for (int f = 0; f < b.n1(); ++f) {
    const int x = b.cells1[f].src, y = b.cells1[f].tgt;
    const int eh = chain2(b, {b.runitor[f], inv_or(b, b.lunitor[f])});
    const int sh = lookup(b.id1[x], b.id1[y], f, f, eh);
    if (sh < 0)
      fail(mode == check_mode::exhaustive ? errc::internal : errc::construction_failed,
           vb.name + ": no stacking unit square on " + b.cells1[f].name);
    vb.sqhid[f] = sh;
    const int ev = chain2(b, {b.lunitor[f], inv_or(b, b.runitor[f])});
    const int sv = lookup(f, f, b.id1[x], b.id1[y], ev);
    if (sv < 0)
      fail(mode == check_mode::exhaustive ? errc::internal : errc::construction_failed,
           vb.name + ": no pasting unit square on " + b.cells1[f].name);
    vb.sqvid[f] = sv;
  }

  const int ns = vb.n_squares();
  vb.vcomp_sq_table.assign(static_cast<size_t>(ns) * ns, -1);
  vb.hcomp_sq_table.assign(static_cast<size_t>(ns) * ns, -1);
  for (int s = 0; s < ns; ++s)
    for (int t = 0; t < ns; ++t) {
      const auto& qs = vb.squares[s];
      const auto& qt = vb.squares[t];
      if (vb.vstackable(s, t)) {
        const int e = chain2(b, {b.assoc(qs.h1, qs.v2, qt.v2),
                                 b.hcomp2(cell_of[s], b.id2[qt.v2]),
                                 inv_or(b, b.assoc(qs.v1, qs.h2, qt.v2)),
                                 b.hcomp2(b.id2[qs.v1], cell_of[t]),
                                 b.assoc(qs.v1, qt.v1, qt.h2)});
        const int r = lookup(b.hcomp1(qs.v1, qt.v1), b.hcomp1(qs.v2, qt.v2), qs.h1, qt.h2, e);
        vb.sq_vcomp_ref(s, t) = require(r, "stack(" + qs.name + ", " + qt.name + ")");
      }
      if (vb.hpastable(s, t)) {
        const int e = chain2(b, {inv_or(b, b.assoc(qs.h1, qt.h1, qt.v2)),
                                 b.hcomp2(b.id2[qs.h1], cell_of[t]),
                                 b.assoc(qs.h1, qt.v1, qt.h2),
                                 b.hcomp2(cell_of[s], b.id2[qt.h2]),
                                 inv_or(b, b.assoc(qs.v1, qs.h2, qt.h2))});
        const int r = lookup(qs.v1, qt.v2, b.hcomp1(qs.h1, qt.h1), b.hcomp1(qs.h2, qt.h2), e);
        vb.sq_hcomp_ref(s, t) = require(r, "paste(" + qs.name + ", " + qt.name + ")");
      }
    }

  vb.lwhisker_table.assign(static_cast<size_t>(vb.verb.n2()) * ns, -1);
  vb.rwhisker_table.assign(static_cast<size_t>(vb.verb.n2()) * ns, -1);
  for (int a = 0; a < vb.verb.n2(); ++a)
    for (int s = 0; s < ns; ++s) {
      const auto& q = vb.squares[s];
      // verb reverses b on 2-cells, so a vertical a : v => v' is b's a : v' => v
      if (vb.lwhiskerable(a, s)) {
        const int e = chain2(b, {cell_of[s], b.hcomp2(a, b.id2[q.h2])});
        const int r = lookup(b.cells2[a].tgt, q.v2, q.h1, q.h2, e);
        vb.lwhisker_ref(a, s) =
            require(r, vb.verb.cells2[a].name + " into the left edge of " + q.name);
      }
      if (vb.rwhiskerable(a, s)) {
        const int e = chain2(b, {b.hcomp2(b.id2[q.h1], a), cell_of[s]});
        const int r = lookup(q.v1, b.cells2[a].src, q.h1, q.h2, e);
        vb.rwhisker_ref(a, s) =
            require(r, vb.verb.cells2[a].name + " into the right edge of " + q.name);
      }
    }

  vb.uwhisker_table.assign(static_cast<size_t>(vb.horb.n2()) * ns, -1);
  vb.dwhisker_table.assign(static_cast<size_t>(vb.horb.n2()) * ns, -1);
  for (int t = 0; t < vb.horb.n2(); ++t)
    for (int s = 0; s < ns; ++s) {
      const auto& q = vb.squares[s];
      if (vb.uwhiskerable(t, s)) {
        const int e = chain2(b, {b.hcomp2(t, b.id2[q.v2]), cell_of[s]});
        const int r = lookup(q.v1, q.v2, b.cells2[t].src, q.h2, e);
        vb.uwhisker_ref(t, s) =
            require(r, b.cells2[t].name + " into the top edge of " + q.name);
      }
      if (vb.dwhiskerable(t, s)) {
        const int e = chain2(b, {cell_of[s], b.hcomp2(b.id2[q.v1], t)});
        const int r = lookup(q.v1, q.v2, q.h1, b.cells2[t].tgt, e);
        vb.dwhisker_ref(t, s) =
            require(r, b.cells2[t].name + " into the bottom edge of " + q.name);
      }
    }
  return vb;
}

verity_double_bicat trivial_verity() { return square_verity(discrete_bicat(cat_one())); }

}  // namespace dblkit
