#include "dblkit/companions.hpp"

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "dblkit/error.hpp"

namespace dblkit {

namespace {

int inv_or(const fin_bicat& b, int t) {
  if (t < 0) return -1;
  const auto u = inverse2(b, t);
  return u ? *u : -1;
}

// Folds vcomp over the cells; -1 propagates, an empty chain is rejected by
// the -2 seed never being replaced.
int chain2(const fin_bicat& b, std::initializer_list<int> cells) {
  int acc = -2;
  for (int c : cells) {
    if (c < 0) return -1;
    acc = acc == -2 ? c : b.vcomp(acc, c);
    if (acc < 0) return -1;
  }
  return acc < 0 ? -1 : acc;
}

bool unit_slot_ok(const verity_double_bicat& vb, int h, int v, int s) {
  if (s < 0 || s >= vb.n_squares()) return false;
  const int y = vb.horb.cells1[h].tgt;
  const auto& q = vb.squares[s];
  return q.v1 == v && q.v2 == vb.verb.id1[y] && q.h1 == h && q.h2 == vb.horb.id1[y];
}

bool counit_slot_ok(const verity_double_bicat& vb, int h, int v, int s) {
  if (s < 0 || s >= vb.n_squares()) return false;
  const int x = vb.horb.cells1[h].src;
  const auto& q = vb.squares[s];
  return q.v1 == vb.verb.id1[x] && q.v2 == v && q.h1 == vb.horb.id1[x] && q.h2 == h;
}

// The defining composite landing on sqvid[v]; -1 when an entry is absent.
int vertical_composite(const verity_double_bicat& vb, const companion_pair& cp) {
  const int stacked = vb.sq_vcomp(cp.counit, cp.unit);
  const int fixed = vb.lwhisker(inv_or(vb.verb, vb.verb.lunitor[cp.v]), stacked);
  return vb.rwhisker(vb.verb.runitor[cp.v], fixed);
}

// The defining composite landing on sqhid[h]; -1 when an entry is absent.
int horizontal_composite(const verity_double_bicat& vb, const companion_pair& cp) {
  const int pasted = vb.sq_hcomp(cp.counit, cp.unit);
  const int fixed = vb.uwhisker(inv_or(vb.horb, vb.horb.lunitor[cp.h]), pasted);
  return vb.dwhisker(vb.horb.runitor[cp.h], fixed);
}

// Which triangle identity fails for ae in b: 0 none, 1 first, 2 second.
// Mirrors the composites of check_adjoint_equivalence.
int failing_triangle(const fin_bicat& b, const adjoint_equivalence& ae) {
  const int t1 = chain2(b, {inv_or(b, b.lunitor[ae.l]), b.rwhisk(ae.unit, ae.l),
                            inv_or(b, b.assoc(ae.l, ae.r, ae.l)), b.lwhisk(ae.l, ae.counit),
                            b.runitor[ae.l]});
  if (t1 != b.id2[ae.l]) return 1;
  const int t2 = chain2(b, {inv_or(b, b.runitor[ae.r]), b.lwhisk(ae.r, ae.unit),
                            b.assoc(ae.r, ae.l, ae.r), b.rwhisk(ae.counit, ae.r),
                            b.lunitor[ae.r]});
  if (t2 != b.id2[ae.r]) return 2;
  return 0;
}

void require_hypothesis(bool held, const std::string& what) {
  if (!held) fail(errc::precondition_failed, what);
}

}  // namespace

bool is_companion_pair(const verity_double_bicat& vb, const companion_pair& cp) {
  if (cp.h < 0 || cp.h >= vb.horb.n1() || cp.v < 0 || cp.v >= vb.verb.n1() || cp.unit < 0 ||
      cp.unit >= vb.n_squares() || cp.counit < 0 || cp.counit >= vb.n_squares())
    fail(errc::boundary_mismatch, "companion pair id out of range in " + vb.name);
  const auto& hc = vb.horb.cells1[cp.h];
  const auto& vc = vb.verb.cells1[cp.v];
  if (hc.src != vc.src || hc.tgt != vc.tgt)
    fail(errc::boundary_mismatch, hc.name + " and " + vc.name + " do not share endpoints");
  if (!unit_slot_ok(vb, cp.h, cp.v, cp.unit))
    fail(errc::boundary_mismatch,
         "unit square " + vb.squares[cp.unit].name + " is not in the unit slot of " + hc.name);
  if (!counit_slot_ok(vb, cp.h, cp.v, cp.counit))
    fail(errc::boundary_mismatch,
         "counit square " + vb.squares[cp.counit].name + " is not in the counit slot of " + hc.name);
  return vertical_composite(vb, cp) == vb.sqvid[cp.v] &&
         horizontal_composite(vb, cp) == vb.sqhid[cp.h];
}

std::vector<companion_pair> find_companions(const verity_double_bicat& vb, int h) {
  std::vector<companion_pair> out;
  if (h < 0 || h >= vb.horb.n1()) return out;
  const int x = vb.horb.cells1[h].src;
  const int y = vb.horb.cells1[h].tgt;
  for (int v = 0; v < vb.verb.n1(); ++v) {
    if (vb.verb.cells1[v].src != x || vb.verb.cells1[v].tgt != y) continue;
    std::vector<int> units;
    std::vector<int> counits;
    for (int s = 0; s < vb.n_squares(); ++s) {
      if (unit_slot_ok(vb, h, v, s)) units.push_back(s);
      if (counit_slot_ok(vb, h, v, s)) counits.push_back(s);
    }
    for (int u : units)
      for (int c : counits) {
        const companion_pair cp{h, v, u, c};
        if (is_companion_pair(vb, cp)) out.push_back(cp);
      }
  }
  return out;
}

companion_pair compose_companions(const verity_double_bicat& vb, const companion_pair& a,
                                  const companion_pair& b) {
  if (!is_companion_pair(vb, a) || !is_companion_pair(vb, b))
    fail(errc::precondition_failed, "compose_companions needs two verified companion pairs");
  if (vb.horb.cells1[a.h].tgt != vb.horb.cells1[b.h].src)
    fail(errc::boundary_mismatch, vb.horb.cells1[a.h].name + " and " + vb.horb.cells1[b.h].name +
                                      " do not meet end to end");

  const int x = vb.horb.cells1[a.h].src;
  const int z = vb.horb.cells1[b.h].tgt;
  const int h12 = vb.horb.hcomp1(a.h, b.h);
  const int v12 = vb.verb.hcomp1(a.v, b.v);
  if (h12 < 0 || v12 < 0)
    fail(errc::construction_failed, "no chosen composite for the companion pair boundaries");

  // unit: paste a.unit before the stacking unit on b.h, straighten the bottom,
  // stack over b.unit, then straighten the right edge
  const int u1 = vb.sq_hcomp(a.unit, vb.sqhid[b.h]);
  const int u2 = vb.dwhisker(vb.horb.lunitor[b.h], u1);
  const int u3 = vb.sq_vcomp(u2, b.unit);
  const int unit = vb.rwhisker(vb.verb.lunitor[vb.verb.id1[z]], u3);

  // counit: paste the stacking unit on a.h before b.counit, straighten the
  // top, stack under a.counit, then straighten the left edge
  const int c1 = vb.sq_hcomp(vb.sqhid[a.h], b.counit);
  const int c2 = vb.uwhisker(inv_or(vb.horb, vb.horb.runitor[a.h]), c1);
  const int c3 = vb.sq_vcomp(a.counit, c2);
  const int counit = vb.lwhisker(inv_or(vb.verb, vb.verb.lunitor[vb.verb.id1[x]]), c3);

  if (unit < 0 || counit < 0)
    fail(errc::construction_failed, "a pasted unit or counit square is absent in " + vb.name);
  const companion_pair out{h12, v12, unit, counit};
  if (!is_companion_pair(vb, out))
    fail(errc::construction_failed, "the composite companion pair fails its defining equations");
  return out;
}

bool check_companion_uniqueness(const verity_double_bicat& vb, int h) {
  if (h < 0 || h >= vb.horb.n1())
    fail(errc::boundary_mismatch, "no horizontal 1-cell with that id in " + vb.name);
  require_hypothesis(saturation(vb).vertically, vb.name + " is not vertically saturated");
  require_hypothesis(is_locally_gaunt(vb.horb), vb.horb.name + " is not locally gaunt");
  require_hypothesis(is_locally_gaunt(vb.verb), vb.verb.name + " is not locally gaunt");
  const auto cps = find_companions(vb, h);
  for (const auto& cp : cps)
    if (cp.v != cps.front().v) return false;
  return true;
}

adjoint_equivalence companion_of_adjoint_equivalence(const verity_double_bicat& vb,
                                                     const adjoint_equivalence& adj,
                                                     const companion_pair& cp_l,
                                                     const companion_pair& cp_r,
                                                     std::uint64_t budget) {
  require_hypothesis(saturation(vb).vertically, vb.name + " is not vertically saturated");
  require_hypothesis(check_adjoint_equivalence(vb.horb, adj),
                     "the horizontal adjoint equivalence does not verify");
  require_hypothesis(cp_l.h == adj.l && is_companion_pair(vb, cp_l),
                     "cp_l is not a companion pair on the left 1-cell");
  require_hypothesis(cp_r.h == adj.r && is_companion_pair(vb, cp_r),
                     "cp_r is not a companion pair on the right 1-cell");

  const fin_bicat& b = vb.verb;
  const int l = cp_l.v;
  const int r = cp_r.v;
  const int x = b.cells1[l].src;
  const int y = b.cells1[l].tgt;
  const int lr = b.hcomp1(l, r);
  const int rl = b.hcomp1(r, l);
  if (lr < 0 || rl < 0)
    fail(errc::construction_failed, "no chosen vertical composite for " + b.cells1[l].name +
                                        " and " + b.cells1[r].name);

  std::uint64_t seen = 0;
  int first_failed = 0;
  for (int u = 0; u < b.n2(); ++u) {
    if (b.cells2[u].src != b.id1[x] || b.cells2[u].tgt != lr || !is_invertible2(b, u)) continue;
    for (int c = 0; c < b.n2(); ++c) {
      if (b.cells2[c].src != rl || b.cells2[c].tgt != b.id1[y] || !is_invertible2(b, c)) continue;
      if (++seen > budget)
        fail(errc::budget_exceeded, "candidate pair budget exhausted in " + vb.name);
      const adjoint_equivalence ae{l, r, u, c};
      const int tri = failing_triangle(b, ae);
      if (tri == 0) return ae;
      if (first_failed == 0) first_failed = tri;
    }
  }
  if (seen == 0)
    fail(errc::construction_failed, "no invertible unit and counit candidates exist for " +
                                        b.cells1[l].name + " and " + b.cells1[r].name);
  fail(errc::construction_failed,
       std::string("every candidate pair fails a triangle identity, the first candidate fails the ") +
           (first_failed == 1 ? "first" : "second") + " one");
}

bool is_gregarious_equivalence(const verity_double_bicat& vb, const gregarious_equivalence& g) {
  if (!check_adjoint_equivalence(vb.horb, g.hor)) return false;
  if (!check_adjoint_equivalence(vb.verb, g.ver)) return false;
  if (g.cp.h != g.hor.l || g.cp.v != g.ver.l) return false;
  return is_companion_pair(vb, g.cp);
}

gregarious_equivalence identity_gregarious(const verity_double_bicat& vb, int x) {
  if (x < 0 || x >= vb.n_objects())
    fail(errc::boundary_mismatch, "no object with that id in " + vb.name);
  gregarious_equivalence g;
  g.hor = identity_adjoint_equivalence(vb.horb, x);
  g.ver = identity_adjoint_equivalence(vb.verb, x);
  const int h = vb.horb.id1[x];
  g.cp = companion_pair{h, vb.verb.id1[x], vb.sqhid[h], vb.sqhid[h]};
  if (!is_gregarious_equivalence(vb, g))
    fail(errc::construction_failed,
         "identity gregarious equivalence at " + vb.horb.objects[x] + " failed to verify");
  return g;
}

std::vector<gregarious_equivalence> find_gregarious(const verity_double_bicat& vb, int x, int y,
                                                    std::uint64_t budget) {
  std::vector<gregarious_equivalence> out;
  if (x < 0 || x >= vb.n_objects() || y < 0 || y >= vb.n_objects()) return out;
  const auto hor_aes = find_adjoint_equivalences(vb.horb, x, y, budget);
  if (hor_aes.empty()) return out;
  const auto ver_aes = find_adjoint_equivalences(vb.verb, x, y, budget);
  for (const auto& hae : hor_aes)
    for (const auto& cp : find_companions(vb, hae.l))
      for (const auto& vae : ver_aes) {
        if (vae.l != cp.v) continue;
        const gregarious_equivalence g{hae, vae, cp};
        if (is_gregarious_equivalence(vb, g)) out.push_back(g);
      }
  return out;
}

bool is_weakly_horizontally_invariant(const verity_double_bicat& vb, std::uint64_t budget) {
  // companionless[l]: -1 unknown, else whether find_companions(vb, l) is empty
  std::vector<int> companionless(static_cast<std::size_t>(vb.horb.n1()), -1);
  for (int x = 0; x < vb.n_objects(); ++x)
    for (int y = 0; y < vb.n_objects(); ++y)
      for (const auto& ae : find_adjoint_equivalences(vb.horb, x, y, budget)) {
        if (companionless[ae.l] < 0)
          companionless[ae.l] = find_companions(vb, ae.l).empty() ? 1 : 0;
        if (companionless[ae.l] == 1) return false;
      }
  return true;
}

law_report check_equivalence_correspondence(const verity_double_bicat& vb, std::uint64_t budget) {
  require_hypothesis(is_weakly_horizontally_invariant(vb, budget),
                     vb.name + " is not weakly horizontally invariant");
  require_hypothesis(saturation(vb).vertically, vb.name + " is not vertically saturated");
  require_hypothesis(is_locally_gaunt(vb.horb), vb.horb.name + " is not locally gaunt");
  require_hypothesis(is_locally_gaunt(vb.verb), vb.verb.name + " is not locally gaunt");

  law_report rep;
  rep.mode = vb.mode;
  rep.artifact = "gregarious:" + (vb.name.empty() ? std::string("?") : vb.name);

  std::vector<char> ae_cell(static_cast<std::size_t>(vb.horb.n1()), 0);
  std::vector<char> greg_cell(ae_cell.size(), 0);
  for (int x = 0; x < vb.n_objects(); ++x)
    for (int y = 0; y < vb.n_objects(); ++y) {
      for (const auto& ae : find_adjoint_equivalences(vb.horb, x, y, budget)) ae_cell[ae.l] = 1;
      for (const auto& g : find_gregarious(vb, x, y, budget)) greg_cell[g.cp.h] = 1;
    }

  law_acc fwd("adjoint-equivalence-implies-gregarious");
  law_acc bwd("gregarious-implies-adjoint-equivalence");
  for (int h = 0; h < vb.horb.n1(); ++h) {
    fwd.tally(!ae_cell[h] || greg_cell[h], {h},
              "no gregarious equivalence extends " + vb.horb.cells1[h].name);
    bwd.tally(!greg_cell[h] || ae_cell[h], {h},
              "no adjoint equivalence extends " + vb.horb.cells1[h].name);
  }
  rep.laws.push_back(fwd.take());
  rep.laws.push_back(bwd.take());
  return rep;
}

bool gregarious_univalence_surrogate(const verity_double_bicat& vb, std::uint64_t budget) {
  require_hypothesis(is_locally_gaunt(vb.horb), vb.horb.name + " is not locally gaunt");
  require_hypothesis(is_locally_gaunt(vb.verb), vb.verb.name + " is not locally gaunt");
  require_hypothesis(saturation(vb).vertically, vb.name + " is not vertically saturated");
  require_hypothesis(is_weakly_horizontally_invariant(vb, budget),
                     vb.name + " is not weakly horizontally invariant");

  bool verdict = true;
  for (int x = 0; x < vb.n_objects() && verdict; ++x)
    for (int y = 0; y < vb.n_objects() && verdict; ++y) {
      const auto gs = find_gregarious(vb, x, y, budget);
      if (x != y) {
        if (!gs.empty()) verdict = false;
        continue;
      }
      for (const auto& g : gs)
        if (g.cp.h != vb.horb.id1[x] || g.cp.v != vb.verb.id1[x]) {
          verdict = false;
          break;
        }
    }

  if (verdict != is_globally_gaunt_surrogate(vb.horb, budget))
    fail(errc::internal, vb.name +
                             ": the gregarious verdict disagrees with horizontal gauntness; "
                             "this is a library bug");
  return verdict;
}

}  // namespace dblkit
