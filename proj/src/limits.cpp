#include "dblkit/limits.hpp"

#include "dblkit/error.hpp"

namespace dblkit {

std::vector<cone> pullback_cones(const fin_cat& c, int f, int g) {
  // cones (w, p: w -> src(f), q: w -> src(g)) with p;f = q;g
  const int x = c.arrows[f].src, y = c.arrows[g].src;
  std::vector<cone> out;
  for (int w = 0; w < c.n_objects(); ++w)
    for (int p : c.hom(w, x))
      for (int q : c.hom(w, y))
        if (c.comp(p, f) == c.comp(q, g)) out.push_back({w, p, q});
  return out;
}

std::vector<cone> pushout_cocones(const fin_cat& c, int f, int g) {
  // cocones (w, p: tgt(f) -> w, q: tgt(g) -> w) with f;p = g;q
  const int x = c.arrows[f].tgt, y = c.arrows[g].tgt;
  std::vector<cone> out;
  for (int w = 0; w < c.n_objects(); ++w)
    for (int p : c.hom(x, w))
      for (int q : c.hom(y, w))
        if (c.comp(f, p) == c.comp(g, q)) out.push_back({w, p, q});
  return out;
}

std::optional<int> pullback_mediator(const fin_cat& c, const cone& to, const cone& from) {
  std::optional<int> found;
  for (int m : c.hom(from.apex, to.apex)) {
    if (c.comp(m, to.leg0) == from.leg0 && c.comp(m, to.leg1) == from.leg1) {
      if (found) return std::nullopt;  // ambiguous
      found = m;
    }
  }
  return found;
}

std::optional<int> pushout_mediator(const fin_cat& c, const cone& from, const cone& to) {
  std::optional<int> found;
  for (int m : c.hom(from.apex, to.apex)) {
    if (c.comp(from.leg0, m) == to.leg0 && c.comp(from.leg1, m) == to.leg1) {
      if (found) return std::nullopt;
      found = m;
    }
  }
  return found;
}

namespace {

void check_cospan(const fin_cat& c, int f, int g) {
  if (f < 0 || f >= c.n_arrows() || g < 0 || g >= c.n_arrows())
    fail(errc::malformed_table, "pullback: unknown arrow ids");
  if (c.arrows[f].tgt != c.arrows[g].tgt)
    fail(errc::boundary_mismatch, "pullback: arrows do not share a codomain");
}

void check_span(const fin_cat& c, int f, int g) {
  if (f < 0 || f >= c.n_arrows() || g < 0 || g >= c.n_arrows())
    fail(errc::malformed_table, "pushout: unknown arrow ids");
  if (c.arrows[f].src != c.arrows[g].src)
    fail(errc::boundary_mismatch, "pushout: arrows do not share a domain");
}

bool cone_less(const cone& a, const cone& b) {
  if (a.apex != b.apex) return a.apex < b.apex;
  if (a.leg0 != b.leg0) return a.leg0 < b.leg0;
  return a.leg1 < b.leg1;
}

}  // namespace

bool is_pullback_cone(const fin_cat& c, int f, int g, const cone& k) {
  if (c.comp(k.leg0, f) != c.comp(k.leg1, g)) return false;
  for (const cone& other : pullback_cones(c, f, g))
    if (!pullback_mediator(c, k, other)) return false;
  return true;
}

bool is_pushout_cocone(const fin_cat& c, int f, int g, const cone& k) {
  if (c.comp(f, k.leg0) != c.comp(g, k.leg1)) return false;
  for (const cone& other : pushout_cocones(c, f, g))
    if (!pushout_mediator(c, k, other)) return false;
  return true;
}

std::optional<cone> pullback(const fin_cat& c, int f, int g) {
  check_cospan(c, f, g);
  std::optional<cone> best;
  for (const cone& k : pullback_cones(c, f, g)) {
    if (best && !cone_less(k, *best)) continue;
    if (is_pullback_cone(c, f, g, k)) best = k;
  }
  return best;
}

std::optional<cone> pushout(const fin_cat& c, int f, int g) {
  check_span(c, f, g);
  std::optional<cone> best;
  for (const cone& k : pushout_cocones(c, f, g)) {
    if (best && !cone_less(k, *best)) continue;
    if (is_pushout_cocone(c, f, g, k)) best = k;
  }
  return best;
}

}  // namespace dblkit
