#ifndef DBLKIT_PROFUNCTOR_HPP
#define DBLKIT_PROFUNCTOR_HPP

#include <array>
#include <string>
#include <vector>

#include "dblkit/fincat.hpp"
#include "dblkit/report.hpp"

namespace dblkit {

// A profunctor P: C -|-> D, i.e. a functor D^op x C -> Set as tables.
// value(d, c) is the finite set {0, ..., count[d][c] - 1}.
//   left  action (contravariant, by D-arrows): g: d1 -> d2 sends value(d2, c)
//     to value(d1, c); stored as left[g][c][elem].
//   right action (covariant, by C-arrows): f: c1 -> c2 sends value(d, c1) to
//     value(d, c2); stored as right[f][d][elem].
struct fin_profunctor {
  std::string name;
  std::vector<std::vector<int>> count;               // [d][c]
  std::vector<std::vector<std::vector<int>>> left;   // [D-arrow][c][elem]
  std::vector<std::vector<std::vector<int>>> right;  // [C-arrow][d][elem]

  int n_tgt() const { return static_cast<int>(count.size()); }
  int n_src() const { return count.empty() ? 0 : static_cast<int>(count[0].size()); }
  // canonical table serialization (name excluded); equal keys = equal tables
  std::string intern_key() const;
};

// Typing of all action tables, identity actions, functoriality of both
// actions, and the bimodule commutation g.(e.f) = (g.e).f.
law_report check_profunctor_laws(const fin_cat& src, const fin_cat& tgt, const fin_profunctor& p);

// hom-profunctor of C: value(d, c) = hom(d, c) with elements indexed by the
// position of the arrow in hom(d, c) (ascending arrow ids).
fin_profunctor hom_profunctor(const fin_cat& c);
// arrow id of the element `e` of hom_profunctor slot (d, c), and back
int hom_prof_arrow(const fin_cat& c, int d, int cc, int e);
int hom_prof_elem(const fin_cat& c, int arrow);

// Profunctor of a functor F: C1 -> C2: value(y, x) = hom_{C2}(y, F x).
// The cited description of this construction is ill-typed as printed; this is
// the unique variance under which (F, repr(F)) is a companion pair.
fin_profunctor representable_profunctor(const fin_cat& c1, const fin_cat& c2, const fin_functor& f);

// Composite of P: C -|-> D and Q: D -|-> E along D, as the coend: elements of
// value(e, c) are classes of pairs (q in Q(e, d), p in P(d, c)) under the
// zig-zag relation (q.f, p) ~ (q, f.p) for f: d -> d'. Pairs are enumerated in
// (d, q, p) order, classes take the least pair index as representative and are
// renumbered in representative order, so composition is canonical.
// Throws errc::middle_mismatch if the middle category's object count differs.
struct prof_composite {
  fin_profunctor prof;  // C -|-> E
  struct slot {
    std::vector<std::array<int, 3>> pairs;  // (d, q, p) in enumeration order
    std::vector<int> class_of;              // pair index -> composite element
  };
  std::vector<std::vector<slot>> slots;  // [e][c]

  int class_of_pair(int e, int c, int d, int q, int p) const;
};

prof_composite prof_compose(const fin_cat& cat_c, const fin_cat& cat_d, const fin_cat& cat_e,
                            const fin_profunctor& p, const fin_profunctor& q);

// family[d][c] maps a's value(d, c) into b's value(d, c); true when every
// component is a bijection commuting with both actions.
bool is_prof_iso(const fin_cat& src, const fin_cat& tgt, const fin_profunctor& a,
                 const fin_profunctor& b, const std::vector<std::vector<std::vector<int>>>& family);

}  // namespace dblkit

#endif
