#ifndef DBLKIT_BICAT_HPP
#define DBLKIT_BICAT_HPP

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dblkit/fincat.hpp"
#include "dblkit/report.hpp"

namespace dblkit {

// A finite bicategory as closed tables with globally numbered cells.
// Conventions, fixed once and used by every law below:
//   - 1-cell composition is diagrammatic: hcomp1(f, g) is "f then g".
//   - vertical 2-cell composition is diagrammatic: vcomp(a, b) is "a then b",
//     defined iff tgt2(a) = src2(b) as 1-cells.
//   - horizontal 2-cell composition hcomp2(a, b) maps f1 => g1 and f2 => g2 to
//     hcomp1(f1,f2) => hcomp1(g1,g2), defined iff the underlying 1-cells are
//     composable.
//   - lunitor[f]: hcomp1(id1[src], f) => f, runitor[f]: hcomp1(f, id1[tgt]) => f.
//   - associator[{f,g,h}]: hcomp1(f, hcomp1(g,h)) => hcomp1(hcomp1(f,g), h).
struct fin_bicat {
  struct cell1 {
    int src = -1;
    int tgt = -1;
    std::string name;
    friend bool operator==(const cell1&, const cell1&) = default;
  };
  struct cell2 {
    int src = -1;  // 1-cell id; src and tgt are parallel
    int tgt = -1;
    std::string name;
    friend bool operator==(const cell2&, const cell2&) = default;
  };

  std::string name;
  std::vector<std::string> objects;
  std::vector<cell1> cells1;
  std::vector<cell2> cells2;
  std::vector<int> id1;           // object -> 1-cell
  std::vector<int> id2;           // 1-cell -> 2-cell
  std::vector<int> vcomp_table;   // n2 * n2, -1 where undefined
  std::vector<int> hcomp1_table;  // n1 * n1, -1 where undefined
  std::vector<int> hcomp2_table;  // n2 * n2, -1 where undefined
  std::vector<int> lunitor;       // 1-cell -> 2-cell
  std::vector<int> runitor;       // 1-cell -> 2-cell
  std::map<std::array<int, 3>, int> associator;

  int n_objects() const { return static_cast<int>(objects.size()); }
  int n1() const { return static_cast<int>(cells1.size()); }
  int n2() const { return static_cast<int>(cells2.size()); }

  bool vcomposable(int a, int b) const { return cells2[a].tgt == cells2[b].src; }
  bool hcomposable1(int f, int g) const { return cells1[f].tgt == cells1[g].src; }
  bool hcomposable2(int a, int b) const {
    return hcomposable1(cells2[a].src, cells2[b].src);
  }

  // composition accessors return -1 for absent entries and accept -1 inputs,
  // so partial results propagate instead of indexing out of range
  int vcomp(int a, int b) const {
    return (a < 0 || b < 0) ? -1 : vcomp_table[static_cast<size_t>(a) * cells2.size() + b];
  }
  int& vcomp_ref(int a, int b) { return vcomp_table[static_cast<size_t>(a) * cells2.size() + b]; }
  int hcomp1(int f, int g) const {
    return (f < 0 || g < 0) ? -1 : hcomp1_table[static_cast<size_t>(f) * cells1.size() + g];
  }
  int& hcomp1_ref(int f, int g) {
    return hcomp1_table[static_cast<size_t>(f) * cells1.size() + g];
  }
  int hcomp2(int a, int b) const {
    return (a < 0 || b < 0) ? -1 : hcomp2_table[static_cast<size_t>(a) * cells2.size() + b];
  }
  int& hcomp2_ref(int a, int b) {
    return hcomp2_table[static_cast<size_t>(a) * cells2.size() + b];
  }
  int assoc(int f, int g, int h) const {
    if (f < 0 || g < 0 || h < 0) return -1;
    auto it = associator.find({f, g, h});
    return it == associator.end() ? -1 : it->second;
  }

  // whiskering: f left of t is hcomp2(id2[f], t); t right of g is hcomp2(t, id2[g])
  int lwhisk(int f, int t) const { return (f < 0 || t < 0) ? -1 : hcomp2(id2[f], t); }
  int rwhisk(int t, int g) const { return (t < 0 || g < 0) ? -1 : hcomp2(t, id2[g]); }

  // objects under a 2-cell
  int src_obj2(int a) const { return cells1[cells2[a].src].src; }
  int tgt_obj2(int a) const { return cells1[cells2[a].src].tgt; }

  friend bool operator==(const fin_bicat&, const fin_bicat&) = default;
};

// Bicategory laws over the tables:
//   typing; vertical identity/associativity per hom; hcomp2 preserves 2-cell
//   identities; interchange; naturality of lunitor/runitor/associator;
//   invertibility of all three; triangle; pentagon.
// In exhaustive mode every table must be total on composable inputs and an
// instance that meets an absent entry fails. In probe mode tables may be
// partial (-1 entries, -1 unitors, missing associator keys): definedness is
// only required to imply composability, instances that meet an absent entry
// are skipped, and the report is stamped mode = probe.
law_report check_bicat_laws(const fin_bicat& b, check_mode mode = check_mode::exhaustive);
// Re-runs one recorded law instance; true when the witness re-fails.
bool replay_bicat_law(const fin_bicat& b, const law_result& r,
                      check_mode mode = check_mode::exhaustive);

// Vertical inverse of a 2-cell, if any (first candidate in id order).
std::optional<int> inverse2(const fin_bicat& b, int t);
bool is_invertible2(const fin_bicat& b, int t);

// hom(x, y) as a finite category: objects are the 1-cells x -> y, arrows the
// 2-cells between them, composition vcomp. The maps recover global ids.
struct hom_view {
  fin_cat cat;
  std::vector<int> cell1_of;  // hom object -> global 1-cell
  std::vector<int> cell2_of;  // hom arrow  -> global 2-cell
};
hom_view hom_category(const fin_bicat& b, int x, int y);

// 2-cells reversed in every hom; unitor/associator components become their
// inverses so they keep their stated directions. co(co(B)) = B table-wise.
fin_bicat co_dual(const fin_bicat& b);

// l: x -> y, r: y -> x, unit: id1[x] => hcomp1(l, r), counit: hcomp1(r, l) => id1[y],
// both invertible, both triangle identities.
struct adjoint_equivalence {
  int l = -1;
  int r = -1;
  int unit = -1;
  int counit = -1;
  friend bool operator==(const adjoint_equivalence&, const adjoint_equivalence&) = default;
};

bool check_adjoint_equivalence(const fin_bicat& b, const adjoint_equivalence& ae);

// Complete list over (l, r, invertible unit, invertible counit) in id order.
// `budget` caps the number of candidate (unit, counit) pairs examined; going
// past it raises errc::budget_exceeded rather than returning a partial list.
std::vector<adjoint_equivalence> find_adjoint_equivalences(const fin_bicat& b, int x, int y,
                                                           std::uint64_t budget = 1u << 20);

// (id1[x], id1[x]) with unit runitor^-1 and counit lunitor; verified.
adjoint_equivalence identity_adjoint_equivalence(const fin_bicat& b, int x);

// Every hom category is gaunt.
bool is_locally_gaunt(const fin_bicat& b);
// No adjoint equivalence between distinct objects, and every self adjoint
// equivalence has l and r 2-cell-isomorphic to the identity 1-cell.
bool is_globally_gaunt_surrogate(const fin_bicat& b, std::uint64_t budget = 1u << 20);

// Identity 1-cells are strict units, hcomp1 is associative on the nose, and
// every unitor/associator component is an identity 2-cell.
bool is_strict(const fin_bicat& b);

// Set-level predicates on finite carriers. Tables are finite, so the set
// conditions reduce to well-formedness; the 2-setcategory predicate further
// requires every coherence cell to be an identity (strictness).
bool is_bisetcategory(const fin_bicat& b);
bool is_two_setcategory(const fin_bicat& b);

// --- stock bicategories -------------------------------------------------------

// Only identity 2-cells; 1-cell composition from c. Strict.
fin_bicat discrete_bicat(const fin_cat& c);
// One object, 1-cells the 2-element group {e, s}, discrete homs. Strict.
fin_bicat delooping_z2();
// One object, 1-cells the ordered monoid {u <= a} with a absorbing; a unique
// 2-cell f => g iff f <= g. Strict, locally gaunt, not discrete.
fin_bicat poset_monoid_bicat();

}  // namespace dblkit

#endif
