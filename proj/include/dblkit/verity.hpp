#ifndef DBLKIT_VERITY_HPP
#define DBLKIT_VERITY_HPP

#include <string>
#include <vector>

#include "dblkit/bicat.hpp"
#include "dblkit/double_cat.hpp"
#include "dblkit/report.hpp"

namespace dblkit {

// A Verity double bicategory as closed tables. Two bicategories share one
// object list: horb carries the horizontal 1- and 2-cells, verb the vertical
// ones. Squares are globally numbered cells sitting in slots (v1, v2, h1, h2)
// with v1 : x1 -> y1 and v2 : x2 -> y2 vertical and h1 : x1 -> x2 and
// h2 : y1 -> y2 horizontal, drawn like a pseudo double category square:
//
//         h1
//      x1 ---> x2
//   v1 |        | v2
//      v        v
//      y1 ---> y2
//         h2
//
// Unlike a pseudo double category, both boundary directions compose weakly,
// and 2-cells of either bicategory whisker into squares along the four edges:
//   - sq_vcomp(s, t) stacks s above t, defined iff s.h2 = t.h1; the vertical
//     boundaries compose in verb.
//   - sq_hcomp(s, t) pastes s left of t, defined iff s.v2 = t.v1; the
//     horizontal boundaries compose in horb.
//   - sqhid[h] is the identity square of a horizontal 1-cell, slot
//     (id, id, h, h), the stacking unit.
//   - sqvid[v] is the identity square of a vertical 1-cell, slot
//     (v, v, id, id), the pasting unit.
//   - lwhisker(a, s) substitutes a vertical 2-cell a : v1' => v1 into the left
//     edge; rwhisker(a, s) a vertical 2-cell a : v2 => v2' into the right edge.
//   - uwhisker(t, s) substitutes a horizontal 2-cell t : h1' => h1 into the top
//     edge; dwhisker(t, s) a horizontal 2-cell t : h2 => h2' into the bottom.
//
// mode = exhaustive marks a materialized structure whose tables are total on
// compatible inputs; mode = probe tolerates -1 entries and the law checker
// skips instances it cannot evaluate.
struct verity_double_bicat {
  struct square_cell {
    int v1 = -1;  // left vertical 1-cell
    int v2 = -1;  // right vertical 1-cell
    int h1 = -1;  // top horizontal 1-cell
    int h2 = -1;  // bottom horizontal 1-cell
    std::string name;
    friend bool operator==(const square_cell&, const square_cell&) = default;
  };

  std::string name;
  fin_bicat horb;
  fin_bicat verb;
  std::vector<square_cell> squares;
  std::vector<int> sqhid;           // horizontal 1-cell -> square
  std::vector<int> sqvid;           // vertical 1-cell -> square
  std::vector<int> vcomp_sq_table;  // n_squares * n_squares, -1 where undefined
  std::vector<int> hcomp_sq_table;  // n_squares * n_squares, -1 where undefined
  std::vector<int> lwhisker_table;  // verb.n2() * n_squares, -1 where undefined
  std::vector<int> rwhisker_table;  // verb.n2() * n_squares
  std::vector<int> uwhisker_table;  // horb.n2() * n_squares
  std::vector<int> dwhisker_table;  // horb.n2() * n_squares
  check_mode mode = check_mode::exhaustive;

  int n_objects() const { return horb.n_objects(); }
  int n_squares() const { return static_cast<int>(squares.size()); }

  bool vstackable(int s, int t) const { return squares[s].h2 == squares[t].h1; }
  bool hpastable(int s, int t) const { return squares[s].v2 == squares[t].v1; }
  bool lwhiskerable(int a, int s) const { return verb.cells2[a].tgt == squares[s].v1; }
  bool rwhiskerable(int a, int s) const { return verb.cells2[a].src == squares[s].v2; }
  bool uwhiskerable(int t, int s) const { return horb.cells2[t].tgt == squares[s].h1; }
  bool dwhiskerable(int t, int s) const { return horb.cells2[t].src == squares[s].h2; }

  // accessors return -1 for absent entries and accept -1 inputs, so partial
  // results propagate instead of indexing out of range
  int sq_vcomp(int s, int t) const {
    return s < 0 || t < 0 ? -1 : vcomp_sq_table[static_cast<size_t>(s) * squares.size() + t];
  }
  int& sq_vcomp_ref(int s, int t) {
    return vcomp_sq_table[static_cast<size_t>(s) * squares.size() + t];
  }
  int sq_hcomp(int s, int t) const {
    return s < 0 || t < 0 ? -1 : hcomp_sq_table[static_cast<size_t>(s) * squares.size() + t];
  }
  int& sq_hcomp_ref(int s, int t) {
    return hcomp_sq_table[static_cast<size_t>(s) * squares.size() + t];
  }
  int lwhisker(int a, int s) const {
    return a < 0 || s < 0 ? -1 : lwhisker_table[static_cast<size_t>(a) * squares.size() + s];
  }
  int& lwhisker_ref(int a, int s) {
    return lwhisker_table[static_cast<size_t>(a) * squares.size() + s];
  }
  int rwhisker(int a, int s) const {
    return a < 0 || s < 0 ? -1 : rwhisker_table[static_cast<size_t>(a) * squares.size() + s];
  }
  int& rwhisker_ref(int a, int s) {
    return rwhisker_table[static_cast<size_t>(a) * squares.size() + s];
  }
  int uwhisker(int t, int s) const {
    return t < 0 || s < 0 ? -1 : uwhisker_table[static_cast<size_t>(t) * squares.size() + s];
  }
  int& uwhisker_ref(int t, int s) {
    return uwhisker_table[static_cast<size_t>(t) * squares.size() + s];
  }
  int dwhisker(int t, int s) const {
    return t < 0 || s < 0 ? -1 : dwhisker_table[static_cast<size_t>(t) * squares.size() + s];
  }
  int& dwhisker_ref(int t, int s) {
    return dwhisker_table[static_cast<size_t>(t) * squares.size() + s];
  }

  friend bool operator==(const verity_double_bicat&, const verity_double_bicat&) = default;
};

// The fixed law list:
//   horb-*, verb-*               the two bicategories' own laws, delegated
//   typing                       boundary and definedness of every table
//   stack-unit-top/bottom        sqhid units for stacking, up to vertical unitors
//   paste-unit-left/right        sqvid units for pasting, up to horizontal unitors
//   stack-associativity          stacking associative up to vertical associators
//   paste-associativity          pasting associative up to horizontal associators
//   interchange                  (s over u) beside (t over w)
//   left/right/up/down-whisker-functorial   identity and composite 2-cells
//   whisker-commutation          whiskers on disjoint edges commute
//   whisker-over-stacking        outer up/down whiskers slide over stacking
//   whisker-over-pasting         outer left/right whiskers slide over pasting
//   stack-exchange               s over uwhisker = dwhisker over t, middle 2-cell
//   paste-exchange               rwhisker beside t = s beside lwhisker
//   identity-square-whiskering   sqhid and sqvid natural in their 1-cell
// Materialized inputs get an exhaustive verdict; probe inputs skip instances
// with absent entries and stamp mode = probe.
law_report check_verity_laws(const verity_double_bicat& vb);

// Re-runs one recorded law instance; true when the witness re-fails.
bool replay_verity_law(const verity_double_bicat& vb, const law_result& r);

// The square a 2-cell presents: uwhisker(t, sqhid[tgt]) for a horizontal
// 2-cell, lwhisker(t, sqvid[tgt]) for a vertical one. -1 when a needed table
// entry is absent.
int cell_to_square_h(const verity_double_bicat& vb, int t);
int cell_to_square_v(const verity_double_bicat& vb, int t);

// Whether cell_to_square_h / cell_to_square_v are bijections onto the squares
// with identity boundaries, hom by hom. When a direction is bijective the
// inverse is materialized: *_cell_of_square maps each identity-boundary square
// back to its 2-cell, -1 elsewhere. An absent table entry on the way makes the
// direction not demonstrated, reported false.
struct saturation_result {
  bool horizontally = false;
  bool vertically = false;
  std::vector<int> h_cell_of_square;
  std::vector<int> v_cell_of_square;
};
saturation_result saturation(const verity_double_bicat& vb);

// Both saturation flags; meaningful once check_verity_laws passes.
bool is_weak_double_cat(const verity_double_bicat& vb);

// The Verity double bicategory of a pseudo double category: horizontal
// bicategory the discrete bicategory on vcat, vertical bicategory the
// underlying horizontal bicategory, squares transposed in place. Left and
// right whiskers stack the whiskering cell's square above or below; up and
// down whiskers substitute along the discrete 2-cells. Raises
// precondition_failed unless d's laws pass in d's own mode; the result keeps
// that mode.
verity_double_bicat double_cat_to_verity(const pseudo_double_cat& d);

// The Verity double bicategory of squares in a bicategory: horizontal
// bicategory b, vertical bicategory co(b), squares in slot (v, w, h, k) the
// 2-cells hcomp1(h, w) => hcomp1(v, k). Left whiskering by a vertical 2-cell
// a : v => v' post-composes with the right whisker a onto k; the other three
// whiskers are the analogous pre- and post-compositions. Raises
// precondition_failed unless b's laws pass in the given mode.
verity_double_bicat square_verity(const fin_bicat& b, check_mode mode = check_mode::exhaustive);

// square_verity of the discrete bicategory on the one-object one-arrow
// category: one square and nothing else.
verity_double_bicat trivial_verity();

}  // namespace dblkit

#endif
