#ifndef DBLKIT_DOUBLE_CAT_HPP
#define DBLKIT_DOUBLE_CAT_HPP

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dblkit/bicat.hpp"
#include "dblkit/fincat.hpp"
#include "dblkit/report.hpp"

namespace dblkit {

// A pseudo double category as closed tables. Objects and vertical morphisms
// form vcat; horizontal morphisms and squares carry global ids.
//
// A square s is drawn with v1 on the left, v2 on the right, h1 on top and h2
// on the bottom:
//
//        h1
//     x ---> y
//  v1 |      | v2
//     v      v
//     x'---> y'
//        h2
//
// so src(h1) = src(v1), tgt(h1) = src(v2), src(h2) = tgt(v1), tgt(h2) = tgt(v2).
// All compositions are diagrammatic:
//   - hcomp(h, k) is "h then k" for horizontal 1-cells.
//   - sq_vcomp(s, t) stacks s above t, defined iff s.h2 = t.h1.
//   - sq_hcomp(s, t) pastes s left of t, defined iff s.v2 = t.v1.
//   - sqvid[h] is the vertical identity square on h, the unit of sq_vcomp.
//   - sqhid[v] is the horizontal identity square on a vertical arrow v.
//   - lunitor[h]: hcomp(horid[x], h) => h and runitor[h]: hcomp(h, horid[y]) => h
//     as squares with identity vertical sides.
//   - associator[{h1,h2,h3}]: hcomp(h1, hcomp(h2,h3)) => hcomp(hcomp(h1,h2), h3).
//
// mode = exhaustive marks a materialized structure: every table is total on
// composable inputs. mode = probe marks a virtual structure evaluated on a
// finite carrier: table entries may be -1 (absent) and the law checker skips
// instances it cannot evaluate, reporting mode = probe.
//
// hor_set_presented records whether the horizontal morphisms were given as one
// flat set of ids (true) or as object-indexed families glued together (false).
// Set-presentation is what the symmetric univalence surrogate asks about; the
// flag is declared by whoever built the structure.
struct pseudo_double_cat {
  struct hor_cell {
    int src = -1;
    int tgt = -1;
    std::string name;
    friend bool operator==(const hor_cell&, const hor_cell&) = default;
  };
  struct square_cell {
    int v1 = -1;  // left vertical arrow
    int v2 = -1;  // right vertical arrow
    int h1 = -1;  // top horizontal morphism
    int h2 = -1;  // bottom horizontal morphism
    std::string name;
    friend bool operator==(const square_cell&, const square_cell&) = default;
  };

  std::string name;
  fin_cat vcat;
  std::vector<hor_cell> hors;
  std::vector<square_cell> squares;
  std::vector<int> horid;          // object -> horizontal morphism
  std::vector<int> hcomp_table;    // n_hors * n_hors, -1 where undefined
  std::vector<int> sqvid;          // horizontal morphism -> square
  std::vector<int> sqhid;          // vertical arrow -> square
  std::vector<int> vcomp_sq_table; // n_squares * n_squares, -1 where undefined
  std::vector<int> hcomp_sq_table; // n_squares * n_squares, -1 where undefined
  std::vector<int> lunitor;        // horizontal morphism -> square, -1 allowed in probe mode
  std::vector<int> runitor;        // horizontal morphism -> square, -1 allowed in probe mode
  std::map<std::array<int, 3>, int> associator;
  check_mode mode = check_mode::exhaustive;
  bool hor_set_presented = true;

  int n_objects() const { return vcat.n_objects(); }
  int n_vert() const { return vcat.n_arrows(); }
  int n_hors() const { return static_cast<int>(hors.size()); }
  int n_squares() const { return static_cast<int>(squares.size()); }

  bool hcomposable(int h, int k) const { return hors[h].tgt == hors[k].src; }
  bool vstackable(int s, int t) const { return squares[s].h2 == squares[t].h1; }
  bool hpastable(int s, int t) const { return squares[s].v2 == squares[t].v1; }

  // composition accessors return -1 for absent entries and accept -1 inputs,
  // so partial results propagate instead of indexing out of range
  int hcomp(int h, int k) const {
    return h < 0 || k < 0 ? -1 : hcomp_table[static_cast<size_t>(h) * hors.size() + k];
  }
  int& hcomp_ref(int h, int k) { return hcomp_table[static_cast<size_t>(h) * hors.size() + k]; }
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
  int assoc(int h1, int h2, int h3) const {
    auto it = associator.find({h1, h2, h3});
    return it == associator.end() ? -1 : it->second;
  }

  friend bool operator==(const pseudo_double_cat&, const pseudo_double_cat&) = default;
};

// The fixed law list:
//   vcat-*                             vertical category laws, delegated
//   typing                             boundary and definedness of every table
//   square-vertical-identity           sqvid units for stacking
//   square-vertical-associativity      stacking associative
//   horizontal-identity-functorial     sqhid on identities and composites
//   horizontal-composition-functorial  sqvid respects hcomp
//   interchange                        (s1 over s2) beside (t1 over t2)
//   lunitor/runitor/associator-naturality    in all square arguments
//   lunitor/runitor/associator-invertibility vertical inverses exist
//   triangle, pentagon
// Materialized inputs get an exhaustive verdict; probe inputs skip instances
// with absent entries and stamp mode = probe.
law_report check_double_laws(const pseudo_double_cat& d);

// Same list run as for a strict double category: adds strict-unitality and
// strict-associativity of hcomp and an identity-coherence law requiring every
// unitor/associator component to be the vertical identity square. On a strict
// input the shared laws agree with check_double_laws verdict for verdict.
law_report check_strict_double_laws(const pseudo_double_cat& d);

// Re-runs one recorded law instance; true when the witness re-fails.
bool replay_double_law(const pseudo_double_cat& d, const law_result& r);

// Inverse under stacking: s' with s over s' = sqvid[s.h1] and s' over s =
// sqvid[s.h2]; first candidate in id order.
std::optional<int> vertical_inverse_square(const pseudo_double_cat& d, int s);

// Every unitor/associator component sits at equal horizontal endpoints and is
// the vertical identity square there. Probe inputs are judged on present
// components only.
bool is_strict(const pseudo_double_cat& d);

enum class set_level_kind { strict_double_setcat, pseudo_double_setcat, not_demonstrated };
const char* set_level_name(set_level_kind k);

// Finite closed tables witness the set conditions, so materialized inputs
// classify by is_strict; probe inputs are not demonstrated either way.
set_level_kind set_level(const pseudo_double_cat& d);

// hom(x, y) of horizontal morphisms: objects are the members of hor(x, y),
// arrows the squares between them with identity vertical sides, composition
// by stacking. The maps recover global ids.
struct dbl_hom_view {
  fin_cat cat;
  std::vector<int> object_of;  // hom object -> global hor (or vertical arrow)
  std::vector<int> square_of;  // hom arrow  -> global square
};
dbl_hom_view horizontal_hom_category(const pseudo_double_cat& d, int x, int y);

// hom(x, y) of vertical arrows: objects the vertical arrows x -> y, arrows the
// squares with horizontal identity sides, composition by pasting carried back
// across hcomp(horid, horid) = horid along the left unitor.
dbl_hom_view vertical_hom_category(const pseudo_double_cat& d, int x, int y);

// Objects with horizontal morphisms as arrows under hcomp. Demands on-the-nose
// units and associativity; raises not_strict otherwise.
fin_cat horizontal_category(const pseudo_double_cat& d);

struct univalence_verdict {
  bool univalent = false;
  bool symmetric = false;
  std::string details;
};

// univalent: vcat gaunt and every horizontal_hom_category gaunt. symmetric:
// additionally strict, horizontal morphisms set-presented, horizontal_category
// gaunt, and every vertical_hom_category gaunt; reported false with a reason
// when the input is not strict. Demands a materialized input: gauntness of a
// probe fragment is not decidable, so probe mode raises precondition_failed.
univalence_verdict univalence_surrogate(const pseudo_double_cat& d);
// The strict-only entry point for the symmetric half; raises not_strict on a
// non-strict input, precondition_failed on a probe input.
bool symmetric_univalence_surrogate(const pseudo_double_cat& d);

// Objects and 1-cells from vcat; 2-cells the squares with horizontal identity
// sides; 2-cell composition within a hom pastes horizontally and is carried
// back across hcomp(horid, horid) = horid along the left unitor; whiskering is
// stacking. Coherence cells are identities, so a lawful materialized input
// yields a strict bicategory.
fin_bicat underlying_vertical_two_cat(const pseudo_double_cat& d);

// Objects from vcat, 1-cells the horizontal morphisms, 2-cells the squares
// with identity vertical sides; vcomp is stacking, hcomp2 is pasting, and the
// coherence cells are the unitors and associator of d. Probe inputs yield
// partial tables to be checked with check_bicat_laws in probe mode.
fin_bicat underlying_horizontal_bicat(const pseudo_double_cat& d);

// One object, its identities, and nothing else.
pseudo_double_cat trivial_double_cat();

}  // namespace dblkit

#endif
