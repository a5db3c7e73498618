#ifndef DBLKIT_COMPANIONS_HPP
#define DBLKIT_COMPANIONS_HPP

#include <cstdint>
#include <vector>

#include "dblkit/bicat.hpp"
#include "dblkit/report.hpp"
#include "dblkit/verity.hpp"

namespace dblkit {

// A companion pair names a horizontal 1-cell h : x -> y and a vertical 1-cell
// v : x -> y together with a unit square in slot (v, id, h, id) and a counit
// square in slot (id, v, id, h). The pair is valid when the two composites
//   rwhisker(runitor[v], lwhisker(lunitor[v]^-1, counit stacked over unit))
//   dwhisker(runitor[h], uwhisker(lunitor[h]^-1, counit pasted before unit))
// are the identity squares sqvid[v] and sqhid[h].
struct companion_pair {
  int h = -1;
  int v = -1;
  int unit = -1;
  int counit = -1;
  friend bool operator==(const companion_pair&, const companion_pair&) = default;
};

// Checks the two defining equations. Raises boundary_mismatch when an id is
// out of range, h and v do not share endpoints, or the unit and counit sit in
// the wrong slots; an absent composite on the way makes the verdict false.
bool is_companion_pair(const verity_double_bicat& vb, const companion_pair& cp);

// Complete list of companions of h over (v, unit, counit) in id order.
std::vector<companion_pair> find_companions(const verity_double_bicat& vb, int h);

// Pastes two companion pairs along a shared middle object into a companion
// pair for the chosen composites of their 1-cells. Raises boundary_mismatch
// when the pairs do not meet end to end, precondition_failed when either input
// fails its own equations, and construction_failed when a needed composite is
// absent or the composite pair does not verify.
companion_pair compose_companions(const verity_double_bicat& vb, const companion_pair& a,
                                  const companion_pair& b);

// True when every companion of h names the same vertical 1-cell. Hypotheses
// are checked first, vertical saturation and local gauntness of both
// bicategories, and a failing one raises precondition_failed naming it.
bool check_companion_uniqueness(const verity_double_bicat& vb, int h);

// Transfers a horizontal adjoint equivalence along companions of its two
// sides: scans invertible unit and counit candidates for (cp_l.v, cp_r.v) in
// the vertical bicategory and returns the first pair passing both triangle
// identities. Raises precondition_failed unless vb is vertically saturated,
// adj verifies, and cp_l, cp_r are companions of adj.l and adj.r;
// construction_failed names the first unverifiable triangle; budget caps the
// candidate pairs examined and raises budget_exceeded past it.
adjoint_equivalence companion_of_adjoint_equivalence(const verity_double_bicat& vb,
                                                     const adjoint_equivalence& adj,
                                                     const companion_pair& cp_l,
                                                     const companion_pair& cp_r,
                                                     std::uint64_t budget = 1u << 20);

// A horizontal adjoint equivalence and a vertical adjoint equivalence whose
// left 1-cells form a companion pair.
struct gregarious_equivalence {
  adjoint_equivalence hor;
  adjoint_equivalence ver;
  companion_pair cp;
  friend bool operator==(const gregarious_equivalence&, const gregarious_equivalence&) = default;
};

// All three components verify and cp links hor.l with ver.l. Raises
// boundary_mismatch on out-of-range companion ids.
bool is_gregarious_equivalence(const verity_double_bicat& vb, const gregarious_equivalence& g);

// Identity adjoint equivalences on x linked by the identity companion pair,
// whose unit and counit are both the stacking unit on id1[x]; verified, and
// raises construction_failed when the verification fails.
gregarious_equivalence identity_gregarious(const verity_double_bicat& vb, int x);

// Complete list of gregarious equivalences from x to y, ordered by horizontal
// adjoint equivalence, then companion, then vertical adjoint equivalence.
// budget caps each adjoint equivalence search.
std::vector<gregarious_equivalence> find_gregarious(const verity_double_bicat& vb, int x, int y,
                                                    std::uint64_t budget = 1u << 20);

// Every horizontal adjoint equivalence has at least one companion.
bool is_weakly_horizontally_invariant(const verity_double_bicat& vb,
                                      std::uint64_t budget = 1u << 20);

// For every horizontal 1-cell h: h extends to a horizontal adjoint
// equivalence iff some vertical 1-cell makes h part of a gregarious
// equivalence. Hypotheses are checked first, weak horizontal invariance, then
// vertical saturation, then local gauntness of both bicategories, and a
// failing one raises precondition_failed naming it. Laws:
//   adjoint-equivalence-implies-gregarious
//   gregarious-implies-adjoint-equivalence
law_report check_equivalence_correspondence(const verity_double_bicat& vb,
                                            std::uint64_t budget = 1u << 20);

// Under the same hypotheses: true when no gregarious equivalence joins
// distinct objects and every gregarious self equivalence has the identity
// 1-cells for its companion pair. The verdict is cross-checked against
// is_globally_gaunt_surrogate on the horizontal bicategory; a disagreement is
// a library bug and raises errc::internal.
bool gregarious_univalence_surrogate(const verity_double_bicat& vb,
                                     std::uint64_t budget = 1u << 20);

}  // namespace dblkit

#endif
