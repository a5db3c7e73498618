#ifndef DBLKIT_CONSTRUCTIONS_HPP
#define DBLKIT_CONSTRUCTIONS_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "dblkit/double_cat.hpp"
#include "dblkit/fincat.hpp"
#include "dblkit/limits.hpp"
#include "dblkit/profunctor.hpp"

namespace dblkit {

// Double category of commuting squares in c: objects and vertical morphisms
// are those of c, horizontal morphisms mirror the arrows of c, and there is
// exactly one square with sides (v1, v2, h1, h2) when comp(h1, v2) equals
// comp(v1, h2). Every coherence cell is an identity square, so the result is
// strict and materialized. Throws errc::malformed_table when c itself fails
// the category laws.
pseudo_double_cat square_double_cat(const fin_cat& c);

// A chosen-limit table: one cone per cospan (for pullbacks) or per span (for
// pushouts), keyed by the pair of arrow ids. Factories read the table instead
// of searching, so coherence cells are a stable function of the choice, and an
// absent key makes the corresponding composite undefined rather than wrong.
struct limit_choice {
  std::map<std::pair<int, int>, cone> at;
};

// Canonical categorical choices: the universal (co)cone found by limits.hpp
// for every cospan / span of c, with its deterministic tie-breaking. Cospans
// or spans with no universal cone are simply left out.
limit_choice canonical_pullbacks(const fin_cat& c);
limit_choice canonical_pushouts(const fin_cat& c);

// Set-level choices over skel_finset: the pullback carrier is the lex-ordered
// set of matching pairs, the pushout carrier is the quotient of the disjoint
// sum with classes numbered by least member. A carrier larger than
// carrier_bound raises errc::closure_exceeded; one within the bound but larger
// than fs.size_bound has no object to land in, so the entry is left absent.
limit_choice finset_pullbacks(const finset_cat& fs, int carrier_bound);
limit_choice finset_pushouts(const finset_cat& fs, int carrier_bound);

// Shared knobs for the span and structured cospan factories. hor_bound caps
// the horizontal carrier (exceeding it raises errc::closure_exceeded). When
// the full square set fits in square_bound and every composite is defined the
// result is materialized (mode = exhaustive); otherwise the factory emits a
// virtual structure (mode = probe) whose squares are the coherence cells, the
// identity cells and their closure under both compositions, truncated at
// square_bound. require_total demands every composite exist and converts an
// absent chosen limit into errc::missing_pullback / errc::missing_pushout.
// apex_bound, when non-negative, keeps only the spans (cospans) whose apex
// (carrier) object id is at most the bound; identity cells stay in the
// carrier regardless, and a composite that lands on an excluded apex is left
// undefined, which forces probe mode unless require_total is set.
struct span_options {
  int hor_bound = 512;
  int square_bound = 1200;
  int apex_bound = -1;
  bool require_total = false;
};

// Double category of spans in c: horizontal morphisms are spans x <- a -> y,
// composition is by chosen pullback, and a square (v1, v2, m) is an arrow
// between apexes making both induced rectangles commute. Unitors and the
// associator are the mediating comparison arrows into the chosen pullbacks.
// hor_span records the span behind each horizontal id (legs leave the apex)
// and square_arrow the apex arrow behind each square.
struct span_model {
  pseudo_double_cat d;
  struct span_data {
    int apex = -1;
    int left = -1;
    int right = -1;
  };
  std::vector<span_data> hor_span;
  std::vector<int> square_arrow;
};

span_model span_double_cat(const fin_cat& c, const limit_choice& pb,
                           const span_options& opt = {});

// Double category of structured cospans along l: c1 -> c2: objects and
// vertical morphisms come from c1, a horizontal morphism x -> y is a cospan
// l(x) -> z <- l(y) in c2, composition is by chosen pushout, and a square is
// an arrow m: z1 -> z2 with comp(l1, m) = comp(l(v1), l2) and
// comp(r1, m) = comp(l(v2), r2). Requires c2 to supply the chosen pushouts;
// hor_cospan legs enter the apex.
struct cospan_model {
  pseudo_double_cat d;
  struct cospan_data {
    int apex = -1;
    int left = -1;
    int right = -1;
  };
  std::vector<cospan_data> hor_cospan;
  std::vector<int> square_arrow;
};

cospan_model structured_cospan_double_cat(const fin_cat& c1, const fin_cat& c2,
                                          const fin_functor& l, const limit_choice& po,
                                          const span_options& opt = {});

// Seed data for the profunctor double category: a finite list of categories
// (the objects), functors between them (vertical generators) and profunctors
// (horizontal generators), all referring to categories by index.
struct prof_seed {
  std::vector<fin_cat> cats;
  struct vfun {
    int src = -1;
    int tgt = -1;
    fin_functor f;
  };
  struct hprof {
    int src = -1;
    int tgt = -1;
    fin_profunctor p;
  };
  std::vector<vfun> functors;
  std::vector<hprof> profs;
};

// closure_depth counts composition passes over the horizontal carrier: each
// pass composes every compatible pair already present, so depth 2 reaches the
// four-fold composites that associativity probes need. Carrier growth past
// hor_bound or vert_bound raises errc::closure_exceeded.
struct prof_options {
  int closure_depth = 2;
  int hor_bound = 96;
  int vert_bound = 64;
  int square_bound = 900;
};

// family[d][c] maps the top profunctor's value(d, c) into the bottom one's
// value at the functor images, exactly as in is_prof_iso.
using prof_family = std::vector<std::vector<std::vector<int>>>;

// Virtual double category of profunctors: objects are the seed categories,
// vertical morphisms the seed functors closed under composition, horizontal
// morphisms the seed profunctors plus hom profunctors closed to closure_depth,
// and squares are natural families enumerated from the identity and coherence
// cells and closed under both compositions. Composition of horizontal cells is
// the coend composite; unitors and the associator are the canonical class
// bijections. Always probe mode. The model maps every id back to its payload.
struct prof_model {
  pseudo_double_cat d;
  std::vector<fin_cat> cats;
  std::vector<fin_functor> vert_functor;
  std::vector<fin_profunctor> hor_prof;
  std::vector<prof_family> square_family;
};

prof_model prof_double_cat(const prof_seed& seed, const prof_options& opt = {});

}  // namespace dblkit

#endif
