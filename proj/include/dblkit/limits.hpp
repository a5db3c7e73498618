#ifndef DBLKIT_LIMITS_HPP
#define DBLKIT_LIMITS_HPP

#include <optional>
#include <vector>

#include "dblkit/fincat.hpp"

namespace dblkit {

// A (co)cone over a two-leg diagram: for pullbacks the legs leave the apex,
// for pushouts they enter it.
struct cone {
  int apex = -1;
  int leg0 = -1;
  int leg1 = -1;
  friend bool operator==(const cone&, const cone&) = default;
};

// Pullback of the cospan f: x -> z <- y : g, found by enumerating every cone
// and testing the universal property exhaustively: a winner admits exactly one
// mediating arrow from every cone. Ties (only possible in non-gaunt bases) are
// broken deterministically by smallest apex id, then lexicographic (leg0, leg1),
// so callers can treat the choice as a function of the cospan.
// Returns nullopt when no cone is universal. Throws errc::boundary_mismatch
// when f and g do not share a codomain.
std::optional<cone> pullback(const fin_cat& c, int f, int g);

// Dual: pushout of the span f: x <- z -> y : g (legs leave z), universal cocone
// with the same tie-breaking. Throws errc::boundary_mismatch when f and g do
// not share a domain.
std::optional<cone> pushout(const fin_cat& c, int f, int g);

// Independent universal-property verdicts, used by pullback/pushout internally
// and exposed so tests can re-verify results by enumeration.
bool is_pullback_cone(const fin_cat& c, int f, int g, const cone& k);
bool is_pushout_cocone(const fin_cat& c, int f, int g, const cone& k);

// All commuting cones over the cospan / cocones under the span, in
// deterministic (apex, leg0, leg1) order.
std::vector<cone> pullback_cones(const fin_cat& c, int f, int g);
std::vector<cone> pushout_cocones(const fin_cat& c, int f, int g);

// The unique mediating arrow from `from` into the universal cone `to` (both
// over the cospan f,g); nullopt when none or ambiguous. For pushouts the
// mediating arrow leaves the universal cocone.
std::optional<int> pullback_mediator(const fin_cat& c, const cone& to, const cone& from);
std::optional<int> pushout_mediator(const fin_cat& c, const cone& from, const cone& to);

}  // namespace dblkit

#endif
