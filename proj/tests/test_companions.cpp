#include <doctest.h>

#include <vector>

#include "dblkit/bicat.hpp"
#include "dblkit/companions.hpp"
#include "dblkit/constructions.hpp"
#include "dblkit/double_cat.hpp"
#include "dblkit/error.hpp"
#include "dblkit/fincat.hpp"
#include "dblkit/verity.hpp"

using namespace dblkit;

namespace {

// Same fixture as the double category tests: one object, horizontal morphisms
// Z/2, a Z/2 fiber of squares over each, and a 3-cocycle associator. With
// twisted = true both unitors become s1 globally.
pseudo_double_cat z2_cocycle_double(bool twisted = false) {
  pseudo_double_cat d;
  d.name = twisted ? "z2_cocycle_twisted" : "z2_cocycle";
  d.vcat = cat_one();
  d.hors = {{0, 0, "h0"}, {0, 0, "h1"}};
  d.horid = {0};
  d.hcomp_table.assign(4, -1);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) d.hcomp_ref(i, j) = (i + j) % 2;
  for (int i = 0; i < 2; ++i)
    for (int a = 0; a < 2; ++a)
      d.squares.push_back({0, 0, i, i, "s" + std::to_string(a) + "_h" + std::to_string(i)});
  d.sqvid = {0, 2};
  d.sqhid = {0};
  d.vcomp_sq_table.assign(16, -1);
  d.hcomp_sq_table.assign(16, -1);
  for (int i = 0; i < 2; ++i)
    for (int a = 0; a < 2; ++a)
      for (int j = 0; j < 2; ++j)
        for (int b = 0; b < 2; ++b) {
          const int s = 2 * i + a, t = 2 * j + b;
          if (i == j) d.sq_vcomp_ref(s, t) = 2 * i + (a + b) % 2;
          d.sq_hcomp_ref(s, t) = 2 * ((i + j) % 2) + (a + b) % 2;
        }
  const int l = twisted ? 1 : 0;
  d.lunitor = {l, 2 + l};
  d.runitor = {l, 2 + l};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k)
        d.associator[{i, j, k}] = 2 * ((i + j + k) % 2) + (i * j * k) % 2;
  return d;
}

// Walking isomorphism as vertical data only: the horizontal morphisms are the
// two identities and every square is the horizontal identity on a vertical
// arrow. The derived horizontal bicategory then has an adjoint equivalence
// between the two objects while no vertical 1-cell joins them.
pseudo_double_cat vertical_only_iso() {
  pseudo_double_cat d;
  d.name = "vertical_iso";
  d.vcat = walking_iso();
  d.hors = {{0, 0, "hid_a"}, {1, 1, "hid_b"}};
  d.horid = {0, 1};
  d.hcomp_table.assign(4, -1);
  d.hcomp_ref(0, 0) = 0;
  d.hcomp_ref(1, 1) = 1;
  for (int u = 0; u < d.vcat.n_arrows(); ++u)
    d.squares.push_back({u, u, d.horid[d.vcat.arrows[u].src], d.horid[d.vcat.arrows[u].tgt],
                         "sq_" + d.vcat.arrows[u].name});
  d.sqvid = {0, 1};
  d.sqhid = {0, 1, 2, 3};
  const int ns = d.n_squares();
  d.vcomp_sq_table.assign(static_cast<size_t>(ns) * ns, -1);
  d.hcomp_sq_table.assign(static_cast<size_t>(ns) * ns, -1);
  for (int u = 0; u < ns; ++u)
    for (int w = 0; w < ns; ++w) {
      if (d.vcat.composable(u, w)) d.sq_vcomp_ref(u, w) = d.vcat.comp(u, w);
      if (u == w) d.sq_hcomp_ref(u, w) = u;
    }
  d.lunitor = {0, 1};
  d.runitor = {0, 1};
  d.associator[{0, 0, 0}] = 0;
  d.associator[{1, 1, 1}] = 1;
  return d;
}

verity_double_bicat prof_bridge() {
  prof_seed seed;
  seed.cats = {walking_arrow()};
  return double_cat_to_verity(prof_double_cat(seed).d);
}

}  // namespace

TEST_CASE("every 1-cell of a square construction has itself as companion") {
  for (const fin_bicat& b : {discrete_bicat(walking_arrow()), delooping_z2(),
                             poset_monoid_bicat()}) {
    const verity_double_bicat vb = square_verity(b);
    for (int h = 0; h < vb.horb.n1(); ++h) {
      CAPTURE(vb.name);
      CAPTURE(h);
      const auto cps = find_companions(vb, h);
      REQUIRE(!cps.empty());
      bool self = false;
      for (const auto& cp : cps) {
        CHECK(is_companion_pair(vb, cp));
        CHECK(cp.h == h);
        if (cp.v == h) self = true;
      }
      CHECK(self);
    }
  }
}

TEST_CASE("companion pairs of the cocycle fixture live over the identity") {
  const verity_double_bicat vb = double_cat_to_verity(z2_cocycle_double());
  const auto cps = find_companions(vb, 0);
  REQUIRE(cps.size() == 2);
  CHECK(cps[0] == companion_pair{0, 0, 0, 0});
  CHECK(cps[1] == companion_pair{0, 0, 1, 1});

  // mixing the two units with the two counits breaks the equations
  CHECK(!is_companion_pair(vb, companion_pair{0, 0, 1, 0}));
  CHECK(!is_companion_pair(vb, companion_pair{0, 0, 0, 1}));

  // a square outside the unit slot is a boundary error, not a failure
  try {
    is_companion_pair(vb, companion_pair{0, 0, 2, 0});
    FAIL("unreachable");
  } catch (const error& e) {
    CHECK(e.code() == errc::boundary_mismatch);
  }
  try {
    is_companion_pair(vb, companion_pair{0, 1, 0, 0});
    FAIL("unreachable");
  } catch (const error& e) {
    CHECK(e.code() == errc::boundary_mismatch);
  }
}

TEST_CASE("the identity functor and the hom profunctor form a companion pair") {
  const verity_double_bicat vb = prof_bridge();
  const int h = vb.horb.id1[0];
  const auto cps = find_companions(vb, h);
  REQUIRE(!cps.empty());
  bool hom_found = false;
  for (const auto& cp : cps) {
    CHECK(is_companion_pair(vb, cp));
    if (cp.v == vb.verb.id1[0]) hom_found = true;
  }
  CHECK(hom_found);
}

TEST_CASE("composing companion pairs follows the chosen composites") {
  const verity_double_bicat vb = square_verity(delooping_z2());
  const auto on_s = find_companions(vb, 1);
  REQUIRE(on_s.size() == 1);
  const companion_pair cp_s = on_s.front();

  const companion_pair cp_e = compose_companions(vb, cp_s, cp_s);
  CHECK(cp_e.h == 0);
  CHECK(cp_e.v == 0);
  CHECK(is_companion_pair(vb, cp_e));

  // strict instance, so the two triple pastings agree on the nose
  const companion_pair left = compose_companions(vb, compose_companions(vb, cp_s, cp_s), cp_s);
  const companion_pair right = compose_companions(vb, cp_s, compose_companions(vb, cp_s, cp_s));
  CHECK(left == right);
  CHECK(left.h == 1);
  CHECK(left.v == 1);
}

TEST_CASE("composing identity companion pairs returns the identity pair") {
  const verity_double_bicat vb = square_verity(discrete_bicat(walking_arrow()));
  const companion_pair id_cp = identity_gregarious(vb, 0).cp;
  CHECK(compose_companions(vb, id_cp, id_cp) == id_cp);

  const companion_pair other = identity_gregarious(vb, 1).cp;
  try {
    compose_companions(vb, other, id_cp);
    FAIL("unreachable");
  } catch (const error& e) {
    CHECK(e.code() == errc::boundary_mismatch);
  }
}

TEST_CASE("companion uniqueness holds under the stated hypotheses") {
  for (const fin_bicat& b : {discrete_bicat(walking_arrow()), delooping_z2(),
                             poset_monoid_bicat()}) {
    const verity_double_bicat vb = square_verity(b);
    for (int h = 0; h < vb.horb.n1(); ++h) {
      CAPTURE(vb.name);
      CHECK(check_companion_uniqueness(vb, h));
    }
  }

  // a 1-cell without companions passes vacuously
  const verity_double_bicat vo = double_cat_to_verity(vertical_only_iso());
  CHECK(find_companions(vo, 2).empty());
  CHECK(check_companion_uniqueness(vo, 2));

  // the cocycle fixture has a non-identity vertical isomorphism s1_h0, so the
  // gauntness hypothesis fails and the check aborts instead of passing
  const verity_double_bicat z2 = double_cat_to_verity(z2_cocycle_double());
  try {
    check_companion_uniqueness(z2, 0);
    FAIL("unreachable");
  } catch (const error& e) {
    CHECK(e.code() == errc::precondition_failed);
  }
}

TEST_CASE("companions transfer adjoint equivalences to the vertical bicategory") {
  const verity_double_bicat vb = square_verity(delooping_z2());

  const adjoint_equivalence id_adj = identity_adjoint_equivalence(vb.horb, 0);
  const companion_pair id_cp = identity_gregarious(vb, 0).cp;
  const adjoint_equivalence id_ver = companion_of_adjoint_equivalence(vb, id_adj, id_cp, id_cp);
  CHECK(check_adjoint_equivalence(vb.verb, id_ver));
  CHECK(id_ver.l == vb.verb.id1[0]);
  CHECK(id_ver.r == vb.verb.id1[0]);

  const adjoint_equivalence s_adj{1, 1, 0, 0};
  REQUIRE(check_adjoint_equivalence(vb.horb, s_adj));
  const companion_pair cp_s = find_companions(vb, 1).front();
  const adjoint_equivalence s_ver = companion_of_adjoint_equivalence(vb, s_adj, cp_s, cp_s);
  CHECK(check_adjoint_equivalence(vb.verb, s_ver));
  CHECK(s_ver.l == 1);
  CHECK(s_ver.r == 1);

  // a companion pair on the wrong 1-cell is a failed hypothesis
  try {
    companion_of_adjoint_equivalence(vb, s_adj, id_cp, cp_s);
    FAIL("unreachable");
  } catch (const error& e) {
    CHECK(e.code() == errc::precondition_failed);
  }
}

TEST_CASE("identity gregarious equivalences verify across the corpus") {
  const fin_cat two = walking_arrow();
  const std::vector<verity_double_bicat> corpus = {
      trivial_verity(),
      square_verity(discrete_bicat(two)),
      square_verity(delooping_z2()),
      square_verity(poset_monoid_bicat()),
      double_cat_to_verity(square_double_cat(two)),
      double_cat_to_verity(z2_cocycle_double(true)),
      double_cat_to_verity(span_double_cat(chain_poset(3), canonical_pullbacks(chain_poset(3))).d),
  };
  for (const auto& vb : corpus)
    for (int x = 0; x < vb.n_objects(); ++x) {
      CAPTURE(vb.name);
      CAPTURE(x);
      const gregarious_equivalence g = identity_gregarious(vb, x);
      CHECK(is_gregarious_equivalence(vb, g));
      CHECK(g.cp.h == vb.horb.id1[x]);
      CHECK(g.cp.v == vb.verb.id1[x]);
    }

  try {
    identity_gregarious(trivial_verity(), 3);
    FAIL("unreachable");
  } catch (const error& e) {
    CHECK(e.code() == errc::boundary_mismatch);
  }
}

TEST_CASE("gregarious equivalences are found and re-verified") {
  const verity_double_bicat vb = square_verity(delooping_z2());
  const auto gs = find_gregarious(vb, 0, 0);
  REQUIRE(gs.size() == 2);
  CHECK(gs[0].cp.h == 0);
  CHECK(gs[1].cp.h == 1);
  for (const auto& g : gs) CHECK(is_gregarious_equivalence(vb, g));

  // linking the identity equivalence with the companion pair on s fails
  gregarious_equivalence bad = gs[0];
  bad.cp = gs[1].cp;
  CHECK(!is_gregarious_equivalence(vb, bad));

  // an out-of-range companion id inside an otherwise linked witness throws
  gregarious_equivalence broken = gs[0];
  broken.cp.unit = 99;
  try {
    is_gregarious_equivalence(vb, broken);
    FAIL("unreachable");
  } catch (const error& e) {
    CHECK(e.code() == errc::boundary_mismatch);
  }
}

TEST_CASE("weak horizontal invariance separates the corpus from the counterexample") {
  const fin_cat two = walking_arrow();
  CHECK(is_weakly_horizontally_invariant(trivial_verity()));
  CHECK(is_weakly_horizontally_invariant(square_verity(discrete_bicat(two))));
  CHECK(is_weakly_horizontally_invariant(square_verity(delooping_z2())));
  CHECK(is_weakly_horizontally_invariant(square_verity(poset_monoid_bicat())));
  CHECK(is_weakly_horizontally_invariant(square_verity(discrete_bicat(walking_iso()))));
  CHECK(is_weakly_horizontally_invariant(double_cat_to_verity(square_double_cat(two))));
  CHECK(is_weakly_horizontally_invariant(double_cat_to_verity(z2_cocycle_double(true))));
  CHECK(is_weakly_horizontally_invariant(
      double_cat_to_verity(span_double_cat(chain_poset(3), canonical_pullbacks(chain_poset(3))).d)));

  // the vertical-only fixture has a horizontal adjoint equivalence on f but
  // no vertical 1-cell between the two objects
  const verity_double_bicat vo = double_cat_to_verity(vertical_only_iso());
  REQUIRE(!find_adjoint_equivalences(vo.horb, 0, 1).empty());
  CHECK(!is_weakly_horizontally_invariant(vo));
}

TEST_CASE("adjoint equivalences and gregarious equivalences name the same 1-cells") {
  for (const fin_bicat& b : {discrete_bicat(walking_arrow()), delooping_z2(),
                             discrete_bicat(walking_iso())}) {
    const verity_double_bicat vb = square_verity(b);
    const law_report rep = check_equivalence_correspondence(vb);
    CAPTURE(rep.artifact);
    CHECK(rep.ok());
    REQUIRE(rep.laws.size() == 2);
    CHECK(rep.laws[0].law == "adjoint-equivalence-implies-gregarious");
    CHECK(rep.laws[1].law == "gregarious-implies-adjoint-equivalence");
    CHECK(rep.laws[0].checked == static_cast<std::uint64_t>(vb.horb.n1()));
  }
  CHECK(check_equivalence_correspondence(square_verity(delooping_z2())).artifact ==
        "gregarious:SquareV(delooping_z2)");

  // the counterexample fails its invariance hypothesis before any law runs
  try {
    check_equivalence_correspondence(double_cat_to_verity(vertical_only_iso()));
    FAIL("unreachable");
  } catch (const error& e) {
    CHECK(e.code() == errc::precondition_failed);
  }
}

TEST_CASE("gregarious univalence agrees with horizontal gauntness") {
  const fin_cat two = walking_arrow();

  CHECK(gregarious_univalence_surrogate(trivial_verity()));
  CHECK(gregarious_univalence_surrogate(square_verity(discrete_bicat(two))));
  CHECK(gregarious_univalence_surrogate(square_verity(poset_monoid_bicat())));
  CHECK(gregarious_univalence_surrogate(double_cat_to_verity(square_double_cat(two))));

  // the delooping has a self equivalence on s, the walking isomorphism one
  // between its two objects; both verdicts match the horizontal surrogate
  CHECK(!gregarious_univalence_surrogate(square_verity(delooping_z2())));
  CHECK(!is_globally_gaunt_surrogate(delooping_z2()));
  CHECK(!gregarious_univalence_surrogate(square_verity(discrete_bicat(walking_iso()))));
  CHECK(!is_globally_gaunt_surrogate(discrete_bicat(walking_iso())));

  // hypothesis failures abort: non-gaunt vertical bicategory, then missing
  // weak horizontal invariance
  try {
    gregarious_univalence_surrogate(double_cat_to_verity(z2_cocycle_double()));
    FAIL("unreachable");
  } catch (const error& e) {
    CHECK(e.code() == errc::precondition_failed);
  }
  try {
    gregarious_univalence_surrogate(double_cat_to_verity(vertical_only_iso()));
    FAIL("unreachable");
  } catch (const error& e) {
    CHECK(e.code() == errc::precondition_failed);
  }
}
