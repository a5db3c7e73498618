#include <doctest.h>

#include "dblkit/double_cat.hpp"
#include "dblkit/error.hpp"

using namespace dblkit;

namespace {

// One object, horizontal morphisms Z/2 under addition, and over each
// horizontal morphism a Z/2 fiber of squares s0_*, s1_* composing by fiber
// addition in both directions. The associator at (i, j, k) is s(i*j*k), a
// 3-cocycle, so the laws hold while the associator at (h1, h1, h1) is not an
// identity square. With twisted = true both unitors become s1 globally, which
// stays lawful because the triangle only compares the two unitor exponents.
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

// One object, one horizontal morphism, squares Z/4 composing by addition in
// both directions; every coherence cell is the identity square.
pseudo_double_cat z4_loop_double() {
  pseudo_double_cat d;
  d.name = "z4_loop";
  d.vcat = cat_one();
  d.hors = {{0, 0, "h0"}};
  d.horid = {0};
  d.hcomp_table = {0};
  for (int a = 0; a < 4; ++a) d.squares.push_back({0, 0, 0, 0, "t" + std::to_string(a)});
  d.sqvid = {0};
  d.sqhid = {0};
  d.vcomp_sq_table.assign(16, -1);
  d.hcomp_sq_table.assign(16, -1);
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) {
      d.sq_vcomp_ref(a, b) = (a + b) % 4;
      d.sq_hcomp_ref(a, b) = (a + b) % 4;
    }
  d.lunitor = {0};
  d.runitor = {0};
  d.associator[{0, 0, 0}] = 0;
  return d;
}

const law_result& law_of(const law_report& rep, const std::string& name) {
  const law_result* r = rep.find(name);
  REQUIRE(r != nullptr);
  return *r;
}

// erases enough horizontal data around h1 to leave a lawful probe fragment
pseudo_double_cat z2_probe_fragment() {
  pseudo_double_cat d = z2_cocycle_double();
  d.name = "z2_fragment";
  d.mode = check_mode::probe;
  d.hcomp_ref(1, 1) = -1;
  for (int s = 2; s < 4; ++s)
    for (int t = 2; t < 4; ++t) d.sq_hcomp_ref(s, t) = -1;
  d.lunitor[1] = -1;
  d.associator.erase({1, 1, 1});
  d.associator.erase({1, 1, 0});
  return d;
}

}  // namespace

TEST_CASE("trivial double category is lawful, strict and symmetric univalent") {
  const pseudo_double_cat d = trivial_double_cat();
  const law_report rep = check_double_laws(d);
  CHECK(rep.ok());
  CHECK(rep.mode == check_mode::exhaustive);
  CHECK(rep.artifact == "double:trivial");
  CHECK(is_strict(d));
  CHECK(set_level(d) == set_level_kind::strict_double_setcat);
  const law_report srep = check_strict_double_laws(d);
  CHECK(srep.ok());

  const univalence_verdict uv = univalence_surrogate(d);
  CHECK(uv.univalent);
  CHECK(uv.symmetric);
  CHECK(uv.details == "univalent and symmetric");
  CHECK(symmetric_univalence_surrogate(d));

  CHECK(check_bicat_laws(underlying_horizontal_bicat(d)).ok());
  CHECK(is_two_setcategory(underlying_vertical_two_cat(d)));
}

TEST_CASE("cocycle double category is lawful but not strict") {
  const pseudo_double_cat d = z2_cocycle_double();
  const law_report rep = check_double_laws(d);
  for (const auto& lr : rep.laws) {
    INFO(lr.law);
    CHECK(lr.passed);
  }
  CHECK(rep.ok());
  CHECK_FALSE(is_strict(d));
  CHECK(set_level(d) == set_level_kind::pseudo_double_setcat);

  // the associator at (h1, h1, h1) is s1_h1, its own vertical inverse
  CHECK(d.assoc(1, 1, 1) == 3);
  CHECK(vertical_inverse_square(d, 3) == 3);
  CHECK(vertical_inverse_square(d, -1) == std::nullopt);

  const law_report srep = check_strict_double_laws(d);
  CHECK_FALSE(srep.ok());
  CHECK(law_of(srep, "strict-unitality").passed);
  CHECK(law_of(srep, "strict-associativity").passed);
  const law_result& idc = law_of(srep, "identity-coherence");
  CHECK_FALSE(idc.passed);
  CHECK(idc.witness == std::vector<long long>{2, 1, 1, 1});
  CHECK(replay_double_law(d, idc));
  for (const auto& lr : srep.laws) {
    const law_result* shared = rep.find(lr.law);
    if (!shared) continue;
    INFO(lr.law);
    CHECK(lr.passed == shared->passed);
  }
}

TEST_CASE("twisted unitors stay lawful without being identity squares") {
  const pseudo_double_cat d = z2_cocycle_double(true);
  const law_report rep = check_double_laws(d);
  CHECK(rep.ok());
  // lunitor at h0 is an endosquare of h0 yet not the identity square
  CHECK(d.lunitor[0] == 1);
  CHECK(d.squares[1].h1 == d.squares[1].h2);
  CHECK(d.lunitor[0] != d.sqvid[0]);
  CHECK_FALSE(is_strict(d));
  CHECK(set_level(d) == set_level_kind::pseudo_double_setcat);
}

TEST_CASE("breaking the cocycle breaks exactly the pentagon") {
  pseudo_double_cat d = z2_cocycle_double();
  d.associator[{1, 1, 0}] = 1;
  const law_report rep = check_double_laws(d);
  CHECK_FALSE(rep.ok());
  const law_result& pent = law_of(rep, "pentagon");
  CHECK_FALSE(pent.passed);
  CHECK(pent.witness == std::vector<long long>{1, 1, 0, 0});
  CHECK(replay_double_law(d, pent));
  CHECK(law_of(rep, "triangle").passed);
  CHECK(law_of(rep, "associator-naturality").passed);
  CHECK(law_of(rep, "associator-invertibility").passed);
  CHECK(law_of(rep, "typing").passed);
  CHECK(set_level(d) == set_level_kind::not_demonstrated);

  // the repaired structure no longer reproduces the recorded witness
  const pseudo_double_cat fixed = z2_cocycle_double();
  CHECK_FALSE(replay_double_law(fixed, pent));
}

TEST_CASE("breaking a pasted identity square breaks functoriality and interchange") {
  pseudo_double_cat d = z2_cocycle_double();
  d.sq_hcomp_ref(2, 2) = 1;  // sqvid[h1] beside sqvid[h1] now lands on s1_h0
  const law_report rep = check_double_laws(d);
  CHECK_FALSE(rep.ok());
  const law_result& hcf = law_of(rep, "horizontal-composition-functorial");
  CHECK_FALSE(hcf.passed);
  CHECK(hcf.witness == std::vector<long long>{1, 1});
  CHECK(replay_double_law(d, hcf));
  CHECK_FALSE(law_of(rep, "interchange").passed);
  CHECK(replay_double_law(d, law_of(rep, "interchange")));
  CHECK(law_of(rep, "square-vertical-identity").passed);
}

TEST_CASE("breaking a stacking unit is caught with the offending square") {
  pseudo_double_cat d = z2_cocycle_double();
  d.sq_vcomp_ref(2, 3) = 2;  // sqvid[h1] over s1_h1 no longer returns s1_h1
  const law_report rep = check_double_laws(d);
  const law_result& svid = law_of(rep, "square-vertical-identity");
  CHECK_FALSE(svid.passed);
  CHECK(svid.witness == std::vector<long long>{3});
  CHECK(replay_double_law(d, svid));
}

TEST_CASE("z4 fibers are lawful and strict until stacking is corrupted") {
  const pseudo_double_cat d = z4_loop_double();
  const law_report rep = check_double_laws(d);
  CHECK(rep.ok());
  CHECK(is_strict(d));
  CHECK(set_level(d) == set_level_kind::strict_double_setcat);
  const law_report srep = check_strict_double_laws(d);
  CHECK(srep.ok());
  for (const auto& lr : rep.laws) {
    INFO(lr.law);
    CHECK(lr.passed == law_of(srep, lr.law).passed);
  }

  pseudo_double_cat broken = z4_loop_double();
  broken.sq_vcomp_ref(1, 1) = 3;
  const law_report brep = check_double_laws(broken);
  const law_result& sva = law_of(brep, "square-vertical-associativity");
  CHECK_FALSE(sva.passed);
  CHECK(sva.witness == std::vector<long long>{1, 1, 2});
  CHECK(replay_double_law(broken, sva));
}

TEST_CASE("vertical category failures surface with the vcat prefix") {
  pseudo_double_cat d = z4_loop_double();
  d.vcat.comp_ref(0, 0) = -1;
  const law_report rep = check_double_laws(d);
  const law_result& t = law_of(rep, "vcat-typing");
  CHECK_FALSE(t.passed);
  CHECK(replay_double_law(d, t));

  pseudo_double_cat bad = z4_loop_double();
  bad.sqvid = {7};
  CHECK_THROWS_WITH_AS(check_double_laws(bad), doctest::Contains("sqvid"), error);
}

TEST_CASE("hom categories of the cocycle structure are the expected groupoids") {
  const pseudo_double_cat d = z2_cocycle_double();
  const dbl_hom_view hh = horizontal_hom_category(d, 0, 0);
  CHECK(hh.cat.n_objects() == 2);
  CHECK(hh.cat.n_arrows() == 4);
  CHECK(check_category_laws(hh.cat).ok());
  CHECK_FALSE(is_gaunt(hh.cat));
  CHECK(hh.object_of == std::vector<int>{0, 1});
  CHECK(hh.square_of == std::vector<int>{0, 1, 2, 3});

  const dbl_hom_view vh = vertical_hom_category(d, 0, 0);
  CHECK(vh.cat.n_objects() == 1);
  CHECK(vh.cat.n_arrows() == 2);
  CHECK(check_category_laws(vh.cat).ok());
  CHECK_FALSE(is_gaunt(vh.cat));
  // transported pasting is fiber addition
  CHECK(vh.cat.comp(1, 1) == 0);

  const dbl_hom_view tv = vertical_hom_category(trivial_double_cat(), 0, 0);
  CHECK(tv.cat.n_objects() == 1);
  CHECK(tv.cat.n_arrows() == 1);
  CHECK(is_gaunt(tv.cat));
}

TEST_CASE("horizontal category extraction demands on-the-nose composition") {
  const pseudo_double_cat d = z2_cocycle_double();
  const fin_cat h = horizontal_category(d);
  CHECK(h.n_objects() == 1);
  CHECK(h.n_arrows() == 2);
  CHECK(check_category_laws(h).ok());
  CHECK_FALSE(is_gaunt(h));

  pseudo_double_cat frag = z2_probe_fragment();
  CHECK_THROWS_AS(horizontal_category(frag), error);
  try {
    horizontal_category(frag);
  } catch (const error& e) {
    CHECK(e.code() == errc::not_strict);
  }
}

TEST_CASE("univalence surrogate separates the univalent and symmetric halves") {
  const pseudo_double_cat z2 = z2_cocycle_double();
  const univalence_verdict uv = univalence_surrogate(z2);
  CHECK_FALSE(uv.univalent);
  CHECK_FALSE(uv.symmetric);
  CHECK(uv.details == "horizontal hom category at (star, star) is not gaunt");

  try {
    symmetric_univalence_surrogate(z2);
    CHECK(false);
  } catch (const error& e) {
    CHECK(e.code() == errc::not_strict);
  }

  // strict but with a non-gaunt horizontal hom: refuses nothing, reports false
  const pseudo_double_cat z4 = z4_loop_double();
  CHECK_FALSE(symmetric_univalence_surrogate(z4));

  pseudo_double_cat indexed = trivial_double_cat();
  indexed.hor_set_presented = false;
  const univalence_verdict iv = univalence_surrogate(indexed);
  CHECK(iv.univalent);
  CHECK_FALSE(iv.symmetric);
  CHECK(iv.details ==
        "univalent; not symmetric: horizontal morphisms are object-indexed, not set-presented");

  try {
    univalence_surrogate(z2_probe_fragment());
    CHECK(false);
  } catch (const error& e) {
    CHECK(e.code() == errc::precondition_failed);
  }
}

TEST_CASE("probe fragments skip absent entries and stay honest") {
  const pseudo_double_cat frag = z2_probe_fragment();
  const law_report rep = check_double_laws(frag);
  CHECK(rep.ok());
  CHECK(rep.mode == check_mode::probe);
  // fewer pentagon instances are evaluable than in the full structure
  const law_report full = check_double_laws(z2_cocycle_double());
  CHECK(law_of(rep, "pentagon").checked < law_of(full, "pentagon").checked);
  CHECK(set_level(frag) == set_level_kind::not_demonstrated);

  // the same tables judged as materialized fail typing on the absent entry
  pseudo_double_cat dishonest = frag;
  dishonest.mode = check_mode::exhaustive;
  const law_report xrep = check_double_laws(dishonest);
  CHECK_FALSE(xrep.ok());
  const law_result& t = law_of(xrep, "typing");
  CHECK_FALSE(t.passed);
  CHECK(replay_double_law(dishonest, t));
  CHECK_FALSE(replay_double_law(frag, t));
}

TEST_CASE("underlying horizontal bicategory reflects the double structure") {
  const pseudo_double_cat d = z2_cocycle_double();
  const fin_bicat hb = underlying_horizontal_bicat(d);
  CHECK(hb.n_objects() == 1);
  CHECK(hb.n1() == 2);
  CHECK(hb.n2() == 4);
  CHECK(check_bicat_laws(hb).ok());
  CHECK(is_bisetcategory(hb));
  CHECK_FALSE(is_strict(hb));
  CHECK(hb.assoc(1, 1, 1) == 3);
  CHECK_FALSE(is_locally_gaunt(hb));

  const fin_bicat zb = underlying_horizontal_bicat(z4_loop_double());
  CHECK(check_bicat_laws(zb).ok());
  CHECK(is_two_setcategory(zb));

  const fin_bicat fb = underlying_horizontal_bicat(z2_probe_fragment());
  CHECK(check_bicat_laws(fb, check_mode::probe).ok());
  CHECK_FALSE(check_bicat_laws(fb).ok());
}

TEST_CASE("underlying vertical two-category is strict") {
  for (const bool twisted : {false, true}) {
    const pseudo_double_cat d = z2_cocycle_double(twisted);
    const fin_bicat vb = underlying_vertical_two_cat(d);
    CHECK(vb.n_objects() == 1);
    CHECK(vb.n1() == 1);
    CHECK(vb.n2() == 2);
    CHECK(check_bicat_laws(vb).ok());
    CHECK(is_strict(vb));
    CHECK(is_two_setcategory(vb));
    // hom composition transports pasting back along the unitor: fiber addition
    CHECK(vb.vcomp(1, 1) == 0);
    CHECK(vb.hcomp2(1, 1) == 0);
  }

  const fin_bicat zv = underlying_vertical_two_cat(z4_loop_double());
  CHECK(zv.n2() == 4);
  CHECK(check_bicat_laws(zv).ok());
  CHECK(is_two_setcategory(zv));
}
