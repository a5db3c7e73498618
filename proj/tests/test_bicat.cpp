#include "dblkit/bicat.hpp"

#include <vector>

#include "dblkit/error.hpp"
#include "doctest.h"

using namespace dblkit;

namespace {

// one object, one 1-cell, hom = Z/2 with Eckmann-Hilton hcomp2 = vcomp
fin_bicat z2_hom() {
  fin_bicat b;
  b.name = "z2_hom";
  b.objects = {"pt"};
  b.cells1 = {{0, 0, "e"}};
  b.id1 = {0};
  b.cells2 = {{0, 0, "id2_e"}, {0, 0, "chi"}};
  b.id2 = {0};
  b.lunitor = {0};
  b.runitor = {0};
  b.hcomp1_table = {0};
  b.vcomp_table = {0, 1, 1, 0};
  b.hcomp2_table = {0, 1, 1, 0};
  b.associator[{0, 0, 0}] = 0;
  return b;
}

const law_result& law_of(const law_report& rep, const std::string& name) {
  const auto* r = rep.find(name);
  REQUIRE(r != nullptr);
  return *r;
}

}  // namespace

TEST_CASE("discrete bicategories satisfy every law and are strict") {
  const std::vector<fin_cat> bases = {cat_one(), walking_arrow(), walking_iso(), chain_poset(3),
                                      skel_finset(2).cat};
  for (const auto& c : bases) {
    const fin_bicat b = discrete_bicat(c);
    const auto rep = check_bicat_laws(b);
    CAPTURE(b.name);
    CHECK(rep.ok());
    CHECK(rep.mode == check_mode::exhaustive);
    CHECK(is_strict(b));
    CHECK(is_bisetcategory(b));
    CHECK(is_two_setcategory(b));
  }
  const fin_bicat wa = discrete_bicat(walking_arrow());
  CHECK(wa.hcomp1(0, 2) == 2);
  CHECK(wa.lwhisk(0, 2) == 2);
  CHECK(wa.rwhisk(2, 1) == 2);
}

TEST_CASE("stock one-object bicategories are lawful and strict") {
  for (const fin_bicat& b : {delooping_z2(), poset_monoid_bicat(), z2_hom()}) {
    CAPTURE(b.name);
    const auto rep = check_bicat_laws(b);
    CHECK(rep.ok());
    CHECK(is_strict(b));
    CHECK(is_two_setcategory(b));
  }
  const fin_bicat pm = poset_monoid_bicat();
  CHECK(pm.hcomp2(2, 2) == 2);
  CHECK(pm.vcomp(0, 2) == 2);
  CHECK(pm.vcomp(2, 0) == -1);
}

TEST_CASE("hom categories recover the vertical structure") {
  const auto pm = poset_monoid_bicat();
  const hom_view h = hom_category(pm, 0, 0);
  CHECK(h.cat.n_objects() == 2);
  CHECK(h.cat.n_arrows() == 3);
  CHECK(h.cell1_of == std::vector<int>{0, 1});
  CHECK(h.cell2_of == std::vector<int>{0, 1, 2});
  CHECK(check_category_laws(h.cat).ok());
  CHECK(is_gaunt(h.cat));

  const hom_view hz = hom_category(z2_hom(), 0, 0);
  CHECK(hz.cat.n_objects() == 1);
  CHECK(hz.cat.n_arrows() == 2);
  CHECK(check_category_laws(hz.cat).ok());
  CHECK_FALSE(is_gaunt(hz.cat));

  const hom_view hd = hom_category(delooping_z2(), 0, 0);
  CHECK(hd.cat.n_objects() == 2);
  CHECK(hd.cat.n_arrows() == 2);
  CHECK(is_gaunt(hd.cat));
}

TEST_CASE("local gauntness inspects every hom") {
  CHECK(is_locally_gaunt(delooping_z2()));
  CHECK(is_locally_gaunt(poset_monoid_bicat()));
  CHECK(is_locally_gaunt(discrete_bicat(chain_poset(3))));
  CHECK(is_locally_gaunt(discrete_bicat(walking_iso())));
  CHECK_FALSE(is_locally_gaunt(z2_hom()));
}

TEST_CASE("vertical inverses") {
  const auto z2 = z2_hom();
  CHECK(inverse2(z2, 0) == 0);
  CHECK(inverse2(z2, 1) == 1);
  CHECK(is_invertible2(z2, 1));
  const auto pm = poset_monoid_bicat();
  CHECK_FALSE(inverse2(pm, 2).has_value());
  CHECK_FALSE(is_invertible2(pm, 2));
  CHECK(inverse2(pm, 1) == 1);
}

TEST_CASE("breaking the associator is caught by pentagon and triangle") {
  fin_bicat b = z2_hom();
  b.name = "z2_hom_twisted_assoc";
  b.associator[{0, 0, 0}] = 1;

  const auto rep = check_bicat_laws(b);
  CHECK_FALSE(rep.ok());
  const auto& pent = law_of(rep, "pentagon");
  CHECK_FALSE(pent.passed);
  CHECK(pent.witness == std::vector<long long>{0, 0, 0, 0});
  CHECK(replay_bicat_law(b, pent));
  const auto& tri = law_of(rep, "triangle");
  CHECK_FALSE(tri.passed);
  CHECK(tri.witness == std::vector<long long>{0, 0});
  CHECK(replay_bicat_law(b, tri));

  CHECK(law_of(rep, "associator-naturality").passed);
  CHECK(law_of(rep, "associator-invertibility").passed);
  CHECK(law_of(rep, "hcomp-identities").passed);
  CHECK(law_of(rep, "interchange").passed);

  CHECK_FALSE(is_strict(b));
  CHECK(is_bisetcategory(b));
  CHECK_FALSE(is_two_setcategory(b));

  law_result stale;
  stale.law = "pentagon";
  stale.witness = {0, 0, 0, 0};
  CHECK_FALSE(replay_bicat_law(z2_hom(), stale));
}

TEST_CASE("breaking the lunitor is caught by the triangle alone") {
  fin_bicat b = z2_hom();
  b.name = "z2_hom_twisted_lunitor";
  b.lunitor[0] = 1;

  const auto rep = check_bicat_laws(b);
  CHECK_FALSE(rep.ok());
  CHECK_FALSE(law_of(rep, "triangle").passed);
  CHECK(replay_bicat_law(b, law_of(rep, "triangle")));
  CHECK(law_of(rep, "pentagon").passed);
  CHECK(law_of(rep, "lunitor-naturality").passed);
  CHECK(law_of(rep, "lunitor-invertibility").passed);
  CHECK_FALSE(is_strict(b));
}

TEST_CASE("typing flags a composite stated for non-composable cells") {
  fin_bicat b = delooping_z2();
  b.vcomp_ref(0, 1) = 0;
  const auto rep = check_bicat_laws(b);
  const auto& typing = law_of(rep, "typing");
  CHECK_FALSE(typing.passed);
  CHECK(typing.witness == std::vector<long long>{3, 0, 1});
  CHECK(replay_bicat_law(b, typing));

  fin_bicat bad = delooping_z2();
  bad.id1 = {5};
  CHECK_THROWS_AS(check_bicat_laws(bad), error);
  try {
    check_bicat_laws(bad);
  } catch (const error& e) {
    CHECK(e.code() == errc::malformed_table);
  }
}

TEST_CASE("co dual reverses 2-cells and is an involution") {
  const auto pm = poset_monoid_bicat();
  const auto co = co_dual(pm);
  CHECK(co.cells2[2].src == 1);
  CHECK(co.cells2[2].tgt == 0);
  CHECK(co.vcomp(2, 0) == 2);
  CHECK(co.vcomp(0, 2) == -1);
  CHECK(check_bicat_laws(co).ok());

  for (const fin_bicat& b :
       {delooping_z2(), poset_monoid_bicat(), z2_hom(), discrete_bicat(walking_iso())}) {
    CAPTURE(b.name);
    CHECK(check_bicat_laws(co_dual(b)).ok());
    fin_bicat back = co_dual(co_dual(b));
    back.name = b.name;
    CHECK(back == b);
  }

  const hom_view hco = hom_category(co, 0, 0);
  CHECK(hco.cat.n_arrows() == 3);
  CHECK(hco.cat.arrows[2].src == 1);
  CHECK(hco.cat.arrows[2].tgt == 0);
}

TEST_CASE("adjoint equivalence search lists exactly the lawful quadruples") {
  const auto z2 = z2_hom();
  const auto aes_z2 = find_adjoint_equivalences(z2, 0, 0);
  REQUIRE(aes_z2.size() == 2);
  CHECK(aes_z2[0] == adjoint_equivalence{0, 0, 0, 0});
  CHECK(aes_z2[1] == adjoint_equivalence{0, 0, 1, 1});
  for (const auto& ae : aes_z2) CHECK(check_adjoint_equivalence(z2, ae));
  CHECK_FALSE(check_adjoint_equivalence(z2, adjoint_equivalence{0, 0, 0, 1}));

  const auto dz = delooping_z2();
  const auto aes_dz = find_adjoint_equivalences(dz, 0, 0);
  REQUIRE(aes_dz.size() == 2);
  CHECK(aes_dz[0] == adjoint_equivalence{0, 0, 0, 0});
  CHECK(aes_dz[1] == adjoint_equivalence{1, 1, 0, 0});

  const auto pm = poset_monoid_bicat();
  const auto aes_pm = find_adjoint_equivalences(pm, 0, 0);
  REQUIRE(aes_pm.size() == 1);
  CHECK(aes_pm[0] == adjoint_equivalence{0, 0, 0, 0});

  const auto wi = discrete_bicat(walking_iso());
  const auto cross = find_adjoint_equivalences(wi, 0, 1);
  REQUIRE(cross.size() == 1);
  CHECK(cross[0] == adjoint_equivalence{2, 3, 0, 1});
  CHECK(check_adjoint_equivalence(wi, cross[0]));
  CHECK(find_adjoint_equivalences(discrete_bicat(walking_arrow()), 0, 1).empty());

  CHECK(find_adjoint_equivalences(co_dual(z2), 0, 0).size() == 2);
  CHECK(find_adjoint_equivalences(co_dual(dz), 0, 0).size() == 2);
}

TEST_CASE("identity adjoint equivalences verify in every stock bicategory") {
  for (const fin_bicat& b : {delooping_z2(), poset_monoid_bicat(), z2_hom(),
                             discrete_bicat(walking_iso()), discrete_bicat(chain_poset(3))}) {
    CAPTURE(b.name);
    for (int x = 0; x < b.n_objects(); ++x) {
      const auto ae = identity_adjoint_equivalence(b, x);
      CHECK(ae.l == b.id1[x]);
      CHECK(ae.r == b.id1[x]);
      CHECK(check_adjoint_equivalence(b, ae));
    }
  }
}

TEST_CASE("global gauntness surrogate") {
  CHECK_FALSE(is_globally_gaunt_surrogate(delooping_z2()));
  CHECK(is_globally_gaunt_surrogate(poset_monoid_bicat()));
  CHECK(is_globally_gaunt_surrogate(z2_hom()));
  CHECK_FALSE(is_globally_gaunt_surrogate(discrete_bicat(walking_iso())));
  CHECK(is_globally_gaunt_surrogate(discrete_bicat(chain_poset(3))));
  CHECK(is_globally_gaunt_surrogate(discrete_bicat(cat_one())));
}

TEST_CASE("adjoint equivalence search respects its budget") {
  const auto z2 = z2_hom();
  CHECK_THROWS_AS(find_adjoint_equivalences(z2, 0, 0, 3), error);
  try {
    find_adjoint_equivalences(z2, 0, 0, 3);
  } catch (const error& e) {
    CHECK(e.code() == errc::budget_exceeded);
  }
  CHECK(find_adjoint_equivalences(z2, 0, 0, 4).size() == 2);
}
