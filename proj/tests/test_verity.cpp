#include <doctest.h>

#include <string>
#include <utility>
#include <vector>

#include "dblkit/constructions.hpp"
#include "dblkit/double_cat.hpp"
#include "dblkit/error.hpp"
#include "dblkit/fincat.hpp"
#include "dblkit/limits.hpp"
#include "dblkit/verity.hpp"

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

fin_profunctor point_prof(const std::string& name, int n) {
  fin_profunctor p;
  p.name = name;
  p.count = {{n}};
  p.left.assign(1, {{}});
  p.right.assign(1, {{}});
  for (int i = 0; i < n; ++i) {
    p.left[0][0].push_back(i);
    p.right[0][0].push_back(i);
  }
  return p;
}

prof_seed point_seed() {
  prof_seed seed;
  seed.cats = {cat_one()};
  seed.profs.push_back({0, 0, point_prof("p", 2)});
  seed.profs.push_back({0, 0, point_prof("q", 3)});
  seed.profs.push_back({0, 0, point_prof("e", 0)});
  return seed;
}

const law_result& law_of(const law_report& rep, const std::string& name) {
  const law_result* r = rep.find(name);
  REQUIRE(r != nullptr);
  return *r;
}

// appends one square whose composites and whiskers are all left undetermined,
// regridding every table to the new stride and dropping to probe mode
verity_double_bicat add_square_probe(verity_double_bicat vb,
                                     verity_double_bicat::square_cell q) {
  const int old_ns = vb.n_squares();
  const int new_ns = old_ns + 1;
  auto regrid = [&](std::vector<int>& tbl, int rows) {
    std::vector<int> out(static_cast<size_t>(rows) * new_ns, -1);
    for (int r = 0; r < rows; ++r)
      for (int s = 0; s < old_ns; ++s)
        out[static_cast<size_t>(r) * new_ns + s] = tbl[static_cast<size_t>(r) * old_ns + s];
    tbl = std::move(out);
  };
  regrid(vb.vcomp_sq_table, old_ns);
  regrid(vb.hcomp_sq_table, old_ns);
  vb.vcomp_sq_table.resize(static_cast<size_t>(new_ns) * new_ns, -1);
  vb.hcomp_sq_table.resize(static_cast<size_t>(new_ns) * new_ns, -1);
  regrid(vb.lwhisker_table, vb.verb.n2());
  regrid(vb.rwhisker_table, vb.verb.n2());
  regrid(vb.uwhisker_table, vb.horb.n2());
  regrid(vb.dwhisker_table, vb.horb.n2());
  vb.squares.push_back(std::move(q));
  vb.mode = check_mode::probe;
  vb.name += "+sq";
  return vb;
}

}  // namespace

TEST_CASE("trivial Verity double bicategory is lawful and saturated") {
  const verity_double_bicat vb = trivial_verity();
  CHECK(vb.name == "SquareV(disc(one))");
  CHECK(vb.n_objects() == 1);
  CHECK(vb.n_squares() == 1);
  CHECK(vb.mode == check_mode::exhaustive);

  const law_report rep = check_verity_laws(vb);
  CHECK(rep.ok());
  CHECK(rep.mode == check_mode::exhaustive);
  CHECK(rep.artifact == "verity:SquareV(disc(one))");
  CHECK(rep.laws.front().law.rfind("horb-", 0) == 0);
  CHECK(rep.find("verb-typing") != nullptr);
  CHECK(rep.find("interchange") != nullptr);

  const saturation_result sat = saturation(vb);
  CHECK(sat.horizontally);
  CHECK(sat.vertically);
  CHECK(sat.h_cell_of_square == std::vector<int>{0});
  CHECK(sat.v_cell_of_square == std::vector<int>{0});
  CHECK(is_weak_double_cat(vb));
}

TEST_CASE("squares of the discrete bicategory on the walking arrow") {
  const verity_double_bicat vb = square_verity(discrete_bicat(walking_arrow()));
  CHECK(vb.n_objects() == 2);
  CHECK(vb.horb.n1() == 3);
  CHECK(vb.verb.n1() == 3);
  CHECK(vb.n_squares() == 6);

  const law_report rep = check_verity_laws(vb);
  for (const auto& lr : rep.laws) {
    INFO(lr.law);
    CHECK(lr.passed);
  }
  CHECK(rep.ok());

  const saturation_result sat = saturation(vb);
  CHECK(sat.horizontally);
  CHECK(sat.vertically);
  for (int t = 0; t < vb.horb.n2(); ++t) {
    const int s = cell_to_square_h(vb, t);
    REQUIRE(s >= 0);
    CHECK(sat.h_cell_of_square[s] == t);
  }
  for (int t = 0; t < vb.verb.n2(); ++t) {
    const int s = cell_to_square_v(vb, t);
    REQUIRE(s >= 0);
    CHECK(sat.v_cell_of_square[s] == t);
  }
  // the identity 2-cell on the arrow presents its unit squares
  CHECK(cell_to_square_h(vb, vb.horb.id2[2]) == vb.sqhid[2]);
  CHECK(cell_to_square_v(vb, vb.verb.id2[2]) == vb.sqvid[2]);
  CHECK(is_weak_double_cat(vb));
}

TEST_CASE("squares of the Z/2 delooping") {
  const verity_double_bicat vb = square_verity(delooping_z2());
  CHECK(vb.n_objects() == 1);
  CHECK(vb.n_squares() == 8);
  const law_report rep = check_verity_laws(vb);
  for (const auto& lr : rep.laws) {
    INFO(lr.law);
    CHECK(lr.passed);
  }
  CHECK(rep.ok());
  CHECK(rep.artifact == "verity:SquareV(delooping_z2)");
  CHECK(is_weak_double_cat(vb));
}

TEST_CASE("squares of the poset monoid bicategory") {
  const verity_double_bicat vb = square_verity(poset_monoid_bicat());
  CHECK(vb.n_squares() == 13);
  const law_report rep = check_verity_laws(vb);
  for (const auto& lr : rep.laws) {
    INFO(lr.law);
    CHECK(lr.passed);
  }
  CHECK(rep.ok());
  const saturation_result sat = saturation(vb);
  CHECK(sat.horizontally);
  CHECK(sat.vertically);
  CHECK(is_weak_double_cat(vb));
}

TEST_CASE("squares of the span horizontal bicategory") {
  const fin_cat c = chain_poset(3);
  const span_model m = span_double_cat(c, canonical_pullbacks(c));
  REQUIRE(m.d.mode == check_mode::exhaustive);
  REQUIRE(check_double_laws(m.d).ok());
  const fin_bicat b = underlying_horizontal_bicat(m.d);

  const verity_double_bicat vb = square_verity(b);
  CHECK(vb.n_squares() > 0);
  const law_report rep = check_verity_laws(vb);
  for (const auto& lr : rep.laws) {
    INFO(lr.law);
    CHECK(lr.passed);
  }
  CHECK(rep.ok());
  CHECK(is_weak_double_cat(vb));
}

TEST_CASE("a strict double category transposes onto its Verity form") {
  const pseudo_double_cat d = square_double_cat(walking_arrow());
  const verity_double_bicat vb = double_cat_to_verity(d);
  CHECK(vb.name == "V(Sq(two))");
  CHECK(vb.mode == check_mode::exhaustive);
  CHECK(vb.n_squares() == d.n_squares());
  for (int s = 0; s < d.n_squares(); ++s) {
    CHECK(vb.squares[s].v1 == d.squares[s].h1);
    CHECK(vb.squares[s].v2 == d.squares[s].h2);
    CHECK(vb.squares[s].h1 == d.squares[s].v1);
    CHECK(vb.squares[s].h2 == d.squares[s].v2);
  }
  CHECK(vb.vcomp_sq_table == d.hcomp_sq_table);
  CHECK(vb.hcomp_sq_table == d.vcomp_sq_table);
  CHECK(vb.sqhid == d.sqhid);
  CHECK(vb.sqvid == d.sqvid);

  const law_report rep = check_verity_laws(vb);
  for (const auto& lr : rep.laws) {
    INFO(lr.law);
    CHECK(lr.passed);
  }
  CHECK(rep.ok());
  CHECK(rep.artifact == "verity:V(Sq(two))");

  const saturation_result sat = saturation(vb);
  CHECK(sat.horizontally);
  CHECK(sat.vertically);
  CHECK(is_weak_double_cat(vb));
}

TEST_CASE("cocycle coherence survives the double category bridge") {
  const pseudo_double_cat d = z2_cocycle_double(true);
  REQUIRE(check_double_laws(d).ok());
  const verity_double_bicat vb = double_cat_to_verity(d);
  CHECK(vb.n_squares() == 4);
  CHECK(vb.horb.n2() == 1);
  CHECK(vb.verb.n2() == 4);
  // the twist and the cocycle are carried into the vertical bicategory
  CHECK(vb.verb.lunitor[0] != vb.verb.id2[vb.verb.id1[0]]);
  CHECK(vb.verb.assoc(1, 1, 1) == 3);
  CHECK(vb.verb.id2[vb.verb.hcomp1(1, 1)] == 0);

  const law_report rep = check_verity_laws(vb);
  for (const auto& lr : rep.laws) {
    INFO(lr.law);
    CHECK(lr.passed);
  }
  CHECK(rep.ok());

  // s0_h0 and s1_h0 sit in the same identity slot but the horizontal
  // bicategory is discrete, so only one of them is presented
  const saturation_result sat = saturation(vb);
  CHECK_FALSE(sat.horizontally);
  CHECK(sat.vertically);
  CHECK_FALSE(is_weak_double_cat(vb));
}

TEST_CASE("span double categories bridge lawfully") {
  const fin_cat c = chain_poset(3);
  const pseudo_double_cat d = span_double_cat(c, canonical_pullbacks(c)).d;
  const verity_double_bicat vb = double_cat_to_verity(d);
  CHECK(vb.mode == d.mode);
  const law_report rep = check_verity_laws(vb);
  for (const auto& lr : rep.laws) {
    INFO(lr.law);
    CHECK(lr.passed);
  }
  CHECK(rep.ok());
  const saturation_result sat = saturation(vb);
  CHECK(sat.horizontally);
  CHECK(sat.vertically);
  CHECK(is_weak_double_cat(vb));
}

TEST_CASE("profunctor fragments bridge in probe mode") {
  const pseudo_double_cat d = prof_double_cat(point_seed()).d;
  REQUIRE(d.mode == check_mode::probe);
  const verity_double_bicat vb = double_cat_to_verity(d);
  CHECK(vb.mode == check_mode::probe);
  const law_report rep = check_verity_laws(vb);
  for (const auto& lr : rep.laws) {
    INFO(lr.law);
    CHECK(lr.passed);
  }
  CHECK(rep.ok());
  CHECK(rep.mode == check_mode::probe);
  CHECK(saturation(vb).vertically);
}

TEST_CASE("a corrupted whisker table is caught and replays") {
  verity_double_bicat vb = square_verity(delooping_z2());
  const int a0 = vb.verb.id2[vb.squares[0].v1];
  vb.lwhisker_ref(a0, 0) = 1;

  const law_report rep = check_verity_laws(vb);
  CHECK_FALSE(rep.ok());
  const law_result& lwf = law_of(rep, "left-whisker-functorial");
  CHECK_FALSE(lwf.passed);
  CHECK(lwf.witness == std::vector<long long>{0, 0});
  CHECK(replay_verity_law(vb, lwf));
  CHECK_FALSE(replay_verity_law(square_verity(delooping_z2()), lwf));
}

TEST_CASE("an undetermined extra square breaks horizontal saturation only") {
  const pseudo_double_cat d = square_double_cat(walking_arrow());
  verity_double_bicat vb = double_cat_to_verity(d);
  verity_double_bicat::square_cell extra;
  extra.v1 = vb.verb.id1[0];
  extra.v2 = vb.verb.id1[1];
  extra.h1 = 2;
  extra.h2 = 2;
  extra.name = "ghost";
  const verity_double_bicat probed = add_square_probe(std::move(vb), extra);

  const law_report rep = check_verity_laws(probed);
  CHECK(rep.ok());
  CHECK(rep.mode == check_mode::probe);
  const saturation_result sat = saturation(probed);
  CHECK_FALSE(sat.horizontally);
  CHECK(sat.vertically);

  // the same tables read exhaustively are incomplete
  verity_double_bicat strict_mode = probed;
  strict_mode.mode = check_mode::exhaustive;
  CHECK_FALSE(check_verity_laws(strict_mode).ok());
}

TEST_CASE("cell_to_square rejects unknown 2-cells") {
  const verity_double_bicat vb = trivial_verity();
  try {
    cell_to_square_h(vb, 5);
    FAIL("unreachable");
  } catch (const error& e) {
    CHECK(e.code() == errc::precondition_failed);
  }
  try {
    cell_to_square_v(vb, -2);
    FAIL("unreachable");
  } catch (const error& e) {
    CHECK(e.code() == errc::precondition_failed);
  }
}

TEST_CASE("malformed Verity tables are rejected") {
  verity_double_bicat no_units = trivial_verity();
  no_units.sqhid.clear();
  try {
    check_verity_laws(no_units);
    FAIL("unreachable");
  } catch (const error& e) {
    CHECK(e.code() == errc::malformed_table);
  }

  verity_double_bicat bad_boundary = trivial_verity();
  bad_boundary.squares[0].h1 = 7;
  try {
    saturation(bad_boundary);
    FAIL("unreachable");
  } catch (const error& e) {
    CHECK(e.code() == errc::malformed_table);
  }

  verity_double_bicat bad_shape = trivial_verity();
  bad_shape.vcomp_sq_table.push_back(0);
  try {
    check_verity_laws(bad_shape);
    FAIL("unreachable");
  } catch (const error& e) {
    CHECK(e.code() == errc::malformed_table);
  }

  verity_double_bicat split_objects = trivial_verity();
  split_objects.horb.objects.push_back("ghost");
  try {
    check_verity_laws(split_objects);
    FAIL("unreachable");
  } catch (const error& e) {
    CHECK(e.code() == errc::malformed_table);
  }
}

TEST_CASE("unlawful inputs are rejected by both bridges") {
  pseudo_double_cat bad_double = z2_cocycle_double();
  bad_double.sq_vcomp_ref(0, 0) = 1;
  REQUIRE_FALSE(check_double_laws(bad_double).ok());
  try {
    double_cat_to_verity(bad_double);
    FAIL("unreachable");
  } catch (const error& e) {
    CHECK(e.code() == errc::precondition_failed);
  }

  fin_bicat bad_bicat = delooping_z2();
  bad_bicat.lunitor[1] = 0;
  REQUIRE_FALSE(check_bicat_laws(bad_bicat).ok());
  try {
    square_verity(bad_bicat);
    FAIL("unreachable");
  } catch (const error& e) {
    CHECK(e.code() == errc::precondition_failed);
  }
}

TEST_CASE("probe mode propagates through square_verity") {
  const verity_double_bicat vb = square_verity(delooping_z2(), check_mode::probe);
  CHECK(vb.mode == check_mode::probe);
  const law_report rep = check_verity_laws(vb);
  CHECK(rep.ok());
  CHECK(rep.mode == check_mode::probe);
}
