#include "doctest.h"

#include <algorithm>
#include <utility>

#include "dblkit/error.hpp"
#include "dblkit/fincat.hpp"

using namespace dblkit;

namespace {

// x -f-> y -g-> z -h-> w with composites fg, gh, fgh and one extra parallel
// arrow e: x -> w. Setting comp(f, gh) = e breaks associativity at the single
// composable non-identity triple (f, g, h) and nowhere else.
fin_cat broken_chain() {
  cat_builder b("broken_chain");
  const int x = b.add_object("x");
  const int y = b.add_object("y");
  const int z = b.add_object("z");
  const int w = b.add_object("w");
  const int f = b.add_arrow("f", x, y);
  const int g = b.add_arrow("g", y, z);
  const int h = b.add_arrow("h", z, w);
  const int fg = b.add_arrow("fg", x, z);
  const int gh = b.add_arrow("gh", y, w);
  const int fgh = b.add_arrow("fgh", x, w);
  const int e = b.add_arrow("e", x, w);
  b.set_comp(f, g, fg);
  b.set_comp(g, h, gh);
  b.set_comp(fg, h, fgh);
  b.set_comp(f, gh, e);
  return std::move(b).build();
}

}  // namespace

TEST_CASE("stock categories pass the category laws") {
  for (const fin_cat& c : {cat_one(), walking_arrow(), walking_iso(), chain_poset(3),
                           discrete_cat(2), parallel_pair(), iso_plus_chain(3)}) {
    const law_report rep = check_category_laws(c);
    INFO(c.name);
    CHECK(rep.ok());
    CHECK(rep.mode == check_mode::exhaustive);
  }
}

TEST_CASE("builder synthesizes identities and rejects bad tables") {
  fin_cat two = walking_arrow();
  CHECK(two.n_objects() == 2);
  CHECK(two.n_arrows() == 3);  // id_a, id_b, f
  CHECK(two.identity[0] == 0);
  CHECK(two.identity[1] == 1);
  CHECK(two.comp(0, 2) == 2);  // id_a then f
  CHECK(two.comp(2, 1) == 2);  // f then id_b
  CHECK(two.is_identity(0));
  CHECK(!two.is_identity(2));

  {
    cat_builder b("missing");
    const int x = b.add_object("x");
    const int y = b.add_object("y");
    const int z = b.add_object("z");
    b.add_arrow("f", x, y);
    b.add_arrow("g", y, z);
    CHECK_THROWS_AS(std::move(b).build(), error);  // comp(f, g) never stated
  }
  {
    cat_builder b("stated_identity");
    const int x = b.add_object("x");
    const int y = b.add_object("y");
    const int f = b.add_arrow("f", x, y);
    b.set_comp(b.identity_of(x), f, f);
    CHECK_THROWS_AS(std::move(b).build(), error);
  }
}

TEST_CASE("left identity violation is caught and replays") {
  fin_cat two = walking_arrow();
  two.comp_ref(0, 2) = 1;  // comp(id_a, f) redirected to id_b
  const law_report rep = check_category_laws(two);
  CHECK(!rep.ok());
  const law_result* lid = rep.find("left-identity");
  REQUIRE(lid != nullptr);
  CHECK(!lid->passed);
  CHECK(lid->witness == std::vector<long long>{2});
  CHECK(replay_category_law(two, *lid));
  // the redirected composite also has the wrong endpoints
  const law_result* ty = rep.find("typing");
  REQUIRE(ty != nullptr);
  CHECK(!ty->passed);
  CHECK(replay_category_law(two, *ty));
}

TEST_CASE("associativity violation reports exactly the broken triple") {
  const fin_cat c = broken_chain();
  const law_report rep = check_category_laws(c);
  const law_result* ty = rep.find("typing");
  REQUIRE(ty != nullptr);
  CHECK(ty->passed);  // endpoints of every composite are fine
  const law_result* lid = rep.find("left-identity");
  const law_result* rid = rep.find("right-identity");
  REQUIRE(lid != nullptr);
  REQUIRE(rid != nullptr);
  CHECK(lid->passed);
  CHECK(rid->passed);
  const law_result* assoc = rep.find("associativity");
  REQUIRE(assoc != nullptr);
  CHECK(!assoc->passed);
  CHECK(assoc->witness == std::vector<long long>{4, 5, 6});  // (f, g, h)
  CHECK(replay_category_law(c, *assoc));
}

TEST_CASE("replay rejects stale witnesses") {
  const fin_cat two = walking_arrow();
  law_result fake;
  fake.law = "left-identity";
  fake.passed = false;
  fake.witness = {2};
  CHECK(!replay_category_law(two, fake));  // law holds, witness does not re-fail
}

TEST_CASE("isomorphism search") {
  const fin_cat two = walking_arrow();
  CHECK(find_isomorphisms(two, 0, 1).empty());
  CHECK(find_isomorphisms(two, 0, 0) ==
        std::vector<std::pair<int, int>>{{0, 0}});

  const fin_cat iso = walking_iso();
  CHECK(find_isomorphisms(iso, 0, 1) == std::vector<std::pair<int, int>>{{2, 3}});
  CHECK(find_isomorphisms(iso, 1, 0) == std::vector<std::pair<int, int>>{{3, 2}});

  // mirrored closure: (f, g) in one direction appears as (g, f) in the other
  for (auto [f, g] : find_isomorphisms(iso, 0, 1)) {
    const auto back = find_isomorphisms(iso, 1, 0);
    CHECK(std::find(back.begin(), back.end(), std::make_pair(g, f)) != back.end());
  }
}

TEST_CASE("gauntness") {
  CHECK(is_gaunt(walking_arrow()));
  CHECK(is_gaunt(chain_poset(4)));
  CHECK(is_gaunt(discrete_cat(2)));
  CHECK(!is_gaunt(walking_iso()));
  CHECK(!is_gaunt(iso_plus_chain(3)));
  CHECK(!is_gaunt(skel_finset(2).cat));  // the 2-element set has a swap
}

TEST_CASE("iso_plus_chain is the disjoint union it claims to be") {
  const fin_cat c = iso_plus_chain(3);
  CHECK(c.n_objects() == 5);
  const law_report rep = check_category_laws(c);
  CHECK(rep.ok());
  // no arrows across the two components
  for (const auto& a : c.arrows) {
    const bool src_iso = a.src < 2, tgt_iso = a.tgt < 2;
    CHECK(src_iso == tgt_iso);
  }
  CHECK(find_isomorphisms(c, 0, 1).size() == 1);
}

TEST_CASE("functor laws") {
  const fin_cat two = walking_arrow();
  const fin_cat chain = chain_poset(3);

  const fin_functor id2 = identity_functor(two);
  CHECK(check_functor_laws(two, two, id2).ok());

  // send a -> x0, b -> x2, f -> le02
  fin_functor emb;
  emb.name = "emb";
  emb.obj_map = {0, 2};
  emb.arr_map = {chain.identity[0], chain.identity[2], chain.hom(0, 2)[0]};
  CHECK(check_functor_laws(two, chain, emb).ok());

  const fin_functor both = compose_functors(id2, emb);
  CHECK(check_functor_laws(two, chain, both).ok());
  CHECK(both.obj_map == emb.obj_map);
  CHECK(both.arr_map == emb.arr_map);

  // break identity preservation
  fin_functor bad = emb;
  bad.arr_map[0] = chain.hom(0, 1)[0];
  const law_report rep = check_functor_laws(two, chain, bad);
  CHECK(!rep.ok());
  const law_result* ids = rep.find("identities");
  REQUIRE(ids != nullptr);
  CHECK(!ids->passed);
}

TEST_CASE("naturality") {
  const fin_cat two = walking_arrow();
  const fin_cat chain = chain_poset(3);
  fin_functor bot;  // a,b -> x0,x1
  bot.name = "bot";
  bot.obj_map = {0, 1};
  bot.arr_map = {chain.identity[0], chain.identity[1], chain.hom(0, 1)[0]};
  fin_functor top;  // a,b -> x1,x2
  top.name = "top";
  top.obj_map = {1, 2};
  top.arr_map = {chain.identity[1], chain.identity[2], chain.hom(1, 2)[0]};
  REQUIRE(check_functor_laws(two, chain, bot).ok());
  REQUIRE(check_functor_laws(two, chain, top).ok());

  fin_nat_trans t;
  t.name = "shift";
  t.component = {chain.hom(0, 1)[0], chain.hom(1, 2)[0]};
  CHECK(check_naturality(two, chain, bot, top, t).ok());

  fin_nat_trans bad;
  bad.name = "skew";
  bad.component = {chain.hom(0, 2)[0], chain.hom(1, 2)[0]};
  const law_report rep = check_naturality(two, chain, bot, top, bad);
  const law_result* typing = rep.find("component-typing");
  REQUIRE(typing != nullptr);
  CHECK(!typing->passed);
}

TEST_CASE("skeletal finite sets: frozen shape") {
  const finset_cat fs2 = skel_finset(2);
  CHECK(fs2.cat.n_objects() == 3);
  CHECK(fs2.cat.n_arrows() == 11);
  const finset_cat fs3 = skel_finset(3);
  CHECK(fs3.cat.n_objects() == 4);
  CHECK(fs3.cat.n_arrows() == 60);
  CHECK(check_category_laws(fs3.cat).ok());
}

TEST_CASE("skeletal finite sets: graphs, identities, composition") {
  const finset_cat fs = skel_finset(3);
  const int swap = fs.arrow_of(2, 2, {1, 0});
  CHECK(fs.cat.arrows[swap].src == 2);
  CHECK(fs.cat.arrows[swap].tgt == 2);
  CHECK(fs.graph[swap] == std::vector<int>{1, 0});
  CHECK(fs.cat.comp(swap, swap) == fs.cat.identity[2]);
  CHECK(fs.cat.identity[2] == fs.arrow_of(2, 2, {0, 1}));

  const int c0 = fs.arrow_of(2, 1, {0, 0});
  const int in1 = fs.arrow_of(1, 2, {1});
  CHECK(fs.cat.comp(in1, c0) == fs.arrow_of(1, 1, {0}));
  CHECK(fs.cat.comp(in1, c0) == fs.cat.identity[1]);
  CHECK(fs.cat.comp(c0, in1) == fs.arrow_of(2, 2, {1, 1}));

  CHECK_THROWS_AS(fs.arrow_of(2, 5, {0, 0}), error);  // outside the bound
}
