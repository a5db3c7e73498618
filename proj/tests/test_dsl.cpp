#include "doctest.h"

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "dblkit/bicat.hpp"
#include "dblkit/constructions.hpp"
#include "dblkit/double_cat.hpp"
#include "dblkit/dsl.hpp"
#include "dblkit/error.hpp"
#include "dblkit/fincat.hpp"
#include "dblkit/profunctor.hpp"
#include "dblkit/verity.hpp"

using namespace dblkit;
using namespace dblkit::dsl;

namespace {

const std::vector<std::string> corpus_files = {
    "one.fincat",         "two.fincat",          "walking_iso.fincat",
    "chain3.fincat",      "parallel_pair.fincat", "iso_plus_chain3.fincat",
    "finset2.fincat",     "ends.fincat",         "hom_two.fincat",
    "point_profs.fincat", "delooping_z2.vdb",    "poset_monoid.vdb",
    "disc_iso.vdb",       "z2_cocycle.dblcat",   "z2_twisted.vdb",
    "vertical_iso.dblcat", "sq_two.dblcat",      "span_chain3.dblcat",
};

std::string corpus_path(const std::string& name) {
  return std::string(DBLKIT_CORPUS_DIR) + "/" + name;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  REQUIRE_MESSAGE(in.good(), path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

bool has_message(const std::vector<diagnostic>& diags, const std::string& fragment) {
  for (const auto& d : diags)
    if (d.message.find(fragment) != std::string::npos) return true;
  return false;
}

// the untwisted and twisted cocycle double categories over the point, the
// same instances the corpus files were frozen from
pseudo_double_cat z2_cocycle_double(bool twisted) {
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

// identity 2-cells keep their factory names inside the library; the DSL
// renders them under the reserved id_ names, so comparisons rename first
fin_bicat with_dsl_identity_names(fin_bicat b) {
  for (int f = 0; f < b.n1(); ++f) b.cells2[b.id2[f]].name = "id_" + b.cells1[f].name;
  return b;
}

}  // namespace

TEST_CASE("plain blocks print in canonical form") {
  const parse_result r = parse_presentation("category  c{objects:x,y;arrows:f:x->y;}");
  REQUIRE(r.ok());
  CHECK(print_presentation(r.ast) ==
        "category c {\n  objects: x, y;\n  arrows: f: x -> y;\n}\n");
}

TEST_CASE("quoted names round-trip with escapes") {
  const std::string text =
      "category \"a b\" {\n  objects: \"q\\\"uote\", \"back\\\\slash\", plain;\n}\n";
  const parse_result r = parse_presentation(text);
  REQUIRE(r.ok());
  const auto* cat = std::get_if<ast_category>(&r.ast.blocks.at(0));
  REQUIRE(cat != nullptr);
  CHECK(cat->name.text == "a b");
  CHECK(cat->objects.at(0).text == "q\"uote");
  CHECK(cat->objects.at(1).text == "back\\slash");
  CHECK(print_presentation(r.ast) == text);
}

TEST_CASE("syntax errors carry line and column spans") {
  struct seeded {
    const char* text;
    int line;
    const char* fragment;
  };
  const std::vector<seeded> cases = {
      {"category c {\n  objects x;\n}\n", 2, "expected ':', found a name"},
      {"category c {\n  objects: x\n}\n", 2, "expected"},
      {"category \"c {\n}\n", 1, "unterminated string"},
      {"category \"a\\qb\" {\n}\n", 1, "unknown escape"},
      {"category c @ {\n  objects: x;\n}\n", 1, "unexpected character '@'"},
      {"category c {\n  objects: x;\n", 3, "expected '}', found end of input"},
      {"category c {\n  objeks: x;\n}\n", 2, "unknown section 'objeks' in a category block"},
      {"functor F : a {\n}\n", 1, "expected '->'"},
      {"doublecat d {\n  mode: sometimes;\n}\n", 2, "mode must be 'exhaustive' or 'probe'"},
      {"doublecat d {\n  carrier: bag;\n}\n", 2, "carrier must be 'set' or 'indexed'"},
      {"verity v {\n  bridge: a;\n  square: b;\n}\n", 3,
       "a verity block takes a single 'bridge' or 'square' section"},
      {"probes p {\n  target: a;\n  instance: \"law\" [1, x];\n}\n", 3,
       "expected an integer"},
      {"bicat b {\n  associator: [f, g] => t;\n}\n", 2, "expected"},
  };
  for (const auto& c : cases) {
    CAPTURE(c.text);
    const parse_result r = parse_presentation(c.text);
    CHECK(!r.ok());
    REQUIRE(!r.diagnostics.empty());
    CHECK(has_message(r.diagnostics, c.fragment));
    bool span_on_line = false;
    for (const auto& d : r.diagnostics) {
      CHECK(d.span.line >= 1);
      CHECK(d.span.column >= 1);
      if (d.span.line == c.line && d.message.find(c.fragment) != std::string::npos)
        span_on_line = true;
    }
    CHECK(span_on_line);
  }
}

TEST_CASE("the parser recovers at block boundaries") {
  const parse_result r = parse_presentation(
      "category c {\n  objects: x;\n}\n\nnonsense tokens ;\n\ncategory d {\n  objects: y;\n}\n");
  CHECK(!r.ok());
  CHECK(has_message(r.diagnostics, "expected a block keyword"));
  REQUIRE(r.ast.blocks.size() == 2);
  CHECK(std::get<ast_category>(r.ast.blocks.at(0)).name.text == "c");
  CHECK(std::get<ast_category>(r.ast.blocks.at(1)).name.text == "d");
}

TEST_CASE("duplicate single-value sections are rejected at parse time") {
  const parse_result r = parse_presentation(
      "doublecat d {\n  vertical: a;\n  vertical: b;\n}\n");
  CHECK(!r.ok());
  CHECK(has_message(r.diagnostics, "duplicate section 'vertical'"));
}

TEST_CASE("golden corpus files reprint byte for byte") {
  for (const auto& name : corpus_files) {
    CAPTURE(name);
    const std::string text = slurp(corpus_path(name));
    const parse_result r = parse_presentation(text, name);
    REQUIRE_MESSAGE(r.ok(), name);
    CHECK(print_presentation(r.ast) == text);
  }
}

TEST_CASE("the corpus elaborates with every law report passing") {
  for (const auto& name : corpus_files) {
    CAPTURE(name);
    const std::string text = slurp(corpus_path(name));
    const parse_result r = parse_presentation(text, name);
    REQUIRE(r.ok());
    const elab_result el = elaborate(r.ast, name);
    for (const auto& d : el.diagnostics) CAPTURE(format_diagnostic(d));
    REQUIRE(el.ok());
    CHECK(!el.reports.empty());
    for (const auto& rep : el.reports) {
      CAPTURE(rep.artifact);
      CHECK(rep.ok());
    }
  }
}

TEST_CASE("elaborated stock categories equal their factories") {
  auto load = [](const std::string& file) {
    const parse_result r = parse_presentation(slurp(corpus_path(file)), file);
    REQUIRE(r.ok());
    elab_result el = elaborate(r.ast, file);
    REQUIRE(el.ok());
    return el;
  };

  CHECK(*load("one.fincat").find_cat("one") == cat_one());
  CHECK(*load("two.fincat").find_cat("two") == walking_arrow());
  CHECK(*load("walking_iso.fincat").find_cat("walking_iso") == walking_iso());
  CHECK(*load("parallel_pair.fincat").find_cat("parallel_pair") == parallel_pair());

  fin_cat chain3 = chain_poset(3);
  chain3.name = "chain3";
  CHECK(*load("chain3.fincat").find_cat("chain3") == chain3);

  fin_cat ipc = iso_plus_chain(3);
  ipc.name = "iso_plus_chain3";
  CHECK(*load("iso_plus_chain3.fincat").find_cat("iso_plus_chain3") == ipc);

  // skel_finset names its identity arrows by graph, the DSL by id_ prefix, so
  // the comparison is structural
  const elab_result el = load("finset2.fincat");
  const fin_cat* fs = el.find_cat("finset2");
  REQUIRE(fs != nullptr);
  const fin_cat stock = skel_finset(2).cat;
  CHECK(fs->objects == stock.objects);
  CHECK(fs->identity == stock.identity);
  CHECK(fs->comp_table == stock.comp_table);
  REQUIRE(fs->n_arrows() == stock.n_arrows());
  for (int f = 0; f < fs->n_arrows(); ++f) {
    CHECK(fs->arrows[f].src == stock.arrows[f].src);
    CHECK(fs->arrows[f].tgt == stock.arrows[f].tgt);
    if (!stock.is_identity(f)) CHECK(fs->arrows[f].name == stock.arrows[f].name);
  }
}

TEST_CASE("elaborated functors and profunctors equal their factories") {
  {
    const parse_result r = parse_presentation(slurp(corpus_path("ends.fincat")), "ends.fincat");
    REQUIRE(r.ok());
    const elab_result el = elaborate(r.ast, "ends.fincat");
    REQUIRE(el.ok());
    REQUIRE(el.functors.size() == 1);
    CHECK(el.functors[0].src == "two");
    CHECK(el.functors[0].tgt == "chain3");
    CHECK(el.functors[0].value.obj_map == std::vector<int>{0, 2});
  }
  {
    const parse_result r =
        parse_presentation(slurp(corpus_path("hom_two.fincat")), "hom_two.fincat");
    REQUIRE(r.ok());
    const elab_result el = elaborate(r.ast, "hom_two.fincat");
    REQUIRE(el.ok());
    REQUIRE(el.profs.size() == 1);
    fin_profunctor stock = hom_profunctor(walking_arrow());
    stock.name = "hom_two";
    CHECK(el.profs[0].value.count == stock.count);
    CHECK(el.profs[0].value.left == stock.left);
    CHECK(el.profs[0].value.right == stock.right);
  }
}

TEST_CASE("elaborated bicats equal their factories up to identity names") {
  auto load_bicat = [](const std::string& file, const std::string& block) {
    const parse_result r = parse_presentation(slurp(corpus_path(file)), file);
    REQUIRE(r.ok());
    const elab_result el = elaborate(r.ast, file);
    REQUIRE(el.ok());
    const fin_bicat* b = el.find_bicat(block);
    REQUIRE(b != nullptr);
    return *b;
  };

  fin_bicat z2 = delooping_z2();
  z2.name = "delooping_z2";
  CHECK(load_bicat("delooping_z2.vdb", "delooping_z2") == with_dsl_identity_names(z2));

  fin_bicat pm = poset_monoid_bicat();
  pm.name = "poset_monoid";
  CHECK(load_bicat("poset_monoid.vdb", "poset_monoid") == with_dsl_identity_names(pm));

  fin_bicat disc = discrete_bicat(walking_iso());
  disc.name = "disc_iso";
  CHECK(load_bicat("disc_iso.vdb", "disc_iso") == disc);
}

TEST_CASE("elaborated double categories equal their sources") {
  auto load_double = [](const std::string& file, const std::string& block) {
    const parse_result r = parse_presentation(slurp(corpus_path(file)), file);
    REQUIRE(r.ok());
    const elab_result el = elaborate(r.ast, file);
    for (const auto& d : el.diagnostics) CAPTURE(format_diagnostic(d));
    REQUIRE(el.ok());
    const pseudo_double_cat* d = el.find_double(block);
    REQUIRE(d != nullptr);
    return *d;
  };

  CHECK(load_double("z2_cocycle.dblcat", "z2_cocycle") == z2_cocycle_double(false));
  CHECK(load_double("z2_twisted.vdb", "z2_cocycle_twisted") == z2_cocycle_double(true));

  fin_cat chain3 = chain_poset(3);
  chain3.name = "chain3";
  pseudo_double_cat span = span_double_cat(chain3, canonical_pullbacks(chain3)).d;
  span.name = "span_chain3";
  CHECK(load_double("span_chain3.dblcat", "span_chain3") == span);

  pseudo_double_cat sq = square_double_cat(walking_arrow());
  sq.name = "sq_two";
  for (int h = 0; h < sq.n_hors(); ++h)
    if (sq.vcat.is_identity(h)) sq.hors[h].name = "hid_" + sq.vcat.objects[sq.vcat.arrows[h].src];
  CHECK(load_double("sq_two.dblcat", "sq_two") == sq);
}

TEST_CASE("verity blocks derive from earlier blocks and keep their own name") {
  const parse_result r =
      parse_presentation(slurp(corpus_path("z2_twisted.vdb")), "z2_twisted.vdb");
  REQUIRE(r.ok());
  const elab_result el = elaborate(r.ast, "z2_twisted.vdb");
  REQUIRE(el.ok());
  const verity_double_bicat* vb = el.find_verity("z2_twisted_bridge");
  REQUIRE(vb != nullptr);
  CHECK(vb->name == "z2_twisted_bridge");

  verity_double_bicat direct = double_cat_to_verity(z2_cocycle_double(true));
  direct.name = "z2_twisted_bridge";
  CHECK(vb->squares.size() == direct.squares.size());
  CHECK(vb->horb.n1() == direct.horb.n1());
  CHECK(check_verity_laws(*vb).ok());
}

TEST_CASE("unknown names and forward references are diagnostics") {
  {
    const parse_result r = parse_presentation(
        "category c {\n  objects: x;\n  arrows: f: x -> y;\n}\n");
    REQUIRE(r.ok());
    const elab_result el = elaborate(r.ast);
    CHECK(!el.ok());
    CHECK(has_message(el.diagnostics, "unknown object 'y'"));
  }
  {
    // the doublecat appears before its vertical category, which backward
    // resolution cannot see
    const parse_result r = parse_presentation(
        "doublecat d {\n  vertical: one;\n}\n\ncategory one {\n  objects: star;\n}\n");
    REQUIRE(r.ok());
    const elab_result el = elaborate(r.ast);
    CHECK(!el.ok());
    CHECK(has_message(el.diagnostics, "unknown category 'one'"));
  }
}

TEST_CASE("duplicates cite the first declaration") {
  const parse_result r = parse_presentation(
      "category c {\n  objects: x,\n           x;\n}\n");
  REQUIRE(r.ok());
  const elab_result el = elaborate(r.ast);
  CHECK(!el.ok());
  CHECK(has_message(el.diagnostics, "duplicate object name 'x'; first declared at line 2"));

  const parse_result r2 = parse_presentation(
      "category c {\n  objects: x;\n}\n\ncategory c {\n  objects: y;\n}\n");
  REQUIRE(r2.ok());
  const elab_result el2 = elaborate(r2.ast);
  CHECK(!el2.ok());
  CHECK(has_message(el2.diagnostics, "duplicate block name 'c'; first declared at line 1"));
}

TEST_CASE("reserved identity names cannot be declared") {
  const parse_result r = parse_presentation(
      "category c {\n  objects: x;\n  arrows: id_y: x -> x;\n}\n");
  REQUIRE(r.ok());
  const elab_result el = elaborate(r.ast);
  CHECK(!el.ok());
  CHECK(has_message(el.diagnostics, "reserved"));
}

TEST_CASE("stated identity data is rejected everywhere it is synthesized") {
  {
    const parse_result r = parse_presentation(
        "category c {\n  objects: x;\n  arrows: f: x -> x;\n"
        "  compose: f . id_x = f, f . f = f;\n}\n");
    REQUIRE(r.ok());
    const elab_result el = elaborate(r.ast);
    CHECK(!el.ok());
    CHECK(has_message(el.diagnostics, "identity composites are synthesized"));
  }
  {
    const parse_result r = parse_presentation(
        "category a {\n  objects: x;\n  arrows: f: x -> x;\n  compose: f . f = f;\n}\n\n"
        "functor F : a -> a {\n  objects: x => x;\n  arrows: id_x => f, f => f;\n}\n");
    REQUIRE(r.ok());
    const elab_result el = elaborate(r.ast);
    CHECK(!el.ok());
    CHECK(has_message(el.diagnostics, "identity images are synthesized"));
  }
  {
    const parse_result r = parse_presentation(
        "category a {\n  objects: x;\n}\n\n"
        "profunctor P : a -|> a {\n  elements: e0: x * x;\n  left: id_x(e0) = e0;\n}\n");
    REQUIRE(r.ok());
    const elab_result el = elaborate(r.ast);
    CHECK(!el.ok());
    CHECK(has_message(el.diagnostics, "identity actions are synthesized"));
  }
  {
    const parse_result r = parse_presentation(
        "bicat b {\n  object: pt;\n  cells1: e;\n  identity1: pt => e;\n"
        "  compose1: e * e = e;\n  hcompose: id_e * id_e = id_e;\n}\n");
    REQUIRE(r.ok());
    const elab_result el = elaborate(r.ast);
    CHECK(!el.ok());
    CHECK(has_message(el.diagnostics,
                      "horizontal composites of two identity 2-cells are synthesized"));
  }
  {
    const parse_result r = parse_presentation(
        "category one {\n  objects: star;\n}\n\n"
        "doublecat d {\n  vertical: one;\n  horizontals: h0: star -> star;\n"
        "  horid: star => h0;\n  hcompose: h0 * h0 = h0;\n"
        "  squares: s0: [id_star, id_star, h0, h0];\n  sqvid: h0 => s0;\n"
        "  sqhid: id_star => s0;\n  vstack: s0 . s0 = s0;\n  hpaste: s0 * s0 = s0;\n}\n");
    REQUIRE(r.ok());
    const elab_result el = elaborate(r.ast);
    CHECK(!el.ok());
    CHECK(has_message(el.diagnostics, "unit stackings are synthesized"));
  }
}

TEST_CASE("non-composable and duplicate entries are diagnostics") {
  const parse_result r = parse_presentation(
      "category c {\n  objects: x, y;\n  arrows: f: x -> y;\n  compose: f . f = f;\n}\n");
  REQUIRE(r.ok());
  const elab_result el = elaborate(r.ast);
  CHECK(!el.ok());
  CHECK(has_message(el.diagnostics, "not composable"));

  const parse_result r2 = parse_presentation(
      "category c {\n  objects: x;\n  arrows: f: x -> x;\n"
      "  compose: f . f = f, f . f = id_x;\n}\n");
  REQUIRE(r2.ok());
  const elab_result el2 = elaborate(r2.ast);
  CHECK(!el2.ok());
  CHECK(has_message(el2.diagnostics, "duplicate composition entry for (f, f)"));
}

TEST_CASE("incomplete tables aggregate into one diagnostic") {
  const parse_result r = parse_presentation(
      "category c {\n  objects: x;\n  arrows: f: x -> x, g: x -> x;\n}\n");
  REQUIRE(r.ok());
  const elab_result el = elaborate(r.ast);
  REQUIRE(el.diagnostics.size() == 1);
  CHECK(el.diagnostics[0].message.find("incomplete composition table") != std::string::npos);
  CHECK(el.diagnostics[0].message.find("(and 3 more)") != std::string::npos);
}

TEST_CASE("language errors are diagnostics while law failures are reports") {
  // the table is total and well-formed as data, but the stated composite has
  // the wrong endpoints, which only the law check can object to
  const parse_result r = parse_presentation(
      "category c {\n  objects: x, y;\n  arrows: f: x -> y, g: y -> x;\n"
      "  compose: g . f = id_y, f . g = id_y;\n}\n");
  REQUIRE(r.ok());
  const elab_result el = elaborate(r.ast);
  CHECK(el.ok());
  REQUIRE(el.reports.size() == 1);
  CHECK(!el.reports[0].ok());
  const law_result* typing = el.reports[0].find("typing");
  REQUIRE(typing != nullptr);
  CHECK(!typing->passed);
}

TEST_CASE("functor and profunctor tables must be total") {
  const parse_result r = parse_presentation(
      "category a {\n  objects: x, y;\n  arrows: f: x -> y;\n}\n\n"
      "functor F : a -> a {\n  objects: x => x;\n}\n");
  REQUIRE(r.ok());
  const elab_result el = elaborate(r.ast);
  CHECK(!el.ok());
  CHECK(has_message(el.diagnostics, "incomplete functor tables"));
  CHECK(has_message(el.diagnostics, "the image of object y"));

  const parse_result r2 = parse_presentation(
      "category a {\n  objects: x, y;\n  arrows: f: x -> y;\n}\n\n"
      "profunctor P : a -|> a {\n  elements: e0: x * x, e1: y * x;\n"
      "  left: f(e0) = e0;\n  right: f(e0) = e0;\n}\n");
  REQUIRE(r2.ok());
  const elab_result el2 = elaborate(r2.ast);
  CHECK(!el2.ok());
  CHECK(has_message(el2.diagnostics, "is not in the domain of the action"));
  CHECK(has_message(el2.diagnostics, "is not in the result slot"));
  CHECK(has_message(el2.diagnostics, "incomplete action tables"));
}

TEST_CASE("profunctor actions elaborate against their slots") {
  const parse_result r = parse_presentation(
      "category a {\n  objects: x, y;\n  arrows: f: x -> y;\n}\n\n"
      "profunctor P : a -|> a {\n  elements: e0: y * x, e1: x * x, e2: y * y;\n"
      "  left: f(e0) = e1;\n  right: f(e0) = e2;\n}\n");
  REQUIRE(r.ok());
  const elab_result el = elaborate(r.ast);
  for (const auto& d : el.diagnostics) CAPTURE(format_diagnostic(d));
  REQUIRE(el.ok());
  const fin_profunctor& p = el.profs.at(0).value;
  const fin_cat a = *el.find_cat("a");
  // the left action of f carries the (y, x) fiber to the (x, x) fiber and the
  // right action carries it to the (y, y) fiber
  int f = -1;
  for (int g = 0; g < a.n_arrows(); ++g)
    if (!a.is_identity(g)) f = g;
  REQUIRE(f >= 0);
  CHECK(p.left[f][0] == std::vector<int>{0});
  CHECK(p.right[f][1] == std::vector<int>{0});
  CHECK(check_profunctor_laws(a, a, p).ok());
}

TEST_CASE("bicat blocks demand their shape") {
  {
    const parse_result r = parse_presentation(
        "category a {\n  objects: x;\n}\n\nbicat b {\n  discrete: a;\n  object: x;\n}\n");
    REQUIRE(r.ok());
    const elab_result el = elaborate(r.ast);
    CHECK(!el.ok());
    CHECK(has_message(el.diagnostics, "takes no sections besides 'discrete'"));
  }
  {
    const parse_result r = parse_presentation("bicat b {\n  object: pt;\n}\n");
    REQUIRE(r.ok());
    const elab_result el = elaborate(r.ast);
    CHECK(!el.ok());
    CHECK(has_message(el.diagnostics, "at least one 1-cell"));
  }
  {
    // e fails to be a strict unit, so the unitor components stop defaulting
    const parse_result r = parse_presentation(
        "bicat b {\n  object: pt;\n  cells1: e, s;\n  identity1: pt => e;\n"
        "  compose1: e * e = s, s * e = e, e * s = e, s * s = s;\n}\n");
    REQUIRE(r.ok());
    const elab_result el = elaborate(r.ast);
    CHECK(!el.ok());
    CHECK(has_message(el.diagnostics, "incomplete unitor tables"));
    CHECK(has_message(el.diagnostics, "the lunitor component at e"));
  }
}

TEST_CASE("probe mode permits partial double categories") {
  const std::string body =
      "category one {\n  objects: star;\n}\n\n"
      "doublecat d {\n  vertical: one;\n  horizontals: h0: star -> star;\n"
      "  hcompose: h0 * h0 = h0;\n  squares: s0: [id_star, id_star, h0, h0];\n"
      "  sqvid: h0 => s0;\n  hpaste: s0 * s0 = s0;\n";

  const parse_result strict = parse_presentation(body + "}\n");
  REQUIRE(strict.ok());
  const elab_result el = elaborate(strict.ast);
  CHECK(!el.ok());
  CHECK(has_message(el.diagnostics, "incomplete horizontal identity table"));
  CHECK(has_message(el.diagnostics, "identity square tables"));

  const parse_result probe = parse_presentation(body + "  mode: probe;\n}\n");
  REQUIRE(probe.ok());
  const elab_result el2 = elaborate(probe.ast);
  for (const auto& d : el2.diagnostics) CAPTURE(format_diagnostic(d));
  REQUIRE(el2.ok());
  const pseudo_double_cat* d = el2.find_double("d");
  REQUIRE(d != nullptr);
  CHECK(d->mode == check_mode::probe);
  CHECK(d->horid[0] == -1);
  CHECK(el2.reports.back().mode == check_mode::probe);
  CHECK(el2.reports.back().ok());
}

TEST_CASE("blocks with errors poison their dependents") {
  const parse_result r = parse_presentation(
      "category c {\n  objects: x;\n  arrows: f: x -> x, g: x -> x;\n}\n\n"
      "doublecat d {\n  vertical: c;\n}\n");
  REQUIRE(r.ok());
  const elab_result el = elaborate(r.ast);
  CHECK(!el.ok());
  CHECK(has_message(el.diagnostics, "incomplete composition table"));
  CHECK(has_message(el.diagnostics, "category 'c' has errors and cannot be used"));
}

TEST_CASE("probes replay witnesses against their target") {
  const std::string twisted = slurp(corpus_path("z2_twisted.vdb"));
  {
    const parse_result r = parse_presentation(twisted);
    REQUIRE(r.ok());
    const elab_result el = elaborate(r.ast);
    REQUIRE(el.ok());
    const law_report& probes = el.reports.back();
    CHECK(probes.artifact == "probes:z2_twisted_probes");
    CHECK(probes.mode == check_mode::probe);
    CHECK(probes.ok());
    CHECK(probes.laws.size() == 4);
  }
  {
    // the twisted unitor is a genuine strictness failure, which a probe can
    // witness without making the block erroneous
    const parse_result r = parse_presentation(
        twisted + "\nprobes strictness {\n  target: z2_cocycle_twisted;\n"
                  "  instance: \"strict-unitality\" [1];\n}\n");
    REQUIRE(r.ok());
    const elab_result el = elaborate(r.ast);
    REQUIRE(el.ok());
    const law_report& rep = el.reports.back();
    CHECK(rep.artifact == "probes:strictness");
    REQUIRE(rep.laws.size() == 1);
    CHECK(!rep.laws[0].passed);
  }
  {
    const parse_result r = parse_presentation(
        twisted + "\nprobes oob {\n  target: z2_cocycle_twisted;\n"
                  "  instance: \"pentagon\" [7, 0, 0, 0];\n}\n");
    REQUIRE(r.ok());
    const elab_result el = elaborate(r.ast);
    CHECK(!el.ok());
    CHECK(has_message(el.diagnostics, "closure exceeded"));
  }
  {
    const parse_result r = parse_presentation(
        twisted + "\nprobes vacuous {\n  target: z2_cocycle_twisted;\n"
                  "  instance: \"no-such-law\" [0];\n}\n");
    REQUIRE(r.ok());
    const elab_result el = elaborate(r.ast);
    REQUIRE(el.ok());
    CHECK(el.reports.back().ok());
  }
  {
    const parse_result r = parse_presentation(
        twisted + "\nprobes lost {\n  target: nobody;\n  instance: \"pentagon\" [0];\n}\n");
    REQUIRE(r.ok());
    const elab_result el = elaborate(r.ast);
    CHECK(!el.ok());
    CHECK(has_message(el.diagnostics, "unknown probe target 'nobody'"));
  }
}

TEST_CASE("canonicalizing a multi-object bicat is a precondition failure") {
  try {
    to_ast_one_object(discrete_bicat(walking_arrow()));
    FAIL("unreachable");
  } catch (const error& e) {
    CHECK(e.code() == errc::precondition_failed);
  }
}

TEST_CASE("span corpus files keep their carrier and mode flags") {
  const std::string text = slurp(corpus_path("span_chain3.dblcat"));
  CHECK(text.find("carrier: indexed;") != std::string::npos);
  CHECK(text.find("mode: probe;") == std::string::npos);

  const parse_result r = parse_presentation(text);
  REQUIRE(r.ok());
  const elab_result el = elaborate(r.ast);
  REQUIRE(el.ok());
  const pseudo_double_cat* d = el.find_double("span_chain3");
  REQUIRE(d != nullptr);
  CHECK(!d->hor_set_presented);
  CHECK(d->mode == check_mode::exhaustive);
}
