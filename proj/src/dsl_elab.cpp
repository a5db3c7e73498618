#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "dblkit/dsl.hpp"
#include "dblkit/error.hpp"

namespace dblkit {
namespace dsl {

namespace {

bool reserved_name(const std::string& s) { return s.rfind("id_", 0) == 0; }

std::string at_line(const source_span& s) {
  return "line " + std::to_string(s.line) + ", column " + std::to_string(s.column);
}

// identity arrows are referenced by their reserved name regardless of how the
// value spells them
std::string arrow_ref(const fin_cat& c, int f) {
  return c.is_identity(f) ? "id_" + c.objects[c.arrows[f].src] : c.arrows[f].name;
}

struct name_scope {
  std::map<std::string, std::pair<int, source_span>> ids;

  bool insert(const std::string& text, int id, const source_span& span) {
    return ids.emplace(text, std::make_pair(id, span)).second;
  }
  const std::pair<int, source_span>* find(const std::string& text) const {
    auto it = ids.find(text);
    return it == ids.end() ? nullptr : &it->second;
  }
};

struct cat_names {
  name_scope objects, arrows;

  explicit cat_names(const fin_cat& c) {
    for (int x = 0; x < c.n_objects(); ++x) objects.insert(c.objects[x], x, {});
    for (int f = 0; f < c.n_arrows(); ++f) arrows.insert(arrow_ref(c, f), f, {});
  }
};

struct elaborator {
  const std::string& file;
  elab_result& res;
  std::map<std::string, source_span> block_names;
  std::set<std::string> bad_blocks;

  void error(const source_span& span, std::string msg) {
    res.diagnostics.push_back({file, span, severity::error, std::move(msg)});
  }

  bool declare(name_scope& scope, const ast_name& n, int id, const std::string& what) {
    if (reserved_name(n.text)) {
      error(n.span, what + " name '" + n.text +
                        "' is reserved; names beginning with id_ denote synthesized identities");
      return false;
    }
    if (const auto* prev = scope.find(n.text)) {
      error(n.span, "duplicate " + what + " name '" + n.text + "'; first declared at " +
                        at_line(prev->second));
      return false;
    }
    scope.insert(n.text, id, n.span);
    return true;
  }

  int resolve(const name_scope& scope, const ast_name& n, const std::string& what) {
    if (const auto* hit = scope.find(n.text)) return hit->first;
    error(n.span, "unknown " + what + " '" + n.text + "'");
    return -1;
  }

  void incomplete(const ast_name& block, const std::string& table,
                  const std::vector<std::string>& missing) {
    if (missing.empty()) return;
    std::string msg = "incomplete " + table + ": " + missing.front() + " has no entry";
    if (missing.size() > 1) msg += " (and " + std::to_string(missing.size() - 1) + " more)";
    error(block.span, msg);
  }

  bool claim_block(const ast_name& n) {
    auto [it, fresh] = block_names.emplace(n.text, n.span);
    if (!fresh) {
      error(n.span,
            "duplicate block name '" + n.text + "'; first declared at " + at_line(it->second));
      return false;
    }
    return true;
  }

  template <typename Vec>
  const typename Vec::value_type* lookup(const Vec& entries, const std::string& name) {
    for (const auto& e : entries)
      if (e.name == name) return &e;
    return nullptr;
  }

  const fin_cat* find_cat(const ast_name& n) {
    if (const auto* e = lookup(res.cats, n.text)) return &e->value;
    error(n.span, bad_blocks.count(n.text)
                      ? "category '" + n.text + "' has errors and cannot be used"
                      : "unknown category '" + n.text + "'");
    return nullptr;
  }

  const fin_bicat* find_bicat(const ast_name& n) {
    if (const auto* e = lookup(res.bicats, n.text)) return &e->value;
    error(n.span, bad_blocks.count(n.text) ? "bicat '" + n.text + "' has errors and cannot be used"
                                           : "unknown bicat '" + n.text + "'");
    return nullptr;
  }

  const pseudo_double_cat* find_double(const ast_name& n) {
    if (const auto* e = lookup(res.doubles, n.text)) return &e->value;
    error(n.span, bad_blocks.count(n.text)
                      ? "doublecat '" + n.text + "' has errors and cannot be used"
                      : "unknown doublecat '" + n.text + "'");
    return nullptr;
  }

  // --- category ---------------------------------------------------------------

  void do_category(const ast_category& a) {
    bool bad = false;
    name_scope objects, arrows;
    std::vector<std::string> arr_names;
    std::vector<std::pair<int, int>> arr_ends;
    std::vector<bool> arr_is_id;
    cat_builder b(a.name.text);

    int n_objects = 0;
    for (const auto& o : a.objects) {
      if (!declare(objects, o, n_objects, "object")) {
        bad = true;
        continue;
      }
      const int x = b.add_object(o.text);
      ++n_objects;
      arrows.insert("id_" + o.text, b.identity_of(x), o.span);
      arr_names.push_back("id_" + o.text);
      arr_ends.push_back({x, x});
      arr_is_id.push_back(true);
    }
    for (const auto& d : a.arrows) {
      const int s = resolve(objects, d.src, "object");
      const int t = resolve(objects, d.tgt, "object");
      if (s < 0 || t < 0) {
        bad = true;
        continue;
      }
      if (!declare(arrows, d.name, static_cast<int>(arr_names.size()), "arrow")) {
        bad = true;
        continue;
      }
      b.add_arrow(d.name.text, s, t);
      arr_names.push_back(d.name.text);
      arr_ends.push_back({s, t});
      arr_is_id.push_back(false);
    }

    std::set<std::pair<int, int>> stated;
    for (const auto& e : a.compose) {
      const int f = resolve(arrows, e.before, "arrow");
      const int g = resolve(arrows, e.after, "arrow");
      const int h = resolve(arrows, e.result, "arrow");
      if (f < 0 || g < 0 || h < 0) {
        bad = true;
        continue;
      }
      if (arr_is_id[f] || arr_is_id[g]) {
        error((arr_is_id[f] ? e.before : e.after).span,
              "identity composites are synthesized; drop this entry");
        bad = true;
        continue;
      }
      if (arr_ends[f].second != arr_ends[g].first) {
        error(e.before.span,
              "arrows '" + arr_names[f] + "' and '" + arr_names[g] + "' are not composable");
        bad = true;
        continue;
      }
      if (!stated.insert({f, g}).second) {
        error(e.before.span,
              "duplicate composition entry for (" + arr_names[f] + ", " + arr_names[g] + ")");
        bad = true;
        continue;
      }
      b.set_comp(f, g, h);
    }

    std::vector<std::string> missing;
    for (size_t f = 0; f < arr_names.size(); ++f)
      for (size_t g = 0; g < arr_names.size(); ++g) {
        if (arr_is_id[f] || arr_is_id[g] || arr_ends[f].second != arr_ends[g].first) continue;
        if (!stated.count({static_cast<int>(f), static_cast<int>(g)}))
          missing.push_back("comp(" + arr_names[f] + ", " + arr_names[g] + ")");
      }
    incomplete(a.name, "composition table", missing);

    if (bad || !missing.empty()) {
      bad_blocks.insert(a.name.text);
      return;
    }
    try {
      res.cats.push_back({a.name.text, std::move(b).build()});
    } catch (const dblkit::error& e) {
      error(a.name.span, e.what());
      bad_blocks.insert(a.name.text);
      return;
    }
    res.reports.push_back(check_category_laws(res.cats.back().value));
  }

  // --- functor ----------------------------------------------------------------

  void do_functor(const ast_functor& a) {
    const fin_cat* src = find_cat(a.src);
    const fin_cat* tgt = find_cat(a.tgt);
    if (!src || !tgt) {
      bad_blocks.insert(a.name.text);
      return;
    }
    cat_names sn(*src), tn(*tgt);
    bool bad = false;
    std::vector<int> obj_map(src->n_objects(), -1);
    std::vector<int> arr_map(src->n_arrows(), -1);

    for (const auto& e : a.objects) {
      const int x = resolve(sn.objects, e.from, "object of '" + a.src.text + "'");
      const int y = resolve(tn.objects, e.to, "object of '" + a.tgt.text + "'");
      if (x < 0 || y < 0) {
        bad = true;
        continue;
      }
      if (obj_map[x] != -1) {
        error(e.from.span, "duplicate image for object '" + e.from.text + "'");
        bad = true;
        continue;
      }
      obj_map[x] = y;
    }
    for (const auto& e : a.arrows) {
      const int f = resolve(sn.arrows, e.from, "arrow of '" + a.src.text + "'");
      const int k = resolve(tn.arrows, e.to, "arrow of '" + a.tgt.text + "'");
      if (f < 0 || k < 0) {
        bad = true;
        continue;
      }
      if (src->is_identity(f)) {
        error(e.from.span, "identity images are synthesized; drop this entry");
        bad = true;
        continue;
      }
      if (arr_map[f] != -1) {
        error(e.from.span, "duplicate image for arrow '" + e.from.text + "'");
        bad = true;
        continue;
      }
      arr_map[f] = k;
    }

    std::vector<std::string> missing;
    for (int x = 0; x < src->n_objects(); ++x)
      if (obj_map[x] < 0) missing.push_back("the image of object " + src->objects[x]);
    for (int f = 0; f < src->n_arrows(); ++f)
      if (!src->is_identity(f) && arr_map[f] < 0)
        missing.push_back("the image of arrow " + src->arrows[f].name);
    incomplete(a.name, "functor tables", missing);

    if (bad || !missing.empty()) {
      bad_blocks.insert(a.name.text);
      return;
    }
    for (int x = 0; x < src->n_objects(); ++x)
      arr_map[src->identity[x]] = tgt->identity[obj_map[x]];
    fin_functor f;
    f.name = a.name.text;
    f.obj_map = std::move(obj_map);
    f.arr_map = std::move(arr_map);
    res.functors.push_back({a.name.text, a.src.text, a.tgt.text, f});
    res.reports.push_back(check_functor_laws(*src, *tgt, f));
  }

  // --- profunctor -------------------------------------------------------------

  void do_profunctor(const ast_profunctor& a) {
    const fin_cat* csrc = find_cat(a.src);
    const fin_cat* ctgt = find_cat(a.tgt);
    if (!csrc || !ctgt) {
      bad_blocks.insert(a.name.text);
      return;
    }
    cat_names cs(*csrc), ds(*ctgt);
    bool bad = false;

    fin_profunctor p;
    p.name = a.name.text;
    p.count.assign(ctgt->n_objects(), std::vector<int>(csrc->n_objects(), 0));
    name_scope elems;
    struct slot_ref {
      int d, c, k;
    };
    std::vector<slot_ref> einfo;
    for (const auto& e : a.elements) {
      const int d = resolve(ds.objects, e.d, "object of '" + a.tgt.text + "'");
      const int c = resolve(cs.objects, e.c, "object of '" + a.src.text + "'");
      if (d < 0 || c < 0) {
        bad = true;
        continue;
      }
      if (!declare(elems, e.name, static_cast<int>(einfo.size()), "element")) {
        bad = true;
        continue;
      }
      einfo.push_back({d, c, p.count[d][c]++});
    }
    if (bad) {
      bad_blocks.insert(a.name.text);
      return;
    }

    p.left.assign(ctgt->n_arrows(), {});
    for (int g = 0; g < ctgt->n_arrows(); ++g) {
      const int d2 = ctgt->arrows[g].tgt;
      p.left[g].assign(csrc->n_objects(), {});
      for (int c = 0; c < csrc->n_objects(); ++c) {
        p.left[g][c].assign(p.count[d2][c], -1);
        if (ctgt->is_identity(g))
          for (int k = 0; k < p.count[d2][c]; ++k) p.left[g][c][k] = k;
      }
    }
    p.right.assign(csrc->n_arrows(), {});
    for (int f = 0; f < csrc->n_arrows(); ++f) {
      const int c1 = csrc->arrows[f].src;
      p.right[f].assign(ctgt->n_objects(), {});
      for (int d = 0; d < ctgt->n_objects(); ++d) {
        p.right[f][d].assign(p.count[d][c1], -1);
        if (csrc->is_identity(f))
          for (int k = 0; k < p.count[d][c1]; ++k) p.right[f][d][k] = k;
      }
    }

    for (const auto& e : a.left) {
      const int g = resolve(ds.arrows, e.arrow, "arrow of '" + a.tgt.text + "'");
      const int el = resolve(elems, e.elem, "element");
      const int r = resolve(elems, e.result, "element");
      if (g < 0 || el < 0 || r < 0) {
        bad = true;
        continue;
      }
      if (ctgt->is_identity(g)) {
        error(e.arrow.span, "identity actions are synthesized; drop this entry");
        bad = true;
        continue;
      }
      const auto& ei = einfo[el];
      const auto& ri = einfo[r];
      if (ei.d != ctgt->arrows[g].tgt) {
        error(e.elem.span, "element '" + e.elem.text + "' is not in the domain of the action by '" +
                               e.arrow.text + "'");
        bad = true;
        continue;
      }
      if (ri.d != ctgt->arrows[g].src || ri.c != ei.c) {
        error(e.result.span,
              "element '" + e.result.text + "' is not in the result slot of this action");
        bad = true;
        continue;
      }
      int& cell = p.left[g][ei.c][ei.k];
      if (cell != -1) {
        error(e.elem.span,
              "duplicate left action entry for " + e.arrow.text + "(" + e.elem.text + ")");
        bad = true;
        continue;
      }
      cell = ri.k;
    }
    for (const auto& e : a.right) {
      const int f = resolve(cs.arrows, e.arrow, "arrow of '" + a.src.text + "'");
      const int el = resolve(elems, e.elem, "element");
      const int r = resolve(elems, e.result, "element");
      if (f < 0 || el < 0 || r < 0) {
        bad = true;
        continue;
      }
      if (csrc->is_identity(f)) {
        error(e.arrow.span, "identity actions are synthesized; drop this entry");
        bad = true;
        continue;
      }
      const auto& ei = einfo[el];
      const auto& ri = einfo[r];
      if (ei.c != csrc->arrows[f].src) {
        error(e.elem.span, "element '" + e.elem.text + "' is not in the domain of the action by '" +
                               e.arrow.text + "'");
        bad = true;
        continue;
      }
      if (ri.c != csrc->arrows[f].tgt || ri.d != ei.d) {
        error(e.result.span,
              "element '" + e.result.text + "' is not in the result slot of this action");
        bad = true;
        continue;
      }
      int& cell = p.right[f][ei.d][ei.k];
      if (cell != -1) {
        error(e.elem.span,
              "duplicate right action entry for " + e.arrow.text + "(" + e.elem.text + ")");
        bad = true;
        continue;
      }
      cell = ri.k;
    }

    std::vector<std::string> missing;
    for (int g = 0; g < ctgt->n_arrows(); ++g) {
      if (ctgt->is_identity(g)) continue;
      for (int c = 0; c < csrc->n_objects(); ++c)
        for (size_t k = 0; k < p.left[g][c].size(); ++k)
          if (p.left[g][c][k] < 0)
            missing.push_back("the left action of " + ctgt->arrows[g].name + " on slot (" +
                              ctgt->objects[ctgt->arrows[g].tgt] + ", " + csrc->objects[c] + ")");
    }
    for (int f = 0; f < csrc->n_arrows(); ++f) {
      if (csrc->is_identity(f)) continue;
      for (int d = 0; d < ctgt->n_objects(); ++d)
        for (size_t k = 0; k < p.right[f][d].size(); ++k)
          if (p.right[f][d][k] < 0)
            missing.push_back("the right action of " + csrc->arrows[f].name + " on slot (" +
                              ctgt->objects[d] + ", " + csrc->objects[csrc->arrows[f].src] + ")");
    }
    incomplete(a.name, "action tables", missing);

    if (bad || !missing.empty()) {
      bad_blocks.insert(a.name.text);
      return;
    }
    res.profs.push_back({a.name.text, a.src.text, a.tgt.text, p});
    res.reports.push_back(check_profunctor_laws(*csrc, *ctgt, p));
  }

  // --- bicat ------------------------------------------------------------------

  void do_bicat(const ast_bicat& a) {
    if (a.discrete_form) {
      const bool extras = !a.object.text.empty() || !a.cells1.empty() || !a.identity1.empty() ||
                          !a.compose1.empty() || !a.cells2.empty() || !a.vcompose.empty() ||
                          !a.hcompose.empty() || !a.lunitor.empty() || !a.runitor.empty() ||
                          !a.associator.empty();
      if (extras) {
        error(a.name.span, "a discrete bicat block takes no sections besides 'discrete'");
        bad_blocks.insert(a.name.text);
        return;
      }
      const fin_cat* c = find_cat(a.discrete_of);
      if (!c) {
        bad_blocks.insert(a.name.text);
        return;
      }
      fin_bicat b = discrete_bicat(*c);
      b.name = a.name.text;
      res.bicats.push_back({a.name.text, std::move(b)});
      res.reports.push_back(check_bicat_laws(res.bicats.back().value));
      return;
    }

    if (a.object.text.empty()) {
      error(a.name.span, "a bicat block needs either 'discrete' or 'object'");
      bad_blocks.insert(a.name.text);
      return;
    }

    fin_bicat b;
    b.name = a.name.text;
    b.objects = {a.object.text};
    bool bad = false;

    name_scope ones;
    for (const auto& n : a.cells1) {
      if (!declare(ones, n, b.n1(), "1-cell")) {
        bad = true;
        continue;
      }
      b.cells1.push_back({0, 0, n.text});
    }
    if (b.cells1.empty()) {
      error(a.name.span, "a one-object bicat needs at least one 1-cell");
      bad_blocks.insert(a.name.text);
      return;
    }

    b.id1.assign(1, -1);
    for (const auto& e : a.identity1) {
      if (e.from.text != a.object.text) {
        error(e.from.span, "unknown object '" + e.from.text + "'");
        bad = true;
        continue;
      }
      const int f = resolve(ones, e.to, "1-cell");
      if (f < 0) {
        bad = true;
        continue;
      }
      if (b.id1[0] != -1) {
        error(e.from.span, "duplicate identity1 entry for '" + e.from.text + "'");
        bad = true;
        continue;
      }
      b.id1[0] = f;
    }
    if (b.id1[0] < 0 && !bad) {
      error(a.name.span, "an identity1 entry naming the unit 1-cell is required");
      bad = true;
    }

    // stage 1: the 1-cell composition table, needed by every synthesis below
    const int n1 = b.n1();
    b.hcomp1_table.assign(static_cast<size_t>(n1) * n1, -1);
    std::set<std::pair<int, int>> stated1;
    for (const auto& e : a.compose1) {
      const int f = resolve(ones, e.before, "1-cell");
      const int g = resolve(ones, e.after, "1-cell");
      const int h = resolve(ones, e.result, "1-cell");
      if (f < 0 || g < 0 || h < 0) {
        bad = true;
        continue;
      }
      if (!stated1.insert({f, g}).second) {
        error(e.before.span, "duplicate composition entry for (" + b.cells1[f].name + ", " +
                                 b.cells1[g].name + ")");
        bad = true;
        continue;
      }
      b.hcomp1_ref(f, g) = h;
    }
    std::vector<std::string> missing;
    for (int f = 0; f < n1; ++f)
      for (int g = 0; g < n1; ++g)
        if (b.hcomp1(f, g) < 0)
          missing.push_back("hcomp1(" + b.cells1[f].name + ", " + b.cells1[g].name + ")");
    incomplete(a.name, "horizontal composition table for 1-cells", missing);
    if (bad || !missing.empty()) {
      bad_blocks.insert(a.name.text);
      return;
    }

    // stage 2: 2-cells, synthesized identities first
    name_scope twos;
    b.id2.assign(n1, -1);
    for (int f = 0; f < n1; ++f) {
      b.id2[f] = b.n2();
      twos.insert("id_" + b.cells1[f].name, b.id2[f], {});
      b.cells2.push_back({f, f, "id_" + b.cells1[f].name});
    }
    for (const auto& d : a.cells2) {
      const int s = resolve(ones, d.src, "1-cell");
      const int t = resolve(ones, d.tgt, "1-cell");
      if (s < 0 || t < 0) {
        bad = true;
        continue;
      }
      if (!declare(twos, d.name, b.n2(), "2-cell")) {
        bad = true;
        continue;
      }
      b.cells2.push_back({s, t, d.name.text});
    }

    const int n2 = b.n2();
    const auto is_id2 = [&](int t) { return t < n1; };  // identities were numbered first

    b.vcomp_table.assign(static_cast<size_t>(n2) * n2, -1);
    for (int t = 0; t < n2; ++t) {
      b.vcomp_ref(b.id2[b.cells2[t].src], t) = t;
      b.vcomp_ref(t, b.id2[b.cells2[t].tgt]) = t;
    }
    for (const auto& e : a.vcompose) {
      const int x = resolve(twos, e.before, "2-cell");
      const int y = resolve(twos, e.after, "2-cell");
      const int z = resolve(twos, e.result, "2-cell");
      if (x < 0 || y < 0 || z < 0) {
        bad = true;
        continue;
      }
      if (is_id2(x) || is_id2(y)) {
        error((is_id2(x) ? e.before : e.after).span,
              "vertical units are synthesized; drop this entry");
        bad = true;
        continue;
      }
      if (!b.vcomposable(x, y)) {
        error(e.before.span, "2-cells '" + b.cells2[x].name + "' and '" + b.cells2[y].name +
                                 "' are not vertically composable");
        bad = true;
        continue;
      }
      if (b.vcomp(x, y) != -1) {
        error(e.before.span, "duplicate vertical composition entry for (" + b.cells2[x].name +
                                 ", " + b.cells2[y].name + ")");
        bad = true;
        continue;
      }
      b.vcomp_ref(x, y) = z;
    }
    missing.clear();
    for (int x = 0; x < n2; ++x)
      for (int y = 0; y < n2; ++y)
        if (!is_id2(x) && !is_id2(y) && b.vcomposable(x, y) && b.vcomp(x, y) < 0)
          missing.push_back("vcomp(" + b.cells2[x].name + ", " + b.cells2[y].name + ")");
    incomplete(a.name, "vertical composition table", missing);

    b.hcomp2_table.assign(static_cast<size_t>(n2) * n2, -1);
    for (int f = 0; f < n1; ++f)
      for (int g = 0; g < n1; ++g)
        if (b.hcomp1(f, g) >= 0) b.hcomp2_ref(b.id2[f], b.id2[g]) = b.id2[b.hcomp1(f, g)];
    for (const auto& e : a.hcompose) {
      const int x = resolve(twos, e.before, "2-cell");
      const int y = resolve(twos, e.after, "2-cell");
      const int z = resolve(twos, e.result, "2-cell");
      if (x < 0 || y < 0 || z < 0) {
        bad = true;
        continue;
      }
      if (is_id2(x) && is_id2(y)) {
        error(e.before.span,
              "horizontal composites of two identity 2-cells are synthesized; drop this entry");
        bad = true;
        continue;
      }
      if (b.hcomp2(x, y) != -1) {
        error(e.before.span, "duplicate horizontal composition entry for (" + b.cells2[x].name +
                                 ", " + b.cells2[y].name + ")");
        bad = true;
        continue;
      }
      b.hcomp2_ref(x, y) = z;
    }
    missing.clear();
    for (int x = 0; x < n2; ++x)
      for (int y = 0; y < n2; ++y)
        if (!(is_id2(x) && is_id2(y)) && b.hcomp2(x, y) < 0)
          missing.push_back("hcomp2(" + b.cells2[x].name + ", " + b.cells2[y].name + ")");
    incomplete(a.name, "horizontal composition table for 2-cells", missing);

    b.lunitor.assign(n1, -1);
    b.runitor.assign(n1, -1);
    for (const auto& e : a.lunitor) {
      const int f = resolve(ones, e.from, "1-cell");
      const int t = resolve(twos, e.to, "2-cell");
      if (f < 0 || t < 0) {
        bad = true;
        continue;
      }
      if (b.lunitor[f] != -1) {
        error(e.from.span, "duplicate lunitor entry for '" + e.from.text + "'");
        bad = true;
        continue;
      }
      b.lunitor[f] = t;
    }
    for (const auto& e : a.runitor) {
      const int f = resolve(ones, e.from, "1-cell");
      const int t = resolve(twos, e.to, "2-cell");
      if (f < 0 || t < 0) {
        bad = true;
        continue;
      }
      if (b.runitor[f] != -1) {
        error(e.from.span, "duplicate runitor entry for '" + e.from.text + "'");
        bad = true;
        continue;
      }
      b.runitor[f] = t;
    }
    missing.clear();
    for (int f = 0; f < n1; ++f) {
      if (b.lunitor[f] < 0) {
        if (b.hcomp1(b.id1[0], f) == f)
          b.lunitor[f] = b.id2[f];
        else
          missing.push_back("the lunitor component at " + b.cells1[f].name);
      }
      if (b.runitor[f] < 0) {
        if (b.hcomp1(f, b.id1[0]) == f)
          b.runitor[f] = b.id2[f];
        else
          missing.push_back("the runitor component at " + b.cells1[f].name);
      }
    }
    incomplete(a.name, "unitor tables", missing);

    for (const auto& e : a.associator) {
      const int f = resolve(ones, e.key[0], "1-cell");
      const int g = resolve(ones, e.key[1], "1-cell");
      const int h = resolve(ones, e.key[2], "1-cell");
      const int t = resolve(twos, e.value, "2-cell");
      if (f < 0 || g < 0 || h < 0 || t < 0) {
        bad = true;
        continue;
      }
      if (b.associator.count({f, g, h})) {
        error(e.key[0].span, "duplicate associator entry");
        bad = true;
        continue;
      }
      b.associator[{f, g, h}] = t;
    }
    missing.clear();
    for (int f = 0; f < n1; ++f)
      for (int g = 0; g < n1; ++g)
        for (int h = 0; h < n1; ++h) {
          if (b.associator.count({f, g, h})) continue;
          const int outer = b.hcomp1(f, b.hcomp1(g, h));
          if (outer >= 0 && outer == b.hcomp1(b.hcomp1(f, g), h))
            b.associator[{f, g, h}] = b.id2[outer];
          else
            missing.push_back("the associator component at (" + b.cells1[f].name + ", " +
                              b.cells1[g].name + ", " + b.cells1[h].name + ")");
        }
    incomplete(a.name, "associator table", missing);

    if (bad || !missing.empty()) {
      bad_blocks.insert(a.name.text);
      return;
    }
    res.bicats.push_back({a.name.text, std::move(b)});
    try {
      res.reports.push_back(check_bicat_laws(res.bicats.back().value));
    } catch (const dblkit::error& e) {
      error(a.name.span, e.what());
      res.bicats.pop_back();
      bad_blocks.insert(a.name.text);
    }
  }

  // --- doublecat --------------------------------------------------------------

  void do_doublecat(const ast_doublecat& a) {
    if (a.vertical.text.empty()) {
      error(a.name.span, "a doublecat block needs a 'vertical' section naming a category");
      bad_blocks.insert(a.name.text);
      return;
    }
    const fin_cat* vc = find_cat(a.vertical);
    if (!vc) {
      bad_blocks.insert(a.name.text);
      return;
    }
    const bool probe = a.probe_mode;
    pseudo_double_cat d;
    d.name = a.name.text;
    d.vcat = *vc;
    d.mode = probe ? check_mode::probe : check_mode::exhaustive;
    d.hor_set_presented = !a.object_indexed;
    cat_names vn(*vc);
    bool bad = false;

    name_scope hors;
    for (const auto& h : a.horizontals) {
      const int s = resolve(vn.objects, h.src, "object");
      const int t = resolve(vn.objects, h.tgt, "object");
      if (s < 0 || t < 0) {
        bad = true;
        continue;
      }
      if (!declare(hors, h.name, d.n_hors(), "horizontal cell")) {
        bad = true;
        continue;
      }
      d.hors.push_back({s, t, h.name.text});
    }
    const int nh = d.n_hors();

    d.horid.assign(vc->n_objects(), -1);
    for (const auto& e : a.horid) {
      const int x = resolve(vn.objects, e.from, "object");
      const int h = resolve(hors, e.to, "horizontal cell");
      if (x < 0 || h < 0) {
        bad = true;
        continue;
      }
      if (d.horid[x] != -1) {
        error(e.from.span, "duplicate horid entry for '" + e.from.text + "'");
        bad = true;
        continue;
      }
      d.horid[x] = h;
    }
    std::vector<std::string> missing;
    if (!probe)
      for (int x = 0; x < vc->n_objects(); ++x)
        if (d.horid[x] < 0) missing.push_back("the horizontal identity of " + vc->objects[x]);
    incomplete(a.name, "horizontal identity table", missing);

    d.hcomp_table.assign(static_cast<size_t>(nh) * nh, -1);
    for (const auto& e : a.hcompose) {
      const int h = resolve(hors, e.before, "horizontal cell");
      const int k = resolve(hors, e.after, "horizontal cell");
      const int m = resolve(hors, e.result, "horizontal cell");
      if (h < 0 || k < 0 || m < 0) {
        bad = true;
        continue;
      }
      if (!d.hcomposable(h, k)) {
        error(e.before.span, "horizontal cells '" + d.hors[h].name + "' and '" + d.hors[k].name +
                                 "' are not composable");
        bad = true;
        continue;
      }
      if (d.hcomp(h, k) != -1) {
        error(e.before.span, "duplicate horizontal composition entry for (" + d.hors[h].name +
                                 ", " + d.hors[k].name + ")");
        bad = true;
        continue;
      }
      d.hcomp_ref(h, k) = m;
    }
    missing.clear();
    if (!probe)
      for (int h = 0; h < nh; ++h)
        for (int k = 0; k < nh; ++k)
          if (d.hcomposable(h, k) && d.hcomp(h, k) < 0)
            missing.push_back("hcomp(" + d.hors[h].name + ", " + d.hors[k].name + ")");
    incomplete(a.name, "horizontal composition table", missing);
    if (bad || !missing.empty()) {
      bad_blocks.insert(a.name.text);
      return;
    }

    name_scope sqs;
    for (const auto& s : a.squares) {
      const int v1 = resolve(vn.arrows, s.v1, "vertical arrow");
      const int v2 = resolve(vn.arrows, s.v2, "vertical arrow");
      const int h1 = resolve(hors, s.h1, "horizontal cell");
      const int h2 = resolve(hors, s.h2, "horizontal cell");
      if (v1 < 0 || v2 < 0 || h1 < 0 || h2 < 0) {
        bad = true;
        continue;
      }
      if (!declare(sqs, s.name, d.n_squares(), "square")) {
        bad = true;
        continue;
      }
      d.squares.push_back({v1, v2, h1, h2, s.name.text});
    }
    const int ns = d.n_squares();

    d.sqvid.assign(nh, -1);
    for (const auto& e : a.sqvid) {
      const int h = resolve(hors, e.from, "horizontal cell");
      const int s = resolve(sqs, e.to, "square");
      if (h < 0 || s < 0) {
        bad = true;
        continue;
      }
      if (d.sqvid[h] != -1) {
        error(e.from.span, "duplicate sqvid entry for '" + e.from.text + "'");
        bad = true;
        continue;
      }
      d.sqvid[h] = s;
    }
    d.sqhid.assign(vc->n_arrows(), -1);
    for (const auto& e : a.sqhid) {
      const int v = resolve(vn.arrows, e.from, "vertical arrow");
      const int s = resolve(sqs, e.to, "square");
      if (v < 0 || s < 0) {
        bad = true;
        continue;
      }
      if (d.sqhid[v] != -1) {
        error(e.from.span, "duplicate sqhid entry for '" + e.from.text + "'");
        bad = true;
        continue;
      }
      d.sqhid[v] = s;
    }
    missing.clear();
    if (!probe) {
      for (int h = 0; h < nh; ++h)
        if (d.sqvid[h] < 0) missing.push_back("the identity square on " + d.hors[h].name);
      for (int v = 0; v < vc->n_arrows(); ++v)
        if (d.sqhid[v] < 0) missing.push_back("the identity square on " + arrow_ref(*vc, v));
    }
    incomplete(a.name, "identity square tables", missing);

    d.vcomp_sq_table.assign(static_cast<size_t>(ns) * ns, -1);
    for (int t = 0; t < ns; ++t) {
      const int top = d.sqvid[d.squares[t].h1];
      const int bot = d.sqvid[d.squares[t].h2];
      if (top >= 0) d.sq_vcomp_ref(top, t) = t;
      if (bot >= 0) d.sq_vcomp_ref(t, bot) = t;
    }
    for (const auto& e : a.vstack) {
      const int s = resolve(sqs, e.before, "square");
      const int t = resolve(sqs, e.after, "square");
      const int u = resolve(sqs, e.result, "square");
      if (s < 0 || t < 0 || u < 0) {
        bad = true;
        continue;
      }
      if (!d.vstackable(s, t)) {
        error(e.before.span, "squares '" + d.squares[s].name + "' and '" + d.squares[t].name +
                                 "' do not stack");
        bad = true;
        continue;
      }
      if (d.sqvid[d.squares[t].h1] == s || d.sqvid[d.squares[s].h2] == t) {
        error(e.before.span, "unit stackings are synthesized; drop this entry");
        bad = true;
        continue;
      }
      if (d.sq_vcomp(s, t) != -1) {
        error(e.before.span, "duplicate stacking entry for (" + d.squares[s].name + ", " +
                                 d.squares[t].name + ")");
        bad = true;
        continue;
      }
      d.sq_vcomp_ref(s, t) = u;
    }
    missing.clear();
    if (!probe)
      for (int s = 0; s < ns; ++s)
        for (int t = 0; t < ns; ++t)
          if (d.vstackable(s, t) && d.sq_vcomp(s, t) < 0)
            missing.push_back("vstack(" + d.squares[s].name + ", " + d.squares[t].name + ")");
    incomplete(a.name, "vertical stacking table", missing);

    d.hcomp_sq_table.assign(static_cast<size_t>(ns) * ns, -1);
    for (const auto& e : a.hpaste) {
      const int s = resolve(sqs, e.before, "square");
      const int t = resolve(sqs, e.after, "square");
      const int u = resolve(sqs, e.result, "square");
      if (s < 0 || t < 0 || u < 0) {
        bad = true;
        continue;
      }
      if (!d.hpastable(s, t)) {
        error(e.before.span, "squares '" + d.squares[s].name + "' and '" + d.squares[t].name +
                                 "' do not paste");
        bad = true;
        continue;
      }
      if (d.sq_hcomp(s, t) != -1) {
        error(e.before.span, "duplicate pasting entry for (" + d.squares[s].name + ", " +
                                 d.squares[t].name + ")");
        bad = true;
        continue;
      }
      d.sq_hcomp_ref(s, t) = u;
    }
    missing.clear();
    if (!probe)
      for (int s = 0; s < ns; ++s)
        for (int t = 0; t < ns; ++t)
          if (d.hpastable(s, t) && d.sq_hcomp(s, t) < 0)
            missing.push_back("hpaste(" + d.squares[s].name + ", " + d.squares[t].name + ")");
    incomplete(a.name, "horizontal pasting table", missing);

    d.lunitor.assign(nh, -1);
    d.runitor.assign(nh, -1);
    for (const auto& e : a.lunitor) {
      const int h = resolve(hors, e.from, "horizontal cell");
      const int s = resolve(sqs, e.to, "square");
      if (h < 0 || s < 0) {
        bad = true;
        continue;
      }
      if (d.lunitor[h] != -1) {
        error(e.from.span, "duplicate lunitor entry for '" + e.from.text + "'");
        bad = true;
        continue;
      }
      d.lunitor[h] = s;
    }
    for (const auto& e : a.runitor) {
      const int h = resolve(hors, e.from, "horizontal cell");
      const int s = resolve(sqs, e.to, "square");
      if (h < 0 || s < 0) {
        bad = true;
        continue;
      }
      if (d.runitor[h] != -1) {
        error(e.from.span, "duplicate runitor entry for '" + e.from.text + "'");
        bad = true;
        continue;
      }
      d.runitor[h] = s;
    }
    missing.clear();
    for (int h = 0; h < nh; ++h) {
      if (d.lunitor[h] < 0) {
        const int u = d.horid[d.hors[h].src];
        if (u >= 0 && d.hcomp(u, h) == h && d.sqvid[h] >= 0)
          d.lunitor[h] = d.sqvid[h];
        else if (!probe)
          missing.push_back("the lunitor component at " + d.hors[h].name);
      }
      if (d.runitor[h] < 0) {
        const int u = d.horid[d.hors[h].tgt];
        if (u >= 0 && d.hcomp(h, u) == h && d.sqvid[h] >= 0)
          d.runitor[h] = d.sqvid[h];
        else if (!probe)
          missing.push_back("the runitor component at " + d.hors[h].name);
      }
    }
    incomplete(a.name, "unitor tables", missing);

    for (const auto& e : a.associator) {
      const int h1 = resolve(hors, e.key[0], "horizontal cell");
      const int h2 = resolve(hors, e.key[1], "horizontal cell");
      const int h3 = resolve(hors, e.key[2], "horizontal cell");
      const int s = resolve(sqs, e.value, "square");
      if (h1 < 0 || h2 < 0 || h3 < 0 || s < 0) {
        bad = true;
        continue;
      }
      if (!d.hcomposable(h1, h2) || !d.hcomposable(h2, h3)) {
        error(e.key[0].span, "associator key is not a composable triple");
        bad = true;
        continue;
      }
      if (d.associator.count({h1, h2, h3})) {
        error(e.key[0].span, "duplicate associator entry");
        bad = true;
        continue;
      }
      d.associator[{h1, h2, h3}] = s;
    }
    missing.clear();
    for (int h1 = 0; h1 < nh; ++h1)
      for (int h2 = 0; h2 < nh; ++h2)
        for (int h3 = 0; h3 < nh; ++h3) {
          if (!d.hcomposable(h1, h2) || !d.hcomposable(h2, h3)) continue;
          if (d.associator.count({h1, h2, h3})) continue;
          const int outer = d.hcomp(h1, d.hcomp(h2, h3));
          if (outer >= 0 && outer == d.hcomp(d.hcomp(h1, h2), h3) && d.sqvid[outer] >= 0)
            d.associator[{h1, h2, h3}] = d.sqvid[outer];
          else if (!probe)
            missing.push_back("the associator component at (" + d.hors[h1].name + ", " +
                              d.hors[h2].name + ", " + d.hors[h3].name + ")");
        }
    incomplete(a.name, "associator table", missing);

    if (bad || !missing.empty()) {
      bad_blocks.insert(a.name.text);
      return;
    }
    res.doubles.push_back({a.name.text, std::move(d)});
    try {
      res.reports.push_back(check_double_laws(res.doubles.back().value));
    } catch (const dblkit::error& e) {
      error(a.name.span, e.what());
      res.doubles.pop_back();
      bad_blocks.insert(a.name.text);
    }
  }

  // --- verity -----------------------------------------------------------------

  void do_verity(const ast_verity& a) {
    if (a.of.text.empty()) {
      error(a.name.span, "a verity block needs a 'bridge' or 'square' section");
      bad_blocks.insert(a.name.text);
      return;
    }
    try {
      verity_double_bicat vb;
      if (a.square_form) {
        const fin_bicat* b = find_bicat(a.of);
        if (!b) {
          bad_blocks.insert(a.name.text);
          return;
        }
        vb = square_verity(*b, check_mode::exhaustive);
      } else {
        const pseudo_double_cat* d = find_double(a.of);
        if (!d) {
          bad_blocks.insert(a.name.text);
          return;
        }
        vb = double_cat_to_verity(*d);
      }
      vb.name = a.name.text;
      res.veritys.push_back({a.name.text, std::move(vb)});
    } catch (const dblkit::error& e) {
      error(a.of.span, e.what());
      bad_blocks.insert(a.name.text);
      return;
    }
    try {
      res.reports.push_back(check_verity_laws(res.veritys.back().value));
    } catch (const dblkit::error& e) {
      error(a.name.span, e.what());
      res.veritys.pop_back();
      bad_blocks.insert(a.name.text);
    }
  }

  // --- probes -----------------------------------------------------------------

  void do_probes(const ast_probes& a) {
    if (a.target.text.empty()) {
      error(a.name.span, "a probes block needs a 'target' section");
      bad_blocks.insert(a.name.text);
      return;
    }
    const fin_cat* c = nullptr;
    const fin_bicat* b = nullptr;
    const pseudo_double_cat* d = nullptr;
    const verity_double_bicat* v = nullptr;
    long long carrier = 0;
    if (const auto* e = lookup(res.cats, a.target.text)) {
      c = &e->value;
      carrier = std::max(c->n_objects(), c->n_arrows());
    } else if (const auto* e2 = lookup(res.bicats, a.target.text)) {
      b = &e2->value;
      carrier = std::max({b->n_objects(), b->n1(), b->n2()});
    } else if (const auto* e3 = lookup(res.doubles, a.target.text)) {
      d = &e3->value;
      carrier = std::max({d->n_objects(), d->n_vert(), d->n_hors(), d->n_squares()});
    } else if (const auto* e4 = lookup(res.veritys, a.target.text)) {
      v = &e4->value;
      carrier = std::max({v->horb.n1(), v->horb.n2(), v->verb.n1(), v->verb.n2(),
                          static_cast<int>(v->squares.size())});
    } else {
      error(a.target.span, bad_blocks.count(a.target.text)
                               ? "block '" + a.target.text + "' has errors and cannot be probed"
                               : "unknown probe target '" + a.target.text + "'");
      bad_blocks.insert(a.name.text);
      return;
    }

    bool bad = false;
    elab_result::probes_entry entry;
    entry.name = a.name.text;
    entry.target = a.target.text;
    law_report rep;
    rep.mode = check_mode::probe;
    rep.artifact = "probes:" + a.name.text;
    for (const auto& inst : a.instances) {
      bool in_range = true;
      for (long long w : inst.witness)
        if (w < 0 || w >= carrier) in_range = false;
      if (!in_range) {
        error(inst.law.span, "probe witness falls outside the carrier of '" + a.target.text +
                                 "' (closure exceeded)");
        bad = true;
        continue;
      }
      law_result r;
      r.law = inst.law.text;
      r.witness = inst.witness;
      bool violated = false;
      if (c)
        violated = replay_category_law(*c, r);
      else if (b)
        violated = replay_bicat_law(*b, r);
      else if (d)
        violated = replay_double_law(*d, r);
      else if (v)
        violated = replay_verity_law(*v, r);
      law_result out;
      out.law = inst.law.text;
      out.passed = !violated;
      out.checked = 1;
      out.witness = inst.witness;
      out.detail = violated ? "recorded witness still fails" : "recorded witness does not fail";
      rep.laws.push_back(std::move(out));
      entry.instances.push_back({inst.law.text, inst.witness});
    }
    if (bad) {
      bad_blocks.insert(a.name.text);
      return;
    }
    res.probes.push_back(std::move(entry));
    res.reports.push_back(std::move(rep));
  }

  void run(const presentation& p) {
    for (const auto& blk : p.blocks) {
      std::visit(
          [this](const auto& a) {
            if (!claim_block(a.name)) {
              bad_blocks.insert(a.name.text);
              return;
            }
            dispatch(a);
          },
          blk);
    }
  }

  void dispatch(const ast_category& a) { do_category(a); }
  void dispatch(const ast_functor& a) { do_functor(a); }
  void dispatch(const ast_profunctor& a) { do_profunctor(a); }
  void dispatch(const ast_bicat& a) { do_bicat(a); }
  void dispatch(const ast_doublecat& a) { do_doublecat(a); }
  void dispatch(const ast_verity& a) { do_verity(a); }
  void dispatch(const ast_probes& a) { do_probes(a); }
};

}  // namespace

const fin_cat* elab_result::find_cat(const std::string& name) const {
  for (const auto& e : cats)
    if (e.name == name) return &e.value;
  return nullptr;
}
const fin_bicat* elab_result::find_bicat(const std::string& name) const {
  for (const auto& e : bicats)
    if (e.name == name) return &e.value;
  return nullptr;
}
const pseudo_double_cat* elab_result::find_double(const std::string& name) const {
  for (const auto& e : doubles)
    if (e.name == name) return &e.value;
  return nullptr;
}
const verity_double_bicat* elab_result::find_verity(const std::string& name) const {
  for (const auto& e : veritys)
    if (e.name == name) return &e.value;
  return nullptr;
}

elab_result elaborate(const presentation& p, const std::string& file) {
  elab_result res;
  elaborator el{file, res, {}, {}};
  el.run(p);
  return res;
}

// --- canonicalizers ---------------------------------------------------------------

ast_category to_ast(const fin_cat& c) {
  ast_category out;
  out.name = c.name;
  for (const auto& o : c.objects) out.objects.push_back(ast_name(o));
  for (int f = 0; f < c.n_arrows(); ++f) {
    if (c.is_identity(f)) continue;
    out.arrows.push_back(
        {c.arrows[f].name, c.objects[c.arrows[f].src], c.objects[c.arrows[f].tgt]});
  }
  for (int f = 0; f < c.n_arrows(); ++f)
    for (int g = 0; g < c.n_arrows(); ++g) {
      if (c.is_identity(f) || c.is_identity(g) || !c.composable(f, g)) continue;
      out.compose.push_back({arrow_ref(c, g), arrow_ref(c, f), arrow_ref(c, c.comp(f, g))});
    }
  return out;
}

ast_functor to_ast(const fin_functor& f, const fin_cat& src, const fin_cat& tgt,
                   const std::string& src_name, const std::string& tgt_name) {
  ast_functor out;
  out.name = f.name;
  out.src = src_name;
  out.tgt = tgt_name;
  for (int x = 0; x < src.n_objects(); ++x)
    out.objects.push_back({src.objects[x], tgt.objects[f.obj_map[x]]});
  for (int a = 0; a < src.n_arrows(); ++a) {
    if (src.is_identity(a)) continue;
    out.arrows.push_back({src.arrows[a].name, arrow_ref(tgt, f.arr_map[a])});
  }
  return out;
}

ast_profunctor to_ast(const fin_profunctor& p, const fin_cat& src, const fin_cat& tgt,
                      const std::string& src_name, const std::string& tgt_name) {
  ast_profunctor out;
  out.name = p.name;
  out.src = src_name;
  out.tgt = tgt_name;
  std::map<std::array<int, 3>, std::string> elem_name;
  int counter = 0;
  for (int d = 0; d < tgt.n_objects(); ++d)
    for (int c = 0; c < src.n_objects(); ++c)
      for (int k = 0; k < p.count[d][c]; ++k) {
        const std::string name = "e" + std::to_string(counter++);
        elem_name[{d, c, k}] = name;
        out.elements.push_back({name, tgt.objects[d], src.objects[c]});
      }
  for (int g = 0; g < tgt.n_arrows(); ++g) {
    if (tgt.is_identity(g)) continue;
    const int d1 = tgt.arrows[g].src, d2 = tgt.arrows[g].tgt;
    for (int c = 0; c < src.n_objects(); ++c)
      for (int k = 0; k < p.count[d2][c]; ++k)
        out.left.push_back({tgt.arrows[g].name, elem_name.at({d2, c, k}),
                            elem_name.at({d1, c, p.left[g][c][k]})});
  }
  for (int f = 0; f < src.n_arrows(); ++f) {
    if (src.is_identity(f)) continue;
    const int c1 = src.arrows[f].src, c2 = src.arrows[f].tgt;
    for (int d = 0; d < tgt.n_objects(); ++d)
      for (int k = 0; k < p.count[d][c1]; ++k)
        out.right.push_back({src.arrows[f].name, elem_name.at({d, c1, k}),
                             elem_name.at({d, c2, p.right[f][d][k]})});
  }
  return out;
}

ast_bicat discrete_bicat_ast(const std::string& name, const std::string& category_name) {
  ast_bicat out;
  out.name = name;
  out.discrete_form = true;
  out.discrete_of = category_name;
  return out;
}

ast_bicat to_ast_one_object(const fin_bicat& b) {
  if (b.n_objects() != 1)
    fail(errc::precondition_failed,
         b.name + ": only one-object bicategories have a sectional presentation");
  ast_bicat out;
  out.name = b.name;
  out.object = b.objects[0];
  std::vector<int> owner(b.n2(), -1);
  for (int f = 0; f < b.n1(); ++f) owner[b.id2[f]] = f;
  const auto cell2_ref = [&](int t) {
    return owner[t] >= 0 ? "id_" + b.cells1[owner[t]].name : b.cells2[t].name;
  };
  for (const auto& f : b.cells1) out.cells1.push_back(ast_name(f.name));
  out.identity1.push_back({b.objects[0], b.cells1[b.id1[0]].name});
  for (int f = 0; f < b.n1(); ++f)
    for (int g = 0; g < b.n1(); ++g)
      if (b.hcomp1(f, g) >= 0)
        out.compose1.push_back(
            {b.cells1[g].name, b.cells1[f].name, b.cells1[b.hcomp1(f, g)].name});
  for (int t = 0; t < b.n2(); ++t) {
    if (owner[t] >= 0) continue;
    out.cells2.push_back(
        {b.cells2[t].name, b.cells1[b.cells2[t].src].name, b.cells1[b.cells2[t].tgt].name});
  }
  for (int x = 0; x < b.n2(); ++x)
    for (int y = 0; y < b.n2(); ++y) {
      if (owner[x] >= 0 || owner[y] >= 0 || b.vcomp(x, y) < 0) continue;
      out.vcompose.push_back({cell2_ref(y), cell2_ref(x), cell2_ref(b.vcomp(x, y))});
    }
  for (int x = 0; x < b.n2(); ++x)
    for (int y = 0; y < b.n2(); ++y) {
      if ((owner[x] >= 0 && owner[y] >= 0) || b.hcomp2(x, y) < 0) continue;
      out.hcompose.push_back({cell2_ref(y), cell2_ref(x), cell2_ref(b.hcomp2(x, y))});
    }
  for (int f = 0; f < b.n1(); ++f) {
    const int ldefault = b.hcomp1(b.id1[0], f) == f ? b.id2[f] : -2;
    if (b.lunitor[f] >= 0 && b.lunitor[f] != ldefault)
      out.lunitor.push_back({b.cells1[f].name, cell2_ref(b.lunitor[f])});
    const int rdefault = b.hcomp1(f, b.id1[0]) == f ? b.id2[f] : -2;
    if (b.runitor[f] >= 0 && b.runitor[f] != rdefault)
      out.runitor.push_back({b.cells1[f].name, cell2_ref(b.runitor[f])});
  }
  for (const auto& [key, t] : b.associator) {
    const int outer = b.hcomp1(key[0], b.hcomp1(key[1], key[2]));
    const int adefault =
        outer >= 0 && outer == b.hcomp1(b.hcomp1(key[0], key[1]), key[2]) ? b.id2[outer] : -2;
    if (t == adefault) continue;
    out.associator.push_back({{ast_name(b.cells1[key[0]].name), ast_name(b.cells1[key[1]].name),
                               ast_name(b.cells1[key[2]].name)},
                              cell2_ref(t)});
  }
  return out;
}

ast_doublecat to_ast(const pseudo_double_cat& d, const std::string& vertical_name) {
  ast_doublecat out;
  out.name = d.name;
  out.vertical = vertical_name;
  out.probe_mode = d.mode == check_mode::probe;
  out.object_indexed = !d.hor_set_presented;
  const fin_cat& vc = d.vcat;
  for (const auto& h : d.hors)
    out.horizontals.push_back({h.name, vc.objects[h.src], vc.objects[h.tgt]});
  for (int x = 0; x < vc.n_objects(); ++x)
    if (d.horid[x] >= 0) out.horid.push_back({vc.objects[x], d.hors[d.horid[x]].name});
  for (int h = 0; h < d.n_hors(); ++h)
    for (int k = 0; k < d.n_hors(); ++k)
      if (d.hcomposable(h, k) && d.hcomp(h, k) >= 0)
        out.hcompose.push_back({d.hors[k].name, d.hors[h].name, d.hors[d.hcomp(h, k)].name});
  for (const auto& s : d.squares)
    out.squares.push_back({s.name, arrow_ref(vc, s.v1), arrow_ref(vc, s.v2), d.hors[s.h1].name,
                           d.hors[s.h2].name});
  for (int h = 0; h < d.n_hors(); ++h)
    if (d.sqvid[h] >= 0) out.sqvid.push_back({d.hors[h].name, d.squares[d.sqvid[h]].name});
  for (int v = 0; v < vc.n_arrows(); ++v)
    if (d.sqhid[v] >= 0) out.sqhid.push_back({arrow_ref(vc, v), d.squares[d.sqhid[v]].name});
  for (int s = 0; s < d.n_squares(); ++s)
    for (int t = 0; t < d.n_squares(); ++t) {
      if (!d.vstackable(s, t) || d.sq_vcomp(s, t) < 0) continue;
      if (d.sqvid[d.squares[t].h1] == s || d.sqvid[d.squares[s].h2] == t) continue;
      out.vstack.push_back(
          {d.squares[t].name, d.squares[s].name, d.squares[d.sq_vcomp(s, t)].name});
    }
  for (int s = 0; s < d.n_squares(); ++s)
    for (int t = 0; t < d.n_squares(); ++t)
      if (d.hpastable(s, t) && d.sq_hcomp(s, t) >= 0)
        out.hpaste.push_back(
            {d.squares[t].name, d.squares[s].name, d.squares[d.sq_hcomp(s, t)].name});
  for (int h = 0; h < d.n_hors(); ++h) {
    const int lu = d.horid[d.hors[h].src];
    const int ldefault = lu >= 0 && d.hcomp(lu, h) == h ? d.sqvid[h] : -2;
    if (d.lunitor[h] >= 0 && d.lunitor[h] != ldefault)
      out.lunitor.push_back({d.hors[h].name, d.squares[d.lunitor[h]].name});
    const int ru = d.horid[d.hors[h].tgt];
    const int rdefault = ru >= 0 && d.hcomp(h, ru) == h ? d.sqvid[h] : -2;
    if (d.runitor[h] >= 0 && d.runitor[h] != rdefault)
      out.runitor.push_back({d.hors[h].name, d.squares[d.runitor[h]].name});
  }
  for (const auto& [key, s] : d.associator) {
    const int outer = d.hcomp(key[0], d.hcomp(key[1], key[2]));
    const int adefault =
        outer >= 0 && outer == d.hcomp(d.hcomp(key[0], key[1]), key[2]) ? d.sqvid[outer] : -2;
    if (s == adefault) continue;
    out.associator.push_back({{ast_name(d.hors[key[0]].name), ast_name(d.hors[key[1]].name),
                               ast_name(d.hors[key[2]].name)},
                              d.squares[s].name});
  }
  return out;
}

ast_verity bridge_verity_ast(const std::string& name, const std::string& doublecat_name) {
  ast_verity out;
  out.name = name;
  out.square_form = false;
  out.of = doublecat_name;
  return out;
}

ast_verity square_verity_ast(const std::string& name, const std::string& bicat_name) {
  ast_verity out;
  out.name = name;
  out.square_form = true;
  out.of = bicat_name;
  return out;
}

}  // namespace dsl
}  // namespace dblkit
