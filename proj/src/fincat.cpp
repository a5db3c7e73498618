#include "dblkit/fincat.hpp"

#include <algorithm>

#include "dblkit/error.hpp"

namespace dblkit {

const char* errc_name(errc c) {
  switch (c) {
    case errc::malformed_table: return "MalformedTable";
    case errc::closure_exceeded: return "ClosureExceeded";
    case errc::middle_mismatch: return "MiddleMismatch";
    case errc::missing_pullback: return "MissingPullback";
    case errc::missing_pushout: return "MissingPushout";
    case errc::budget_exceeded: return "BudgetExceeded";
    case errc::not_strict: return "NotStrict";
    case errc::boundary_mismatch: return "BoundaryMismatch";
    case errc::precondition_failed: return "PreconditionFailed";
    case errc::construction_failed: return "ConstructionFailed";
    case errc::parse_error: return "ParseError";
    case errc::elaboration_error: return "ElaborationError";
    case errc::internal: return "Internal";
  }
  return "Unknown";
}

// --- builder -----------------------------------------------------------------

cat_builder::cat_builder(std::string name) { cat_.name = std::move(name); }

int cat_builder::add_object(const std::string& name) {
  const int x = cat_.n_objects();
  cat_.objects.push_back(name);
  cat_.arrows.push_back({x, x, "id_" + name});
  cat_.identity.push_back(static_cast<int>(cat_.arrows.size()) - 1);
  return x;
}

int cat_builder::identity_of(int obj) const { return cat_.identity[obj]; }

int cat_builder::add_arrow(const std::string& name, int src, int tgt) {
  if (src < 0 || src >= cat_.n_objects() || tgt < 0 || tgt >= cat_.n_objects())
    fail(errc::malformed_table, "arrow '" + name + "' has unknown endpoint");
  cat_.arrows.push_back({src, tgt, name});
  return static_cast<int>(cat_.arrows.size()) - 1;
}

void cat_builder::set_comp(int f, int g, int h) { entries_.push_back({{f, g}, h}); }

fin_cat cat_builder::build() && {
  const int na = static_cast<int>(cat_.arrows.size());
  cat_.comp_table.assign(static_cast<size_t>(na) * na, -1);
  for (int f = 0; f < na; ++f) {
    // identity composites are synthesized, never user-stated
    if (cat_.composable(cat_.identity[cat_.arrows[f].src], f))
      cat_.comp_ref(cat_.identity[cat_.arrows[f].src], f) = f;
    cat_.comp_ref(f, cat_.identity[cat_.arrows[f].tgt]) = f;
  }
  for (const auto& [pair, h] : entries_) {
    auto [f, g] = pair;
    if (f < 0 || f >= na || g < 0 || g >= na || h < 0 || h >= na)
      fail(errc::malformed_table, cat_.name + ": composition entry references unknown arrow ids");
    if (!cat_.composable(f, g))
      fail(errc::malformed_table, cat_.name + ": composition entry on non-composable pair (" +
                                      cat_.arrows[f].name + ", " + cat_.arrows[g].name + ")");
    if (cat_.is_identity(f) || cat_.is_identity(g))
      fail(errc::malformed_table, cat_.name + ": identity composites are synthesized, not stated");
    cat_.comp_ref(f, g) = h;
  }
  for (int f = 0; f < na; ++f)
    for (int g = 0; g < na; ++g)
      if (cat_.composable(f, g) && cat_.comp(f, g) < 0)
        fail(errc::malformed_table, cat_.name + ": missing composite for (" + cat_.arrows[f].name +
                                        ", " + cat_.arrows[g].name + ")");
  return std::move(cat_);
}

// --- laws --------------------------------------------------------------------

namespace {

void validate_table_ids(const fin_cat& c) {
  const int na = c.n_arrows();
  if (static_cast<int>(c.identity.size()) != c.n_objects())
    fail(errc::malformed_table, c.name + ": identity table size mismatch");
  if (c.comp_table.size() != static_cast<size_t>(na) * na)
    fail(errc::malformed_table, c.name + ": composition table size mismatch");
  for (const auto& a : c.arrows)
    if (a.src < 0 || a.src >= c.n_objects() || a.tgt < 0 || a.tgt >= c.n_objects())
      fail(errc::malformed_table, c.name + ": arrow '" + a.name + "' has unknown endpoint");
  for (int x = 0; x < c.n_objects(); ++x)
    if (c.identity[x] < 0 || c.identity[x] >= na)
      fail(errc::malformed_table, c.name + ": identity of '" + c.objects[x] + "' is unknown");
  for (int v : c.comp_table)
    if (v < -1 || v >= na) fail(errc::malformed_table, c.name + ": comp references unknown arrow ids");
}

std::string arrow_str(const fin_cat& c, int f) {
  return c.arrows[f].name + ": " + c.objects[c.arrows[f].src] + " -> " + c.objects[c.arrows[f].tgt];
}

bool typing_ok(const fin_cat& c, int f, int g) {
  const int h = c.comp(f, g);
  if (c.composable(f, g)) {
    return h >= 0 && c.arrows[h].src == c.arrows[f].src && c.arrows[h].tgt == c.arrows[g].tgt;
  }
  return h < 0;
}

bool identity_typing_ok(const fin_cat& c, int x) {
  const int i = c.identity[x];
  return c.arrows[i].src == x && c.arrows[i].tgt == x;
}

bool left_identity_ok(const fin_cat& c, int f) { return c.comp(c.identity[c.arrows[f].src], f) == f; }
bool right_identity_ok(const fin_cat& c, int f) { return c.comp(f, c.identity[c.arrows[f].tgt]) == f; }

bool assoc_ok(const fin_cat& c, int f, int g, int h) {
  return c.comp(c.comp(f, g), h) == c.comp(f, c.comp(g, h));
}

}  // namespace

law_report check_category_laws(const fin_cat& c) {
  validate_table_ids(c);
  law_report rep;
  rep.mode = check_mode::exhaustive;
  rep.artifact = "fincat:" + (c.name.empty() ? std::string("?") : c.name);

  law_acc typing("typing");
  for (int x = 0; x < c.n_objects(); ++x)
    typing.tally(identity_typing_ok(c, x), {0, x}, "identity of " + c.objects[x]);
  for (int f = 0; f < c.n_arrows(); ++f)
    for (int g = 0; g < c.n_arrows(); ++g)
      typing.tally(typing_ok(c, f, g), {1, f, g},
                   "comp(" + arrow_str(c, f) + ", " + arrow_str(c, g) + ")");
  rep.laws.push_back(typing.take());

  law_acc lid("left-identity");
  law_acc rid("right-identity");
  for (int f = 0; f < c.n_arrows(); ++f) {
    lid.tally(left_identity_ok(c, f), {f}, "left identity at " + arrow_str(c, f));
    rid.tally(right_identity_ok(c, f), {f}, "right identity at " + arrow_str(c, f));
  }
  rep.laws.push_back(lid.take());
  rep.laws.push_back(rid.take());

  law_acc assoc("associativity");
  for (int f = 0; f < c.n_arrows(); ++f)
    for (int g = 0; g < c.n_arrows(); ++g) {
      if (!c.composable(f, g) || c.comp(f, g) < 0) continue;
      for (int h = 0; h < c.n_arrows(); ++h) {
        if (!c.composable(g, h) || c.comp(g, h) < 0 || c.comp(c.comp(f, g), h) < 0 ||
            c.comp(f, c.comp(g, h)) < 0)
          continue;
        assoc.tally(assoc_ok(c, f, g, h), {f, g, h},
                    "(" + c.arrows[f].name + " ; " + c.arrows[g].name + " ; " + c.arrows[h].name + ")");
      }
    }
  rep.laws.push_back(assoc.take());
  return rep;
}

bool replay_category_law(const fin_cat& c, const law_result& r) {
  const auto& w = r.witness;
  if (r.law == "typing") {
    if (w.size() == 2 && w[0] == 0) return !identity_typing_ok(c, static_cast<int>(w[1]));
    if (w.size() == 3 && w[0] == 1)
      return !typing_ok(c, static_cast<int>(w[1]), static_cast<int>(w[2]));
    return false;
  }
  if (r.law == "left-identity" && w.size() == 1)
    return !left_identity_ok(c, static_cast<int>(w[0]));
  if (r.law == "right-identity" && w.size() == 1)
    return !right_identity_ok(c, static_cast<int>(w[0]));
  if (r.law == "associativity" && w.size() == 3)
    return !assoc_ok(c, static_cast<int>(w[0]), static_cast<int>(w[1]), static_cast<int>(w[2]));
  return false;
}

std::vector<std::pair<int, int>> find_isomorphisms(const fin_cat& c, int x, int y) {
  std::vector<std::pair<int, int>> out;
  for (int f = 0; f < c.n_arrows(); ++f) {
    if (c.arrows[f].src != x || c.arrows[f].tgt != y) continue;
    for (int g = 0; g < c.n_arrows(); ++g) {
      if (c.arrows[g].src != y || c.arrows[g].tgt != x) continue;
      if (c.comp(f, g) == c.identity[x] && c.comp(g, f) == c.identity[y]) out.push_back({f, g});
    }
  }
  return out;
}

bool is_gaunt(const fin_cat& c) {
  for (int x = 0; x < c.n_objects(); ++x)
    for (int y = 0; y < c.n_objects(); ++y)
      for (auto [f, g] : find_isomorphisms(c, x, y))
        if (!c.is_identity(f)) return false;
  return true;
}

// --- functors, natural transformations ---------------------------------------

law_report check_functor_laws(const fin_cat& src, const fin_cat& tgt, const fin_functor& f) {
  if (static_cast<int>(f.obj_map.size()) != src.n_objects() ||
      static_cast<int>(f.arr_map.size()) != src.n_arrows())
    fail(errc::malformed_table, "functor '" + f.name + "' table sizes do not match its source");
  for (int v : f.obj_map)
    if (v < 0 || v >= tgt.n_objects()) fail(errc::malformed_table, f.name + ": unknown target object");
  for (int v : f.arr_map)
    if (v < 0 || v >= tgt.n_arrows()) fail(errc::malformed_table, f.name + ": unknown target arrow");

  law_report rep;
  rep.mode = check_mode::exhaustive;
  rep.artifact = "functor:" + (f.name.empty() ? std::string("?") : f.name);

  law_acc endpoints("endpoints");
  for (int a = 0; a < src.n_arrows(); ++a)
    endpoints.tally(tgt.arrows[f.arr_map[a]].src == f.obj_map[src.arrows[a].src] &&
                        tgt.arrows[f.arr_map[a]].tgt == f.obj_map[src.arrows[a].tgt],
                    {a}, "endpoints of image of " + src.arrows[a].name);
  rep.laws.push_back(endpoints.take());

  law_acc ids("identities");
  for (int x = 0; x < src.n_objects(); ++x)
    ids.tally(f.arr_map[src.identity[x]] == tgt.identity[f.obj_map[x]], {x},
              "identity at " + src.objects[x]);
  rep.laws.push_back(ids.take());

  law_acc comp("composition");
  for (int a = 0; a < src.n_arrows(); ++a)
    for (int b = 0; b < src.n_arrows(); ++b) {
      if (!src.composable(a, b)) continue;
      comp.tally(tgt.comp(f.arr_map[a], f.arr_map[b]) == f.arr_map[src.comp(a, b)], {a, b},
                 "image of comp(" + src.arrows[a].name + ", " + src.arrows[b].name + ")");
    }
  rep.laws.push_back(comp.take());
  return rep;
}

fin_functor identity_functor(const fin_cat& c) {
  fin_functor f;
  f.name = "id_" + c.name;
  f.obj_map.resize(c.n_objects());
  f.arr_map.resize(c.n_arrows());
  for (int x = 0; x < c.n_objects(); ++x) f.obj_map[x] = x;
  for (int a = 0; a < c.n_arrows(); ++a) f.arr_map[a] = a;
  return f;
}

fin_functor compose_functors(const fin_functor& f, const fin_functor& g) {
  fin_functor h;
  h.name = f.name + ";" + g.name;
  h.obj_map.resize(f.obj_map.size());
  h.arr_map.resize(f.arr_map.size());
  for (size_t x = 0; x < f.obj_map.size(); ++x) h.obj_map[x] = g.obj_map[f.obj_map[x]];
  for (size_t a = 0; a < f.arr_map.size(); ++a) h.arr_map[a] = g.arr_map[f.arr_map[a]];
  return h;
}

law_report check_naturality(const fin_cat& src, const fin_cat& tgt, const fin_functor& f,
                            const fin_functor& g, const fin_nat_trans& t) {
  if (static_cast<int>(t.component.size()) != src.n_objects())
    fail(errc::malformed_table, "natural transformation component count mismatch");
  law_report rep;
  rep.mode = check_mode::exhaustive;
  rep.artifact = "nattrans:" + (t.name.empty() ? std::string("?") : t.name);

  law_acc typing("component-typing");
  for (int x = 0; x < src.n_objects(); ++x) {
    const int cx = t.component[x];
    typing.tally(cx >= 0 && cx < tgt.n_arrows() && tgt.arrows[cx].src == f.obj_map[x] &&
                     tgt.arrows[cx].tgt == g.obj_map[x],
                 {x}, "component at " + src.objects[x]);
  }
  rep.laws.push_back(typing.take());

  law_acc nat("naturality");
  for (int a = 0; a < src.n_arrows(); ++a) {
    const int x = src.arrows[a].src, y = src.arrows[a].tgt;
    nat.tally(tgt.comp(f.arr_map[a], t.component[y]) == tgt.comp(t.component[x], g.arr_map[a]), {a},
              "square at " + src.arrows[a].name);
  }
  rep.laws.push_back(nat.take());
  return rep;
}

// --- stock categories ---------------------------------------------------------

fin_cat cat_one() {
  cat_builder b("one");
  b.add_object("star");
  return std::move(b).build();
}

fin_cat walking_arrow() {
  cat_builder b("two");
  const int a = b.add_object("a");
  const int bb = b.add_object("b");
  b.add_arrow("f", a, bb);
  return std::move(b).build();
}

fin_cat walking_iso() {
  cat_builder b("walking_iso");
  const int a = b.add_object("a");
  const int bb = b.add_object("b");
  const int f = b.add_arrow("f", a, bb);
  const int g = b.add_arrow("g", bb, a);
  b.set_comp(f, g, b.identity_of(a));
  b.set_comp(g, f, b.identity_of(bb));
  return std::move(b).build();
}

fin_cat chain_poset(int n) {
  cat_builder b("chain" + std::to_string(n));
  std::vector<int> obj(n);
  for (int i = 0; i < n; ++i) obj[i] = b.add_object("x" + std::to_string(i));
  std::vector<std::vector<int>> le(n, std::vector<int>(n, -1));
  for (int i = 0; i < n; ++i) le[i][i] = b.identity_of(obj[i]);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      le[i][j] = b.add_arrow("le" + std::to_string(i) + std::to_string(j), obj[i], obj[j]);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k) b.set_comp(le[i][j], le[j][k], le[i][k]);
  return std::move(b).build();
}

fin_cat discrete_cat(int n) {
  cat_builder b("discrete" + std::to_string(n));
  for (int i = 0; i < n; ++i) b.add_object("d" + std::to_string(i));
  return std::move(b).build();
}

fin_cat parallel_pair() {
  cat_builder b("parallel_pair");
  const int a = b.add_object("a");
  const int bb = b.add_object("b");
  b.add_arrow("u", a, bb);
  b.add_arrow("v", a, bb);
  return std::move(b).build();
}

fin_cat iso_plus_chain(int n) {
  cat_builder b("iso_plus_chain" + std::to_string(n));
  const int a = b.add_object("a");
  const int bb = b.add_object("b");
  const int f = b.add_arrow("f", a, bb);
  const int g = b.add_arrow("g", bb, a);
  b.set_comp(f, g, b.identity_of(a));
  b.set_comp(g, f, b.identity_of(bb));
  std::vector<int> obj(n);
  for (int i = 0; i < n; ++i) obj[i] = b.add_object("c" + std::to_string(i));
  std::vector<std::vector<int>> le(n, std::vector<int>(n, -1));
  for (int i = 0; i < n; ++i) le[i][i] = b.identity_of(obj[i]);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      le[i][j] = b.add_arrow("le" + std::to_string(i) + std::to_string(j), obj[i], obj[j]);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k) b.set_comp(le[i][j], le[j][k], le[i][k]);
  return std::move(b).build();
}

// --- skeletal finite sets ------------------------------------------------------

namespace {

std::string graph_name(int src, int tgt, const std::vector<int>& g) {
  std::string s = "f" + std::to_string(src) + "_" + std::to_string(tgt) + "_";
  for (int v : g) s += std::to_string(v);
  return s;
}

}  // namespace

int finset_cat::arrow_of(int src, int tgt, const std::vector<int>& g) const {
  if (src < 0 || src > size_bound || tgt < 0 || tgt > size_bound)
    fail(errc::closure_exceeded, "finset object " + std::to_string(std::max(src, tgt)) +
                                     " exceeds the declared bound " + std::to_string(size_bound));
  auto it = index.find({{src, tgt}, g});
  if (it == index.end()) fail(errc::internal, "finset arrow lookup failed");
  return it->second;
}

finset_cat skel_finset(int size_bound) {
  if (size_bound < 0) fail(errc::malformed_table, "skel_finset: negative bound");
  finset_cat fs;
  fs.size_bound = size_bound;
  fin_cat& c = fs.cat;
  c.name = "finset" + std::to_string(size_bound);
  for (int k = 0; k <= size_bound; ++k) {
    c.objects.push_back(std::to_string(k));
    c.identity.push_back(-1);
  }
  // arrows ordered by (src, tgt, lexicographic graph)
  for (int m = 0; m <= size_bound; ++m) {
    for (int n = 0; n <= size_bound; ++n) {
      if (m > 0 && n == 0) continue;  // no map from a nonempty set to the empty set
      std::vector<int> g(m, 0);
      while (true) {
        const int id = static_cast<int>(c.arrows.size());
        c.arrows.push_back({m, n, graph_name(m, n, g)});
        fs.graph.push_back(g);
        fs.index[{{m, n}, g}] = id;
        bool is_id = (m == n);
        for (int i = 0; i < m && is_id; ++i) is_id = (g[i] == i);
        if (is_id) c.identity[m] = id;
        // next graph in lexicographic order
        int i = m - 1;
        while (i >= 0 && g[i] == n - 1) g[i--] = 0;
        if (i < 0) break;
        ++g[i];
      }
    }
  }
  const int na = c.n_arrows();
  c.comp_table.assign(static_cast<size_t>(na) * na, -1);
  std::vector<int> h;
  for (int f = 0; f < na; ++f) {
    for (int g = 0; g < na; ++g) {
      if (!c.composable(f, g)) continue;
      const auto& gf = fs.graph[f];
      const auto& gg = fs.graph[g];
      h.assign(gf.size(), 0);
      for (size_t i = 0; i < gf.size(); ++i) h[i] = gg[gf[i]];
      c.comp_ref(f, g) = fs.index.at({{c.arrows[f].src, c.arrows[g].tgt}, h});
    }
  }
  return fs;
}

}  // namespace dblkit
