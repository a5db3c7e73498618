#ifndef DBLKIT_FINCAT_HPP
#define DBLKIT_FINCAT_HPP

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dblkit/report.hpp"

namespace dblkit {

// A finite category as closed tables. Objects and arrows are dense 0-based
// ids; `comp` is defined exactly on composable pairs and composition is read
// diagrammatically: comp(f, g) is "f then g".
struct fin_cat {
  struct arrow {
    int src = -1;
    int tgt = -1;
    std::string name;
    friend bool operator==(const arrow&, const arrow&) = default;
  };

  std::string name;
  std::vector<std::string> objects;
  std::vector<arrow> arrows;
  std::vector<int> identity;    // object id -> arrow id
  std::vector<int> comp_table;  // n_arrows * n_arrows, -1 where undefined

  int n_objects() const { return static_cast<int>(objects.size()); }
  int n_arrows() const { return static_cast<int>(arrows.size()); }

  bool composable(int f, int g) const { return arrows[f].tgt == arrows[g].src; }
  int comp(int f, int g) const { return comp_table[static_cast<size_t>(f) * arrows.size() + g]; }
  int& comp_ref(int f, int g) { return comp_table[static_cast<size_t>(f) * arrows.size() + g]; }
  bool is_identity(int f) const { return identity[arrows[f].src] == f && arrows[f].src == arrows[f].tgt; }

  std::vector<int> hom(int x, int y) const {
    std::vector<int> out;
    for (int f = 0; f < n_arrows(); ++f)
      if (arrows[f].src == x && arrows[f].tgt == y) out.push_back(f);
    return out;
  }

  friend bool operator==(const fin_cat&, const fin_cat&) = default;
};

// Incremental construction helper. Identity arrows and every composite that
// involves an identity are synthesized by build(); callers state only the
// non-identity entries.
class cat_builder {
public:
  explicit cat_builder(std::string name = "");
  int add_object(const std::string& name);
  int add_arrow(const std::string& name, int src, int tgt);
  void set_comp(int f, int g, int h);  // comp(f, g) = h, diagrammatic
  int identity_of(int obj) const;
  // Fills identity composites, checks the table is total on composable pairs
  // (throws errc::malformed_table otherwise).
  fin_cat build() &&;

private:
  fin_cat cat_;
  std::vector<std::pair<std::pair<int, int>, int>> entries_;
};

// Category laws: typing of every table entry, left/right identity,
// associativity. Throws errc::malformed_table when ids are out of range;
// equational violations are reported, not thrown.
law_report check_category_laws(const fin_cat& c);
// Re-runs the single law instance recorded in `r` (by law name and witness).
// Returns true when the instance *fails* again, i.e. the witness is genuine.
bool replay_category_law(const fin_cat& c, const law_result& r);

// Complete list of isomorphism pairs (f: x -> y, g: y -> x) with
// comp(f,g) = id_x and comp(g,f) = id_y, in lexicographic (f, g) order.
std::vector<std::pair<int, int>> find_isomorphisms(const fin_cat& c, int x, int y);

// Every isomorphism is an identity arrow.
bool is_gaunt(const fin_cat& c);

// Functor as tables: obj_map over src objects, arr_map over src arrows.
struct fin_functor {
  std::string name;
  std::vector<int> obj_map;
  std::vector<int> arr_map;
};

// Endpoint preservation, identity preservation, composition preservation.
law_report check_functor_laws(const fin_cat& src, const fin_cat& tgt, const fin_functor& f);
fin_functor identity_functor(const fin_cat& c);
fin_functor compose_functors(const fin_functor& f, const fin_functor& g);  // f then g

// Natural transformation F => G between functors src -> tgt: one component
// arrow per source object.
struct fin_nat_trans {
  std::string name;
  std::vector<int> component;
};

law_report check_naturality(const fin_cat& src, const fin_cat& tgt, const fin_functor& f,
                            const fin_functor& g, const fin_nat_trans& t);

// --- stock categories -------------------------------------------------------

fin_cat cat_one();                 // single object, identity only
fin_cat walking_arrow();           // a -> b
fin_cat walking_iso();             // a ~= b
fin_cat chain_poset(int n);        // x0 <= x1 <= ... <= x{n-1}
fin_cat discrete_cat(int n);       // identities only
fin_cat parallel_pair();           // u, v : a -> b
fin_cat iso_plus_chain(int n);     // walking iso next to a chain; not gaunt

// Skeletal finite sets up to a size bound: object k is the k-element set,
// arrows are all functions, ordered by (src, tgt, lexicographic graph) so ids
// are reproducible. `graph` records each arrow's value table and `index` maps
// it back; set-level helpers that would need an object beyond `size_bound`
// raise errc::closure_exceeded instead of truncating.
struct finset_cat {
  fin_cat cat;
  int size_bound = 0;
  std::vector<std::vector<int>> graph;
  std::map<std::pair<std::pair<int, int>, std::vector<int>>, int> index;

  int arrow_of(int src, int tgt, const std::vector<int>& g) const;
};

finset_cat skel_finset(int size_bound);

}  // namespace dblkit

#endif
