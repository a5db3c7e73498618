#ifndef DBLKIT_DSL_HPP
#define DBLKIT_DSL_HPP

#include <string>
#include <variant>
#include <vector>

#include "dblkit/bicat.hpp"
#include "dblkit/double_cat.hpp"
#include "dblkit/fincat.hpp"
#include "dblkit/profunctor.hpp"
#include "dblkit/report.hpp"
#include "dblkit/verity.hpp"

namespace dblkit {
namespace dsl {

// Text presentation language for the structures in this library. The grammar
// lives in docs/grammar.ebnf; the two conventions worth repeating are that
// every composition entry is written "B op A = C" for "A then B equals C",
// and that identity cells are synthesized under the reserved names id_<cell>
// rather than declared.

struct source_span {
  int line = 0;  // 1-based; 0 means no recorded position
  int column = 0;
  int length = 0;
};

enum class severity { error, warning };

struct diagnostic {
  std::string file;
  source_span span;
  severity sev = severity::error;
  std::string message;
};

// "file:line:col: error: message"
std::string format_diagnostic(const diagnostic& d);

// AST nodes compare by content only; spans never take part in equality, so a
// printed-and-reparsed tree equals its source tree.
struct ast_name {
  std::string text;
  source_span span;
  ast_name() = default;
  ast_name(std::string t) : text(std::move(t)) {}
  ast_name(const char* t) : text(t) {}
  friend bool operator==(const ast_name& a, const ast_name& b) { return a.text == b.text; }
};

struct ast_arrow_decl {  // name: src -> tgt
  ast_name name, src, tgt;
  friend bool operator==(const ast_arrow_decl&, const ast_arrow_decl&) = default;
};

struct ast_map_entry {  // from => to
  ast_name from, to;
  friend bool operator==(const ast_map_entry&, const ast_map_entry&) = default;
};

struct ast_comp_entry {  // after op before = result, declaring op(before, after) = result
  ast_name after, before, result;
  friend bool operator==(const ast_comp_entry&, const ast_comp_entry&) = default;
};

struct ast_cell2_decl {  // name: src => tgt
  ast_name name, src, tgt;
  friend bool operator==(const ast_cell2_decl&, const ast_cell2_decl&) = default;
};

struct ast_square_decl {  // name: [v1, v2, h1, h2]
  ast_name name, v1, v2, h1, h2;
  friend bool operator==(const ast_square_decl&, const ast_square_decl&) = default;
};

struct ast_key_entry {  // [k1, k2, k3] => value
  std::vector<ast_name> key;
  ast_name value;
  friend bool operator==(const ast_key_entry&, const ast_key_entry&) = default;
};

struct ast_elem_decl {  // name: d * c, an element of value(d, c)
  ast_name name, d, c;
  friend bool operator==(const ast_elem_decl&, const ast_elem_decl&) = default;
};

struct ast_act_entry {  // arrow(elem) = result
  ast_name arrow, elem, result;
  friend bool operator==(const ast_act_entry&, const ast_act_entry&) = default;
};

struct ast_probe_instance {  // "law-name" [w0, w1, ...]
  ast_name law;
  std::vector<long long> witness;
  friend bool operator==(const ast_probe_instance&, const ast_probe_instance&) = default;
};

struct ast_category {
  ast_name name;
  std::vector<ast_name> objects;
  std::vector<ast_arrow_decl> arrows;
  std::vector<ast_comp_entry> compose;
  friend bool operator==(const ast_category&, const ast_category&) = default;
};

struct ast_functor {
  ast_name name, src, tgt;
  std::vector<ast_map_entry> objects;
  std::vector<ast_map_entry> arrows;
  friend bool operator==(const ast_functor&, const ast_functor&) = default;
};

struct ast_profunctor {
  ast_name name, src, tgt;
  std::vector<ast_elem_decl> elements;
  std::vector<ast_act_entry> left;   // actions by arrows of tgt
  std::vector<ast_act_entry> right;  // actions by arrows of src
  friend bool operator==(const ast_profunctor&, const ast_profunctor&) = default;
};

struct ast_bicat {
  ast_name name;
  bool discrete_form = false;
  ast_name discrete_of;
  ast_name object;  // one-object form
  std::vector<ast_name> cells1;
  std::vector<ast_map_entry> identity1;
  std::vector<ast_comp_entry> compose1;
  std::vector<ast_cell2_decl> cells2;
  std::vector<ast_comp_entry> vcompose;
  std::vector<ast_comp_entry> hcompose;
  std::vector<ast_map_entry> lunitor;
  std::vector<ast_map_entry> runitor;
  std::vector<ast_key_entry> associator;
  friend bool operator==(const ast_bicat&, const ast_bicat&) = default;
};

struct ast_doublecat {
  ast_name name;
  ast_name vertical;
  std::vector<ast_arrow_decl> horizontals;
  std::vector<ast_map_entry> horid;
  std::vector<ast_comp_entry> hcompose;
  std::vector<ast_square_decl> squares;
  std::vector<ast_map_entry> sqvid;
  std::vector<ast_map_entry> sqhid;
  std::vector<ast_comp_entry> vstack;
  std::vector<ast_comp_entry> hpaste;
  std::vector<ast_map_entry> lunitor;
  std::vector<ast_map_entry> runitor;
  std::vector<ast_key_entry> associator;
  bool probe_mode = false;
  bool object_indexed = false;
  friend bool operator==(const ast_doublecat&, const ast_doublecat&) = default;
};

struct ast_verity {
  ast_name name;
  bool square_form = false;  // square: B (bicat) instead of bridge: D (doublecat)
  ast_name of;
  friend bool operator==(const ast_verity&, const ast_verity&) = default;
};

struct ast_probes {
  ast_name name;
  ast_name target;
  std::vector<ast_probe_instance> instances;
  friend bool operator==(const ast_probes&, const ast_probes&) = default;
};

using ast_block = std::variant<ast_category, ast_functor, ast_profunctor, ast_bicat,
                               ast_doublecat, ast_verity, ast_probes>;

struct presentation {
  std::vector<ast_block> blocks;
  friend bool operator==(const presentation&, const presentation&) = default;
};

struct parse_result {
  presentation ast;
  std::vector<diagnostic> diagnostics;
  bool ok() const { return diagnostics.empty(); }
};

// Parsing never throws. Malformed input is reported through diagnostics with
// 1-based line and column spans, and the parser recovers at the next ';' or
// the end of the enclosing block.
parse_result parse_presentation(const std::string& text, const std::string& file = "<memory>");

// Canonical form: one section per line under two-space indent, sections in
// grammar order, empty sections omitted, blocks separated by a blank line,
// names quoted only when they are not plain identifiers.
std::string print_presentation(const presentation& p);
std::string print_block(const ast_block& b);

// Value-to-AST canonicalizers. References to identity arrows and identity
// 2-cells are renamed to their reserved id_<cell> names, and entries that
// elaboration synthesizes (identity cells, unit composites, identity
// actions, and unitor or associator components equal to their strict
// default) are dropped. Re-elaborating the result rebuilds the value up to
// renaming and renumbering of identity cells.
ast_category to_ast(const fin_cat& c);
ast_functor to_ast(const fin_functor& f, const fin_cat& src, const fin_cat& tgt,
                   const std::string& src_name, const std::string& tgt_name);
ast_profunctor to_ast(const fin_profunctor& p, const fin_cat& src, const fin_cat& tgt,
                      const std::string& src_name, const std::string& tgt_name);
ast_doublecat to_ast(const pseudo_double_cat& d, const std::string& vertical_name);
ast_bicat discrete_bicat_ast(const std::string& name, const std::string& category_name);
// errc::precondition_failed unless b has exactly one object
ast_bicat to_ast_one_object(const fin_bicat& b);
ast_verity bridge_verity_ast(const std::string& name, const std::string& doublecat_name);
ast_verity square_verity_ast(const std::string& name, const std::string& bicat_name);

struct probe_instance {
  std::string law;
  std::vector<long long> witness;
};

struct elab_result {
  struct cat_entry {
    std::string name;
    fin_cat value;
  };
  struct functor_entry {
    std::string name, src, tgt;
    fin_functor value;
  };
  struct prof_entry {
    std::string name, src, tgt;
    fin_profunctor value;
  };
  struct bicat_entry {
    std::string name;
    fin_bicat value;
  };
  struct double_entry {
    std::string name;
    pseudo_double_cat value;
  };
  struct verity_entry {
    std::string name;
    verity_double_bicat value;
  };
  struct probes_entry {
    std::string name, target;
    std::vector<probe_instance> instances;
  };

  std::vector<cat_entry> cats;
  std::vector<functor_entry> functors;
  std::vector<prof_entry> profs;
  std::vector<bicat_entry> bicats;
  std::vector<double_entry> doubles;
  std::vector<verity_entry> veritys;
  std::vector<probes_entry> probes;
  std::vector<law_report> reports;  // one per elaborated block, in file order
  std::vector<diagnostic> diagnostics;

  bool ok() const { return diagnostics.empty(); }
  const fin_cat* find_cat(const std::string& name) const;
  const fin_bicat* find_bicat(const std::string& name) const;
  const pseudo_double_cat* find_double(const std::string& name) const;
  const verity_double_bicat* find_verity(const std::string& name) const;
};

// Elaboration resolves names, synthesizes identity cells and the composites
// forced by unit laws, runs every block's law check and attaches the report,
// and reports all language-level trouble as diagnostics instead of throwing.
// A probes block becomes a probe-mode report whose instances pass when the
// recorded witness does not definitely fail on replay.
elab_result elaborate(const presentation& p, const std::string& file = "<memory>");

}  // namespace dsl
}  // namespace dblkit

#endif
