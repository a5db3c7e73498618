#include "dblkit/dsl.hpp"

#include <cctype>
#include <optional>
#include <sstream>

namespace dblkit {
namespace dsl {

std::string format_diagnostic(const diagnostic& d) {
  std::ostringstream out;
  out << d.file << ":" << d.span.line << ":" << d.span.column << ": "
      << (d.sev == severity::error ? "error" : "warning") << ": " << d.message;
  return out.str();
}

namespace {

enum class tok_kind {
  ident,
  str,
  integer,
  lbrace,
  rbrace,
  lbracket,
  rbracket,
  lparen,
  rparen,
  colon,
  semi,
  comma,
  dot,
  star,
  equals,
  arrow,      // ->
  darrow,     // =>
  profarrow,  // -|>
  end,
  bad
};

const char* tok_label(tok_kind k) {
  switch (k) {
    case tok_kind::ident: return "a name";
    case tok_kind::str: return "a name";
    case tok_kind::integer: return "an integer";
    case tok_kind::lbrace: return "'{'";
    case tok_kind::rbrace: return "'}'";
    case tok_kind::lbracket: return "'['";
    case tok_kind::rbracket: return "']'";
    case tok_kind::lparen: return "'('";
    case tok_kind::rparen: return "')'";
    case tok_kind::colon: return "':'";
    case tok_kind::semi: return "';'";
    case tok_kind::comma: return "','";
    case tok_kind::dot: return "'.'";
    case tok_kind::star: return "'*'";
    case tok_kind::equals: return "'='";
    case tok_kind::arrow: return "'->'";
    case tok_kind::darrow: return "'=>'";
    case tok_kind::profarrow: return "'-|>'";
    case tok_kind::end: return "end of input";
    case tok_kind::bad: return "invalid input";
  }
  return "?";
}

struct token {
  tok_kind kind = tok_kind::end;
  std::string text;
  long long value = 0;
  source_span span;
};

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

bool is_block_keyword(const std::string& s) {
  return s == "category" || s == "functor" || s == "profunctor" || s == "bicat" ||
         s == "doublecat" || s == "verity" || s == "probes";
}

struct lexer {
  const std::string& src;
  const std::string& file;
  std::vector<diagnostic>& diags;
  size_t pos = 0;
  int line = 1;
  int col = 1;

  char peek(size_t k = 0) const { return pos + k < src.size() ? src[pos + k] : '\0'; }

  char get() {
    const char c = src[pos++];
    if (c == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
    return c;
  }

  void skip_space() {
    while (pos < src.size()) {
      const char c = peek();
      if (c == '#') {
        while (pos < src.size() && peek() != '\n') get();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        get();
      } else {
        return;
      }
    }
  }

  token make(tok_kind k, int l, int c, size_t start) {
    token t;
    t.kind = k;
    t.span = {l, c, static_cast<int>(pos - start)};
    t.text = src.substr(start, pos - start);
    return t;
  }

  token next() {
    skip_space();
    const int l = line, c = col;
    const size_t start = pos;
    if (pos >= src.size()) return make(tok_kind::end, l, c, start);
    const char ch = get();
    if (ident_start(ch)) {
      while (pos < src.size() && ident_char(peek())) get();
      return make(tok_kind::ident, l, c, start);
    }
    if (std::isdigit(static_cast<unsigned char>(ch))) return lex_integer(l, c, start);
    switch (ch) {
      case '"': return lex_string(l, c, start);
      case '{': return make(tok_kind::lbrace, l, c, start);
      case '}': return make(tok_kind::rbrace, l, c, start);
      case '[': return make(tok_kind::lbracket, l, c, start);
      case ']': return make(tok_kind::rbracket, l, c, start);
      case '(': return make(tok_kind::lparen, l, c, start);
      case ')': return make(tok_kind::rparen, l, c, start);
      case ':': return make(tok_kind::colon, l, c, start);
      case ';': return make(tok_kind::semi, l, c, start);
      case ',': return make(tok_kind::comma, l, c, start);
      case '.': return make(tok_kind::dot, l, c, start);
      case '*': return make(tok_kind::star, l, c, start);
      case '=':
        if (peek() == '>') {
          get();
          return make(tok_kind::darrow, l, c, start);
        }
        return make(tok_kind::equals, l, c, start);
      case '-':
        if (peek() == '>') {
          get();
          return make(tok_kind::arrow, l, c, start);
        }
        if (peek() == '|' && peek(1) == '>') {
          get();
          get();
          return make(tok_kind::profarrow, l, c, start);
        }
        if (std::isdigit(static_cast<unsigned char>(peek()))) return lex_integer(l, c, start);
        break;
      default: break;
    }
    token t = make(tok_kind::bad, l, c, start);
    diags.push_back({file, t.span, severity::error,
                     "unexpected character '" + std::string(1, ch) + "'"});
    return t;
  }

  token lex_integer(int l, int c, size_t start) {
    while (pos < src.size() && std::isdigit(static_cast<unsigned char>(peek()))) get();
    token t = make(tok_kind::integer, l, c, start);
    t.value = std::stoll(t.text);
    return t;
  }

  token lex_string(int l, int c, size_t start) {
    std::string decoded;
    while (true) {
      if (pos >= src.size() || peek() == '\n') {
        token t = make(tok_kind::str, l, c, start);
        t.text = decoded;
        diags.push_back({file, t.span, severity::error, "unterminated string"});
        return t;
      }
      const char ch = get();
      if (ch == '"') break;
      if (ch == '\\') {
        const char esc = pos < src.size() ? get() : '\0';
        if (esc == '"' || esc == '\\') {
          decoded += esc;
        } else {
          diags.push_back({file,
                           {line, col - 2, 2},
                           severity::error,
                           "unknown escape '\\" + std::string(1, esc) + "'"});
        }
      } else {
        decoded += ch;
      }
    }
    token t = make(tok_kind::str, l, c, start);
    t.text = decoded;
    return t;
  }
};

std::vector<token> lex_all(const std::string& text, const std::string& file,
                           std::vector<diagnostic>& diags) {
  lexer lx{text, file, diags};
  std::vector<token> toks;
  while (true) {
    toks.push_back(lx.next());
    if (toks.back().kind == tok_kind::end) return toks;
  }
}

struct parser {
  std::vector<token> toks;
  std::string file;
  std::vector<diagnostic>& diags;
  size_t i = 0;

  const token& cur() const { return toks[i]; }
  bool at(tok_kind k) const { return cur().kind == k; }
  bool at_ident(const char* text) const { return at(tok_kind::ident) && cur().text == text; }
  void advance() {
    if (!at(tok_kind::end)) ++i;
  }

  void error_here(std::string msg) {
    diags.push_back({file, cur().span, severity::error, std::move(msg)});
  }
  void error_at(const source_span& span, std::string msg) {
    diags.push_back({file, span, severity::error, std::move(msg)});
  }

  bool expect(tok_kind k) {
    if (at(k)) {
      advance();
      return true;
    }
    error_here(std::string("expected ") + tok_label(k) + ", found " + tok_label(cur().kind));
    return false;
  }

  // consume up to and including the next ';', stopping before '}'
  void sync_section() {
    while (!at(tok_kind::end) && !at(tok_kind::rbrace)) {
      if (at(tok_kind::semi)) {
        advance();
        return;
      }
      advance();
    }
  }

  // consume the remainder of the current block, including its '}'
  void sync_block() {
    int depth = 0;
    while (!at(tok_kind::end)) {
      if (at(tok_kind::lbrace)) ++depth;
      if (at(tok_kind::rbrace)) {
        advance();
        if (depth == 0) return;
        --depth;
        continue;
      }
      advance();
    }
  }

  std::optional<ast_name> name() {
    if (at(tok_kind::ident) || at(tok_kind::str)) {
      ast_name n;
      n.text = cur().text;
      n.span = cur().span;
      advance();
      return n;
    }
    error_here(std::string("expected a name, found ") + tok_label(cur().kind));
    return std::nullopt;
  }

  template <typename T>
  bool entry_list(std::vector<T>& out, std::optional<T> (parser::*entry)()) {
    while (true) {
      auto e = (this->*entry)();
      if (!e) return false;
      out.push_back(std::move(*e));
      if (!at(tok_kind::comma)) return true;
      advance();
    }
  }

  std::optional<ast_name> name_entry() { return name(); }

  std::optional<ast_arrow_decl> arrow_decl() {
    ast_arrow_decl d;
    auto n = name();
    if (!n || !expect(tok_kind::colon)) return std::nullopt;
    auto s = name();
    if (!s || !expect(tok_kind::arrow)) return std::nullopt;
    auto t = name();
    if (!t) return std::nullopt;
    d.name = *n;
    d.src = *s;
    d.tgt = *t;
    return d;
  }

  std::optional<ast_map_entry> map_entry() {
    auto f = name();
    if (!f || !expect(tok_kind::darrow)) return std::nullopt;
    auto t = name();
    if (!t) return std::nullopt;
    return ast_map_entry{*f, *t};
  }

  std::optional<ast_comp_entry> comp_entry(tok_kind op) {
    auto after = name();
    if (!after || !expect(op)) return std::nullopt;
    auto before = name();
    if (!before || !expect(tok_kind::equals)) return std::nullopt;
    auto result = name();
    if (!result) return std::nullopt;
    return ast_comp_entry{*after, *before, *result};
  }
  std::optional<ast_comp_entry> dot_entry() { return comp_entry(tok_kind::dot); }
  std::optional<ast_comp_entry> star_entry() { return comp_entry(tok_kind::star); }

  std::optional<ast_cell2_decl> cell2_decl() {
    auto n = name();
    if (!n || !expect(tok_kind::colon)) return std::nullopt;
    auto s = name();
    if (!s || !expect(tok_kind::darrow)) return std::nullopt;
    auto t = name();
    if (!t) return std::nullopt;
    return ast_cell2_decl{*n, *s, *t};
  }

  std::optional<ast_square_decl> square_decl() {
    auto n = name();
    if (!n || !expect(tok_kind::colon) || !expect(tok_kind::lbracket)) return std::nullopt;
    ast_square_decl d;
    d.name = *n;
    ast_name* sides[4] = {&d.v1, &d.v2, &d.h1, &d.h2};
    for (int k = 0; k < 4; ++k) {
      if (k > 0 && !expect(tok_kind::comma)) return std::nullopt;
      auto side = name();
      if (!side) return std::nullopt;
      *sides[k] = *side;
    }
    if (!expect(tok_kind::rbracket)) return std::nullopt;
    return d;
  }

  std::optional<ast_key_entry> key_entry() {
    if (!expect(tok_kind::lbracket)) return std::nullopt;
    ast_key_entry e;
    for (int k = 0; k < 3; ++k) {
      if (k > 0 && !expect(tok_kind::comma)) return std::nullopt;
      auto n = name();
      if (!n) return std::nullopt;
      e.key.push_back(*n);
    }
    if (!expect(tok_kind::rbracket) || !expect(tok_kind::darrow)) return std::nullopt;
    auto v = name();
    if (!v) return std::nullopt;
    e.value = *v;
    return e;
  }

  std::optional<ast_elem_decl> elem_decl() {
    auto n = name();
    if (!n || !expect(tok_kind::colon)) return std::nullopt;
    auto d = name();
    if (!d || !expect(tok_kind::star)) return std::nullopt;
    auto c = name();
    if (!c) return std::nullopt;
    return ast_elem_decl{*n, *d, *c};
  }

  std::optional<ast_act_entry> act_entry() {
    auto a = name();
    if (!a || !expect(tok_kind::lparen)) return std::nullopt;
    auto e = name();
    if (!e || !expect(tok_kind::rparen) || !expect(tok_kind::equals)) return std::nullopt;
    auto r = name();
    if (!r) return std::nullopt;
    return ast_act_entry{*a, *e, *r};
  }

  std::optional<ast_probe_instance> probe_instance() {
    auto law = name();
    if (!law || !expect(tok_kind::lbracket)) return std::nullopt;
    ast_probe_instance inst;
    inst.law = *law;
    if (!at(tok_kind::rbracket)) {
      while (true) {
        if (!at(tok_kind::integer)) {
          error_here(std::string("expected an integer, found ") + tok_label(cur().kind));
          return std::nullopt;
        }
        inst.witness.push_back(cur().value);
        advance();
        if (!at(tok_kind::comma)) break;
        advance();
      }
    }
    if (!expect(tok_kind::rbracket)) return std::nullopt;
    return inst;
  }

  // a section is "keyword : entries ;"; returns false once the block is done
  struct section_head {
    std::string keyword;
    source_span span;
  };

  std::optional<section_head> section_start() {
    if (at(tok_kind::rbrace) || at(tok_kind::end)) return std::nullopt;
    if (!at(tok_kind::ident)) {
      error_here(std::string("expected a section keyword, found ") + tok_label(cur().kind));
      sync_section();
      return section_head{"", cur().span};
    }
    section_head h{cur().text, cur().span};
    advance();
    if (!expect(tok_kind::colon)) {
      sync_section();
      return section_head{"", h.span};
    }
    return h;
  }

  template <typename T>
  void list_section(std::vector<T>& out, std::optional<T> (parser::*entry)()) {
    if (!entry_list(out, entry)) {
      sync_section();
      return;
    }
    if (!expect(tok_kind::semi)) sync_section();
  }

  std::optional<ast_name> single_name_section() {
    auto n = name();
    if (!n) {
      sync_section();
      return std::nullopt;
    }
    if (!expect(tok_kind::semi)) sync_section();
    return n;
  }

  void set_single(ast_name& slot, bool& seen, const section_head& h) {
    auto n = single_name_section();
    if (!n) return;
    if (seen) {
      error_at(h.span, "duplicate section '" + h.keyword + "'");
      return;
    }
    slot = *n;
    seen = true;
  }

  void unknown_section(const section_head& h, const char* block_kind) {
    if (!h.keyword.empty())
      error_at(h.span, "unknown section '" + h.keyword + "' in a " + block_kind + " block");
    sync_section();
  }

  bool block_header_name(ast_name& out) {
    auto n = name();
    if (!n) {
      sync_block();
      return false;
    }
    out = *n;
    return true;
  }

  bool open_block() {
    if (expect(tok_kind::lbrace)) return true;
    sync_block();
    return false;
  }

  void close_block() {
    if (!expect(tok_kind::rbrace)) sync_block();
  }

  ast_category parse_category() {
    ast_category blk;
    if (!block_header_name(blk.name) || !open_block()) return blk;
    while (auto h = section_start()) {
      if (h->keyword == "objects")
        list_section(blk.objects, &parser::name_entry);
      else if (h->keyword == "arrows")
        list_section(blk.arrows, &parser::arrow_decl);
      else if (h->keyword == "compose")
        list_section(blk.compose, &parser::dot_entry);
      else
        unknown_section(*h, "category");
    }
    close_block();
    return blk;
  }

  ast_functor parse_functor() {
    ast_functor blk;
    if (!block_header_name(blk.name)) return blk;
    auto s = expect(tok_kind::colon) ? name() : std::nullopt;
    if (!s || !expect(tok_kind::arrow)) {
      sync_block();
      return blk;
    }
    auto t = name();
    if (!t || !open_block()) {
      if (!t) sync_block();
      return blk;
    }
    blk.src = *s;
    blk.tgt = *t;
    while (auto h = section_start()) {
      if (h->keyword == "objects")
        list_section(blk.objects, &parser::map_entry);
      else if (h->keyword == "arrows")
        list_section(blk.arrows, &parser::map_entry);
      else
        unknown_section(*h, "functor");
    }
    close_block();
    return blk;
  }

  ast_profunctor parse_profunctor() {
    ast_profunctor blk;
    if (!block_header_name(blk.name)) return blk;
    auto s = expect(tok_kind::colon) ? name() : std::nullopt;
    if (!s || !expect(tok_kind::profarrow)) {
      sync_block();
      return blk;
    }
    auto t = name();
    if (!t || !open_block()) {
      if (!t) sync_block();
      return blk;
    }
    blk.src = *s;
    blk.tgt = *t;
    while (auto h = section_start()) {
      if (h->keyword == "elements")
        list_section(blk.elements, &parser::elem_decl);
      else if (h->keyword == "left")
        list_section(blk.left, &parser::act_entry);
      else if (h->keyword == "right")
        list_section(blk.right, &parser::act_entry);
      else
        unknown_section(*h, "profunctor");
    }
    close_block();
    return blk;
  }

  ast_bicat parse_bicat() {
    ast_bicat blk;
    if (!block_header_name(blk.name) || !open_block()) return blk;
    bool seen_discrete = false, seen_object = false;
    while (auto h = section_start()) {
      if (h->keyword == "discrete") {
        set_single(blk.discrete_of, seen_discrete, *h);
        blk.discrete_form = seen_discrete;
      } else if (h->keyword == "object")
        set_single(blk.object, seen_object, *h);
      else if (h->keyword == "cells1")
        list_section(blk.cells1, &parser::name_entry);
      else if (h->keyword == "identity1")
        list_section(blk.identity1, &parser::map_entry);
      else if (h->keyword == "compose1")
        list_section(blk.compose1, &parser::star_entry);
      else if (h->keyword == "cells2")
        list_section(blk.cells2, &parser::cell2_decl);
      else if (h->keyword == "vcompose")
        list_section(blk.vcompose, &parser::dot_entry);
      else if (h->keyword == "hcompose")
        list_section(blk.hcompose, &parser::star_entry);
      else if (h->keyword == "lunitor")
        list_section(blk.lunitor, &parser::map_entry);
      else if (h->keyword == "runitor")
        list_section(blk.runitor, &parser::map_entry);
      else if (h->keyword == "associator")
        list_section(blk.associator, &parser::key_entry);
      else
        unknown_section(*h, "bicat");
    }
    close_block();
    return blk;
  }

  ast_doublecat parse_doublecat() {
    ast_doublecat blk;
    if (!block_header_name(blk.name) || !open_block()) return blk;
    bool seen_vertical = false, seen_mode = false, seen_carrier = false;
    while (auto h = section_start()) {
      if (h->keyword == "vertical")
        set_single(blk.vertical, seen_vertical, *h);
      else if (h->keyword == "horizontals")
        list_section(blk.horizontals, &parser::arrow_decl);
      else if (h->keyword == "horid")
        list_section(blk.horid, &parser::map_entry);
      else if (h->keyword == "hcompose")
        list_section(blk.hcompose, &parser::star_entry);
      else if (h->keyword == "squares")
        list_section(blk.squares, &parser::square_decl);
      else if (h->keyword == "sqvid")
        list_section(blk.sqvid, &parser::map_entry);
      else if (h->keyword == "sqhid")
        list_section(blk.sqhid, &parser::map_entry);
      else if (h->keyword == "vstack")
        list_section(blk.vstack, &parser::dot_entry);
      else if (h->keyword == "hpaste")
        list_section(blk.hpaste, &parser::star_entry);
      else if (h->keyword == "lunitor")
        list_section(blk.lunitor, &parser::map_entry);
      else if (h->keyword == "runitor")
        list_section(blk.runitor, &parser::map_entry);
      else if (h->keyword == "associator")
        list_section(blk.associator, &parser::key_entry);
      else if (h->keyword == "mode")
        mode_section(blk, seen_mode, *h);
      else if (h->keyword == "carrier")
        carrier_section(blk, seen_carrier, *h);
      else
        unknown_section(*h, "doublecat");
    }
    close_block();
    return blk;
  }

  void mode_section(ast_doublecat& blk, bool& seen, const section_head& h) {
    auto v = single_name_section();
    if (!v) return;
    if (seen) {
      error_at(h.span, "duplicate section 'mode'");
      return;
    }
    seen = true;
    if (v->text == "probe")
      blk.probe_mode = true;
    else if (v->text != "exhaustive")
      error_at(v->span, "mode must be 'exhaustive' or 'probe'");
  }

  void carrier_section(ast_doublecat& blk, bool& seen, const section_head& h) {
    auto v = single_name_section();
    if (!v) return;
    if (seen) {
      error_at(h.span, "duplicate section 'carrier'");
      return;
    }
    seen = true;
    if (v->text == "indexed")
      blk.object_indexed = true;
    else if (v->text != "set")
      error_at(v->span, "carrier must be 'set' or 'indexed'");
  }

  ast_verity parse_verity() {
    ast_verity blk;
    if (!block_header_name(blk.name) || !open_block()) return blk;
    bool seen_of = false;
    while (auto h = section_start()) {
      if (h->keyword == "bridge" || h->keyword == "square") {
        const bool square = h->keyword == "square";
        auto n = single_name_section();
        if (!n) continue;
        if (seen_of) {
          error_at(h->span, "a verity block takes a single 'bridge' or 'square' section");
          continue;
        }
        seen_of = true;
        blk.square_form = square;
        blk.of = *n;
      } else
        unknown_section(*h, "verity");
    }
    close_block();
    return blk;
  }

  ast_probes parse_probes() {
    ast_probes blk;
    if (!block_header_name(blk.name) || !open_block()) return blk;
    bool seen_target = false;
    while (auto h = section_start()) {
      if (h->keyword == "target")
        set_single(blk.target, seen_target, *h);
      else if (h->keyword == "instance")
        list_section(blk.instances, &parser::probe_instance);
      else
        unknown_section(*h, "probes");
    }
    close_block();
    return blk;
  }

  presentation parse_file() {
    presentation p;
    while (!at(tok_kind::end)) {
      if (at_ident("category"))
        advance(), p.blocks.push_back(parse_category());
      else if (at_ident("functor"))
        advance(), p.blocks.push_back(parse_functor());
      else if (at_ident("profunctor"))
        advance(), p.blocks.push_back(parse_profunctor());
      else if (at_ident("bicat"))
        advance(), p.blocks.push_back(parse_bicat());
      else if (at_ident("doublecat"))
        advance(), p.blocks.push_back(parse_doublecat());
      else if (at_ident("verity"))
        advance(), p.blocks.push_back(parse_verity());
      else if (at_ident("probes"))
        advance(), p.blocks.push_back(parse_probes());
      else {
        error_here(std::string("expected a block keyword, found ") + tok_label(cur().kind));
        advance();
        while (!at(tok_kind::end) && !(at(tok_kind::ident) && is_block_keyword(cur().text)))
          advance();
      }
    }
    return p;
  }
};

}  // namespace

parse_result parse_presentation(const std::string& text, const std::string& file) {
  parse_result res;
  auto toks = lex_all(text, file, res.diagnostics);
  parser p{std::move(toks), file, res.diagnostics};
  res.ast = p.parse_file();
  return res;
}

// --- printing -------------------------------------------------------------------

namespace {

bool plain_ident(const std::string& s) {
  if (s.empty() || !ident_start(s[0])) return false;
  for (char c : s)
    if (!ident_char(c)) return false;
  return true;
}

std::string pname(const ast_name& n) {
  if (plain_ident(n.text)) return n.text;
  std::string out = "\"";
  for (char c : n.text) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  out += "\"";
  return out;
}

struct printer {
  std::ostringstream out;

  template <typename T, typename F>
  void section(const char* keyword, const std::vector<T>& entries, F&& fmt) {
    if (entries.empty()) return;
    out << "  " << keyword << ": ";
    for (size_t k = 0; k < entries.size(); ++k) {
      if (k) out << ", ";
      out << fmt(entries[k]);
    }
    out << ";\n";
  }

  void single(const char* keyword, const ast_name& n) {
    if (n.text.empty()) return;
    out << "  " << keyword << ": " << pname(n) << ";\n";
  }

  static std::string fmt_name(const ast_name& n) { return pname(n); }
  static std::string fmt_arrow(const ast_arrow_decl& d) {
    return pname(d.name) + ": " + pname(d.src) + " -> " + pname(d.tgt);
  }
  static std::string fmt_map(const ast_map_entry& e) {
    return pname(e.from) + " => " + pname(e.to);
  }
  static std::string fmt_dot(const ast_comp_entry& e) {
    return pname(e.after) + " . " + pname(e.before) + " = " + pname(e.result);
  }
  static std::string fmt_star(const ast_comp_entry& e) {
    return pname(e.after) + " * " + pname(e.before) + " = " + pname(e.result);
  }
  static std::string fmt_cell2(const ast_cell2_decl& d) {
    return pname(d.name) + ": " + pname(d.src) + " => " + pname(d.tgt);
  }
  static std::string fmt_square(const ast_square_decl& d) {
    return pname(d.name) + ": [" + pname(d.v1) + ", " + pname(d.v2) + ", " + pname(d.h1) + ", " +
           pname(d.h2) + "]";
  }
  static std::string fmt_key(const ast_key_entry& e) {
    std::string s = "[";
    for (size_t k = 0; k < e.key.size(); ++k) {
      if (k) s += ", ";
      s += pname(e.key[k]);
    }
    return s + "] => " + pname(e.value);
  }
  static std::string fmt_elem(const ast_elem_decl& d) {
    return pname(d.name) + ": " + pname(d.d) + " * " + pname(d.c);
  }
  static std::string fmt_act(const ast_act_entry& e) {
    return pname(e.arrow) + "(" + pname(e.elem) + ") = " + pname(e.result);
  }
  static std::string fmt_instance(const ast_probe_instance& p) {
    std::string s = "\"";
    for (char c : p.law.text) {
      if (c == '"' || c == '\\') s += '\\';
      s += c;
    }
    s += "\" [";
    for (size_t k = 0; k < p.witness.size(); ++k) {
      if (k) s += ", ";
      s += std::to_string(p.witness[k]);
    }
    return s + "]";
  }

  void operator()(const ast_category& b) {
    out << "category " << pname(b.name) << " {\n";
    section("objects", b.objects, fmt_name);
    section("arrows", b.arrows, fmt_arrow);
    section("compose", b.compose, fmt_dot);
    out << "}\n";
  }

  void operator()(const ast_functor& b) {
    out << "functor " << pname(b.name) << ": " << pname(b.src) << " -> " << pname(b.tgt) << " {\n";
    section("objects", b.objects, fmt_map);
    section("arrows", b.arrows, fmt_map);
    out << "}\n";
  }

  void operator()(const ast_profunctor& b) {
    out << "profunctor " << pname(b.name) << ": " << pname(b.src) << " -|> " << pname(b.tgt)
        << " {\n";
    section("elements", b.elements, fmt_elem);
    section("left", b.left, fmt_act);
    section("right", b.right, fmt_act);
    out << "}\n";
  }

  void operator()(const ast_bicat& b) {
    out << "bicat " << pname(b.name) << " {\n";
    if (b.discrete_form) single("discrete", b.discrete_of);
    single("object", b.object);
    section("cells1", b.cells1, fmt_name);
    section("identity1", b.identity1, fmt_map);
    section("compose1", b.compose1, fmt_star);
    section("cells2", b.cells2, fmt_cell2);
    section("vcompose", b.vcompose, fmt_dot);
    section("hcompose", b.hcompose, fmt_star);
    section("lunitor", b.lunitor, fmt_map);
    section("runitor", b.runitor, fmt_map);
    section("associator", b.associator, fmt_key);
    out << "}\n";
  }

  void operator()(const ast_doublecat& b) {
    out << "doublecat " << pname(b.name) << " {\n";
    single("vertical", b.vertical);
    section("horizontals", b.horizontals, fmt_arrow);
    section("horid", b.horid, fmt_map);
    section("hcompose", b.hcompose, fmt_star);
    section("squares", b.squares, fmt_square);
    section("sqvid", b.sqvid, fmt_map);
    section("sqhid", b.sqhid, fmt_map);
    section("vstack", b.vstack, fmt_dot);
    section("hpaste", b.hpaste, fmt_star);
    section("lunitor", b.lunitor, fmt_map);
    section("runitor", b.runitor, fmt_map);
    section("associator", b.associator, fmt_key);
    if (b.probe_mode) out << "  mode: probe;\n";
    if (b.object_indexed) out << "  carrier: indexed;\n";
    out << "}\n";
  }

  void operator()(const ast_verity& b) {
    out << "verity " << pname(b.name) << " {\n";
    single(b.square_form ? "square" : "bridge", b.of);
    out << "}\n";
  }

  void operator()(const ast_probes& b) {
    out << "probes " << pname(b.name) << " {\n";
    single("target", b.target);
    section("instance", b.instances, fmt_instance);
    out << "}\n";
  }
};

}  // namespace

std::string print_block(const ast_block& b) {
  printer pr;
  std::visit([&pr](const auto& blk) { pr(blk); }, b);
  return pr.out.str();
}

std::string print_presentation(const presentation& p) {
  std::string out;
  for (size_t k = 0; k < p.blocks.size(); ++k) {
    if (k) out += "\n";
    out += print_block(p.blocks[k]);
  }
  return out;
}

}  // namespace dsl
}  // namespace dblkit
