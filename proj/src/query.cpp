#include "neutro/query.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "neutro/error.hpp"

namespace neutro {

ExprPtr make_ref(std::string name) {
  return std::make_shared<QueryExpr>(QueryExpr{RefNode{std::move(name)}});
}
ExprPtr make_union(ExprPtr l, ExprPtr r) {
  return std::make_shared<QueryExpr>(QueryExpr{UnionNode{std::move(l), std::move(r)}});
}
ExprPtr make_intersect(ExprPtr l, ExprPtr r) {
  return std::make_shared<QueryExpr>(QueryExpr{IntersectNode{std::move(l), std::move(r)}});
}
ExprPtr make_minus(ExprPtr l, ExprPtr r) {
  return std::make_shared<QueryExpr>(QueryExpr{MinusNode{std::move(l), std::move(r)}});
}
ExprPtr make_join(ExprPtr l, ExprPtr r) {
  return std::make_shared<QueryExpr>(QueryExpr{JoinNode{std::move(l), std::move(r)}});
}
ExprPtr make_complement(ExprPtr e) {
  return std::make_shared<QueryExpr>(QueryExpr{ComplementNode{std::move(e)}});
}
ExprPtr make_project(std::vector<std::string> attrs, ExprPtr e) {
  return std::make_shared<QueryExpr>(QueryExpr{ProjectNode{std::move(attrs), std::move(e)}});
}
ExprPtr make_select(FormulaPtr f, ExprPtr e) {
  return std::make_shared<QueryExpr>(QueryExpr{SelectNode{std::move(f), std::move(e)}});
}
ExprPtr make_split(ExprPtr e) {
  return std::make_shared<QueryExpr>(QueryExpr{SplitNode{std::move(e)}});
}
ExprPtr make_combine(ExprPtr e) {
  return std::make_shared<QueryExpr>(QueryExpr{CombineNode{std::move(e)}});
}

bool query_equal(const QueryExpr& a, const QueryExpr& b) {
  if (a.node.index() != b.node.index()) return false;
  if (const auto* x = std::get_if<RefNode>(&a.node))
    return x->name == std::get<RefNode>(b.node).name;
  if (const auto* x = std::get_if<UnionNode>(&a.node)) {
    const auto& y = std::get<UnionNode>(b.node);
    return query_equal(*x->left, *y.left) && query_equal(*x->right, *y.right);
  }
  if (const auto* x = std::get_if<IntersectNode>(&a.node)) {
    const auto& y = std::get<IntersectNode>(b.node);
    return query_equal(*x->left, *y.left) && query_equal(*x->right, *y.right);
  }
  if (const auto* x = std::get_if<MinusNode>(&a.node)) {
    const auto& y = std::get<MinusNode>(b.node);
    return query_equal(*x->left, *y.left) && query_equal(*x->right, *y.right);
  }
  if (const auto* x = std::get_if<JoinNode>(&a.node)) {
    const auto& y = std::get<JoinNode>(b.node);
    return query_equal(*x->left, *y.left) && query_equal(*x->right, *y.right);
  }
  if (const auto* x = std::get_if<ComplementNode>(&a.node))
    return query_equal(*x->inner, *std::get<ComplementNode>(b.node).inner);
  if (const auto* x = std::get_if<ProjectNode>(&a.node)) {
    const auto& y = std::get<ProjectNode>(b.node);
    return x->attrs == y.attrs && query_equal(*x->inner, *y.inner);
  }
  if (const auto* x = std::get_if<SelectNode>(&a.node)) {
    const auto& y = std::get<SelectNode>(b.node);
    return formula_equal(*x->formula, *y.formula) && query_equal(*x->inner, *y.inner);
  }
  if (const auto* x = std::get_if<SplitNode>(&a.node))
    return query_equal(*x->inner, *std::get<SplitNode>(b.node).inner);
  const auto& x = std::get<CombineNode>(a.node);
  return query_equal(*x.inner, *std::get<CombineNode>(b.node).inner);
}

// ---------------------------------------------------------------------------
// Lexer

namespace {

enum class TokenType { Ident, Keyword, Literal, LParen, RParen, LBracket, RBracket, Comma, Equals, End };

struct Token {
  TokenType type;
  std::string text;
  int line = 1;
  int column = 1;
};

const std::set<std::string_view> kKeywords = {"UNION", "INTERSECT", "MINUS", "JOIN",   "NOT",
                                              "PROJECT", "SELECT",  "SPLIT", "COMBINE", "AND",
                                              "OR"};

bool ident_start(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}
bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-';
}

std::vector<Token> lex(std::string_view text) {
  std::vector<Token> tokens;
  int line = 1;
  int column = 1;
  std::size_t i = 0;
  const auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k, ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
  };
  while (i < text.size()) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    const int tl = line;
    const int tc = column;
    if (ident_start(c)) {
      std::size_t j = i;
      while (j < text.size() && ident_char(text[j])) ++j;
      std::string word(text.substr(i, j - i));
      advance(j - i);
      tokens.push_back({kKeywords.count(word) ? TokenType::Keyword : TokenType::Ident,
                        std::move(word), tl, tc});
      continue;
    }
    if (c == '\'') {
      std::size_t j = i + 1;
      while (j < text.size() && text[j] != '\'' && text[j] != '\n') ++j;
      if (j >= text.size() || text[j] != '\'')
        throw QuerySyntaxError(tl, tc, "unterminated string literal", {"'"});
      std::string value(text.substr(i + 1, j - i - 1));
      advance(j - i + 1);
      tokens.push_back({TokenType::Literal, std::move(value), tl, tc});
      continue;
    }
    TokenType type;
    switch (c) {
      case '(': type = TokenType::LParen; break;
      case ')': type = TokenType::RParen; break;
      case '[': type = TokenType::LBracket; break;
      case ']': type = TokenType::RBracket; break;
      case ',': type = TokenType::Comma; break;
      case '=': type = TokenType::Equals; break;
      default:
        throw QuerySyntaxError(tl, tc, std::string("unexpected character '") + c + "'", {});
    }
    tokens.push_back({type, std::string(1, c), tl, tc});
    advance(1);
  }
  tokens.push_back({TokenType::End, "", line, column});
  return tokens;
}

// ---------------------------------------------------------------------------
// Parser (recursive descent, mirroring the grammar in query.hpp)

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  ExprPtr parse() {
    ExprPtr e = parse_union();
    expect(TokenType::End, "end of query");
    return e;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  const Token& take() { return tokens_[pos_++]; }

  bool at_keyword(std::string_view kw) const {
    return peek().type == TokenType::Keyword && peek().text == kw;
  }

  [[noreturn]] void unexpected(const std::vector<std::string>& expected) const {
    const Token& t = peek();
    const std::string found =
        t.type == TokenType::End ? "end of query" : "'" + t.text + "'";
    std::string msg = "unexpected " + found;
    if (!expected.empty()) {
      msg += ", expected ";
      for (std::size_t i = 0; i < expected.size(); ++i) {
        if (i) msg += i + 1 == expected.size() ? " or " : ", ";
        msg += expected[i];
      }
    }
    throw QuerySyntaxError(t.line, t.column, msg, expected);
  }

  Token expect(TokenType type, const std::string& what) {
    if (peek().type != type) unexpected({what});
    return take();
  }

  Token expect_keyword(std::string_view kw) {
    if (!at_keyword(kw)) unexpected({std::string(kw)});
    return take();
  }

  ExprPtr parse_union() {
    ExprPtr e = parse_intersect();
    while (at_keyword("UNION")) {
      take();
      e = make_union(std::move(e), parse_intersect());
    }
    return e;
  }

  ExprPtr parse_intersect() {
    ExprPtr e = parse_join();
    for (;;) {
      if (at_keyword("INTERSECT")) {
        take();
        e = make_intersect(std::move(e), parse_join());
      } else if (at_keyword("MINUS")) {
        take();
        e = make_minus(std::move(e), parse_join());
      } else {
        return e;
      }
    }
  }

  ExprPtr parse_join() {
    ExprPtr e = parse_unary();
    while (at_keyword("JOIN")) {
      take();
      e = make_join(std::move(e), parse_unary());
    }
    return e;
  }

  ExprPtr parse_unary() {
    if (at_keyword("NOT")) {
      take();
      return make_complement(parse_unary());
    }
    if (at_keyword("PROJECT")) {
      take();
      expect(TokenType::LBracket, "'['");
      std::vector<std::string> attrs;
      std::set<std::string> seen;
      for (;;) {
        Token ident = expect(TokenType::Ident, "attribute name");
        if (!seen.insert(ident.text).second)
          throw QuerySyntaxError(ident.line, ident.column,
                                 "duplicate attribute '" + ident.text + "' in projection", {});
        attrs.push_back(std::move(ident.text));
        if (peek().type != TokenType::Comma) break;
        take();
      }
      expect(TokenType::RBracket, "']'");
      expect(TokenType::LParen, "'('");
      ExprPtr inner = parse_union();
      expect(TokenType::RParen, "')'");
      return make_project(std::move(attrs), std::move(inner));
    }
    if (at_keyword("SELECT")) {
      take();
      expect(TokenType::LBracket, "'['");
      FormulaPtr f = parse_formula();
      expect(TokenType::RBracket, "']'");
      expect(TokenType::LParen, "'('");
      ExprPtr inner = parse_union();
      expect(TokenType::RParen, "')'");
      return make_select(std::move(f), std::move(inner));
    }
    if (at_keyword("SPLIT") || at_keyword("COMBINE")) {
      const bool is_split = peek().text == "SPLIT";
      take();
      expect(TokenType::LParen, "'('");
      ExprPtr inner = parse_union();
      expect(TokenType::RParen, "')'");
      return is_split ? make_split(std::move(inner)) : make_combine(std::move(inner));
    }
    if (peek().type == TokenType::Ident) return make_ref(take().text);
    if (peek().type == TokenType::LParen) {
      take();
      ExprPtr inner = parse_union();
      expect(TokenType::RParen, "')'");
      return inner;
    }
    unexpected({"relation name", "NOT", "PROJECT", "SELECT", "SPLIT", "COMBINE", "'('"});
  }

  FormulaPtr parse_formula() {
    FormulaPtr f = parse_conj();
    while (at_keyword("OR")) {
      take();
      f = make_or(std::move(f), parse_conj());
    }
    return f;
  }

  FormulaPtr parse_conj() {
    FormulaPtr f = parse_atom();
    while (at_keyword("AND")) {
      take();
      f = make_and(std::move(f), parse_atom());
    }
    return f;
  }

  FormulaPtr parse_atom() {
    if (at_keyword("NOT")) {
      take();
      return make_not(parse_atom());
    }
    if (peek().type == TokenType::LParen) {
      take();
      FormulaPtr f = parse_formula();
      expect(TokenType::RParen, "')'");
      return f;
    }
    Token attr = expect(TokenType::Ident, "attribute name");
    expect(TokenType::Equals, "'='");
    if (peek().type == TokenType::Literal) return make_eq_const(attr.text, take().text);
    if (peek().type == TokenType::Ident) return make_eq_attr(attr.text, take().text);
    unexpected({"attribute name", "quoted constant"});
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

}  // namespace

ExprPtr parse_query(std::string_view text) { return Parser(lex(text)).parse(); }

// ---------------------------------------------------------------------------
// Printer

namespace {

// Precedence: UNION = 1, INTERSECT/MINUS = 2, JOIN = 3, unary and atoms = 4.
int expr_prec(const QueryExpr& e) {
  if (std::holds_alternative<UnionNode>(e.node)) return 1;
  if (std::holds_alternative<IntersectNode>(e.node)) return 2;
  if (std::holds_alternative<MinusNode>(e.node)) return 2;
  if (std::holds_alternative<JoinNode>(e.node)) return 3;
  return 4;
}

void format_into(const QueryExpr& e, std::string& out);

void format_child(const QueryExpr& child, int parent_prec, bool is_right, std::string& out) {
  const int prec = expr_prec(child);
  const bool parens = prec < parent_prec || (is_right && prec == parent_prec);
  if (parens) out.push_back('(');
  format_into(child, out);
  if (parens) out.push_back(')');
}

void format_binary(const QueryExpr& l, const char* op, const QueryExpr& r, int prec,
                   std::string& out) {
  format_child(l, prec, false, out);
  out.push_back(' ');
  out += op;
  out.push_back(' ');
  format_child(r, prec, true, out);
}

void format_into(const QueryExpr& e, std::string& out) {
  if (const auto* n = std::get_if<RefNode>(&e.node)) {
    out += n->name;
  } else if (const auto* n = std::get_if<UnionNode>(&e.node)) {
    format_binary(*n->left, "UNION", *n->right, 1, out);
  } else if (const auto* n = std::get_if<IntersectNode>(&e.node)) {
    format_binary(*n->left, "INTERSECT", *n->right, 2, out);
  } else if (const auto* n = std::get_if<MinusNode>(&e.node)) {
    format_binary(*n->left, "MINUS", *n->right, 2, out);
  } else if (const auto* n = std::get_if<JoinNode>(&e.node)) {
    format_binary(*n->left, "JOIN", *n->right, 3, out);
  } else if (const auto* n = std::get_if<ComplementNode>(&e.node)) {
    out += "NOT ";
    format_child(*n->inner, 4, false, out);
  } else if (const auto* n = std::get_if<ProjectNode>(&e.node)) {
    out += "PROJECT[";
    for (std::size_t i = 0; i < n->attrs.size(); ++i) {
      if (i) out.push_back(',');
      out += n->attrs[i];
    }
    out += "](";
    format_into(*n->inner, out);
    out.push_back(')');
  } else if (const auto* n = std::get_if<SelectNode>(&e.node)) {
    out += "SELECT[";
    out += format_formula(*n->formula);
    out += "](";
    format_into(*n->inner, out);
    out.push_back(')');
  } else if (const auto* n = std::get_if<SplitNode>(&e.node)) {
    out += "SPLIT(";
    format_into(*n->inner, out);
    out.push_back(')');
  } else {
    const auto& n = std::get<CombineNode>(e.node);
    out += "COMBINE(";
    format_into(*n.inner, out);
    out.push_back(')');
  }
}

}  // namespace

std::string format_query(const QueryExpr& e) {
  std::string out;
  format_into(e, out);
  return out;
}

// ---------------------------------------------------------------------------
// Scheme inference and evaluation

namespace {

const NeutrosophicRelation& catalog_get(const Catalog& catalog, const std::string& name) {
  const auto it = catalog.find(name);
  if (it == catalog.end())
    fail(ErrorKind::UnknownRelation, "no relation named '" + name + "' in the catalog");
  return it->second;
}

Scheme require_equal_schemes(const Scheme& l, const Scheme& r, const char* op) {
  if (!(l == r))
    fail(ErrorKind::SchemeMismatch, std::string(op) + " operands have different schemes: " +
                                        l.str() + " vs " + r.str());
  return l;
}

}  // namespace

Scheme infer_scheme(const QueryExpr& e, const Catalog& catalog) {
  if (const auto* n = std::get_if<RefNode>(&e.node)) {
    return catalog_get(catalog, n->name).scheme();
  }
  if (const auto* n = std::get_if<UnionNode>(&e.node)) {
    return require_equal_schemes(infer_scheme(*n->left, catalog),
                                 infer_scheme(*n->right, catalog), "UNION");
  }
  if (const auto* n = std::get_if<IntersectNode>(&e.node)) {
    return require_equal_schemes(infer_scheme(*n->left, catalog),
                                 infer_scheme(*n->right, catalog), "INTERSECT");
  }
  if (const auto* n = std::get_if<MinusNode>(&e.node)) {
    return require_equal_schemes(infer_scheme(*n->left, catalog),
                                 infer_scheme(*n->right, catalog), "MINUS");
  }
  if (const auto* n = std::get_if<JoinNode>(&e.node)) {
    return union_scheme(infer_scheme(*n->left, catalog), infer_scheme(*n->right, catalog));
  }
  if (const auto* n = std::get_if<ComplementNode>(&e.node)) {
    return infer_scheme(*n->inner, catalog);
  }
  if (const auto* n = std::get_if<ProjectNode>(&e.node)) {
    const Scheme inner = infer_scheme(*n->inner, catalog);
    std::vector<Attribute> attrs;
    for (const auto& name : n->attrs) {
      const auto pos = inner.position_of(name);
      if (!pos)
        fail(ErrorKind::ProjectionNotSubset,
             "attribute '" + name + "' is not part of scheme " + inner.str());
      attrs.push_back(inner.attribute(*pos));
    }
    return Scheme(std::move(attrs));
  }
  if (const auto* n = std::get_if<SelectNode>(&e.node)) {
    const Scheme inner = infer_scheme(*n->inner, catalog);
    validate_formula(*n->formula, inner);
    return inner;
  }
  if (const auto* n = std::get_if<SplitNode>(&e.node)) {
    return infer_scheme(*n->inner, catalog);
  }
  return infer_scheme(*std::get<CombineNode>(e.node).inner, catalog);
}

NeutrosophicRelation evaluate(const QueryExpr& e, const Catalog& catalog,
                              const EvalOptions& options) {
  const bool robust = options.mode == EvalMode::robust;
  if (const auto* n = std::get_if<RefNode>(&e.node)) {
    return catalog_get(catalog, n->name);
  }
  if (const auto* n = std::get_if<UnionNode>(&e.node)) {
    const auto l = evaluate(*n->left, catalog, options);
    const auto r = evaluate(*n->right, catalog, options);
    return robust ? robust_union(l, r) : union_of(l, r);
  }
  if (const auto* n = std::get_if<IntersectNode>(&e.node)) {
    const auto l = evaluate(*n->left, catalog, options);
    const auto r = evaluate(*n->right, catalog, options);
    return robust ? robust_intersection(l, r) : intersection_of(l, r);
  }
  if (const auto* n = std::get_if<MinusNode>(&e.node)) {
    const auto l = evaluate(*n->left, catalog, options);
    const auto r = evaluate(*n->right, catalog, options);
    return robust ? robust_difference(l, r) : difference_of(l, r);
  }
  if (const auto* n = std::get_if<JoinNode>(&e.node)) {
    const auto l = evaluate(*n->left, catalog, options);
    const auto r = evaluate(*n->right, catalog, options);
    return robust ? robust_join(l, r) : join_of(l, r);
  }
  if (const auto* n = std::get_if<ComplementNode>(&e.node)) {
    const auto inner = evaluate(*n->inner, catalog, options);
    return robust ? robust_complement(inner) : complement_of(inner);
  }
  if (const auto* n = std::get_if<ProjectNode>(&e.node)) {
    const auto inner = evaluate(*n->inner, catalog, options);
    return robust ? robust_project(inner, n->attrs) : project_onto(inner, n->attrs);
  }
  if (const auto* n = std::get_if<SelectNode>(&e.node)) {
    const auto inner = evaluate(*n->inner, catalog, options);
    return robust ? robust_select(inner, *n->formula, options.materialize_cap)
                  : select_where(inner, *n->formula, options.materialize_cap);
  }
  if (const auto* n = std::get_if<SplitNode>(&e.node)) {
    return split(evaluate(*n->inner, catalog, options));
  }
  return combine(evaluate(*std::get<CombineNode>(e.node).inner, catalog, options));
}

}  // namespace neutro
