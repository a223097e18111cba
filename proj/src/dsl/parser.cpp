#include "redpow/dsl/parser.hpp"

#include <map>
#include <set>

namespace redpow::dsl {

namespace {

enum class Kind { Index, Filter, Elem, Algebra, Hom, Grid };

const char* kind_name(Kind k) {
  switch (k) {
  case Kind::Index: return "index set";
  case Kind::Filter: return "filter";
  case Kind::Elem: return "element";
  case Kind::Algebra: return "algebra";
  case Kind::Hom: return "hom";
  case Kind::Grid: return "grid";
  }
  return "?";
}

const std::set<std::string, std::less<>> kReserved = {
    "index", "filter",    "elem",  "algebra",      "hom",         "grid",     "query",
    "on",    "frechet",   "nat",   "AP",           "l",           "id",       "const",
    "ind",   "piecewise", "except", "at",          "samples",     "eval",     "eq",
    "leq",   "zerodivisors", "archimedean", "commutes", "oracle"};

constexpr unsigned kMaxExponent = 64;

std::string join_expected(const std::vector<std::string>& items) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i > 0)
      out += i + 1 == items.size() ? " or " : ", ";
    out += items[i];
  }
  return out;
}

class Parser {
public:
  explicit Parser(std::vector<Token> tokens) : toks_(std::move(tokens)) {}

  Program program() {
    Program p;
    skip_newlines();
    while (!at(Tok::End)) {
      p.statements.push_back(statement());
      if (!at(Tok::End))
        expect(Tok::Newline);
      skip_newlines();
    }
    return p;
  }

private:
  // ---- token helpers ----

  const Token& peek(std::size_t ahead = 0) const {
    return toks_[std::min(pos_ + ahead, toks_.size() - 1)];
  }
  bool at(Tok k) const { return peek().kind == k; }
  bool at_keyword(std::string_view kw) const { return at(Tok::Ident) && peek().text == kw; }
  const Token& advance() { return toks_[pos_ < toks_.size() - 1 ? pos_++ : pos_]; }

  void skip_newlines() {
    while (at(Tok::Newline))
      advance();
  }

  [[noreturn]] void fail(std::vector<std::string> expected) const {
    const Token& t = peek();
    throw ParseError(ErrorCode::SyntaxError, t.loc,
                     "expected " + join_expected(expected) + ", found " + describe(t),
                     std::move(expected));
  }

  const Token& expect(Tok k) {
    if (!at(k))
      fail({describe(k)});
    return advance();
  }

  void expect_keyword(std::string_view kw) {
    if (!at_keyword(kw))
      fail({"'" + std::string(kw) + "'"});
    advance();
  }

  bool accept(Tok k) {
    if (!at(k))
      return false;
    advance();
    return true;
  }

  bool accept_keyword(std::string_view kw) {
    if (!at_keyword(kw))
      return false;
    advance();
    return true;
  }

  Index integer() {
    const Token& t = expect(Tok::Int);
    return std::stoull(t.text);
  }

  // Signed rational literal: ['-'] INT ['/' INT].
  Rational signed_rational() {
    const bool negative = accept(Tok::Minus);
    const Token& num = expect(Tok::Int);
    Rational q(mpz_class(num.text));
    if (accept(Tok::Slash)) {
      const Token& den = peek();
      const Index d = integer();
      if (d == 0)
        throw ParseError(ErrorCode::TypeError, den.loc, "division by zero");
      q /= Rational(mpz_class(den.text));
    }
    return negative ? Rational(-q) : q;
  }

  // ---- names ----

  std::string fresh_name() {
    const Token& t = peek();
    if (!at(Tok::Ident))
      fail({"name"});
    if (kReserved.count(t.text))
      throw ParseError(ErrorCode::SyntaxError, t.loc,
                       "expected name, found keyword '" + t.text + "'", {"name"});
    return advance().text;
  }

  void declare(const std::string& name, Kind kind, SourceLoc loc) {
    auto& table = names_[kind];
    if (table.count(name))
      throw ParseError(ErrorCode::NameError, loc,
                       std::string(kind_name(kind)) + " '" + name + "' is already declared");
    table.insert(name);
  }

  // Reads a name and checks it refers to a declaration of `kind`.
  std::string reference(Kind kind) {
    const Token& t = peek();
    const std::string name = fresh_name();
    if (names_[kind].count(name))
      return name;
    for (const auto& [other, table] : names_) {
      if (table.count(name))
        throw ParseError(ErrorCode::TypeError, t.loc,
                         "'" + name + "' is " + (other == Kind::Index || other == Kind::Elem ? "an " : "a ") +
                             kind_name(other) + ", expected " +
                             (kind == Kind::Index || kind == Kind::Elem ? "an " : "a ") + kind_name(kind));
    }
    throw ParseError(ErrorCode::NameError, t.loc,
                     std::string("undefined ") + kind_name(kind) + " '" + name + "'");
  }

  // ---- statements ----

  Statement statement() {
    if (at_keyword("index"))
      return index_decl();
    if (at_keyword("filter"))
      return filter_decl();
    if (at_keyword("elem"))
      return elem_decl();
    if (at_keyword("algebra"))
      return algebra_decl();
    if (at_keyword("hom"))
      return hom_decl();
    if (at_keyword("grid"))
      return grid_decl();
    if (at_keyword("query"))
      return query();
    fail({"'index'", "'filter'", "'elem'", "'algebra'", "'hom'", "'grid'", "'query'"});
  }

  IndexDecl index_decl() {
    advance();
    const SourceLoc loc = peek().loc;
    IndexDecl d;
    d.name = fresh_name();
    expect(Tok::Equals);
    d.set = set_expr();
    declare(d.name, Kind::Index, loc);
    return d;
  }

  FilterDecl filter_decl() {
    advance();
    FilterDecl d;
    d.loc = peek().loc;
    d.name = fresh_name();
    const bool has_on = accept_keyword("on");
    if (has_on)
      d.carrier = reference(Kind::Index);
    expect(Tok::Equals);
    expect_keyword("frechet");
    if (!has_on) {
      expect(Tok::LParen);
      d.carrier = reference(Kind::Index);
      expect(Tok::RParen);
      d.carrier_in_frechet = true;
    }
    if (accept(Tok::Plus)) {
      expect(Tok::LBracket);
      if (!at(Tok::RBracket)) {
        d.generators.push_back(set_expr());
        while (accept(Tok::Comma))
          d.generators.push_back(set_expr());
      }
      if (!at(Tok::RBracket))
        fail({"','", "']'"});
      advance();
    }
    declare(d.name, Kind::Filter, d.loc);
    return d;
  }

  ElemDecl elem_decl() {
    advance();
    const SourceLoc loc = peek().loc;
    ElemDecl d;
    d.name = fresh_name();
    expect_keyword("on");
    d.carrier = reference(Kind::Index);
    expect(Tok::Equals);
    d.value = elem_expr();
    declare(d.name, Kind::Elem, loc);
    return d;
  }

  AlgebraDecl algebra_decl() {
    advance();
    AlgebraDecl d;
    d.loc = peek().loc;
    d.name = fresh_name();
    expect(Tok::Equals);
    d.filter = reference(Kind::Filter);
    declare(d.name, Kind::Algebra, d.loc);
    return d;
  }

  HomDecl hom_decl() {
    advance();
    HomDecl d;
    d.loc = peek().loc;
    d.name = fresh_name();
    expect(Tok::Colon);
    d.source = reference(Kind::Algebra);
    expect(Tok::Arrow);
    d.target = reference(Kind::Algebra);
    declare(d.name, Kind::Hom, d.loc);
    return d;
  }

  GridDecl grid_decl() {
    GridDecl d;
    d.loc = advance().loc;
    if (!at(Tok::LBrace)) {
      if (!at(Tok::Ident))
        fail({"name", "'{'"});
      d.loc = peek().loc;
      d.name = fresh_name();
    }
    expect(Tok::LBrace);
    auto separators = [&] {
      while (at(Tok::Newline) || at(Tok::Semicolon))
        advance();
    };
    separators();
    while (!at(Tok::RBrace)) {
      if (!at(Tok::Ident))
        fail({"name", "'}'"});
      const SourceLoc row_loc = peek().loc;
      std::vector<std::string> row{reference(Kind::Algebra)};
      while (accept(Tok::Arrow))
        row.push_back(reference(Kind::Algebra));
      if (!d.rows.empty() && row.size() != d.rows.front().size())
        throw ParseError(ErrorCode::TypeError, row_loc,
                         "grid row has " + std::to_string(row.size()) + " cells, expected " +
                             std::to_string(d.rows.front().size()));
      d.rows.push_back(std::move(row));
      if (!at(Tok::Newline) && !at(Tok::Semicolon) && !at(Tok::RBrace))
        fail({"'->'", "';'", "end of line", "'}'"});
      separators();
    }
    advance();
    if (d.name)
      declare(*d.name, Kind::Grid, d.loc);
    return d;
  }

  Query query() {
    advance();
    Query q;
    q.loc = peek().loc;
    if (accept_keyword("eval")) {
      q.kind = QueryKind::Eval;
      q.operands.push_back(elem_expr());
      if (accept_keyword("at"))
        q.at = integer();
    } else if (at_keyword("eq") || at_keyword("leq")) {
      q.kind = at_keyword("eq") ? QueryKind::Eq : QueryKind::Leq;
      advance();
      q.operands.push_back(elem_expr());
      accept(Tok::Comma);
      q.operands.push_back(elem_expr());
    } else if (accept_keyword("zerodivisors")) {
      q.kind = QueryKind::ZeroDivisors;
    } else if (accept_keyword("archimedean")) {
      q.kind = QueryKind::Archimedean;
      q.operands.push_back(elem_expr());
    } else if (accept_keyword("commutes")) {
      q.kind = QueryKind::Commutes;
      if (at(Tok::Ident) && !at_keyword("samples"))
        q.grid = reference(Kind::Grid);
      if (accept_keyword("samples")) {
        const Token& t = peek();
        q.samples = integer();
        if (*q.samples == 0)
          throw ParseError(ErrorCode::TypeError, t.loc, "sample count must be positive");
      }
    } else if (accept_keyword("oracle")) {
      q.kind = QueryKind::Oracle;
      const Token& t = peek();
      const Index n = integer();
      if (n > 1000)
        throw ParseError(ErrorCode::TypeError, t.loc, "oracle size out of range");
      q.oracle_n = static_cast<unsigned>(n);
    } else {
      fail({"'eval'", "'eq'", "'leq'", "'zerodivisors'", "'archimedean'", "'commutes'",
            "'oracle'"});
    }
    return q;
  }

  // ---- set expressions ----
  // set   := term { ('|' | '\') term }
  // term  := unary { '&' unary }
  // unary := '!' unary | atom

  SetExpr set_expr() {
    SetExpr lhs = set_term();
    while (at(Tok::Pipe) || at(Tok::Backslash)) {
      const Token& op = advance();
      SetExpr rhs = set_term();
      const SourceLoc loc = lhs.loc;
      lhs = SetExpr{SetBinary{op.kind == Tok::Pipe ? SetOp::Or : SetOp::Minus, std::move(lhs),
                              std::move(rhs)},
                    loc};
    }
    return lhs;
  }

  SetExpr set_term() {
    SetExpr lhs = set_unary();
    while (accept(Tok::Amp)) {
      SetExpr rhs = set_unary();
      const SourceLoc loc = lhs.loc;
      lhs = SetExpr{SetBinary{SetOp::And, std::move(lhs), std::move(rhs)}, loc};
    }
    return lhs;
  }

  SetExpr set_unary() {
    const SourceLoc loc = peek().loc;
    if (accept(Tok::Bang))
      return SetExpr{SetNot{set_unary()}, loc};
    return set_atom();
  }

  SetExpr set_atom() {
    const SourceLoc loc = peek().loc;
    if (accept_keyword("nat"))
      return SetExpr{SetNat{}, loc};
    if (accept_keyword("AP")) {
      expect(Tok::LParen);
      const Index r = integer();
      expect(Tok::Comma);
      const Token& pt = peek();
      const Index p = integer();
      if (p == 0)
        throw ParseError(ErrorCode::TypeError, pt.loc, "period must be positive");
      expect(Tok::RParen);
      return SetExpr{SetAP{r, p}, loc};
    }
    if (accept(Tok::LBrace)) {
      SetFinite f;
      if (!at(Tok::RBrace)) {
        f.ranges.push_back(range_item());
        while (accept(Tok::Comma))
          f.ranges.push_back(range_item());
      }
      if (!at(Tok::RBrace))
        fail({"','", "'..'", "'}'"});
      advance();
      return SetExpr{std::move(f), loc};
    }
    if (accept(Tok::LParen)) {
      SetExpr inner = set_expr();
      expect(Tok::RParen);
      return inner;
    }
    if (at(Tok::Ident) && !kReserved.count(peek().text))
      return SetExpr{SetRef{reference(Kind::Index)}, loc};
    fail({"'AP'", "'{'", "'nat'", "'!'", "'('", "name"});
  }

  std::pair<Index, Index> range_item() {
    const Index lo = integer();
    if (!at(Tok::DotDot))
      return {lo, lo};
    advance();
    const Token& t = peek();
    const Index hi = integer();
    if (hi < lo)
      throw ParseError(ErrorCode::TypeError, t.loc, "range end is below its start");
    if (hi - lo > 1'000'000)
      throw ParseError(ErrorCode::TypeError, t.loc, "range too long");
    return {lo, hi};
  }

  // ---- element expressions ----
  // elem    := sum [ 'except' '{' [ INT ':' q { ',' INT ':' q } ] '}' ]
  // sum     := product { ('+' | '-') product }
  // product := unary { ('*' | '/' INT) unary }
  // unary   := '-' unary | power
  // power   := atom [ '^' INT ]

  ElemExpr elem_expr() {
    ElemExpr base = elem_sum();
    if (!at_keyword("except"))
      return base;
    advance();
    ElemExcept ex{std::move(base), {}};
    const SourceLoc loc = ex.base->loc;
    expect(Tok::LBrace);
    if (!at(Tok::RBrace)) {
      do {
        const Index k = integer();
        expect(Tok::Colon);
        ex.values.emplace_back(k, signed_rational());
      } while (accept(Tok::Comma));
    }
    if (!at(Tok::RBrace))
      fail({"','", "'}'"});
    advance();
    return ElemExpr{std::move(ex), loc};
  }

  ElemExpr elem_sum() {
    ElemExpr lhs = elem_product();
    while (at(Tok::Plus) || at(Tok::Minus)) {
      const ElemOp op = advance().kind == Tok::Plus ? ElemOp::Add : ElemOp::Sub;
      ElemExpr rhs = elem_product();
      const SourceLoc loc = lhs.loc;
      lhs = ElemExpr{ElemBinary{op, std::move(lhs), std::move(rhs)}, loc};
    }
    return lhs;
  }

  ElemExpr elem_product() {
    ElemExpr lhs = elem_unary();
    while (at(Tok::Star) || at(Tok::Slash)) {
      const ElemOp op = advance().kind == Tok::Star ? ElemOp::Mul : ElemOp::Div;
      ElemExpr rhs = elem_unary();
      if (op == ElemOp::Div) {
        const auto* num = std::get_if<ElemNumber>(&rhs.node);
        if (!num || num->is_const)
          throw ParseError(ErrorCode::TypeError, rhs.loc, "divisor must be an integer literal");
        if (num->value == 0)
          throw ParseError(ErrorCode::TypeError, rhs.loc, "division by zero");
      }
      const SourceLoc loc = lhs.loc;
      lhs = ElemExpr{ElemBinary{op, std::move(lhs), std::move(rhs)}, loc};
    }
    return lhs;
  }

  ElemExpr elem_unary() {
    const SourceLoc loc = peek().loc;
    if (accept(Tok::Minus))
      return ElemExpr{ElemNeg{elem_unary()}, loc};
    return elem_power();
  }

  ElemExpr elem_power() {
    ElemExpr base = elem_atom();
    if (!accept(Tok::Caret))
      return base;
    const Token& t = peek();
    const Index e = integer();
    if (e > kMaxExponent)
      throw ParseError(ErrorCode::TypeError, t.loc,
                       "exponent above " + std::to_string(kMaxExponent));
    const SourceLoc loc = base.loc;
    return ElemExpr{ElemPow{std::move(base), static_cast<unsigned>(e)}, loc};
  }

  ElemExpr elem_atom() {
    const SourceLoc loc = peek().loc;
    if (at(Tok::Int))
      return ElemExpr{ElemNumber{Rational(mpz_class(advance().text)), false}, loc};
    if (accept_keyword("l"))
      return ElemExpr{ElemIdentity{false}, loc};
    if (accept_keyword("id"))
      return ElemExpr{ElemIdentity{true}, loc};
    if (accept_keyword("const")) {
      expect(Tok::LParen);
      Rational q = signed_rational();
      expect(Tok::RParen);
      return ElemExpr{ElemNumber{std::move(q), true}, loc};
    }
    if (accept_keyword("ind")) {
      expect(Tok::LParen);
      SetExpr s = set_expr();
      expect(Tok::RParen);
      return ElemExpr{ElemIndicator{std::move(s)}, loc};
    }
    if (accept_keyword("piecewise")) {
      expect(Tok::LBracket);
      ElemPiecewise pw;
      do {
        SetExpr region = set_expr();
        expect(Tok::Colon);
        ElemExpr poly = elem_sum();
        require_polynomial(poly);
        pw.pieces.push_back(ElemPiece{std::move(region), std::move(poly)});
      } while (accept(Tok::Semicolon));
      if (!at(Tok::RBracket))
        fail({"';'", "']'"});
      advance();
      return ElemExpr{std::move(pw), loc};
    }
    if (accept(Tok::LParen)) {
      ElemExpr inner = elem_expr();
      expect(Tok::RParen);
      return inner;
    }
    if (at(Tok::Ident) && !kReserved.count(peek().text))
      return ElemExpr{ElemRef{reference(Kind::Elem)}, loc};
    fail({"integer", "'l'", "'id'", "'const'", "'ind'", "'piecewise'", "'-'", "'('", "name"});
  }

  static void require_polynomial(const ElemExpr& e) {
    std::visit(
        [&](const auto& n) {
          using T = std::decay_t<decltype(n)>;
          if constexpr (std::is_same_v<T, ElemNeg>) {
            require_polynomial(*n.operand);
          } else if constexpr (std::is_same_v<T, ElemBinary>) {
            require_polynomial(*n.lhs);
            require_polynomial(*n.rhs);
          } else if constexpr (std::is_same_v<T, ElemPow>) {
            require_polynomial(*n.base);
          } else if constexpr (!std::is_same_v<T, ElemNumber> && !std::is_same_v<T, ElemIdentity>) {
            throw ParseError(ErrorCode::TypeError, e.loc, "piecewise bodies must be polynomials in l");
          }
        },
        e.node);
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  std::map<Kind, std::set<std::string>> names_;
};

} // namespace

Program parse(std::string_view source) { return Parser(lex(source)).program(); }

} // namespace redpow::dsl
