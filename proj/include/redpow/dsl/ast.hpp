#pragma once

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "redpow/dsl/lexer.hpp"
#include "redpow/polynomial.hpp"

namespace redpow::dsl {

/// Immutable shared child node; equality is structural.
template <class T>
class Box {
public:
  Box() = default;
  Box(T value) : p_(std::make_shared<const T>(std::move(value))) {}

  const T& operator*() const { return *p_; }
  const T* operator->() const { return p_.get(); }
  explicit operator bool() const { return p_ != nullptr; }

  friend bool operator==(const Box& a, const Box& b) {
    if (!a.p_ || !b.p_)
      return !a.p_ && !b.p_;
    return *a.p_ == *b.p_;
  }

private:
  std::shared_ptr<const T> p_;
};

// ---- index set expressions -------------------------------------------------

struct SetExpr;

struct SetNat {
  friend bool operator==(const SetNat&, const SetNat&) = default;
};
struct SetAP {
  Index residue;
  Index period;
  friend bool operator==(const SetAP&, const SetAP&) = default;
};
/// `{1, 3, 5..9}`; ranges are inclusive.
struct SetFinite {
  std::vector<std::pair<Index, Index>> ranges;
  friend bool operator==(const SetFinite&, const SetFinite&) = default;
};
struct SetRef {
  std::string name;
  friend bool operator==(const SetRef&, const SetRef&) = default;
};
struct SetNot {
  Box<SetExpr> operand;
  friend bool operator==(const SetNot&, const SetNot&) = default;
};
enum class SetOp { And, Or, Minus };
struct SetBinary {
  SetOp op;
  Box<SetExpr> lhs;
  Box<SetExpr> rhs;
  friend bool operator==(const SetBinary&, const SetBinary&) = default;
};

struct SetExpr {
  std::variant<SetNat, SetAP, SetFinite, SetRef, SetNot, SetBinary> node;
  SourceLoc loc;
  friend bool operator==(const SetExpr&, const SetExpr&) = default;
};

// ---- element expressions ---------------------------------------------------

struct ElemExpr;

/// Non-negative rational literal: an integer, or `const(q)` when `is_const`.
struct ElemNumber {
  Rational value;
  bool is_const = false;
  friend bool operator==(const ElemNumber&, const ElemNumber&) = default;
};
/// `l` or `id`: the identity λ ↦ λ.
struct ElemIdentity {
  bool spelled_id = false;
  friend bool operator==(const ElemIdentity&, const ElemIdentity&) = default;
};
struct ElemIndicator {
  SetExpr set;
  friend bool operator==(const ElemIndicator&, const ElemIndicator&) = default;
};
struct ElemPiece {
  SetExpr region;
  Box<ElemExpr> poly;
  friend bool operator==(const ElemPiece&, const ElemPiece&) = default;
};
struct ElemPiecewise {
  std::vector<ElemPiece> pieces;
  friend bool operator==(const ElemPiecewise&, const ElemPiecewise&) = default;
};
struct ElemRef {
  std::string name;
  friend bool operator==(const ElemRef&, const ElemRef&) = default;
};
struct ElemNeg {
  Box<ElemExpr> operand;
  friend bool operator==(const ElemNeg&, const ElemNeg&) = default;
};
enum class ElemOp { Add, Sub, Mul, Div };
/// For Div the right operand is always an integer literal.
struct ElemBinary {
  ElemOp op;
  Box<ElemExpr> lhs;
  Box<ElemExpr> rhs;
  friend bool operator==(const ElemBinary&, const ElemBinary&) = default;
};
struct ElemPow {
  Box<ElemExpr> base;
  unsigned exponent;
  friend bool operator==(const ElemPow&, const ElemPow&) = default;
};
/// `expr except {i: q, ...}`; values may be negative.
struct ElemExcept {
  Box<ElemExpr> base;
  std::vector<std::pair<Index, Rational>> values;
  friend bool operator==(const ElemExcept&, const ElemExcept&) = default;
};

struct ElemExpr {
  std::variant<ElemNumber, ElemIdentity, ElemIndicator, ElemPiecewise, ElemRef, ElemNeg,
               ElemBinary, ElemPow, ElemExcept>
      node;
  SourceLoc loc;
  friend bool operator==(const ElemExpr&, const ElemExpr&) = default;
};

// ---- statements ------------------------------------------------------------

struct IndexDecl {
  std::string name;
  SetExpr set;
  friend bool operator==(const IndexDecl&, const IndexDecl&) = default;
};

/// `filter F on N = frechet + [S, ...]` or `filter F = frechet(N) + [...]`.
struct FilterDecl {
  std::string name;
  std::string carrier;
  bool carrier_in_frechet = false; // spelled frechet(N) rather than `on N`
  std::vector<SetExpr> generators;
  SourceLoc loc;
  friend bool operator==(const FilterDecl&, const FilterDecl&) = default;
};

struct ElemDecl {
  std::string name;
  std::string carrier;
  ElemExpr value;
  friend bool operator==(const ElemDecl&, const ElemDecl&) = default;
};

struct AlgebraDecl {
  std::string name;
  std::string filter;
  SourceLoc loc;
  friend bool operator==(const AlgebraDecl&, const AlgebraDecl&) = default;
};

struct HomDecl {
  std::string name;
  std::string source;
  std::string target;
  SourceLoc loc;
  friend bool operator==(const HomDecl&, const HomDecl&) = default;
};

/// Rows of algebra names; each row is read left to right.
struct GridDecl {
  std::optional<std::string> name;
  std::vector<std::vector<std::string>> rows;
  SourceLoc loc;
  friend bool operator==(const GridDecl&, const GridDecl&) = default;
};

enum class QueryKind { Eval, Eq, Leq, ZeroDivisors, Archimedean, Commutes, Oracle };

struct Query {
  QueryKind kind;
  std::vector<ElemExpr> operands;        // eval: 1, eq/leq: 2, archimedean: 1
  std::optional<Index> at;               // eval ... at N
  std::optional<std::string> grid;       // commutes [NAME]
  std::optional<std::size_t> samples;    // commutes ... samples N
  unsigned oracle_n = 0;                 // oracle N
  SourceLoc loc;
  friend bool operator==(const Query&, const Query&) = default;
};

using Statement =
    std::variant<IndexDecl, FilterDecl, ElemDecl, AlgebraDecl, HomDecl, GridDecl, Query>;

struct Program {
  std::vector<Statement> statements;
  friend bool operator==(const Program&, const Program&) = default;
};

std::string to_string(QueryKind kind);

/// Canonical source text with minimal parentheses; parsing it yields an
/// equal Program.
std::string to_source(const SetExpr& e);
std::string to_source(const ElemExpr& e);
std::string to_source(const Statement& s);
std::string to_source(const Program& p);

} // namespace redpow::dsl
