#include "redpow/dsl/ast.hpp"

namespace redpow::dsl {

namespace {

// Binding strength; a child printed below `min` gets parentheses.
int set_prec(const SetExpr& e) {
  if (const auto* b = std::get_if<SetBinary>(&e.node))
    return b->op == SetOp::And ? 2 : 1;
  if (std::holds_alternative<SetNot>(e.node))
    return 3;
  return 4;
}

std::string set_src(const SetExpr& e, int min) {
  std::string out = std::visit(
      [](const auto& n) -> std::string {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, SetNat>) {
          return "nat";
        } else if constexpr (std::is_same_v<T, SetAP>) {
          return "AP(" + std::to_string(n.residue) + "," + std::to_string(n.period) + ")";
        } else if constexpr (std::is_same_v<T, SetFinite>) {
          std::string s = "{";
          for (std::size_t i = 0; i < n.ranges.size(); ++i) {
            const auto [lo, hi] = n.ranges[i];
            s += (i ? ", " : "") + std::to_string(lo);
            if (hi != lo)
              s += ".." + std::to_string(hi);
          }
          return s + "}";
        } else if constexpr (std::is_same_v<T, SetRef>) {
          return n.name;
        } else if constexpr (std::is_same_v<T, SetNot>) {
          return "!" + set_src(*n.operand, 3);
        } else {
          const int p = n.op == SetOp::And ? 2 : 1;
          const char* op = n.op == SetOp::And ? " & " : n.op == SetOp::Or ? " | " : " \\ ";
          return set_src(*n.lhs, p) + op + set_src(*n.rhs, p + 1);
        }
      },
      e.node);
  return set_prec(e) < min ? "(" + out + ")" : out;
}

int elem_prec(const ElemExpr& e) {
  if (std::holds_alternative<ElemExcept>(e.node))
    return 0;
  if (const auto* b = std::get_if<ElemBinary>(&e.node))
    return b->op == ElemOp::Add || b->op == ElemOp::Sub ? 1 : 2;
  if (std::holds_alternative<ElemNeg>(e.node))
    return 3;
  if (std::holds_alternative<ElemPow>(e.node))
    return 4;
  return 5;
}

std::string elem_src(const ElemExpr& e, int min) {
  std::string out = std::visit(
      [](const auto& n) -> std::string {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, ElemNumber>) {
          return n.is_const ? "const(" + n.value.get_str() + ")" : n.value.get_str();
        } else if constexpr (std::is_same_v<T, ElemIdentity>) {
          return n.spelled_id ? "id" : "l";
        } else if constexpr (std::is_same_v<T, ElemIndicator>) {
          return "ind(" + set_src(n.set, 0) + ")";
        } else if constexpr (std::is_same_v<T, ElemPiecewise>) {
          std::string s = "piecewise[";
          for (std::size_t i = 0; i < n.pieces.size(); ++i) {
            s += i ? "; " : "";
            s += set_src(n.pieces[i].region, 0) + ": " + elem_src(*n.pieces[i].poly, 1);
          }
          return s + "]";
        } else if constexpr (std::is_same_v<T, ElemRef>) {
          return n.name;
        } else if constexpr (std::is_same_v<T, ElemNeg>) {
          return "-" + elem_src(*n.operand, 3);
        } else if constexpr (std::is_same_v<T, ElemBinary>) {
          const int p = n.op == ElemOp::Add || n.op == ElemOp::Sub ? 1 : 2;
          const char* op = n.op == ElemOp::Add   ? " + "
                           : n.op == ElemOp::Sub ? " - "
                           : n.op == ElemOp::Mul ? " * "
                                                 : " / ";
          return elem_src(*n.lhs, p) + op + elem_src(*n.rhs, p + 1);
        } else if constexpr (std::is_same_v<T, ElemPow>) {
          return elem_src(*n.base, 5) + "^" + std::to_string(n.exponent);
        } else {
          std::string s = elem_src(*n.base, 1) + " except {";
          for (std::size_t i = 0; i < n.values.size(); ++i)
            s += (i ? ", " : "") + std::to_string(n.values[i].first) + ": " +
                 n.values[i].second.get_str();
          return s + "}";
        }
      },
      e.node);
  return elem_prec(e) < min ? "(" + out + ")" : out;
}

} // namespace

std::string to_string(QueryKind kind) {
  switch (kind) {
  case QueryKind::Eval: return "eval";
  case QueryKind::Eq: return "eq";
  case QueryKind::Leq: return "leq";
  case QueryKind::ZeroDivisors: return "zerodivisors";
  case QueryKind::Archimedean: return "archimedean";
  case QueryKind::Commutes: return "commutes";
  case QueryKind::Oracle: return "oracle";
  }
  return "?";
}

std::string to_source(const SetExpr& e) { return set_src(e, 0); }

std::string to_source(const ElemExpr& e) { return elem_src(e, 0); }

std::string to_source(const Statement& s) {
  return std::visit(
      [](const auto& d) -> std::string {
        using T = std::decay_t<decltype(d)>;
        if constexpr (std::is_same_v<T, IndexDecl>) {
          return "index " + d.name + " = " + to_source(d.set);
        } else if constexpr (std::is_same_v<T, FilterDecl>) {
          std::string s = "filter " + d.name;
          s += d.carrier_in_frechet ? " = frechet(" + d.carrier + ")"
                                    : " on " + d.carrier + " = frechet";
          if (!d.generators.empty()) {
            s += " + [";
            for (std::size_t i = 0; i < d.generators.size(); ++i)
              s += (i ? ", " : "") + to_source(d.generators[i]);
            s += "]";
          }
          return s;
        } else if constexpr (std::is_same_v<T, ElemDecl>) {
          return "elem " + d.name + " on " + d.carrier + " = " + to_source(d.value);
        } else if constexpr (std::is_same_v<T, AlgebraDecl>) {
          return "algebra " + d.name + " = " + d.filter;
        } else if constexpr (std::is_same_v<T, HomDecl>) {
          return "hom " + d.name + " : " + d.source + " -> " + d.target;
        } else if constexpr (std::is_same_v<T, GridDecl>) {
          std::string s = "grid ";
          if (d.name)
            s += *d.name + " ";
          s += "{";
          for (std::size_t r = 0; r < d.rows.size(); ++r) {
            s += r ? "; " : " ";
            for (std::size_t c = 0; c < d.rows[r].size(); ++c)
              s += (c ? " -> " : "") + d.rows[r][c];
          }
          return s + " }";
        } else {
          std::string s = "query " + to_string(d.kind);
          switch (d.kind) {
          case QueryKind::Eval:
            s += " " + to_source(d.operands.at(0));
            if (d.at)
              s += " at " + std::to_string(*d.at);
            break;
          case QueryKind::Eq:
          case QueryKind::Leq:
            s += " " + to_source(d.operands.at(0)) + ", " + to_source(d.operands.at(1));
            break;
          case QueryKind::Archimedean:
            s += " " + to_source(d.operands.at(0));
            break;
          case QueryKind::Commutes:
            if (d.grid)
              s += " " + *d.grid;
            if (d.samples)
              s += " samples " + std::to_string(*d.samples);
            break;
          case QueryKind::Oracle:
            s += " " + std::to_string(d.oracle_n);
            break;
          case QueryKind::ZeroDivisors:
            break;
          }
          return s;
        }
      },
      s);
}

std::string to_source(const Program& p) {
  std::string out;
  for (const auto& s : p.statements)
    out += to_source(s) + "\n";
  return out;
}

} // namespace redpow::dsl
