#include "redpow/dsl/evaluator.hpp"

#include <map>

#include <json.hpp>

#include "redpow/algebra.hpp"
#include "redpow/diagram.hpp"
#include "redpow/error.hpp"
#include "redpow/oracle.hpp"

namespace redpow::dsl {

namespace {

constexpr std::size_t kDefaultSamples = 50;

template <class T>
using Maybe = std::variant<T, std::string>;

template <class T>
const T* value_of(const Maybe<T>& m) {
  return std::get_if<T>(&m);
}

// Runs `f`, turning any library exception into its message.
template <class F>
auto attempt(F&& f) -> Maybe<decltype(f())> {
  try {
    return f();
  } catch (const std::exception& e) {
    return std::string(e.what());
  }
}

struct ElemEntry {
  EPSet carrier;
  Maybe<PwElement> value;
};

class Evaluator {
public:
  explicit Evaluator(std::uint64_t seed) : seed_(seed) {}

  Report run(const Program& program) {
    std::vector<std::optional<QueryReport>> slots(program.statements.size());
    for (std::size_t i = 0; i < program.statements.size(); ++i) {
      const Statement& s = program.statements[i];
      if (!std::holds_alternative<Query>(s))
        slots[i] = declare(s);
    }
    collect_scope();
    for (std::size_t i = 0; i < program.statements.size(); ++i)
      if (const auto* q = std::get_if<Query>(&program.statements[i]))
        slots[i] = query(*q);
    Report report;
    for (auto& slot : slots)
      if (slot)
        report.queries.push_back(std::move(*slot));
    return report;
  }

private:
  // ---- expressions ----

  EPSet set(const SetExpr& e) const {
    return std::visit(
        [&](const auto& n) -> EPSet {
          using T = std::decay_t<decltype(n)>;
          if constexpr (std::is_same_v<T, SetNat>) {
            return EPSet::naturals();
          } else if constexpr (std::is_same_v<T, SetAP>) {
            // r, r + p, r + 2p, ... even when r >= p.
            return difference(EPSet::progression(n.residue, n.period), EPSet::range(0, n.residue));
          } else if constexpr (std::is_same_v<T, SetFinite>) {
            std::vector<Index> members;
            for (const auto& [lo, hi] : n.ranges)
              for (Index k = lo; k <= hi; ++k)
                members.push_back(k);
            return EPSet::finite(members);
          } else if constexpr (std::is_same_v<T, SetRef>) {
            return sets_.at(n.name);
          } else if constexpr (std::is_same_v<T, SetNot>) {
            return complement(set(*n.operand));
          } else {
            const EPSet a = set(*n.lhs);
            const EPSet b = set(*n.rhs);
            switch (n.op) {
            case SetOp::And: return intersect(a, b);
            case SetOp::Or: return unite(a, b);
            case SetOp::Minus: return difference(a, b);
            }
            return a;
          }
        },
        e.node);
  }

  static Polynomial poly(const ElemExpr& e) {
    return std::visit(
        [](const auto& n) -> Polynomial {
          using T = std::decay_t<decltype(n)>;
          if constexpr (std::is_same_v<T, ElemNumber>) {
            return Polynomial::constant(n.value);
          } else if constexpr (std::is_same_v<T, ElemIdentity>) {
            return Polynomial::identity();
          } else if constexpr (std::is_same_v<T, ElemNeg>) {
            return -poly(*n.operand);
          } else if constexpr (std::is_same_v<T, ElemBinary>) {
            const Polynomial a = poly(*n.lhs);
            switch (n.op) {
            case ElemOp::Add: return a + poly(*n.rhs);
            case ElemOp::Sub: return a - poly(*n.rhs);
            case ElemOp::Mul: return a * poly(*n.rhs);
            case ElemOp::Div: return Rational(1 / std::get<ElemNumber>(n.rhs->node).value) * a;
            }
            return a;
          } else if constexpr (std::is_same_v<T, ElemPow>) {
            Polynomial out = Polynomial::constant(1);
            const Polynomial b = poly(*n.base);
            for (unsigned i = 0; i < n.exponent; ++i)
              out *= b;
            return out;
          } else {
            throw std::logic_error("non-polynomial piecewise body");
          }
        },
        e.node);
  }

  // Value of `e` on `carrier`. Named elements are restricted to the carrier.
  PwElement elem(const ElemExpr& e, const EPSet& carrier) const {
    return std::visit(
        [&](const auto& n) -> PwElement {
          using T = std::decay_t<decltype(n)>;
          if constexpr (std::is_same_v<T, ElemNumber>) {
            return PwElement::constant(n.value, carrier);
          } else if constexpr (std::is_same_v<T, ElemIdentity>) {
            return PwElement::identity(carrier);
          } else if constexpr (std::is_same_v<T, ElemIndicator>) {
            return PwElement::indicator(set(n.set), carrier);
          } else if constexpr (std::is_same_v<T, ElemPiecewise>) {
            std::vector<Piece> pieces;
            for (const auto& p : n.pieces) {
              EPSet region = intersect(set(p.region), carrier);
              if (!region.is_empty())
                pieces.push_back(Piece{std::move(region), poly(*p.poly)});
            }
            return PwElement(carrier, std::move(pieces));
          } else if constexpr (std::is_same_v<T, ElemRef>) {
            const ElemEntry& entry = elems_.at(n.name);
            if (const auto* err = std::get_if<std::string>(&entry.value))
              throw std::runtime_error("element '" + n.name + "' is undefined: " + *err);
            const PwElement& x = std::get<PwElement>(entry.value);
            if (entry.carrier == carrier)
              return x;
            if (!is_subset(carrier, entry.carrier))
              throw Error(ErrorCode::CarrierMismatch,
                          "element '" + n.name + "' is declared on " + entry.carrier.to_string() +
                              ", which does not contain " + carrier.to_string());
            return restrict(x, carrier);
          } else if constexpr (std::is_same_v<T, ElemNeg>) {
            return neg(elem(*n.operand, carrier));
          } else if constexpr (std::is_same_v<T, ElemBinary>) {
            const PwElement a = elem(*n.lhs, carrier);
            switch (n.op) {
            case ElemOp::Add: return add(a, elem(*n.rhs, carrier));
            case ElemOp::Sub: return sub(a, elem(*n.rhs, carrier));
            case ElemOp::Mul: return mul(a, elem(*n.rhs, carrier));
            case ElemOp::Div:
              return scalar_mul(Rational(1 / std::get<ElemNumber>(n.rhs->node).value), a);
            }
            return a;
          } else if constexpr (std::is_same_v<T, ElemPow>) {
            PwElement out = PwElement::constant(1, carrier);
            const PwElement b = elem(*n.base, carrier);
            for (unsigned i = 0; i < n.exponent; ++i)
              out = mul(out, b);
            return out;
          } else {
            // Exception keys outside the carrier are dropped.
            std::map<Index, Rational> values;
            for (const auto& [k, q] : n.values)
              if (carrier.contains(k))
                values[k] = q;
            return elem(*n.base, carrier).with_exceptions(values);
          }
        },
        e.node);
  }

  // ---- declarations ----

  static QueryReport declare_failure(const Statement& s, const std::string& error,
                                     const std::string& algebra = "") {
    Result r;
    r.algebra = algebra;
    r.error = error;
    r.failed = true;
    return QueryReport{"declare", {to_source(s)}, {std::move(r)}};
  }

  std::optional<QueryReport> declare(const Statement& s) {
    if (const auto* d = std::get_if<IndexDecl>(&s)) {
      sets_.insert_or_assign(d->name, set(d->set));
      return std::nullopt;
    }
    if (const auto* d = std::get_if<FilterDecl>(&s)) {
      auto f = attempt([&] {
        const EPSet carrier = sets_.at(d->carrier);
        if (d->generators.empty())
          return Filter::frechet(carrier);
        std::vector<EPSet> gens;
        for (const auto& g : d->generators)
          gens.push_back(set(g));
        return Filter::generated(carrier, std::move(gens));
      });
      filter_order_.push_back(d->name);
      const auto it = filters_.insert_or_assign(d->name, std::move(f)).first;
      if (const auto* err = std::get_if<std::string>(&it->second))
        return declare_failure(s, *err);
      return std::nullopt;
    }
    if (const auto* d = std::get_if<ElemDecl>(&s)) {
      const EPSet carrier = sets_.at(d->carrier);
      auto x = attempt([&] { return elem(d->value, carrier); });
      const auto it = elems_.insert_or_assign(d->name, ElemEntry{carrier, std::move(x)}).first;
      if (const auto* err = std::get_if<std::string>(&it->second.value))
        return declare_failure(s, *err);
      return std::nullopt;
    }
    if (const auto* d = std::get_if<AlgebraDecl>(&s)) {
      Maybe<Algebra> a = std::string("filter '" + d->filter + "' failed to declare");
      if (const auto* f = value_of(filters_.at(d->filter)))
        a = Algebra(*f);
      algebra_order_.push_back(d->name);
      algebras_.insert_or_assign(d->name, std::move(a));
      return std::nullopt;
    }
    if (const auto* d = std::get_if<HomDecl>(&s))
      return hom(s, *d);
    if (const auto* d = std::get_if<GridDecl>(&s))
      return grid(s, *d);
    return std::nullopt;
  }

  Maybe<Algebra> algebra(const std::string& name) const {
    const auto& a = algebras_.at(name);
    if (value_of(a))
      return a;
    return "algebra '" + name + "' is undefined: " + std::get<std::string>(a);
  }

  QueryReport hom(const Statement& s, const HomDecl& d) {
    QueryReport rep{"hom", {to_source(s)}, {}};
    Result r;
    const auto src = algebra(d.source);
    const auto dst = algebra(d.target);
    if (value_of(src))
      r.algebra = value_of(src)->describe();
    Maybe<Hom> h = std::string();
    if (!value_of(src))
      h = std::get<std::string>(src);
    else if (!value_of(dst))
      h = std::get<std::string>(dst);
    else
      h = attempt([&] { return make_hom(*value_of(src), *value_of(dst)); });
    if (const auto* hh = value_of(h)) {
      r.verdict = true;
      r.witness = hh->describe();
    } else {
      r.verdict = false;
      r.error = std::get<std::string>(h);
      r.failed = true;
    }
    rep.results.push_back(std::move(r));
    return rep;
  }

  // Builds the grid once; edges become results.
  QueryReport grid(const Statement& s, const GridDecl& d) {
    QueryReport rep{"grid", {to_source(s)}, {}};
    auto g = build_grid(d);
    if (const auto* err = std::get_if<std::string>(&g)) {
      Result r;
      r.error = *err;
      r.failed = true;
      rep.results.push_back(std::move(r));
    } else {
      const Grid& grid = std::get<Grid>(g);
      for (const auto& e : grid.edges()) {
        Result r;
        r.algebra = grid.cell(e.row, e.col).describe();
        r.verdict = e.hom.has_value();
        if (e.hom)
          r.witness = e.hom->describe();
        else {
          r.error = e.error;
          r.failed = true;
        }
        rep.results.push_back(std::move(r));
      }
    }
    grids_.push_back({d.name, std::move(g)});
    return rep;
  }

  Maybe<Grid> build_grid(const GridDecl& d) const {
    std::vector<std::vector<Algebra>> cells;
    for (const auto& row : d.rows) {
      cells.emplace_back();
      for (const auto& name : row) {
        auto a = algebra(name);
        if (const auto* err = std::get_if<std::string>(&a))
          return *err;
        cells.back().push_back(std::get<Algebra>(a));
      }
    }
    return attempt([&] { return Grid::build(std::move(cells)); });
  }

  // ---- queries ----

  // Algebras every query runs in, without repeating equivalent filters.
  void collect_scope() {
    auto add = [&](const Filter& f) {
      for (const auto& a : scope_)
        if (a.carrier() == f.carrier() && equivalent(a.filter(), f))
          return;
      scope_.emplace_back(f);
    };
    if (!algebra_order_.empty()) {
      for (const auto& name : algebra_order_)
        if (const auto* a = value_of(algebras_.at(name)))
          add(a->filter());
    } else {
      for (const auto& name : filter_order_)
        if (const auto* f = value_of(filters_.at(name)))
          add(*f);
    }
  }

  QueryReport query(const Query& q) {
    QueryReport rep{to_string(q.kind), {}, {}};
    for (const auto& e : q.operands)
      rep.inputs.push_back(to_source(e));
    switch (q.kind) {
    case QueryKind::Commutes:
      commutes(q, rep);
      return rep;
    case QueryKind::Oracle:
      rep.inputs.push_back(std::to_string(q.oracle_n));
      rep.results.push_back(oracle(q.oracle_n));
      return rep;
    default:
      break;
    }
    if (q.kind == QueryKind::Eval && q.at)
      rep.inputs.push_back("at " + std::to_string(*q.at));
    for (const auto& a : scope_) {
      Result r;
      r.algebra = a.describe();
      try {
        run_in(q, a, r);
      } catch (const std::exception& e) {
        r.verdict = std::monostate{};
        r.error = e.what();
        r.failed = true;
      }
      rep.results.push_back(std::move(r));
    }
    return rep;
  }

  void run_in(const Query& q, const Algebra& a, Result& r) const {
    const EPSet& carrier = a.carrier();
    switch (q.kind) {
    case QueryKind::Eval: {
      const PwElement x = elem(q.operands[0], carrier);
      r.verdict = q.at ? redpow::to_string(x.eval(*q.at)) : x.to_string();
      return;
    }
    case QueryKind::Eq: {
      const PwElement x = elem(q.operands[0], carrier);
      const PwElement y = elem(q.operands[1], carrier);
      r.verdict = coset_eq(Coset(a, x), Coset(a, y));
      r.certificate = "Z(x - y) = " + zero_set(sub(x, y)).to_string();
      return;
    }
    case QueryKind::Leq: {
      const PwElement x = elem(q.operands[0], carrier);
      const PwElement y = elem(q.operands[1], carrier);
      r.verdict = leq(Coset(a, x), Coset(a, y));
      r.certificate = "{x <= y} = " + le_set(x, y).to_string();
      return;
    }
    case QueryKind::ZeroDivisors: {
      const auto [s, t] = zero_divisor_pair(a);
      const Coset zero = embed(0, a);
      const bool ok = coset_eq(coset_mul(s, t), zero) && !coset_eq(s, zero) && !coset_eq(t, zero);
      auto support = [&](const Coset& c) {
        return difference(carrier, zero_set(c.rep())).to_string();
      };
      r.verdict = ok;
      r.witness = "ind(" + support(s) + ") * ind(" + support(t) + ")";
      r.failed = !ok;
      return;
    }
    case QueryKind::Archimedean: {
      const Coset u(a, elem(q.operands[0], carrier));
      const ArchimedeanWitness w = archimedean_counterexample(a, u);
      const bool ok = verify_certificate(u, w.x, w.certificate);
      r.verdict = ok;
      r.witness = w.x.rep().to_string();
      r.certificate = w.certificate.summary();
      r.failed = !ok;
      return;
    }
    default:
      throw std::logic_error("query kind handled elsewhere");
    }
  }

  void commutes(const Query& q, QueryReport& rep) const {
    const std::size_t samples = q.samples.value_or(kDefaultSamples);
    if (q.grid)
      rep.inputs.push_back(*q.grid);
    if (q.samples)
      rep.inputs.push_back("samples " + std::to_string(samples));
    for (const auto& [name, g] : grids_) {
      if (q.grid && name != q.grid)
        continue;
      if (const auto* err = std::get_if<std::string>(&g)) {
        Result r;
        r.error = *err;
        r.failed = true;
        rep.results.push_back(std::move(r));
        continue;
      }
      const Grid& grid = std::get<Grid>(g);
      for (const auto& sq : check_grid(grid, seed_, samples)) {
        Result r;
        r.algebra = grid.cell(sq.row, sq.col).describe();
        r.witness = "square (" + std::to_string(sq.row) + "," + std::to_string(sq.col) + ")";
        if (sq.error.empty()) {
          r.verdict = sq.commutes;
          r.certificate = std::to_string(sq.samples) + " samples";
          r.failed = !sq.commutes;
        } else {
          r.verdict = false;
          r.error = sq.error;
          r.failed = true;
        }
        rep.results.push_back(std::move(r));
      }
    }
  }

  static Result oracle(unsigned n) {
    Result r;
    r.algebra = "Q^" + std::to_string(n);
    try {
      const auto report = oracle::verify_correspondence(oracle::FiniteModel(n));
      r.verdict = report.passed();
      r.certificate = report.to_text();
      r.failed = !report.passed();
    } catch (const std::exception& e) {
      r.error = e.what();
      r.failed = true;
    }
    return r;
  }

  std::uint64_t seed_;
  std::map<std::string, EPSet> sets_;
  std::map<std::string, Maybe<Filter>> filters_;
  std::vector<std::string> filter_order_;
  std::map<std::string, ElemEntry> elems_;
  std::map<std::string, Maybe<Algebra>> algebras_;
  std::vector<std::string> algebra_order_;
  std::vector<std::pair<std::optional<std::string>, Maybe<Grid>>> grids_;
  std::vector<Algebra> scope_;
};

} // namespace

bool Report::failed() const {
  for (const auto& q : queries)
    for (const auto& r : q.results)
      if (r.failed)
        return true;
  return false;
}

std::string Report::to_json() const {
  using nlohmann::ordered_json;
  auto opt = [](const std::optional<std::string>& s) -> ordered_json {
    return s ? ordered_json(*s) : ordered_json(nullptr);
  };
  ordered_json queries_json = ordered_json::array();
  for (const auto& q : queries) {
    ordered_json results = ordered_json::array();
    for (const auto& r : q.results) {
      ordered_json verdict = std::visit(
          [](const auto& v) -> ordered_json {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, std::monostate>)
              return nullptr;
            else
              return v;
          },
          r.verdict);
      results.push_back(ordered_json{{"algebra", r.algebra},
                                     {"verdict", std::move(verdict)},
                                     {"witness", opt(r.witness)},
                                     {"certificate", opt(r.certificate)},
                                     {"error", opt(r.error)}});
    }
    queries_json.push_back(
        ordered_json{{"kind", q.kind}, {"inputs", q.inputs}, {"results", std::move(results)}});
  }
  const ordered_json doc{{"version", 1}, {"queries", std::move(queries_json)}};
  return doc.dump(2) + "\n";
}

Report evaluate(const Program& program, std::uint64_t seed) {
  return Evaluator(seed).run(program);
}

} // namespace redpow::dsl
