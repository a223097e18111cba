#include "redpow/algebra.hpp"

#include <sstream>

#include "redpow/error.hpp"

namespace redpow {

namespace {

void require_same_algebra(const Coset& x, const Coset& y) {
  if (!(x.algebra() == y.algebra()))
    throw Error(ErrorCode::AlgebraMismatch, x.algebra().describe() + " vs " + y.algebra().describe());
}

} // namespace

Coset::Coset(Algebra algebra, PwElement rep) : algebra_(std::move(algebra)), rep_(std::move(rep)) {
  if (!(rep_.carrier() == algebra_.carrier()))
    throw Error(ErrorCode::CarrierMismatch, "representative on " + rep_.carrier().to_string() +
                                                " for an algebra on " + algebra_.carrier().to_string());
}

bool coset_eq(const Coset& x, const Coset& y) {
  require_same_algebra(x, y);
  return x.algebra().filter().contains(zero_set(sub(x.rep(), y.rep())));
}

Coset coset_add(const Coset& x, const Coset& y) {
  require_same_algebra(x, y);
  return Coset(x.algebra(), add(x.rep(), y.rep()));
}

Coset coset_sub(const Coset& x, const Coset& y) {
  require_same_algebra(x, y);
  return Coset(x.algebra(), sub(x.rep(), y.rep()));
}

Coset coset_mul(const Coset& x, const Coset& y) {
  require_same_algebra(x, y);
  return Coset(x.algebra(), mul(x.rep(), y.rep()));
}

Coset coset_neg(const Coset& x) { return Coset(x.algebra(), neg(x.rep())); }

Coset coset_scalar_mul(const Rational& c, const Coset& x) {
  return Coset(x.algebra(), scalar_mul(c, x.rep()));
}

Coset embed(const Rational& xi, const Algebra& algebra) {
  return Coset(algebra, PwElement::constant(xi, algebra.carrier()));
}

bool ideal_member(const PwElement& x, const Filter& filter) {
  if (!(x.carrier() == filter.carrier()))
    throw Error(ErrorCode::CarrierMismatch,
                x.carrier().to_string() + " vs " + filter.carrier().to_string());
  return filter.contains(zero_set(x));
}

// ---------------------------------------------------------------------------
// Ideal <-> filter correspondence

EPSet FGIdeal::common_zero_set() const {
  EPSet common = carrier;
  for (const auto& g : generators) {
    if (!(g.carrier() == carrier))
      throw Error(ErrorCode::CarrierMismatch,
                  "ideal generator on " + g.carrier().to_string() + ", ideal on " + carrier.to_string());
    common = intersect(common, zero_set(g));
  }
  return common;
}

std::string DegenerateReport::remark() const {
  std::ostringstream os;
  os << "the generated filter is principal on the finite set " << zero_set.to_string()
     << ", so the quotient is the power algebra Q^" << n;
  if (n > 0)
    os << ", in fact the usual " << n << "-dimensional Euclidean space";
  return os.str();
}

std::variant<Filter, DegenerateReport> filter_of_ideal(const FGIdeal& ideal) {
  if (ideal.generators.empty() && !ideal.includes_frechet_ideal)
    throw Error(ErrorCode::EmptyIdeal, "ideal has no generators");
  const EPSet common = ideal.common_zero_set();
  if (common.is_finite()) {
    if (ideal.includes_frechet_ideal)
      throw Error(ErrorCode::DegenerateFilter,
                  "common zero set " + common.to_string() +
                      " is finite; joined with the Frechet ideal this is the whole ring");
    return DegenerateReport{*common.size(), common};
  }
  return Filter::generated(ideal.carrier, {common});
}

bool correspondence_idempotent(const Filter& filter) {
  const EPSet& carrier = filter.carrier();
  FGIdeal ideal{carrier, {PwElement::indicator(difference(carrier, filter.core()), carrier)}, true};
  const auto back = filter_of_ideal(ideal);
  const auto* f = std::get_if<Filter>(&back);
  return f != nullptr && equivalent(*f, filter);
}

// ---------------------------------------------------------------------------
// Homomorphisms

std::vector<Hom> Hom::steps() const {
  if (kind_ == HomKind::Composite)
    return steps_;
  return {*this};
}

std::string Hom::describe() const {
  switch (kind_) {
  case HomKind::Coarsen:
    return "coarsen " + source_.describe() + " -> " + target_.describe();
  case HomKind::Restrict:
    return "restrict " + source_.describe() + " -> " + target_.describe();
  case HomKind::Composite:
    break;
  }
  std::string out;
  for (const auto& s : steps_) {
    if (!out.empty())
      out += " ; ";
    out += s.describe();
  }
  return out;
}

Hom make_hom_coarsen(const Algebra& source, const Algebra& target) {
  if (!is_subfilter(source.filter(), target.filter()))
    throw Error(ErrorCode::NotSubfilter,
                source.filter().describe() + " is not contained in " + target.filter().describe());
  return Hom(HomKind::Coarsen, source, target);
}

Hom make_hom_restrict(const Algebra& source, const EPSet& subcarrier) {
  Algebra target(source.filter().restrict(subcarrier));
  return Hom(HomKind::Restrict, source, std::move(target));
}

Hom compose(const Hom& first, const Hom& second) {
  if (!(first.target() == second.source()))
    throw Error(ErrorCode::CompositionMismatch,
                first.target().describe() + " does not feed " + second.source().describe());
  Hom out(HomKind::Composite, first.source(), second.target());
  for (const auto& h : {first, second})
    for (auto& s : h.steps())
      out.steps_.push_back(std::move(s));
  return out;
}

Hom make_hom(const Algebra& source, const Algebra& target) {
  if (source.carrier() == target.carrier())
    return make_hom_coarsen(source, target);
  Hom restriction = make_hom_restrict(source, target.carrier());
  if (restriction.target() == target)
    return restriction;
  return compose(restriction, make_hom_coarsen(restriction.target(), target));
}

Coset apply(const Hom& h, const Coset& x) {
  if (!(x.algebra() == h.source()))
    throw Error(ErrorCode::AlgebraMismatch,
                x.algebra().describe() + " is not the source of " + h.describe());
  switch (h.kind()) {
  case HomKind::Coarsen:
    return Coset(h.target(), x.rep());
  case HomKind::Restrict:
    return Coset(h.target(), restrict(x.rep(), h.target().carrier()));
  case HomKind::Composite:
    break;
  }
  Coset y = x;
  for (const auto& s : h.steps_)
    y = apply(s, y);
  return y;
}

bool kernel_member(const Hom& h, const Coset& x) {
  if (h.kind() != HomKind::Coarsen)
    throw Error(ErrorCode::UnsupportedHomKind, "kernel test needs a single coarsening");
  if (!(x.algebra() == h.source()))
    throw Error(ErrorCode::AlgebraMismatch,
                x.algebra().describe() + " is not the source of " + h.describe());
  return ideal_member(x.rep(), h.target().filter());
}

bool check_commutes(const Hom& path1, const Hom& path2, std::span<const Coset> samples) {
  if (!(path1.source() == path2.source()) || !(path1.target() == path2.target()))
    throw Error(ErrorCode::PathMismatch, path1.describe() + " vs " + path2.describe());
  for (const auto& s : samples)
    if (!coset_eq(apply(path1, s), apply(path2, s)))
      return false;
  return true;
}

// ---------------------------------------------------------------------------
// Order and witnesses

bool leq(const Coset& x, const Coset& y) {
  require_same_algebra(x, y);
  return x.algebra().filter().contains(le_set(x.rep(), y.rep()));
}

std::pair<Coset, Coset> zero_divisor_pair(const Algebra& algebra) {
  const EPSet& core = algebra.filter().core();
  const EPSet first = core.even_positions();
  const EPSet second = difference(core, first);
  return {Coset(algebra, PwElement::indicator(first, algebra.carrier())),
          Coset(algebra, PwElement::indicator(second, algebra.carrier()))};
}

std::string ArchimedeanCertificate::summary() const {
  std::string out;
  for (const auto& e : entries) {
    if (!out.empty())
      out += "; ";
    out += "on " + e.region.to_string() + ": deg x = " + std::to_string(e.x_degree) + " > deg u = " +
           (e.u_degree ? std::to_string(*e.u_degree) : std::string("-inf")) +
           ", lead x = " + e.x_leading.get_str();
  }
  return out;
}

namespace {

// Highest degree of u over pieces meeting `region` infinitely.
std::optional<std::size_t> top_degree_on(const PwElement& u, const EPSet& region) {
  return max_tail_degree(u, region);
}

} // namespace

ArchimedeanWitness archimedean_counterexample(const Algebra& algebra, const Coset& u) {
  if (!(u.algebra() == algebra))
    throw Error(ErrorCode::AlgebraMismatch, u.algebra().describe() + " vs " + algebra.describe());
  if (!leq(embed(0, algebra), u))
    throw Error(ErrorCode::NotNonnegative, u.rep().to_string() + " is not >= 0 in " + algebra.describe());

  const EPSet& core = algebra.filter().core();
  const auto d = max_tail_degree(u.rep(), core);
  const std::size_t v_degree = d ? *d + 1 : 1;
  const PwElement v = PwElement::polynomial(Polynomial::monomial(v_degree), algebra.carrier());
  Coset x(algebra, add(u.rep(), v));

  ArchimedeanCertificate cert;
  for (const auto& p : x.rep().pieces()) {
    EPSet region = intersect(p.region, core);
    if (region.is_finite())
      continue;
    cert.entries.push_back({region, top_degree_on(u.rep(), region), *p.poly.degree(), p.poly.leading()});
  }
  return {std::move(x), std::move(cert)};
}

bool verify_certificate(const Coset& u, const Coset& x, const ArchimedeanCertificate& cert) {
  if (!(u.algebra() == x.algebra()))
    return false;
  const Algebra& algebra = u.algebra();
  const EPSet& core = algebra.filter().core();

  EPSet covered;
  for (const auto& e : cert.entries) {
    if (e.region.is_finite() || !is_subset(e.region, core))
      return false;
    if (e.x_leading <= 0 || (e.u_degree && *e.u_degree >= e.x_degree))
      return false;
    for (const auto& p : u.rep().pieces()) {
      if (intersect(p.region, e.region).is_finite())
        continue;
      auto deg = p.poly.degree();
      if (deg && (!e.u_degree || *deg > *e.u_degree))
        return false;
    }
    for (const auto& p : x.rep().pieces()) {
      if (intersect(p.region, e.region).is_finite())
        continue;
      if (p.poly.degree() != e.x_degree || p.poly.leading() != e.x_leading)
        return false;
    }
    covered = unite(covered, e.region);
  }
  if (!difference(core, covered).is_finite())
    return false;
  return leq(embed(0, algebra), x);
}

} // namespace redpow
