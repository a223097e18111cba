#include "redpow/element.hpp"

#include <algorithm>

#include "redpow/error.hpp"

namespace redpow {

namespace {

void require_infinite_carrier(const EPSet& carrier) {
  if (carrier.is_finite())
    throw Error(ErrorCode::DegenerateCarrier, "carrier " + carrier.to_string() + " is finite");
}

void require_same_carrier(const PwElement& x, const PwElement& y) {
  if (!(x.carrier() == y.carrier()))
    throw Error(ErrorCode::CarrierMismatch,
                x.carrier().to_string() + " vs " + y.carrier().to_string());
}

template <typename Op>
PwElement combine(const PwElement& x, const PwElement& y, Op op) {
  require_same_carrier(x, y);
  std::vector<Piece> pieces;
  for (const auto& a : x.pieces()) {
    for (const auto& b : y.pieces()) {
      EPSet region = intersect(a.region, b.region);
      if (!region.is_empty())
        pieces.push_back({std::move(region), op(a.poly, b.poly)});
    }
  }
  std::map<Index, Rational> exceptions;
  for (const auto& [n, v] : x.exceptions())
    exceptions[n] = op(v, y.eval(n));
  for (const auto& [n, v] : y.exceptions())
    if (!exceptions.contains(n))
      exceptions[n] = op(x.eval(n), v);
  return PwElement(x.carrier(), std::move(pieces), std::move(exceptions));
}

Index smallest(const EPSet& s) { return *s.next_member(0); }

} // namespace

PwElement::PwElement(EPSet carrier, std::vector<Piece> pieces, std::map<Index, Rational> exceptions)
    : carrier_(std::move(carrier)), pieces_(std::move(pieces)), exceptions_(std::move(exceptions)) {
  require_infinite_carrier(carrier_);
  EPSet covered;
  for (const auto& p : pieces_) {
    if (!is_subset(p.region, carrier_))
      throw Error(ErrorCode::CarrierMismatch,
                  "piece region " + p.region.to_string() + " leaves the carrier");
    if (!intersect(covered, p.region).is_empty())
      throw Error(ErrorCode::CarrierMismatch, "piece regions overlap");
    covered = unite(covered, p.region);
  }
  if (!(covered == carrier_))
    throw Error(ErrorCode::CarrierMismatch, "piece regions do not cover the carrier");
  for (const auto& [n, v] : exceptions_)
    if (!carrier_.contains(n))
      throw Error(ErrorCode::OutOfCarrier, "exception index " + std::to_string(n));
  canonicalize();
}

void PwElement::canonicalize() {
  // Pin every point below the largest threshold to its current value; beyond
  // that bound every region agrees with its periodic tail.
  Index bound = carrier_.threshold();
  for (const auto& p : pieces_)
    bound = std::max(bound, p.region.threshold());
  for (Index n = 0; n < bound; ++n)
    if (carrier_.contains(n) && !exceptions_.contains(n))
      exceptions_.emplace(n, piece_at(n).poly.eval(n));

  // Merge pieces with equal polynomials and keep only infinite regions,
  // reassigned to their tails.
  std::vector<Piece> merged;
  for (auto& p : pieces_) {
    if (p.region.is_finite())
      continue;
    EPSet region = intersect(p.region.tail(), carrier_);
    auto it = std::find_if(merged.begin(), merged.end(),
                           [&](const Piece& q) { return q.poly == p.poly; });
    if (it == merged.end())
      merged.push_back({std::move(region), std::move(p.poly)});
    else
      it->region = unite(it->region, region);
  }
  std::sort(merged.begin(), merged.end(), [](const Piece& a, const Piece& b) {
    return smallest(a.region) < smallest(b.region);
  });

  EPSet covered;
  for (const auto& p : merged)
    covered = unite(covered, p.region);
  merged.front().region = unite(merged.front().region, difference(carrier_, covered));
  pieces_ = std::move(merged);

  for (auto it = exceptions_.begin(); it != exceptions_.end();) {
    if (piece_at(it->first).poly.eval(it->first) == it->second)
      it = exceptions_.erase(it);
    else
      ++it;
  }
}

PwElement PwElement::constant(const Rational& c, const EPSet& carrier) {
  return polynomial(Polynomial::constant(c), carrier);
}

PwElement PwElement::identity(const EPSet& carrier) {
  return polynomial(Polynomial::identity(), carrier);
}

PwElement PwElement::polynomial(const Polynomial& p, const EPSet& carrier) {
  require_infinite_carrier(carrier);
  return PwElement(carrier, {Piece{carrier, p}});
}

PwElement PwElement::indicator(const EPSet& set, const EPSet& carrier) {
  require_infinite_carrier(carrier);
  std::vector<Piece> pieces;
  EPSet inside = intersect(set, carrier);
  EPSet outside = difference(carrier, set);
  if (!inside.is_empty())
    pieces.push_back({std::move(inside), Polynomial::constant(1)});
  if (!outside.is_empty())
    pieces.push_back({std::move(outside), Polynomial()});
  return PwElement(carrier, std::move(pieces));
}

const Piece& PwElement::piece_at(Index n) const {
  for (const auto& p : pieces_)
    if (p.region.contains(n))
      return p;
  throw Error(ErrorCode::OutOfCarrier, std::to_string(n) + " is not in " + carrier_.to_string());
}

Rational PwElement::eval(Index n) const {
  if (!carrier_.contains(n))
    throw Error(ErrorCode::OutOfCarrier, std::to_string(n) + " is not in " + carrier_.to_string());
  if (auto it = exceptions_.find(n); it != exceptions_.end())
    return it->second;
  return piece_at(n).poly.eval(n);
}

int PwElement::sign_at(Index n) const {
  if (!carrier_.contains(n))
    throw Error(ErrorCode::OutOfCarrier, std::to_string(n) + " is not in " + carrier_.to_string());
  if (auto it = exceptions_.find(n); it != exceptions_.end())
    return sgn(it->second);
  return piece_at(n).poly.sign_at(n);
}

PwElement PwElement::with_exceptions(const std::map<Index, Rational>& values) const {
  auto merged = exceptions_;
  for (const auto& [n, v] : values)
    merged[n] = v;
  return PwElement(carrier_, pieces_, std::move(merged));
}

std::string PwElement::to_string() const {
  std::string out;
  if (pieces_.size() == 1) {
    out = pieces_.front().poly.to_string();
  } else {
    out = "piecewise[";
    for (std::size_t i = 0; i < pieces_.size(); ++i) {
      if (i > 0)
        out += "; ";
      out += pieces_[i].region.to_string() + ": " + pieces_[i].poly.to_string();
    }
    out += "]";
  }
  if (!exceptions_.empty()) {
    out += " except {";
    bool first = true;
    for (const auto& [n, v] : exceptions_) {
      if (!first)
        out += ", ";
      first = false;
      out += std::to_string(n) + ": " + v.get_str();
    }
    out += "}";
  }
  return out;
}

PwElement add(const PwElement& x, const PwElement& y) {
  return combine(x, y, [](const auto& a, const auto& b) { return a + b; });
}

PwElement sub(const PwElement& x, const PwElement& y) {
  return combine(x, y, [](const auto& a, const auto& b) { return a - b; });
}

PwElement mul(const PwElement& x, const PwElement& y) {
  return combine(x, y, [](const auto& a, const auto& b) { return a * b; });
}

PwElement neg(const PwElement& x) { return scalar_mul(-1, x); }

PwElement scalar_mul(const Rational& c, const PwElement& x) {
  std::vector<Piece> pieces;
  for (const auto& p : x.pieces())
    pieces.push_back({p.region, c * p.poly});
  std::map<Index, Rational> exceptions;
  for (const auto& [n, v] : x.exceptions())
    exceptions[n] = c * v;
  return PwElement(x.carrier(), std::move(pieces), std::move(exceptions));
}

namespace {

// Applies exception overrides to a set computed from the pieces alone.
EPSet apply_pointwise(EPSet base, const PwElement& x, bool (*member)(const Rational&)) {
  std::vector<Index> add_pts, drop_pts;
  for (const auto& [n, v] : x.exceptions())
    (member(v) ? add_pts : drop_pts).push_back(n);
  base = unite(base, EPSet::finite(add_pts));
  return difference(base, EPSet::finite(drop_pts));
}

} // namespace

EPSet zero_set(const PwElement& x) {
  EPSet zeros;
  for (const auto& p : x.pieces()) {
    if (p.poly.is_zero())
      zeros = unite(zeros, p.region);
    else
      zeros = unite(zeros, intersect(p.region, EPSet::finite(p.poly.natural_roots())));
  }
  return apply_pointwise(std::move(zeros), x, [](const Rational& v) { return v == 0; });
}

EPSet le_set(const PwElement& x, const PwElement& y) {
  const PwElement d = sub(y, x);
  EPSet result;
  for (const auto& p : d.pieces()) {
    if (p.poly.is_zero()) {
      result = unite(result, p.region);
      continue;
    }
    const Index bound = p.poly.sign_bound();
    std::vector<Index> below;
    for (auto n = p.region.next_member(0); n && *n < bound; n = p.region.next_member(*n + 1))
      if (p.poly.sign_at(*n) >= 0)
        below.push_back(*n);
    result = unite(result, EPSet::finite(below));
    if (p.poly.leading() > 0)
      result = unite(result, intersect(p.region, EPSet::at_least(bound)));
  }
  return apply_pointwise(std::move(result), d, [](const Rational& v) { return v >= 0; });
}

PwElement restrict(const PwElement& x, const EPSet& subcarrier) {
  if (subcarrier.is_finite() || !is_subset(subcarrier, x.carrier()))
    throw Error(ErrorCode::RestrictionInvalid,
                subcarrier.to_string() + " is not an infinite subset of " + x.carrier().to_string());
  std::vector<Piece> pieces;
  for (const auto& p : x.pieces()) {
    EPSet region = intersect(p.region, subcarrier);
    if (!region.is_empty())
      pieces.push_back({std::move(region), p.poly});
  }
  std::map<Index, Rational> exceptions;
  for (const auto& [n, v] : x.exceptions())
    if (subcarrier.contains(n))
      exceptions.emplace(n, v);
  return PwElement(subcarrier, std::move(pieces), std::move(exceptions));
}

PwElement extend_by_zero(const PwElement& y, const EPSet& carrier) {
  if (!is_subset(y.carrier(), carrier))
    throw Error(ErrorCode::RestrictionInvalid,
                y.carrier().to_string() + " is not a subset of " + carrier.to_string());
  std::vector<Piece> pieces = y.pieces();
  EPSet outside = difference(carrier, y.carrier());
  if (!outside.is_empty())
    pieces.push_back({std::move(outside), Polynomial()});
  return PwElement(carrier, std::move(pieces), y.exceptions());
}

std::optional<std::size_t> max_tail_degree(const PwElement& x, const EPSet& within) {
  std::optional<std::size_t> best;
  for (const auto& p : x.pieces()) {
    if (intersect(p.region, within).is_finite())
      continue;
    if (auto d = p.poly.degree(); d && (!best || *d > *best))
      best = d;
  }
  return best;
}

} // namespace redpow
