#include "redpow/filter.hpp"

#include "redpow/error.hpp"

namespace redpow {

Filter::Filter(EPSet carrier, std::vector<EPSet> generators, EPSet core)
    : carrier_(std::move(carrier)), generators_(std::move(generators)), core_(std::move(core)) {}

Filter Filter::frechet(const EPSet& carrier) {
  if (carrier.is_finite())
    throw Error(ErrorCode::DegenerateCarrier, "carrier " + carrier.to_string() + " is finite");
  return Filter(carrier, {}, carrier);
}

Filter Filter::generated(const EPSet& carrier, std::vector<EPSet> generators) {
  if (carrier.is_finite())
    throw Error(ErrorCode::DegenerateCarrier, "carrier " + carrier.to_string() + " is finite");
  EPSet core = carrier;
  for (const auto& g : generators) {
    if (!is_subset(g, carrier))
      throw Error(ErrorCode::GeneratorNotInCarrier,
                  g.to_string() + " is not a subset of " + carrier.to_string());
    core = intersect(core, g);
  }
  if (core.is_finite())
    throw Error(ErrorCode::DegenerateFilter,
                "generators meet in the finite set " + core.to_string() +
                    "; the quotient would be the power algebra Q^" +
                    std::to_string(*core.size()));
  return Filter(carrier, std::move(generators), std::move(core));
}

bool Filter::contains(const EPSet& j) const {
  if (!is_subset(j, carrier_))
    throw Error(ErrorCode::NotInCarrier, j.to_string() + " is not a subset of " + carrier_.to_string());
  return difference(core_, j).is_finite();
}

bool Filter::admits_restriction(const EPSet& subcarrier) const {
  if (subcarrier.is_finite() || !is_subset(subcarrier, carrier_))
    throw Error(ErrorCode::RestrictionInvalid,
                subcarrier.to_string() + " is not an infinite subset of " + carrier_.to_string());
  return contains(subcarrier);
}

Filter Filter::restrict(const EPSet& subcarrier) const {
  if (!admits_restriction(subcarrier))
    throw Error(ErrorCode::RestrictionInvalid,
                subcarrier.to_string() + " is not a member of " + describe());
  std::vector<EPSet> generators;
  generators.reserve(generators_.size());
  for (const auto& g : generators_)
    generators.push_back(intersect(g, subcarrier));
  return Filter(subcarrier, std::move(generators), intersect(core_, subcarrier));
}

std::string Filter::describe() const {
  const std::string base = "Fre(" + carrier_.to_string() + ")";
  if (almost_equal(core_, carrier_))
    return base;
  return base + " + [" + intersect(core_.tail(), carrier_).to_string() + "]";
}

bool is_subfilter(const Filter& f, const Filter& g) {
  if (!(f.carrier() == g.carrier()))
    throw Error(ErrorCode::CarrierMismatch,
                f.carrier().to_string() + " vs " + g.carrier().to_string());
  return g.contains(f.core());
}

bool equivalent(const Filter& f, const Filter& g) {
  return f.carrier() == g.carrier() && almost_equal(f.core(), g.core());
}

} // namespace redpow
