#pragma once

#include <string>
#include <vector>

#include "redpow/epset.hpp"

namespace redpow {

/**
 * A filter on an infinite index set (the carrier) generated by the Fréchet
 * filter of the carrier together with finitely many EPSet generators.
 *
 * Membership only depends on the core, the intersection of the generators:
 *
 *   J ∈ F  <=>  J ⊆ carrier  and  core \ J is finite.
 *
 * The core is required to be infinite, so every representable filter is
 * proper, contains the Fréchet filter, and has only infinite members.
 * Principal filters with a finite generator cannot be constructed.
 */
class Filter {
public:
  /// Throws DegenerateCarrier if the carrier is finite.
  static Filter frechet(const EPSet& carrier);
  /// Throws GeneratorNotInCarrier for a generator outside the carrier and
  /// DegenerateFilter if the generators meet in a finite set.
  static Filter generated(const EPSet& carrier, std::vector<EPSet> generators);

  const EPSet& carrier() const noexcept { return carrier_; }
  const std::vector<EPSet>& generators() const noexcept { return generators_; }
  const EPSet& core() const noexcept { return core_; }

  /// Throws NotInCarrier if J is not a subset of the carrier.
  bool contains(const EPSet& j) const;

  /// Λ ∈ F. Throws RestrictionInvalid for a finite or out-of-carrier Λ.
  bool admits_restriction(const EPSet& subcarrier) const;

  /// F|Λ = {I ∩ Λ : I ∈ F}. Throws RestrictionInvalid unless Λ ∈ F.
  Filter restrict(const EPSet& subcarrier) const;

  /// Canonical text depending only on the filter as a set family, e.g.
  /// `Fre(nat) + [AP(0,2)]`.
  std::string describe() const;

private:
  Filter(EPSet carrier, std::vector<EPSet> generators, EPSet core);

  EPSet carrier_;
  std::vector<EPSet> generators_;
  EPSet core_;
};

/// F ⊆ G as set families. Throws CarrierMismatch.
bool is_subfilter(const Filter& f, const Filter& g);

/// Mutual subfilters: same carrier and cores differing by a finite set.
bool equivalent(const Filter& f, const Filter& g);

} // namespace redpow
