#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "redpow/algebra.hpp"

namespace redpow::oracle {

/// Subsets of Λn = {0, ..., n-1} as bitmasks.
using Subset = std::uint32_t;

/// The finite index set Λn with its full subset lattice, 1 <= n <= 12.
class FiniteModel {
public:
  /// Throws Error(InvalidModel) outside 1..12.
  explicit FiniteModel(unsigned n);

  unsigned n() const noexcept { return n_; }
  Subset full() const noexcept { return (Subset{1} << n_) - 1; }
  std::size_t subset_count() const noexcept { return std::size_t{1} << n_; }

private:
  unsigned n_;
};

/// A filter on Λn materialized as its sorted member list.
struct FiniteFilter {
  Subset generator; // the filter is {J : J ⊇ generator}
  std::vector<Subset> members;
};

/// One principal filter per non-empty generator: 2^n - 1 filters.
std::vector<FiniteFilter> enumerate_filters(const FiniteModel& model);

struct CorrespondenceReport {
  unsigned n = 0;
  std::size_t filters = 0;
  std::size_t ideals = 0;
  std::size_t filter_round_trips = 0;  // F_{I_F} = F verified
  std::size_t ideal_round_trips = 0;   // I_{F_I} = I verified
  std::size_t pairs_checked = 0;       // unordered pairs of distinct filters
  std::size_t comparable_pairs = 0;    // of which one contains the other
  bool bijection = false;
  bool monotone = false;
  std::vector<std::string> failures;

  bool passed() const { return failures.empty() && bijection && monotone; }
  std::string to_text() const;
};

/// Exhaustive check on Λn of the correspondence I -> F_I, F -> I_F: filter
/// axioms, both round trips, bijectivity, and monotonicity in both directions.
/// Ideals are the proper zero-set ideals I_S = {x : x vanishes on S}, S ≠ ∅,
/// each tested through explicit vectors in Q^n realizing every zero pattern.
CorrespondenceReport verify_correspondence(const FiniteModel& model);

/// Smallest horizon accepted by brute_force_coset_eq for these operands:
/// largest threshold plus twice the lcm of all periods involved.
Index required_horizon(const PwElement& x, const PwElement& y, const Filter& filter);

/// Decides x ≡ y in A_F by pointwise evaluation on carrier ∩ [0, horizon).
/// The tail verdict reads the window [max(threshold, horizon/2), horizon):
/// core \ Z(x - y) is declared finite iff no core member there is a non-zero
/// of x - y. Throws HorizonTooSmall and CarrierMismatch.
bool brute_force_coset_eq(const PwElement& x, const PwElement& y, const Filter& filter,
                          Index horizon);

} // namespace redpow::oracle
