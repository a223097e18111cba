#pragma once

#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace redpow {

using Index = std::uint64_t;

/**
 * Eventually-periodic subset of the naturals.
 *
 *   S = head ∪ { n >= threshold : n mod period ∈ residues }
 *
 * Values are always kept in canonical form: the period is the minimal period
 * of the tail and, for that period, the threshold is minimal. Two EPSets are
 * therefore equal as sets iff their fields are identical, and operator== is
 * plain field comparison.
 *
 *   AP(0,2)              period 2, residues {0}
 *   {1,3,7}              threshold 8, period 1, residues {}, head {1,3,7}
 *   nat \ {0,1,2}        threshold 3, period 1, residues {0}
 *
 * The empty set is threshold 0, period 1, no residues, no head.
 */
class EPSet {
public:
  /// The empty set.
  EPSet();

  /// Builds and canonicalizes. Head members >= threshold and residues >= period
  /// are rejected with std::invalid_argument.
  EPSet(Index threshold, Index period, const std::vector<Index>& residues,
        const std::vector<Index>& head);

  static EPSet empty() { return EPSet(); }
  static EPSet naturals();
  /// {n : n ≡ residue (mod period)}
  static EPSet progression(Index residue, Index period);
  static EPSet finite(const std::vector<Index>& members);
  static EPSet finite(std::initializer_list<Index> members) {
    return finite(std::vector<Index>(members));
  }
  /// [lo, hi)
  static EPSet range(Index lo, Index hi);
  /// {n : n >= lo}
  static EPSet at_least(Index lo);

  /// Builds a set from its membership bitmap over [0, threshold + period),
  /// where bits beyond `threshold` describe one full period of the tail.
  static EPSet from_window(Index threshold, Index period, const std::vector<bool>& window);

  Index threshold() const noexcept { return threshold_; }
  Index period() const noexcept { return period_; }
  std::vector<Index> residues() const;
  std::vector<Index> head() const;

  bool contains(Index n) const noexcept;
  bool is_empty() const noexcept;
  bool is_finite() const noexcept;
  /// Number of members. Only meaningful for finite sets (std::nullopt otherwise).
  std::optional<Index> size() const;

  /// The `count` smallest members in increasing order.
  /// Throws Error(InsufficientElements) if the set is finite and too small.
  std::vector<Index> enumerate(std::size_t count) const;

  /// Smallest member >= from, if any.
  std::optional<Index> next_member(Index from) const;

  /// The purely periodic set {n : n mod period ∈ residues}. Two sets differ by a
  /// finite set iff their tails are equal.
  EPSet tail() const;

  /// Splits the set by the parity of each member's position in increasing
  /// order: the first, third, fifth, ... members versus the rest.
  EPSet even_positions() const;

  /// Re-parsable text in the DSL set syntax, e.g. `{1} | (AP(0,2) \ {0..3})`.
  std::string to_string() const;

  friend bool operator==(const EPSet&, const EPSet&) = default;

private:
  void canonicalize();

  Index threshold_ = 0;
  Index period_ = 1;
  std::vector<bool> residues_; // size period_
  std::vector<bool> head_;     // size threshold_
};

EPSet intersect(const EPSet& a, const EPSet& b);
EPSet unite(const EPSet& a, const EPSet& b);
EPSet complement(const EPSet& a);
EPSet difference(const EPSet& a, const EPSet& b);
bool is_subset(const EPSet& a, const EPSet& b);

/// True iff a and b differ in only finitely many points.
bool almost_equal(const EPSet& a, const EPSet& b);

Index lcm_period(Index a, Index b);

std::ostream& operator<<(std::ostream& os, const EPSet& s);

} // namespace redpow
