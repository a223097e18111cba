#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "redpow/epset.hpp"
#include "redpow/polynomial.hpp"

namespace redpow {

struct Piece {
  EPSet region;
  Polynomial poly;

  friend bool operator==(const Piece&, const Piece&) = default;
};

/**
 * An element x : Λ -> Q of the power algebra Q^Λ, where Λ (the carrier) is an
 * infinite EPSet. The value at λ is the exception value when one is recorded,
 * otherwise the polynomial of the unique piece whose region contains λ.
 *
 * Canonical form, maintained by every constructor and operation:
 *   - regions are infinite, pairwise disjoint, cover the carrier, and carry
 *     pairwise distinct polynomials, ordered by their smallest member;
 *   - finite regions are folded into the first piece as exceptions;
 *   - exceptions that agree with their piece's value are dropped.
 */
class PwElement {
public:
  /// Validates the partition and canonicalizes. Throws DegenerateCarrier for
  /// a finite carrier, CarrierMismatch for a bad partition, OutOfCarrier for
  /// exception keys outside the carrier.
  PwElement(EPSet carrier, std::vector<Piece> pieces, std::map<Index, Rational> exceptions = {});

  static PwElement constant(const Rational& c, const EPSet& carrier);
  static PwElement identity(const EPSet& carrier);
  static PwElement polynomial(const Polynomial& p, const EPSet& carrier);
  /// 1 on set ∩ carrier, 0 elsewhere on the carrier.
  static PwElement indicator(const EPSet& set, const EPSet& carrier);

  const EPSet& carrier() const noexcept { return carrier_; }
  const std::vector<Piece>& pieces() const noexcept { return pieces_; }
  const std::map<Index, Rational>& exceptions() const noexcept { return exceptions_; }

  /// Throws OutOfCarrier if n is not in the carrier.
  Rational eval(Index n) const;
  /// Sign of eval(n) without building the rational.
  int sign_at(Index n) const;

  /// Copy with the exception map extended or overridden by `values`.
  PwElement with_exceptions(const std::map<Index, Rational>& values) const;

  /// DSL text, e.g. `piecewise[AP(0,2): l; AP(1,2): 0] except {3: 5}`.
  std::string to_string() const;

  friend bool operator==(const PwElement&, const PwElement&) = default;

private:
  const Piece& piece_at(Index n) const;
  void canonicalize();

  EPSet carrier_;
  std::vector<Piece> pieces_;
  std::map<Index, Rational> exceptions_;
};

PwElement add(const PwElement& x, const PwElement& y);
PwElement sub(const PwElement& x, const PwElement& y);
PwElement mul(const PwElement& x, const PwElement& y);
PwElement neg(const PwElement& x);
PwElement scalar_mul(const Rational& c, const PwElement& x);

/// Z(x) = {λ ∈ carrier : x(λ) = 0}.
EPSet zero_set(const PwElement& x);

/// {λ ∈ carrier : x(λ) <= y(λ)}. Throws CarrierMismatch.
EPSet le_set(const PwElement& x, const PwElement& y);

/// x|Λ. Throws RestrictionInvalid unless Λ is infinite and Λ ⊆ carrier.
PwElement restrict(const PwElement& x, const EPSet& subcarrier);

/// Extension of y to `carrier` by zero outside y's carrier. Throws
/// RestrictionInvalid unless y.carrier() ⊆ carrier.
PwElement extend_by_zero(const PwElement& y, const EPSet& carrier);

/// Highest degree among pieces whose region meets `within` infinitely;
/// std::nullopt when every such piece is the zero polynomial.
std::optional<std::size_t> max_tail_degree(const PwElement& x, const EPSet& within);

} // namespace redpow
