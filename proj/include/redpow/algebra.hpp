#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "redpow/element.hpp"
#include "redpow/filter.hpp"

namespace redpow {

/// The reduced power algebra A_F = Q^Λ / I_F of an admissible filter F on Λ.
/// Two algebras compare equal when their filters are equivalent.
class Algebra {
public:
  explicit Algebra(Filter filter) : filter_(std::move(filter)) {}

  const Filter& filter() const noexcept { return filter_; }
  const EPSet& carrier() const noexcept { return filter_.carrier(); }
  std::string describe() const { return "A[" + filter_.describe() + "]"; }

  friend bool operator==(const Algebra& a, const Algebra& b) { return equivalent(a.filter_, b.filter_); }

private:
  Filter filter_;
};

/// x + I_F. The representative must live on the algebra's carrier.
class Coset {
public:
  /// Throws CarrierMismatch when rep.carrier() differs from the algebra's.
  Coset(Algebra algebra, PwElement rep);

  const Algebra& algebra() const noexcept { return algebra_; }
  const PwElement& rep() const noexcept { return rep_; }

private:
  Algebra algebra_;
  PwElement rep_;
};

/// x ≡ y  <=>  Z(x - y) ∈ F. Throws AlgebraMismatch.
bool coset_eq(const Coset& x, const Coset& y);
Coset coset_add(const Coset& x, const Coset& y);
Coset coset_sub(const Coset& x, const Coset& y);
Coset coset_mul(const Coset& x, const Coset& y);
Coset coset_neg(const Coset& x);
Coset coset_scalar_mul(const Rational& c, const Coset& x);

/// The scalar embedding ξ ↦ ξ + I_F.
Coset embed(const Rational& xi, const Algebra& algebra);

/// x ∈ I_F  <=>  Z(x) ∈ F. Throws CarrierMismatch.
bool ideal_member(const PwElement& x, const Filter& filter);

/// Finitely generated ideal of Q^Λ, optionally joined with the ideal of the
/// Fréchet filter (functions vanishing off a finite set).
struct FGIdeal {
  EPSet carrier;
  std::vector<PwElement> generators;
  bool includes_frechet_ideal = false;

  /// Intersection of the generators' zero sets (the carrier if there are none).
  EPSet common_zero_set() const;
};

/// The quotient is a plain power algebra Q^n because the ideal's zero sets
/// share only n points.
struct DegenerateReport {
  Index n;
  EPSet zero_set;

  std::string remark() const;
};

/// F_I for a finitely generated ideal. Throws EmptyIdeal when there are no
/// generators and no Fréchet part, DegenerateFilter when the ideal is not
/// proper (finite common zero set joined with the Fréchet ideal).
std::variant<Filter, DegenerateReport> filter_of_ideal(const FGIdeal& ideal);

/// F -> I_F -> F_{I_F} returns a filter equivalent to F.
bool correspondence_idempotent(const Filter& filter);

enum class HomKind { Coarsen, Restrict, Composite };

/// Surjective algebra homomorphism between reduced power algebras: a
/// coarsening A_F -> A_G (F ⊆ G), a restriction A_F -> A_{F|Λ} (Λ ∈ F), or a
/// left-to-right composite of those.
class Hom {
public:
  HomKind kind() const noexcept { return kind_; }
  const Algebra& source() const noexcept { return source_; }
  const Algebra& target() const noexcept { return target_; }
  /// Primitive steps of a composite, in application order; {*this} otherwise.
  std::vector<Hom> steps() const;

  std::string describe() const;

  friend Hom make_hom_coarsen(const Algebra& source, const Algebra& target);
  friend Hom make_hom_restrict(const Algebra& source, const EPSet& subcarrier);
  friend Hom compose(const Hom& first, const Hom& second);
  friend Coset apply(const Hom& h, const Coset& x);

private:
  Hom(HomKind kind, Algebra source, Algebra target)
      : kind_(kind), source_(std::move(source)), target_(std::move(target)) {}

  HomKind kind_;
  Algebra source_;
  Algebra target_;
  std::vector<Hom> steps_; // composite only, already flattened
};

/// Throws CarrierMismatch or NotSubfilter.
Hom make_hom_coarsen(const Algebra& source, const Algebra& target);
/// Throws RestrictionInvalid unless the subcarrier is a member of the source filter.
Hom make_hom_restrict(const Algebra& source, const EPSet& subcarrier);
/// first, then second. Throws CompositionMismatch.
Hom compose(const Hom& first, const Hom& second);
/// The canonical hom between two algebras: a coarsening on a shared carrier,
/// or restriction to the target's carrier followed by a coarsening.
Hom make_hom(const Algebra& source, const Algebra& target);

/// Throws AlgebraMismatch if x does not live in h.source().
Coset apply(const Hom& h, const Coset& x);

/// apply(h, x) ≡ 0 decided through ideal membership in the target filter.
/// Throws UnsupportedHomKind unless h is a single coarsening.
bool kernel_member(const Hom& h, const Coset& x);

/// True iff both paths agree on every sample. Throws PathMismatch when the
/// paths do not share source and target.
bool check_commutes(const Hom& path1, const Hom& path2, std::span<const Coset> samples);

/// x <= y  <=>  {λ : x(λ) <= y(λ)} ∈ F. Throws AlgebraMismatch.
bool leq(const Coset& x, const Coset& y);

/// Indicators of the two halves of the core split by enumeration parity:
/// their product is 0 while neither factor is.
std::pair<Coset, Coset> zero_divisor_pair(const Algebra& algebra);

/// Degree-dominance evidence that x <= n*u fails in A_F for every natural n.
struct ArchimedeanCertificate {
  struct Entry {
    EPSet region;                         // infinite part of the core
    std::optional<std::size_t> u_degree;  // nullopt: u vanishes there
    std::size_t x_degree;
    Rational x_leading;
  };
  std::vector<Entry> entries;

  std::string summary() const;
};

struct ArchimedeanWitness {
  Coset x;
  ArchimedeanCertificate certificate;
};

/// For u >= 0 builds x = u + l^(d+1), d the top tail degree of u on the core
/// (x = u + l when u vanishes on the core). Throws NotNonnegative.
ArchimedeanWitness archimedean_counterexample(const Algebra& algebra, const Coset& u);

/// Checks the certificate's claims against u and x directly: the entries cover
/// the core up to a finite set, and on each one x has a positive leading
/// coefficient and a degree above every piece of u. Also requires x >= 0.
bool verify_certificate(const Coset& u, const Coset& x, const ArchimedeanCertificate& cert);

} // namespace redpow
