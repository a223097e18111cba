#pragma once

#include <cstdint>
#include <random>

#include "redpow/element.hpp"
#include "redpow/filter.hpp"

namespace redpow::random {

/// splitmix64 finalizer; used to derive independent streams from a seed.
std::uint64_t mix(std::uint64_t x);

/// Deterministic source of small random objects. Draws only use raw
/// mt19937_64 output, so streams are identical across standard libraries.
class Source {
public:
  explicit Source(std::uint64_t seed) : engine_(mix(seed)) {}
  Source(std::uint64_t seed, std::uint64_t stream, std::uint64_t substream = 0)
      : engine_(mix(mix(mix(seed) ^ stream) ^ substream)) {}

  /// Uniform in [0, n).
  std::uint64_t below(std::uint64_t n) { return engine_() % n; }
  /// Uniform in [lo, hi].
  std::int64_t between(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }
  bool chance(unsigned num, unsigned den) { return below(den) < num; }

private:
  std::mt19937_64 engine_;
};

/// Numerator in [-4, 4], denominator in [1, 3].
Rational small_rational(Source& src);

/// Any EPSet (possibly finite or empty), periods up to 6, thresholds up to 8.
EPSet any_set(Source& src);
/// An infinite EPSet.
EPSet infinite_set(Source& src);
/// An infinite subset of `of`, which must be infinite.
EPSet infinite_subset(Source& src, const EPSet& of);

/// Degree at most 3; mixes random coefficients, products of (l - r) with
/// small natural roots, and the zero polynomial.
Polynomial polynomial(Source& src);

/// One to three pieces over random splits of the carrier, plus up to two
/// exceptions among the first 20 carrier members.
PwElement element(Source& src, const EPSet& carrier);

/// Admissible filter on `carrier` with 0 to max_generators generators.
Filter filter(Source& src, const EPSet& carrier, unsigned max_generators = 3);

} // namespace redpow::random
