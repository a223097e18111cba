#include "redpow/random.hpp"

#include "redpow/error.hpp"

namespace redpow::random {

std::uint64_t mix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

Rational small_rational(Source& src) {
  Rational q(src.between(-4, 4), src.between(1, 3));
  q.canonicalize();
  return q;
}

EPSet any_set(Source& src) {
  const Index period = 1 + src.below(6);
  const Index threshold = src.below(9);
  std::vector<Index> residues;
  std::vector<Index> head;
  for (Index r = 0; r < period; ++r)
    if (src.chance(1, 2))
      residues.push_back(r);
  for (Index n = 0; n < threshold; ++n)
    if (src.chance(1, 2))
      head.push_back(n);
  return EPSet(threshold, period, residues, head);
}

EPSet infinite_set(Source& src) {
  for (;;) {
    EPSet s = any_set(src);
    if (!s.is_finite())
      return s;
  }
}

EPSet infinite_subset(Source& src, const EPSet& of) {
  for (int attempt = 0; attempt < 32; ++attempt) {
    EPSet s = intersect(of, infinite_set(src));
    if (!s.is_finite())
      return s;
  }
  return of;
}

Polynomial polynomial(Source& src) {
  switch (src.below(6)) {
  case 0:
    return Polynomial();
  case 1: {
    Polynomial p = Polynomial::constant(small_rational(src));
    const auto roots = 1 + src.below(2);
    for (std::uint64_t i = 0; i < roots; ++i)
      p *= Polynomial({Rational(-static_cast<long>(src.below(13))), Rational(1)});
    return p;
  }
  default: {
    std::vector<Rational> c(1 + src.below(4));
    for (auto& x : c)
      x = src.chance(3, 4) ? small_rational(src) : Rational(0);
    return Polynomial(std::move(c));
  }
  }
}

PwElement element(Source& src, const EPSet& carrier) {
  std::vector<EPSet> regions{carrier};
  const auto splits = src.below(3);
  for (std::uint64_t i = 0; i < splits; ++i) {
    const auto k = src.below(regions.size());
    EPSet cut = infinite_set(src);
    EPSet inside = intersect(regions[k], cut);
    EPSet outside = difference(regions[k], cut);
    if (inside.is_empty() || outside.is_empty())
      continue;
    regions[k] = std::move(inside);
    regions.push_back(std::move(outside));
  }
  std::vector<Piece> pieces;
  for (auto& r : regions)
    pieces.push_back({std::move(r), polynomial(src)});

  std::map<Index, Rational> exceptions;
  const auto members = carrier.enumerate(20);
  const auto count = src.below(3);
  for (std::uint64_t i = 0; i < count; ++i)
    exceptions[members[src.below(members.size())]] = src.chance(1, 3) ? Rational(0) : small_rational(src);
  return PwElement(carrier, std::move(pieces), std::move(exceptions));
}

Filter filter(Source& src, const EPSet& carrier, unsigned max_generators) {
  for (;;) {
    std::vector<EPSet> generators;
    const auto count = src.below(max_generators + 1);
    for (std::uint64_t i = 0; i < count; ++i)
      generators.push_back(src.chance(1, 4) ? carrier : infinite_subset(src, carrier));
    try {
      return Filter::generated(carrier, std::move(generators));
    } catch (const Error& e) {
      if (e.code() != ErrorCode::DegenerateFilter)
        throw;
    }
  }
}

} // namespace redpow::random
