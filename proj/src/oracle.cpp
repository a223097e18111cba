#include "redpow/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "redpow/error.hpp"

namespace redpow::oracle {

namespace {

// Fixed-size bitset over a runtime number of positions.
class Bits {
public:
  explicit Bits(std::size_t size) : words_((size + 63) / 64, 0) {}

  void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
  bool test(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1U; }

  bool subset_of(const Bits& o) const {
    for (std::size_t w = 0; w < words_.size(); ++w)
      if (words_[w] & ~o.words_[w])
        return false;
    return true;
  }

  friend bool operator==(const Bits&, const Bits&) = default;

private:
  std::vector<std::uint64_t> words_;
};

// An element of Q^n together with its zero pattern.
struct Witness {
  std::vector<Rational> coords;
  Subset zeros;
};

// Two vectors per zero pattern with unrelated non-zero entries.
std::vector<Witness> make_witnesses(const FiniteModel& m) {
  std::vector<Witness> out;
  out.reserve(2 * m.subset_count());
  for (Subset z = 0; z <= m.full(); ++z) {
    for (int variant = 0; variant < 2; ++variant) {
      Witness w{std::vector<Rational>(m.n()), 0};
      for (unsigned i = 0; i < m.n(); ++i) {
        if (z & (Subset{1} << i))
          continue;
        w.coords[i] = variant == 0 ? Rational(1) : Rational(-static_cast<long>(i) - 2, 3);
      }
      for (unsigned i = 0; i < m.n(); ++i)
        if (w.coords[i] == 0)
          w.zeros |= Subset{1} << i;
      out.push_back(std::move(w));
    }
  }
  return out;
}

// x ∈ I_S, decided from coordinates.
bool in_zero_set_ideal(const Witness& x, Subset s, unsigned n) {
  for (unsigned i = 0; i < n; ++i)
    if ((s & (Subset{1} << i)) && x.coords[i] != 0)
      return false;
  return true;
}

} // namespace

FiniteModel::FiniteModel(unsigned n) : n_(n) {
  if (n < 1 || n > 12)
    throw Error(ErrorCode::InvalidModel, "finite model size must be in 1..12, got " + std::to_string(n));
}

std::vector<FiniteFilter> enumerate_filters(const FiniteModel& model) {
  std::vector<FiniteFilter> out;
  for (Subset g = 1; g <= model.full(); ++g) {
    FiniteFilter f{g, {}};
    for (Subset j = 0; j <= model.full(); ++j)
      if ((j & g) == g)
        f.members.push_back(j);
    out.push_back(std::move(f));
  }
  return out;
}

CorrespondenceReport verify_correspondence(const FiniteModel& model) {
  CorrespondenceReport rep;
  rep.n = model.n();
  const unsigned n = model.n();
  const auto filters = enumerate_filters(model);
  const auto witnesses = make_witnesses(model);
  const std::size_t subsets = model.subset_count();
  rep.filters = filters.size();

  auto fail = [&](std::string msg) { rep.failures.push_back(std::move(msg)); };

  // Filters as bitmaps over subsets, and I_F as bitmaps over witnesses.
  std::vector<Bits> filter_bits;
  std::vector<Bits> ideal_of_filter;
  for (const auto& f : filters) {
    Bits fb(subsets);
    for (Subset j : f.members)
      fb.set(j);

    if (fb.test(0))
      fail("filter " + std::to_string(f.generator) + " contains the empty set");
    Subset meet = model.full();
    for (Subset j : f.members) {
      meet &= j;
      for (unsigned i = 0; i < n; ++i)
        if (!fb.test(j | (Subset{1} << i)))
          fail("filter " + std::to_string(f.generator) + " is not upward closed");
    }
    // Upward closed with its own meet as a member means closed under ∩.
    if (!fb.test(meet))
      fail("filter " + std::to_string(f.generator) + " is not closed under intersection");

    Bits ib(witnesses.size());
    for (std::size_t w = 0; w < witnesses.size(); ++w)
      if (fb.test(witnesses[w].zeros))
        ib.set(w);

    // F_{I_F}: zero patterns of the members of I_F.
    Bits back(subsets);
    for (std::size_t w = 0; w < witnesses.size(); ++w)
      if (ib.test(w))
        back.set(witnesses[w].zeros);
    if (back == fb)
      ++rep.filter_round_trips;
    else
      fail("F_{I_F} != F for generator " + std::to_string(f.generator));

    filter_bits.push_back(std::move(fb));
    ideal_of_filter.push_back(std::move(ib));
  }

  // Proper zero-set ideals I_S, S non-empty.
  std::vector<Bits> ideal_bits;
  std::vector<Bits> filter_of_ideal_bits;
  std::vector<std::size_t> image(subsets, subsets);
  for (Subset s = 1; s <= model.full(); ++s) {
    Bits ib(witnesses.size());
    Bits fi(subsets);
    for (std::size_t w = 0; w < witnesses.size(); ++w) {
      if (in_zero_set_ideal(witnesses[w], s, n)) {
        ib.set(w);
        fi.set(witnesses[w].zeros);
      }
    }
    // I_{F_I}: witnesses whose zero pattern lies in F_I.
    Bits back(witnesses.size());
    for (std::size_t w = 0; w < witnesses.size(); ++w)
      if (fi.test(witnesses[w].zeros))
        back.set(w);
    if (back == ib)
      ++rep.ideal_round_trips;
    else
      fail("I_{F_I} != I for S = " + std::to_string(s));

    for (std::size_t k = 0; k < filter_bits.size(); ++k)
      if (filter_bits[k] == fi)
        image[s] = k;
    if (image[s] == subsets)
      fail("F_I is not one of the enumerated filters for S = " + std::to_string(s));
    ideal_bits.push_back(std::move(ib));
    filter_of_ideal_bits.push_back(std::move(fi));
  }
  rep.ideals = ideal_bits.size();

  std::vector<bool> hit(filters.size(), false);
  bool injective = true;
  for (Subset s = 1; s <= model.full(); ++s) {
    if (image[s] == subsets)
      continue;
    if (hit[image[s]])
      injective = false;
    hit[image[s]] = true;
  }
  rep.bijection = injective && std::all_of(hit.begin(), hit.end(), [](bool b) { return b; }) &&
                  rep.ideals == rep.filters;

  // Monotonicity in both directions over all pairs.
  rep.monotone = true;
  for (std::size_t a = 0; a < filters.size(); ++a) {
    for (std::size_t b = a + 1; b < filters.size(); ++b) {
      ++rep.pairs_checked;
      bool comparable = false;
      for (auto [i, j] : {std::pair{a, b}, std::pair{b, a}}) {
        if (filter_bits[i].subset_of(filter_bits[j])) {
          comparable = true;
          if (!ideal_of_filter[i].subset_of(ideal_of_filter[j]))
            rep.monotone = false;
        }
        if (ideal_bits[i].subset_of(ideal_bits[j]) &&
            !filter_of_ideal_bits[i].subset_of(filter_of_ideal_bits[j]))
          rep.monotone = false;
      }
      if (comparable)
        ++rep.comparable_pairs;
    }
  }
  if (!rep.monotone)
    fail("monotonicity violated");
  return rep;
}

std::string CorrespondenceReport::to_text() const {
  std::ostringstream os;
  os << "finite model n=" << n << "\n"
     << "filters: " << filters << "\n"
     << "ideals: " << ideals << "\n"
     << "bijection: " << (bijection ? "yes" : "no") << "\n"
     << "round trips F -> I_F -> F: " << filter_round_trips << "/" << filters << "\n"
     << "round trips I -> F_I -> I: " << ideal_round_trips << "/" << ideals << "\n"
     << "monotonicity pairs checked: " << pairs_checked << " (" << comparable_pairs
     << " comparable)\n";
  for (const auto& f : failures)
    os << "failure: " << f << "\n";
  os << (passed() ? "PASS" : "FAIL") << "\n";
  return os.str();
}

namespace {

struct Periodicity {
  Index threshold = 0;
  Index period = 1;
};

Periodicity periodicity(const PwElement& x, const PwElement& y, const Filter& filter) {
  Periodicity out;
  auto absorb = [&](const EPSet& s) {
    out.threshold = std::max(out.threshold, s.threshold());
    out.period = std::lcm(out.period, s.period());
  };
  absorb(filter.carrier());
  absorb(filter.core());
  for (const auto* e : {&x, &y}) {
    absorb(e->carrier());
    for (const auto& p : e->pieces())
      absorb(p.region);
    if (!e->exceptions().empty())
      out.threshold = std::max(out.threshold, e->exceptions().rbegin()->first + 1);
  }
  return out;
}

} // namespace

Index required_horizon(const PwElement& x, const PwElement& y, const Filter& filter) {
  const auto p = periodicity(x, y, filter);
  return p.threshold + 2 * p.period;
}

bool brute_force_coset_eq(const PwElement& x, const PwElement& y, const Filter& filter,
                          Index horizon) {
  if (!(x.carrier() == filter.carrier()) || !(y.carrier() == filter.carrier()))
    throw Error(ErrorCode::CarrierMismatch, "operands and filter live on different carriers");
  const auto p = periodicity(x, y, filter);
  if (horizon < p.threshold + 2 * p.period)
    throw Error(ErrorCode::HorizonTooSmall,
                "horizon " + std::to_string(horizon) + " below " +
                    std::to_string(p.threshold + 2 * p.period));
  const EPSet& core = filter.core();
  for (Index n = std::max(p.threshold, horizon / 2); n < horizon; ++n) {
    if (core.contains(n) && x.eval(n) != y.eval(n))
      return false;
  }
  return true;
}

} // namespace redpow::oracle
