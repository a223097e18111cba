#include "redpow/epset.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "redpow/error.hpp"

namespace redpow {

namespace {

template <typename Op>
EPSet combine(const EPSet& a, const EPSet& b, Op op) {
  const Index threshold = std::max(a.threshold(), b.threshold());
  const Index period = lcm_period(a.period(), b.period());
  std::vector<bool> window(threshold + period);
  for (Index n = 0; n < window.size(); ++n)
    window[n] = op(a.contains(n), b.contains(n));
  return EPSet::from_window(threshold, period, window);
}

// Prints a sorted list of naturals, collapsing runs of three or more into a..b.
std::string format_members(const std::vector<Index>& members) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < members.size();) {
    std::size_t j = i;
    while (j + 1 < members.size() && members[j + 1] == members[j] + 1)
      ++j;
    if (i > 0)
      os << ',';
    if (j - i >= 2) {
      os << members[i] << ".." << members[j];
    } else {
      os << members[i];
      if (j > i)
        os << ',' << members[j];
    }
    i = j + 1;
  }
  os << '}';
  return os.str();
}

} // namespace

Index lcm_period(Index a, Index b) { return std::lcm(a, b); }

EPSet::EPSet() : residues_(1, false) {}

EPSet::EPSet(Index threshold, Index period, const std::vector<Index>& residues,
             const std::vector<Index>& head)
    : threshold_(threshold), period_(period) {
  if (period == 0)
    throw std::invalid_argument("EPSet period must be positive");
  residues_.assign(period, false);
  head_.assign(threshold, false);
  for (Index r : residues) {
    if (r >= period)
      throw std::invalid_argument("EPSet residue out of range");
    residues_[r] = true;
  }
  for (Index h : head) {
    if (h >= threshold)
      throw std::invalid_argument("EPSet head member not below threshold");
    head_[h] = true;
  }
  canonicalize();
}

EPSet EPSet::naturals() { return EPSet(0, 1, {0}, {}); }

EPSet EPSet::progression(Index residue, Index period) {
  if (period == 0)
    throw std::invalid_argument("progression period must be positive");
  return EPSet(0, period, {residue % period}, {});
}

EPSet EPSet::finite(const std::vector<Index>& members) {
  if (members.empty())
    return EPSet();
  const Index top = *std::max_element(members.begin(), members.end());
  return EPSet(top + 1, 1, {}, members);
}

EPSet EPSet::range(Index lo, Index hi) {
  std::vector<Index> members;
  for (Index n = lo; n < hi; ++n)
    members.push_back(n);
  return finite(members);
}

EPSet EPSet::at_least(Index lo) {
  std::vector<Index> head;
  return EPSet(lo, 1, {0}, head);
}

EPSet EPSet::from_window(Index threshold, Index period, const std::vector<bool>& window) {
  if (period == 0 || window.size() != threshold + period)
    throw std::invalid_argument("EPSet window has wrong size");
  EPSet s;
  s.threshold_ = threshold;
  s.period_ = period;
  s.head_.assign(window.begin(), window.begin() + static_cast<std::ptrdiff_t>(threshold));
  s.residues_.assign(period, false);
  for (Index n = threshold; n < threshold + period; ++n)
    s.residues_[n % period] = window[n];
  s.canonicalize();
  return s;
}

void EPSet::canonicalize() {
  // Minimal period: it divides the current one.
  for (Index d = 1; d <= period_; ++d) {
    if (period_ % d != 0)
      continue;
    bool periodic = true;
    for (Index r = d; r < period_ && periodic; ++r)
      periodic = residues_[r] == residues_[r % d];
    if (periodic) {
      residues_.resize(d);
      period_ = d;
      break;
    }
  }
  // Minimal threshold for that period.
  while (threshold_ > 0 && head_[threshold_ - 1] == residues_[(threshold_ - 1) % period_])
    --threshold_;
  head_.resize(threshold_);
}

std::vector<Index> EPSet::residues() const {
  std::vector<Index> out;
  for (Index r = 0; r < period_; ++r)
    if (residues_[r])
      out.push_back(r);
  return out;
}

std::vector<Index> EPSet::head() const {
  std::vector<Index> out;
  for (Index n = 0; n < threshold_; ++n)
    if (head_[n])
      out.push_back(n);
  return out;
}

bool EPSet::contains(Index n) const noexcept {
  if (n < threshold_)
    return head_[n];
  return residues_[n % period_];
}

bool EPSet::is_empty() const noexcept { return threshold_ == 0 && is_finite(); }

bool EPSet::is_finite() const noexcept {
  return std::none_of(residues_.begin(), residues_.end(), [](bool b) { return b; });
}

std::optional<Index> EPSet::size() const {
  if (!is_finite())
    return std::nullopt;
  return static_cast<Index>(std::count(head_.begin(), head_.end(), true));
}

std::optional<Index> EPSet::next_member(Index from) const {
  for (Index n = from; n < threshold_; ++n)
    if (head_[n])
      return n;
  if (is_finite())
    return std::nullopt;
  const Index start = std::max(from, threshold_);
  for (Index n = start; n < start + period_; ++n)
    if (residues_[n % period_])
      return n;
  return std::nullopt;
}

std::vector<Index> EPSet::enumerate(std::size_t count) const {
  if (auto n = size(); n && *n < count)
    throw Error(ErrorCode::InsufficientElements,
                "requested " + std::to_string(count) + " members of a set with " +
                    std::to_string(*n));
  std::vector<Index> out;
  out.reserve(count);
  Index from = 0;
  while (out.size() < count) {
    const Index m = *next_member(from);
    out.push_back(m);
    from = m + 1;
  }
  return out;
}

EPSet EPSet::tail() const {
  return EPSet(0, period_, residues(), {});
}

EPSet EPSet::even_positions() const {
  const Index period = 2 * period_;
  std::vector<bool> window(threshold_ + period, false);
  bool take = true;
  for (Index n = 0; n < window.size(); ++n) {
    if (contains(n)) {
      window[n] = take;
      take = !take;
    }
  }
  return from_window(threshold_, period, window);
}

std::string EPSet::to_string() const {
  const auto hd = head();
  const auto res = residues();
  if (hd.empty() && res.empty())
    return "{}";

  std::string tail_text;
  if (!res.empty()) {
    if (period_ == 1) {
      tail_text = "nat";
    } else {
      for (std::size_t i = 0; i < res.size(); ++i) {
        if (i > 0)
          tail_text += " | ";
        tail_text += "AP(" + std::to_string(res[i]) + "," + std::to_string(period_) + ")";
      }
    }
    const bool compound = res.size() > 1 && period_ > 1;
    if (threshold_ > 0) {
      std::vector<Index> prefix(threshold_);
      std::iota(prefix.begin(), prefix.end(), Index{0});
      tail_text += " \\ " + format_members(prefix);
      if (!hd.empty())
        tail_text = "(" + tail_text + ")";
    } else if (compound && !hd.empty()) {
      tail_text = "(" + tail_text + ")";
    }
  }
  if (hd.empty())
    return tail_text;
  if (tail_text.empty())
    return format_members(hd);
  return format_members(hd) + " | " + tail_text;
}

EPSet intersect(const EPSet& a, const EPSet& b) {
  return combine(a, b, [](bool x, bool y) { return x && y; });
}

EPSet unite(const EPSet& a, const EPSet& b) {
  return combine(a, b, [](bool x, bool y) { return x || y; });
}

EPSet difference(const EPSet& a, const EPSet& b) {
  return combine(a, b, [](bool x, bool y) { return x && !y; });
}

EPSet complement(const EPSet& a) { return difference(EPSet::naturals(), a); }

bool is_subset(const EPSet& a, const EPSet& b) { return difference(a, b).is_empty(); }

bool almost_equal(const EPSet& a, const EPSet& b) { return a.tail() == b.tail(); }

std::ostream& operator<<(std::ostream& os, const EPSet& s) { return os << s.to_string(); }

} // namespace redpow
