#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "redpow/algebra.hpp"

namespace redpow {

/**
 * Rectangular diagram of reduced power algebras. Each row shares one carrier
 * and is joined left to right by coarsenings; each column is joined top to
 * bottom by the canonical hom (restriction to the lower carrier, then a
 * coarsening). Every unit square yields two paths from its top-left to its
 * bottom-right corner.
 */
class Grid {
public:
  struct Edge {
    std::size_t row;
    std::size_t col;
    bool horizontal;
    std::optional<Hom> hom; // empty when construction failed
    std::string error;
  };

  /// Records failed edges instead of throwing. Rows must have equal length
  /// (std::invalid_argument otherwise).
  static Grid build(std::vector<std::vector<Algebra>> cells);
  /// Like build() but rethrows the first edge construction error.
  static Grid build_strict(std::vector<std::vector<Algebra>> cells);

  std::size_t rows() const noexcept { return cells_.size(); }
  std::size_t cols() const noexcept { return cells_.empty() ? 0 : cells_.front().size(); }
  const Algebra& cell(std::size_t r, std::size_t c) const { return cells_[r][c]; }
  const std::vector<Edge>& edges() const noexcept { return edges_; }

  const Edge& right_of(std::size_t r, std::size_t c) const;
  const Edge& below(std::size_t r, std::size_t c) const;

private:
  std::vector<std::vector<Algebra>> cells_;
  std::vector<Edge> edges_;
};

struct SquareCheck {
  std::size_t row;
  std::size_t col;
  bool commutes = false;
  std::size_t samples = 0;
  std::string error; // non-empty when an edge of the square is missing
};

/// Checks every unit square on `samples` random cosets of its top-left
/// algebra. Square (r, c) draws from the stream Source(seed, r * cols + c).
std::vector<SquareCheck> check_grid(const Grid& grid, std::uint64_t seed, std::size_t samples);

} // namespace redpow
