#include "redpow/diagram.hpp"

#include <stdexcept>

#include "redpow/error.hpp"
#include "redpow/random.hpp"

namespace redpow {

namespace {

Grid::Edge make_edge(std::size_t r, std::size_t c, bool horizontal, const Algebra& from,
                     const Algebra& to) {
  Grid::Edge e{r, c, horizontal, std::nullopt, {}};
  try {
    e.hom = horizontal ? make_hom_coarsen(from, to) : make_hom(from, to);
  } catch (const Error& err) {
    e.error = err.what();
  }
  return e;
}

} // namespace

Grid Grid::build(std::vector<std::vector<Algebra>> cells) {
  Grid g;
  for (const auto& row : cells)
    if (row.size() != cells.front().size())
      throw std::invalid_argument("grid rows have different lengths");
  g.cells_ = std::move(cells);
  for (std::size_t r = 0; r < g.rows(); ++r) {
    for (std::size_t c = 0; c < g.cols(); ++c) {
      if (c + 1 < g.cols())
        g.edges_.push_back(make_edge(r, c, true, g.cells_[r][c], g.cells_[r][c + 1]));
      if (r + 1 < g.rows())
        g.edges_.push_back(make_edge(r, c, false, g.cells_[r][c], g.cells_[r + 1][c]));
    }
  }
  return g;
}

Grid Grid::build_strict(std::vector<std::vector<Algebra>> cells) {
  Grid g = build(cells);
  for (const auto& e : g.edges()) {
    if (e.hom)
      continue;
    // Rebuild the failing edge so the original error propagates.
    const Algebra& from = g.cell(e.row, e.col);
    const Algebra& to = e.horizontal ? g.cell(e.row, e.col + 1) : g.cell(e.row + 1, e.col);
    if (e.horizontal)
      make_hom_coarsen(from, to);
    else
      make_hom(from, to);
  }
  return g;
}

const Grid::Edge& Grid::right_of(std::size_t r, std::size_t c) const {
  for (const auto& e : edges_)
    if (e.horizontal && e.row == r && e.col == c)
      return e;
  throw std::out_of_range("no edge right of the cell");
}

const Grid::Edge& Grid::below(std::size_t r, std::size_t c) const {
  for (const auto& e : edges_)
    if (!e.horizontal && e.row == r && e.col == c)
      return e;
  throw std::out_of_range("no edge below the cell");
}

std::vector<SquareCheck> check_grid(const Grid& grid, std::uint64_t seed, std::size_t samples) {
  std::vector<SquareCheck> out;
  for (std::size_t r = 0; r + 1 < grid.rows(); ++r) {
    for (std::size_t c = 0; c + 1 < grid.cols(); ++c) {
      SquareCheck sq{r, c, false, 0, {}};
      const auto& top = grid.right_of(r, c);
      const auto& left = grid.below(r, c);
      const auto& right = grid.below(r, c + 1);
      const auto& bottom = grid.right_of(r + 1, c);
      for (const auto* e : {&top, &left, &right, &bottom}) {
        if (!e->hom && sq.error.empty())
          sq.error = e->error;
      }
      if (sq.error.empty()) {
        const Hom across_then_down = compose(*top.hom, *right.hom);
        const Hom down_then_across = compose(*left.hom, *bottom.hom);
        const Algebra& source = grid.cell(r, c);
        random::Source src(seed, r * grid.cols() + c);
        std::vector<Coset> batch;
        batch.reserve(samples);
        for (std::size_t i = 0; i < samples; ++i)
          batch.emplace_back(source, random::element(src, source.carrier()));
        sq.samples = samples;
        sq.commutes = check_commutes(across_then_down, down_then_across, batch);
      }
      out.push_back(std::move(sq));
    }
  }
  return out;
}

} // namespace redpow
