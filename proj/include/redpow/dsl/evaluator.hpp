#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "redpow/dsl/ast.hpp"

namespace redpow::dsl {

/// Outcome of one query in one algebra (or one grid square / edge).
struct Result {
  std::string algebra;
  std::variant<std::monostate, bool, std::string> verdict;
  std::optional<std::string> witness;
  std::optional<std::string> certificate;
  std::optional<std::string> error;
  bool failed = false; // counts towards a non-zero exit status
};

struct QueryReport {
  std::string kind;
  std::vector<std::string> inputs;
  std::vector<Result> results;
};

struct Report {
  std::vector<QueryReport> queries;

  bool failed() const;
  /// Pretty-printed JSON (2-space indent, trailing newline).
  std::string to_json() const;
};

/// Runs every query in every algebra of the program, in statement order.
///
/// The algebras are the declared ones, or, when the program declares none,
/// one per declared filter; equivalent filters are listed once. Elements are
/// evaluated on the algebra's carrier (named elements are restricted to it).
/// Declarations that fail, homs and grids also produce entries. Runtime
/// errors become per-result error strings and never propagate.
///
/// `commutes` samples square (r, c) of a grid from the stream
/// random::Source(seed, r * cols + c).
Report evaluate(const Program& program, std::uint64_t seed = 0);

} // namespace redpow::dsl
