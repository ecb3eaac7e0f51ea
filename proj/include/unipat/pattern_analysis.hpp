#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "unipat/digraph.hpp"

namespace unipat {

enum class Side { rows, columns };

std::string_view side_name(Side side);

/// Two distinct rows (or columns) whose supports meet in exactly one index.
struct LinePair {
  Side side;
  std::size_t first;
  std::size_t second;

  friend bool operator==(const LinePair&, const LinePair&) = default;
};

struct QuadrangularCheck {
  bool quadrangular;
  std::optional<LinePair> violation;

  explicit operator bool() const noexcept { return quadrangular; }
};

/// No two rows, and no two columns, share exactly one support index.
/// Rows are scanned before columns, pairs in lexicographic order.
QuadrangularCheck check_quadrangular(const Pattern& p);
bool is_quadrangular(const Pattern& p);

/// A set S of rows (or columns) certifying that no unitary matrix has the
/// pattern: each member of S meets another member, and the indices covered
/// by at least two members (`shared`) number fewer than |S|. Restricted to
/// `shared`, the rows of S would be |S| nonzero pairwise orthogonal vectors
/// in a space of smaller dimension.
struct SqWitness {
  Side side;
  IndexSet members;
  IndexSet shared;

  friend bool operator==(const SqWitness&, const SqWitness&) = default;
};

enum class SqStatus { holds, violated, undecided };

struct SqCheck {
  SqStatus status;
  std::optional<SqWitness> witness;
  /// Largest connected component of the row/column overlap graphs.
  std::size_t largest_component = 0;
};

struct SqOptions {
  /// Components larger than this are not searched; the result is `undecided`.
  std::size_t cap = 20;
};

/// Exact strong-quadrangularity test by subset search inside the overlap
/// components. On violation the witness has minimum |S|; ties go to rows
/// over columns, then to the lexicographically smallest S.
/// Throws PreconditionError if `p` is not well-formed.
SqCheck check_strongly_quadrangular(const Pattern& p, const SqOptions& options = {});

/// Throws LimitExceeded when the search is undecided.
bool is_strongly_quadrangular(const Pattern& p, const SqOptions& options = {});

/// Checks the SqWitness invariants against `p`.
bool validate_witness(const Pattern& p, const SqWitness& w);

struct SpecularBlock {
  IndexSet rows;
  IndexSet cols;

  friend bool operator==(const SpecularBlock&, const SpecularBlock&) = default;
};

/// Decomposition of a specular pattern into independent all-ones blocks.
struct SpecularBlocks {
  std::vector<SpecularBlock> blocks;
  /// Row classes and column classes partition the index set, each block is
  /// all ones, and every entry outside the blocks is zero.
  bool independent = false;
};

struct SpecularCheck {
  bool specular;
  std::optional<SpecularBlocks> blocks;
  std::optional<LinePair> violation;

  explicit operator bool() const noexcept { return specular; }
};

/// Any two row supports are equal or disjoint, and likewise for columns.
/// Blocks are ordered by their smallest row.
SpecularCheck check_specular(const Pattern& p);
bool is_specular(const Pattern& p);

/// A pattern is the pattern of a line digraph iff it is specular.
bool is_line_digraph(const Pattern& p);

/// Every block has as many rows as columns.
bool square_blocks(const SpecularBlocks& blocks);

}  // namespace unipat
