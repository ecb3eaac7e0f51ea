#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "unipat/complex_matrix.hpp"

namespace unipat {

using Vertex = std::size_t;
using ArcId = std::size_t;

/// Sorted, duplicate-free list of indices.
using IndexSet = std::vector<std::size_t>;

struct Arc {
  Vertex tail;
  Vertex head;

  friend auto operator<=>(const Arc&, const Arc&) = default;
};

/// Labeled multidigraph on vertices 0..n-1. Loops and parallel arcs are
/// allowed; an arc's identity is its position in the arc list.
class Digraph {
 public:
  explicit Digraph(std::size_t n, std::vector<Arc> arcs = {});

  std::size_t vertex_count() const noexcept { return n_; }
  std::size_t arc_count() const noexcept { return arcs_.size(); }
  const std::vector<Arc>& arcs() const noexcept { return arcs_; }
  const Arc& arc(ArcId id) const { return arcs_.at(id); }

  bool has_parallel_arcs() const;

  friend bool operator==(const Digraph&, const Digraph&) = default;

 private:
  std::size_t n_;
  std::vector<Arc> arcs_;
};

/// Square 0/1 matrix: the support of a matrix or the adjacency pattern of a
/// digraph.
class Pattern {
 public:
  explicit Pattern(std::size_t n);

  /// Rows given as strings of '0'/'1', e.g. {"011", "101", "110"}.
  static Pattern from_rows(const std::vector<std::string>& rows);
  /// Bit (i*n + j) of `code` is entry (i,j). Requires n*n <= 64.
  static Pattern from_code(std::size_t n, std::uint64_t code);

  std::size_t size() const noexcept { return n_; }
  bool at(std::size_t i, std::size_t j) const { return cells_[i * n_ + j] != 0; }
  void set(std::size_t i, std::size_t j, bool value) { cells_[i * n_ + j] = value ? 1 : 0; }

  IndexSet row_support(std::size_t i) const;
  IndexSet col_support(std::size_t j) const;
  std::size_t ones() const;

  Pattern transposed() const;

  /// Inverse of from_code. Requires n*n <= 64.
  std::uint64_t code() const;
  /// Rows as '0'/'1' strings.
  std::vector<std::string> rows() const;
  /// Rows joined by '/', e.g. "011/101/110".
  std::string to_string() const;

  friend bool operator==(const Pattern&, const Pattern&) = default;

 private:
  std::size_t n_;
  std::vector<std::uint8_t> cells_;
};

/// Bijection on 0..n-1; index i is sent to image()[i].
class Permutation {
 public:
  explicit Permutation(std::vector<std::size_t> image);
  static Permutation identity(std::size_t n);

  std::size_t size() const noexcept { return image_.size(); }
  std::size_t operator()(std::size_t i) const { return image_[i]; }
  const std::vector<std::size_t>& image() const noexcept { return image_; }
  Permutation inverse() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<std::size_t> image_;
};

struct LabeledArc {
  Vertex tail;
  Vertex head;
  ArcId id;

  friend bool operator==(const LabeledArc&, const LabeledArc&) = default;
};

/// Line-digraph vertex index -> originating arc of the base digraph.
using ArcLabeling = std::vector<LabeledArc>;

struct LineDigraph {
  Digraph digraph;
  ArcLabeling labeling;
};

struct Degrees {
  std::size_t in;
  std::size_t out;

  friend bool operator==(const Degrees&, const Degrees&) = default;
};

struct WellFormedness {
  bool ok;
  /// Vertices with no in-arc or no out-arc, ascending.
  std::vector<Vertex> offenders;

  explicit operator bool() const noexcept { return ok; }
};

IndexSet out_neighborhood(const Digraph& d, Vertex v);
IndexSet in_neighborhood(const Digraph& d, Vertex v);

/// In- and out-valency counted with multiplicity.
Degrees degrees(const Digraph& d, Vertex v);

/// Every vertex has invalency equal to outvalency. No connectivity required.
bool is_degree_balanced(const Digraph& d);

/// First vertex whose invalency differs from its outvalency.
std::optional<Vertex> first_unbalanced_vertex(const Digraph& d);

bool is_strongly_connected(const Digraph& d);

/// Strongly connected component id per vertex; ids are numbered in order of
/// each component's smallest vertex.
std::vector<std::size_t> strong_components(const Digraph& d);

WellFormedness well_formed(const Digraph& d);
/// No zero row and no zero column. Offenders are the indices of such lines.
WellFormedness well_formed(const Pattern& p);

/// Vertices of L(D) are the arcs of D in arc-id order; there is an arc a->b
/// iff head(a) == tail(b). L(D) never has parallel arcs.
LineDigraph line_digraph(const Digraph& d);

/// Adjacency pattern; parallel arcs collapse.
Pattern pattern_of(const Digraph& d);
/// One arc per 1-entry, arc ids in row-major order.
Digraph digraph_of(const Pattern& p);
/// 1 where |m_ij| > zero_tol.
Pattern support_of(const ComplexMatrix& m, double zero_tol);

/// Arc (t,h) becomes (rows(t), cols(h)), i.e. M(D') = P M(D) Q.
Digraph apply_permutations(const Digraph& d, const Permutation& rows, const Permutation& cols);
Pattern apply_permutations(const Pattern& p, const Permutation& rows, const Permutation& cols);

struct EquivalenceWitness {
  Permutation rows;
  Permutation cols;
};

/// Exhaustive search for (P,Q) with apply_permutations(a, P, Q) == b.
/// Throws LimitExceeded when the size is above max_n.
std::optional<EquivalenceWitness> permutation_equivalence(const Pattern& a, const Pattern& b,
                                                          std::size_t max_n = 8);

/// Flips every entry of the pattern, diagonal included. D must be simple.
Digraph complement(const Digraph& d);

Digraph disjoint_union(const Digraph& a, const Digraph& b);

/// Adds a loop at every vertex that has none.
Digraph with_loops(const Digraph& d);

enum class Family {
  n_path,                // bidirected path 0-1-...-(n-1), n >= 2
  n_path_loops,          // n_path plus a loop at each vertex, n >= 2
  cycle,                 // bidirected cycle on n distinct vertices, n >= 3
  directed_cycle,        // 0->1->...->(n-1)->0, n >= 2
  complete,              // all n^2 arcs, loops included, n >= 1
  complete_loopless,     // J - I, n >= 2
  petersen,              // fixed 10 vertices; n is ignored
  ladder,                // r K_2 on 2r vertices, n = r >= 1
  random_balanced,       // spanning random cycle plus random cycles, n >= 1
  random_tree,           // bidirected random tree, n >= 2
  random_directed_tree,  // random tree oriented away from vertex 0, n >= 2
};

struct GenerateOptions {
  std::uint64_t seed = 0;
  /// Arc budget for random_balanced; 0 means 2n. Must be >= n.
  std::size_t max_arcs = 0;
};

Digraph generate(Family family, std::size_t n, const GenerateOptions& options = {});

std::optional<Family> family_from_name(std::string_view name);
std::string_view family_name(Family family);

}  // namespace unipat
