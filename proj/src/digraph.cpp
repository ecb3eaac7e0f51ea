#include "unipat/digraph.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>
#include <random>
#include <set>
#include <utility>

#include "unipat/error.hpp"

namespace unipat {

namespace {

void check_vertex(const Digraph& d, Vertex v) {
  if (v >= d.vertex_count()) {
    throw PreconditionError("vertex " + std::to_string(v) + " out of range (n = " +
                            std::to_string(d.vertex_count()) + ")");
  }
}

IndexSet sorted_unique(IndexSet s) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

// Vertices reachable from `start` following arcs forward (or backward).
std::vector<bool> reachable(const Digraph& d, Vertex start, bool reverse) {
  std::vector<std::vector<Vertex>> adj(d.vertex_count());
  for (const Arc& a : d.arcs()) {
    if (reverse) {
      adj[a.head].push_back(a.tail);
    } else {
      adj[a.tail].push_back(a.head);
    }
  }
  std::vector<bool> seen(d.vertex_count(), false);
  std::vector<Vertex> stack{start};
  seen[start] = true;
  while (!stack.empty()) {
    const Vertex v = stack.back();
    stack.pop_back();
    for (Vertex w : adj[v]) {
      if (!seen[w]) {
        seen[w] = true;
        stack.push_back(w);
      }
    }
  }
  return seen;
}

void require_min(Family f, std::size_t n, std::size_t min) {
  if (n < min) {
    throw PreconditionError(std::string(family_name(f)) + " requires n >= " + std::to_string(min) +
                            ", got " + std::to_string(n));
  }
}

void add_edge(std::vector<Arc>& arcs, Vertex u, Vertex v) {
  arcs.push_back({u, v});
  arcs.push_back({v, u});
}

// parent[i] is uniform in [0, i) for i >= 1.
std::vector<Vertex> random_parents(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Vertex> parent(n, 0);
  for (std::size_t i = 1; i < n; ++i) {
    parent[i] = std::uniform_int_distribution<std::size_t>(0, i - 1)(rng);
  }
  return parent;
}

Digraph random_balanced(std::size_t n, const GenerateOptions& options) {
  const std::size_t budget = options.max_arcs == 0 ? 2 * n : options.max_arcs;
  if (budget < n) {
    throw PreconditionError("random_balanced: max_arcs must be >= n");
  }
  std::mt19937_64 rng(options.seed);
  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), Vertex{0});

  auto push_cycle = [](std::vector<Arc>& arcs, const std::vector<Vertex>& cyc) {
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      arcs.push_back({cyc[i], cyc[(i + 1) % cyc.size()]});
    }
  };

  std::vector<Arc> arcs;
  std::shuffle(order.begin(), order.end(), rng);
  push_cycle(arcs, order);

  // Extra cycles until the budget would be exceeded.
  std::uniform_int_distribution<std::size_t> len_dist(1, n);
  for (int attempt = 0; attempt < 64 && arcs.size() < budget; ++attempt) {
    const std::size_t len = std::min(len_dist(rng), budget - arcs.size());
    std::shuffle(order.begin(), order.end(), rng);
    push_cycle(arcs, std::vector<Vertex>(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(len)));
    if (std::bernoulli_distribution(0.25)(rng)) {
      break;
    }
  }
  return Digraph(n, std::move(arcs));
}

}  // namespace

// ---------------------------------------------------------------------------
// Digraph / Pattern / Permutation

Digraph::Digraph(std::size_t n, std::vector<Arc> arcs) : n_(n), arcs_(std::move(arcs)) {
  if (n_ == 0) {
    throw PreconditionError("digraph must have at least one vertex");
  }
  for (const Arc& a : arcs_) {
    if (a.tail >= n_ || a.head >= n_) {
      throw PreconditionError("arc (" + std::to_string(a.tail) + "," + std::to_string(a.head) +
                              ") out of range (n = " + std::to_string(n_) + ")");
    }
  }
}

bool Digraph::has_parallel_arcs() const {
  std::vector<Arc> sorted = arcs_;
  std::sort(sorted.begin(), sorted.end());
  return std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end();
}

Pattern::Pattern(std::size_t n) : n_(n), cells_(n * n, 0) {
  if (n_ == 0) {
    throw PreconditionError("pattern must have size >= 1");
  }
}

Pattern Pattern::from_rows(const std::vector<std::string>& rows) {
  Pattern p(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows.size()) {
      throw PreconditionError("pattern row " + std::to_string(i) + " has length " +
                              std::to_string(rows[i].size()) + ", expected " +
                              std::to_string(rows.size()));
    }
    for (std::size_t j = 0; j < rows.size(); ++j) {
      const char c = rows[i][j];
      if (c != '0' && c != '1') {
        throw PreconditionError(std::string("pattern entries must be 0 or 1, got '") + c + "'");
      }
      p.set(i, j, c == '1');
    }
  }
  return p;
}

Pattern Pattern::from_code(std::size_t n, std::uint64_t code) {
  if (n * n > 64) {
    throw PreconditionError("pattern code needs n*n <= 64");
  }
  Pattern p(n);
  for (std::size_t k = 0; k < n * n; ++k) {
    p.cells_[k] = static_cast<std::uint8_t>((code >> k) & 1U);
  }
  return p;
}

IndexSet Pattern::row_support(std::size_t i) const {
  IndexSet s;
  for (std::size_t j = 0; j < n_; ++j) {
    if (at(i, j)) s.push_back(j);
  }
  return s;
}

IndexSet Pattern::col_support(std::size_t j) const {
  IndexSet s;
  for (std::size_t i = 0; i < n_; ++i) {
    if (at(i, j)) s.push_back(i);
  }
  return s;
}

std::size_t Pattern::ones() const {
  return static_cast<std::size_t>(std::count(cells_.begin(), cells_.end(), std::uint8_t{1}));
}

Pattern Pattern::transposed() const {
  Pattern t(n_);
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) {
      t.set(j, i, at(i, j));
    }
  }
  return t;
}

std::uint64_t Pattern::code() const {
  if (n_ * n_ > 64) {
    throw PreconditionError("pattern code needs n*n <= 64");
  }
  std::uint64_t c = 0;
  for (std::size_t k = 0; k < n_ * n_; ++k) {
    c |= static_cast<std::uint64_t>(cells_[k]) << k;
  }
  return c;
}

std::vector<std::string> Pattern::rows() const {
  std::vector<std::string> out(n_, std::string(n_, '0'));
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) {
      if (at(i, j)) out[i][j] = '1';
    }
  }
  return out;
}

std::string Pattern::to_string() const {
  std::string s;
  for (const std::string& r : rows()) {
    if (!s.empty()) s += '/';
    s += r;
  }
  return s;
}

Permutation::Permutation(std::vector<std::size_t> image) : image_(std::move(image)) {
  std::vector<bool> hit(image_.size(), false);
  for (std::size_t x : image_) {
    if (x >= image_.size() || hit[x]) {
      throw PreconditionError("permutation image is not a bijection");
    }
    hit[x] = true;
  }
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<std::size_t> img(n);
  std::iota(img.begin(), img.end(), std::size_t{0});
  return Permutation(std::move(img));
}

Permutation Permutation::inverse() const {
  std::vector<std::size_t> inv(image_.size());
  for (std::size_t i = 0; i < image_.size(); ++i) {
    inv[image_[i]] = i;
  }
  return Permutation(std::move(inv));
}

// ---------------------------------------------------------------------------
// Neighborhoods, degrees, connectivity

IndexSet out_neighborhood(const Digraph& d, Vertex v) {
  check_vertex(d, v);
  IndexSet s;
  for (const Arc& a : d.arcs()) {
    if (a.tail == v) s.push_back(a.head);
  }
  return sorted_unique(std::move(s));
}

IndexSet in_neighborhood(const Digraph& d, Vertex v) {
  check_vertex(d, v);
  IndexSet s;
  for (const Arc& a : d.arcs()) {
    if (a.head == v) s.push_back(a.tail);
  }
  return sorted_unique(std::move(s));
}

Degrees degrees(const Digraph& d, Vertex v) {
  check_vertex(d, v);
  Degrees deg{0, 0};
  for (const Arc& a : d.arcs()) {
    if (a.head == v) ++deg.in;
    if (a.tail == v) ++deg.out;
  }
  return deg;
}

std::optional<Vertex> first_unbalanced_vertex(const Digraph& d) {
  std::vector<long> excess(d.vertex_count(), 0);
  for (const Arc& a : d.arcs()) {
    ++excess[a.tail];
    --excess[a.head];
  }
  for (Vertex v = 0; v < excess.size(); ++v) {
    if (excess[v] != 0) return v;
  }
  return std::nullopt;
}

bool is_degree_balanced(const Digraph& d) { return !first_unbalanced_vertex(d).has_value(); }

bool is_strongly_connected(const Digraph& d) {
  const auto fwd = reachable(d, 0, false);
  const auto bwd = reachable(d, 0, true);
  return std::all_of(fwd.begin(), fwd.end(), [](bool b) { return b; }) &&
         std::all_of(bwd.begin(), bwd.end(), [](bool b) { return b; });
}

std::vector<std::size_t> strong_components(const Digraph& d) {
  // Kosaraju, iterative.
  const std::size_t n = d.vertex_count();
  std::vector<std::vector<Vertex>> out(n), in(n);
  for (const Arc& a : d.arcs()) {
    out[a.tail].push_back(a.head);
    in[a.head].push_back(a.tail);
  }

  std::vector<Vertex> finish;
  finish.reserve(n);
  std::vector<bool> seen(n, false);
  for (Vertex root = 0; root < n; ++root) {
    if (seen[root]) continue;
    std::vector<std::pair<Vertex, std::size_t>> stack{{root, 0}};
    seen[root] = true;
    while (!stack.empty()) {
      auto& [v, next] = stack.back();
      if (next < out[v].size()) {
        const Vertex w = out[v][next++];
        if (!seen[w]) {
          seen[w] = true;
          stack.push_back({w, 0});
        }
      } else {
        finish.push_back(v);
        stack.pop_back();
      }
    }
  }

  constexpr std::size_t unset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> raw(n, unset);
  std::size_t count = 0;
  for (auto it = finish.rbegin(); it != finish.rend(); ++it) {
    if (raw[*it] != unset) continue;
    std::vector<Vertex> stack{*it};
    raw[*it] = count;
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      for (Vertex w : in[v]) {
        if (raw[w] == unset) {
          raw[w] = count;
          stack.push_back(w);
        }
      }
    }
    ++count;
  }

  // Renumber by smallest member.
  std::vector<std::size_t> rename(count, unset);
  std::size_t next_id = 0;
  std::vector<std::size_t> comp(n);
  for (Vertex v = 0; v < n; ++v) {
    if (rename[raw[v]] == unset) rename[raw[v]] = next_id++;
    comp[v] = rename[raw[v]];
  }
  return comp;
}

WellFormedness well_formed(const Digraph& d) {
  std::vector<bool> has_in(d.vertex_count(), false), has_out(d.vertex_count(), false);
  for (const Arc& a : d.arcs()) {
    has_out[a.tail] = true;
    has_in[a.head] = true;
  }
  WellFormedness wf{true, {}};
  for (Vertex v = 0; v < d.vertex_count(); ++v) {
    if (!has_in[v] || !has_out[v]) {
      wf.ok = false;
      wf.offenders.push_back(v);
    }
  }
  return wf;
}

WellFormedness well_formed(const Pattern& p) { return well_formed(digraph_of(p)); }

// ---------------------------------------------------------------------------
// Line digraph, pattern conversions

LineDigraph line_digraph(const Digraph& d) {
  if (d.arc_count() == 0) {
    throw PreconditionError("line digraph of a digraph with no arcs is empty");
  }
  const auto& arcs = d.arcs();

  std::vector<std::vector<ArcId>> out_arcs(d.vertex_count());
  for (ArcId id = 0; id < arcs.size(); ++id) {
    out_arcs[arcs[id].tail].push_back(id);
  }

  std::vector<Arc> line_arcs;
  ArcLabeling labeling;
  labeling.reserve(arcs.size());
  for (ArcId a = 0; a < arcs.size(); ++a) {
    labeling.push_back({arcs[a].tail, arcs[a].head, a});
    for (ArcId b : out_arcs[arcs[a].head]) {
      line_arcs.push_back({a, b});
    }
  }
  return {Digraph(arcs.size(), std::move(line_arcs)), std::move(labeling)};
}

Pattern pattern_of(const Digraph& d) {
  Pattern p(d.vertex_count());
  for (const Arc& a : d.arcs()) {
    p.set(a.tail, a.head, true);
  }
  return p;
}

Digraph digraph_of(const Pattern& p) {
  std::vector<Arc> arcs;
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (std::size_t j = 0; j < p.size(); ++j) {
      if (p.at(i, j)) arcs.push_back({i, j});
    }
  }
  return Digraph(p.size(), std::move(arcs));
}

Pattern support_of(const ComplexMatrix& m, double zero_tol) {
  if (m.rows() != m.cols()) {
    throw PreconditionError("support_of: matrix must be square");
  }
  if (zero_tol < 0) {
    throw PreconditionError("support_of: zero_tol must be >= 0");
  }
  const auto n = static_cast<std::size_t>(m.rows());
  Pattern p(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      p.set(i, j, std::abs(m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j))) > zero_tol);
    }
  }
  return p;
}

// ---------------------------------------------------------------------------
// Permutation equivalence

Digraph apply_permutations(const Digraph& d, const Permutation& rows, const Permutation& cols) {
  if (rows.size() != d.vertex_count() || cols.size() != d.vertex_count()) {
    throw PreconditionError("apply_permutations: permutation size does not match digraph");
  }
  std::vector<Arc> arcs;
  arcs.reserve(d.arc_count());
  for (const Arc& a : d.arcs()) {
    arcs.push_back({rows(a.tail), cols(a.head)});
  }
  return Digraph(d.vertex_count(), std::move(arcs));
}

Pattern apply_permutations(const Pattern& p, const Permutation& rows, const Permutation& cols) {
  if (rows.size() != p.size() || cols.size() != p.size()) {
    throw PreconditionError("apply_permutations: permutation size does not match pattern");
  }
  Pattern out(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (std::size_t j = 0; j < p.size(); ++j) {
      out.set(rows(i), cols(j), p.at(i, j));
    }
  }
  return out;
}

namespace {

// Backtracking over row images. After k rows of `a` are placed, the multiset
// of column signatures (bits over the placed rows) must agree on both sides,
// otherwise no column permutation can complete the assignment.
class EquivalenceSearch {
 public:
  EquivalenceSearch(const Pattern& a, const Pattern& b)
      : a_(a), b_(b), n_(a.size()), row_map_(n_), used_(n_, false), sig_a_(n_, 0), sig_b_(n_, 0) {
    for (std::size_t i = 0; i < n_; ++i) {
      weight_a_.push_back(a.row_support(i).size());
      weight_b_.push_back(b.row_support(i).size());
    }
  }

  std::optional<EquivalenceWitness> run() {
    if (!place(0)) return std::nullopt;
    // Full signatures now identify columns up to equal columns.
    std::vector<std::size_t> col_img(n_);
    std::vector<bool> taken(n_, false);
    for (std::size_t c = 0; c < n_; ++c) {
      for (std::size_t d = 0; d < n_; ++d) {
        if (!taken[d] && sig_b_[d] == sig_a_[c]) {
          taken[d] = true;
          col_img[c] = d;
          break;
        }
      }
    }
    return EquivalenceWitness{Permutation(row_map_), Permutation(std::move(col_img))};
  }

 private:
  bool signatures_match() const {
    std::vector<std::uint32_t> sa = sig_a_, sb = sig_b_;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    return sa == sb;
  }

  bool place(std::size_t i) {
    if (i == n_) return true;
    for (std::size_t c = 0; c < n_; ++c) {
      if (a_.at(i, c)) sig_a_[c] |= 1U << i;
    }
    for (std::size_t r = 0; r < n_; ++r) {
      if (used_[r] || weight_b_[r] != weight_a_[i]) continue;
      used_[r] = true;
      row_map_[i] = r;
      for (std::size_t c = 0; c < n_; ++c) {
        if (b_.at(r, c)) sig_b_[c] |= 1U << i;
      }
      if (signatures_match() && place(i + 1)) return true;
      for (std::size_t c = 0; c < n_; ++c) {
        sig_b_[c] &= ~(1U << i);
      }
      used_[r] = false;
    }
    for (std::size_t c = 0; c < n_; ++c) {
      sig_a_[c] &= ~(1U << i);
    }
    return false;
  }

  const Pattern& a_;
  const Pattern& b_;
  std::size_t n_;
  std::vector<std::size_t> row_map_;
  std::vector<bool> used_;
  std::vector<std::size_t> weight_a_, weight_b_;
  std::vector<std::uint32_t> sig_a_, sig_b_;
};

}  // namespace

std::optional<EquivalenceWitness> permutation_equivalence(const Pattern& a, const Pattern& b,
                                                          std::size_t max_n) {
  if (a.size() > max_n || b.size() > max_n) {
    throw LimitExceeded("permutation equivalence limited to n <= " + std::to_string(max_n));
  }
  if (max_n > 32) {
    throw LimitExceeded("permutation equivalence supports at most n = 32");
  }
  if (a.size() != b.size() || a.ones() != b.ones()) return std::nullopt;
  return EquivalenceSearch(a, b).run();
}

// ---------------------------------------------------------------------------
// Complement, unions

Digraph complement(const Digraph& d) {
  if (d.has_parallel_arcs()) {
    throw PreconditionError("complement requires a digraph without parallel arcs");
  }
  const Pattern p = pattern_of(d);
  std::vector<Arc> arcs;
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (std::size_t j = 0; j < p.size(); ++j) {
      if (!p.at(i, j)) arcs.push_back({i, j});
    }
  }
  return Digraph(d.vertex_count(), std::move(arcs));
}

Digraph disjoint_union(const Digraph& a, const Digraph& b) {
  std::vector<Arc> arcs = a.arcs();
  const std::size_t shift = a.vertex_count();
  for (const Arc& x : b.arcs()) {
    arcs.push_back({x.tail + shift, x.head + shift});
  }
  return Digraph(a.vertex_count() + b.vertex_count(), std::move(arcs));
}

Digraph with_loops(const Digraph& d) {
  std::vector<bool> looped(d.vertex_count(), false);
  for (const Arc& a : d.arcs()) {
    if (a.tail == a.head) looped[a.tail] = true;
  }
  std::vector<Arc> arcs = d.arcs();
  for (Vertex v = 0; v < d.vertex_count(); ++v) {
    if (!looped[v]) arcs.push_back({v, v});
  }
  return Digraph(d.vertex_count(), std::move(arcs));
}

// ---------------------------------------------------------------------------
// Generators

Digraph generate(Family family, std::size_t n, const GenerateOptions& options) {
  std::vector<Arc> arcs;
  switch (family) {
    case Family::n_path:
      require_min(family, n, 2);
      for (Vertex i = 0; i + 1 < n; ++i) add_edge(arcs, i, i + 1);
      return Digraph(n, std::move(arcs));

    case Family::n_path_loops:
      // Loops first (arc id i is the loop at i), then the path arcs.
      require_min(family, n, 2);
      for (Vertex i = 0; i < n; ++i) arcs.push_back({i, i});
      for (Vertex i = 0; i + 1 < n; ++i) add_edge(arcs, i, i + 1);
      return Digraph(n, std::move(arcs));

    case Family::cycle:
      require_min(family, n, 3);
      for (Vertex i = 0; i + 1 < n; ++i) add_edge(arcs, i, i + 1);
      add_edge(arcs, n - 1, 0);
      return Digraph(n, std::move(arcs));

    case Family::directed_cycle:
      require_min(family, n, 2);
      for (Vertex i = 0; i < n; ++i) arcs.push_back({i, (i + 1) % n});
      return Digraph(n, std::move(arcs));

    case Family::complete:
      require_min(family, n, 1);
      for (Vertex i = 0; i < n; ++i)
        for (Vertex j = 0; j < n; ++j) arcs.push_back({i, j});
      return Digraph(n, std::move(arcs));

    case Family::complete_loopless:
      require_min(family, n, 2);
      for (Vertex i = 0; i < n; ++i)
        for (Vertex j = 0; j < n; ++j)
          if (i != j) arcs.push_back({i, j});
      return Digraph(n, std::move(arcs));

    case Family::petersen:
      // Outer 5-cycle 0..4, spokes i -- i+5, inner pentagram on 5..9.
      for (Vertex i = 0; i < 5; ++i) add_edge(arcs, i, (i + 1) % 5);
      for (Vertex i = 0; i < 5; ++i) add_edge(arcs, i, i + 5);
      for (Vertex i = 0; i < 5; ++i) add_edge(arcs, 5 + i, 5 + (i + 2) % 5);
      return Digraph(10, std::move(arcs));

    case Family::ladder:
      require_min(family, n, 1);
      for (Vertex i = 0; i < n; ++i) add_edge(arcs, 2 * i, 2 * i + 1);
      return Digraph(2 * n, std::move(arcs));

    case Family::random_balanced:
      require_min(family, n, 1);
      return random_balanced(n, options);

    case Family::random_tree: {
      require_min(family, n, 2);
      const auto parent = random_parents(n, options.seed);
      for (Vertex i = 1; i < n; ++i) add_edge(arcs, parent[i], i);
      return Digraph(n, std::move(arcs));
    }

    case Family::random_directed_tree: {
      require_min(family, n, 2);
      const auto parent = random_parents(n, options.seed);
      for (Vertex i = 1; i < n; ++i) arcs.push_back({parent[i], i});
      return Digraph(n, std::move(arcs));
    }
  }
  throw PreconditionError("unknown digraph family");
}

namespace {
constexpr std::array<std::pair<Family, std::string_view>, 11> kFamilyNames{{
    {Family::n_path, "n_path"},
    {Family::n_path_loops, "n_path_loops"},
    {Family::cycle, "cycle"},
    {Family::directed_cycle, "directed_cycle"},
    {Family::complete, "complete"},
    {Family::complete_loopless, "complete_loopless"},
    {Family::petersen, "petersen"},
    {Family::ladder, "ladder"},
    {Family::random_balanced, "random_balanced"},
    {Family::random_tree, "random_tree"},
    {Family::random_directed_tree, "random_directed_tree"},
}};
}  // namespace

std::optional<Family> family_from_name(std::string_view name) {
  for (const auto& [f, s] : kFamilyNames) {
    if (s == name) return f;
  }
  return std::nullopt;
}

std::string_view family_name(Family family) {
  for (const auto& [f, s] : kFamilyNames) {
    if (f == family) return s;
  }
  return "unknown";
}

}  // namespace unipat
