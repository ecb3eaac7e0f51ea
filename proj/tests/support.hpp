// Test-only fixtures and independent reference checks. Nothing here calls
// into the code paths it is used to check.
#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "unipat/digraph.hpp"
#include "unipat/pattern_analysis.hpp"

namespace unipat::testing {

inline Pattern triangle() { return Pattern::from_rows({"011", "101", "110"}); }
inline Pattern remark4() { return Pattern::from_rows({"1111", "1111", "1100", "1100"}); }
/// The 2-vertex digraph M(D) = [[1,1],[1,0]]: arcs (0,0), (0,1), (1,0).
inline Digraph eulerian_remark() { return Digraph(2, {{0, 0}, {0, 1}, {1, 0}}); }
/// The line digraph matrix displayed next to it.
inline Pattern displayed_line_pattern() { return Pattern::from_rows({"001", "110", "110"}); }
inline Pattern c4_pattern() { return Pattern::from_rows({"0101", "1010", "0101", "1010"}); }

inline Pattern identity_pattern(std::size_t n) {
  Pattern p(n);
  for (std::size_t i = 0; i < n; ++i) p.set(i, i, true);
  return p;
}

inline Pattern all_ones(std::size_t n) {
  Pattern p(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) p.set(i, j, true);
  return p;
}

/// Every size-k subset of lines of one side, by bitmask, in lexicographic
/// order of the sorted member list.
struct BruteWitness {
  Side side;
  std::vector<std::size_t> members;
  std::vector<std::size_t> shared;
};

/// All minimum-cardinality violating sets, both sides, found by plain
/// enumeration of every subset (no components, no pruning).
inline std::vector<BruteWitness> brute_force_minimal_witnesses(const Pattern& p) {
  const std::size_t n = p.size();
  std::vector<BruteWitness> found;
  for (std::size_t k = 2; k <= n && found.empty(); ++k) {
    for (Side side : {Side::rows, Side::columns}) {
      auto entry = [&](std::size_t line, std::size_t idx) {
        return side == Side::rows ? p.at(line, idx) : p.at(idx, line);
      };
      std::vector<std::vector<std::size_t>> subsets;
      for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
        if (static_cast<std::size_t>(__builtin_popcount(mask)) != k) continue;
        std::vector<std::size_t> s;
        for (std::size_t i = 0; i < n; ++i)
          if (mask >> i & 1U) s.push_back(i);
        subsets.push_back(s);
      }
      std::sort(subsets.begin(), subsets.end());
      for (const auto& s : subsets) {
        std::vector<std::size_t> shared;
        for (std::size_t idx = 0; idx < n; ++idx) {
          std::size_t c = 0;
          for (std::size_t line : s) c += entry(line, idx) ? 1 : 0;
          if (c >= 2) shared.push_back(idx);
        }
        if (shared.size() >= k) continue;
        bool all_overlap = true;
        for (std::size_t line : s) {
          bool any = false;
          for (std::size_t idx : shared) any = any || entry(line, idx);
          all_overlap = all_overlap && any;
        }
        if (all_overlap) found.push_back({side, s, shared});
      }
    }
  }
  return found;
}

/// Re-checks the witness invariants from the raw entries.
inline bool witness_holds(const Pattern& p, Side side, const std::vector<std::size_t>& members,
                          const std::vector<std::size_t>& shared) {
  const std::size_t n = p.size();
  if (members.size() < 2 || shared.size() >= members.size()) return false;
  std::set<std::size_t> m(members.begin(), members.end());
  if (m.size() != members.size() || *m.rbegin() >= n) return false;
  std::vector<std::size_t> cover(n, 0);
  for (std::size_t line : members)
    for (std::size_t idx = 0; idx < n; ++idx)
      if (side == Side::rows ? p.at(line, idx) : p.at(idx, line)) ++cover[idx];
  std::vector<std::size_t> expect;
  for (std::size_t idx = 0; idx < n; ++idx)
    if (cover[idx] >= 2) expect.push_back(idx);
  if (expect != shared) return false;
  for (std::size_t line : members) {
    bool any = false;
    for (std::size_t idx : shared) any = any || (side == Side::rows ? p.at(line, idx) : p.at(idx, line));
    if (!any) return false;
  }
  return true;
}

/// Calls f on every multidigraph with n vertices and exactly k arcs, arcs
/// drawn as a multiset of ordered pairs listed in non-decreasing order.
inline void for_each_multidigraph(std::size_t n, std::size_t k, const std::function<void(const Digraph&)>& f) {
  std::vector<Arc> pairs;
  for (Vertex t = 0; t < n; ++t)
    for (Vertex h = 0; h < n; ++h) pairs.push_back({t, h});
  std::vector<std::size_t> pick(k, 0);
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t pos, std::size_t from) {
    if (pos == k) {
      std::vector<Arc> arcs;
      for (std::size_t i : pick) arcs.push_back(pairs[i]);
      f(Digraph(n, std::move(arcs)));
      return;
    }
    for (std::size_t i = from; i < pairs.size(); ++i) {
      pick[pos] = i;
      rec(pos + 1, i);
    }
  };
  rec(0, 0);
}

/// Arbitrary random multidigraph.
inline Digraph random_digraph(std::size_t n, std::size_t arcs, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> v(0, n - 1);
  std::vector<Arc> a;
  for (std::size_t k = 0; k < arcs; ++k) a.push_back({v(rng), v(rng)});
  return Digraph(n, std::move(a));
}

inline Permutation random_permutation(std::size_t n, std::mt19937_64& rng) {
  std::vector<std::size_t> img(n);
  for (std::size_t i = 0; i < n; ++i) img[i] = i;
  std::shuffle(img.begin(), img.end(), rng);
  return Permutation(std::move(img));
}

inline Pattern random_pattern(std::size_t n, double density, std::mt19937_64& rng) {
  std::bernoulli_distribution bit(density);
  Pattern p(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) p.set(i, j, bit(rng));
  return p;
}

}  // namespace unipat::testing
