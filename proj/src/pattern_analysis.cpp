#include "unipat/pattern_analysis.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "unipat/error.hpp"

namespace unipat {

namespace {

void require_well_formed(const Pattern& p, const char* op) {
  if (!well_formed(p)) {
    throw PreconditionError(std::string(op) + ": pattern has a zero row or zero column");
  }
}

std::vector<IndexSet> supports(const Pattern& p, Side side) {
  std::vector<IndexSet> s(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    s[i] = side == Side::rows ? p.row_support(i) : p.col_support(i);
  }
  return s;
}

std::size_t intersection_size(const IndexSet& a, const IndexSet& b) {
  std::size_t count = 0;
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() && ib != b.end()) {
    if (*ia < *ib) {
      ++ia;
    } else if (*ib < *ia) {
      ++ib;
    } else {
      ++count;
      ++ia;
      ++ib;
    }
  }
  return count;
}

// Connected components of the overlap graph (lines adjacent iff their
// supports intersect), each sorted, ordered by smallest member.
std::vector<IndexSet> overlap_components(const std::vector<IndexSet>& sup, std::size_t n) {
  std::vector<std::size_t> parent(sup.size());
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  // Lines sharing an index are merged through the first line seen there.
  std::vector<std::size_t> owner(n, sup.size());
  for (std::size_t line = 0; line < sup.size(); ++line) {
    for (std::size_t idx : sup[line]) {
      if (owner[idx] == sup.size()) {
        owner[idx] = line;
      } else {
        const std::size_t a = find(owner[idx]);
        const std::size_t b = find(line);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
      }
    }
  }
  std::map<std::size_t, IndexSet> groups;
  for (std::size_t line = 0; line < sup.size(); ++line) {
    groups[find(line)].push_back(line);
  }
  std::vector<IndexSet> out;
  for (auto& [root, members] : groups) {
    out.push_back(std::move(members));
  }
  std::sort(out.begin(), out.end(), [](const IndexSet& a, const IndexSet& b) { return a.front() < b.front(); });
  return out;
}

// Depth-first search for a k-subset of one component violating the
// condition. Coverage counts make adding/removing a line O(|support|).
class SubsetSearch {
 public:
  SubsetSearch(const std::vector<IndexSet>& sup, std::size_t n) : sup_(sup), cover_(n, 0) {}

  std::optional<IndexSet> find(const IndexSet& component, std::size_t k) {
    component_ = &component;
    k_ = k;
    chosen_.clear();
    shared_ = 0;
    if (descend(0)) return chosen_;
    return std::nullopt;
  }

 private:
  void add(std::size_t line) {
    for (std::size_t idx : sup_[line]) {
      if (++cover_[idx] == 2) ++shared_;
    }
    chosen_.push_back(line);
  }

  void remove(std::size_t line) {
    for (std::size_t idx : sup_[line]) {
      if (cover_[idx]-- == 2) --shared_;
    }
    chosen_.pop_back();
  }

  bool every_member_overlaps() const {
    return std::all_of(chosen_.begin(), chosen_.end(), [&](std::size_t line) {
      return std::any_of(sup_[line].begin(), sup_[line].end(),
                         [&](std::size_t idx) { return cover_[idx] >= 2; });
    });
  }

  bool descend(std::size_t start) {
    if (chosen_.size() == k_) {
      return shared_ < k_ && every_member_overlaps();
    }
    const IndexSet& comp = *component_;
    const std::size_t need = k_ - chosen_.size();
    for (std::size_t pos = start; pos + need <= comp.size(); ++pos) {
      add(comp[pos]);
      // The shared count never shrinks as S grows.
      if (shared_ < k_ && descend(pos + 1)) return true;
      remove(comp[pos]);
    }
    return false;
  }

  const std::vector<IndexSet>& sup_;
  std::vector<std::size_t> cover_;
  const IndexSet* component_ = nullptr;
  std::size_t k_ = 0;
  IndexSet chosen_;
  std::size_t shared_ = 0;
};

IndexSet shared_indices(const std::vector<IndexSet>& sup, const IndexSet& members, std::size_t n) {
  std::vector<std::size_t> cover(n, 0);
  for (std::size_t line : members) {
    for (std::size_t idx : sup[line]) ++cover[idx];
  }
  IndexSet shared;
  for (std::size_t idx = 0; idx < n; ++idx) {
    if (cover[idx] >= 2) shared.push_back(idx);
  }
  return shared;
}

}  // namespace

std::string_view side_name(Side side) { return side == Side::rows ? "rows" : "columns"; }

QuadrangularCheck check_quadrangular(const Pattern& p) {
  require_well_formed(p, "check_quadrangular");
  for (Side side : {Side::rows, Side::columns}) {
    const auto sup = supports(p, side);
    for (std::size_t i = 0; i < sup.size(); ++i) {
      for (std::size_t j = i + 1; j < sup.size(); ++j) {
        if (intersection_size(sup[i], sup[j]) == 1) {
          return {false, LinePair{side, i, j}};
        }
      }
    }
  }
  return {true, std::nullopt};
}

bool is_quadrangular(const Pattern& p) { return check_quadrangular(p).quadrangular; }

SqCheck check_strongly_quadrangular(const Pattern& p, const SqOptions& options) {
  require_well_formed(p, "check_strongly_quadrangular");
  const std::size_t n = p.size();

  struct SideData {
    Side side;
    std::vector<IndexSet> sup;
    std::vector<IndexSet> components;
  };
  std::vector<SideData> sides;
  std::size_t largest = 0;
  for (Side side : {Side::rows, Side::columns}) {
    SideData sd{side, supports(p, side), {}};
    sd.components = overlap_components(sd.sup, n);
    for (const auto& c : sd.components) largest = std::max(largest, c.size());
    sides.push_back(std::move(sd));
  }

  SqCheck result{SqStatus::holds, std::nullopt, largest};
  if (largest > options.cap) {
    result.status = SqStatus::undecided;
    return result;
  }

  // Increasing |S| gives a minimum-cardinality witness.
  for (std::size_t k = 2; k <= largest; ++k) {
    for (const SideData& sd : sides) {
      SubsetSearch search(sd.sup, n);
      std::optional<IndexSet> best;
      for (const IndexSet& comp : sd.components) {
        if (comp.size() < k) continue;
        // DFS order is lexicographic within a component, not across them.
        if (auto members = search.find(comp, k); members && (!best || *members < *best)) {
          best = std::move(members);
        }
      }
      if (best) {
        IndexSet shared = shared_indices(sd.sup, *best, n);
        result.status = SqStatus::violated;
        result.witness = SqWitness{sd.side, std::move(*best), std::move(shared)};
        return result;
      }
    }
  }
  return result;
}

bool is_strongly_quadrangular(const Pattern& p, const SqOptions& options) {
  const SqCheck check = check_strongly_quadrangular(p, options);
  if (check.status == SqStatus::undecided) {
    throw LimitExceeded("strong quadrangularity undecided: overlap component of size " +
                        std::to_string(check.largest_component) + " exceeds cap " +
                        std::to_string(options.cap));
  }
  return check.status == SqStatus::holds;
}

bool validate_witness(const Pattern& p, const SqWitness& w) {
  const std::size_t n = p.size();
  if (w.members.size() < 2) return false;
  if (!std::is_sorted(w.members.begin(), w.members.end()) ||
      std::adjacent_find(w.members.begin(), w.members.end()) != w.members.end() ||
      w.members.back() >= n) {
    return false;
  }
  const auto sup = supports(p, w.side);
  if (shared_indices(sup, w.members, n) != w.shared) return false;
  if (w.shared.size() >= w.members.size()) return false;
  for (std::size_t line : w.members) {
    const bool overlaps = std::any_of(sup[line].begin(), sup[line].end(), [&](std::size_t idx) {
      return std::binary_search(w.shared.begin(), w.shared.end(), idx);
    });
    if (!overlaps) return false;
  }
  return true;
}

SpecularCheck check_specular(const Pattern& p) {
  require_well_formed(p, "check_specular");
  for (Side side : {Side::rows, Side::columns}) {
    const auto sup = supports(p, side);
    for (std::size_t i = 0; i < sup.size(); ++i) {
      for (std::size_t j = i + 1; j < sup.size(); ++j) {
        if (sup[i] != sup[j] && intersection_size(sup[i], sup[j]) > 0) {
          return {false, std::nullopt, LinePair{side, i, j}};
        }
      }
    }
  }

  // Row classes by identical support, in order of first row.
  SpecularBlocks result;
  std::map<IndexSet, std::size_t> block_of;
  for (std::size_t i = 0; i < p.size(); ++i) {
    IndexSet s = p.row_support(i);
    auto [it, inserted] = block_of.try_emplace(s, result.blocks.size());
    if (inserted) result.blocks.push_back({{}, std::move(s)});
    result.blocks[it->second].rows.push_back(i);
  }

  std::vector<int> row_block(p.size(), -1), col_block(p.size(), -1);
  bool independent = true;
  for (std::size_t b = 0; b < result.blocks.size(); ++b) {
    for (std::size_t r : result.blocks[b].rows) row_block[r] = static_cast<int>(b);
    for (std::size_t c : result.blocks[b].cols) {
      if (col_block[c] != -1) independent = false;
      col_block[c] = static_cast<int>(b);
    }
  }
  for (std::size_t i = 0; i < p.size() && independent; ++i) {
    for (std::size_t j = 0; j < p.size(); ++j) {
      const bool inside = col_block[j] != -1 && row_block[i] == col_block[j];
      if (p.at(i, j) != inside) {
        independent = false;
        break;
      }
    }
  }
  result.independent = independent;
  return {true, std::move(result), std::nullopt};
}

bool is_specular(const Pattern& p) { return check_specular(p).specular; }

bool is_line_digraph(const Pattern& p) { return is_specular(p); }

bool square_blocks(const SpecularBlocks& blocks) {
  return std::all_of(blocks.blocks.begin(), blocks.blocks.end(),
                     [](const SpecularBlock& b) { return b.rows.size() == b.cols.size(); });
}

}  // namespace unipat
