#include "cyldom/oracle.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "cyldom/errors.hpp"

namespace cyldom {

CylinderGraph::CylinderGraph(std::size_t n, std::size_t m) : n_(n), m_(m), adjacency_(n * m) {
  if (n < 3) throw InvalidArgument("cylinder: n must satisfy n >= 3, got " + std::to_string(n));
  if (m < 2) throw InvalidArgument("cylinder: m must satisfy m >= 2, got " + std::to_string(m));
  for (std::size_t j = 0; j < m; ++j) {
    for (std::size_t i = 0; i < n; ++i) {
      auto& adj = adjacency_[index(i, j)];
      adj.push_back(index((i + n - 1) % n, j));
      adj.push_back(index((i + 1) % n, j));
      if (j > 0) adj.push_back(index(i, j - 1));
      if (j + 1 < m) adj.push_back(index(i, j + 1));
    }
  }
}

std::size_t CylinderGraph::edge_count() const noexcept {
  std::size_t degrees = 0;
  for (const auto& adj : adjacency_) degrees += adj.size();
  return degrees / 2;
}

CylinderGraph build_cylinder(std::size_t n, std::size_t m) { return CylinderGraph(n, m); }

VertexSet VertexSet::from_mask(std::size_t vertex_count, std::uint64_t mask) {
  VertexSet s(vertex_count);
  for (std::size_t v = 0; v < vertex_count && v < 64; ++v)
    if ((mask >> v) & 1u) s.members_[v] = 1;
  return s;
}

VertexSet VertexSet::all(std::size_t vertex_count) {
  VertexSet s(vertex_count);
  std::ranges::fill(s.members_, std::uint8_t{1});
  return s;
}

std::size_t VertexSet::size() const noexcept {
  return static_cast<std::size_t>(std::ranges::count(members_, std::uint8_t{1}));
}

std::string VertexSet::str(const CylinderGraph& g) const {
  std::string out;
  for (std::size_t v = 0; v < members_.size(); ++v) {
    if (!members_[v]) continue;
    if (!out.empty()) out += ';';
    out += std::to_string(g.row_of(v)) + ',' + std::to_string(g.column_of(v));
  }
  return out;
}

namespace {

void check_sizes(const CylinderGraph& g, const VertexSet& s) {
  if (s.capacity() != g.vertex_count()) throw InvalidArgument("vertex set size does not match the cylinder");
}

std::size_t members_among(const CylinderGraph& g, const VertexSet& s, std::size_t v) {
  std::size_t k = 0;
  for (auto u : g.neighbors(v)) k += s.contains(u);
  return k;
}

}  // namespace

bool is_2_dominating(const CylinderGraph& g, const VertexSet& s) {
  check_sizes(g, s);
  for (std::size_t v = 0; v < g.vertex_count(); ++v)
    if (!s.contains(v) && members_among(g, s, v) < 2) return false;
  return true;
}

bool is_quasi_2_dominating(const CylinderGraph& g, const VertexSet& r) {
  check_sizes(g, r);
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    if (r.contains(v)) continue;
    const std::size_t need = g.column_of(v) + 1 == g.columns() ? 1 : 2;
    if (members_among(g, r, v) < need) return false;
  }
  return true;
}

BruteForceResult brute_minimum_2_dominating(std::size_t n, std::size_t m, std::size_t budget) {
  const CylinderGraph g(n, m);
  const std::size_t count = g.vertex_count();
  if (budget > 63) throw ResourceLimit("brute force budget cannot exceed 63 vertices");
  if (count > budget)
    throw ResourceLimit("brute force on C_" + std::to_string(n) + " x P_" + std::to_string(m) + " has " +
                        std::to_string(count) + " vertices, above the budget of " + std::to_string(budget));

  std::vector<std::uint64_t> nb(count, 0);
  for (std::size_t v = 0; v < count; ++v)
    for (auto u : g.neighbors(v)) nb[v] |= std::uint64_t{1} << u;
  const std::uint64_t full = (std::uint64_t{1} << count) - 1;
  auto dominates = [&](std::uint64_t s) {
    for (std::uint64_t out = full & ~s; out != 0; out &= out - 1) {
      const auto v = static_cast<std::size_t>(std::countr_zero(out));
      if (std::popcount(nb[v] & s) < 2) return false;
    }
    return true;
  };

  for (std::size_t k = 1; k <= count; ++k) {
    // Gosper's hack over all k-subsets in increasing numeric order.
    std::uint64_t s = (std::uint64_t{1} << k) - 1;
    while (s <= full) {
      if (dominates(s)) return {static_cast<std::int64_t>(k), VertexSet::from_mask(count, s)};
      const std::uint64_t c = s & (~s + 1);
      const std::uint64_t r = s + c;
      if (r == 0 || r > full + 1) break;
      s = (((r ^ s) >> 2) / c) | r;
    }
  }
  return {static_cast<std::int64_t>(count), VertexSet::all(count)};
}

std::int64_t brute_gamma2(std::size_t n, std::size_t m, std::size_t budget) {
  return brute_minimum_2_dominating(n, m, budget).gamma2;
}

DecodedWordList word_list_decode(std::span<const CyclicWord> words) {
  if (words.empty()) throw InvalidArgument("word list is empty");
  const std::size_t n = words.front().size();
  for (const auto& w : words)
    if (w.size() != n) throw InvalidArgument("word list mixes lengths");
  DecodedWordList out;
  out.members = VertexSet(n * words.size());
  out.labels.resize(n * words.size());
  for (std::size_t j = 0; j < words.size(); ++j) {
    for (std::size_t i = 0; i < n; ++i) {
      const auto v = i + n * j;
      out.labels[v] = words[j][i];
      if (words[j][i] == 0) out.members.insert(v);
    }
  }
  return out;
}

bool word_list_validate(std::span<const CyclicWord> words, InitialRule rule) {
  if (words.empty()) return false;
  const std::size_t n = words.front().size();
  for (const auto& w : words)
    if (w.size() != n || !is_suitable(w)) return false;
  if (!is_initial(words.front(), rule)) return false;
  for (std::size_t k = 1; k < words.size(); ++k)
    if (!can_follow(words[k], words[k - 1])) return false;
  return true;
}

std::vector<CyclicWord> label_columns(const CylinderGraph& g, const VertexSet& r) {
  check_sizes(g, r);
  std::vector<CyclicWord> words;
  words.reserve(g.columns());
  for (std::size_t j = 0; j < g.columns(); ++j) {
    std::vector<Trit> trits(g.rows());
    for (std::size_t i = 0; i < g.rows(); ++i) {
      const auto v = g.index(i, j);
      if (r.contains(v)) continue;
      std::size_t k = 0;
      for (auto u : g.neighbors(v)) k += r.contains(u) && g.column_of(u) <= j;
      if (k == 0)
        throw InvalidArgument("vertex (" + std::to_string(i) + "," + std::to_string(j) +
                              ") has no set neighbour in its own or the previous column");
      trits[i] = k >= 2 ? 1 : 2;
    }
    words.emplace_back(std::move(trits));
  }
  return words;
}

}  // namespace cyldom
