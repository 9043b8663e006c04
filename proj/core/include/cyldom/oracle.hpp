#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "cyldom/cyclic_words.hpp"

namespace cyldom {

/// Explicit C_n x P_m. Vertex (i, j) (row i, column j) has index i + n*j.
class CylinderGraph {
 public:
  CylinderGraph(std::size_t n, std::size_t m);

  std::size_t rows() const noexcept { return n_; }
  std::size_t columns() const noexcept { return m_; }
  std::size_t vertex_count() const noexcept { return n_ * m_; }
  std::size_t edge_count() const noexcept;

  std::size_t index(std::size_t row, std::size_t col) const noexcept { return row + n_ * col; }
  std::size_t row_of(std::size_t v) const noexcept { return v % n_; }
  std::size_t column_of(std::size_t v) const noexcept { return v / n_; }

  std::span<const std::size_t> neighbors(std::size_t v) const noexcept { return adjacency_[v]; }

 private:
  std::size_t n_;
  std::size_t m_;
  std::vector<std::vector<std::size_t>> adjacency_;
};

CylinderGraph build_cylinder(std::size_t n, std::size_t m);

/// Membership flags over the vertices of one cylinder.
class VertexSet {
 public:
  explicit VertexSet(std::size_t vertex_count) : members_(vertex_count, 0) {}
  static VertexSet from_mask(std::size_t vertex_count, std::uint64_t mask);
  static VertexSet all(std::size_t vertex_count);

  std::size_t capacity() const noexcept { return members_.size(); }
  bool contains(std::size_t v) const noexcept { return members_[v] != 0; }
  void insert(std::size_t v) { members_.at(v) = 1; }
  void erase(std::size_t v) { members_.at(v) = 0; }
  std::size_t size() const noexcept;

  /// Diagnostic text form: "i,j" pairs separated by ';'.
  std::string str(const CylinderGraph& g) const;

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

 private:
  std::vector<std::uint8_t> members_;
};

bool is_2_dominating(const CylinderGraph& g, const VertexSet& s);
bool is_quasi_2_dominating(const CylinderGraph& g, const VertexSet& r);

struct BruteForceResult {
  std::int64_t gamma2 = 0;
  VertexSet witness{0};
};

/// Exhaustive minimum 2-dominating set by increasing cardinality.
/// Throws ResourceLimit when n*m exceeds `budget` (hard ceiling 63).
BruteForceResult brute_minimum_2_dominating(std::size_t n, std::size_t m, std::size_t budget = 16);
std::int64_t brute_gamma2(std::size_t n, std::size_t m, std::size_t budget = 16);

/// Column-by-column labelling of a cylinder: words[j] labels column j.
struct DecodedWordList {
  VertexSet members{0};
  std::vector<Trit> labels;  // by vertex index
};

/// Label-0 vertices of the word list become the set; throws InvalidArgument
/// on an empty list or mixed lengths.
DecodedWordList word_list_decode(std::span<const CyclicWord> words);

/// First word initial under `rule`, all words suitable, each word can follow
/// the previous one.
bool word_list_validate(std::span<const CyclicWord> words, InitialRule rule = InitialRule::kStrict);

/// Labels a quasi-2-dominating set: members get 0, others 1 or 2 by the
/// number of members among their neighbours in the same or previous column.
/// Throws InvalidArgument if some non-member has no such neighbour.
std::vector<CyclicWord> label_columns(const CylinderGraph& g, const VertexSet& r);

}  // namespace cyldom
