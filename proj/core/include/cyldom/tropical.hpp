#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace cyldom {

/// Element of the (min,+) semiring over the naturals plus infinity.
class Tropical {
 public:
  using Magnitude = std::int64_t;
  static constexpr Magnitude kInfinity = std::numeric_limits<Magnitude>::max();

  constexpr Tropical() noexcept = default;  // infinity
  constexpr explicit Tropical(Magnitude v) noexcept : v_(v) {}
  static constexpr Tropical infinity() noexcept { return Tropical{}; }

  constexpr bool is_finite() const noexcept { return v_ != kInfinity; }
  constexpr Magnitude value() const noexcept { return v_; }

  /// Semiring product: ordinary addition, saturating at infinity.
  friend constexpr Tropical operator*(Tropical a, Tropical b) noexcept {
    if (!a.is_finite() || !b.is_finite()) return infinity();
    if (a.v_ > kInfinity - b.v_) return infinity();
    return Tropical{a.v_ + b.v_};
  }
  /// Semiring sum: minimum.
  friend constexpr Tropical operator+(Tropical a, Tropical b) noexcept { return a.v_ <= b.v_ ? a : b; }

  friend constexpr bool operator==(Tropical, Tropical) noexcept = default;
  friend constexpr auto operator<=>(Tropical, Tropical) noexcept = default;

  std::string str() const { return is_finite() ? std::to_string(v_) : std::string("inf"); }

 private:
  Magnitude v_ = kInfinity;
};

/// Dense state vector indexed by word rank.
class TropicalVector {
 public:
  TropicalVector() = default;
  explicit TropicalVector(std::size_t size) : entries_(size) {}
  explicit TropicalVector(std::vector<Tropical> entries) : entries_(std::move(entries)) {}

  std::size_t size() const noexcept { return entries_.size(); }
  Tropical operator[](std::size_t i) const noexcept { return entries_[i]; }
  Tropical& operator[](std::size_t i) noexcept { return entries_[i]; }
  std::span<const Tropical> entries() const noexcept { return entries_; }
  std::span<Tropical> entries() noexcept { return entries_; }
  auto begin() const noexcept { return entries_.begin(); }
  auto end() const noexcept { return entries_.end(); }

  friend bool operator==(const TropicalVector&, const TropicalVector&) = default;

 private:
  std::vector<Tropical> entries_;
};

/// Sparse matrix in row-compressed form; absent entries are infinity.
///
/// Column indices are strictly increasing within each row and every stored
/// value is finite.
class TropicalMatrix {
 public:
  using Index = std::uint32_t;

  struct Entry {
    std::size_t row;
    std::size_t col;
    Tropical::Magnitude value;
  };

  TropicalMatrix() = default;

  /// Adopts raw row-compressed arrays after validating them.
  TropicalMatrix(std::size_t nrows, std::size_t ncols, std::vector<std::uint64_t> offsets,
                 std::vector<Index> cols, std::vector<Tropical::Magnitude> values);

  /// Assembles from unordered entries; duplicates keep the minimum value.
  static TropicalMatrix from_entries(std::size_t nrows, std::size_t ncols, std::vector<Entry> entries);
  /// Zero on the diagonal, infinity elsewhere.
  static TropicalMatrix identity(std::size_t size);

  std::size_t rows() const noexcept { return nrows_; }
  std::size_t cols() const noexcept { return ncols_; }
  std::size_t nonzeros() const noexcept { return cols_.size(); }

  std::span<const std::uint64_t> row_offsets() const noexcept { return offsets_; }
  std::span<const Index> col_indices() const noexcept { return cols_; }
  std::span<const Tropical::Magnitude> values() const noexcept { return values_; }

  /// Entry (i, j); infinity when not stored.
  Tropical at(std::size_t i, std::size_t j) const;

  std::size_t memory_bytes() const noexcept;

  friend bool operator==(const TropicalMatrix&, const TropicalMatrix&) = default;

 private:
  std::size_t nrows_ = 0;
  std::size_t ncols_ = 0;
  std::vector<std::uint64_t> offsets_{0};
  std::vector<Index> cols_;
  std::vector<Tropical::Magnitude> values_;
};

/// y_i = min_k (A_ik + x_k). Rows are split across `threads` workers; the
/// result does not depend on the worker count.
TropicalVector matvec(const TropicalMatrix& a, const TropicalVector& x, std::size_t threads = 1);

/// Adds `shift` to every finite entry.
TropicalVector scalar_shift(Tropical::Magnitude shift, const TropicalVector& x);

/// Returns b >= 0 when y equals x shifted by b (same infinite support and a
/// single constant difference); b = 0 when both vectors are all infinite.
std::optional<Tropical::Magnitude> shifted_equal(const TropicalVector& x, const TropicalVector& y);

}  // namespace cyldom
