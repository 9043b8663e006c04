#include "cyldom/tropical.hpp"

#include <algorithm>
#include <string>

#include "cyldom/errors.hpp"
#include "parallel.hpp"

namespace cyldom {

TropicalMatrix::TropicalMatrix(std::size_t nrows, std::size_t ncols, std::vector<std::uint64_t> offsets,
                               std::vector<Index> cols, std::vector<Tropical::Magnitude> values)
    : nrows_(nrows), ncols_(ncols), offsets_(std::move(offsets)), cols_(std::move(cols)), values_(std::move(values)) {
  if (offsets_.size() != nrows_ + 1) throw InvalidArgument("row offset array must have rows+1 entries");
  if (offsets_.front() != 0 || offsets_.back() != cols_.size())
    throw InvalidArgument("row offsets do not span the column index array");
  if (values_.size() != cols_.size()) throw InvalidArgument("value and column arrays differ in length");
  for (std::size_t i = 0; i < nrows_; ++i) {
    if (offsets_[i] > offsets_[i + 1]) throw InvalidArgument("row offsets must be nondecreasing");
    for (auto k = offsets_[i]; k < offsets_[i + 1]; ++k) {
      if (cols_[k] >= ncols_) throw InvalidArgument("column index out of range");
      if (k > offsets_[i] && cols_[k] <= cols_[k - 1])
        throw InvalidArgument("column indices must be strictly increasing within a row");
      if (values_[k] < 0 || values_[k] == Tropical::kInfinity)
        throw InvalidArgument("stored values must be finite and nonnegative");
    }
  }
}

TropicalMatrix TropicalMatrix::from_entries(std::size_t nrows, std::size_t ncols, std::vector<Entry> entries) {
  for (const auto& e : entries)
    if (e.row >= nrows || e.col >= ncols) throw InvalidArgument("entry index out of range");
  std::ranges::sort(entries, [](const Entry& a, const Entry& b) {
    return a.row != b.row ? a.row < b.row : (a.col != b.col ? a.col < b.col : a.value < b.value);
  });
  std::vector<std::uint64_t> offsets(nrows + 1, 0);
  std::vector<Index> cols;
  std::vector<Tropical::Magnitude> values;
  for (std::size_t k = 0; k < entries.size(); ++k) {
    const auto& e = entries[k];
    if (k > 0 && entries[k - 1].row == e.row && entries[k - 1].col == e.col) continue;  // keeps min
    cols.push_back(static_cast<Index>(e.col));
    values.push_back(e.value);
    ++offsets[e.row + 1];
  }
  for (std::size_t i = 0; i < nrows; ++i) offsets[i + 1] += offsets[i];
  return TropicalMatrix(nrows, ncols, std::move(offsets), std::move(cols), std::move(values));
}

TropicalMatrix TropicalMatrix::identity(std::size_t size) {
  std::vector<std::uint64_t> offsets(size + 1);
  std::vector<Index> cols(size);
  for (std::size_t i = 0; i < size; ++i) {
    offsets[i + 1] = i + 1;
    cols[i] = static_cast<Index>(i);
  }
  return TropicalMatrix(size, size, std::move(offsets), std::move(cols), std::vector<Tropical::Magnitude>(size, 0));
}

Tropical TropicalMatrix::at(std::size_t i, std::size_t j) const {
  if (i >= nrows_ || j >= ncols_) throw InvalidArgument("matrix index out of range");
  const auto first = cols_.begin() + static_cast<std::ptrdiff_t>(offsets_[i]);
  const auto last = cols_.begin() + static_cast<std::ptrdiff_t>(offsets_[i + 1]);
  const auto it = std::lower_bound(first, last, static_cast<Index>(j));
  if (it == last || *it != j) return Tropical::infinity();
  return Tropical{values_[static_cast<std::size_t>(it - cols_.begin())]};
}

std::size_t TropicalMatrix::memory_bytes() const noexcept {
  return offsets_.size() * sizeof(std::uint64_t) + cols_.size() * sizeof(Index) +
         values_.size() * sizeof(Tropical::Magnitude);
}

TropicalVector matvec(const TropicalMatrix& a, const TropicalVector& x, std::size_t threads) {
  if (a.cols() != x.size())
    throw InvalidArgument("matvec: matrix has " + std::to_string(a.cols()) + " columns but vector has " +
                          std::to_string(x.size()) + " entries");
  TropicalVector y(a.rows());
  const auto offsets = a.row_offsets();
  const auto cols = a.col_indices();
  const auto vals = a.values();
  const auto in = x.entries();
  auto out = y.entries();
  detail::parallel_blocks(a.rows(), threads, [&](std::size_t lo, std::size_t hi) {
    for (std::size_t i = lo; i < hi; ++i) {
      auto best = Tropical::kInfinity;
      for (auto k = offsets[i]; k < offsets[i + 1]; ++k) {
        const auto xk = in[cols[k]].value();
        if (xk > Tropical::kInfinity - vals[k]) continue;  // saturates to infinity
        best = std::min(best, vals[k] + xk);
      }
      out[i] = Tropical{best};
    }
  });
  return y;
}

TropicalVector scalar_shift(Tropical::Magnitude shift, const TropicalVector& x) {
  TropicalVector y(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) y[i] = Tropical{shift} * x[i];
  return y;
}

std::optional<Tropical::Magnitude> shifted_equal(const TropicalVector& x, const TropicalVector& y) {
  if (x.size() != y.size()) throw InvalidArgument("shifted_equal: vector lengths differ");
  std::optional<Tropical::Magnitude> shift;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i].is_finite() != y[i].is_finite()) return std::nullopt;
    if (!x[i].is_finite()) continue;
    const auto d = y[i].value() - x[i].value();
    if (d < 0) return std::nullopt;
    if (!shift) shift = d;
    else if (*shift != d) return std::nullopt;
  }
  return shift.value_or(0);
}

}  // namespace cyldom
