#include "cyldom/matrix_cache.hpp"

#include <array>
#include <fstream>
#include <istream>
#include <ostream>
#include <string>
#include <string_view>

#include "cyldom/errors.hpp"

namespace cyldom {
namespace {

constexpr std::string_view kMagic = "TROPMAT1";

void put_u64(std::ostream& out, std::uint64_t v) {
  std::array<char, 8> b{};
  for (std::size_t i = 0; i < 8; ++i) b[i] = static_cast<char>((v >> (8 * i)) & 0xffu);
  out.write(b.data(), b.size());
}

std::uint64_t get_u64(std::istream& in) {
  std::array<unsigned char, 8> b{};
  if (!in.read(reinterpret_cast<char*>(b.data()), b.size()))
    throw InvalidArgument("matrix cache: truncated file");
  std::uint64_t v = 0;
  for (std::size_t i = 8; i-- > 0;) v = (v << 8) | b[i];
  return v;
}

}  // namespace

void write_matrix_cache(std::ostream& out, std::uint64_t n, const TropicalMatrix& a) {
  out.write(kMagic.data(), static_cast<std::streamsize>(kMagic.size()));
  put_u64(out, n);
  put_u64(out, a.rows());
  put_u64(out, a.nonzeros());
  for (auto v : a.row_offsets()) put_u64(out, v);
  for (auto v : a.col_indices()) put_u64(out, v);
  for (auto v : a.values()) put_u64(out, static_cast<std::uint64_t>(v));
  if (!out) throw ResourceLimit("matrix cache: write failed");
}

void write_matrix_cache(const std::filesystem::path& path, std::uint64_t n, const TropicalMatrix& a) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw ResourceLimit("matrix cache: cannot open " + path.string() + " for writing");
  write_matrix_cache(out, n, a);
}

TropicalMatrix read_matrix_cache(std::istream& in, std::uint64_t expected_n, std::uint64_t expected_rows) {
  std::array<char, 8> magic{};
  if (!in.read(magic.data(), magic.size()) || std::string_view(magic.data(), magic.size()) != kMagic)
    throw InvalidArgument("matrix cache: bad magic");
  const auto n = get_u64(in);
  const auto rows = get_u64(in);
  const auto nnz = get_u64(in);
  if (n != expected_n || rows != expected_rows)
    throw InvalidArgument("matrix cache: header (n=" + std::to_string(n) + ", rows=" + std::to_string(rows) +
                          ") does not match expected (n=" + std::to_string(expected_n) +
                          ", rows=" + std::to_string(expected_rows) + ")");
  if (nnz > rows * rows) throw InvalidArgument("matrix cache: nonzero count exceeds rows^2");

  std::vector<std::uint64_t> offsets(rows + 1);
  for (auto& v : offsets) v = get_u64(in);
  std::vector<TropicalMatrix::Index> cols(nnz);
  for (auto& v : cols) {
    const auto c = get_u64(in);
    if (c >= rows) throw InvalidArgument("matrix cache: column index out of range");
    v = static_cast<TropicalMatrix::Index>(c);
  }
  std::vector<Tropical::Magnitude> values(nnz);
  for (auto& v : values) {
    const auto x = get_u64(in);
    if (x >= static_cast<std::uint64_t>(Tropical::kInfinity)) throw InvalidArgument("matrix cache: infinite value");
    v = static_cast<Tropical::Magnitude>(x);
  }
  return TropicalMatrix(rows, rows, std::move(offsets), std::move(cols), std::move(values));
}

TropicalMatrix read_matrix_cache(const std::filesystem::path& path, std::uint64_t expected_n,
                                 std::uint64_t expected_rows) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidArgument("matrix cache: cannot open " + path.string());
  return read_matrix_cache(in, expected_n, expected_rows);
}

}  // namespace cyldom
