#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>

#include "cyldom/tropical.hpp"

namespace cyldom {

// On-disk transition matrix:
//   "TROPMAT1" | n | rows | nnz | offsets[rows+1] | cols[nnz] | values[nnz]
// with every number a 64-bit little-endian unsigned integer.

void write_matrix_cache(std::ostream& out, std::uint64_t n, const TropicalMatrix& a);
void write_matrix_cache(const std::filesystem::path& path, std::uint64_t n, const TropicalMatrix& a);

/// Reads a cached matrix, rejecting bad magic, a header that disagrees with
/// the expected (n, rows), or inconsistent arrays. Throws InvalidArgument.
TropicalMatrix read_matrix_cache(std::istream& in, std::uint64_t expected_n, std::uint64_t expected_rows);
TropicalMatrix read_matrix_cache(const std::filesystem::path& path, std::uint64_t expected_n,
                                 std::uint64_t expected_rows);

}  // namespace cyldom
