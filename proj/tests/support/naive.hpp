#pragma once

// Reference implementations used only by tests. They deliberately share no
// code with the library paths they check.

#include <algorithm>
#include <array>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace naive {

inline constexpr std::int64_t kInf = std::numeric_limits<std::int64_t>::max();

/// All length-n strings over {0,1,2} in lexicographic order.
inline std::vector<std::string> all_strings(std::size_t n) {
  std::vector<std::string> out{""};
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<std::string> next;
    for (const auto& s : out)
      for (char c : {'0', '1', '2'}) next.push_back(s + c);
    out = std::move(next);
  }
  return out;
}

/// True if any of `patterns` occurs in the circular string `w`.
inline bool contains_circular(const std::string& w, std::initializer_list<const char*> patterns) {
  const std::string doubled = w + w.substr(0, 2);
  for (const char* p : patterns)
    if (doubled.find(p) != std::string::npos) return true;
  return false;
}

inline bool suitable(const std::string& w) { return !contains_circular(w, {"111", "211", "112", "212", "020"}); }
inline bool initial(const std::string& w) { return suitable(w) && !contains_circular(w, {"110", "011", "012", "210"}); }
inline bool final_word(const std::string& w) { return suitable(w) && w.find('2') == std::string::npos; }

/// Dense (min,+) product of a full matrix (kInf = absent) with a vector.
inline std::vector<std::int64_t> dense_matvec(const std::vector<std::vector<std::int64_t>>& a,
                                              const std::vector<std::int64_t>& x) {
  std::vector<std::int64_t> y(a.size(), kInf);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < x.size(); ++k)
      if (a[i][k] != kInf && x[k] != kInf) y[i] = std::min(y[i], a[i][k] + x[k]);
  return y;
}

/// Tries every candidate shift b in [0, max_b] against every entry.
inline std::optional<std::int64_t> shifted_scan(const std::vector<std::int64_t>& x, const std::vector<std::int64_t>& y,
                                                std::int64_t max_b) {
  for (std::int64_t b = 0; b <= max_b; ++b) {
    bool ok = true;
    for (std::size_t i = 0; i < x.size() && ok; ++i) {
      if (x[i] == kInf) ok = y[i] == kInf;
      else ok = y[i] == x[i] + b;
    }
    if (ok) return b;
  }
  return std::nullopt;
}

/// Cylinder neighbours of (i, j) computed directly from the coordinates.
inline std::vector<std::array<std::size_t, 2>> cylinder_neighbours(std::size_t n, std::size_t m, std::size_t i,
                                                                    std::size_t j) {
  std::vector<std::array<std::size_t, 2>> out{{(i + n - 1) % n, j}, {(i + 1) % n, j}};
  if (j > 0) out.push_back({i, j - 1});
  if (j + 1 < m) out.push_back({i, j + 1});
  return out;
}

/// Minimum quasi-2-dominating set size per last-column word, by checking
/// all 2^(n*m) subsets. Labels follow the same-or-previous-column rule.
inline std::map<std::string, std::int64_t> quasi_minima_by_last_word(std::size_t n, std::size_t m) {
  std::map<std::string, std::int64_t> best;
  const std::size_t count = n * m;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << count); ++mask) {
    auto in = [&](std::size_t i, std::size_t j) { return ((mask >> (i + n * j)) & 1u) != 0; };
    bool ok = true;
    for (std::size_t j = 0; j < m && ok; ++j)
      for (std::size_t i = 0; i < n && ok; ++i) {
        if (in(i, j)) continue;
        std::size_t k = 0;
        for (auto [a, b] : cylinder_neighbours(n, m, i, j)) k += in(a, b);
        ok = k >= (j + 1 == m ? 1u : 2u);
      }
    if (!ok) continue;
    std::string last;
    for (std::size_t i = 0; i < n; ++i) {
      if (in(i, m - 1)) {
        last += '0';
        continue;
      }
      std::size_t k = 0;
      for (auto [a, b] : cylinder_neighbours(n, m, i, m - 1)) k += b <= m - 1 && in(a, b);
      last += k >= 2 ? '1' : '2';
    }
    const auto size = static_cast<std::int64_t>(__builtin_popcountll(mask));
    auto [it, inserted] = best.emplace(last, size);
    if (!inserted) it->second = std::min(it->second, size);
  }
  return best;
}

}  // namespace naive
