#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace cyldom {

using Trit = std::uint8_t;

/// Largest word length supported by the enumerator.
inline constexpr std::size_t kMaxWordLength = 15;

/// One column of the cylinder written as a circular word over {0,1,2}.
///
/// Position 0 is the most significant digit of the base-3 key, so ordering
/// by key is the same as lexicographic ordering of the symbols.
class CyclicWord {
 public:
  explicit CyclicWord(std::vector<Trit> trits);

  /// Parses the text form, e.g. "0121". Throws InvalidArgument on bad input.
  static CyclicWord parse(std::string_view text);
  static CyclicWord from_key(std::size_t n, std::uint64_t key);
  static CyclicWord uniform(std::size_t n, Trit symbol);

  std::size_t size() const noexcept { return trits_.size(); }
  Trit operator[](std::size_t i) const noexcept { return trits_[i]; }
  /// Symbol at position i taken modulo n (negative positions allowed).
  Trit circular(std::ptrdiff_t i) const noexcept;

  std::span<const Trit> trits() const noexcept { return trits_; }
  std::uint64_t key() const noexcept { return key_; }
  std::string str() const;

  /// Word whose position i holds this word's symbol at position i + shift.
  CyclicWord rotated(std::size_t shift) const;

  friend bool operator==(const CyclicWord& a, const CyclicWord& b) noexcept {
    return a.trits_.size() == b.trits_.size() && a.key_ == b.key_;
  }
  friend std::strong_ordering operator<=>(const CyclicWord& a, const CyclicWord& b) noexcept {
    if (auto c = a.trits_.size() <=> b.trits_.size(); c != 0) return c;
    return a.key_ <=> b.key_;
  }

 private:
  std::vector<Trit> trits_;
  std::uint64_t key_ = 0;
};

// Local rules on a length-3 circular window (left, centre, right).
namespace window {

/// Rejects 111, 211, 112, 212 and 020.
constexpr bool suitable(Trit l, Trit c, Trit r) noexcept {
  if (c == 1) return l == 0 || r == 0;
  if (c == 2 && l == 0 && r == 0) return false;
  return true;
}

/// Suitable and additionally rejects 110, 011, 012, 210.
constexpr bool initial(Trit l, Trit c, Trit r) noexcept {
  if (!suitable(l, c, r)) return false;
  if (c == 1) return l == 0 && r == 0;
  return true;
}

/// Initial, and every 2 has exactly one 0 neighbour in the column.
///
/// This is the condition an actual first column satisfies; the plain initial
/// rule also admits 2s with no 0 neighbour (e.g. the all-2 word).
constexpr bool strict_initial(Trit l, Trit c, Trit r) noexcept {
  if (!initial(l, c, r)) return false;
  if (c == 2) return l == 0 || r == 0;
  return true;
}

/// Can-follow rule at one position: `prev` is the symbol of the preceding
/// column at the same row, (l, c, r) the window of the following column.
constexpr bool follows(Trit prev, Trit l, Trit c, Trit r) noexcept {
  switch (prev) {
    case 0:
      return c != 2 || (l != 0 && r != 0);
    case 1:
      if (c == 0) return true;
      if (c == 1) return l == 0 && r == 0;
      return l == 0 || r == 0;
    default:
      return c == 0;
  }
}

}  // namespace window

/// Which words may label the first column.
enum class InitialRule {
  kStrict,                 // initial, and every 2 has a 0 neighbour
  kPattern,                // initial as defined by the forbidden windows alone
  kPatternWithoutAllTwos,  // kPattern minus the all-2 word
};

bool is_suitable(const CyclicWord& w);
/// Suitable and free of the windows 110, 011, 012, 210.
bool is_initial(const CyclicWord& w);
bool is_strict_initial(const CyclicWord& w);
bool is_initial(const CyclicWord& w, InitialRule rule);
bool is_final(const CyclicWord& w);
std::size_t weight(const CyclicWord& w);

/// True iff `next` may be the column right after `prev`. Throws
/// InvalidArgument on a length mismatch.
bool can_follow(const CyclicWord& next, const CyclicWord& prev);

/// All suitable words of one length, ranked by ascending key.
class WordTable {
 public:
  WordTable() = default;

  std::size_t word_length() const noexcept { return n_; }
  std::size_t size() const noexcept { return keys_.size(); }

  CyclicWord word(std::size_t rank) const;
  std::span<const Trit> trits(std::size_t rank) const noexcept {
    return {trits_.data() + rank * n_, n_};
  }
  std::uint64_t key(std::size_t rank) const noexcept { return keys_[rank]; }
  std::uint32_t weight(std::size_t rank) const noexcept { return weights_[rank]; }
  bool is_initial(std::size_t rank) const noexcept { return initial_[rank] != 0; }
  bool is_strict_initial(std::size_t rank) const noexcept { return strict_initial_[rank] != 0; }
  bool is_initial(std::size_t rank, InitialRule rule) const noexcept;
  bool is_final(std::size_t rank) const noexcept { return final_[rank] != 0; }

  std::optional<std::size_t> index_of(const CyclicWord& w) const noexcept;
  std::optional<std::size_t> index_of_key(std::uint64_t key) const noexcept;

  std::size_t initial_count(InitialRule rule = InitialRule::kStrict) const noexcept;
  std::size_t final_count() const noexcept;

 private:
  friend WordTable enumerate_words(std::size_t n, std::size_t max_length);

  static constexpr std::uint32_t kAbsent = 0xffffffffu;

  std::size_t n_ = 0;
  std::vector<std::uint64_t> keys_;
  std::vector<Trit> trits_;
  std::vector<std::uint32_t> weights_;
  std::vector<std::uint8_t> initial_;
  std::vector<std::uint8_t> strict_initial_;
  std::vector<std::uint8_t> final_;
  // Dense key -> rank lookup over all 3^n keys.
  std::vector<std::uint32_t> rank_of_key_;
};

/// Enumerates every suitable word of length n. Throws InvalidArgument for
/// n < 3 and ResourceLimit for n > max_length.
WordTable enumerate_words(std::size_t n, std::size_t max_length = kMaxWordLength);

std::uint64_t pow3(std::size_t e) noexcept;

}  // namespace cyldom
