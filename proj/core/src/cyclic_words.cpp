#include "cyldom/cyclic_words.hpp"

#include <algorithm>
#include <string>

#include "cyldom/errors.hpp"
#include "word_search.hpp"

namespace cyldom {

std::uint64_t pow3(std::size_t e) noexcept {
  std::uint64_t r = 1;
  while (e-- > 0) r *= 3;
  return r;
}

CyclicWord::CyclicWord(std::vector<Trit> trits) : trits_(std::move(trits)) {
  if (trits_.size() < 3)
    throw InvalidArgument("word length must be at least 3, got " + std::to_string(trits_.size()));
  if (trits_.size() > 40) throw InvalidArgument("word length exceeds 40");
  for (Trit t : trits_) {
    if (t > 2) throw InvalidArgument("word symbols must be 0, 1 or 2");
    key_ = key_ * 3 + t;
  }
}

CyclicWord CyclicWord::parse(std::string_view text) {
  std::vector<Trit> trits;
  trits.reserve(text.size());
  for (char ch : text) {
    if (ch < '0' || ch > '2')
      throw InvalidArgument("invalid word '" + std::string(text) + "': symbols must be 0, 1 or 2");
    trits.push_back(static_cast<Trit>(ch - '0'));
  }
  return CyclicWord(std::move(trits));
}

CyclicWord CyclicWord::from_key(std::size_t n, std::uint64_t key) {
  std::vector<Trit> trits(n);
  for (std::size_t i = n; i-- > 0;) {
    trits[i] = static_cast<Trit>(key % 3);
    key /= 3;
  }
  if (key != 0) throw InvalidArgument("key out of range for word length " + std::to_string(n));
  return CyclicWord(std::move(trits));
}

CyclicWord CyclicWord::uniform(std::size_t n, Trit symbol) {
  return CyclicWord(std::vector<Trit>(n, symbol));
}

Trit CyclicWord::circular(std::ptrdiff_t i) const noexcept {
  const auto n = static_cast<std::ptrdiff_t>(trits_.size());
  return trits_[static_cast<std::size_t>(((i % n) + n) % n)];
}

std::string CyclicWord::str() const {
  std::string s;
  s.reserve(trits_.size());
  for (Trit t : trits_) s.push_back(static_cast<char>('0' + t));
  return s;
}

CyclicWord CyclicWord::rotated(std::size_t shift) const {
  std::vector<Trit> out(trits_.size());
  for (std::size_t i = 0; i < trits_.size(); ++i) out[i] = circular(static_cast<std::ptrdiff_t>(i + shift));
  return CyclicWord(std::move(out));
}

namespace {

template <class Pred>
bool all_windows(const CyclicWord& w, Pred pred) {
  const auto n = static_cast<std::ptrdiff_t>(w.size());
  for (std::ptrdiff_t i = 0; i < n; ++i)
    if (!pred(w.circular(i - 1), w[static_cast<std::size_t>(i)], w.circular(i + 1))) return false;
  return true;
}

}  // namespace

bool is_suitable(const CyclicWord& w) { return all_windows(w, window::suitable); }
bool is_initial(const CyclicWord& w) { return all_windows(w, window::initial); }
bool is_strict_initial(const CyclicWord& w) { return all_windows(w, window::strict_initial); }

bool is_initial(const CyclicWord& w, InitialRule rule) {
  switch (rule) {
    case InitialRule::kStrict:
      return is_strict_initial(w);
    case InitialRule::kPatternWithoutAllTwos:
      if (std::ranges::all_of(w.trits(), [](Trit t) { return t == 2; })) return false;
      [[fallthrough]];
    default:
      return is_initial(w);
  }
}

bool is_final(const CyclicWord& w) {
  return is_suitable(w) && std::ranges::none_of(w.trits(), [](Trit t) { return t == 2; });
}

std::size_t weight(const CyclicWord& w) {
  return static_cast<std::size_t>(std::ranges::count(w.trits(), Trit{0}));
}

bool can_follow(const CyclicWord& next, const CyclicWord& prev) {
  if (next.size() != prev.size())
    throw InvalidArgument("can_follow: word lengths differ (" + std::to_string(next.size()) + " vs " +
                          std::to_string(prev.size()) + ")");
  const auto n = static_cast<std::ptrdiff_t>(next.size());
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    const auto c = static_cast<std::size_t>(i);
    if (!window::follows(prev[c], next.circular(i - 1), next[c], next.circular(i + 1))) return false;
  }
  return true;
}

CyclicWord WordTable::word(std::size_t rank) const {
  auto t = trits(rank);
  return CyclicWord(std::vector<Trit>(t.begin(), t.end()));
}

std::optional<std::size_t> WordTable::index_of_key(std::uint64_t key) const noexcept {
  if (key >= rank_of_key_.size() || rank_of_key_[key] == kAbsent) return std::nullopt;
  return rank_of_key_[key];
}

std::optional<std::size_t> WordTable::index_of(const CyclicWord& w) const noexcept {
  if (w.size() != n_) return std::nullopt;
  return index_of_key(w.key());
}

bool WordTable::is_initial(std::size_t rank, InitialRule rule) const noexcept {
  switch (rule) {
    case InitialRule::kStrict:
      return is_strict_initial(rank);
    case InitialRule::kPatternWithoutAllTwos:
      if (keys_[rank] == pow3(n_) - 1) return false;  // all-2 word
      [[fallthrough]];
    default:
      return is_initial(rank);
  }
}

std::size_t WordTable::initial_count(InitialRule rule) const noexcept {
  std::size_t count = 0;
  for (std::size_t p = 0; p < size(); ++p) count += is_initial(p, rule);
  return count;
}

std::size_t WordTable::final_count() const noexcept {
  return static_cast<std::size_t>(std::ranges::count(final_, std::uint8_t{1}));
}

WordTable enumerate_words(std::size_t n, std::size_t max_length) {
  if (n < 3) throw InvalidArgument("word length n must satisfy n >= 3, got " + std::to_string(n));
  if (n > max_length || n > kMaxWordLength)
    throw ResourceLimit("word length n=" + std::to_string(n) + " exceeds the configured cap of " +
                        std::to_string(std::min(max_length, kMaxWordLength)));

  WordTable t;
  t.n_ = n;
  t.rank_of_key_.assign(pow3(n), WordTable::kAbsent);

  auto ok = [](std::size_t, Trit l, Trit c, Trit r) { return window::suitable(l, c, r); };
  auto visit = [&](std::span<const Trit> w, std::uint64_t key) {
    bool init = true, strict = true, fin = true;
    std::uint32_t zeros = 0;
    for (std::size_t i = 0; i < n; ++i) {
      const Trit l = w[(i + n - 1) % n], c = w[i], r = w[(i + 1) % n];
      init = init && window::initial(l, c, r);
      strict = strict && window::strict_initial(l, c, r);
      fin = fin && c != 2;
      zeros += c == 0;
    }
    t.rank_of_key_[key] = static_cast<std::uint32_t>(t.keys_.size());
    t.keys_.push_back(key);
    t.trits_.insert(t.trits_.end(), w.begin(), w.end());
    t.weights_.push_back(zeros);
    t.initial_.push_back(init);
    t.strict_initial_.push_back(strict);
    t.final_.push_back(fin);
  };
  detail::for_each_cyclic_word(n, ok, visit);
  return t;
}

}  // namespace cyldom
