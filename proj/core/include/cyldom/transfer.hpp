#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "cyldom/cyclic_words.hpp"
#include "cyldom/tropical.hpp"

namespace cyldom {

struct EngineOptions {
  std::size_t threads = 1;
  std::uint64_t memory_budget = std::uint64_t{8} << 30;
  std::size_t max_word_length = kMaxWordLength;
  InitialRule initial_rule = InitialRule::kStrict;
};

/// Word table, transition matrix and initial vector for one cycle length.
struct TransferSystem {
  std::size_t n = 0;
  WordTable table;
  TropicalMatrix transitions;  // row = next word, column = previous word
  TropicalVector initial;
  std::vector<std::size_t> final_indices;
  std::size_t threads = 1;

  static TransferSystem build(std::size_t n, const EngineOptions& options = {});
  /// Same as build() but with a transition matrix supplied by the caller
  /// (e.g. loaded from a cache); its shape is validated against the table.
  static TransferSystem with_matrix(std::size_t n, TropicalMatrix transitions, const EngineOptions& options = {});
};

TropicalVector build_initial_vector(const WordTable& table, InitialRule rule = InitialRule::kStrict);

/// Number of stored entries the transition matrix will hold.
std::uint64_t count_transitions(const WordTable& table, std::size_t threads = 1);
/// Bytes needed to assemble a matrix with `nonzeros` entries over `rows` rows.
std::uint64_t estimate_matrix_bytes(std::uint64_t rows, std::uint64_t nonzeros);

/// A_pq = weight(p) when p can follow q. Throws ResourceLimit when the
/// estimated assembly footprint exceeds `options.memory_budget`.
TropicalMatrix build_transition_matrix(const WordTable& table, const EngineOptions& options = {});

/// X^m for m >= 1 (X^1 is the initial vector).
TropicalVector iterate(const TransferSystem& sys, std::size_t m);
/// X^1 .. X^count, element k holding X^(k+1).
std::vector<TropicalVector> iterate_all(const TransferSystem& sys, std::size_t count);

/// Minimum of X over the final words.
Tropical::Magnitude min_over_final(const TransferSystem& sys, const TropicalVector& x);

std::int64_t gamma2_fixed(const TransferSystem& sys, std::size_t m);
std::int64_t gamma2_fixed(std::size_t n, std::size_t m, const EngineOptions& options = {});

/// gamma_2(C_n x P_(m+a)) - gamma_2(C_n x P_m) = b for all m >= m0.
struct Recurrence {
  std::size_t n = 0;
  std::size_t m0 = 0;
  std::size_t a = 0;
  std::int64_t b = 0;
  std::map<std::size_t, std::int64_t> boundary;   // m0 <= m < m0 + a
  std::map<std::size_t, std::int64_t> remaining;  // 2 <= m < m0

  friend bool operator==(const Recurrence&, const Recurrence&) = default;
};

struct RecurrenceSearch {
  std::size_t max_steps = 20;
  std::size_t max_period = 6;
};

/// Looks for the smallest m0 >= 2, then the smallest period a, with
/// X^(m0+a) = b (x) X^m0 among X^1..X^max_steps.
std::optional<Recurrence> find_recurrence(const TransferSystem& sys, RecurrenceSearch search = {});
std::optional<Recurrence> find_recurrence(std::size_t n, RecurrenceSearch search = {},
                                          const EngineOptions& options = {});

/// Evaluator for gamma_2(C_n x P_m), m >= 2, from a recurrence.
class ClosedForm {
 public:
  explicit ClosedForm(Recurrence rec);

  const Recurrence& recurrence() const noexcept { return rec_; }

  std::int64_t evaluate(std::size_t m) const;
  /// The periodic-plus-linear rule continued to any m >= 1, including the
  /// pre-periodic range where it may disagree with the true value.
  std::int64_t extrapolate(std::size_t m) const;
  /// True when m lies before m0 and its value breaks the periodic rule.
  bool is_exception(std::size_t m) const;
  /// Smallest m >= 2 from which every value follows the periodic rule.
  std::size_t regular_from() const;

 private:
  Recurrence rec_;
};

ClosedForm solve_closed_form(const Recurrence& rec);

struct ConjectureComparison {
  std::size_t m = 0;
  std::int64_t computed = 0;
  std::int64_t predicted = 0;
  bool match = false;
};

struct ConjectureReport {
  std::size_t n = 0;
  std::size_t residue = 0;  // n mod 3
  std::size_t expected_a = 0;
  std::int64_t expected_b = 0;
  bool pattern_match = false;
  /// False for n = 5, whose values alternate by parity instead.
  bool formula_class_applies = true;
  std::vector<ConjectureComparison> comparisons;
  bool formula_match = false;
  std::string note;
};

/// Compares (a, b) with the n mod 3 pattern and the closed form with the
/// general per-class formula on m0 <= m < m0 + samples. Never throws on a
/// mismatch; the report records it.
ConjectureReport conjecture_check(std::size_t n, const Recurrence& rec, std::size_t samples = 40);

/// Value of the per-class general formula for gamma_2(C_n x P_m).
std::int64_t conjectured_gamma2(std::size_t n, std::size_t m);

void to_json(nlohmann::json& j, const Recurrence& rec);
void from_json(const nlohmann::json& j, Recurrence& rec);

}  // namespace cyldom
