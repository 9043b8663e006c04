#include <doctest.h>

#include <functional>

#include "cyldom/errors.hpp"
#include "cyldom/oracle.hpp"
#include "support/naive.hpp"

using namespace cyldom;

namespace {

CyclicWord W(const char* s) { return CyclicWord::parse(s); }

std::vector<CyclicWord> list(std::initializer_list<const char*> ws) {
  std::vector<CyclicWord> out;
  for (auto w : ws) out.push_back(W(w));
  return out;
}

// Calls visit on every word list of length m that passes word_list_validate.
void for_each_valid_list(std::size_t n, std::size_t m, const std::function<void(const std::vector<CyclicWord>&)>& visit) {
  const auto table = enumerate_words(n);
  std::vector<CyclicWord> cur;
  std::function<void()> rec = [&] {
    if (cur.size() == m) {
      visit(cur);
      return;
    }
    for (std::size_t r = 0; r < table.size(); ++r) {
      const auto w = table.word(r);
      if (cur.empty() ? !is_strict_initial(w) : !can_follow(w, cur.back())) continue;
      cur.push_back(w);
      rec();
      cur.pop_back();
    }
  };
  rec();
}

}  // namespace

TEST_CASE("cylinder structure") {
  const auto g = build_cylinder(4, 2);
  CHECK(g.vertex_count() == 8);
  CHECK(g.edge_count() == 12);
  CHECK(g.index(3, 1) == 7);
  CHECK(g.row_of(7) == 3);
  CHECK(g.column_of(7) == 1);
  for (std::size_t n = 3; n <= 6; ++n)
    for (std::size_t m = 2; m <= 5; ++m) {
      const auto h = build_cylinder(n, m);
      CHECK(h.edge_count() == n * m + n * (m - 1));
      for (std::size_t j = 0; j < m; ++j)
        for (std::size_t i = 0; i < n; ++i) {
          const auto nb = h.neighbors(h.index(i, j));
          const auto expected = naive::cylinder_neighbours(n, m, i, j);
          REQUIRE(nb.size() == expected.size());
          for (std::size_t k = 0; k < nb.size(); ++k) CHECK(nb[k] == h.index(expected[k][0], expected[k][1]));
        }
    }
  CHECK_THROWS_AS(build_cylinder(2, 3), InvalidArgument);
  CHECK_THROWS_AS(build_cylinder(3, 1), InvalidArgument);
}

TEST_CASE("domination predicates") {
  const auto g = build_cylinder(3, 2);
  const auto all = VertexSet::all(6);
  CHECK(is_2_dominating(g, all));
  CHECK_FALSE(is_2_dominating(g, VertexSet(6)));

  // Column 0 fully in the set: each column-1 vertex sees only one member.
  const auto col0 = VertexSet::from_mask(6, 0b000111);
  CHECK_FALSE(is_2_dominating(g, col0));
  CHECK(is_quasi_2_dominating(g, col0));
  CHECK(col0.str(g) == "0,0;1,0;2,0");
  CHECK_THROWS_AS(is_2_dominating(g, VertexSet(5)), InvalidArgument);
}

TEST_CASE("brute force minimum") {
  CHECK(brute_gamma2(3, 2) == 3);
  CHECK(brute_gamma2(3, 3) == 4);
  CHECK(brute_gamma2(4, 4) == 8);
  const auto r = brute_minimum_2_dominating(4, 3);
  CHECK(r.gamma2 == 6);
  CHECK(r.witness.size() == 6);
  CHECK(is_2_dominating(build_cylinder(4, 3), r.witness));
  CHECK_THROWS_AS(brute_gamma2(5, 4), ResourceLimit);
  CHECK_NOTHROW(brute_gamma2(5, 4, 20));
  CHECK_THROWS_AS(brute_gamma2(3, 2, 64), ResourceLimit);
}

TEST_CASE("property: brute force witness is minimal") {
  for (std::size_t n = 3; n <= 4; ++n)
    for (std::size_t m = 2; m <= 4; ++m) {
      CAPTURE(n);
      CAPTURE(m);
      const auto g = build_cylinder(n, m);
      const auto r = brute_minimum_2_dominating(n, m);
      CHECK(is_2_dominating(g, r.witness));
      const auto count = n * m;
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << count); ++mask)
        if (static_cast<std::int64_t>(__builtin_popcountll(mask)) == r.gamma2 - 1)
          REQUIRE_FALSE(is_2_dominating(g, VertexSet::from_mask(count, mask)));
    }
}

TEST_CASE("word list decode and validate") {
  const auto words = list({"000", "222"});
  const auto d = word_list_decode(words);
  CHECK(d.members.size() == 3);
  CHECK(d.labels == std::vector<Trit>{0, 0, 0, 2, 2, 2});
  CHECK(word_list_validate(words));
  CHECK_FALSE(word_list_validate(list({"000", "012"})));
  CHECK_FALSE(word_list_validate(list({"011", "000"})));   // first word not initial
  CHECK_FALSE(word_list_validate(list({"0222", "0000"})));  // 2 without a 0 neighbour
  CHECK(word_list_validate(list({"0222", "0000"}), InitialRule::kPattern));
  CHECK_FALSE(word_list_validate({}));
  CHECK_THROWS_AS(word_list_decode(std::vector<CyclicWord>{}), InvalidArgument);
  CHECK_THROWS_AS(word_list_decode(list({"000", "0000"})), InvalidArgument);
}

TEST_CASE("property: valid word lists decode to quasi-2-dominating sets") {
  for (std::size_t n : {3u, 4u})
    for (std::size_t m : {2u, 3u}) {
      CAPTURE(n);
      CAPTURE(m);
      const auto g = build_cylinder(n, m);
      std::size_t lists = 0;
      for_each_valid_list(n, m, [&](const std::vector<CyclicWord>& words) {
        ++lists;
        const auto d = word_list_decode(words);
        REQUIRE(is_quasi_2_dominating(g, d.members));
        CHECK(label_columns(g, d.members) == words);
        CHECK(is_final(words.back()) == is_2_dominating(g, d.members));
      });
      CHECK(lists > 0);
    }
}

TEST_CASE("property: every quasi-2-dominating set labels to a valid word list") {
  for (std::size_t n : {3u, 4u})
    for (std::size_t m : {2u, 3u}) {
      CAPTURE(n);
      CAPTURE(m);
      const auto g = build_cylinder(n, m);
      const auto count = n * m;
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << count); ++mask) {
        const auto r = VertexSet::from_mask(count, mask);
        if (!is_quasi_2_dominating(g, r)) continue;
        const auto words = label_columns(g, r);
        REQUIRE(word_list_validate(words));
        CHECK(word_list_decode(words).members == r);
      }
    }
}

TEST_CASE("label_columns rejects uncovered vertices") {
  const auto g = build_cylinder(3, 2);
  CHECK_THROWS_AS(label_columns(g, VertexSet(6)), InvalidArgument);
}
