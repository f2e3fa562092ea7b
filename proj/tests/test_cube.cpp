//
// aimon - rewriting systems for asymmetric Artin and Coxeter-like monoids
// Copyright (C) 2026 The aimon authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//

#include <catch2/catch_amalgamated.hpp>

#include <algorithm>  // for max
#include <stdexcept>  // for invalid_argument

#include "aimon/congruence.hpp"
#include "aimon/cube.hpp"

using namespace aimon;

namespace {
  constexpr letter_type a = 1, b = 2, c = 3;
}  // namespace

TEST_CASE("complement table of the cube presentation", "[cube]") {
  Presentation    p = cube_presentation();
  ComplementTable t = complement_table(p);
  CHECK(t.at(a, b) == word_type{b, a});
  CHECK(t.at(b, a) == word_type{a, b});
  CHECK(t.at(b, c) == word_type{c, b});
  CHECK(t.at(c, b) == word_type{b, c, b});
  CHECK(t.at(a, c) == word_type{c});
  CHECK(t.at(c, a) == word_type{a});
  for (letter_type s = 1; s <= 3; ++s) {
    CHECK(t.at(s, s).empty());
  }
  // s (s\t) and t (t\s) are the two sides of a relation.
  for (letter_type s = 1; s <= 3; ++s) {
    for (letter_type u = 1; u <= 3; ++u) {
      if (s == u) {
        continue;
      }
      relation_type rel{concat(word_type{s}, t.at(s, u)), concat(word_type{u}, t.at(u, s))};
      relation_type flipped{rel.second, rel.first};
      CHECK(std::count(p.relations.begin(), p.relations.end(), rel)
                + std::count(p.relations.begin(), p.relations.end(), flipped)
            == 1);
    }
  }
}

TEST_CASE("complement tables need complemented presentations", "[cube]") {
  Presentation twice = cube_presentation();
  twice.relations.push_back({{1, 2, 1, 2}, {2, 1, 2, 1}});
  CHECK_THROWS_AS(complement_table(twice), std::invalid_argument);

  Presentation missing = cube_presentation();
  missing.relations.pop_back();
  CHECK_THROWS_AS(complement_table(missing), std::invalid_argument);

  Presentation same_start{2, {{{1, 2}, {1, 1}}}};
  CHECK_THROWS_AS(complement_table(same_start), std::invalid_argument);
}

TEST_CASE("subword reversing", "[cube]") {
  ComplementTable t = complement_table(cube_presentation());
  auto            r = reverse({b, a}, {c}, t);
  CHECK(r.status == reversal_status::complete);
  CHECK(r.word == word_type{c, b, a});
  r = reverse({a, b}, {c, b}, t);
  CHECK(r.status == reversal_status::complete);
  CHECK(r.word == word_type{c, b, a, b});
  r = reverse({a, c, b}, {a, c, b}, t);
  CHECK(r.status == reversal_status::complete);
  CHECK(r.word.empty());
  CHECK(reverse({}, {a, b}, t).word == word_type{a, b});
  CHECK(reverse({a, b}, {}, t).word.empty());
  CHECK_THROWS_AS(reverse({a}, {b}, t, 0), std::invalid_argument);
  CHECK(reverse({b, a}, {c}, t, 1).status == reversal_status::budget_exceeded);
}

TEST_CASE("reversing is sound for short words", "[cube][property]") {
  Presentation    p = cube_presentation();
  ComplementTable t = complement_table(p);
  std::size_t     checked = 0;
  for (auto const& u : all_words(3, 3)) {
    for (auto const& v : all_words(3, 3)) {
      auto uv = reverse(u, v, t);
      auto vu = reverse(v, u, t);
      REQUIRE(uv.status == reversal_status::complete);
      REQUIRE(vu.status == reversal_status::complete);
      word_type   left  = concat(u, uv.word);
      word_type   right = concat(v, vu.word);
      std::size_t bound = std::max(left.size(), right.size()) + 2;
      INFO(format_word(left) << " vs " << format_word(right));
      CHECK(bfs_equal(p, left, right, bound).status == verdict::equal);
      ++checked;
    }
  }
  CHECK(checked == 1600);
}

TEST_CASE("the cube condition fails", "[cube]") {
  Presentation p   = cube_presentation();
  auto         abc = cube_condition_check(p, a, b, c);
  CHECK(abc.w1 == word_type{c, b, a});
  CHECK(abc.w2 == word_type{c, b, a, b});
  CHECK(abc.verdict.status != verdict::equal);
  CHECK(abc.verdict.status == verdict::distinct_within_bound);

  auto acb = cube_condition_check(p, a, c, b);
  CHECK(acb.w1 == word_type{b, c, b, a, b});
  CHECK(acb.w2 == word_type{b, a, c, b, a, b});
  CHECK(acb.verdict.status == verdict::distinct_within_bound);

  // In a braid-like presentation the degenerate triple with z = y is trivial.
  Presentation braid{2, {{{1, 2, 1}, {2, 1, 2}}}};
  auto         degenerate = cube_condition_check(braid, a, b, b);
  CHECK(degenerate.w1 == degenerate.w2);
  CHECK(degenerate.verdict.status == verdict::equal);

  CHECK_THROWS(cube_condition_check(p, a, b, c, 1));
}

TEST_CASE("shapes of the upper bounds", "[cube]") {
  CHECK(is_p_shape({b, c, b}));
  CHECK(is_p_shape({c, c, b, c, b}));
  CHECK_FALSE(is_p_shape({b, c, b, c}));
  CHECK_FALSE(is_p_shape({}));
  CHECK(is_q_shape({c, a, b, c, b, a, b}));
  CHECK(is_q_shape({b, a, b, c, b, a}));
  CHECK_FALSE(is_q_shape({b, c, b}));
}

TEST_CASE("census of the two upper bounds", "[cube]") {
  Presentation p = cube_presentation();
  for (std::size_t len = 7; len <= 10; ++len) {
    Census census = upper_bound_census(p, {{b, c, b}, {c, a, b, c, b, a, b}}, len);
    REQUIRE(census.classes.size() == 2);
    CHECK(census.disjoint);
    CHECK_FALSE(census.classes[0].truncated);
    CHECK(census.classes[0].words.size() == len - 2);
    for (auto const& w : census.classes[0].words) {
      CHECK(is_p_shape(w));
    }
    for (auto const& w : census.classes[1].words) {
      CHECK(is_q_shape(w));
      CHECK_FALSE((w.size() >= 3 && w[0] == b && w[1] == c && w[2] == b));
    }
    auto const& q = census.classes[1].words;
    CHECK(std::count(q.begin(), q.end(), word_type{b, a, b, c, b, a}) == 1);
  }
  CHECK(bfs_equal(p, {c, a, b, c, b, a, b}, {b, a, b, c, b, a}, 9).status == verdict::equal);

  Report r = verify_cube();
  CHECK(r.ok());
  CHECK(r.fact_value("w1") == "3 2 1");
  CHECK(r.fact_value("w2") == "3 2 1 2");
  CHECK(r.fact_value("p_class_size") == "7");
  CHECK(r.fact_value("q_class_size") == "50");
}
