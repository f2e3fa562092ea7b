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

#include <set>        // for set
#include <stdexcept>  // for invalid_argument
#include <tuple>      // for tuple

#include "aimon/ci_matrix.hpp"
#include "aimon/congruence.hpp"
#include "aimon/garside.hpp"
#include "aimon/rewrite_a.hpp"
#include "aimon/rewrite_m.hpp"
#include "support/partition.hpp"

using namespace aimon;

namespace {
  std::size_t far_inversions(word_type const& w) {
    std::size_t n = 0;
    for (std::size_t i = 0; i < w.size(); ++i) {
      for (std::size_t j = i + 1; j < w.size(); ++j) {
        n += is_commuting_descent(w[i], w[j]);
      }
    }
    return n;
  }

  using triple_key = std::tuple<word_type, word_type, word_type>;

  MRules restricted() {
    MRules r;
    r.interleaved = false;
    return r;
  }
}  // namespace

TEST_CASE("M matches", "[rewrite_m]") {
  auto m = m_matches({1, 1});
  REQUIRE(m.size() == 1);
  CHECK(m[0].kind == rule_kind::square_run);
  CHECK(m[0].params == std::vector<std::size_t>{2, 1});

  m = m_matches({2, 1, 2, 1});
  REQUIRE(m.size() == 1);
  CHECK(m[0].kind == rule_kind::square_run);
  CHECK(m[0].params == std::vector<std::size_t>{3, 1});

  m = m_matches({1, 2, 1, 2});
  REQUIRE(m.size() == 1);
  CHECK(m[0].kind == rule_kind::staircase);
  CHECK(m[0].params == std::vector<std::size_t>{1, 2});
  CHECK(m[0].cut_begin == 3);
  CHECK(m[0].cut_end == 4);

  CHECK(m_matches({2, 1, 2, 3}).empty());
}

TEST_CASE("M normal forms", "[rewrite_m]") {
  CHECK(m_reduce({1, 1}) == word_type{1});
  CHECK(m_reduce({1, 2, 1, 2}) == word_type{1, 2, 1});
  CHECK(m_reduce({2, 1, 2, 1}) == word_type{1, 2, 1});
  CHECK(m_reduce({}).empty());
  CHECK(m_equal({1, 1, 2, 1}, {1, 2, 1}));
  CHECK(m_equal({1, 1, 2, 1}, {1, 2, 1, 2}));
  CHECK_FALSE(m_equal({1, 2}, {2, 1}));
  CHECK(m_is_reduced({1, 2, 1}));
  CHECK_FALSE(m_is_reduced({2, 2}));

  Presentation p = ci_presentation(CIMatrix::chain(3));
  CHECK(bfs_equal(p, {1, 1, 2, 1}, {1, 2, 1}, 8).status == verdict::equal);
}

TEST_CASE("interleaved staircases are needed", "[rewrite_m]") {
  word_type w{1, 3, 2, 1, 2};
  CHECK(w == staircase_word(1, 2, {{3}}, {{}}, true));
  auto m = m_matches(w);
  REQUIRE(m.size() == 1);
  CHECK(m[0].kind == rule_kind::staircase);
  CHECK(m_reduce(w) == word_type{1, 3, 2, 1});

  // Without interleaving nothing matches, so the restricted strategy stops
  // at a word that is not the normal form.
  CHECK(m_matches(w, restricted()).empty());
  CHECK(m_reduce(w, restricted()) == w);
  Presentation p = ci_presentation(CIMatrix::chain(3));
  CHECK(bfs_equal(p, w, {1, 3, 2, 1}, 9).status == verdict::equal);
}

TEST_CASE("staircase words", "[rewrite_m]") {
  CHECK(staircase_word(1, 2, {{}}, {{}}, true) == word_type{1, 2, 1, 2});
  CHECK(staircase_word(1, 3, {{}, {}}, {{}, {}}, false) == word_type{1, 2, 1, 3, 2});
  CHECK(staircase_word(2, 4, {{}, {5}}, {{}, {1}}, true) == word_type{2, 3, 2, 5, 4, 3, 1, 4});
  CHECK(whole_word_match(staircase_word(2, 4, {{}, {5}}, {{}, {1}}, true), m_matcher()));
}

TEST_CASE("M critical pairs", "[rewrite_m]") {
  std::set<triple_key> all;
  for (auto const& t : m_critical_pairs(5, MCaps{5, 1})) {
    all.emplace(t.q, t.r, t.s);
    CHECK(whole_word_match(concat(t.q, t.r), m_matcher()).has_value());
    CHECK(whole_word_match(concat(t.r, t.s), m_matcher()).has_value());
  }
  CHECK(all.count({{5}, {3}, {1}}) == 1);
  // ((x_a,x_b](x_a,x_c], (x_c,x_b], (x_b,x_d](x_c,x_d]) for (a,c,b,d) = (3,3,2,1).
  CHECK(all.count({{2}, {2}, {1, 2, 1}}) == 1);
}

TEST_CASE("M critical pairs against brute-force overlaps", "[rewrite_m][oracle]") {
  std::set<triple_key> brute;
  for (auto const& t : overlap_triples(left_hand_sides(3, 10, m_matcher()))) {
    brute.emplace(t.q, t.r, t.s);
  }
  std::size_t listed = 0;
  for (auto const& t : m_critical_pairs(3, MCaps{3, 1})) {
    CHECK(brute.count({t.q, t.r, t.s}) == 1);
    ++listed;
  }
  CHECK(listed > 0);

  Report r;
  for (auto const& t : overlap_triples(left_hand_sides(4, 9, m_matcher()))) {
    check_triple(t, m_matcher(), r);
  }
  CHECK(r.checks_run > 18'000);
  CHECK(r.ok());
}

TEST_CASE("M confluence audit", "[rewrite_m][audit]") {
  Report r = m_confluence_audit(5, MCaps{5, 1});
  CHECK(r.ok());
  std::vector<std::pair<char, char const*>> expected{
      {'a', "1"},    {'b', "10"},  {'c', "10"},  {'d', "2652"}, {'e', "2652"},
      {'f', "70"},   {'g', "4597"}, {'h', "852"}, {'i', "2388"}, {'j', "3356"}};
  for (auto const& [family, count] : expected) {
    INFO("family " << family);
    CHECK(r.fact_value(std::string("family_") + family) == count);
  }
  CHECK(m_confluence_audit(4).ok());
  CHECK_FALSE(m_confluence_audit(5, MCaps{5, 1}, restricted(), 100).ok());
}

TEST_CASE("M rewriting terminates within the step budget", "[rewrite_m][property]") {
  rng_type                                   rng(41);
  std::uniform_int_distribution<std::size_t> rank(1, 6), length(0, 30);
  for (int i = 0; i < 10'000; ++i) {
    std::size_t n = rank(rng);
    word_type   w = random_word(rng, n, length(rng));
    auto        r = normalize_random(w, m_matcher(), rng);
    CHECK(r.steps <= w.size() * w.size() * (n + 2));
    CHECK(m_is_reduced(r.word));
  }
  for (int i = 0; i < 1000; ++i) {
    word_type w = random_word(rng, 6, length(rng));
    while (auto next = m_step(w)) {
      bool shorter = next->size() < w.size();
      bool sorted  = next->size() == w.size() && far_inversions(*next) < far_inversions(w);
      CHECK((shorter || sorted));
      w = *next;
    }
  }
}

TEST_CASE("M normal forms do not depend on the strategy", "[rewrite_m][property]") {
  rng_type                                   rng(43);
  std::uniform_int_distribution<std::size_t> length(0, 16);
  for (int i = 0; i < 1000; ++i) {
    word_type w  = random_word(rng, 5, length(rng));
    word_type nf = m_reduce(w);
    for (int k = 0; k < 20; ++k) {
      CHECK(normalize_random(w, m_matcher(), rng).word == nf);
    }
  }
}

TEST_CASE("M equality agrees with the congruence oracle", "[rewrite_m][oracle]") {
  Presentation p   = ci_presentation(CIMatrix::chain(3));
  auto         cmp = testing::compare_partitions(p, 3, 6, 11, [](word_type const& w) {
    return m_reduce(w);
  });
  CHECK(cmp.words == 1093);
  CHECK_FALSE(cmp.truncated);
  CHECK(cmp.disagreements == 0);
}

TEST_CASE("A-equal words are M-equal", "[rewrite_m][property]") {
  rng_type                                   rng(47);
  std::uniform_int_distribution<std::size_t> length(0, 10), steps(1, 6);
  Presentation                               p = ai_presentation(CIMatrix::chain(4));
  for (int i = 0; i < 1000; ++i) {
    word_type u = random_word(rng, 4, length(rng));
    word_type v = random_relation_walk(p, u, steps(rng), rng, 14);
    REQUIRE(a_equal(u, v));
    CHECK(m_equal(u, v));
  }
}

TEST_CASE("nabla is a sink of M_n", "[rewrite_m][sink]") {
  CHECK(m_reduce(concat(word_type{2}, nabla(2))) == m_reduce(nabla(2)));
  CHECK(m_reduce(concat(nabla(2), word_type{2})) == m_reduce(nabla(2)));
  CHECK(m_reduce({1, 1, 1}) == nabla(1));
  for (std::size_t n = 1; n <= 4; ++n) {
    INFO("n = " << n);
    CHECK(verify_sink(n, 500, n).ok());
  }
}

TEST_CASE("an infinite family of M-reduced words", "[rewrite_m]") {
  CHECK(infinite_family_word(0).empty());
  CHECK(infinite_family_word(1) == word_type{2, 1, 2, 3});
  CHECK(infiniteness_witness(0));
  CHECK(infiniteness_witness(1));
  CHECK(infiniteness_witness(50));
  CHECK(infiniteness_witness(5, 7));
  CHECK_THROWS_AS(infiniteness_witness(1, 2), std::invalid_argument);
  std::set<word_type> distinct;
  for (std::size_t k = 0; k <= 50; ++k) {
    distinct.insert(m_reduce(infinite_family_word(k)));
  }
  CHECK(distinct.size() == 51);
  Report r = verify_infinite(50);
  CHECK(r.ok());
  CHECK(r.fact_value("reduced") == "51/51");
}
