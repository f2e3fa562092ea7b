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

#include <algorithm>  // for sort, count_if
#include <stdexcept>  // for invalid_argument

#include "aimon/words.hpp"
#include "support/oracles.hpp"

using namespace aimon;
using aimon::testing::commutation_class;

TEST_CASE("parse_word reads whitespace separated letters", "[words]") {
  CHECK(parse_word("2 1 2 1") == word_type{2, 1, 2, 1});
  CHECK(parse_word("").empty());
  CHECK(parse_word("   \t ").empty());
  CHECK(parse_word("1 3 2") == word_type{1, 3, 2});
  CHECK(parse_word("  10\t2 ") == word_type{10, 2});
}

TEST_CASE("parse_word rejects malformed input", "[words]") {
  CHECK_THROWS_AS(parse_word("1 x"), std::invalid_argument);
  CHECK_THROWS_AS(parse_word("0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_word("-1"), std::invalid_argument);
  CHECK_THROWS_AS(parse_word("1.5"), std::invalid_argument);
  CHECK_THROWS_AS(parse_word("4", 3), std::invalid_argument);
  CHECK_THROWS_AS(parse_word("256"), std::invalid_argument);
  CHECK_NOTHROW(parse_word("3", 3));
}

TEST_CASE("format_word round-trips with parse_word", "[words]") {
  rng_type rng(7);
  for (int i = 0; i < 200; ++i) {
    word_type w = random_word(rng, 9, i % 13);
    CHECK(parse_word(format_word(w)) == w);
  }
  CHECK(format_word({}) == "");
  CHECK(join_word({1, 2}, ".", "e") == "1.2");
  CHECK(join_word({}, ".", "e") == "e");
}

TEST_CASE("descending runs", "[words]") {
  CHECK(descending_run(3, 1) == word_type{2, 1});
  CHECK(descending_run(2, 2).empty());
  CHECK(descending_run(4, 2) == word_type{3, 2});
  CHECK_THROWS_AS(descending_run(1, 2), std::invalid_argument);
  CHECK_THROWS_AS(descending_run(2, 0), std::invalid_argument);
  for (std::size_t a = 1; a <= 7; ++a) {
    for (std::size_t b = 1; b <= a; ++b) {
      for (std::size_t c = 1; c <= b; ++c) {
        CHECK(concat(descending_run(a, b), descending_run(b, c)) == descending_run(a, c));
      }
    }
  }
}

TEST_CASE("alternating words", "[words]") {
  CHECK(alternating(1, 2, 4) == word_type{1, 2, 1, 2});
  CHECK(alternating(1, 2, 0).empty());
  CHECK(alternating(2, 1, 3) == word_type{2, 1, 2});
}

TEST_CASE("small word helpers", "[words]") {
  CHECK(max_letter({}) == 0);
  CHECK(max_letter({2, 5, 1}) == 5);
  CHECK(count_letter({1, 2, 1, 3}, 1) == 2);
  CHECK(reversed({1, 2, 3}) == word_type{3, 2, 1});
  CHECK(power({1, 2}, 3) == word_type{1, 2, 1, 2, 1, 2});
  CHECK(power({1, 2}, 0).empty());
  CHECK(all_words(2, 2).size() == 7);
  CHECK(all_words(3, 6).size() == 1093);
}

TEST_CASE("B-reduced forms", "[words]") {
  CHECK(b_reduced_form({3, 1}) == word_type{1, 3});
  CHECK(b_reduced_form({2, 1}) == word_type{2, 1});
  CHECK(b_reduced_form({4, 2, 3, 1}) == word_type{2, 1, 4, 3});
  CHECK(b_reduced_form({}).empty());
  CHECK(b_equivalent({3, 1}, {1, 3}));
  CHECK_FALSE(b_equivalent({1, 2}, {2, 1}));
  CHECK(b_equivalent({1, 4, 2}, {1, 2, 4}));
}

TEST_CASE("the stated B-reduced example is the unique reduced word of its class",
          "[words][oracle]") {
  auto klass = commutation_class({4, 2, 3, 1});
  std::vector<word_type> reduced;
  for (auto const& w : klass) {
    if (is_b_reduced(w)) {
      reduced.push_back(w);
    }
  }
  REQUIRE(reduced.size() == 1);
  CHECK(reduced.front() == word_type{2, 1, 4, 3});
}

TEST_CASE("B-reduction agrees with brute-force commutation classes", "[words][property]") {
  rng_type rng(11);
  std::uniform_int_distribution<std::size_t> rank(1, 5), length(0, 7);
  for (int i = 0; i < 1500; ++i) {
    std::size_t n = rank(rng);
    word_type   w = random_word(rng, n, length(rng));
    auto        klass = commutation_class(w);
    word_type   nf    = b_reduced_form(w);

    CHECK(b_reduced_form(nf) == nf);
    CHECK(is_b_reduced(nf));
    CHECK(nf.size() == w.size());
    word_type sorted_w = w, sorted_nf = nf;
    std::sort(sorted_w.begin(), sorted_w.end());
    std::sort(sorted_nf.begin(), sorted_nf.end());
    CHECK(sorted_w == sorted_nf);

    auto reduced_count = std::count_if(klass.begin(), klass.end(), is_b_reduced);
    CHECK(reduced_count == 1);
    CHECK(klass.count(nf) == 1);
    for (auto const& v : klass) {
      CHECK(b_reduced_form(v) == nf);
    }
    // A random word of the same content is equivalent iff it is in the class.
    word_type shuffled = w;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    CHECK(b_equivalent(w, shuffled) == (klass.count(shuffled) == 1));
  }
}
