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

#include <stdexcept>  // for invalid_argument

#include "aimon/ci_matrix.hpp"
#include "aimon/congruence.hpp"
#include "aimon/garside.hpp"
#include "aimon/rewrite_a.hpp"

using namespace aimon;

TEST_CASE("nabla", "[garside]") {
  CHECK(nabla(1) == word_type{1});
  CHECK(nabla(2) == word_type{1, 2, 1});
  CHECK(nabla(3) == word_type{1, 2, 1, 3, 2, 1});
  CHECK_THROWS_AS(nabla(0), std::invalid_argument);
  for (std::size_t n = 1; n <= 8; ++n) {
    CHECK(nabla(n).size() == n * (n + 1) / 2);
    CHECK(pi(nabla(n)) == word_type(n, 1));
    CHECK(nabla(n) == concat(word_type{1}, y_word(n)));
    if (n > 1) {
      CHECK(nabla(n) == concat(nabla(n - 1), descending_run(n + 1, 1)));
    }
  }
}

TEST_CASE("pi and lambda", "[garside]") {
  CHECK(pi({2, 1, 3, 1}) == word_type{1, 1});
  CHECK(pi({}).empty());
  CHECK(pi(nabla(3)) == word_type{1, 1, 1});
  CHECK(lambda_n({1}, 2) == word_type{2, 1});
  CHECK(lambda_n({2}, 2).empty());
  CHECK(lambda_n({1, 2, 1}, 3) == word_type{3, 2, 1, 3, 2, 1});
  CHECK(lambda_n({1}, 2, true) == word_type{2});
  CHECK(lambda_n({1}, 1) == word_type{1});
}

TEST_CASE("the lambda identity", "[garside]") {
  CHECK(a_equal({1, 1, 2, 1}, {1, 2, 1, 2, 1}));
  CHECK(a_reduce({1, 2, 1, 2, 1}) == word_type{1, 1, 2, 1});
  CHECK(a_equal({2, 1, 2, 1}, {1, 2, 1}));
  for (std::size_t n = 1; n <= 4; ++n) {
    INFO("n = " << n);
    CHECK(check_lambda_identity(n, 200, n).ok());
  }
  // The literal reading of lambda_n(x_1) as a single letter fails at n = 2:
  // x_1 nabla_2 and nabla_2 x_2 have different normal forms.
  CHECK_FALSE(a_equal(concat(word_type{1}, nabla(2)), concat(nabla(2), word_type{2})));
  CHECK(literal_lambda_fails(2));
  CHECK_FALSE(check_lambda_identity(2, 20, 1, true).ok());
}

TEST_CASE("Garside cofactors", "[garside]") {
  auto c = garside_cofactor({2}, 2);
  CHECK(c.k == 1);
  CHECK(c.y == word_type{1, 2, 1});
  CHECK(a_reduce({2, 1, 2, 1}) == nabla(2));

  c = garside_cofactor({}, 1);
  CHECK(c.k == 1);
  CHECK(c.y == word_type{1});

  c = garside_cofactor({1, 1, 1}, 2);
  CHECK(c.k == 3);
  CHECK(c.y == concat(word_type{1}, nabla(2)));
  CHECK(a_equal(concat(word_type{1, 1, 1}, c.y), power(nabla(2), 3)));

  CHECK_THROWS_AS(garside_cofactor({1}, 0), std::invalid_argument);

  rng_type rng(53);
  for (std::size_t n = 1; n <= 5; ++n) {
    for (int i = 0; i < 100; ++i) {
      word_type x = random_word(rng, n, i % 10);
      auto      f = garside_cofactor(x, n);
      CHECK(a_equal(concat(x, f.y), power(nabla(n), f.k)));
    }
  }
}

TEST_CASE("Garside generator identities", "[garside][property]") {
  for (std::size_t n = 2; n <= 6; ++n) {
    for (letter_type a = 2; a <= n; ++a) {
      CHECK(a_equal(concat(word_type{a}, nabla(n)), nabla(n)));
    }
  }
  for (std::size_t n = 2; n <= 5; ++n) {
    for (letter_type a = 2; a <= n; ++a) {
      for (std::size_t r = 0; r <= 3; ++r) {
        word_type ones(r, 1);
        CHECK(a_equal(concat(word_type{a}, ones, nabla(n)), concat(ones, nabla(n))));
      }
      for (std::size_t l = 1; l <= 4; ++l) {
        word_type block(l, letter_type(a - 1));
        CHECK(a_equal(concat(word_type{a}, block, word_type{a, letter_type(a - 1)}),
                      concat(block, word_type{a, letter_type(a - 1)})));
      }
    }
  }
}

TEST_CASE("x nabla equals pi(x) nabla", "[garside][property]") {
  rng_type rng(59);
  for (int i = 0; i < 1000; ++i) {
    std::size_t n = 1 + i % 5;
    word_type   x = random_word(rng, n, i % 12);
    CHECK(a_equal(concat(x, nabla(n)), concat(pi(x), nabla(n))));
  }
}

TEST_CASE("lambda respects A-equality", "[garside][property]") {
  rng_type     rng(61);
  Presentation p = ai_presentation(CIMatrix::chain(4));
  for (int i = 0; i < 500; ++i) {
    word_type u = random_word(rng, 4, i % 9);
    word_type v = random_relation_walk(p, u, 4, rng, 14);
    CHECK(a_equal(lambda_n(u, 4), lambda_n(v, 4)));
  }
}

TEST_CASE("verify_garside", "[garside]") {
  for (std::size_t n = 1; n <= 4; ++n) {
    INFO("n = " << n);
    CHECK(verify_garside(n, 200, n).ok());
  }
}

TEST_CASE("left cancellativity", "[garside][property]") {
  CHECK(a_equal({1, 2, 1}, {2, 1, 2, 1}));
  CHECK(a_equal({2, 1, 2, 1}, {2, 2, 1, 2, 1}));
  Report r = left_cancel_harness(3, 10'000, 67);
  CHECK(r.ok());
  CHECK(r.checks_run == 10'000);
  CHECK(std::stoul(r.fact_value("equal_cases")) > 1000);
}
