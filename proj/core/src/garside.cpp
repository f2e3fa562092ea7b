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

#include "aimon/garside.hpp"

#include <stdexcept>  // for invalid_argument

#include "aimon/ci_matrix.hpp"   // for CIMatrix, ai_presentation
#include "aimon/congruence.hpp"  // for random_relation_walk
#include "aimon/rewrite_a.hpp"   // for a_equal

namespace aimon {

  word_type nabla(std::size_t n) {
    if (n < 1) {
      throw std::invalid_argument("nabla: rank must be at least 1");
    }
    word_type w;
    for (std::size_t a = 2; a <= n + 1; ++a) {
      auto run = descending_run(a, 1);
      w.insert(w.end(), run.begin(), run.end());
    }
    return w;
  }

  word_type y_word(std::size_t n) {
    word_type w = nabla(n);
    w.erase(w.begin());
    return w;
  }

  word_type pi(word_type const& w) {
    return word_type(count_letter(w, 1), 1);
  }

  word_type lambda_n(word_type const& w, std::size_t n, bool literal) {
    word_type const image
        = literal ? word_type{static_cast<letter_type>(n)} : descending_run(n + 1, 1);
    word_type out;
    for (letter_type s : w) {
      if (s == 1) {
        out.insert(out.end(), image.begin(), image.end());
      }
    }
    return out;
  }

  Cofactor garside_cofactor(word_type const& x, std::size_t n) {
    if (n < 1) {
      throw std::invalid_argument("garside_cofactor: rank must be at least 1");
    }
    std::size_t const m = count_letter(x, 1);
    Cofactor          result;
    result.k = (m + n - 1) / n + 1;
    result.y = concat(word_type((result.k - 1) * n - m, 1), nabla(n));
    return result;
  }

  namespace {
    word_type letter(std::size_t a) {
      return {static_cast<letter_type>(a)};
    }

    void lambda_check(word_type const& x,
                      std::size_t      n,
                      bool             literal,
                      word_type const& w0,
                      Report&          report) {
      word_type left  = concat(x, w0);
      word_type right = concat(w0, lambda_n(x, n, literal));
      report.expect(a_equal(left, right), "x nabla = nabla lambda(x)",
                    {{"x", format_word(x)},
                     {"left", format_word(a_reduce(left))},
                     {"right", format_word(a_reduce(right))}});
    }
  }  // namespace

  Report check_lambda_identity(std::size_t n, std::size_t samples, std::uint64_t seed, bool literal) {
    Report report;
    report.command = "lambda";
    report.param("rank", std::to_string(n));
    report.param("samples", std::to_string(samples));
    report.param("seed", std::to_string(seed));
    report.param("literal", literal ? "true" : "false");

    word_type const w0 = nabla(n);
    for (std::size_t a = 1; a <= n; ++a) {
      lambda_check(letter(a), n, literal, w0, report);
    }
    Presentation const                         p = ai_presentation(CIMatrix::chain(n));
    rng_type                                   rng(seed);
    std::uniform_int_distribution<std::size_t> length(0, 8);
    std::uniform_int_distribution<std::size_t> steps(1, 4);
    for (std::size_t i = 0; i < samples; ++i) {
      word_type x = random_word(rng, n, length(rng));
      lambda_check(x, n, literal, w0, report);
      word_type v = random_relation_walk(p, x, steps(rng), rng, x.size() + 4);
      report.expect(a_equal(lambda_n(x, n, literal), lambda_n(v, n, literal)),
                    "lambda respects =_A",
                    {{"u", format_word(x)}, {"v", format_word(v)}});
    }
    return report;
  }

  bool literal_lambda_fails(std::size_t n) {
    return !check_lambda_identity(n, 0, 0, true).ok();
  }

  Report verify_garside(std::size_t n, std::size_t samples, std::uint64_t seed) {
    Report report;
    report.command = "garside";
    report.param("rank", std::to_string(n));
    report.param("samples", std::to_string(samples));
    report.param("seed", std::to_string(seed));

    word_type const w0 = nabla(n);
    report.fact("nabla", format_word(w0));
    report.expect(w0.size() == n * (n + 1) / 2, "nabla has length n(n+1)/2");
    report.expect(pi(w0) == word_type(n, 1), "pi(nabla) = x_1^n");
    if (n >= 2) {
      report.expect(w0 == concat(nabla(n - 1), descending_run(n + 1, 1)),
                    "nabla_n = nabla_{n-1} (x_{n+1},x_1]");
    }
    for (std::size_t a = 2; a <= n; ++a) {
      report.expect(a_equal(concat(letter(a), w0), w0), "x_a nabla = nabla",
                    {{"a", std::to_string(a)}});
      for (std::size_t r = 0; r <= 3; ++r) {
        word_type ones(r, 1);
        report.expect(a_equal(concat(letter(a), ones, w0), concat(ones, w0)),
                      "x_a x_1^r nabla = x_1^r nabla",
                      {{"a", std::to_string(a)}, {"r", std::to_string(r)}});
      }
      for (std::size_t l = 1; l <= 4; ++l) {
        word_type lower(l, static_cast<letter_type>(a - 1));
        word_type tail{static_cast<letter_type>(a), static_cast<letter_type>(a - 1)};
        report.expect(a_equal(concat(letter(a), lower, tail), concat(lower, tail)),
                      "x_a x_{a-1}^l x_a x_{a-1} = x_{a-1}^l x_a x_{a-1}",
                      {{"a", std::to_string(a)}, {"l", std::to_string(l)}});
      }
    }

    rng_type                                   rng(seed);
    std::uniform_int_distribution<std::size_t> length(0, 8);
    for (std::size_t i = 0; i < samples; ++i) {
      word_type x = random_word(rng, n, length(rng));
      auto [k, y] = garside_cofactor(x, n);
      report.expect(a_equal(concat(x, y), power(w0, k)), "x y = nabla^k",
                    {{"x", format_word(x)}, {"k", std::to_string(k)}, {"y", format_word(y)}});
      report.expect(a_equal(concat(x, w0), concat(pi(x), w0)), "x nabla = pi(x) nabla",
                    {{"x", format_word(x)}});
      lambda_check(x, n, false, w0, report);
    }
    return report;
  }

  Report left_cancel_harness(std::size_t n, std::size_t samples, std::uint64_t seed, std::size_t max_len) {
    Report report;
    report.command = "cancel";
    report.param("rank", std::to_string(n));
    report.param("samples", std::to_string(samples));
    report.param("seed", std::to_string(seed));

    Presentation const                         p = ai_presentation(CIMatrix::chain(n));
    rng_type                                   rng(seed);
    std::uniform_int_distribution<std::size_t> length(0, max_len);
    std::uniform_int_distribution<std::size_t> steps(1, 4);
    std::size_t                                equal_cases = 0;
    for (std::size_t i = 0; i < samples; ++i) {
      word_type x = random_word(rng, n, length(rng));
      word_type y = random_word(rng, n, length(rng));
      word_type z = i % 2 == 0 ? random_word(rng, n, length(rng))
                               : random_relation_walk(p, y, steps(rng), rng, max_len + 4);
      bool const same     = a_equal(y, z);
      bool const products = a_equal(concat(x, y), concat(x, z));
      equal_cases += same;
      report.expect(same == products,
                    same ? "equal words stay equal after a left factor"
                         : "distinct words stay distinct after a left factor",
                    {{"x", format_word(x)}, {"y", format_word(y)}, {"z", format_word(z)}});
    }
    report.fact("equal_cases", std::to_string(equal_cases));
    return report;
  }

}  // namespace aimon
