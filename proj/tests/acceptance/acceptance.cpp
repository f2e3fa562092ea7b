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

// Prints one PASS or FAIL line per acceptance criterion and exits nonzero
// if any criterion fails.

#include <chrono>    // for steady_clock
#include <cstdint>   // for uint64_t
#include <cstdio>    // for printf
#include <iostream>  // for cout
#include <sstream>   // for ostringstream
#include <string>    // for string
#include <vector>    // for vector

#include "aimon/ci_matrix.hpp"
#include "aimon/congruence.hpp"
#include "aimon/cube.hpp"
#include "aimon/garside.hpp"
#include "aimon/linrep.hpp"
#include "aimon/rank2.hpp"
#include "aimon/rewrite_a.hpp"
#include "aimon/rewrite_m.hpp"
#include "support/partition.hpp"

using namespace aimon;

namespace {

  // Pinned sizes and thresholds.
  constexpr std::size_t   uniqueness_rank       = 3;
  constexpr std::size_t   uniqueness_len        = 6;
  constexpr std::size_t   uniqueness_words      = 1093;
  constexpr std::size_t   strategies_per_word   = 20;
  constexpr std::size_t   oracle_word_len       = 5;
  constexpr std::size_t   oracle_max_len        = 12;
  constexpr std::size_t   oracle_max_states     = 1'000'000;
  constexpr std::size_t   audit_rank            = 5;
  constexpr std::size_t   audit_max_exp         = 2;
  constexpr std::size_t   audit_max_interleave  = 1;
  constexpr std::size_t   sink_samples          = 500;
  constexpr std::size_t   infinite_max_k        = 50;
  constexpr std::size_t   garside_samples       = 200;
  constexpr std::size_t   cancel_samples        = 10'000;
  constexpr std::size_t   cancel_max_len        = 6;
  constexpr std::size_t   linrep_depth          = 6;
  constexpr std::size_t   linrep_random         = 20;
  constexpr label_type    linrep_max_label      = 5;
  constexpr double        linrep_infinite_share = 0.1;
  constexpr std::size_t   cube_max_len          = 9;
  constexpr std::size_t   perf_words            = 100;
  constexpr std::size_t   perf_len              = 200;
  constexpr std::size_t   perf_rank             = 6;
  constexpr double        perf_limit_ms         = 1000.0;
  constexpr std::uint64_t seed                  = 1;

  using clock_type = std::chrono::steady_clock;

  double ms_since(clock_type::time_point start) {
    return std::chrono::duration<double, std::milli>(clock_type::now() - start).count();
  }

  int failed = 0;

  void line(int id, char const* name, bool pass, std::string const& detail, double ms) {
    std::printf("%s %2d %s: %s (%.0f ms)\n", pass ? "PASS" : "FAIL", id, name, detail.c_str(), ms);
    std::fflush(stdout);
    failed += pass ? 0 : 1;
  }

  std::string summary(Report const& r) {
    std::ostringstream out;
    out << r.checks_run << " checks, " << r.failures.size() << " failures";
    if (!r.failures.empty()) {
      out << ", first: " << r.failures.front().check;
    }
    return out.str();
  }

  void uniqueness() {
    auto        start = clock_type::now();
    auto        words = all_words(uniqueness_rank, uniqueness_len);
    rng_type    rng(seed);
    std::size_t mismatches = 0, runs = 0;
    for (auto const& w : words) {
      word_type a = a_reduce(w);
      word_type m = m_reduce(w);
      for (std::size_t i = 0; i < strategies_per_word; ++i) {
        mismatches += normalize_random(w, a_matcher(), rng).word != a;
        mismatches += normalize_random(w, m_matcher(), rng).word != m;
        runs += 2;
      }
    }
    bool pass = words.size() == uniqueness_words && mismatches == 0;
    line(1, "normal forms are strategy independent", pass,
         std::to_string(words.size()) + " words, " + std::to_string(runs) + " random runs, "
             + std::to_string(mismatches) + " mismatches",
         ms_since(start));
  }

  void oracle() {
    auto start = clock_type::now();
    auto a     = testing::compare_partitions(
        ai_presentation(CIMatrix::chain(uniqueness_rank)), uniqueness_rank, oracle_word_len,
        oracle_max_len, [](word_type const& w) { return a_reduce(w); }, oracle_max_states);
    auto m = testing::compare_partitions(
        ci_presentation(CIMatrix::chain(uniqueness_rank)), uniqueness_rank, oracle_word_len,
        oracle_max_len, [](word_type const& w) { return m_reduce(w); }, oracle_max_states);
    bool pass = a.disagreements == 0 && m.disagreements == 0 && !a.truncated && !m.truncated;
    line(2, "equality agrees with the congruence oracle", pass,
         std::to_string(a.words) + " words; A: " + std::to_string(a.classes) + " classes, "
             + std::to_string(a.disagreements) + " disagreements; M: "
             + std::to_string(m.classes) + " classes, " + std::to_string(m.disagreements)
             + " disagreements",
         ms_since(start));
  }

  void audits() {
    auto   start = clock_type::now();
    Report a     = a_confluence_audit(audit_rank, ACaps{audit_rank, audit_max_exp}, {}, 500, seed);
    Report m
        = m_confluence_audit(audit_rank, MCaps{audit_rank, audit_max_interleave}, {}, 500, seed);
    bool every_family = true;
    for (char f : std::string("abcd")) {
      every_family &= std::stoul(a.fact_value(std::string("family_") + f)) > 0;
    }
    for (char f : std::string("abcdefghij")) {
      every_family &= std::stoul(m.fact_value(std::string("family_") + f)) > 0;
    }
    line(3, "critical pairs are joinable", a.ok() && m.ok() && every_family,
         "A " + summary(a) + " (" + a.fact_value("triples") + " triples); M " + summary(m) + " ("
             + m.fact_value("triples") + " triples); every family exercised: "
             + (every_family ? "yes" : "no"),
         ms_since(start));
  }

  void sink() {
    auto   start = clock_type::now();
    Report r;
    for (std::size_t n = 1; n <= 4; ++n) {
      r.absorb(verify_sink(n, sink_samples, seed + n));
    }
    line(4, "nabla is a sink in M_n", r.ok(), summary(r), ms_since(start));
  }

  void infinite() {
    auto   start = clock_type::now();
    Report r     = verify_infinite(infinite_max_k);
    bool   pass  = r.ok() && r.fact_value("reduced") == "51/51";
    line(5, "infinite family is M-reduced", pass, r.fact_value("reduced") + " reduced",
         ms_since(start));
  }

  void garside() {
    auto   start = clock_type::now();
    Report r;
    for (std::size_t n = 1; n <= 4; ++n) {
      r.absorb(verify_garside(n, garside_samples, seed + n));
    }
    bool control = literal_lambda_fails(2);
    line(6, "nabla is a Garside element", r.ok() && control,
         summary(r) + "; literal lambda control fails at n = 2: " + (control ? "yes" : "no"),
         ms_since(start));
  }

  void cancel() {
    auto   start = clock_type::now();
    Report r     = left_cancel_harness(3, cancel_samples, seed, cancel_max_len);
    line(7, "A_3 is left cancellative", r.ok(),
         summary(r) + ", " + r.fact_value("equal_cases") + " equal cases", ms_since(start));
  }

  void linrep() {
    auto   start = clock_type::now();
    Report r     = verify_representation(CIMatrix::chain(3), linrep_depth);
    rng_type                                   rng(seed);
    std::uniform_int_distribution<std::size_t> rank(1, 3);
    for (std::size_t i = 0; i < linrep_random; ++i) {
      CIMatrix m = random_ci_matrix(rng, rank(rng), linrep_max_label, linrep_infinite_share);
      r.absorb(verify_representation(m, linrep_depth));
    }
    line(8, "linear representation respects the relations", r.ok(),
         summary(r) + " over " + std::to_string(linrep_random + 1) + " matrices",
         ms_since(start));
  }

  void cube() {
    auto   start = clock_type::now();
    Report r     = verify_cube(cube_max_len);
    bool   pass  = r.ok() && r.fact_value("w1") == "3 2 1" && r.fact_value("w2") == "3 2 1 2";
    line(9, "cube condition fails", pass,
         "w1 = " + r.fact_value("w1") + ", w2 = " + r.fact_value("w2") + ", class sizes "
             + r.fact_value("p_class_size") + " and " + r.fact_value("q_class_size") + "; "
             + summary(r),
         ms_since(start));
  }

  void rank2() {
    auto        start = clock_type::now();
    Report      r;
    std::size_t pairs = 0;
    for (std::size_t k = 2; k <= 6; ++k) {
      for (std::size_t l = 2; l <= 6; ++l) {
        if (k + 1 >= l && l + 1 >= k) {
          r.absorb(verify_rank2(k, l));
          ++pairs;
        }
      }
    }
    Report three_four = verify_rank2(3, 4);
    bool   pass       = r.ok() && three_four.fact_value("hasse_paths") == "3,4";
    line(10, "rank-2 monoids are lattices of size k + l", pass,
         std::to_string(pairs) + " pairs, " + summary(r) + "; (3,4) paths "
             + three_four.fact_value("hasse_paths"),
         ms_since(start));
  }

  void performance() {
    rng_type               rng(seed);
    std::vector<word_type> words;
    for (std::size_t i = 0; i < perf_words; ++i) {
      words.push_back(random_word(rng, perf_rank, perf_len));
    }
    std::size_t total = 0;
    auto        start = clock_type::now();
    for (auto const& w : words) {
      total += a_reduce(w).size();
    }
    double a_ms = ms_since(start);
    start       = clock_type::now();
    for (auto const& w : words) {
      total += m_reduce(w).size();
    }
    double m_ms = ms_since(start);
    std::ostringstream detail;
    detail.precision(1);
    detail << std::fixed << "A " << a_ms << " ms, M " << m_ms << " ms, limit " << perf_limit_ms
           << " ms each (total length " << total << ")";
    line(11, "reduction is fast", a_ms < perf_limit_ms && m_ms < perf_limit_ms, detail.str(),
         a_ms + m_ms);
  }

}  // namespace

int main() {
  uniqueness();
  oracle();
  audits();
  sink();
  infinite();
  garside();
  cancel();
  linrep();
  cube();
  rank2();
  performance();
  std::cout << (failed == 0 ? "all criteria pass" : std::to_string(failed) + " criteria fail")
            << '\n';
  return failed == 0 ? 0 : 1;
}
