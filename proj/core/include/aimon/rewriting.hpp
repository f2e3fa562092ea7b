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

// Shared machinery for the string rewriting systems: a uniform description
// of a rule match, leftmost and randomised normalisation, and joinability
// checks used by the confluence audits.

#ifndef AIMON_REWRITING_HPP_
#define AIMON_REWRITING_HPP_

#include <cstddef>     // for size_t
#include <cstdint>     // for uint8_t
#include <functional>  // for function
#include <map>         // for map
#include <optional>    // for optional
#include <string>      // for string
#include <vector>      // for vector

#include "report.hpp"  // for Report
#include "words.hpp"   // for word_type, rng_type

namespace aimon {

  enum class rule_kind : std::uint8_t { commutation, family, square_run, staircase };

  char const* to_string(rule_kind k) noexcept;

  //! An occurrence of a rule left-hand side. Commutation swaps the two
  //! letters of the span; every other rule deletes [cut_begin, cut_end).
  struct Match {
    rule_kind                kind      = rule_kind::commutation;
    std::size_t              start     = 0;
    std::size_t              end       = 0;
    std::size_t              cut_begin = 0;
    std::size_t              cut_end   = 0;
    std::vector<std::size_t> params;

    std::size_t length() const noexcept {
      return end - start;
    }

    bool operator==(Match const&) const = default;
  };

  //! Order used by every deterministic strategy: smaller start, then
  //! shorter span, then the order of rule_kind.
  bool match_before(Match const& x, Match const& y) noexcept;

  Match shifted(Match m, std::size_t offset);

  word_type apply_match(word_type const& w, Match const& m);

  std::string describe(Match const& m);

  //! Appends every match whose span starts at the given position, sorted
  //! by match_before.
  using matcher_type
      = std::function<void(word_type const&, std::size_t, std::vector<Match>&)>;

  std::vector<Match> all_matches(word_type const& w, matcher_type const& at);

  //! The first match (in match_before order) starting at or after \p from.
  std::optional<Match> first_match(word_type const& w,
                                   matcher_type const& at,
                                   std::size_t         from = 0);

  //! The match occupying exactly the whole of \p w, if any.
  std::optional<Match> whole_word_match(word_type const& w, matcher_type const& at);

  struct Normalization {
    word_type   word;
    std::size_t steps = 0;
  };

  //! Rewrites until no match remains. After each step the search resumes
  //! just before the last rewrite and falls back to a full scan, so the
  //! result is irreducible; by confluence it is the unique normal form.
  Normalization normalize(word_type w, matcher_type const& at);

  //! Normalises by choosing a uniformly random match at every step.
  Normalization normalize_random(word_type w, matcher_type const& at, rng_type& rng);

  //! A triple (q, r, s) such that qr and rs are both standard words.
  struct CriticalTriple {
    std::string family;
    word_type   q;
    word_type   r;
    word_type   s;
  };

  //! Reduces both one-step reducts of qrs (the whole-qr and whole-rs
  //! rewrites) and records a failure unless they meet. A triple whose qr or
  //! rs is not standard is itself reported as a failure.
  bool check_triple(CriticalTriple const& t, matcher_type const& at, Report& report);

  //! Checks that every two one-step reducts of \p w have the same normal
  //! form. Covers overlapping, nested and disjoint match pairs alike.
  bool check_all_pairs(word_type const& w, matcher_type const& at, Report& report);

  //! Every word over x_1, ..., x_rank of length at most max_len that is
  //! matched as a whole, in shortlex order.
  std::vector<word_type> left_hand_sides(std::size_t         rank,
                                         std::size_t         max_len,
                                         matcher_type const& at);

  //! Every way of writing two left-hand sides as qr and rs with q, r and s
  //! nonempty. Family names are "overlap".
  std::vector<CriticalTriple> overlap_triples(std::vector<word_type> const& lhs);

  //! Runs check_triple on every triple and records per-family counts as
  //! facts named "family_<name>".
  void audit_triples(std::vector<CriticalTriple> const& triples,
                     matcher_type const&                matcher,
                     Report&                            report);

}  // namespace aimon

#endif  // AIMON_REWRITING_HPP_
