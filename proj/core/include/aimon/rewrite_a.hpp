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

// The rewriting system for A_n. Its rules are
//
//   x_a x_b -> x_b x_a                                     (a - b >= 2)
//   x_{a-1}^{c(1)} x_{a-2}^{c(2)} ... x_{a-b}^{c(b)} (x_a, x_{a-b}]
//     -> x_{a-2}^{c(2)} ... x_{a-b}^{c(b)} (x_a, x_{a-b}]   (b >= 2, c(i) >= 1)
//
// and every class of =_A contains exactly one irreducible word.

#ifndef AIMON_REWRITE_A_HPP_
#define AIMON_REWRITE_A_HPP_

#include <cstddef>   // for size_t
#include <cstdint>   // for uint64_t
#include <optional>  // for optional
#include <vector>    // for vector

#include "report.hpp"     // for Report
#include "rewriting.hpp"  // for Match, CriticalTriple, matcher_type
#include "words.hpp"      // for word_type

namespace aimon {

  //! Which rules are enabled; disabling one is only useful as a negative
  //! control for the audit.
  struct ARules {
    bool commutation = true;
    bool family      = true;
  };

  //! Family matches carry params (a, b, c(1), ..., c(b)); commutation
  //! matches carry (a, b). At most one match of each kind starts at a
  //! given position because the exponent blocks are read greedily.
  void a_matches_at(word_type const&    w,
                    std::size_t         pos,
                    std::vector<Match>& out,
                    ARules              rules = {});

  matcher_type a_matcher(ARules rules = {});

  std::vector<Match> a_matches(word_type const& w, ARules rules = {});

  //! Applies the leftmost match, or returns nullopt if w is A-reduced.
  std::optional<word_type> a_step(word_type const& w, ARules rules = {});

  word_type a_reduce(word_type const& w, ARules rules = {});

  bool a_is_reduced(word_type const& w);

  bool a_equal(word_type const& u, word_type const& v);

  struct ACaps {
    //! Largest letter appearing in a triple.
    std::size_t max_index = 6;
    //! Largest exponent c(i) in the family rule.
    std::size_t max_exp = 2;
    //! Longest left-hand side in the exhaustive overlap sweep.
    std::size_t overlap_len = 9;
  };

  //! The triples of the four overlap families (named "a" to "d") with all
  //! letters at most min(n, caps.max_index) and exponents at most
  //! caps.max_exp.
  std::vector<CriticalTriple> a_critical_pairs(std::size_t n, ACaps caps = {});

  //! Checks every critical triple and every overlap of left-hand sides of
  //! length at most caps.overlap_len over min(n, 3) letters, then every
  //! pair of one-step reducts of \p random_words random words of length at most 12 and of every word
  //! of length at most \p exhaustive_len over min(n, 3) letters.
  Report a_confluence_audit(std::size_t   n,
                            ACaps         caps           = {},
                            ARules        rules          = {},
                            std::size_t   random_words   = 500,
                            std::uint64_t seed           = 0,
                            std::size_t   exhaustive_len = 6);

}  // namespace aimon

#endif  // AIMON_REWRITE_A_HPP_
