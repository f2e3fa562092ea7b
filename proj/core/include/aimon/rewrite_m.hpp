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

// The rewriting system for M_n. Its rules are
//
//   x_a x_b -> x_b x_a                                     (a - b >= 2)
//   (x_a,x_b](x_a,x_b] -> (x_{a-1},x_b](x_a,x_b]           (a - b >= 1)
//   x_a (y_{a+1} x_{a+1} x_a z_{a+1}) ... (y_b x_b x_{b-1} z_b) x_b
//     -> the same word without its final x_b                (a < b)
//
// where y_i only uses letters > i and z_i only letters < i - 1. Every class
// of =_M contains exactly one irreducible word.

#ifndef AIMON_REWRITE_M_HPP_
#define AIMON_REWRITE_M_HPP_

#include <cstddef>   // for size_t
#include <cstdint>   // for uint64_t
#include <optional>  // for optional
#include <vector>    // for vector

#include "report.hpp"     // for Report
#include "rewriting.hpp"  // for Match, CriticalTriple, matcher_type
#include "words.hpp"      // for word_type

namespace aimon {

  struct MRules {
    bool commutation = true;
    bool square_run  = true;
    bool staircase   = true;
    //! When false, staircases only match with every y_i and z_i empty.
    //! This restriction loses normal forms (for example 1 3 2 1 2 is then
    //! irreducible although it equals 1 3 2 1) and exists only so the
    //! tests can demonstrate that.
    bool interleaved = true;
  };

  //! Square runs and staircases carry params (a, b). The case a == b of
  //! both rules is reported only as a square run. At most one match of
  //! each kind starts at a given position.
  void m_matches_at(word_type const&    w,
                    std::size_t         pos,
                    std::vector<Match>& out,
                    MRules              rules = {});

  matcher_type m_matcher(MRules rules = {});

  std::vector<Match> m_matches(word_type const& w, MRules rules = {});

  std::optional<word_type> m_step(word_type const& w, MRules rules = {});

  word_type m_reduce(word_type const& w, MRules rules = {});

  bool m_is_reduced(word_type const& w);

  bool m_equal(word_type const& u, word_type const& v);

  //! x_a (y_{a+1} x_{a+1} x_a z_{a+1}) ... (y_b x_b x_{b-1} z_b), with
  //! ys[k] and zs[k] used for the step i = a + 1 + k, followed by x_b when
  //! \p terminal is set.
  word_type staircase_word(std::size_t                   a,
                           std::size_t                   b,
                           std::vector<word_type> const& ys,
                           std::vector<word_type> const& zs,
                           bool                          terminal);

  struct MCaps {
    std::size_t max_index = 6;
    //! Longest y_i and z_i used when enumerating staircases.
    std::size_t max_interleave = 1;
    //! Longest left-hand side in the exhaustive overlap sweep.
    std::size_t overlap_len = 10;
  };

  //! Triples of the ten overlap families "a" to "j" with letters at most
  //! min(n, caps.max_index).
  std::vector<CriticalTriple> m_critical_pairs(std::size_t n, MCaps caps = {});

  //! As a_confluence_audit, for the M rules.
  Report m_confluence_audit(std::size_t   n,
                            MCaps         caps           = {},
                            MRules        rules          = {},
                            std::size_t   random_words   = 500,
                            std::uint64_t seed           = 0,
                            std::size_t   exhaustive_len = 6);

  //! For random x, y of length at most 8 checks x nabla_n y =_M nabla_n,
  //! and x_a nabla_n =_M nabla_n =_M nabla_n x_a for every generator.
  Report verify_sink(std::size_t n, std::size_t trials, std::uint64_t seed);

  //! (x_2 x_1 x_2 x_3)^k.
  word_type infinite_family_word(std::size_t k);

  //! Whether (x_2 x_1 x_2 x_3)^k is M-reduced. Throws std::invalid_argument
  //! if rank < 3.
  bool infiniteness_witness(std::size_t k, std::size_t rank = 3);

  //! Checks infiniteness_witness for k = 0..max_k and that the words are
  //! pairwise distinct.
  Report verify_infinite(std::size_t max_k, std::size_t rank = 3);

}  // namespace aimon

#endif  // AIMON_REWRITE_M_HPP_
