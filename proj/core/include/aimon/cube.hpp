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

// The AI monoid <a, b, c | aba = bab, bcb = cbcb, ac = ca> (letters 1, 2,
// 3), complements s\t read off a complemented presentation, subword
// reversing, and bounded evidence that {[b], [c]} has two minimal upper
// bounds.

#ifndef AIMON_CUBE_HPP_
#define AIMON_CUBE_HPP_

#include <cstddef>  // for size_t
#include <map>      // for map
#include <string>   // for string
#include <utility>  // for pair
#include <vector>   // for vector

#include "ci_matrix.hpp"   // for Presentation
#include "congruence.hpp"  // for OracleVerdict, Closure
#include "report.hpp"      // for Report
#include "words.hpp"       // for word_type

namespace aimon {

  //! The presentation above.
  Presentation cube_presentation();

  class ComplementTable {
   public:
    ComplementTable() = default;
    explicit ComplementTable(std::size_t generators) : _generators(generators) {}

    std::size_t generators() const noexcept {
      return _generators;
    }

    //! s\t; empty when s == t. Throws std::out_of_range for a missing pair.
    word_type const& at(letter_type s, letter_type t) const;

    void set(letter_type s, letter_type t, word_type w);

    bool contains(letter_type s, letter_type t) const;

   private:
    std::size_t                                          _generators = 0;
    std::map<std::pair<letter_type, letter_type>, word_type> _entries;
  };

  //! Reads s\t and t\s off the relation s (s\t) = t (t\s). Throws
  //! std::invalid_argument unless every pair of distinct generators occurs
  //! in exactly one relation whose sides start with these two letters.
  ComplementTable complement_table(Presentation const& p);

  enum class reversal_status { complete, budget_exceeded };

  struct ReversalOutcome {
    reversal_status status = reversal_status::complete;
    //! u\v when complete.
    word_type   word;
    std::size_t steps = 0;
  };

  //! Right reversing of u^{-1} v: the leftmost factor s^{-1} t is replaced
  //! by (s\t)(t\s)^{-1} until no negative letter precedes a positive one.
  //! Throws std::invalid_argument if budget == 0.
  ReversalOutcome reverse(word_type const&       u,
                          word_type const&       v,
                          ComplementTable const& table,
                          std::size_t            budget = 10'000);

  struct CubeCheck {
    word_type     w1;
    word_type     w2;
    OracleVerdict verdict;
  };

  //! w1 = (x\y)\(x\z) and w2 = (y\x)\(y\z), compared by bounded search.
  //! Throws std::runtime_error if reversing exceeds the budget.
  CubeCheck cube_condition_check(Presentation const& p,
                                 letter_type         x,
                                 letter_type         y,
                                 letter_type         z,
                                 std::size_t         budget     = 10'000,
                                 std::size_t         max_len    = 12,
                                 std::size_t         max_states = default_max_states);

  //! Bounded congruence classes of the targets and whether they are
  //! pairwise disjoint.
  struct Census {
    std::vector<Closure> classes;
    bool                 disjoint = true;
  };

  Census upper_bound_census(Presentation const&           p,
                            std::vector<word_type> const& targets,
                            std::size_t                   max_len);

  //! Whether w has the form c^k b c b.
  bool is_p_shape(word_type const& w);

  //! Whether w lies in one of the four families that contain every word of
  //! [c a b c b a b]:
  //!   c* b c* a c* b c b a,  c* a c* b a c b a,  c* a c* b c b a b,  c* a c* b c a b a.
  bool is_q_shape(word_type const& w);

  //! Runs the reversing examples, the cube check for (a, b, c) and
  //! (a, c, b), and the census of [b c b] and [c a b c b a b] up to length
  //! max_len.
  Report verify_cube(std::size_t max_len = 9, std::size_t budget = 10'000);

}  // namespace aimon

#endif  // AIMON_CUBE_HPP_
