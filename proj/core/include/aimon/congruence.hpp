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

// Bounded breadth-first search in the congruence generated by a finite
// presentation. This knows nothing about the rewriting systems and serves as
// the independent oracle against which they are checked.

#ifndef AIMON_CONGRUENCE_HPP_
#define AIMON_CONGRUENCE_HPP_

#include <cstddef>  // for size_t
#include <cstdint>  // for uint64_t
#include <vector>   // for vector

#include "ci_matrix.hpp"  // for Presentation, CIMatrix
#include "report.hpp"     // for Report
#include "words.hpp"      // for word_type, rng_type

namespace aimon {

  enum class verdict {
    //! A chain of relation applications connects the two words.
    equal,
    //! Every word reachable without exceeding the length cap was visited and
    //! the target was not among them.
    distinct_within_bound,
    //! The state cap was reached before the search finished.
    inconclusive
  };

  char const* to_string(verdict v) noexcept;

  struct OracleVerdict {
    verdict status = verdict::inconclusive;
    //! For verdict::equal, the words of a chain from u to v in which
    //! consecutive entries differ by one relation application.
    std::vector<word_type> witness;
    std::size_t            states_visited = 0;
  };

  inline constexpr std::size_t default_max_states = 1'000'000;

  //! Default length cap |u| + |v| + 4.
  std::size_t default_max_len(word_type const& u, word_type const& v);

  //! Decides u = v within bounds by breadth-first closure of {u} under
  //! bidirectional replacement of relation sides. Words longer than
  //! \p max_len are never entered and at most \p max_states words are
  //! visited. Throws std::invalid_argument if a letter is out of range,
  //! if max_len < max(|u|, |v|), or if max_states == 0.
  OracleVerdict bfs_equal(Presentation const& p,
                          word_type const&    u,
                          word_type const&    v,
                          std::size_t         max_len,
                          std::size_t         max_states = default_max_states);

  struct Closure {
    //! Visited words in breadth-first order; the first is the start word.
    std::vector<word_type> words;
    //! The state cap stopped the search.
    bool truncated = false;
    //! Some neighbour was discarded for exceeding the length cap.
    bool length_capped = false;
  };

  //! The bounded congruence class of \p start, with the same bounds as
  //! bfs_equal.
  Closure bfs_closure(Presentation const& p,
                      word_type const&    start,
                      std::size_t         max_len,
                      std::size_t         max_states = default_max_states);

  //! Every word obtained from \p w by one application of a relation in
  //! either direction, keeping only results of length <= max_len.
  std::vector<word_type> relation_neighbours(Presentation const& p,
                                             word_type const&    w,
                                             std::size_t         max_len);

  //! Applies up to \p steps uniformly chosen relation applications to
  //! \p w; the result is congruent to \p w by construction.
  word_type random_relation_walk(Presentation const& p,
                                 word_type           w,
                                 std::size_t         steps,
                                 rng_type&           rng,
                                 std::size_t         max_len);

  //! Checks that word reversal is compatible with the CI congruence of
  //! \p m: for sampled pairs u = v (built by random relation applications)
  //! the reversed words are congruent as well, decided by bfs_equal.
  //! Throws std::invalid_argument if some finite edge label
  //! m(a,b) + m(b,a) is congruent to 1 mod 4, or if \p m is not a CI matrix.
  Report check_reversal(CIMatrix const& m,
                        std::size_t     samples,
                        std::uint64_t   seed,
                        std::size_t     max_word_len = 6);

}  // namespace aimon

#endif  // AIMON_CONGRUENCE_HPP_
