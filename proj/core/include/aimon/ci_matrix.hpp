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

// CI matrices and the monoid presentations they define.
//
// A CI matrix on generators 1, ..., n assigns to every ordered pair of
// distinct generators a label m(a, b) in {2, 3, ...} or infinity, with
// m(a, b) infinite iff m(b, a) is, and |m(a, b) - m(b, a)| <= 1. The
// associated CI monoid has relations
//
//   a a = a,
//   [a, b; m(a, b)] = [b, a; m(b, a)],
//   [a, b; m(a, b)] = [a, b; m(a, b) + 1],
//
// and the AI monoid only the middle family.

#ifndef AIMON_CI_MATRIX_HPP_
#define AIMON_CI_MATRIX_HPP_

#include <cstddef>   // for size_t
#include <cstdint>   // for uint32_t
#include <iosfwd>    // for istream, ostream
#include <limits>    // for numeric_limits
#include <string>    // for string
#include <utility>   // for pair
#include <vector>    // for vector

#include "words.hpp"  // for word_type

namespace aimon {

  //! Label type for CI matrix entries; \ref infinity marks an absent relation.
  using label_type = std::uint32_t;

  inline constexpr label_type infinity = std::numeric_limits<label_type>::max();

  class CIMatrix {
   public:
    //! A rank-n matrix with every off-diagonal label equal to 2.
    explicit CIMatrix(std::size_t rank);

    //! The matrix of the linear chain x_1 -> x_2 -> ... -> x_n where each
    //! arrow carries m(a, a+1) = 3 and m(a+1, a) = 4 (edge label 7), and all
    //! other pairs commute.
    static CIMatrix chain(std::size_t rank);

    //! A rank-2 matrix with m(1, 2) = k and m(2, 1) = l.
    static CIMatrix rank2(label_type k, label_type l);

    std::size_t rank() const noexcept {
      return _rank;
    }

    //! m(a, b) for generators 1 <= a, b <= rank; m(a, a) = 1.
    label_type at(std::size_t a, std::size_t b) const;

    //! Sets m(a, b) for a != b. Any value is accepted so that invalid
    //! matrices can be represented and rejected by validate_ci.
    CIMatrix& set(std::size_t a, std::size_t b, label_type m);

    //! Sets both m(a, b) and m(b, a).
    CIMatrix& set_pair(std::size_t a, std::size_t b, label_type mab, label_type mba);

    bool operator==(CIMatrix const&) const = default;

   private:
    std::size_t             _rank;
    std::vector<label_type> _labels;
  };

  //! Whether the three defining conditions of a CI matrix hold.
  bool validate_ci(CIMatrix const& m);

  //! A human-readable reason why validate_ci fails, empty if it holds.
  std::string ci_violation(CIMatrix const& m);

  //! A uniformly random CI matrix: each unordered pair is infinite with
  //! probability \p infinite_probability, otherwise m(a, b) is drawn from
  //! {2, ..., max_label} and m(b, a) from the admissible neighbours.
  CIMatrix random_ci_matrix(rng_type&   rng,
                            std::size_t rank,
                            label_type  max_label,
                            double      infinite_probability = 0.0);

  //! Edge label m(a, b) + m(b, a), or infinity.
  label_type edge_label(CIMatrix const& m, std::size_t a, std::size_t b);

  //! Reads the plain-text matrix format: a first line "rank N", followed by
  //! one line "a b m" per stored ordered pair, m a positive integer or "inf".
  //! Omitted pairs default to 2. Blank lines and lines starting with '#' are
  //! ignored. Throws std::invalid_argument on malformed input; the result is
  //! not validated.
  CIMatrix parse_ci_matrix(std::istream& in);
  CIMatrix parse_ci_matrix(std::string const& text);

  //! Writes every ordered pair whose label differs from 2.
  void write_ci_matrix(std::ostream& out, CIMatrix const& m);

  using relation_type = std::pair<word_type, word_type>;

  struct Presentation {
    std::size_t                generators = 0;
    std::vector<relation_type> relations;

    //! Throws std::invalid_argument if some relation uses a letter outside
    //! 1, ..., generators.
    void validate() const;
  };

  //! The CI monoid presentation. Per unordered pair {a, b} with finite
  //! labels this emits [a,b;m(a,b)] = [b,a;m(b,a)] once, and the absorption
  //! relation [a,b;m(a,b)] = [a,b;m(a,b)+1] once, for the side with the
  //! smaller label (a < b on ties); the other absorption relation is a
  //! consequence. Idempotent relations a a = a come first.
  //! Throws std::invalid_argument if the matrix is not a CI matrix.
  Presentation ci_presentation(CIMatrix const& m);

  //! Only the braid-like relations [a,b;m(a,b)] = [b,a;m(b,a)].
  Presentation ai_presentation(CIMatrix const& m);

}  // namespace aimon

#endif  // AIMON_CI_MATRIX_HPP_
