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

// Words in the free monoid on x_1, ..., x_n, the commutation congruence
// (x_a x_b = x_b x_a whenever |a - b| > 1) and its canonical forms.

#ifndef AIMON_WORDS_HPP_
#define AIMON_WORDS_HPP_

#include <cstddef>      // for size_t
#include <cstdint>      // for uint8_t
#include <functional>   // for hash
#include <optional>     // for optional
#include <random>       // for mt19937_64
#include <string>       // for string
#include <string_view>  // for string_view
#include <vector>       // for vector

namespace aimon {

  //! A generator index; the letter x_a is stored as the value a >= 1.
  using letter_type = std::uint8_t;

  //! A word is a finite sequence of letters, the empty word is the identity.
  using word_type = std::vector<letter_type>;

  //! Largest rank representable by letter_type.
  inline constexpr std::size_t max_rank = 255;

  using rng_type = std::mt19937_64;

  //! Parses whitespace-separated positive integers. Blank text is the empty
  //! word. Throws std::invalid_argument on a malformed token, an index < 1,
  //! or an index > \p rank when a rank is supplied.
  word_type parse_word(std::string_view text,
                       std::optional<std::size_t> rank = std::nullopt);

  //! Inverse of parse_word: letters separated by single spaces.
  std::string format_word(word_type const& w);

  //! Letters joined by \p sep, with \p empty used for the identity.
  std::string join_word(word_type const& w,
                        std::string_view sep,
                        std::string_view empty);

  //! The descending run (x_a, x_b] = x_{a-1} x_{a-2} ... x_b, empty when
  //! a == b. Throws std::invalid_argument if a < b or b < 1.
  word_type descending_run(std::size_t a, std::size_t b);

  //! The alternating word [a, b; k] = abab... of length k.
  word_type alternating(letter_type a, letter_type b, std::size_t k);

  //! Largest letter in w (0 for the empty word).
  std::size_t max_letter(word_type const& w);

  //! Number of occurrences of \p a in \p w.
  std::size_t count_letter(word_type const& w, letter_type a);

  word_type reversed(word_type w);

  word_type power(word_type const& w, std::size_t k);

  //! Concatenation of any number of words.
  template <typename... Words>
  word_type concat(word_type const& first, Words const&... rest) {
    word_type result;
    result.reserve((first.size() + ... + rest.size()));
    result.insert(result.end(), first.begin(), first.end());
    (result.insert(result.end(), rest.begin(), rest.end()), ...);
    return result;
  }

  //! Whether the adjacent pair (a, b) may be rewritten b a by a commutation,
  //! that is a - b >= 2.
  constexpr bool is_commuting_descent(letter_type a, letter_type b) noexcept {
    return a >= b + 2;
  }

  //! True if no adjacent pair x_a x_b has a - b >= 2.
  bool is_b_reduced(word_type const& w);

  //! The unique B-reduced word in the commutation class of \p w. Each letter
  //! is moved left past every neighbour it commutes with and exceeds by 2 or
  //! more.
  word_type b_reduced_form(word_type w);

  //! Whether u and v lie in the same commutation class.
  bool b_equivalent(word_type const& u, word_type const& v);

  //! A uniformly random word of the given length over x_1, ..., x_rank.
  word_type random_word(rng_type& rng, std::size_t rank, std::size_t length);

  //! All words over x_1, ..., x_rank of length at most max_length, in
  //! shortlex order.
  std::vector<word_type> all_words(std::size_t rank, std::size_t max_length);

  struct WordHash {
    std::size_t operator()(word_type const& w) const noexcept {
      return std::hash<std::string_view>{}(
          std::string_view(reinterpret_cast<char const*>(w.data()), w.size()));
    }
  };

}  // namespace aimon

#endif  // AIMON_WORDS_HPP_
