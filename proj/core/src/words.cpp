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

#include "aimon/words.hpp"

#include <algorithm>  // for reverse, max_element, count
#include <charconv>   // for from_chars
#include <stdexcept>  // for invalid_argument

namespace aimon {

  word_type parse_word(std::string_view text, std::optional<std::size_t> rank) {
    word_type result;
    std::size_t pos = 0;
    auto is_space = [](char c) {
      return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f'
             || c == '\v';
    };
    while (pos < text.size()) {
      while (pos < text.size() && is_space(text[pos])) {
        ++pos;
      }
      if (pos == text.size()) {
        break;
      }
      std::size_t end = pos;
      while (end < text.size() && !is_space(text[end])) {
        ++end;
      }
      std::string_view token = text.substr(pos, end - pos);
      unsigned long    value = 0;
      auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
      if (ec != std::errc() || ptr != token.data() + token.size()) {
        throw std::invalid_argument("invalid letter \"" + std::string(token)
                                    + "\", expected a positive integer");
      }
      if (value < 1) {
        throw std::invalid_argument("letter index must be at least 1, found "
                                    + std::string(token));
      }
      if (rank.has_value() && value > *rank) {
        throw std::invalid_argument("letter " + std::string(token)
                                    + " exceeds rank "
                                    + std::to_string(*rank));
      }
      if (value > max_rank) {
        throw std::invalid_argument("letter " + std::string(token)
                                    + " exceeds the maximum rank "
                                    + std::to_string(max_rank));
      }
      result.push_back(static_cast<letter_type>(value));
      pos = end;
    }
    return result;
  }

  std::string join_word(word_type const& w,
                        std::string_view sep,
                        std::string_view empty) {
    if (w.empty()) {
      return std::string(empty);
    }
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (i != 0) {
        out += sep;
      }
      out += std::to_string(w[i]);
    }
    return out;
  }

  std::string format_word(word_type const& w) {
    return join_word(w, " ", "");
  }

  word_type descending_run(std::size_t a, std::size_t b) {
    if (b < 1) {
      throw std::invalid_argument("descending_run: lower index must be >= 1");
    }
    if (a < b) {
      throw std::invalid_argument("descending_run: expected a >= b, found a = "
                                  + std::to_string(a)
                                  + ", b = " + std::to_string(b));
    }
    if (a - 1 > max_rank) {
      throw std::invalid_argument("descending_run: index too large");
    }
    word_type result;
    result.reserve(a - b);
    for (std::size_t i = a; i > b; --i) {
      result.push_back(static_cast<letter_type>(i - 1));
    }
    return result;
  }

  word_type alternating(letter_type a, letter_type b, std::size_t k) {
    word_type result(k);
    for (std::size_t i = 0; i < k; ++i) {
      result[i] = (i % 2 == 0) ? a : b;
    }
    return result;
  }

  std::size_t max_letter(word_type const& w) {
    return w.empty() ? 0 : *std::max_element(w.begin(), w.end());
  }

  std::size_t count_letter(word_type const& w, letter_type a) {
    return static_cast<std::size_t>(std::count(w.begin(), w.end(), a));
  }

  word_type reversed(word_type w) {
    std::reverse(w.begin(), w.end());
    return w;
  }

  word_type power(word_type const& w, std::size_t k) {
    word_type result;
    result.reserve(w.size() * k);
    for (std::size_t i = 0; i < k; ++i) {
      result.insert(result.end(), w.begin(), w.end());
    }
    return result;
  }

  bool is_b_reduced(word_type const& w) {
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
      if (is_commuting_descent(w[i], w[i + 1])) {
        return false;
      }
    }
    return true;
  }

  word_type b_reduced_form(word_type w) {
    // Insertion sort restricted to commuting descents. Every swap removes
    // exactly one pair (i < j) with w[i] >= w[j] + 2, so this terminates.
    for (std::size_t i = 1; i < w.size(); ++i) {
      for (std::size_t j = i; j > 0 && is_commuting_descent(w[j - 1], w[j]);
           --j) {
        std::swap(w[j - 1], w[j]);
      }
    }
    return w;
  }

  bool b_equivalent(word_type const& u, word_type const& v) {
    return u.size() == v.size() && b_reduced_form(u) == b_reduced_form(v);
  }

  word_type random_word(rng_type& rng, std::size_t rank, std::size_t length) {
    if (rank == 0) {
      return {};
    }
    std::uniform_int_distribution<std::size_t> letter(1, rank);
    word_type                                  w(length);
    for (auto& x : w) {
      x = static_cast<letter_type>(letter(rng));
    }
    return w;
  }

  std::vector<word_type> all_words(std::size_t rank, std::size_t max_length) {
    std::vector<word_type> result{word_type{}};
    std::size_t            level_begin = 0;
    for (std::size_t len = 1; len <= max_length && rank > 0; ++len) {
      std::size_t level_end = result.size();
      for (std::size_t i = level_begin; i < level_end; ++i) {
        for (std::size_t a = 1; a <= rank; ++a) {
          word_type w = result[i];
          w.push_back(static_cast<letter_type>(a));
          result.push_back(std::move(w));
        }
      }
      level_begin = level_end;
    }
    return result;
  }

}  // namespace aimon
