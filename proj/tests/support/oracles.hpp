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

// Brute-force reference implementations used to cross-check the library.
// They are deliberately naive and share no code with it beyond the word
// type.

#ifndef AIMON_TESTS_ORACLES_HPP_
#define AIMON_TESTS_ORACLES_HPP_

#include <algorithm>      // for search
#include <cstddef>        // for size_t
#include <deque>          // for deque
#include <functional>     // for function
#include <set>            // for set
#include <vector>         // for vector

#include "aimon/words.hpp"  // for word_type

namespace aimon::testing {

  // The whole commutation class of w: closure under swapping adjacent
  // letters whose indices differ by at least 2, in either direction.
  inline std::set<word_type> commutation_class(word_type const& w) {
    std::set<word_type>   seen{w};
    std::deque<word_type> todo{w};
    while (!todo.empty()) {
      word_type u = todo.front();
      todo.pop_front();
      for (std::size_t i = 0; i + 1 < u.size(); ++i) {
        int d = int(u[i]) - int(u[i + 1]);
        if (d >= 2 || d <= -2) {
          word_type v = u;
          std::swap(v[i], v[i + 1]);
          if (seen.insert(v).second) {
            todo.push_back(v);
          }
        }
      }
    }
    return seen;
  }

  inline bool has_factor(word_type const& w, word_type const& f) {
    return std::search(w.begin(), w.end(), f.begin(), f.end()) != w.end();
  }

  // Rewrites with a caller-supplied step function until it returns false,
  // counting the steps.
  inline std::size_t count_steps(word_type& w, std::function<bool(word_type&)> const& step) {
    std::size_t n = 0;
    while (step(w)) {
      ++n;
    }
    return n;
  }

}  // namespace aimon::testing

#endif  // AIMON_TESTS_ORACLES_HPP_
