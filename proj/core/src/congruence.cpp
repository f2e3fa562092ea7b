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

#include "aimon/congruence.hpp"

#include <algorithm>      // for search, max
#include <stdexcept>      // for invalid_argument
#include <unordered_map>  // for unordered_map

namespace aimon {

  char const* to_string(verdict v) noexcept {
    switch (v) {
      case verdict::equal:
        return "Equal";
      case verdict::distinct_within_bound:
        return "DistinctWithinBound";
      case verdict::inconclusive:
        return "Inconclusive";
    }
    return "?";
  }

  std::size_t default_max_len(word_type const& u, word_type const& v) {
    return u.size() + v.size() + 4;
  }

  namespace {

    template <typename Visit>
    void for_each_neighbour(Presentation const& p,
                            word_type const&    w,
                            std::size_t         max_len,
                            bool&               length_capped,
                            Visit&&             visit) {
      auto replace_all = [&](word_type const& from, word_type const& to) {
        if (from.size() > w.size()) {
          return;
        }
        std::size_t new_len = w.size() - from.size() + to.size();
        for (auto it = std::search(w.begin(), w.end(), from.begin(), from.end());
             it != w.end();
             it = std::search(it + 1, w.end(), from.begin(), from.end())) {
          if (new_len > max_len) {
            length_capped = true;
            return;
          }
          word_type next;
          next.reserve(new_len);
          next.insert(next.end(), w.begin(), it);
          next.insert(next.end(), to.begin(), to.end());
          next.insert(next.end(), it + from.size(), w.end());
          visit(std::move(next));
          if (from.empty()) {
            break;
          }
        }
      };
      for (auto const& [lhs, rhs] : p.relations) {
        replace_all(lhs, rhs);
        replace_all(rhs, lhs);
      }
    }

    void check_letters(Presentation const& p, word_type const& w) {
      if (max_letter(w) > p.generators) {
        throw std::invalid_argument("word \"" + format_word(w)
                                    + "\" uses a letter beyond generator "
                                    + std::to_string(p.generators));
      }
    }

    struct Search {
      std::vector<word_type>                                  words;
      std::vector<std::size_t>                                parent;
      std::unordered_map<word_type, std::size_t, WordHash>    index;
      bool                                                    truncated     = false;
      bool                                                    length_capped = false;
      std::size_t                                             found = static_cast<std::size_t>(-1);
    };

    // Breadth-first search from start; stops early when target is visited.
    Search run_bfs(Presentation const& p,
                   word_type const&    start,
                   word_type const*    target,
                   std::size_t         max_len,
                   std::size_t         max_states) {
      Search s;
      s.words.push_back(start);
      s.parent.push_back(0);
      s.index.emplace(start, 0);
      if (target != nullptr && *target == start) {
        s.found = 0;
        return s;
      }
      for (std::size_t head = 0; head < s.words.size(); ++head) {
        word_type current = s.words[head];
        bool      stop    = false;
        for_each_neighbour(p, current, max_len, s.length_capped, [&](word_type&& next) {
          if (stop || s.index.count(next) != 0) {
            return;
          }
          if (s.words.size() >= max_states) {
            s.truncated = true;
            stop        = true;
            return;
          }
          std::size_t id = s.words.size();
          s.index.emplace(next, id);
          s.parent.push_back(head);
          if (target != nullptr && next == *target) {
            s.found = id;
            stop    = true;
          }
          s.words.push_back(std::move(next));
        });
        if (stop) {
          break;
        }
      }
      return s;
    }
  }  // namespace

  OracleVerdict bfs_equal(Presentation const& p,
                          word_type const&    u,
                          word_type const&    v,
                          std::size_t         max_len,
                          std::size_t         max_states) {
    p.validate();
    check_letters(p, u);
    check_letters(p, v);
    if (max_len < std::max(u.size(), v.size())) {
      throw std::invalid_argument("bfs_equal: max_len is shorter than an input word");
    }
    if (max_states == 0) {
      throw std::invalid_argument("bfs_equal: max_states must be positive");
    }
    Search        s = run_bfs(p, u, &v, max_len, max_states);
    OracleVerdict result;
    result.states_visited = s.words.size();
    if (s.found != static_cast<std::size_t>(-1)) {
      result.status = verdict::equal;
      for (std::size_t i = s.found;; i = s.parent[i]) {
        result.witness.push_back(s.words[i]);
        if (i == 0) {
          break;
        }
      }
      std::reverse(result.witness.begin(), result.witness.end());
    } else if (s.truncated) {
      result.status = verdict::inconclusive;
    } else {
      result.status = verdict::distinct_within_bound;
    }
    return result;
  }

  Closure bfs_closure(Presentation const& p,
                      word_type const&    start,
                      std::size_t         max_len,
                      std::size_t         max_states) {
    p.validate();
    check_letters(p, start);
    if (max_len < start.size()) {
      throw std::invalid_argument("bfs_closure: max_len is shorter than the start word");
    }
    if (max_states == 0) {
      throw std::invalid_argument("bfs_closure: max_states must be positive");
    }
    Search  s = run_bfs(p, start, nullptr, max_len, max_states);
    Closure c;
    c.words         = std::move(s.words);
    c.truncated     = s.truncated;
    c.length_capped = s.length_capped;
    return c;
  }

  std::vector<word_type> relation_neighbours(Presentation const& p,
                                             word_type const&    w,
                                             std::size_t         max_len) {
    std::vector<word_type> out;
    bool                   capped = false;
    for_each_neighbour(p, w, max_len, capped, [&](word_type&& next) {
      out.push_back(std::move(next));
    });
    return out;
  }

  word_type random_relation_walk(Presentation const& p,
                                 word_type           w,
                                 std::size_t         steps,
                                 rng_type&           rng,
                                 std::size_t         max_len) {
    for (std::size_t i = 0; i < steps; ++i) {
      auto options = relation_neighbours(p, w, max_len);
      if (options.empty()) {
        break;
      }
      std::uniform_int_distribution<std::size_t> pick(0, options.size() - 1);
      w = std::move(options[pick(rng)]);
    }
    return w;
  }

  Report check_reversal(CIMatrix const& m,
                        std::size_t     samples,
                        std::uint64_t   seed,
                        std::size_t     max_word_len) {
    if (!validate_ci(m)) {
      throw std::invalid_argument("check_reversal: not a CI matrix: " + ci_violation(m));
    }
    for (std::size_t a = 1; a <= m.rank(); ++a) {
      for (std::size_t b = a + 1; b <= m.rank(); ++b) {
        label_type label = edge_label(m, a, b);
        if (label != infinity && label % 4 == 1) {
          throw std::invalid_argument(
              "check_reversal: edge label " + std::to_string(label) + " between "
              + std::to_string(a) + " and " + std::to_string(b)
              + " is congruent to 1 mod 4");
        }
      }
    }
    Presentation p = ci_presentation(m);
    Report       report;
    report.command = "reversal";
    report.param("rank", std::to_string(m.rank()));
    report.param("samples", std::to_string(samples));
    report.param("seed", std::to_string(seed));

    rng_type                                   rng(seed);
    std::uniform_int_distribution<std::size_t> length(0, max_word_len);
    std::uniform_int_distribution<std::size_t> steps(1, 3);
    for (std::size_t i = 0; i < samples; ++i) {
      word_type u = random_word(rng, m.rank(), length(rng));
      word_type v = random_relation_walk(p, u, steps(rng), rng, max_word_len + 4);
      word_type ru = reversed(u), rv = reversed(v);
      auto      result = bfs_equal(p, ru, rv, default_max_len(ru, rv));
      report.expect(result.status == verdict::equal,
                    "reversed words congruent",
                    {{"u", format_word(u)},
                     {"v", format_word(v)},
                     {"verdict", to_string(result.status)}});
    }
    return report;
  }

}  // namespace aimon
