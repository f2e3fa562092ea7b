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

#include "aimon/rewrite_a.hpp"

#include <algorithm>   // for min
#include <functional>  // for function

namespace aimon {

  void a_matches_at(word_type const& w, std::size_t pos, std::vector<Match>& out, ARules rules) {
    std::size_t const n = w.size();
    if (pos >= n) {
      return;
    }
    if (rules.commutation && pos + 1 < n && is_commuting_descent(w[pos], w[pos + 1])) {
      out.push_back({rule_kind::commutation, pos, pos + 2, 0, 0, {w[pos], w[pos + 1]}});
    }
    if (!rules.family) {
      return;
    }
    // Blocks x_t^{c(1)} x_{t-1}^{c(2)} ... followed by the run t, t-1, ...
    // Once the blocks are read the next letter is either t (the run) or
    // one less than the last block letter, so the parse is deterministic.
    letter_type const        t   = w[pos];
    letter_type              cur = t;
    std::size_t              i   = pos;
    std::vector<std::size_t> exps;
    while (true) {
      std::size_t c = 0;
      while (i < n && w[i] == cur) {
        ++i;
        ++c;
      }
      exps.push_back(c);
      if (i >= n) {
        return;
      }
      std::size_t const b = exps.size();
      if (b >= 2 && w[i] == t) {
        if (i + b > n) {
          return;
        }
        for (std::size_t k = 0; k < b; ++k) {
          if (w[i + k] != t - k) {
            return;
          }
        }
        Match m{rule_kind::family, pos, i + b, pos, pos + exps[0], {std::size_t(t) + 1, b}};
        m.params.insert(m.params.end(), exps.begin(), exps.end());
        out.push_back(std::move(m));
        return;
      }
      if (cur >= 2 && w[i] == cur - 1) {
        --cur;
        continue;
      }
      return;
    }
  }

  matcher_type a_matcher(ARules rules) {
    return [rules](word_type const& w, std::size_t pos, std::vector<Match>& out) {
      a_matches_at(w, pos, out, rules);
    };
  }

  std::vector<Match> a_matches(word_type const& w, ARules rules) {
    return all_matches(w, a_matcher(rules));
  }

  std::optional<word_type> a_step(word_type const& w, ARules rules) {
    if (auto m = first_match(w, a_matcher(rules))) {
      return apply_match(w, *m);
    }
    return std::nullopt;
  }

  word_type a_reduce(word_type const& w, ARules rules) {
    return normalize(w, a_matcher(rules)).word;
  }

  bool a_is_reduced(word_type const& w) {
    return !first_match(w, a_matcher()).has_value();
  }

  bool a_equal(word_type const& u, word_type const& v) {
    return a_reduce(u) == a_reduce(v);
  }

  namespace {
    // Calls f with every exponent vector of length k over {1, ..., max_exp}.
    void for_each_exponents(std::size_t                                            k,
                            std::size_t                                            max_exp,
                            std::function<void(std::vector<std::size_t> const&)> const& f) {
      std::vector<std::size_t> e(k, 1);
      while (true) {
        f(e);
        std::size_t i = 0;
        while (i < k && ++e[i] > max_exp) {
          e[i] = 1;
          ++i;
        }
        if (i == k) {
          return;
        }
      }
    }

    // x_top^{e[0]} x_{top-1}^{e[1]} ... with one block per exponent.
    word_type blocks(std::size_t top, std::vector<std::size_t> const& e, std::size_t skip = 0) {
      word_type w;
      for (std::size_t i = skip; i < e.size(); ++i) {
        w.insert(w.end(), e[i], static_cast<letter_type>(top - i));
      }
      return w;
    }

    word_type letter(std::size_t a) {
      return {static_cast<letter_type>(a)};
    }
  }  // namespace

  std::vector<CriticalTriple> a_critical_pairs(std::size_t n, ACaps caps) {
    std::size_t const           N = std::min(n, caps.max_index);
    std::size_t const           E = caps.max_exp;
    std::vector<CriticalTriple> out;

    // (a) q = blocks(a-1..b) (x_a,x_c], r = (x_c,x_b], s = blocks(b-1..d) (x_c,x_d]
    for (std::size_t a = 3; a <= N + 1; ++a) {
      for (std::size_t b = 1; b + 2 <= a; ++b) {
        for (std::size_t c = b + 1; c <= a; ++c) {
          for (std::size_t d = 1; d <= b && d + 2 <= c; ++d) {
            for_each_exponents(a - b, E, [&](auto const& r) {
              for_each_exponents(b - d, E, [&](auto const& s) {
                out.push_back({"a",
                               concat(blocks(a - 1, r), descending_run(a, c)),
                               descending_run(c, b),
                               concat(blocks(b - 1, s), descending_run(c, d))});
              });
            });
          }
        }
      }
    }
    // (b) q = x_c, r = x_{a-1}, s = the family left-hand side minus one x_{a-1}
    for (std::size_t b = 2; b <= N; ++b) {
      for (std::size_t a = b + 1; a <= N; ++a) {
        for (std::size_t c = a + 1; c <= N; ++c) {
          for_each_exponents(b, E, [&](auto const& r) {
            word_type s(r[0] - 1, static_cast<letter_type>(a - 1));
            out.push_back({"b",
                           letter(c),
                           letter(a - 1),
                           concat(s, blocks(a - 1, r, 1), descending_run(a, a - b))});
          });
        }
      }
    }
    // (c) q = family left-hand side minus its final letter, r = x_{a-b}, s = x_c
    for (std::size_t b = 2; b <= N; ++b) {
      for (std::size_t a = b + 3; a <= N + 1; ++a) {
        for (std::size_t c = 1; c + 2 + b <= a; ++c) {
          for_each_exponents(b, E, [&](auto const& r) {
            out.push_back({"c",
                           concat(blocks(a - 1, r), descending_run(a, a - b + 1)),
                           letter(a - b),
                           letter(c)});
          });
        }
      }
    }
    // (d) three letters, each at least two below the previous
    for (std::size_t c = 1; c + 4 <= N; ++c) {
      for (std::size_t b = c + 2; b + 2 <= N; ++b) {
        for (std::size_t a = b + 2; a <= N; ++a) {
          out.push_back({"d", letter(a), letter(b), letter(c)});
        }
      }
    }
    return out;
  }

  Report a_confluence_audit(std::size_t   n,
                            ACaps         caps,
                            ARules        rules,
                            std::size_t   random_words,
                            std::uint64_t seed,
                            std::size_t   exhaustive_len) {
    Report report;
    report.command = "confluence-a";
    report.param("rank", std::to_string(n));
    report.param("max_index", std::to_string(caps.max_index));
    report.param("max_exp", std::to_string(caps.max_exp));
    report.param("random_words", std::to_string(random_words));
    report.param("seed", std::to_string(seed));

    matcher_type const matcher = a_matcher(rules);
    audit_triples(a_critical_pairs(n, caps), matcher, report);

    // The listed families are not every overlap, so all overlaps of short
    // left-hand sides over at most three letters are checked as well.
    auto overlaps = overlap_triples(
        left_hand_sides(std::min<std::size_t>(n, 3), caps.overlap_len, matcher));
    for (auto const& t : overlaps) {
      check_triple(t, matcher, report);
    }
    report.fact("overlaps", std::to_string(overlaps.size()));

    rng_type                                   rng(seed);
    std::uniform_int_distribution<std::size_t> length(0, 12);
    for (std::size_t i = 0; i < random_words; ++i) {
      check_all_pairs(random_word(rng, n, length(rng)), matcher, report);
    }
    for (auto const& w : all_words(std::min<std::size_t>(n, 3), exhaustive_len)) {
      check_all_pairs(w, matcher, report);
    }
    return report;
  }

}  // namespace aimon
