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

#include "aimon/rewrite_m.hpp"

#include <algorithm>   // for min
#include <functional>  // for function
#include <set>         // for set
#include <stdexcept>   // for invalid_argument

#include "aimon/garside.hpp"  // for nabla

namespace aimon {

  void m_matches_at(word_type const& w, std::size_t pos, std::vector<Match>& out, MRules rules) {
    std::size_t const n = w.size();
    if (pos >= n) {
      return;
    }
    std::size_t const first = out.size();
    if (rules.commutation && pos + 1 < n && is_commuting_descent(w[pos], w[pos + 1])) {
      out.push_back({rule_kind::commutation, pos, pos + 2, 0, 0, {w[pos], w[pos + 1]}});
    }
    std::size_t const t = w[pos];
    if (rules.square_run) {
      // The run must be the maximal stretch t, t-1, ... since the second
      // copy begins with t again.
      std::size_t len = 1;
      while (pos + len < n && len < t && w[pos + len] == t - len) {
        ++len;
      }
      if (pos + 2 * len <= n && w[pos + len] == t) {
        bool repeated = true;
        for (std::size_t k = 1; k < len && repeated; ++k) {
          repeated = w[pos + len + k] == t - k;
        }
        if (repeated) {
          out.push_back({rule_kind::square_run, pos, pos + 2 * len, pos, pos + 1,
                         {t + 1, t + 1 - len}});
        }
      }
    }
    if (rules.staircase) {
      // Step i reads y_i (letters > i), x_i, x_{i-1} and z_i (letters
      // < i - 1). A following x_i closes the staircase; anything else must
      // start step i + 1. Every choice is forced.
      std::size_t i = t + 1;
      std::size_t p = pos + 1;
      while (true) {
        while (rules.interleaved && p < n && w[p] > i) {
          ++p;
        }
        if (p + 1 >= n || w[p] != i || w[p + 1] != i - 1) {
          break;
        }
        p += 2;
        while (rules.interleaved && p < n && std::size_t(w[p]) + 2 <= i) {
          ++p;
        }
        if (p < n && w[p] == i) {
          out.push_back({rule_kind::staircase, pos, p + 1, p, p + 1, {t, i}});
          break;
        }
        ++i;
      }
    }
    std::sort(out.begin() + first, out.end(), match_before);
  }

  matcher_type m_matcher(MRules rules) {
    return [rules](word_type const& w, std::size_t pos, std::vector<Match>& out) {
      m_matches_at(w, pos, out, rules);
    };
  }

  std::vector<Match> m_matches(word_type const& w, MRules rules) {
    return all_matches(w, m_matcher(rules));
  }

  std::optional<word_type> m_step(word_type const& w, MRules rules) {
    if (auto m = first_match(w, m_matcher(rules))) {
      return apply_match(w, *m);
    }
    return std::nullopt;
  }

  word_type m_reduce(word_type const& w, MRules rules) {
    return normalize(w, m_matcher(rules)).word;
  }

  bool m_is_reduced(word_type const& w) {
    return !first_match(w, m_matcher()).has_value();
  }

  bool m_equal(word_type const& u, word_type const& v) {
    return m_reduce(u) == m_reduce(v);
  }

  word_type staircase_word(std::size_t                   a,
                           std::size_t                   b,
                           std::vector<word_type> const& ys,
                           std::vector<word_type> const& zs,
                           bool                          terminal) {
    if (a < 1 || b < a || ys.size() < b - a || zs.size() < b - a) {
      throw std::invalid_argument("staircase_word: need 1 <= a <= b and b - a factors");
    }
    word_type w{static_cast<letter_type>(a)};
    for (std::size_t i = a + 1; i <= b; ++i) {
      w.insert(w.end(), ys[i - a - 1].begin(), ys[i - a - 1].end());
      w.push_back(static_cast<letter_type>(i));
      w.push_back(static_cast<letter_type>(i - 1));
      w.insert(w.end(), zs[i - a - 1].begin(), zs[i - a - 1].end());
    }
    if (terminal) {
      w.push_back(static_cast<letter_type>(b));
    }
    return w;
  }

  namespace {
    word_type letter(std::size_t a) {
      return {static_cast<letter_type>(a)};
    }

    word_type drop_first(word_type w) {
      w.erase(w.begin());
      return w;
    }

    // Words of length at most len over the letters lo, ..., hi.
    std::vector<word_type> short_words(std::size_t lo, std::size_t hi, std::size_t len) {
      std::vector<word_type> out{{}};
      if (lo > hi) {
        return out;
      }
      for (auto const& w : all_words(hi - lo + 1, len)) {
        if (w.empty()) {
          continue;
        }
        word_type v = w;
        for (auto& x : v) {
          x = static_cast<letter_type>(x + lo - 1);
        }
        out.push_back(std::move(v));
      }
      return out;
    }

    using interleave_fn
        = std::function<void(std::vector<word_type> const&, std::vector<word_type> const&)>;

    // Every choice of (y_i, z_i) for i = a + 1, ..., c within the caps.
    void for_each_interleave(std::size_t          a,
                             std::size_t          c,
                             std::size_t          N,
                             std::size_t          L,
                             interleave_fn const& f) {
      std::vector<std::vector<word_type>> ychoice, zchoice;
      for (std::size_t i = a + 1; i <= c; ++i) {
        ychoice.push_back(short_words(i + 1, N, L));
        zchoice.push_back(i >= 3 ? short_words(1, i - 2, L) : std::vector<word_type>{{}});
      }
      std::vector<word_type>            ys(c - a), zs(c - a);
      std::function<void(std::size_t)> rec = [&](std::size_t k) {
        if (k == c - a) {
          f(ys, zs);
          return;
        }
        for (auto const& y : ychoice[k]) {
          for (auto const& z : zchoice[k]) {
            ys[k] = y;
            zs[k] = z;
            rec(k + 1);
          }
        }
      };
      rec(0);
    }

    std::vector<word_type> tail(std::vector<word_type> const& v, std::size_t from) {
      return std::vector<word_type>(v.begin() + static_cast<std::ptrdiff_t>(from), v.end());
    }
  }  // namespace

  std::vector<CriticalTriple> m_critical_pairs(std::size_t n, MCaps caps) {
    std::size_t const           N = std::min(n, caps.max_index);
    std::size_t const           L = caps.max_interleave;
    std::vector<CriticalTriple> out;
    auto run = [](std::size_t a, std::size_t b) { return descending_run(a, b); };

    // (a)
    for (std::size_t c = 1; c + 4 <= N; ++c) {
      for (std::size_t b = c + 2; b + 2 <= N; ++b) {
        for (std::size_t a = b + 2; a <= N; ++a) {
          out.push_back({"a", letter(a), letter(b), letter(c)});
        }
      }
    }
    // (b)
    for (std::size_t b = 2; b + 1 <= N; ++b) {
      for (std::size_t a = b + 1; a <= N; ++a) {
        for (std::size_t c = 1; c < b; ++c) {
          out.push_back({"b", letter(a), letter(b - 1), concat(run(b - 1, c), run(b, c))});
        }
      }
    }
    // (c)
    for (std::size_t b = 3; b <= N; ++b) {
      for (std::size_t a = b + 1; a <= N + 1; ++a) {
        for (std::size_t c = 1; c + 2 <= b; ++c) {
          out.push_back({"c", concat(run(a, b), run(a, b + 1)), letter(b), letter(c)});
        }
      }
    }
    // (d) and (g): something ending in x_a, then a staircase from x_a
    for (std::size_t a = 1; a <= N; ++a) {
      for (std::size_t b = a; b <= N; ++b) {
        for_each_interleave(a, b, N, L, [&](auto const& ys, auto const& zs) {
          word_type rest = drop_first(staircase_word(a, b, ys, zs, true));
          for (std::size_t c = a + 2; c <= N; ++c) {
            out.push_back({"d", letter(c), letter(a), rest});
          }
          for (std::size_t c = a + 1; c <= N + 1; ++c) {
            out.push_back({"g", concat(run(c, a), run(c, a + 1)), letter(a), rest});
          }
        });
      }
    }
    // (e) and (h): a staircase whose closing x_b starts another rule
    for (std::size_t a = 1; a <= N; ++a) {
      for (std::size_t b = a; b <= N; ++b) {
        for_each_interleave(a, b, N, L, [&](auto const& ys, auto const& zs) {
          word_type q = staircase_word(a, b, ys, zs, false);
          for (std::size_t c = 1; c + 2 <= b; ++c) {
            out.push_back({"e", q, letter(b), letter(c)});
          }
          if (b + 1 <= N) {
            for (std::size_t c = 1; c <= b; ++c) {
              out.push_back({"h", q, letter(b), concat(run(b, c), run(b + 1, c))});
            }
          }
        });
      }
    }
    // (f)
    for (std::size_t a = 2; a <= N + 1; ++a) {
      for (std::size_t c = 2; c <= a; ++c) {
        for (std::size_t b = 1; b < c; ++b) {
          for (std::size_t d = 1; d <= b; ++d) {
            out.push_back({"f",
                           concat(run(a, b), run(a, c)),
                           run(c, b),
                           concat(run(b, d), run(c, d))});
          }
        }
      }
    }
    // (i) and (j): two staircases sharing letters
    for (std::size_t a = 1; a <= N; ++a) {
      for (std::size_t c = a + 1; c <= N; ++c) {
        for_each_interleave(a, c, N, L, [&](auto const& ys, auto const& zs) {
          for (std::size_t b = a + 1; b <= c; ++b) {
            std::size_t const k = b - a;  // index of step b + 1 in ys, zs
            if (b < c) {
              out.push_back({"i",
                             staircase_word(a, b, ys, zs, false),
                             letter(b),
                             drop_first(staircase_word(b, c, tail(ys, k), tail(zs, k), true))});
            }
            word_type q = concat(staircase_word(a, b - 1, ys, zs, false), ys[k - 1], letter(b));
            word_type s = concat(letter(b - 1),
                                 zs[k - 1],
                                 drop_first(staircase_word(b, c, tail(ys, k), tail(zs, k), true)));
            out.push_back({"j", q, word_type{static_cast<letter_type>(b - 1),
                                             static_cast<letter_type>(b)},
                           s});
          }
        });
      }
    }
    return out;
  }

  Report m_confluence_audit(std::size_t   n,
                            MCaps         caps,
                            MRules        rules,
                            std::size_t   random_words,
                            std::uint64_t seed,
                            std::size_t   exhaustive_len) {
    Report report;
    report.command = "confluence-m";
    report.param("rank", std::to_string(n));
    report.param("max_index", std::to_string(caps.max_index));
    report.param("max_interleave", std::to_string(caps.max_interleave));
    report.param("random_words", std::to_string(random_words));
    report.param("seed", std::to_string(seed));

    matcher_type const matcher = m_matcher(rules);
    audit_triples(m_critical_pairs(n, caps), matcher, report);

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

  Report verify_sink(std::size_t n, std::size_t trials, std::uint64_t seed) {
    Report report;
    report.command = "sink";
    report.param("rank", std::to_string(n));
    report.param("trials", std::to_string(trials));
    report.param("seed", std::to_string(seed));

    word_type const w0     = nabla(n);
    word_type const target = m_reduce(w0);
    report.fact("nabla", format_word(w0));
    for (std::size_t a = 1; a <= n; ++a) {
      word_type x = letter(a);
      report.expect(m_reduce(concat(x, w0)) == target, "x_a nabla = nabla",
                    {{"a", std::to_string(a)}});
      report.expect(m_reduce(concat(w0, x)) == target, "nabla x_a = nabla",
                    {{"a", std::to_string(a)}});
    }
    rng_type                                   rng(seed);
    std::uniform_int_distribution<std::size_t> length(0, 8);
    for (std::size_t i = 0; i < trials; ++i) {
      word_type x      = random_word(rng, n, length(rng));
      word_type y      = random_word(rng, n, length(rng));
      word_type actual = m_reduce(concat(x, w0, y));
      report.expect(actual == target, "x nabla y = nabla",
                    {{"x", format_word(x)},
                     {"y", format_word(y)},
                     {"expected", format_word(target)},
                     {"actual", format_word(actual)}});
    }
    return report;
  }

  word_type infinite_family_word(std::size_t k) {
    return power(word_type{2, 1, 2, 3}, k);
  }

  bool infiniteness_witness(std::size_t k, std::size_t rank) {
    if (rank < 3) {
      throw std::invalid_argument("infiniteness_witness: rank must be at least 3");
    }
    return m_matches(infinite_family_word(k)).empty();
  }

  Report verify_infinite(std::size_t max_k, std::size_t rank) {
    Report report;
    report.command = "infinite";
    report.param("max_k", std::to_string(max_k));
    report.param("rank", std::to_string(rank));
    std::set<word_type> seen;
    std::size_t         passed = 0;
    for (std::size_t k = 0; k <= max_k; ++k) {
      word_type w = infinite_family_word(k);
      if (report.expect(infiniteness_witness(k, rank), "(x2 x1 x2 x3)^k is M-reduced",
                        {{"k", std::to_string(k)}})) {
        ++passed;
      }
      report.expect(seen.insert(m_reduce(w)).second, "normal forms are pairwise distinct",
                    {{"k", std::to_string(k)}});
    }
    report.fact("reduced", std::to_string(passed) + "/" + std::to_string(max_k + 1));
    return report;
  }

}  // namespace aimon
