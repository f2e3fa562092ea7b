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

#include "aimon/cube.hpp"

#include <regex>      // for regex, regex_match
#include <stdexcept>  // for invalid_argument, runtime_error
#include <unordered_set>  // for unordered_set

namespace aimon {

  Presentation cube_presentation() {
    Presentation p;
    p.generators = 3;
    p.relations  = {{{1, 2, 1}, {2, 1, 2}}, {{2, 3, 2}, {3, 2, 3, 2}}, {{1, 3}, {3, 1}}};
    return p;
  }

  word_type const& ComplementTable::at(letter_type s, letter_type t) const {
    static word_type const empty;
    if (s == t) {
      return empty;
    }
    auto it = _entries.find({s, t});
    if (it == _entries.end()) {
      throw std::out_of_range("ComplementTable: no entry for " + std::to_string(s) + "\\"
                              + std::to_string(t));
    }
    return it->second;
  }

  void ComplementTable::set(letter_type s, letter_type t, word_type w) {
    _entries[{s, t}] = std::move(w);
  }

  bool ComplementTable::contains(letter_type s, letter_type t) const {
    return s == t || _entries.count({s, t}) != 0;
  }

  ComplementTable complement_table(Presentation const& p) {
    p.validate();
    ComplementTable table(p.generators);
    for (auto const& [lhs, rhs] : p.relations) {
      if (lhs.empty() || rhs.empty() || lhs.front() == rhs.front()) {
        throw std::invalid_argument("complement_table: relation " + format_word(lhs) + " = "
                                    + format_word(rhs)
                                    + " does not start with two distinct letters");
      }
      letter_type s = lhs.front(), t = rhs.front();
      if (table.contains(s, t)) {
        throw std::invalid_argument("complement_table: two relations for the pair "
                                    + std::to_string(s) + ", " + std::to_string(t));
      }
      table.set(s, t, word_type(lhs.begin() + 1, lhs.end()));
      table.set(t, s, word_type(rhs.begin() + 1, rhs.end()));
    }
    for (std::size_t s = 1; s <= p.generators; ++s) {
      for (std::size_t t = 1; t <= p.generators; ++t) {
        if (!table.contains(static_cast<letter_type>(s), static_cast<letter_type>(t))) {
          throw std::invalid_argument("complement_table: no relation for the pair "
                                      + std::to_string(s) + ", " + std::to_string(t));
        }
      }
    }
    return table;
  }

  ReversalOutcome reverse(word_type const&       u,
                          word_type const&       v,
                          ComplementTable const& table,
                          std::size_t            budget) {
    if (budget == 0) {
      throw std::invalid_argument("reverse: budget must be positive");
    }
    // Negative entries are inverse letters.
    std::vector<int> w;
    for (auto it = u.rbegin(); it != u.rend(); ++it) {
      w.push_back(-static_cast<int>(*it));
    }
    w.insert(w.end(), v.begin(), v.end());

    ReversalOutcome out;
    while (true) {
      std::size_t i = 0;
      while (i + 1 < w.size() && !(w[i] < 0 && w[i + 1] > 0)) {
        ++i;
      }
      if (i + 1 >= w.size()) {
        break;
      }
      if (out.steps == budget) {
        out.status = reversal_status::budget_exceeded;
        return out;
      }
      ++out.steps;
      auto             s = static_cast<letter_type>(-w[i]);
      auto             t = static_cast<letter_type>(w[i + 1]);
      std::vector<int> replacement;
      if (s != t) {
        for (letter_type x : table.at(s, t)) {
          replacement.push_back(x);
        }
        word_type const& back = table.at(t, s);
        for (auto it = back.rbegin(); it != back.rend(); ++it) {
          replacement.push_back(-static_cast<int>(*it));
        }
      }
      w.erase(w.begin() + static_cast<std::ptrdiff_t>(i),
              w.begin() + static_cast<std::ptrdiff_t>(i + 2));
      w.insert(w.begin() + static_cast<std::ptrdiff_t>(i), replacement.begin(), replacement.end());
    }
    for (int x : w) {
      if (x > 0) {
        out.word.push_back(static_cast<letter_type>(x));
      }
    }
    return out;
  }

  CubeCheck cube_condition_check(Presentation const& p,
                                 letter_type         x,
                                 letter_type         y,
                                 letter_type         z,
                                 std::size_t         budget,
                                 std::size_t         max_len,
                                 std::size_t         max_states) {
    ComplementTable table = complement_table(p);
    auto            run   = [&](word_type const& u, word_type const& v) {
      auto r = reverse(u, v, table, budget);
      if (r.status != reversal_status::complete) {
        throw std::runtime_error("cube_condition_check: reversing exceeded the budget of "
                                 + std::to_string(budget) + " steps");
      }
      return r.word;
    };
    CubeCheck out;
    out.w1      = run(table.at(x, y), table.at(x, z));
    out.w2      = run(table.at(y, x), table.at(y, z));
    out.verdict = bfs_equal(p, out.w1, out.w2,
                            std::max({max_len, out.w1.size(), out.w2.size()}), max_states);
    return out;
  }

  Census upper_bound_census(Presentation const&           p,
                            std::vector<word_type> const& targets,
                            std::size_t                   max_len) {
    Census census;
    for (auto const& t : targets) {
      census.classes.push_back(bfs_closure(p, t, max_len));
    }
    for (std::size_t i = 0; i < census.classes.size(); ++i) {
      std::unordered_set<word_type, WordHash> mine(census.classes[i].words.begin(),
                                                   census.classes[i].words.end());
      for (std::size_t j = i + 1; j < census.classes.size(); ++j) {
        for (auto const& w : census.classes[j].words) {
          if (mine.count(w) != 0) {
            census.disjoint = false;
          }
        }
      }
    }
    return census;
  }

  namespace {
    std::string letters(word_type const& w) {
      std::string out;
      for (letter_type x : w) {
        out += x >= 1 && x <= 26 ? static_cast<char>('a' + x - 1) : '?';
      }
      return out;
    }

    // "c b a" rather than "cba".
    std::string spaced_letters(word_type const& w) {
      std::string out;
      for (char x : letters(w)) {
        out += out.empty() ? std::string(1, x) : std::string(" ") + x;
      }
      return out;
    }
  }  // namespace

  bool is_p_shape(word_type const& w) {
    static std::regex const shape("c*bcb");
    return std::regex_match(letters(w), shape);
  }

  bool is_q_shape(word_type const& w) {
    static std::regex const shape("c*bc*ac*bcba|c*ac*bacba|c*ac*bcbab|c*ac*bcaba");
    return std::regex_match(letters(w), shape);
  }

  Report verify_cube(std::size_t max_len, std::size_t budget) {
    Report report;
    report.command = "cube";
    report.param("max_len", std::to_string(max_len));
    report.param("budget", std::to_string(budget));

    Presentation const    p     = cube_presentation();
    ComplementTable const table = complement_table(p);
    letter_type const     a = 1, b = 2, c = 3;

    auto r1 = reverse(table.at(a, b), table.at(a, c), table, budget);
    auto r2 = reverse(table.at(b, a), table.at(b, c), table, budget);
    report.expect(r1.word == word_type{c, b, a}, "(a\\b)\\(a\\c) = c b a",
                  {{"actual", format_word(r1.word)}});
    report.expect(r2.word == word_type{c, b, a, b}, "(b\\a)\\(b\\c) = c b a b",
                  {{"actual", format_word(r2.word)}});

    auto abc = cube_condition_check(p, a, b, c, budget);
    report.fact("w1", format_word(abc.w1));
    report.fact("w2", format_word(abc.w2));
    report.fact("w1_letters", spaced_letters(abc.w1));
    report.fact("w2_letters", spaced_letters(abc.w2));
    report.fact("verdict", to_string(abc.verdict.status));
    report.expect(abc.verdict.status != verdict::equal, "c b a and c b a b not equal within bounds",
                  {{"verdict", to_string(abc.verdict.status)}});

    auto acb = cube_condition_check(p, a, c, b, budget);
    report.fact("acb_w1", format_word(acb.w1));
    report.fact("acb_w2", format_word(acb.w2));
    report.fact("acb_verdict", to_string(acb.verdict.status));

    word_type const p_word{b, c, b};
    word_type const q_word{c, a, b, c, b, a, b};
    Census          census = upper_bound_census(p, {p_word, q_word}, max_len);
    auto const&     p_class = census.classes[0].words;
    auto const&     q_class = census.classes[1].words;
    report.fact("p_class_size", std::to_string(p_class.size()));
    report.fact("q_class_size", std::to_string(q_class.size()));
    report.expect(census.disjoint, "classes of b c b and c a b c b a b are disjoint");
    for (auto const& w : p_class) {
      report.expect(is_p_shape(w), "every word for [b c b] is c^k b c b", {{"word", format_word(w)}});
    }
    bool has_babcba = false;
    for (auto const& w : q_class) {
      report.expect(is_q_shape(w), "every word for [c a b c b a b] has one of the four shapes",
                    {{"word", format_word(w)}});
      report.expect(!(w.size() >= 3 && w[0] == b && w[1] == c && w[2] == b),
                    "no word for [c a b c b a b] starts with b c b", {{"word", format_word(w)}});
      has_babcba = has_babcba || w == word_type{b, a, b, c, b, a};
    }
    report.expect(has_babcba, "c a b c b a b ~ b a b c b a");
    // Within the bound every c^k b c b should have been reached.
    report.expect(p_class.size() == max_len - 2, "[b c b] contains c^k b c b for every k in bound",
                  {{"size", std::to_string(p_class.size())}});
    return report;
  }

}  // namespace aimon
