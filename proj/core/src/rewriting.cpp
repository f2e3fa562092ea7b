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

#include "aimon/rewriting.hpp"

#include <algorithm>  // for equal, swap
#include <stdexcept>  // for logic_error

namespace aimon {

  char const* to_string(rule_kind k) noexcept {
    switch (k) {
      case rule_kind::commutation:
        return "Commutation";
      case rule_kind::family:
        return "Family";
      case rule_kind::square_run:
        return "SquareRun";
      case rule_kind::staircase:
        return "Staircase";
    }
    return "?";
  }

  bool match_before(Match const& x, Match const& y) noexcept {
    if (x.start != y.start) {
      return x.start < y.start;
    }
    if (x.length() != y.length()) {
      return x.length() < y.length();
    }
    return x.kind < y.kind;
  }

  Match shifted(Match m, std::size_t offset) {
    m.start += offset;
    m.end += offset;
    m.cut_begin += offset;
    m.cut_end += offset;
    return m;
  }

  namespace {
    void apply_in_place(word_type& w, Match const& m) {
      if (m.kind == rule_kind::commutation) {
        std::swap(w[m.start], w[m.start + 1]);
      } else {
        w.erase(w.begin() + m.cut_begin, w.begin() + m.cut_end);
      }
    }

    std::optional<Match> first_in_range(word_type const&    w,
                                        matcher_type const& at,
                                        std::size_t         from,
                                        std::size_t         to,
                                        std::vector<Match>& buffer) {
      for (std::size_t p = from; p < to; ++p) {
        buffer.clear();
        at(w, p, buffer);
        if (!buffer.empty()) {
          return buffer.front();
        }
      }
      return std::nullopt;
    }
  }  // namespace

  word_type apply_match(word_type const& w, Match const& m) {
    if (m.end > w.size()) {
      throw std::logic_error("apply_match: match extends past the word");
    }
    word_type result = w;
    apply_in_place(result, m);
    return result;
  }

  std::string describe(Match const& m) {
    std::string out = std::string(to_string(m.kind)) + " [" + std::to_string(m.start) + ","
                      + std::to_string(m.end) + ")";
    if (!m.params.empty()) {
      out += " (";
      for (std::size_t i = 0; i < m.params.size(); ++i) {
        out += (i ? "," : "") + std::to_string(m.params[i]);
      }
      out += ")";
    }
    return out;
  }

  std::vector<Match> all_matches(word_type const& w, matcher_type const& at) {
    std::vector<Match> result;
    for (std::size_t p = 0; p < w.size(); ++p) {
      at(w, p, result);
    }
    return result;
  }

  std::optional<Match> first_match(word_type const& w, matcher_type const& at, std::size_t from) {
    std::vector<Match> buffer;
    return first_in_range(w, at, from, w.size(), buffer);
  }

  std::optional<Match> whole_word_match(word_type const& w, matcher_type const& at) {
    std::vector<Match> here;
    if (!w.empty()) {
      at(w, 0, here);
    }
    for (auto const& m : here) {
      if (m.end == w.size()) {
        return m;
      }
    }
    return std::nullopt;
  }

  Normalization normalize(word_type w, matcher_type const& at) {
    Normalization      result{std::move(w), 0};
    std::vector<Match> buffer;
    std::size_t        hint = 0;
    while (true) {
      auto m = first_in_range(result.word, at, hint, result.word.size(), buffer);
      if (!m && hint > 0) {
        m = first_in_range(result.word, at, 0, hint, buffer);
      }
      if (!m) {
        return result;
      }
      apply_in_place(result.word, *m);
      ++result.steps;
      hint = m->start > 0 ? m->start - 1 : 0;
    }
  }

  Normalization normalize_random(word_type w, matcher_type const& at, rng_type& rng) {
    Normalization result{std::move(w), 0};
    while (true) {
      auto matches = all_matches(result.word, at);
      if (matches.empty()) {
        return result;
      }
      std::uniform_int_distribution<std::size_t> pick(0, matches.size() - 1);
      apply_in_place(result.word, matches[pick(rng)]);
      ++result.steps;
    }
  }

  bool check_triple(CriticalTriple const& t, matcher_type const& at, Report& report) {
    word_type const qr  = concat(t.q, t.r);
    word_type const rs  = concat(t.r, t.s);
    word_type const qrs = concat(t.q, t.r, t.s);
    auto            left_match  = whole_word_match(qr, at);
    auto            right_match = whole_word_match(rs, at);
    if (!report.expect(left_match && right_match,
                       "triple " + t.family + " has standard qr and rs",
                       {{"q", format_word(t.q)}, {"r", format_word(t.r)}, {"s", format_word(t.s)}})) {
      return false;
    }
    word_type left  = normalize(apply_match(qrs, *left_match), at).word;
    word_type right = normalize(apply_match(qrs, shifted(*right_match, t.q.size())), at).word;
    return report.expect(left == right,
                         "triple " + t.family + " is joinable",
                         {{"overlap", format_word(qrs)},
                          {"q", format_word(t.q)},
                          {"r", format_word(t.r)},
                          {"s", format_word(t.s)},
                          {"left", format_word(left)},
                          {"right", format_word(right)}});
  }

  bool check_all_pairs(word_type const& w, matcher_type const& at, Report& report) {
    auto matches = all_matches(w, at);
    if (matches.size() < 2) {
      return true;
    }
    std::vector<word_type> normal;
    normal.reserve(matches.size());
    for (auto const& m : matches) {
      normal.push_back(normalize(apply_match(w, m), at).word);
    }
    bool ok = true;
    for (std::size_t i = 1; i < matches.size(); ++i) {
      ok &= report.expect(normal[i] == normal[0],
                          "every pair of one-step reducts is joinable",
                          {{"word", format_word(w)},
                           {"first", describe(matches[0])},
                           {"second", describe(matches[i])},
                           {"left", format_word(normal[0])},
                           {"right", format_word(normal[i])}});
    }
    return ok;
  }

  std::vector<word_type> left_hand_sides(std::size_t         rank,
                                         std::size_t         max_len,
                                         matcher_type const& at) {
    std::vector<word_type> out;
    for (auto const& w : all_words(rank, max_len)) {
      if (!w.empty() && whole_word_match(w, at)) {
        out.push_back(w);
      }
    }
    return out;
  }

  std::vector<CriticalTriple> overlap_triples(std::vector<word_type> const& lhs) {
    std::vector<CriticalTriple> out;
    for (auto const& x : lhs) {
      for (auto const& y : lhs) {
        for (std::size_t k = 1; k < x.size() && k < y.size(); ++k) {
          if (std::equal(x.end() - k, x.end(), y.begin())) {
            out.push_back({"overlap",
                           word_type(x.begin(), x.end() - k),
                           word_type(y.begin(), y.begin() + k),
                           word_type(y.begin() + k, y.end())});
          }
        }
      }
    }
    return out;
  }

  void audit_triples(std::vector<CriticalTriple> const& triples,
                     matcher_type const&                matcher,
                     Report&                            report) {
    std::map<std::string, std::size_t> counts;
    for (auto const& t : triples) {
      check_triple(t, matcher, report);
      ++counts[t.family];
    }
    for (auto const& [family, count] : counts) {
      report.fact("family_" + family, std::to_string(count));
    }
    report.fact("triples", std::to_string(triples.size()));
  }

}  // namespace aimon
