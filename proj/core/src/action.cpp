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

#include "aimon/action.hpp"

#include <algorithm>  // for min, max
#include <stdexcept>  // for invalid_argument

#include "aimon/ci_matrix.hpp"   // for CIMatrix, ci_presentation
#include "aimon/congruence.hpp"  // for random_relation_walk
#include "aimon/rewrite_m.hpp"   // for m_equal

namespace aimon {

  TupleAction::TupleAction(std::size_t                                      carrier,
                           std::vector<std::pair<std::size_t, std::size_t>> images)
      : _carrier(carrier), _images(std::move(images)) {
    if (carrier == 0) {
      throw std::invalid_argument("TupleAction: carrier must be nonempty");
    }
    if (_images.size() != carrier * carrier) {
      throw std::invalid_argument("TupleAction: expected carrier^2 images");
    }
    for (auto const& [x, y] : _images) {
      if (x >= carrier || y >= carrier) {
        throw std::invalid_argument("TupleAction: image outside the carrier");
      }
    }
  }

  namespace {
    tuple_type act_unchecked(TupleAction const& act, word_type const& w, tuple_type t) {
      for (letter_type a : w) {
        auto [x, y] = act.apply(t[a - 1], t[a]);
        t[a - 1]    = x;
        t[a]        = y;
      }
      return t;
    }

    std::string show(tuple_type const& t) {
      std::string out = "(";
      for (std::size_t i = 0; i < t.size(); ++i) {
        out += (i ? "," : "") + std::to_string(t[i]);
      }
      return out + ")";
    }
  }  // namespace

  std::vector<tuple_type> all_tuples(std::size_t carrier, std::size_t length) {
    std::vector<tuple_type> result;
    tuple_type              t(length, 0);
    while (true) {
      result.push_back(t);
      std::size_t i = 0;
      while (i < length && ++t[i] == carrier) {
        t[i] = 0;
        ++i;
      }
      if (i == length) {
        break;
      }
    }
    return result;
  }

  std::optional<std::string> TupleAction::violation() const {
    for (auto const& t : all_tuples(_carrier, 2)) {
      auto once  = act_unchecked(*this, {1}, t);
      auto twice = act_unchecked(*this, {1, 1}, t);
      if (once != twice) {
        return "f is not idempotent at " + show(t);
      }
    }
    for (auto const& t : all_tuples(_carrier, 3)) {
      auto p = act_unchecked(*this, {1, 2, 1}, t);
      auto q = act_unchecked(*this, {2, 1, 2, 1}, t);
      auto r = act_unchecked(*this, {1, 2, 1, 2}, t);
      if (p != q) {
        return "f1 f2 f1 != f2 f1 f2 f1 at " + show(t);
      }
      if (p != r) {
        return "f1 f2 f1 != f1 f2 f1 f2 at " + show(t);
      }
    }
    return std::nullopt;
  }

  tuple_type tuple_action(TupleAction const& act, word_type const& w, tuple_type t) {
    if (auto why = act.violation()) {
      throw std::invalid_argument("tuple_action: " + *why);
    }
    if (t.empty() || max_letter(w) > t.size() - 1) {
      throw std::invalid_argument("tuple_action: letter exceeds tuple length - 1");
    }
    for (std::size_t x : t) {
      if (x >= act.carrier()) {
        throw std::invalid_argument("tuple_action: tuple entry outside the carrier");
      }
    }
    return act_unchecked(act, w, std::move(t));
  }

  std::vector<TupleAction> enumerate_valid_actions(std::size_t carrier) {
    if (carrier > 2) {
      throw std::invalid_argument("enumerate_valid_actions: carrier too large");
    }
    std::size_t const        cells = carrier * carrier;
    std::vector<TupleAction> result;
    std::vector<std::size_t> code(cells, 0);
    while (true) {
      std::vector<std::pair<std::size_t, std::size_t>> images;
      for (std::size_t c : code) {
        images.emplace_back(c / carrier, c % carrier);
      }
      TupleAction act(carrier, std::move(images));
      if (act.valid()) {
        result.push_back(std::move(act));
      }
      std::size_t i = 0;
      while (i < cells && ++code[i] == cells) {
        code[i] = 0;
        ++i;
      }
      if (i == cells) {
        break;
      }
    }
    return result;
  }

  Report verify_actions(std::size_t max_rank_, std::size_t samples, std::uint64_t seed) {
    Report report;
    report.command = "action";
    report.param("max_rank", std::to_string(max_rank_));
    report.param("samples", std::to_string(samples));
    report.param("seed", std::to_string(seed));

    std::vector<TupleAction> actions = enumerate_valid_actions(2);
    actions.push_back(TupleAction::from_function(3, [](std::size_t x, std::size_t y) {
      return std::pair{std::min(x, y), std::max(x, y)};
    }));
    actions.push_back(TupleAction::from_function(3, [](std::size_t x, std::size_t) {
      return std::pair{x, x};
    }));
    for (auto const& act : actions) {
      report.expect(act.valid(), "action satisfies its identities");
    }
    report.fact("actions", std::to_string(actions.size()));

    rng_type                                   rng(seed);
    std::uniform_int_distribution<std::size_t> rank_pick(1, std::max<std::size_t>(1, max_rank_));
    std::uniform_int_distribution<std::size_t> length(0, 6);
    std::uniform_int_distribution<std::size_t> steps(1, 4);
    for (std::size_t i = 0; i < samples; ++i) {
      std::size_t  n = rank_pick(rng);
      Presentation p = ci_presentation(CIMatrix::chain(n));
      word_type    u = random_word(rng, n, length(rng));
      word_type    v = random_relation_walk(p, u, steps(rng), rng, 10);
      if (!report.expect(m_equal(u, v), "sampled pair is M-equal",
                         {{"u", format_word(u)}, {"v", format_word(v)}})) {
        continue;
      }
      for (std::size_t j = 0; j < actions.size(); ++j) {
        for (auto const& t : all_tuples(actions[j].carrier(), n + 1)) {
          auto left  = tuple_action(actions[j], u, t);
          auto right = tuple_action(actions[j], v, t);
          report.expect(left == right, "M-equal words act identically",
                        {{"u", format_word(u)},
                         {"v", format_word(v)},
                         {"action", std::to_string(j)},
                         {"tuple", show(t)}});
        }
      }
    }
    return report;
  }

}  // namespace aimon
