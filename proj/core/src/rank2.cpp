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

#include "aimon/rank2.hpp"

#include <algorithm>      // for search, sort, find
#include <functional>     // for function
#include <map>            // for map
#include <sstream>        // for ostringstream
#include <stdexcept>      // for invalid_argument
#include <unordered_map>  // for unordered_map

#include "aimon/ci_matrix.hpp"   // for CIMatrix, ci_presentation
#include "aimon/congruence.hpp"  // for bfs_closure

namespace aimon {

  std::size_t FiniteMonoid::evaluate(word_type const& w) const {
    std::size_t x = identity;
    for (letter_type s : w) {
      if (s < 1 || s > generators.size()) {
        throw std::invalid_argument("FiniteMonoid::evaluate: letter out of range");
      }
      x = table[x][generators[s - 1]];
    }
    return x;
  }

  FiniteMonoid trivial_monoid() {
    FiniteMonoid M;
    M.elements = {word_type{}};
    M.table    = {{0}};
    M.identity = 0;
    return M;
  }

  bool has_identity(FiniteMonoid const& M) {
    for (std::size_t x = 0; x < M.size(); ++x) {
      if (M.table[M.identity][x] != x || M.table[x][M.identity] != x) {
        return false;
      }
    }
    return true;
  }

  bool is_associative(FiniteMonoid const& M) {
    std::size_t const n = M.size();
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        std::size_t xy = M.table[x][y];
        for (std::size_t z = 0; z < n; ++z) {
          if (M.table[xy][z] != M.table[x][M.table[y][z]]) {
            return false;
          }
        }
      }
    }
    return true;
  }

  namespace {
    bool contains_factor(word_type const& w, word_type const& f) {
      return std::search(w.begin(), w.end(), f.begin(), f.end()) != w.end();
    }
  }  // namespace

  FiniteMonoid rank2_monoid(std::size_t k, std::size_t l) {
    if (k < 2 || l < 2 || (k > l ? k - l : l - k) > 1) {
      throw std::invalid_argument("rank2_monoid: need k, l >= 2 and |k - l| <= 1, found k = "
                                  + std::to_string(k) + ", l = " + std::to_string(l));
    }
    letter_type const a = 1, b = 2;
    word_type const   sink_ab = alternating(a, b, k);
    word_type const   sink_ba = alternating(b, a, l);

    // Idempotents collapse repeated letters; any word containing either
    // side of the braid relation equals the sink.
    auto canonical = [&](word_type const& w) {
      word_type out;
      for (letter_type s : w) {
        if (out.empty() || out.back() != s) {
          out.push_back(s);
        }
      }
      if (contains_factor(out, sink_ab) || contains_factor(out, sink_ba)) {
        return sink_ab;
      }
      return out;
    };

    FiniteMonoid M;
    M.elements.push_back({});
    for (std::size_t p = 1; p < k; ++p) {
      M.elements.push_back(alternating(a, b, p));
    }
    for (std::size_t q = 1; q < l; ++q) {
      M.elements.push_back(alternating(b, a, q));
    }
    M.elements.push_back(sink_ab);

    std::unordered_map<word_type, std::size_t, WordHash> index;
    for (std::size_t i = 0; i < M.elements.size(); ++i) {
      index.emplace(M.elements[i], i);
    }
    M.identity   = 0;
    M.generators = {index.at({a}), index.at({b})};
    M.table.assign(M.elements.size(), std::vector<std::size_t>(M.elements.size()));
    for (std::size_t x = 0; x < M.size(); ++x) {
      for (std::size_t y = 0; y < M.size(); ++y) {
        auto it = index.find(canonical(concat(M.elements[x], M.elements[y])));
        if (it == index.end()) {
          throw std::logic_error("rank2_monoid: product escaped the element list");
        }
        M.table[x][y] = it->second;
      }
    }
    return M;
  }

  DivisibilityOrder left_division_order(FiniteMonoid const& M) {
    DivisibilityOrder o;
    o.size = M.size();
    o.leq.assign(o.size, std::vector<bool>(o.size, false));
    for (std::size_t x = 0; x < o.size; ++x) {
      for (std::size_t z = 0; z < o.size; ++z) {
        o.leq[x][M.table[x][z]] = true;
      }
    }
    return o;
  }

  bool is_order(DivisibilityOrder const& o) {
    for (std::size_t x = 0; x < o.size; ++x) {
      if (!o(x, x)) {
        return false;
      }
      for (std::size_t y = 0; y < o.size; ++y) {
        if (x != y && o(x, y) && o(y, x)) {
          return false;
        }
        for (std::size_t z = 0; z < o.size; ++z) {
          if (o(x, y) && o(y, z) && !o(x, z)) {
            return false;
          }
        }
      }
    }
    return true;
  }

  namespace {
    // Whether the candidates contain an element below (or above, for
    // meets) every other candidate.
    bool has_extreme(DivisibilityOrder const&        o,
                     std::vector<std::size_t> const& candidates,
                     bool                            least) {
      for (std::size_t c : candidates) {
        bool extreme = true;
        for (std::size_t d : candidates) {
          if (least ? !o(c, d) : !o(d, c)) {
            extreme = false;
            break;
          }
        }
        if (extreme) {
          return true;
        }
      }
      return false;
    }
  }  // namespace

  bool is_lattice(DivisibilityOrder const& o) {
    if (!is_order(o)) {
      return false;
    }
    for (std::size_t x = 0; x < o.size; ++x) {
      for (std::size_t y = x + 1; y < o.size; ++y) {
        std::vector<std::size_t> upper, lower;
        for (std::size_t z = 0; z < o.size; ++z) {
          if (o(x, z) && o(y, z)) {
            upper.push_back(z);
          }
          if (o(z, x) && o(z, y)) {
            lower.push_back(z);
          }
        }
        if (!has_extreme(o, upper, true) || !has_extreme(o, lower, false)) {
          return false;
        }
      }
    }
    return true;
  }

  std::vector<HasseEdge> hasse_edges(FiniteMonoid const& M) {
    std::vector<HasseEdge> edges;
    for (std::size_t x = 0; x < M.size(); ++x) {
      for (std::size_t i = 0; i < M.generators.size(); ++i) {
        std::size_t y = M.table[x][M.generators[i]];
        if (y != x) {
          edges.push_back({x, y, static_cast<letter_type>(i + 1)});
        }
      }
    }
    return edges;
  }

  std::string hasse_dot(DivisibilityOrder const& o, FiniteMonoid const& M) {
    if (o.size != M.size()) {
      throw std::invalid_argument("hasse_dot: order and monoid sizes differ");
    }
    if (!is_order(o)) {
      throw std::invalid_argument("hasse_dot: left division is not an order");
    }
    auto name = [&](std::size_t x) {
      return "\"" + join_word(M.elements[x], ".", "e") + "\"";
    };
    std::ostringstream out;
    out << "digraph hasse {\n";
    for (std::size_t x = 0; x < M.size(); ++x) {
      out << "  " << name(x) << ";\n";
    }
    for (auto const& e : hasse_edges(M)) {
      out << "  " << name(e.from) << " -> " << name(e.to) << " [label=\""
          << static_cast<unsigned>(e.generator) << "\"];\n";
    }
    out << "}\n";
    return out.str();
  }

  std::vector<std::size_t> sinks(FiniteMonoid const& M) {
    std::vector<std::size_t> result;
    for (std::size_t z = 0; z < M.size(); ++z) {
      bool sink = true;
      for (std::size_t x = 0; x < M.size() && sink; ++x) {
        for (std::size_t y = 0; y < M.size() && sink; ++y) {
          sink = M.table[M.table[x][z]][y] == z;
        }
      }
      if (sink) {
        result.push_back(z);
      }
    }
    return result;
  }

  namespace {
    // Lengths of all directed paths from `from` to `to` in the Hasse diagram.
    std::vector<std::size_t> path_lengths(FiniteMonoid const& M,
                                          std::size_t         from,
                                          std::size_t         to) {
      std::vector<std::vector<std::size_t>> out(M.size());
      for (auto const& e : hasse_edges(M)) {
        out[e.from].push_back(e.to);
      }
      std::vector<std::size_t>                      lengths;
      std::function<void(std::size_t, std::size_t)> walk
          = [&](std::size_t x, std::size_t depth) {
              if (x == to) {
                lengths.push_back(depth);
                return;
              }
              if (depth > M.size()) {
                return;  // a cycle; the caller reports the order failure
              }
              for (std::size_t y : out[x]) {
                walk(y, depth + 1);
              }
            };
      walk(from, 0);
      std::sort(lengths.begin(), lengths.end());
      return lengths;
    }
  }  // namespace

  Report verify_rank2(std::size_t k, std::size_t l) {
    Report report;
    report.command = "rank2";
    report.param("k", std::to_string(k));
    report.param("l", std::to_string(l));

    FiniteMonoid M = rank2_monoid(k, l);
    report.fact("size", std::to_string(M.size()));
    report.expect(M.size() == k + l, "cardinality is k + l",
                  {{"size", std::to_string(M.size())}});
    report.expect(has_identity(M), "identity acts trivially");
    report.expect(is_associative(M), "multiplication table is associative");

    // Independent count: partition all short words by bounded closure of
    // the presentation and compare with table evaluation.
    Presentation p       = ci_presentation(CIMatrix::rank2(static_cast<label_type>(k),
                                                           static_cast<label_type>(l)));
    std::size_t  longest = std::max(k, l) + 1;
    auto         words   = all_words(2, longest);
    std::unordered_map<word_type, std::size_t, WordHash> klass;
    std::size_t                                          classes = 0;
    for (auto const& w : words) {
      if (klass.count(w) != 0) {
        continue;
      }
      auto closure = bfs_closure(p, w, longest + 1);
      report.expect(!closure.truncated, "closure finished within the state cap",
                    {{"word", format_word(w)}});
      for (auto const& v : closure.words) {
        klass.emplace(v, classes);
      }
      ++classes;
    }
    report.fact("closure_classes", std::to_string(classes));
    report.expect(classes == k + l, "closure class count is k + l",
                  {{"classes", std::to_string(classes)}});
    std::map<std::size_t, std::size_t> class_of_element;
    bool                               consistent = true;
    for (auto const& w : words) {
      auto [it, inserted] = class_of_element.emplace(M.evaluate(w), klass.at(w));
      if (!inserted && it->second != klass.at(w)) {
        consistent = false;
      }
    }
    report.expect(consistent && class_of_element.size() == classes,
                  "table agrees with closure classes");

    auto sink_list = sinks(M);
    report.expect(sink_list.size() == 1 && sink_list.front() == M.size() - 1,
                  "the longest element is the unique sink");

    auto order = left_division_order(M);
    bool lattice = is_lattice(order);
    report.fact("lattice", lattice ? "true" : "false");
    report.expect(lattice, "left division is a lattice order");

    auto edges   = hasse_edges(M);
    auto lengths = path_lengths(M, M.identity, M.size() - 1);
    report.fact("hasse_edges", std::to_string(edges.size()));
    std::string shown;
    for (auto len : lengths) {
      shown += (shown.empty() ? "" : ",") + std::to_string(len);
    }
    report.fact("hasse_paths", shown);
    report.expect(edges.size() == k + l, "Hasse diagram has k + l edges",
                  {{"edges", std::to_string(edges.size())}});
    std::vector<std::size_t> expected{std::min(k, l), std::max(k, l)};
    report.expect(lengths == expected,
                  "Hasse diagram is two paths of lengths k and l",
                  {{"paths", shown}});
    return report;
  }

}  // namespace aimon
