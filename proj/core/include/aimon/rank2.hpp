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

// Finite monoids given by a multiplication table, the left-division order
// x <= y iff y in xM, and the rank-2 CI monoids
//
//   < a, b | aa = a, bb = b, [a,b;k] = [a,b;k+1] = [b,a;l] = [b,a;l+1] >
//
// with k, l >= 2 and |k - l| <= 1, whose left-division order is a lattice.

#ifndef AIMON_RANK2_HPP_
#define AIMON_RANK2_HPP_

#include <cstddef>  // for size_t
#include <string>   // for string
#include <vector>   // for vector

#include "report.hpp"  // for Report
#include "words.hpp"   // for word_type

namespace aimon {

  struct FiniteMonoid {
    //! Canonical word of each element.
    std::vector<word_type> elements;
    //! table[x][y] is the index of the product of elements x and y.
    std::vector<std::vector<std::size_t>> table;
    std::size_t                           identity = 0;
    //! Indices of the generating elements; generators[i] is letter i + 1.
    std::vector<std::size_t> generators;

    std::size_t size() const noexcept {
      return elements.size();
    }

    std::size_t product(std::size_t x, std::size_t y) const {
      return table[x][y];
    }

    //! Index of the element represented by a word over the generators.
    std::size_t evaluate(word_type const& w) const;
  };

  //! The one-element monoid with no generators.
  FiniteMonoid trivial_monoid();

  //! Exhaustive associativity and identity check of the table.
  bool is_associative(FiniteMonoid const& M);
  bool has_identity(FiniteMonoid const& M);

  //! The rank-2 CI monoid with m(a, b) = k and m(b, a) = l, where a and b
  //! are the letters 1 and 2. Elements are listed as 1, [a,b;p] (0 < p < k),
  //! [b,a;q] (0 < q < l), and the sink [a,b;k]. Throws std::invalid_argument
  //! unless k, l >= 2 and |k - l| <= 1.
  FiniteMonoid rank2_monoid(std::size_t k, std::size_t l);

  struct DivisibilityOrder {
    std::size_t                    size = 0;
    std::vector<std::vector<bool>> leq;

    bool operator()(std::size_t x, std::size_t y) const {
      return leq[x][y];
    }
  };

  DivisibilityOrder left_division_order(FiniteMonoid const& M);

  //! Reflexive, transitive and antisymmetric.
  bool is_order(DivisibilityOrder const& o);

  //! An order in which every pair has a least upper and greatest lower bound.
  bool is_lattice(DivisibilityOrder const& o);

  struct HasseEdge {
    std::size_t from;
    std::size_t to;
    letter_type generator;
  };

  //! One edge x -> xs per generator s with xs != x.
  std::vector<HasseEdge> hasse_edges(FiniteMonoid const& M);

  //! DOT digraph of the Hasse diagram. Nodes are named by canonical words
  //! with letters joined by "." ("e" for the identity); each edge carries
  //! label="s" for the generator applied. Throws std::invalid_argument if
  //! \p o is not an order.
  std::string hasse_dot(DivisibilityOrder const& o, FiniteMonoid const& M);

  //! Elements z with x z y = z for all x, y.
  std::vector<std::size_t> sinks(FiniteMonoid const& M);

  //! Runs every rank-2 check for (k, l): cardinality k + l against a bounded
  //! congruence closure of the presentation, associativity, the sink, the
  //! lattice property, and the two-path shape of the Hasse diagram.
  Report verify_rank2(std::size_t k, std::size_t l);

}  // namespace aimon

#endif  // AIMON_RANK2_HPP_
