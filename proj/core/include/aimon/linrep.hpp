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

// The linear representation of a CI monoid. The ring R is generated by
// x_ab for distinct generators a, b subject to [x_ba, x_ab; m(a,b) - 1] = 0;
// since these relations are monomials, a monomial is zero in R iff it has
// one of them as a factor and the surviving monomials form a basis. The
// free left R-module V on e_1, ..., e_n carries the right action
//
//   e_a a = 0,    e_b a = e_b + x_ba e_a    (a != b).

#ifndef AIMON_LINREP_HPP_
#define AIMON_LINREP_HPP_

#include <cstddef>  // for size_t
#include <cstdint>  // for int64_t, uint16_t
#include <map>      // for map
#include <string>   // for string
#include <vector>   // for vector

#include "ci_matrix.hpp"  // for CIMatrix
#include "report.hpp"     // for Report
#include "words.hpp"      // for word_type

namespace aimon {

  //! The ring generator x_ab.
  struct RingGenerator {
    letter_type a = 0;
    letter_type b = 0;

    auto operator<=>(RingGenerator const&) const = default;
  };

  using Monomial      = std::vector<RingGenerator>;
  using coefficient   = std::int64_t;
  using RingElement   = std::map<Monomial, coefficient>;
  using ModuleVector  = std::map<std::size_t, RingElement>;

  std::string format_monomial(Monomial const& m);
  std::string format_ring(RingElement const& r);
  std::string format_vector(ModuleVector const& v);

  //! [x_ab, x_ba; k] as a monomial.
  Monomial alternating_monomial(letter_type a, letter_type b, std::size_t k);

  enum class ideal_reading {
    //! [x_ba, x_ab; m(a,b) - 1] = 0, under which the action is well defined.
    swapped,
    //! [x_ab, x_ba; m(a,b) - 1] = 0. For asymmetric labels the relations of
    //! the monoid then act differently; kept as a negative control.
    literal
  };

  //! For each ordered pair (a, b) with m(a, b) finite, the alternating
  //! monomial of length m(a, b) - 1 starting with x_ba (or with x_ab for the
  //! literal reading). Throws std::invalid_argument if the matrix is not a
  //! CI matrix.
  std::vector<Monomial> forbidden_factors(CIMatrix const& matrix,
                                          ideal_reading   reading = ideal_reading::swapped);

  //! Arithmetic in R and in V for a fixed CI matrix.
  class LinearRep {
   public:
    explicit LinearRep(CIMatrix const& matrix, ideal_reading reading = ideal_reading::swapped);

    //! The same action over the ring with no relations between the x_ab.
    static LinearRep without_relations(std::size_t rank);

    std::vector<Monomial> const& forbidden() const noexcept {
      return _forbidden;
    }

    //! Whether m has a forbidden factor (full scan).
    bool is_zero_monomial(Monomial const& m) const;

    //! The element represented by a single monomial: the monomial itself or 0.
    RingElement monomial(Monomial const& m, coefficient c = 1) const;

    RingElement generator(letter_type a, letter_type b) const;

    //! Products of two normal monomials only need to be checked for
    //! forbidden factors that straddle the junction.
    RingElement mul(RingElement const& p, RingElement const& q) const;

    static RingElement add(RingElement const& p, RingElement const& q);
    static RingElement scale(RingElement const& p, coefficient c);

    //! The basis vector e_s.
    static ModuleVector basis(std::size_t s);
    static ModuleVector add(ModuleVector const& v, ModuleVector const& w);
    static ModuleVector sub(ModuleVector const& v, ModuleVector const& w);

    //! r v with the coefficient multiplied on the left.
    ModuleVector left_mul(RingElement const& r, ModuleVector const& v) const;

    //! v a. Throws std::invalid_argument if a is not a generator.
    ModuleVector act_letter(ModuleVector const& v, letter_type a) const;

    //! v w, letters applied left to right.
    ModuleVector act_word(ModuleVector const& v, word_type const& w) const;

   private:
    LinearRep() = default;

    std::size_t           _rank = 0;
    std::vector<Monomial> _forbidden;
    std::size_t           _longest = 0;
  };

  inline RingElement ring_add(RingElement const& p, RingElement const& q) {
    return LinearRep::add(p, q);
  }

  inline RingElement ring_mul(RingElement const& p, RingElement const& q, CIMatrix const& matrix) {
    return LinearRep(matrix).mul(p, q);
  }

  inline ModuleVector act_letter(ModuleVector const& v, letter_type a, CIMatrix const& matrix) {
    return LinearRep(matrix).act_letter(v, a);
  }

  inline ModuleVector act_word(ModuleVector const& v, word_type const& w, CIMatrix const& matrix) {
    return LinearRep(matrix).act_word(v, w);
  }

  //! Every defining relation of the CI monoid: a a = a, the braid-like
  //! relation and both absorption relations for each pair with finite
  //! labels.
  std::vector<std::pair<word_type, word_type>> defining_relations(CIMatrix const& matrix);

  //! Checks that both sides of every defining relation act identically on
  //! every basis vector, and the three operator identities
  //!   e_b [T_a,T_b;n] = [x_ba,x_ab;n-1] e_{a(n)} + [x_ba,x_ab;n] e_{b(n)},
  //!   [T_a,T_b;p+1] - [T_b,T_a;p+1] = ([T_a,T_b;p] - [T_b,T_a;p])(T_a + T_b - 1),
  //!   e_c([T_a,T_b;n] - [T_b,T_a;n])
  //!     = x_ca [x_ab,x_ba;n-1] e_{b(n)} - x_cb [x_ba,x_ab;n-1] e_{a(n)}
  //! for 1 <= n, p <= depth, both in R and in the ring without relations.
  //! Here (a(n), b(n)) is (a, b) for even n and (b, a) for odd n. Throws
  //! std::invalid_argument if the matrix is not a CI matrix.
  Report verify_representation(CIMatrix const& matrix,
                               std::size_t     depth   = 6,
                               ideal_reading   reading = ideal_reading::swapped);

}  // namespace aimon

#endif  // AIMON_LINREP_HPP_
