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

// The Garside element nabla_n = (x_2,x_1](x_3,x_1]...(x_{n+1},x_1] of A_n,
// the projection pi onto powers of x_1, and the endomorphism lambda_n with
// x nabla_n =_A nabla_n lambda_n(x).

#ifndef AIMON_GARSIDE_HPP_
#define AIMON_GARSIDE_HPP_

#include <cstddef>  // for size_t
#include <cstdint>  // for uint64_t

#include "report.hpp"  // for Report
#include "words.hpp"   // for word_type

namespace aimon {

  //! Throws std::invalid_argument if n < 1.
  word_type nabla(std::size_t n);

  //! Y_n, the word with nabla_n = x_1 Y_n.
  word_type y_word(std::size_t n);

  //! x_1^m where m is the number of x_1 in w.
  word_type pi(word_type const& w);

  //! Deletes every letter other than x_1 and replaces x_1 by the run
  //! x_n x_{n-1} ... x_1. With \p literal set, x_1 is replaced by the single
  //! letter x_n instead; that variant breaks the commutation identity and
  //! serves as a negative control.
  word_type lambda_n(word_type const& w, std::size_t n, bool literal = false);

  struct Cofactor {
    std::size_t k = 0;
    word_type   y;
  };

  //! k = ceil(m / n) + 1 and y = x_1^{(k-1)n - m} nabla_n where m counts the
  //! x_1 in x, so that x y =_A nabla_n^k. Throws if n < 1.
  Cofactor garside_cofactor(word_type const& x, std::size_t n);

  //! x nabla_n =_A nabla_n lambda_n(x) for every generator and for random
  //! x, and lambda_n(u) =_A lambda_n(v) for random u =_A v.
  Report check_lambda_identity(std::size_t   n,
                               std::size_t   samples,
                               std::uint64_t seed,
                               bool          literal = false);

  //! The generator identities
  //!   x_a nabla_n = nabla_n                         (2 <= a <= n),
  //!   x_a x_1^r nabla_n = x_1^r nabla_n             (0 <= r <= 3),
  //!   x_a x_{a-1}^l x_a x_{a-1} = x_{a-1}^l x_a x_{a-1}   (1 <= l <= 4),
  //! then, for random x of length at most 8, the cofactor property,
  //! x nabla_n = pi(x) nabla_n and the lambda_n identity.
  Report verify_garside(std::size_t n, std::size_t samples, std::uint64_t seed);

  //! Whether the literal reading of lambda_n violates x nabla_n =
  //! nabla_n lambda_n(x) for some generator x.
  bool literal_lambda_fails(std::size_t n);

  //! For random x, y, z (lengths at most max_len) checks y =_A z iff
  //! x y =_A x z. Half of the samples take z from a random relation walk
  //! so that the equal case is exercised.
  Report left_cancel_harness(std::size_t   n,
                             std::size_t   samples,
                             std::uint64_t seed,
                             std::size_t   max_len = 6);

}  // namespace aimon

#endif  // AIMON_GARSIDE_HPP_
