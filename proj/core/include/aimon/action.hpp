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

// Actions of M_n on X^{n+1} built from a map f : X^2 -> X^2. The letter x_a
// acts as f on the coordinates a and a + 1 (1-based) and as the identity
// elsewhere; words act on the right, letters applied left to right.

#ifndef AIMON_ACTION_HPP_
#define AIMON_ACTION_HPP_

#include <cstddef>   // for size_t
#include <cstdint>   // for uint64_t
#include <optional>  // for optional
#include <string>    // for string
#include <utility>   // for pair
#include <vector>    // for vector

#include "report.hpp"  // for Report
#include "words.hpp"   // for word_type

namespace aimon {

  using tuple_type = std::vector<std::size_t>;

  class TupleAction {
   public:
    //! \p images lists f(x, y) for x, y in {0, ..., carrier - 1} in the
    //! order (0,0), (0,1), ..., i.e. index x * carrier + y.
    TupleAction(std::size_t carrier, std::vector<std::pair<std::size_t, std::size_t>> images);

    //! Builds f from a callable (x, y) -> pair.
    template <typename F>
    static TupleAction from_function(std::size_t carrier, F&& f) {
      std::vector<std::pair<std::size_t, std::size_t>> images;
      for (std::size_t x = 0; x < carrier; ++x) {
        for (std::size_t y = 0; y < carrier; ++y) {
          images.push_back(f(x, y));
        }
      }
      return TupleAction(carrier, std::move(images));
    }

    std::size_t carrier() const noexcept {
      return _carrier;
    }

    std::pair<std::size_t, std::size_t> apply(std::size_t x, std::size_t y) const {
      return _images[x * _carrier + y];
    }

    //! Description of the first failing identity among f f = f and
    //! f1 f2 f1 = f2 f1 f2 f1 = f1 f2 f1 f2 on X^3, or nullopt.
    std::optional<std::string> violation() const;

    bool valid() const {
      return !violation().has_value();
    }

   private:
    std::size_t                                      _carrier;
    std::vector<std::pair<std::size_t, std::size_t>> _images;
  };

  //! Applies \p w to the tuple \p t of length n + 1 where letters are at
  //! most n. Throws std::invalid_argument if the action violates its
  //! identities, a letter exceeds t.size() - 1, or an entry is outside X.
  tuple_type tuple_action(TupleAction const& act, word_type const& w, tuple_type t);

  //! Every tuple of the given length over {0, ..., carrier - 1}.
  std::vector<tuple_type> all_tuples(std::size_t carrier, std::size_t length);

  //! All maps f : X^2 -> X^2 on a carrier of the given size that satisfy
  //! the identities. Feasible for carrier <= 2 only (carrier^(2 carrier^2)
  //! candidates).
  std::vector<TupleAction> enumerate_valid_actions(std::size_t carrier);

  //! For random pairs u = v in M_n (built from relation applications and
  //! confirmed by m_equal), checks that every valid action on carriers of
  //! size 2 and the sorting action on size 3 agree on all tuples.
  Report verify_actions(std::size_t max_rank, std::size_t samples, std::uint64_t seed);

}  // namespace aimon

#endif  // AIMON_ACTION_HPP_
