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

#ifndef AIMON_REPORT_HPP_
#define AIMON_REPORT_HPP_

#include <cstddef>           // for size_t
#include <initializer_list>  // for initializer_list
#include <string>            // for string
#include <utility>           // for pair
#include <vector>            // for vector

namespace aimon {

  using field_list = std::vector<std::pair<std::string, std::string>>;

  //! One failed check, with the inputs and expected/actual values that
  //! exhibit it.
  struct Failure {
    std::string check;
    field_list  detail;
  };

  //! Outcome of a verification harness. Every harness in the library
  //! returns one of these; the command-line tool prints it and exits 0 iff
  //! failures is empty.
  struct Report {
    std::string          command;
    field_list           params;
    std::size_t          checks_run = 0;
    std::vector<Failure> failures;
    //! Named results worth printing even on success (counts, computed words).
    field_list facts;

    bool ok() const noexcept {
      return failures.empty();
    }

    //! Counts one check and records a failure if \p passed is false.
    bool expect(bool passed, std::string const& check, field_list detail = {});

    void fact(std::string key, std::string value);
    void param(std::string key, std::string value);

    //! Appends the checks and failures of \p other; failure names are
    //! prefixed with \p prefix.
    void absorb(Report const& other, std::string const& prefix = {});

    //! Value of a fact, or an empty string.
    std::string fact_value(std::string const& key) const;
  };

}  // namespace aimon

#endif  // AIMON_REPORT_HPP_
