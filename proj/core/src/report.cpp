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

#include "aimon/report.hpp"

namespace aimon {

  bool Report::expect(bool passed, std::string const& check, field_list detail) {
    ++checks_run;
    if (!passed) {
      failures.push_back(Failure{check, std::move(detail)});
    }
    return passed;
  }

  void Report::fact(std::string key, std::string value) {
    facts.emplace_back(std::move(key), std::move(value));
  }

  void Report::param(std::string key, std::string value) {
    params.emplace_back(std::move(key), std::move(value));
  }

  void Report::absorb(Report const& other, std::string const& prefix) {
    checks_run += other.checks_run;
    for (auto const& f : other.failures) {
      failures.push_back(Failure{prefix + f.check, f.detail});
    }
    for (auto const& [k, v] : other.facts) {
      facts.emplace_back(prefix + k, v);
    }
  }

  std::string Report::fact_value(std::string const& key) const {
    for (auto const& [k, v] : facts) {
      if (k == key) {
        return v;
      }
    }
    return {};
  }

}  // namespace aimon
