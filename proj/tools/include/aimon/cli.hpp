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

// The aimon command-line front end. Everything is reachable through run()
// so that tests can drive the tool without spawning a process.

#ifndef AIMON_CLI_HPP_
#define AIMON_CLI_HPP_

#include <iosfwd>  // for ostream
#include <string>  // for string
#include <vector>  // for vector

#include "aimon/report.hpp"  // for Report

namespace aimon::cli {

  //! Exit statuses of the tool.
  enum exit_code : int { success = 0, failure = 1, usage_error = 2 };

  //! Runs the tool on \p args, which excludes the program name.
  int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err);

  int run(int argc, char const* const* argv, std::ostream& out, std::ostream& err);

  //! The report as a single JSON object with fields command, params,
  //! checks_run, failures, elapsed_ms and facts.
  std::string report_json(Report const& report, double elapsed_ms);

  //! Human-readable report; at most \p max_failures failures are listed.
  void print_report(std::ostream&  out,
                    Report const&  report,
                    double         elapsed_ms,
                    std::size_t    max_failures = 20);

}  // namespace aimon::cli

#endif  // AIMON_CLI_HPP_
