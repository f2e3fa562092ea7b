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

#include "aimon/cli.hpp"

#include <algorithm>   // for transform
#include <cctype>      // for toupper
#include <chrono>      // for steady_clock
#include <cstdint>     // for uint64_t
#include <fstream>     // for ifstream, ofstream
#include <functional>  // for function
#include <iostream>    // for ostream
#include <stdexcept>   // for invalid_argument

#include <CLI11.hpp>
#include <json.hpp>

#include "aimon/action.hpp"
#include "aimon/ci_matrix.hpp"
#include "aimon/congruence.hpp"
#include "aimon/cube.hpp"
#include "aimon/garside.hpp"
#include "aimon/linrep.hpp"
#include "aimon/rank2.hpp"
#include "aimon/rewrite_a.hpp"
#include "aimon/rewrite_m.hpp"
#include "aimon/words.hpp"

namespace aimon::cli {

  namespace {
    using clock_type = std::chrono::steady_clock;

    std::size_t checked_rank(std::size_t n) {
      if (n < 1 || n > max_rank) {
        throw std::invalid_argument("rank must lie in 1.." + std::to_string(max_rank) + ", found "
                                    + std::to_string(n));
      }
      return n;
    }

    CIMatrix load_matrix(std::string const& path) {
      std::ifstream in(path);
      if (!in) {
        throw std::invalid_argument("cannot open matrix file '" + path + "'");
      }
      CIMatrix m = parse_ci_matrix(in);
      if (auto why = ci_violation(m); !why.empty()) {
        throw std::invalid_argument("'" + path + "' is not a CI matrix: " + why);
      }
      return m;
    }

    std::string join(std::vector<std::string> const& parts) {
      std::string out;
      for (auto const& p : parts) {
        out += (out.empty() ? "" : " ") + p;
      }
      return out;
    }

    bool is_a_system(std::string system) {
      std::transform(system.begin(), system.end(), system.begin(), [](unsigned char c) {
        return static_cast<char>(std::toupper(c));
      });
      return system == "A";
    }

    // The ranks a harness runs over: just \p rank if given, else 1..4.
    std::vector<std::size_t> rank_range(std::size_t rank) {
      if (rank != 0) {
        return {checked_rank(rank)};
      }
      return {1, 2, 3, 4};
    }

    struct Job {
      std::string             name;
      field_list              params;
      std::function<Report()> body;
      bool                    json = false;
    };

    // Registers a verify subcommand; \p setup adds its options and returns
    // the harness, which is evaluated only after parsing.
    template <typename Setup>
    void add_verify(CLI::App& verify, Job& job, std::string const& name, std::string desc, Setup&& setup) {
      CLI::App* sub = verify.add_subcommand(name, std::move(desc));
      sub->add_flag("--json", job.json, "Print the report as one JSON object");
      auto body = setup(*sub);
      sub->callback([&job, name, sub, body]() {
        job.name = name;
        for (CLI::Option* opt : sub->get_options()) {
          if (opt->get_name() == "--help" || opt->get_name() == "--json") {
            continue;
          }
          std::string value;
          if (opt->get_items_expected_max() == 0) {
            value = opt->count() > 0 ? "true" : "false";
          } else {
            value = opt->count() > 0 ? opt->as<std::string>() : opt->get_default_str();
          }
          job.params.emplace_back(opt->get_name().substr(2), value);
        }
        job.body = body;
      });
    }
  }  // namespace

  std::string report_json(Report const& report, double elapsed_ms) {
    nlohmann::ordered_json j;
    j["command"] = report.command;
    j["params"]  = nlohmann::ordered_json::object();
    for (auto const& [k, v] : report.params) {
      j["params"][k] = v;
    }
    j["checks_run"] = report.checks_run;
    j["failures"]   = nlohmann::ordered_json::array();
    for (auto const& f : report.failures) {
      nlohmann::ordered_json detail = nlohmann::ordered_json::object();
      for (auto const& [k, v] : f.detail) {
        detail[k] = v;
      }
      j["failures"].push_back({{"check", f.check}, {"detail", detail}});
    }
    j["elapsed_ms"] = elapsed_ms;
    j["facts"]      = nlohmann::ordered_json::object();
    for (auto const& [k, v] : report.facts) {
      j["facts"][k] = v;
    }
    return j.dump();
  }

  void print_report(std::ostream& out, Report const& report, double elapsed_ms, std::size_t max_failures) {
    out << "command: " << report.command << '\n';
    for (auto const& [k, v] : report.params) {
      out << "  " << k << ": " << v << '\n';
    }
    for (auto const& [k, v] : report.facts) {
      out << k << ": " << v << '\n';
    }
    out << "checks_run: " << report.checks_run << '\n';
    out << "failures: " << report.failures.size() << '\n';
    for (std::size_t i = 0; i < report.failures.size() && i < max_failures; ++i) {
      auto const& f = report.failures[i];
      out << "  FAIL " << f.check;
      for (auto const& [k, v] : f.detail) {
        out << " " << k << "=[" << v << "]";
      }
      out << '\n';
    }
    if (report.failures.size() > max_failures) {
      out << "  ... " << report.failures.size() - max_failures << " more\n";
    }
    out << "elapsed_ms: " << elapsed_ms << '\n';
    out << (report.ok() ? "PASS" : "FAIL") << '\n';
  }

  int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Normal forms and verification harnesses for the monoids A_n and M_n", "aimon"};
    app.require_subcommand(1);

    // reduce and equal
    std::string              system;
    std::size_t              rank = 0;
    std::vector<std::string> word_parts;
    std::string              u_text, v_text;
    int                      status = success;

    auto add_system = [&](CLI::App* sub) {
      sub->add_option("--system", system, "A or M")
          ->required()
          ->check(CLI::IsMember({"A", "M"}, CLI::ignore_case));
      sub->add_option("--rank", rank, "Number of generators")->required();
    };

    CLI::App* reduce = app.add_subcommand("reduce", "Print the normal form of a word");
    add_system(reduce);
    reduce->add_option("word", word_parts, "Word as space-separated letters")->required();
    reduce->callback([&]() {
      word_type w = parse_word(join(word_parts), checked_rank(rank));
      out << format_word(is_a_system(system) ? a_reduce(w) : m_reduce(w)) << '\n';
    });

    CLI::App* equal = app.add_subcommand("equal", "Decide whether two words are equal");
    add_system(equal);
    equal->add_option("u", u_text, "First word")->required();
    equal->add_option("v", v_text, "Second word")->required();
    equal->callback([&]() {
      std::size_t n  = checked_rank(rank);
      word_type   u  = parse_word(u_text, n);
      word_type   v  = parse_word(v_text, n);
      bool        eq = is_a_system(system) ? a_equal(u, v) : m_equal(u, v);
      out << (eq ? "equal" : "distinct") << '\n';
      status = eq ? success : failure;
    });

    CLI::App* verify = app.add_subcommand("verify", "Run a verification harness");
    verify->require_subcommand(1);
    Job job;

    add_verify(*verify, job, "confluence-a", "Critical pairs of the A rewriting system",
               [](CLI::App& s) {
                 struct A {
                   std::size_t   n = 5, index = 0, exp = 2, samples = 500, exhaustive = 6;
                   std::uint64_t seed = 1;
                 };
                 auto o = std::make_shared<A>();
                 s.add_option("--rank", o->n, "Largest letter index")->capture_default_str();
                 s.add_option("--max-index", o->index, "Letter cap for triples (0: rank)")
                     ->capture_default_str();
                 s.add_option("--max-exp", o->exp, "Largest family exponent")
                     ->capture_default_str();
                 s.add_option("--samples", o->samples, "Random words")->capture_default_str();
                 s.add_option("--exhaustive-len", o->exhaustive, "All words up to this length")
                     ->capture_default_str();
                 s.add_option("--seed", o->seed, "Random seed")->capture_default_str();
                 return [o]() {
                   checked_rank(o->n);
                   return a_confluence_audit(o->n, ACaps{o->index == 0 ? o->n : o->index, o->exp},
                                             {}, o->samples, o->seed, o->exhaustive);
                 };
               });

    add_verify(*verify, job, "confluence-m", "Critical pairs of the M rewriting system",
               [](CLI::App& s) {
                 struct M {
                   std::size_t   n = 5, index = 0, interleave = 1, samples = 500, exhaustive = 6;
                   std::uint64_t seed       = 1;
                   bool          restricted = false;
                 };
                 auto o = std::make_shared<M>();
                 s.add_option("--rank", o->n, "Largest letter index")->capture_default_str();
                 s.add_option("--max-index", o->index, "Letter cap for triples (0: rank)")
                     ->capture_default_str();
                 s.add_option("--max-interleave", o->interleave, "Longest y_i, z_i in staircases")
                     ->capture_default_str();
                 s.add_option("--samples", o->samples, "Random words")->capture_default_str();
                 s.add_option("--exhaustive-len", o->exhaustive, "All words up to this length")
                     ->capture_default_str();
                 s.add_option("--seed", o->seed, "Random seed")->capture_default_str();
                 s.add_flag("--restricted", o->restricted,
                            "Only staircases without interleaved letters (expected to fail)");
                 return [o]() {
                   checked_rank(o->n);
                   MRules rules;
                   rules.interleaved = !o->restricted;
                   return m_confluence_audit(o->n,
                                             MCaps{o->index == 0 ? o->n : o->index, o->interleave},
                                             rules, o->samples, o->seed, o->exhaustive);
                 };
               });

    add_verify(*verify, job, "sink", "nabla_n is a sink of M_n", [](CLI::App& s) {
      struct S {
        std::size_t   n = 0, samples = 500;
        std::uint64_t seed = 1;
      };
      auto o = std::make_shared<S>();
      s.add_option("--rank", o->n, "Rank (0: every rank 1..4)")->capture_default_str();
      s.add_option("--samples", o->samples, "Random pairs (x, y) per rank")->capture_default_str();
      s.add_option("--seed", o->seed, "Random seed")->capture_default_str();
      return [o]() {
        Report r;
        for (std::size_t n : rank_range(o->n)) {
          r.absorb(verify_sink(n, o->samples, o->seed + n), "n=" + std::to_string(n) + " ");
        }
        return r;
      };
    });

    add_verify(*verify, job, "garside", "The Garside element of A_n", [](CLI::App& s) {
      struct G {
        std::size_t   n = 0, samples = 200;
        std::uint64_t seed = 1;
      };
      auto o = std::make_shared<G>();
      s.add_option("--rank", o->n, "Rank (0: every rank 1..4)")->capture_default_str();
      s.add_option("--samples", o->samples, "Random words per rank")->capture_default_str();
      s.add_option("--seed", o->seed, "Random seed")->capture_default_str();
      return [o]() {
        Report r;
        for (std::size_t n : rank_range(o->n)) {
          r.absorb(verify_garside(n, o->samples, o->seed + n), "n=" + std::to_string(n) + " ");
        }
        bool control = literal_lambda_fails(2);
        r.fact("literal_lambda_fails_n2", control ? "true" : "false");
        r.expect(control, "literal lambda reading fails at n = 2");
        return r;
      };
    });

    add_verify(*verify, job, "cancel", "Left cancellativity of A_n", [](CLI::App& s) {
      struct C {
        std::size_t   n = 3, samples = 10'000, max_len = 6;
        std::uint64_t seed = 1;
      };
      auto o = std::make_shared<C>();
      s.add_option("--rank", o->n, "Rank")->capture_default_str();
      s.add_option("--samples", o->samples, "Random triples")->capture_default_str();
      s.add_option("--max-len", o->max_len, "Longest sampled word")->capture_default_str();
      s.add_option("--seed", o->seed, "Random seed")->capture_default_str();
      return [o]() {
        return left_cancel_harness(checked_rank(o->n), o->samples, o->seed, o->max_len);
      };
    });

    add_verify(*verify, job, "linrep", "The linear representation of a CI monoid", [](CLI::App& s) {
      struct L {
        std::string   matrix;
        std::size_t   depth = 6, random = 20;
        label_type    max_label = 5;
        std::uint64_t seed      = 1;
        bool          literal   = false;
      };
      auto o = std::make_shared<L>();
      s.add_option("--matrix", o->matrix, "CI matrix file")
          ->default_str("chain3");
      s.add_option("--depth", o->depth, "Largest n in the operator identities")
          ->capture_default_str();
      s.add_option("--random", o->random, "Additional random CI matrices of rank <= 3")
          ->capture_default_str();
      s.add_option("--max-label", o->max_label, "Largest label of the random matrices")
          ->capture_default_str();
      s.add_option("--seed", o->seed, "Random seed")->capture_default_str();
      s.add_flag("--literal", o->literal, "Use the literal ring relation (expected to fail)");
      return [o]() {
        ideal_reading reading = o->literal ? ideal_reading::literal : ideal_reading::swapped;
        CIMatrix      m = o->matrix.empty() ? CIMatrix::chain(3) : load_matrix(o->matrix);
        Report        r;
        r.absorb(verify_representation(m, o->depth, reading));
        if (o->max_label < 2) {
          throw std::invalid_argument("--max-label must be at least 2");
        }
        rng_type                                   rng(o->seed);
        std::uniform_int_distribution<std::size_t> rank(1, 3);
        for (std::size_t i = 0; i < o->random; ++i) {
          CIMatrix rm = random_ci_matrix(rng, rank(rng), o->max_label, 0.1);
          r.absorb(verify_representation(rm, o->depth, reading),
                   "random" + std::to_string(i) + " ");
        }
        return r;
      };
    });

    add_verify(*verify, job, "cube", "The cube condition counterexample", [](CLI::App& s) {
      struct K {
        std::size_t max_len = 9, budget = 10'000;
      };
      auto o = std::make_shared<K>();
      s.add_option("--max-len", o->max_len, "Length bound of the census")->capture_default_str();
      s.add_option("--budget", o->budget, "Reversing step budget")->capture_default_str();
      return [o]() { return verify_cube(o->max_len, o->budget); };
    });

    add_verify(*verify, job, "rank2", "Rank-2 CI monoids and their lattice", [](CLI::App& s) {
      struct R {
        std::size_t k = 3, l = 4;
        std::string dot;
      };
      auto o = std::make_shared<R>();
      s.add_option("--k", o->k, "m(a, b)")->capture_default_str();
      s.add_option("--l", o->l, "m(b, a)")->capture_default_str();
      s.add_option("--dot", o->dot, "Write the Hasse diagram in DOT format to this file");
      return [o]() {
        Report r = verify_rank2(o->k, o->l);
        if (!o->dot.empty()) {
          FiniteMonoid  M = rank2_monoid(o->k, o->l);
          std::ofstream file(o->dot);
          file << hasse_dot(left_division_order(M), M);
          r.expect(static_cast<bool>(file), "DOT file written", {{"path", o->dot}});
          r.fact("dot", o->dot);
        }
        return r;
      };
    });

    add_verify(*verify, job, "action", "Actions of M_n on tuples", [](CLI::App& s) {
      struct T {
        std::size_t   n = 3, samples = 100;
        std::uint64_t seed = 1;
      };
      auto o = std::make_shared<T>();
      s.add_option("--rank", o->n, "Largest sampled rank")->capture_default_str();
      s.add_option("--samples", o->samples, "Random equal pairs")->capture_default_str();
      s.add_option("--seed", o->seed, "Random seed")->capture_default_str();
      return [o]() { return verify_actions(checked_rank(o->n), o->samples, o->seed); };
    });

    add_verify(*verify, job, "reversal", "Word reversal respects the CI congruence",
               [](CLI::App& s) {
                 struct V {
                   std::string   matrix;
                   std::size_t   samples = 200, max_len = 6;
                   std::uint64_t seed    = 1;
                 };
                 auto o = std::make_shared<V>();
                 s.add_option("--matrix", o->matrix, "CI matrix file")
          ->default_str("chain3");
                 s.add_option("--samples", o->samples, "Random equal pairs")->capture_default_str();
                 s.add_option("--max-len", o->max_len, "Longest sampled word")
                     ->capture_default_str();
                 s.add_option("--seed", o->seed, "Random seed")->capture_default_str();
                 return [o]() {
                   CIMatrix m = o->matrix.empty() ? CIMatrix::chain(3) : load_matrix(o->matrix);
                   return check_reversal(m, o->samples, o->seed, o->max_len);
                 };
               });

    add_verify(*verify, job, "infinite", "An infinite family of M-reduced words", [](CLI::App& s) {
      struct I {
        std::size_t max_k = 50, n = 3;
      };
      auto o = std::make_shared<I>();
      s.add_option("--max-k", o->max_k, "Largest power checked")->capture_default_str();
      s.add_option("--rank", o->n, "Rank, at least 3")->capture_default_str();
      return [o]() { return verify_infinite(o->max_k, o->n); };
    });

    std::vector<char const*> argv{"aimon"};
    for (auto const& a : args) {
      argv.push_back(a.c_str());
    }
    try {
      app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (CLI::CallForHelp const& e) {
      return app.exit(e, out, err);
    } catch (CLI::CallForAllHelp const& e) {
      return app.exit(e, out, err);
    } catch (CLI::CallForVersion const& e) {
      return app.exit(e, out, err);
    } catch (CLI::ParseError const& e) {
      app.exit(e, out, err);
      return usage_error;
    } catch (std::invalid_argument const& e) {
      err << "error: " << e.what() << '\n';
      return usage_error;
    }

    if (!job.body) {
      return status;
    }
    try {
      auto   start  = clock_type::now();
      Report result = job.body();
      double elapsed
          = std::chrono::duration<double, std::milli>(clock_type::now() - start).count();
      Report report;
      report.command = job.name;
      report.params  = job.params;
      report.absorb(result);
      if (job.json) {
        out << report_json(report, elapsed) << '\n';
      } else {
        print_report(out, report, elapsed);
      }
      return report.ok() ? success : failure;
    } catch (std::invalid_argument const& e) {
      err << "error: " << e.what() << '\n';
      return usage_error;
    } catch (std::exception const& e) {
      err << "error: " << e.what() << '\n';
      return failure;
    }
  }

  int run(int argc, char const* const* argv, std::ostream& out, std::ostream& err) {
    std::vector<std::string> args(argv + (argc > 0 ? 1 : 0), argv + argc);
    return run(args, out, err);
  }

}  // namespace aimon::cli
