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

#include "aimon/linrep.hpp"

#include <algorithm>  // for max, search
#include <stdexcept>  // for invalid_argument

namespace aimon {

  std::string format_monomial(Monomial const& m) {
    if (m.empty()) {
      return "1";
    }
    std::string out;
    for (auto const& g : m) {
      out += (out.empty() ? "" : "*") + std::string("x") + std::to_string(g.a) + "_"
             + std::to_string(g.b);
    }
    return out;
  }

  std::string format_ring(RingElement const& r) {
    if (r.empty()) {
      return "0";
    }
    std::string out;
    for (auto const& [m, c] : r) {
      if (!out.empty()) {
        out += c < 0 ? " - " : " + ";
      } else if (c < 0) {
        out += "-";
      }
      coefficient magnitude = c < 0 ? -c : c;
      if (magnitude != 1 || m.empty()) {
        out += std::to_string(magnitude) + (m.empty() ? "" : "*");
      }
      if (!m.empty()) {
        out += format_monomial(m);
      }
    }
    return out;
  }

  std::string format_vector(ModuleVector const& v) {
    if (v.empty()) {
      return "0";
    }
    std::string out;
    for (auto const& [s, r] : v) {
      out += (out.empty() ? "" : " + ") + std::string("(") + format_ring(r) + ") e"
             + std::to_string(s);
    }
    return out;
  }

  Monomial alternating_monomial(letter_type a, letter_type b, std::size_t k) {
    Monomial m;
    for (std::size_t i = 0; i < k; ++i) {
      m.push_back(i % 2 == 0 ? RingGenerator{a, b} : RingGenerator{b, a});
    }
    return m;
  }

  std::vector<Monomial> forbidden_factors(CIMatrix const& matrix, ideal_reading reading) {
    if (!validate_ci(matrix)) {
      throw std::invalid_argument("forbidden_factors: not a CI matrix: " + ci_violation(matrix));
    }
    std::vector<Monomial> out;
    for (std::size_t a = 1; a <= matrix.rank(); ++a) {
      for (std::size_t b = 1; b <= matrix.rank(); ++b) {
        if (a != b && matrix.at(a, b) != infinity) {
          auto x = static_cast<letter_type>(a), y = static_cast<letter_type>(b);
          out.push_back(reading == ideal_reading::swapped
                            ? alternating_monomial(y, x, matrix.at(a, b) - 1)
                            : alternating_monomial(x, y, matrix.at(a, b) - 1));
        }
      }
    }
    return out;
  }

  LinearRep::LinearRep(CIMatrix const& matrix, ideal_reading reading)
      : _rank(matrix.rank()), _forbidden(forbidden_factors(matrix, reading)) {
    for (auto const& f : _forbidden) {
      _longest = std::max(_longest, f.size());
    }
  }

  LinearRep LinearRep::without_relations(std::size_t rank) {
    LinearRep rep;
    rep._rank = rank;
    return rep;
  }

  bool LinearRep::is_zero_monomial(Monomial const& m) const {
    for (auto const& f : _forbidden) {
      if (std::search(m.begin(), m.end(), f.begin(), f.end()) != m.end()) {
        return true;
      }
    }
    return false;
  }

  RingElement LinearRep::monomial(Monomial const& m, coefficient c) const {
    if (c == 0 || is_zero_monomial(m)) {
      return {};
    }
    return {{m, c}};
  }

  RingElement LinearRep::generator(letter_type a, letter_type b) const {
    return monomial({RingGenerator{a, b}});
  }

  RingElement LinearRep::mul(RingElement const& p, RingElement const& q) const {
    RingElement out;
    for (auto const& [mp, cp] : p) {
      for (auto const& [mq, cq] : q) {
        Monomial m = mp;
        m.insert(m.end(), mq.begin(), mq.end());
        // Only windows that contain both sides of the junction can be new.
        bool zero = false;
        for (auto const& f : _forbidden) {
          std::size_t const len = f.size();
          if (len < 2 || len > m.size()) {
            continue;
          }
          std::size_t lo = mp.size() >= len - 1 ? mp.size() - (len - 1) : 0;
          for (std::size_t s = lo; s < mp.size() && s + len <= m.size() && !zero; ++s) {
            zero = std::equal(f.begin(), f.end(), m.begin() + static_cast<std::ptrdiff_t>(s));
          }
          if (zero) {
            break;
          }
        }
        if (zero) {
          continue;
        }
        if ((out[m] += cp * cq) == 0) {
          out.erase(m);
        }
      }
    }
    return out;
  }

  RingElement LinearRep::add(RingElement const& p, RingElement const& q) {
    RingElement out = p;
    for (auto const& [m, c] : q) {
      if ((out[m] += c) == 0) {
        out.erase(m);
      }
    }
    return out;
  }

  RingElement LinearRep::scale(RingElement const& p, coefficient c) {
    if (c == 0) {
      return {};
    }
    RingElement out = p;
    for (auto& [m, x] : out) {
      x *= c;
    }
    return out;
  }

  ModuleVector LinearRep::basis(std::size_t s) {
    return {{s, RingElement{{Monomial{}, 1}}}};
  }

  ModuleVector LinearRep::add(ModuleVector const& v, ModuleVector const& w) {
    ModuleVector out = v;
    for (auto const& [s, r] : w) {
      RingElement sum = add(out[s], r);
      if (sum.empty()) {
        out.erase(s);
      } else {
        out[s] = std::move(sum);
      }
    }
    return out;
  }

  ModuleVector LinearRep::sub(ModuleVector const& v, ModuleVector const& w) {
    ModuleVector negated;
    for (auto const& [s, r] : w) {
      negated[s] = scale(r, -1);
    }
    return add(v, negated);
  }

  ModuleVector LinearRep::left_mul(RingElement const& r, ModuleVector const& v) const {
    ModuleVector out;
    for (auto const& [s, c] : v) {
      RingElement product = mul(r, c);
      if (!product.empty()) {
        out[s] = std::move(product);
      }
    }
    return out;
  }

  ModuleVector LinearRep::act_letter(ModuleVector const& v, letter_type a) const {
    if (a < 1 || a > _rank) {
      throw std::invalid_argument("act_letter: generator " + std::to_string(a)
                                  + " outside 1.." + std::to_string(_rank));
    }
    ModuleVector out;
    for (auto const& [s, c] : v) {
      if (s == a) {
        continue;
      }
      out = add(out, ModuleVector{{s, c}});
      RingElement moved = mul(c, generator(static_cast<letter_type>(s), a));
      if (!moved.empty()) {
        out = add(out, ModuleVector{{a, moved}});
      }
    }
    return out;
  }

  ModuleVector LinearRep::act_word(ModuleVector const& v, word_type const& w) const {
    ModuleVector out = v;
    for (letter_type a : w) {
      out = act_letter(out, a);
    }
    return out;
  }

  std::vector<std::pair<word_type, word_type>> defining_relations(CIMatrix const& matrix) {
    if (!validate_ci(matrix)) {
      throw std::invalid_argument("defining_relations: not a CI matrix: " + ci_violation(matrix));
    }
    std::vector<std::pair<word_type, word_type>> out;
    for (std::size_t a = 1; a <= matrix.rank(); ++a) {
      auto x = static_cast<letter_type>(a);
      out.push_back({{x, x}, {x}});
    }
    for (std::size_t a = 1; a <= matrix.rank(); ++a) {
      for (std::size_t b = a + 1; b <= matrix.rank(); ++b) {
        if (matrix.at(a, b) == infinity) {
          continue;
        }
        auto x = static_cast<letter_type>(a), y = static_cast<letter_type>(b);
        auto k = matrix.at(a, b), l = matrix.at(b, a);
        out.push_back({alternating(x, y, k), alternating(y, x, l)});
        out.push_back({alternating(x, y, k), alternating(x, y, k + 1)});
        out.push_back({alternating(y, x, l), alternating(y, x, l + 1)});
      }
    }
    return out;
  }

  namespace {
    std::size_t parity_first(std::size_t n, std::size_t a, std::size_t b) {
      return n % 2 == 0 ? a : b;
    }

    std::size_t parity_second(std::size_t n, std::size_t a, std::size_t b) {
      return n % 2 == 0 ? b : a;
    }

    void check_identities(LinearRep const&   rep,
                          std::size_t        rank,
                          std::size_t        depth,
                          std::string const& ring,
                          Report&            report) {
      auto L = [](std::size_t x) { return static_cast<letter_type>(x); };
      for (std::size_t a = 1; a <= rank; ++a) {
        for (std::size_t b = 1; b <= rank; ++b) {
          if (a == b) {
            continue;
          }
          for (std::size_t n = 1; n <= depth; ++n) {
            ModuleVector lhs = rep.act_word(LinearRep::basis(b), alternating(L(a), L(b), n));
            ModuleVector rhs = LinearRep::add(
                rep.left_mul(rep.monomial(alternating_monomial(L(b), L(a), n - 1)),
                             LinearRep::basis(parity_first(n, a, b))),
                rep.left_mul(rep.monomial(alternating_monomial(L(b), L(a), n)),
                             LinearRep::basis(parity_second(n, a, b))));
            report.expect(lhs == rhs, "e_b [T_a,T_b;n] identity (" + ring + ")",
                          {{"a", std::to_string(a)},
                           {"b", std::to_string(b)},
                           {"n", std::to_string(n)},
                           {"lhs", format_vector(lhs)},
                           {"rhs", format_vector(rhs)}});
          }
          for (std::size_t p = 1; p <= depth; ++p) {
            for (std::size_t s = 1; s <= rank; ++s) {
              auto diff = [&](std::size_t k) {
                return LinearRep::sub(rep.act_word(LinearRep::basis(s), alternating(L(a), L(b), k)),
                                      rep.act_word(LinearRep::basis(s), alternating(L(b), L(a), k)));
              };
              ModuleVector d   = diff(p);
              ModuleVector rhs = LinearRep::sub(
                  LinearRep::add(rep.act_letter(d, L(a)), rep.act_letter(d, L(b))), d);
              report.expect(diff(p + 1) == rhs, "(T_a + T_b - 1) recursion (" + ring + ")",
                            {{"a", std::to_string(a)},
                             {"b", std::to_string(b)},
                             {"p", std::to_string(p)},
                             {"s", std::to_string(s)}});
            }
          }
          for (std::size_t c = 1; c <= rank; ++c) {
            if (c == a || c == b) {
              continue;
            }
            for (std::size_t n = 1; n <= depth; ++n) {
              ModuleVector lhs = LinearRep::sub(
                  rep.act_word(LinearRep::basis(c), alternating(L(a), L(b), n)),
                  rep.act_word(LinearRep::basis(c), alternating(L(b), L(a), n)));
              Monomial first{RingGenerator{L(c), L(a)}};
              Monomial tail1 = alternating_monomial(L(a), L(b), n - 1);
              first.insert(first.end(), tail1.begin(), tail1.end());
              Monomial second{RingGenerator{L(c), L(b)}};
              Monomial tail2 = alternating_monomial(L(b), L(a), n - 1);
              second.insert(second.end(), tail2.begin(), tail2.end());
              ModuleVector rhs = LinearRep::sub(
                  rep.left_mul(rep.monomial(first), LinearRep::basis(parity_second(n, a, b))),
                  rep.left_mul(rep.monomial(second), LinearRep::basis(parity_first(n, a, b))));
              report.expect(lhs == rhs, "e_c ([T_a,T_b;n] - [T_b,T_a;n]) identity (" + ring + ")",
                            {{"a", std::to_string(a)},
                             {"b", std::to_string(b)},
                             {"c", std::to_string(c)},
                             {"n", std::to_string(n)},
                             {"lhs", format_vector(lhs)},
                             {"rhs", format_vector(rhs)}});
            }
          }
        }
      }
    }
  }  // namespace

  Report verify_representation(CIMatrix const& matrix, std::size_t depth, ideal_reading reading) {
    if (!validate_ci(matrix)) {
      throw std::invalid_argument("verify_representation: not a CI matrix: "
                                  + ci_violation(matrix));
    }
    Report report;
    report.command = "linrep";
    report.param("rank", std::to_string(matrix.rank()));
    report.param("depth", std::to_string(depth));
    report.param("reading", reading == ideal_reading::swapped ? "swapped" : "literal");

    LinearRep const rep(matrix, reading);
    auto const      relations = defining_relations(matrix);
    report.fact("relations", std::to_string(relations.size()));
    for (auto const& [lhs, rhs] : relations) {
      for (std::size_t s = 1; s <= matrix.rank(); ++s) {
        ModuleVector left  = rep.act_word(LinearRep::basis(s), lhs);
        ModuleVector right = rep.act_word(LinearRep::basis(s), rhs);
        report.expect(left == right, "relation acts identically",
                      {{"lhs", format_word(lhs)},
                       {"rhs", format_word(rhs)},
                       {"basis", "e" + std::to_string(s)},
                       {"left", format_vector(left)},
                       {"right", format_vector(right)}});
      }
    }
    check_identities(rep, matrix.rank(), depth, "quotient ring", report);
    check_identities(LinearRep::without_relations(matrix.rank()), matrix.rank(), depth,
                     "free ring", report);
    return report;
  }

}  // namespace aimon
