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

#include "aimon/ci_matrix.hpp"

#include <istream>    // for istream, getline
#include <ostream>    // for ostream
#include <random>     // for uniform_int_distribution
#include <sstream>    // for istringstream
#include <stdexcept>  // for invalid_argument, out_of_range

namespace aimon {

  CIMatrix::CIMatrix(std::size_t rank) : _rank(rank), _labels(rank * rank, 2) {
    if (rank == 0) {
      throw std::invalid_argument("CIMatrix: rank must be at least 1");
    }
    if (rank > max_rank) {
      throw std::invalid_argument("CIMatrix: rank exceeds "
                                  + std::to_string(max_rank));
    }
    for (std::size_t a = 0; a < rank; ++a) {
      _labels[a * rank + a] = 1;
    }
  }

  CIMatrix CIMatrix::chain(std::size_t rank) {
    CIMatrix m(rank);
    for (std::size_t a = 1; a < rank; ++a) {
      m.set_pair(a, a + 1, 3, 4);
    }
    return m;
  }

  CIMatrix CIMatrix::rank2(label_type k, label_type l) {
    CIMatrix m(2);
    m.set_pair(1, 2, k, l);
    return m;
  }

  label_type CIMatrix::at(std::size_t a, std::size_t b) const {
    if (a < 1 || b < 1 || a > _rank || b > _rank) {
      throw std::out_of_range("CIMatrix::at: index out of range");
    }
    return _labels[(a - 1) * _rank + (b - 1)];
  }

  CIMatrix& CIMatrix::set(std::size_t a, std::size_t b, label_type m) {
    if (a < 1 || b < 1 || a > _rank || b > _rank) {
      throw std::out_of_range("CIMatrix::set: index out of range");
    }
    if (a == b) {
      throw std::invalid_argument("CIMatrix::set: the diagonal is fixed to 1");
    }
    _labels[(a - 1) * _rank + (b - 1)] = m;
    return *this;
  }

  CIMatrix& CIMatrix::set_pair(std::size_t a,
                               std::size_t b,
                               label_type  mab,
                               label_type  mba) {
    set(a, b, mab);
    return set(b, a, mba);
  }

  std::string ci_violation(CIMatrix const& m) {
    auto show = [](label_type x) {
      return x == infinity ? std::string("inf") : std::to_string(x);
    };
    for (std::size_t a = 1; a <= m.rank(); ++a) {
      for (std::size_t b = a + 1; b <= m.rank(); ++b) {
        label_type mab = m.at(a, b), mba = m.at(b, a);
        std::string where = "m(" + std::to_string(a) + "," + std::to_string(b)
                            + ") = " + show(mab) + ", m(" + std::to_string(b)
                            + "," + std::to_string(a) + ") = " + show(mba);
        if (mab < 2 || mba < 2) {
          return "off-diagonal label below 2: " + where;
        }
        if ((mab == infinity) != (mba == infinity)) {
          return "infinite label must be symmetric: " + where;
        }
        if (mab != infinity && (mab > mba ? mab - mba : mba - mab) > 1) {
          return "labels differ by more than 1: " + where;
        }
      }
    }
    return {};
  }

  bool validate_ci(CIMatrix const& m) {
    return ci_violation(m).empty();
  }

  label_type edge_label(CIMatrix const& m, std::size_t a, std::size_t b) {
    label_type mab = m.at(a, b), mba = m.at(b, a);
    if (mab == infinity || mba == infinity) {
      return infinity;
    }
    return mab + mba;
  }

  CIMatrix parse_ci_matrix(std::istream& in) {
    std::string line;
    std::size_t lineno = 0;
    auto        next_line = [&](std::string& out) {
      while (std::getline(in, out)) {
        ++lineno;
        auto first = out.find_first_not_of(" \t\r");
        if (first == std::string::npos || out[first] == '#') {
          continue;
        }
        return true;
      }
      return false;
    };
    auto fail = [&](std::string const& what) {
      throw std::invalid_argument("CI matrix line " + std::to_string(lineno)
                                  + ": " + what);
    };

    if (!next_line(line)) {
      fail("missing \"rank N\" header");
    }
    std::istringstream header(line);
    std::string        keyword;
    long long          rank = 0;
    if (!(header >> keyword >> rank) || keyword != "rank" || rank < 1
        || rank > static_cast<long long>(max_rank)) {
      fail("expected \"rank N\" with 1 <= N <= " + std::to_string(max_rank));
    }
    std::string trailing;
    if (header >> trailing) {
      fail("unexpected text after rank");
    }
    CIMatrix m(static_cast<std::size_t>(rank));
    while (next_line(line)) {
      std::istringstream row(line);
      long long          a = 0, b = 0;
      std::string        label;
      if (!(row >> a >> b >> label)) {
        fail("expected \"a b m\"");
      }
      if (row >> trailing) {
        fail("unexpected text after label");
      }
      if (a < 1 || b < 1 || a > rank || b > rank) {
        fail("generator index out of range");
      }
      if (a == b) {
        fail("diagonal entries are implicit");
      }
      label_type value = 0;
      if (label == "inf") {
        value = infinity;
      } else {
        try {
          std::size_t used = 0;
          long long   v    = std::stoll(label, &used);
          if (used != label.size() || v < 1 || v >= static_cast<long long>(infinity)) {
            fail("label must be a positive integer or \"inf\"");
          }
          value = static_cast<label_type>(v);
        } catch (std::logic_error const&) {
          fail("label must be a positive integer or \"inf\"");
        }
      }
      m.set(static_cast<std::size_t>(a), static_cast<std::size_t>(b), value);
    }
    return m;
  }

  CIMatrix parse_ci_matrix(std::string const& text) {
    std::istringstream in(text);
    return parse_ci_matrix(in);
  }

  void write_ci_matrix(std::ostream& out, CIMatrix const& m) {
    out << "rank " << m.rank() << '\n';
    for (std::size_t a = 1; a <= m.rank(); ++a) {
      for (std::size_t b = 1; b <= m.rank(); ++b) {
        if (a != b && m.at(a, b) != 2) {
          out << a << ' ' << b << ' ';
          if (m.at(a, b) == infinity) {
            out << "inf";
          } else {
            out << m.at(a, b);
          }
          out << '\n';
        }
      }
    }
  }

  void Presentation::validate() const {
    for (auto const& [lhs, rhs] : relations) {
      if (max_letter(lhs) > generators || max_letter(rhs) > generators) {
        throw std::invalid_argument("relation uses a letter beyond generator "
                                    + std::to_string(generators));
      }
    }
  }

  namespace {
    void require_ci(CIMatrix const& m) {
      auto why = ci_violation(m);
      if (!why.empty()) {
        throw std::invalid_argument("not a CI matrix: " + why);
      }
    }

    letter_type as_letter(std::size_t a) {
      return static_cast<letter_type>(a);
    }

    void add_braid_relations(CIMatrix const& m, Presentation& p) {
      for (std::size_t a = 1; a <= m.rank(); ++a) {
        for (std::size_t b = a + 1; b <= m.rank(); ++b) {
          if (m.at(a, b) == infinity) {
            continue;
          }
          p.relations.emplace_back(
              alternating(as_letter(a), as_letter(b), m.at(a, b)),
              alternating(as_letter(b), as_letter(a), m.at(b, a)));
        }
      }
    }
  }  // namespace

  Presentation ai_presentation(CIMatrix const& m) {
    require_ci(m);
    Presentation p;
    p.generators = m.rank();
    add_braid_relations(m, p);
    return p;
  }

  Presentation ci_presentation(CIMatrix const& m) {
    require_ci(m);
    Presentation p;
    p.generators = m.rank();
    for (std::size_t a = 1; a <= m.rank(); ++a) {
      p.relations.emplace_back(word_type{as_letter(a), as_letter(a)},
                               word_type{as_letter(a)});
    }
    add_braid_relations(m, p);
    for (std::size_t a = 1; a <= m.rank(); ++a) {
      for (std::size_t b = a + 1; b <= m.rank(); ++b) {
        if (m.at(a, b) == infinity) {
          continue;
        }
        std::size_t s = a, t = b;
        if (m.at(b, a) < m.at(a, b)) {
          std::swap(s, t);
        }
        label_type k = m.at(s, t);
        p.relations.emplace_back(alternating(as_letter(s), as_letter(t), k),
                                 alternating(as_letter(s), as_letter(t), k + 1));
      }
    }
    return p;
  }

  CIMatrix random_ci_matrix(rng_type&   rng,
                            std::size_t rank,
                            label_type  max_label,
                            double      infinite_probability) {
    if (max_label < 2) {
      throw std::invalid_argument("random_ci_matrix: max_label must be at least 2");
    }
    CIMatrix                                  m(rank);
    std::bernoulli_distribution               infinite(infinite_probability);
    std::uniform_int_distribution<label_type> label(2, max_label);
    for (std::size_t a = 1; a <= rank; ++a) {
      for (std::size_t b = a + 1; b <= rank; ++b) {
        if (infinite(rng)) {
          m.set_pair(a, b, infinity, infinity);
          continue;
        }
        label_type                                mab = label(rng);
        label_type                                lo  = mab > 2 ? mab - 1 : 2;
        label_type                                hi  = mab < max_label ? mab + 1 : max_label;
        std::uniform_int_distribution<label_type> near(lo, hi);
        m.set_pair(a, b, mab, near(rng));
      }
    }
    return m;
  }

}  // namespace aimon
