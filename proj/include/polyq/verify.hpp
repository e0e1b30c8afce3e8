// Copyright 2026 The Authors.
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

// Every identity that applies to one input, run in a fixed order and
// collected into a report. Nothing here throws on a failed identity; the
// failure is recorded and the remaining checks still run.

#ifndef POLYQ_VERIFY_HPP_
#define POLYQ_VERIFY_HPP_

#include <functional>
#include <numeric>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "polyq/activity.hpp"
#include "polyq/constructions.hpp"
#include "polyq/core_model.hpp"
#include "polyq/geometry.hpp"
#include "polyq/polynomial.hpp"
#include "polyq/report.hpp"
#include "polyq/structure.hpp"
#include "polyq/tutte.hpp"

namespace polyq {

enum class CheckStatus { kPass, kFail, kSkip, kInfo };

inline const char* to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::kPass: return "pass";
    case CheckStatus::kFail: return "fail";
    case CheckStatus::kSkip: return "skip";
    case CheckStatus::kInfo: return "info";
  }
  return "unknown";
}

struct CheckResult {
  std::string module;
  std::string name;
  CheckStatus status = CheckStatus::kPass;
  std::string detail;
};

struct VerifyReport {
  std::string name;
  int n = 0;
  bool is_matroid = false;
  std::vector<CheckResult> checks;

  bool passed() const {
    for (const auto& c : checks) {
      if (c.status == CheckStatus::kFail) return false;
    }
    return true;
  }

  nlohmann::ordered_json to_json() const {
    nlohmann::ordered_json out;
    out["format"] = "polyq/1-report";
    out["name"] = name;
    out["n"] = n;
    out["matroid"] = is_matroid;
    out["passed"] = passed();
    out["checks"] = nlohmann::ordered_json::array();
    for (const auto& c : checks) {
      out["checks"].push_back({{"module", c.module},
                               {"check", c.name},
                               {"status", to_string(c.status)},
                               {"detail", c.detail}});
    }
    return out;
  }
};

struct VerifyOptions {
  // Box volume up to which membership is compared point by point.
  long long membership_box = 20000;
  // Largest n for which every ordering is tried.
  int all_orders_max_n = 4;
};

// Count of box points where the H-description and the decomposition search
// disagree.
inline long long membership_disagreements(const Polymatroid& m,
                                          MinkowskiConfig cfg) {
  DecompositionOracle oracle(m);
  const int n = m.n();
  LatticePoint p(n);
  for (int i = 0; i < n; ++i) p[i] = -cfg.t;
  long long bad = 0;
  while (true) {
    if (member_minkowski(m, p, cfg) != oracle.member(p, cfg)) ++bad;
    int i = 0;
    while (i < n && p[i] == m.singleton_rank(i + 1) + cfg.u) p[i++] = -cfg.t;
    if (i == n) break;
    ++p[i];
  }
  return bad;
}

namespace detail {

class CheckRunner {
 public:
  explicit CheckRunner(VerifyReport& report) : report_(report) {}

  void run(const std::string& module, const std::string& name,
           const std::function<IdentityReport()>& body,
           bool informational = false) {
    CheckResult out{module, name, CheckStatus::kPass, ""};
    try {
      const IdentityReport rep = body();
      out.detail = rep.detail;
      if (informational) {
        out.status = CheckStatus::kInfo;
        out.detail = std::string(rep.passed ? "holds: " : "does not hold: ") +
                     rep.detail;
      } else if (!rep.passed) {
        out.status = CheckStatus::kFail;
      }
    } catch (const Error& e) {
      out.detail = e.what();
      out.status = e.kind() == ErrorKind::kBoxOverflow ? CheckStatus::kSkip
                   : informational                     ? CheckStatus::kInfo
                                                       : CheckStatus::kFail;
    }
    report_.checks.push_back(std::move(out));
  }

  void skip(const std::string& module, const std::string& name,
            const std::string& why) {
    report_.checks.push_back({module, name, CheckStatus::kSkip, why});
  }

 private:
  VerifyReport& report_;
};

inline std::vector<Ordering> verify_orders(int n, int all_orders_max_n) {
  std::vector<Element> seq(n);
  std::iota(seq.begin(), seq.end(), 1);
  std::vector<Ordering> out;
  if (n <= all_orders_max_n) {
    do {
      out.push_back(Ordering::from_sequence(seq));
    } while (std::next_permutation(seq.begin(), seq.end()));
    return out;
  }
  // Rotations and their reversals.
  for (int k = 0; k < n; ++k) {
    std::rotate(seq.begin(), seq.begin() + 1, seq.end());
    out.push_back(Ordering::from_sequence(seq));
    std::vector<Element> rev(seq.rbegin(), seq.rend());
    out.push_back(Ordering::from_sequence(rev));
  }
  return out;
}

inline IdentityReport passed(std::string name, std::string detail) {
  return {std::move(name), true, std::move(detail)};
}

}  // namespace detail

inline VerifyReport verify(const std::string& name, const Polymatroid& m,
                           const VerifyOptions& options = {}) {
  const int n = m.n();
  VerifyReport report{name, n, m.is_matroid(), {}};
  detail::CheckRunner run(report);
  const auto orders = detail::verify_orders(n, options.all_orders_max_n);

  run.run("core-model", "rank table from bases", [&] {
    const RankFunction again = rank_from_bases(n, enumerate_bases(m));
    return IdentityReport{"rank table from bases",
                          again == m.rank_function(),
                          std::to_string(enumerate_bases(m).size()) + " bases"};
  });

  for (int t = 0; t <= 2; ++t) {
    for (int u = 0; t + u <= 2; ++u) {
      const std::string label =
          "membership oracles agree at t=" + std::to_string(t) +
          " u=" + std::to_string(u);
      if (bounding_box_volume(m, {t, u}) >
          static_cast<long double>(options.membership_box)) {
        run.skip("geometry", label, "bounding box too large");
        continue;
      }
      run.run("geometry", label, [&] {
        const long long bad = membership_disagreements(m, {t, u});
        return IdentityReport{label, bad == 0,
                              std::to_string(bad) + " disagreements"};
      });
    }
  }

  BivariatePolynomial q;
  bool have_q = false;
  run.run("geometry", "Q' from counts with degree check", [&] {
    q = q_prime(m);
    have_q = true;
    return detail::passed("Q'", q.to_string());
  });
  if (!have_q) return report;

  if (m.is_matroid()) {
    run.run("geometry", "closed form for matroid counts", [&] {
      for (int t = 0; t <= 2; ++t) {
        for (int u = 0; u <= 2; ++u) {
          const Integer a = count_lattice_points(m, {t, u});
          const Integer b = count_matroid_closed_form(m, {t, u});
          if (a != b) {
            return IdentityReport{"closed form", false,
                                  "t=" + std::to_string(t) + " u=" +
                                      std::to_string(u) + ": " + a.str() +
                                      " vs " + b.str()};
          }
        }
      }
      return detail::passed("closed form", "t, u <= 2");
    });

    BivariatePolynomial tutte;
    run.run("tutte", "four methods agree", [&] {
      tutte = tutte_subset_sum(m);
      const auto delcon = tutte_deletion_contraction(m);
      const auto act = tutte_activity(m);
      const auto lattice = tutte_from_qprime(q, n, m.total_rank()).polynomial;
      const bool ok = delcon == tutte && act == tutte && lattice == tutte;
      return IdentityReport{"four methods", ok,
                            ok ? tutte.to_string()
                               : "subset " + tutte.to_string() + ", delcon " +
                                     delcon.to_string() + ", activity " +
                                     act.to_string() + ", lattice " +
                                     lattice.to_string()};
    });
    run.run("tutte", "Q' from Tutte", [&] {
      return compare_polynomials("Q' from Tutte",
                                 qprime_from_tutte(tutte, n, m.total_rank()), q);
    });
    run.run("tutte", "Tutte activities under every tried order", [&] {
      for (const Ordering& o : orders) {
        if (tutte_activity(m, o) != tutte) {
          return IdentityReport{"activity order", false, o.to_string()};
        }
      }
      return detail::passed("activity order",
                            std::to_string(orders.size()) + " orders");
    });
  } else {
    run.run(
        "tutte", "recovery from Q' (polymatroid)",
        [&] {
          const auto rec = tutte_from_qprime(q, n, m.total_rank());
          return IdentityReport{"recovery", !rec.negative_coefficients,
                                rec.polynomial.to_string()};
        },
        true);
  }

  run.run("activity", "internal and external polynomials order-free", [&] {
    check_order_invariance(m, orders);
    return detail::passed(
        "order invariance",
        "I = " + internal_polynomial(m, Ordering::natural(n)).to_string() +
            ", X = " + external_polynomial(m, Ordering::natural(n)).to_string());
  });
  run.run("activity", "specialization under every tried order", [&] {
    for (const Ordering& o : orders) {
      for (const auto& rep : kalman_specialization(m, q, o)) {
        if (!rep.passed) return rep;
      }
    }
    return detail::passed("specialization",
                          std::to_string(orders.size()) + " orders");
  });
  for (int t = 1; t <= 2; ++t) {
    for (auto side : {PartitionSide::kInternal, PartitionSide::kExternal}) {
      const std::string label =
          std::string(side == PartitionSide::kInternal ? "internal" : "external") +
          " simplex partition at t=" + std::to_string(t);
      run.run("activity", label, [&] {
        const auto rep =
            activity_partition_check(m, t, side, Ordering::natural(n));
        return detail::passed(label, std::to_string(rep.total_points) +
                                         " points in " +
                                         std::to_string(rep.cells.size()) +
                                         " simplices");
      });
    }
  }

  const CoefficientReport coeffs = coefficient_report(m, q);
  run.run("structure", "sign alternation", [&] { return coeffs.alternation; },
          !m.is_matroid());
  run.run("structure", "top degree part", [&] { return coeffs.top_degree; },
          !m.is_matroid());
  if (m.is_matroid()) {
    run.run("structure", "interval grading", [&] { return *coeffs.grading; });
    run.run("structure", "exchange output independent of start", [&] {
      const auto bases = basis_sets(m);
      for (const PartitionXY& p : all_partitions(n)) {
        const SubsetKey b0 = find_basis_for_partition(m, p, bases.front());
        for (SubsetKey start : bases) {
          if (find_basis_for_partition(m, p, start) != b0) {
            return IdentityReport{"exchange", false,
                                  "X = " + to_string(p.x) + " from " +
                                      to_string(start)};
          }
        }
      }
      return detail::passed("exchange",
                            std::to_string(all_partitions(n).size()) +
                                " splits");
    });
    run.run("structure", "top degree faces", [&] {
      const auto faces = top_degree_faces(m);
      BivariatePolynomial sum;
      for (const auto& f : faces) {
        sum += BivariatePolynomial::monomial(1, f.partition.x.size() - 1,
                                             f.partition.y.size() - 1);
      }
      return compare_polynomials("faces", sum, q.homogeneous_part(n - 1));
    });
    run.run("structure", "Dawson partition under every tried order", [&] {
      for (const Ordering& o : orders) dawson_partition(m, o);
      return detail::passed("Dawson", std::to_string(orders.size()) +
                                          " orders");
    });
    run.run("structure", "cube grouping", [&] { return cube_grouping_check(m); });
  }

  const int s0 = std::max(m.max_singleton_rank(), 0);
  for (int s = s0; s <= s0 + 1; ++s) {
    run.run("constructions", "s-dual with s=" + std::to_string(s),
            [&] { return s_dual_check(m, s); });
  }
  if (m.is_matroid()) {
    run.run("constructions", "Tutte duality",
            [&] { return tutte_duality_check(m); });
  }
  if (n + 1 <= kMaxGroundSize) {
    const Polymatroid point(validate_rank_function(1, {0, 1}));
    run.run("constructions", "direct sum with a point",
            [&] { return direct_sum_check(m, point); });
    run.run("constructions", "convolution with a point", [&] {
      for (int t = 0; t <= 2; ++t) {
        for (int u = 0; u <= 2; ++u) {
          const auto rep = convolution_check(m, point, t, u);
          if (!rep.passed) return rep;
        }
      }
      return detail::passed("convolution", "t, u <= 2");
    });
  }
  if (n >= 2) {
    for (Element a = 1; a <= n; ++a) {
      run.run("constructions", "slice recurrence at " + std::to_string(a),
              [&] { return slice_recurrence_check(m, a, q); });
    }
  }
  if (m.is_matroid()) {
    int found = 0;
    for (std::uint32_t c = 1; c < (std::uint32_t{1} << n); ++c) {
      if (!is_circuit_hyperplane(m, SubsetKey(c))) continue;
      ++found;
      run.run("constructions", "relaxation of " + to_string(SubsetKey(c)),
              [&] { return relaxation_check(m, SubsetKey(c)); });
    }
    if (found == 0) {
      run.skip("constructions", "relaxation", "no circuit-hyperplane");
    }
  }
  return report;
}

}  // namespace polyq

#endif  // POLYQ_VERIFY_HPP_
