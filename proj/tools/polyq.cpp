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

// Command line front end. Exit codes: 0 success, 1 bad input, 2 a failed
// identity (a bug), 64 usage.

#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "polyq/polyq.hpp"

namespace {

using polyq::BivariatePolynomial;
using polyq::Element;
using polyq::Error;
using polyq::ErrorKind;
using polyq::Integer;
using polyq::Polymatroid;
using polyq::SubsetKey;
using Json = nlohmann::ordered_json;

constexpr int kExitDomain = 1;
constexpr int kExitIntegrity = 2;
constexpr int kExitUsage = 64;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Json integer_json(const Integer& v) {
  if (v >= std::numeric_limits<long long>::min() &&
      v <= std::numeric_limits<long long>::max()) {
    return static_cast<long long>(v);
  }
  return v.str();
}

Json subset_json(SubsetKey s) { return s.elements(); }

std::vector<int> parse_int_list(const std::string& text,
                                const std::string& what) {
  std::vector<int> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw UsageError(what + ": expected a comma separated list of integers, "
                       "got \"" + text + "\"");
    }
  }
  return out;
}

SubsetKey parse_set(const std::string& text, int n) {
  SubsetKey s;
  for (int e : parse_int_list(text, "--set")) {
    if (e < 1 || e > n) {
      throw Error(ErrorKind::kInvalidInput,
                  "element " + std::to_string(e) + " outside 1.." +
                      std::to_string(n));
    }
    s = s.with(e);
  }
  return s;
}

std::map<std::string, int> parse_params(const std::string& text) {
  std::map<std::string, int> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty()) continue;
    const auto eq = item.find('=');
    if (eq == std::string::npos) {
      throw UsageError("--params: expected key=value, got \"" + item + "\"");
    }
    const auto value = parse_int_list(item.substr(eq + 1), "--params");
    if (value.size() != 1) throw UsageError("--params: bad value in " + item);
    out[item.substr(0, eq)] = value.front();
  }
  return out;
}

int take_param(std::map<std::string, int>& params, const std::string& key,
               std::optional<int> fallback = std::nullopt) {
  auto it = params.find(key);
  if (it == params.end()) {
    if (!fallback) throw UsageError("--params: missing " + key);
    return *fallback;
  }
  const int v = it->second;
  params.erase(it);
  return v;
}

// Prints the text form, or {"command": ..., "result": ...} under --json.
struct Output {
  bool json = false;
  std::string command;

  void emit(const Json& result, const std::string& text) const {
    if (json) {
      Json out;
      out["command"] = command;
      out["result"] = result;
      std::cout << out.dump(2) << "\n";
    } else {
      std::cout << text;
      if (!text.empty() && text.back() != '\n') std::cout << "\n";
    }
  }
};

std::string base_string(const polyq::BaseVector& b) {
  std::string out = "(";
  for (std::size_t i = 0; i < b.size(); ++i) {
    out += (i ? "," : "") + std::to_string(b[i]);
  }
  return out + ")";
}

void cmd_info(const Output& out, const polyq::InputDocument& doc) {
  const Polymatroid& m = doc.m;
  const auto bases = polyq::enumerate_bases(m);
  Json j;
  j["name"] = doc.name;
  j["n"] = m.n();
  j["bases"] = bases.size();
  j["rank"] = m.total_rank();
  j["matroid"] = m.is_matroid();
  std::string text;
  if (!doc.name.empty()) text += "name: " + doc.name + "\n";
  text += "n: " + std::to_string(m.n()) + "\nbases: " +
          std::to_string(bases.size()) + "\nrank: " +
          std::to_string(m.total_rank()) +
          "\nmatroid: " + (m.is_matroid() ? "true" : "false") + "\n";
  out.emit(j, text);
}

void cmd_count(const Output& out, const Polymatroid& m, int t, int u,
               bool emit_points) {
  if (emit_points) {
    const auto points = polyq::lattice_points(m, {t, u});
    Json j = Json::array();
    std::string text;
    for (int i = 1; i <= m.n(); ++i) {
      text += (i > 1 ? "," : "") + std::string("x") + std::to_string(i);
    }
    text += "\n";
    for (const auto& p : points) {
      j.push_back(p);
      for (std::size_t i = 0; i < p.size(); ++i) {
        text += (i ? "," : "") + std::to_string(p[i]);
      }
      text += "\n";
    }
    out.emit(j, text);
    return;
  }
  const long long count = polyq::count_lattice_points(m, {t, u});
  out.emit(count, std::to_string(count));
}

void cmd_q(const Output& out, const Polymatroid& m) {
  const polyq::QTable table = polyq::q_table(m);
  Json j = Json::array();
  for (const auto& row : table.c) {
    Json r = Json::array();
    for (const auto& v : row) r.push_back(integer_json(v));
    j.push_back(r);
  }
  out.emit(j, j.dump());
}

void cmd_tutte(const Output& out, const Polymatroid& m,
               const std::string& method) {
  polyq::require_matroid(m);
  auto lattice = [&] {
    return polyq::tutte_from_qprime(polyq::q_prime(m), m.n(), m.total_rank())
        .polynomial;
  };
  std::vector<std::pair<std::string, BivariatePolynomial>> results;
  if (method == "subset" || method == "all") {
    results.emplace_back("subset", polyq::tutte_subset_sum(m));
  }
  if (method == "delcon" || method == "all") {
    results.emplace_back("delcon", polyq::tutte_deletion_contraction(m));
  }
  if (method == "activity" || method == "all") {
    results.emplace_back("activity", polyq::tutte_activity(m));
  }
  if (method == "lattice" || method == "all") {
    results.emplace_back("lattice", lattice());
  }
  for (const auto& [name, p] : results) {
    if (p != results.front().second) {
      throw Error(ErrorKind::kIdentityFailed,
                  results.front().first + " gives " +
                      results.front().second.to_string() + " but " + name +
                      " gives " + p.to_string());
    }
  }
  const std::string s = results.front().second.to_string();
  out.emit(s, s);
}

void cmd_activities(const Output& out, const Polymatroid& m,
                    const std::string& order_text, const std::string& which) {
  const polyq::Ordering order =
      order_text.empty()
          ? polyq::Ordering::natural(m.n())
          : polyq::Ordering::from_sequence(parse_int_list(order_text, "--order"));
  polyq::require_ordering(m, order);
  const auto internal = polyq::internal_polynomial(m, order);
  const auto external = polyq::external_polynomial(m, order);
  const auto enumerator = polyq::activity_enumerator(m, order);
  if (!which.empty()) {
    const auto& p = which == "enumerator" ? enumerator
                    : which == "internal" ? internal
                                          : external;
    out.emit(p.to_string(), p.to_string());
    return;
  }
  Json j;
  j["order"] = order.sequence();
  j["bases"] = Json::array();
  std::string text = "order " + order.to_string() + "\n";
  for (const auto& rec : polyq::activity_table(m, order)) {
    j["bases"].push_back({{"base", rec.base},
                          {"internally_active", subset_json(rec.int_active)},
                          {"externally_active", subset_json(rec.ext_active)},
                          {"iota", rec.iota},
                          {"epsilon", rec.epsilon}});
    text += base_string(rec.base) + " int " + to_string(rec.int_active) +
            " ext " + to_string(rec.ext_active) + " iota " +
            std::to_string(rec.iota) + " epsilon " +
            std::to_string(rec.epsilon) + "\n";
  }
  j["enumerator"] = enumerator.to_string();
  j["internal"] = internal.to_string();
  j["external"] = external.to_string();
  text += "enumerator: " + enumerator.to_string() + "\ninternal: " +
          internal.to_string() + "\nexternal: " + external.to_string() + "\n";
  out.emit(j, text);
}

Json report_json(const polyq::IdentityReport& r) {
  return {{"name", r.name}, {"passed", r.passed}, {"detail", r.detail}};
}

std::string report_text(const polyq::IdentityReport& r) {
  return std::string(r.passed ? "holds" : "fails") + "  " + r.name + ": " +
         r.detail + "\n";
}

void cmd_dawson(const Output& out, const Polymatroid& m) {
  Json j;
  std::string text;
  const auto coeffs = polyq::coefficient_report(m);
  if (m.is_matroid()) {
    j["parts"] = Json::array();
    text += "parts\n";
    for (const auto& p : polyq::dawson_partition(m)) {
      j["parts"].push_back({{"basis", subset_json(p.basis)},
                            {"S", subset_json(p.s)},
                            {"T", subset_json(p.t)}});
      text += "  " + to_string(p.basis) + ": [" + to_string(p.s) + ", " +
              to_string(p.t) + "]\n";
    }
    j["faces"] = Json::array();
    text += "top degree faces\n";
    for (const auto& f : polyq::top_degree_faces(m)) {
      j["faces"].push_back({{"X", subset_json(f.partition.x)},
                            {"Y", subset_json(f.partition.y)},
                            {"basis", subset_json(f.basis)}});
      text += "  X " + to_string(f.partition.x) + " Y " +
              to_string(f.partition.y) + " -> " + to_string(f.basis) + "\n";
    }
  }
  j["coefficients"] = Json::array();
  text += "coefficients\n";
  std::vector<polyq::IdentityReport> reps{coeffs.alternation,
                                          coeffs.top_degree};
  if (coeffs.grading) reps.push_back(*coeffs.grading);
  for (const auto& r : reps) {
    j["coefficients"].push_back(report_json(r));
    text += "  " + report_text(r);
  }
  out.emit(j, text);
}

void emit_document(const Output& out, const std::string& name,
                   const Polymatroid& m) {
  const std::string text = polyq::emit_document(name, m);
  out.emit(Json::parse(text), text);
}

Polymatroid generate(const std::string& family, const std::string& params_text,
                     std::uint64_t seed, std::string& name) {
  auto params = parse_params(params_text);
  Polymatroid out = [&] {
    if (family == "uniform") {
      const int r = take_param(params, "r"), n = take_param(params, "n");
      name = "U" + std::to_string(r) + "_" + std::to_string(n);
      return polyq::corpus::uniform(r, n);
    }
    if (family == "graphic-k4") {
      name = "K4";
      return polyq::corpus::k4();
    }
    if (family == "worked-ex1") {
      const int scale = take_param(params, "scale", 1);
      name = scale == 1 ? "ex1" : "ex1_scale" + std::to_string(scale);
      return polyq::corpus::worked_ex1(scale);
    }
    if (family == "worked-ex75") {
      name = "ex75";
      return polyq::corpus::worked_ex75();
    }
    // random-polymatroid; the family name is checked by CLI11.
    const int n = take_param(params, "n");
    const int max = take_param(params, "max", 3);
    if (n < 1 || n > polyq::kMaxGroundSize || max < 1 || max > 8) {
      throw Error(ErrorKind::kInvalidInput, "need 1 <= n <= 16, 1 <= max <= 8");
    }
    std::mt19937_64 rng(seed);
    name = "random_n" + std::to_string(n) + "_max" + std::to_string(max) +
           "_seed" + std::to_string(seed);
    return polyq::corpus::random_polymatroid(n, max, rng);
  }();
  if (!params.empty()) {
    throw UsageError("--params: unknown key " + params.begin()->first);
  }
  return out;
}

int cmd_verify(const Output& out, const polyq::InputDocument& doc) {
  const polyq::VerifyReport rep = polyq::verify(doc.name, doc.m);
  std::string text;
  for (const auto& c : rep.checks) {
    text += std::string(polyq::to_string(c.status)) + "  " + c.module + ": " +
            c.name + (c.detail.empty() ? "" : "  [" + c.detail + "]") + "\n";
  }
  text += rep.passed() ? "verify: all checks passed\n"
                       : "verify: FAILED\n";
  out.emit(rep.to_json(), text);
  return rep.passed() ? 0 : kExitIntegrity;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact lattice point counts of polymatroid Minkowski sums, "
               "Q' and Tutte polynomials."};
  app.require_subcommand(1);
  app.fallthrough();
  bool json = false;
  app.add_flag("--json", json, "Machine-readable output");

  std::string file, file2;
  auto add_file = [&](CLI::App* sub) {
    sub->add_option("FILE", file, "polyq/1 document")->required();
  };

  auto* info = app.add_subcommand("info", "Size, rank and base count");
  add_file(info);

  int t = 0, u = 0;
  bool emit_points = false;
  auto* count = app.add_subcommand("count", "Lattice points of P + t*Nabla + u*Delta");
  add_file(count);
  count->add_option("--t", t, "Copies of Nabla")->required();
  count->add_option("--u", u, "Copies of Delta")->required();
  count->add_flag("--emit-points", emit_points, "Print the points as CSV");

  auto* q = app.add_subcommand("q", "Coefficients c_ij of Q in the binomial basis");
  add_file(q);
  auto* qprime = app.add_subcommand("qprime", "The polynomial Q'(x,y)");
  add_file(qprime);

  std::string method = "all";
  auto* tutte = app.add_subcommand("tutte", "Tutte polynomial of a matroid");
  add_file(tutte);
  tutte->add_option("--method", method, "subset, delcon, activity or lattice")
      ->check(CLI::IsMember({"all", "subset", "delcon", "activity", "lattice"}));

  std::string order;
  bool want_enum = false, want_int = false, want_ext = false;
  auto* act = app.add_subcommand("activities", "Activities of every base");
  add_file(act);
  act->add_option("--order", order, "Order as a permutation, e.g. 2,3,1");
  auto* f1 = act->add_flag("--enumerator", want_enum);
  auto* f2 = act->add_flag("--internal", want_int);
  auto* f3 = act->add_flag("--external", want_ext);
  f1->excludes(f2)->excludes(f3);
  f2->excludes(f3);

  auto* dawson = app.add_subcommand("dawson", "Interval partition, top degree faces, coefficient checks");
  add_file(dawson);

  int s = 1;
  auto* dual = app.add_subcommand("dual", "s-dual");
  add_file(dual);
  dual->add_option("--s", s, "Parameter s")->required();

  auto* dsum = app.add_subcommand("dsum", "Direct sum of two documents");
  dsum->add_option("FILE1", file, "first document")->required();
  dsum->add_option("FILE2", file2, "second document")->required();

  int element = 0, level = 0;
  auto* slice = app.add_subcommand("slice", "One slice along an element");
  add_file(slice);
  slice->add_option("--element", element, "Element a")->required();
  slice->add_option("--level", level, "Value of x_a")->required();

  std::string set_text;
  auto* relax = app.add_subcommand("relax", "Relax a circuit-hyperplane");
  add_file(relax);
  relax->add_option("--set", set_text, "The set, e.g. 1,2")->required();

  std::string family, params;
  std::uint64_t seed = 1;
  auto* gen = app.add_subcommand("gen", "Emit a corpus document");
  gen->add_option("--family", family, "Family")
      ->required()
      ->check(CLI::IsMember({"uniform", "graphic-k4", "worked-ex1", "worked-ex75",
                             "random-polymatroid"}));
  gen->add_option("--params", params, "key=value,... (r,n | scale | n,max)");
  gen->add_option("--seed", seed, "Seed for random-polymatroid");

  auto* verify = app.add_subcommand("verify", "Run every applicable identity check");
  add_file(verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  CLI::App* sub = app.get_subcommands().front();
  const Output out{json, sub->get_name()};
  try {
    if (sub == gen) {
      std::string name;
      const Polymatroid m = generate(family, params, seed, name);
      emit_document(out, name, m);
      return 0;
    }
    if (sub == dsum) {
      const auto a = polyq::read_document(file);
      const auto b = polyq::read_document(file2);
      emit_document(out, a.name.empty() || b.name.empty()
                             ? std::string()
                             : a.name + "+" + b.name,
                    polyq::direct_sum(a.m, b.m));
      return 0;
    }
    const auto doc = polyq::read_document(file);
    const Polymatroid& m = doc.m;
    auto derived = [&](const std::string& suffix) {
      return doc.name.empty() ? std::string() : doc.name + suffix;
    };
    if (sub == info) {
      cmd_info(out, doc);
    } else if (sub == count) {
      cmd_count(out, m, t, u, emit_points);
    } else if (sub == q) {
      cmd_q(out, m);
    } else if (sub == qprime) {
      const std::string p = polyq::q_prime(m).to_string();
      out.emit(p, p);
    } else if (sub == tutte) {
      cmd_tutte(out, m, method);
    } else if (sub == act) {
      cmd_activities(out, m, order,
                     want_enum  ? "enumerator"
                     : want_int ? "internal"
                     : want_ext ? "external"
                                : "");
    } else if (sub == dawson) {
      cmd_dawson(out, m);
    } else if (sub == dual) {
      emit_document(out, derived("_dual" + std::to_string(s)),
                    polyq::s_dual(m, s));
    } else if (sub == slice) {
      const auto fam = polyq::slices(m, element);
      if (level < fam.k_min || level > fam.k_max) {
        throw Error(ErrorKind::kInvalidInput,
                    "level must lie in " + std::to_string(fam.k_min) + ".." +
                        std::to_string(fam.k_max));
      }
      emit_document(out,
                    derived("_slice" + std::to_string(element) + "_" +
                            std::to_string(level)),
                    fam.levels[level - fam.k_min]);
    } else if (sub == relax) {
      emit_document(out, derived("_relaxed"),
                    polyq::relax_circuit_hyperplane(m, parse_set(set_text, m.n())));
    } else if (sub == verify) {
      return cmd_verify(out, doc);
    }
    return 0;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return polyq::is_integrity_failure(e.kind()) ? kExitIntegrity : kExitDomain;
  }
}
