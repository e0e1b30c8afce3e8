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

// The "polyq/1" JSON input format. A document gives n and either
//
//   "bases": [[1,0,0], [0,1,0]]
//
// or a rank table
//
//   "rank": [{"set": [], "value": 0}, {"set": [1], "value": 1}, ...]
//
// covering all 2^n subsets. A partial table needs "complete": false and
// "fill": "min-superset", which sets each missing r(S) to the least listed
// value on a superset of S. Subsets are sorted arrays of 1-based labels.

#ifndef POLYQ_DOCUMENT_HPP_
#define POLYQ_DOCUMENT_HPP_

#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "polyq/core_model.hpp"
#include "polyq/error.hpp"

namespace polyq {

inline constexpr const char* kFormatVersion = "polyq/1";

struct InputDocument {
  std::string name;
  Polymatroid m;
};

namespace detail {

inline Error document_error(const std::string& what) {
  return Error(ErrorKind::kInvalidInput, "document: " + what);
}

inline SubsetKey parse_subset(const nlohmann::json& j, int n) {
  if (!j.is_array()) throw document_error("a subset must be an array");
  SubsetKey s;
  Element last = 0;
  for (const auto& v : j) {
    if (!v.is_number_integer()) {
      throw document_error("subset labels must be integers");
    }
    const Element e = v.get<Element>();
    if (e < 1 || e > n) {
      throw document_error("label " + std::to_string(e) + " outside 1.." +
                           std::to_string(n));
    }
    if (e <= last) throw document_error("subset labels must be increasing");
    last = e;
    s = s.with(e);
  }
  return s;
}

inline std::vector<int> parse_rank_table(const nlohmann::json& doc, int n) {
  const auto& rows = doc.at("rank");
  if (!rows.is_array()) throw document_error("\"rank\" must be an array");
  const std::size_t size = std::size_t{1} << n;
  std::vector<std::optional<int>> given(size);
  for (const auto& row : rows) {
    if (!row.is_object() || !row.contains("set") || !row.contains("value")) {
      throw document_error("rank rows need \"set\" and \"value\"");
    }
    const SubsetKey s = parse_subset(row.at("set"), n);
    if (!row.at("value").is_number_integer()) {
      throw document_error("rank values must be integers");
    }
    if (given[s.bits()]) {
      throw document_error("subset " + to_string(s) + " listed twice");
    }
    given[s.bits()] = row.at("value").get<int>();
  }
  const bool complete = doc.value("complete", true);
  if (!complete) {
    if (doc.value("fill", std::string()) != "min-superset") {
      throw document_error(
          "a partial rank table needs \"fill\": \"min-superset\"");
    }
  } else if (doc.contains("fill")) {
    throw document_error("\"fill\" is only allowed with \"complete\": false");
  }
  std::vector<int> values(size);
  for (std::uint32_t s = 0; s < size; ++s) {
    if (given[s]) {
      values[s] = *given[s];
      continue;
    }
    if (complete) {
      throw document_error("rank table misses " + to_string(SubsetKey(s)));
    }
    std::optional<int> best;
    for (std::uint32_t t = s; t < size; t = (t + 1) | s) {
      if (given[t] && (!best || *given[t] < *best)) best = given[t];
    }
    if (!best) {
      throw document_error("no listed superset of " + to_string(SubsetKey(s)));
    }
    values[s] = *best;
  }
  return values;
}

inline std::vector<LatticePoint> parse_bases(const nlohmann::json& rows,
                                             int n) {
  if (!rows.is_array()) throw document_error("\"bases\" must be an array");
  std::vector<LatticePoint> bases;
  for (const auto& row : rows) {
    if (!row.is_array() || static_cast<int>(row.size()) != n) {
      throw document_error("each base must be an array of length " +
                           std::to_string(n));
    }
    LatticePoint b;
    for (const auto& v : row) {
      if (!v.is_number_integer()) {
        throw document_error("base coordinates must be integers");
      }
      b.push_back(v.get<int>());
    }
    bases.push_back(std::move(b));
  }
  return bases;
}

}  // namespace detail

namespace detail {

inline InputDocument parse_json_document(const nlohmann::json& doc) {
  if (!doc.is_object()) throw detail::document_error("expected an object");
  if (doc.value("format", std::string()) != kFormatVersion) {
    throw detail::document_error(std::string("\"format\" must be \"") +
                                 kFormatVersion + "\"");
  }
  if (!doc.contains("n") || !doc.at("n").is_number_integer()) {
    throw detail::document_error("\"n\" must be an integer");
  }
  const int n = doc.at("n").get<int>();
  GroundSet ground(n);  // range check
  const bool has_bases = doc.contains("bases");
  const bool has_rank = doc.contains("rank");
  if (has_bases == has_rank) {
    throw detail::document_error("give exactly one of \"bases\" and \"rank\"");
  }
  if (has_bases && (doc.contains("complete") || doc.contains("fill"))) {
    throw detail::document_error("\"complete\" and \"fill\" apply to rank tables");
  }
  if (doc.contains("name") && !doc.at("name").is_string()) {
    throw detail::document_error("\"name\" must be a string");
  }
  InputDocument out{
      doc.value("name", std::string()),
      has_bases ? Polymatroid::from_bases(n, detail::parse_bases(doc.at("bases"), n))
                : Polymatroid(validate_rank_function(
                      n, detail::parse_rank_table(doc, n)))};
  return out;
}

}  // namespace detail

inline InputDocument parse_document(const std::string& text) {
  try {
    return detail::parse_json_document(nlohmann::json::parse(text));
  } catch (const nlohmann::json::exception& e) {
    throw detail::document_error(e.what());
  }
}

inline InputDocument read_document(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::kInvalidInput, "cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_document(buf.str());
}

// Bases form, one base per line.
inline std::string emit_document(const std::string& name, const Polymatroid& m) {
  std::string out = std::string("{\n  \"format\": \"") + kFormatVersion + "\",\n";
  if (!name.empty()) {
    out += "  \"name\": " + nlohmann::json(name).dump() + ",\n";
  }
  out += "  \"n\": " + std::to_string(m.n()) + ",\n  \"bases\": [\n";
  const auto bases = enumerate_bases(m);
  for (std::size_t i = 0; i < bases.size(); ++i) {
    out += "    [";
    for (std::size_t j = 0; j < bases[i].size(); ++j) {
      out += (j ? ", " : "") + std::to_string(bases[i][j]);
    }
    out += i + 1 < bases.size() ? "],\n" : "]\n";
  }
  out += "  ]\n}\n";
  return out;
}

}  // namespace polyq

#endif  // POLYQ_DOCUMENT_HPP_
