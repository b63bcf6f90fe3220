//
// Project kpath - Copyright 2026 kpath developers.
// SPDX-License-Identifier: Apache-2.0
//
#pragma once

#include <cstdint>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <span>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "kpath/graph.hpp"

namespace kpath {

// Split tag: "train" / "valid" / "test" or a fold index.
using SplitTag = std::variant<std::string, std::int64_t>;

struct DatasetRecord {
  Graph graph;  // targets (y) live on the graph
  std::optional<SplitTag> split;

  bool operator==(const DatasetRecord&) const = default;
};

inline bool is_split(const DatasetRecord& rec, const std::string& name) {
  return rec.split && std::holds_alternative<std::string>(*rec.split) &&
         std::get<std::string>(*rec.split) == name;
}

// JSON Lines layout, one record per line:
//   {"id": "...", "num_nodes": N, "edges": [[u,v],...],
//    "features": [[...],...] | null, "y": {"<target>": value, ...},
//    "split": "train"|"valid"|"test"|<fold:int>|null}
// Edges are listed once per unordered pair with u < v. Target values are
// integers (class index / count), reals, or integer arrays (label sets).

inline nlohmann::ordered_json record_to_json(const DatasetRecord& rec) {
  nlohmann::ordered_json j;
  const Graph& g = rec.graph;
  j["id"] = g.id();
  j["num_nodes"] = g.num_nodes();
  auto edges = nlohmann::ordered_json::array();
  for (const auto& [u, v] : g.edges()) {
    edges.push_back(nlohmann::ordered_json::array({u, v}));
  }
  j["edges"] = std::move(edges);
  if (g.features()) {
    j["features"] = *g.features();
  } else {
    j["features"] = nullptr;
  }
  auto y = nlohmann::ordered_json::object();
  for (const auto& [name, value] : g.targets()) {
    if (std::holds_alternative<std::int64_t>(value)) {
      y[name] = std::get<std::int64_t>(value);
    } else if (std::holds_alternative<double>(value)) {
      y[name] = std::get<double>(value);
    } else {
      y[name] = std::get<std::vector<std::int64_t>>(value);
    }
  }
  j["y"] = std::move(y);
  if (!rec.split) {
    j["split"] = nullptr;
  } else if (std::holds_alternative<std::string>(*rec.split)) {
    j["split"] = std::get<std::string>(*rec.split);
  } else {
    j["split"] = std::get<std::int64_t>(*rec.split);
  }
  return j;
}

inline DatasetRecord record_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw std::runtime_error("record must be a JSON object");
  if (!j.contains("id") || !j["id"].is_string()) {
    throw std::runtime_error("record requires a string \"id\"");
  }
  if (!j.contains("num_nodes") || !j["num_nodes"].is_number_integer() ||
      j["num_nodes"].get<std::int64_t>() < 0) {
    throw std::runtime_error("record requires a non-negative integer \"num_nodes\"");
  }
  if (j["num_nodes"].get<std::int64_t>() > 0x7FFFFFFF) {
    throw std::runtime_error("\"num_nodes\" is implausibly large");
  }
  if (!j.contains("edges") || !j["edges"].is_array()) {
    throw std::runtime_error("record requires an \"edges\" array");
  }
  const auto num_nodes = j["num_nodes"].get<std::uint32_t>();
  EdgeList edges;
  for (const auto& e : j["edges"]) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
        !e[1].is_number_integer() || e[0].get<std::int64_t>() < 0 ||
        e[1].get<std::int64_t>() < 0) {
      throw std::runtime_error("each edge must be a pair of non-negative node ids");
    }
    const auto a = e[0].get<std::int64_t>();
    const auto b = e[1].get<std::int64_t>();
    if (a >= num_nodes || b >= num_nodes) {
      throw std::runtime_error("edge (" + std::to_string(a) + "," + std::to_string(b) +
                               ") out of range for " + std::to_string(num_nodes) + " nodes");
    }
    if (a == b) {
      throw std::runtime_error("self-loop (" + std::to_string(a) + "," +
                               std::to_string(b) + ") is not allowed");
    }
    edges.emplace_back(static_cast<NodeId>(a), static_cast<NodeId>(b));
  }
  std::optional<FeatureMatrix> features;
  if (j.contains("features") && !j["features"].is_null()) {
    if (!j["features"].is_array()) {
      throw std::runtime_error("\"features\" must be an array of rows or null");
    }
    FeatureMatrix rows;
    for (const auto& row : j["features"]) {
      if (!row.is_array()) throw std::runtime_error("feature rows must be arrays");
      std::vector<double> r;
      for (const auto& x : row) {
        if (!x.is_number()) throw std::runtime_error("feature entries must be numbers");
        r.push_back(x.get<double>());
      }
      rows.push_back(std::move(r));
    }
    features = std::move(rows);
  }
  TargetMap targets;
  if (j.contains("y") && !j["y"].is_null()) {
    if (!j["y"].is_object()) throw std::runtime_error("\"y\" must be an object");
    for (const auto& [name, value] : j["y"].items()) {
      if (value.is_number_integer()) {
        targets[name] = value.get<std::int64_t>();
      } else if (value.is_number_float()) {
        targets[name] = value.get<double>();
      } else if (value.is_array()) {
        std::vector<std::int64_t> labels;
        for (const auto& x : value) {
          if (!x.is_number_integer()) {
            throw std::runtime_error("label sets must contain integers");
          }
          labels.push_back(x.get<std::int64_t>());
        }
        targets[name] = std::move(labels);
      } else {
        throw std::runtime_error("target \"" + name +
                                 "\" must be a number or an integer array");
      }
    }
  }
  std::optional<SplitTag> split;
  if (j.contains("split") && !j["split"].is_null()) {
    const auto& s = j["split"];
    if (s.is_string()) {
      const auto tag = s.get<std::string>();
      if (tag != "train" && tag != "valid" && tag != "test") {
        throw std::runtime_error("split string must be train, valid or test");
      }
      split = tag;
    } else if (s.is_number_integer()) {
      split = s.get<std::int64_t>();
    } else {
      throw std::runtime_error("\"split\" must be a string, an integer or null");
    }
  }
  Graph g(j["id"].get<std::string>(), num_nodes, edges, std::move(features),
          std::move(targets));
  return DatasetRecord{std::move(g), std::move(split)};
}

inline void write_dataset(std::span<const DatasetRecord> records, std::ostream& out) {
  for (const auto& rec : records) {
    out << record_to_json(rec).dump() << '\n';
  }
}

inline void write_dataset(std::span<const DatasetRecord> records, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  write_dataset(records, out);
}

inline std::vector<DatasetRecord> read_dataset(std::istream& in) {
  std::vector<DatasetRecord> records;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    try {
      records.push_back(record_from_json(nlohmann::json::parse(line)));
    } catch (const std::exception& e) {
      throw std::runtime_error("line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return records;
}

inline std::vector<DatasetRecord> read_dataset(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return read_dataset(in);
}

}  // namespace kpath
