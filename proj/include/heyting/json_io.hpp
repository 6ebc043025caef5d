#pragma once

#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "heyting/algebra.hpp"
#include "heyting/poset.hpp"

namespace heyting {

// canonical JSON formats:
//   {"kind":"poset","points":N,"leq":[[i,j],...]}
//   {"kind":"lattice","size":N,"leq":[[i,j],...]}
// leq lists the full relation; reflexive pairs may be omitted

inline std::vector<std::pair<int, int>> leq_pairs_from_json(const nlohmann::json& j,
                                                            const std::string& file) {
  if (!j.contains("leq") || !j["leq"].is_array())
    throw FormatError("missing or non-array 'leq'", file, "leq");
  std::vector<std::pair<int, int>> pairs;
  for (const auto& p : j["leq"]) {
    if (!p.is_array() || p.size() != 2 || !p[0].is_number_integer() ||
        !p[1].is_number_integer())
      throw FormatError("'leq' entries must be integer pairs", file, "leq");
    pairs.emplace_back(p[0].get<int>(), p[1].get<int>());
  }
  return pairs;
}

inline Poset poset_from_json(const nlohmann::json& j, const std::string& file) {
  if (!j.contains("points") || !j["points"].is_number_integer())
    throw FormatError("missing integer 'points'", file, "points");
  try {
    return Poset(j["points"].get<int>(), leq_pairs_from_json(j, file));
  } catch (const NotAPoset& e) {
    throw FormatError(e.what(), file, "leq");
  }
}

inline nlohmann::json poset_to_json(const Poset& p) {
  nlohmann::json j;
  j["kind"] = "poset";
  j["points"] = p.size();
  j["leq"] = nlohmann::json::array();
  for (auto [a, b] : p.relation_pairs()) j["leq"].push_back({a, b});
  return j;
}

inline nlohmann::json lattice_to_json(const HeytingAlgebra& A) {
  nlohmann::json j;
  j["kind"] = "lattice";
  j["size"] = A.n;
  j["leq"] = nlohmann::json::array();
  for (int a = 0; a < A.n; ++a)
    for (int b = A.upset[a].first(); b >= 0; b = A.upset[a].next(b))
      if (a != b) j["leq"].push_back({a, b});
  return j;
}

// accepts both kinds; posets go through the downset construction
inline HeytingAlgebra lattice_from_json(const nlohmann::json& j, const std::string& file,
                                        HeytingAlgebra::Mode mode) {
  if (!j.contains("kind") || !j["kind"].is_string())
    throw FormatError("missing 'kind'", file, "kind");
  std::string kind = j["kind"].get<std::string>();
  if (kind == "poset") return downset_algebra(poset_from_json(j, file)).algebra;
  if (kind == "lattice") {
    if (!j.contains("size") || !j["size"].is_number_integer())
      throw FormatError("missing integer 'size'", file, "size");
    try {
      Poset order(j["size"].get<int>(), leq_pairs_from_json(j, file));
      return build_from_order(order, mode).algebra;
    } catch (const NotAPoset& e) {
      throw FormatError(e.what(), file, "leq");
    }
  }
  throw FormatError("unknown kind '" + kind + "'", file, "kind");
}

inline nlohmann::json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open file", path.string(), "");
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("invalid JSON: ") + e.what(), path.string(), "");
  }
  return j;
}

inline void write_json_file(const std::filesystem::path& path, const nlohmann::json& j) {
  std::ofstream out(path);
  if (!out) throw FormatError("cannot write file", path.string(), "");
  out << j.dump(2) << '\n';
}

inline HeytingAlgebra load_lattice_file(const std::filesystem::path& path,
                                        HeytingAlgebra::Mode mode =
                                            HeytingAlgebra::Mode::heyting) {
  return lattice_from_json(read_json_file(path), path.string(), mode);
}

// sections serialize as arrays of per-coordinate element indices; the header
// documents the MinSpace ordering
inline nlohmann::json sections_to_json(const std::vector<std::vector<int>>& sections,
                                       const std::vector<int>& generators) {
  nlohmann::json j;
  j["coordinate_order"] = "minimal prime filters by generator index";
  j["generators"] = generators;
  j["sections"] = sections;
  return j;
}

}  // namespace heyting
