#pragma once

#include <filesystem>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "heyting/duality.hpp"
#include "heyting/json_io.hpp"

namespace heyting {

struct CorpusMetadata {
  int points = 0;
  int size = 0;
  int minimum = 0;  // |Y|
  bool centrally_supplemented = false;
  bool fsi = false;
};

struct CorpusEntry {
  std::string id;
  Poset source;
  HeytingAlgebra algebra;
  CorpusMetadata meta;
};

inline CorpusMetadata corpus_metadata(const Poset& p, const HeytingAlgebra& A) {
  CorpusMetadata m;
  m.points = p.size();
  m.size = A.n;
  m.minimum = min_space(A).size();
  m.centrally_supplemented = is_centrally_supplemented(A).holds;
  m.fsi = A.fsi();
  return m;
}

// all posets on exactly n labeled points up to isomorphism, enumerated as
// transitive relations over a fixed linear extension and deduplicated by
// canonical form; counts are pinned to the known sequence
inline std::vector<Poset> enumerate_posets(int n, int max_n = 6) {
  if (n < 1 || n > max_n) throw ResourceLimit("poset enumeration limited to 1..max_n points");
  const int bits = n * (n - 1) / 2;
  std::vector<std::pair<int, int>> slots;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) slots.emplace_back(i, j);

  std::map<std::vector<uint64_t>, Poset> classes;
  for (size_t mask = 0; mask < (size_t{1} << bits); ++mask) {
    std::vector<Bits> strict(n, Bits(n));
    for (int k = 0; k < bits; ++k)
      if (mask & (size_t{1} << k)) strict[slots[k].first].set(slots[k].second);
    bool transitive = true;
    for (int i = 0; i < n && transitive; ++i)
      for (int j = strict[i].first(); j >= 0 && transitive; j = strict[i].next(j))
        if (!strict[j].subset_of(strict[i])) transitive = false;
    if (!transitive) continue;
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < n; ++i)
      for (int j = strict[i].first(); j >= 0; j = strict[i].next(j)) pairs.emplace_back(i, j);
    Poset p(n, pairs);
    classes.emplace(p.canonical_key(), std::move(p));
  }
  static const size_t known[] = {0, 1, 2, 5, 16, 63, 318};
  if (n <= 6 && classes.size() != known[n])
    throw InvariantBreach("unlabeled poset count mismatch at n = " + std::to_string(n));
  std::vector<Poset> out;
  for (auto& [key, p] : classes) out.push_back(std::move(p));
  return out;
}

inline std::vector<CorpusEntry> build_corpus(int max_points) {
  std::vector<CorpusEntry> out;
  for (int n = 1; n <= max_points; ++n) {
    auto posets = enumerate_posets(n, std::max(max_points, 6));
    for (size_t i = 0; i < posets.size(); ++i) {
      CorpusEntry e;
      char buf[32];
      std::snprintf(buf, sizeof buf, "n%d-%02zu", n, i);
      e.id = buf;
      e.source = posets[i];
      e.algebra = downset_algebra(e.source).algebra;
      e.meta = corpus_metadata(e.source, e.algebra);
      out.push_back(std::move(e));
    }
  }
  return out;
}

// the named algebras used across the paper's examples
inline std::vector<std::pair<std::string, HeytingAlgebra>> fixtures() {
  auto ds = [](const Poset& p) { return downset_algebra(p).algebra; };
  std::vector<std::pair<std::string, HeytingAlgebra>> out;
  out.emplace_back("C2", ds(Poset(1, {})));
  out.emplace_back("C3", ds(Poset(2, {{0, 1}})));
  out.emplace_back("C4", ds(Poset(3, {{0, 1}, {0, 2}, {1, 2}})));
  out.emplace_back("B4", ds(Poset(2, {})));
  out.emplace_back("L5", ds(Poset(3, {{0, 1}, {0, 2}})));
  out.emplace_back("2x3", ds(Poset(3, {{0, 1}})));
  out.emplace_back("C3xC3", ds(Poset(4, {{0, 1}, {2, 3}})));
  out.emplace_back("(2x2)+1", ds(Poset(3, {{0, 2}, {1, 2}})));
  return out;
}

inline Poset random_poset(int n, std::mt19937_64& rng, double edge_p = 0.35) {
  std::bernoulli_distribution flip(edge_p);
  std::vector<Bits> strict(n, Bits(n));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (flip(rng)) strict[i].set(j);
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      if (strict[i].get(k)) strict[i] |= strict[k];
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i)
    for (int j = strict[i].first(); j >= 0; j = strict[i].next(j)) pairs.emplace_back(i, j);
  return Poset(n, pairs);
}

inline void save_corpus(const std::vector<CorpusEntry>& entries,
                        const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  nlohmann::json index;
  index["entries"] = nlohmann::json::array();
  for (const auto& e : entries) {
    std::string file = e.id + ".json";
    write_json_file(dir / file, poset_to_json(e.source));
    index["entries"].push_back({{"id", e.id},
                                {"file", file},
                                {"points", e.meta.points},
                                {"size", e.meta.size},
                                {"minimum", e.meta.minimum},
                                {"centrally_supplemented", e.meta.centrally_supplemented},
                                {"fsi", e.meta.fsi}});
  }
  write_json_file(dir / "index.json", index);
}

inline std::vector<CorpusEntry> load_corpus(const std::filesystem::path& dir) {
  nlohmann::json index = read_json_file(dir / "index.json");
  if (!index.contains("entries") || !index["entries"].is_array())
    throw FormatError("missing 'entries'", (dir / "index.json").string(), "entries");
  std::vector<CorpusEntry> out;
  for (const auto& row : index["entries"]) {
    CorpusEntry e;
    e.id = row.at("id").get<std::string>();
    std::string file = row.at("file").get<std::string>();
    e.source = poset_from_json(read_json_file(dir / file), file);
    e.algebra = downset_algebra(e.source).algebra;
    e.meta = corpus_metadata(e.source, e.algebra);
    if (e.meta.points != row.at("points").get<int>() ||
        e.meta.size != row.at("size").get<int>() ||
        e.meta.minimum != row.at("minimum").get<int>() ||
        e.meta.centrally_supplemented != row.at("centrally_supplemented").get<bool>() ||
        e.meta.fsi != row.at("fsi").get<bool>())
      throw FormatError("stored metadata disagrees with recomputation", file, "metadata");
    out.push_back(std::move(e));
  }
  return out;
}

}  // namespace heyting
