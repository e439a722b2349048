#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "exotic/conormal.hpp"
#include "exotic/fixtures.hpp"
#include "exotic/rank_profile.hpp"

namespace exotic {

/// An enhanced orbit label together with a tableau of shape mu+nu; the
/// right-hand side of the correspondence.
struct TaggedPair {
  Bipartition label;
  StandardTableau tableau;

  std::strong_ordering operator<=>(const TaggedPair& o) const {
    if (auto c = label <=> o.label; c != 0) return c;
    return tableau <=> o.tableau;
  }
  bool operator==(const TaggedPair& o) const { return label == o.label && tableau == o.tableau; }

  std::string to_string() const { return label.to_string() + "|" + tableau.to_string(); }
};

/// All tagged pairs for a given n, in canonical order.
inline std::vector<TaggedPair> enumerate_tagged_pairs(int n) {
  std::vector<TaggedPair> out;
  for (const auto& bp : balanced_bipartitions(n))
    for (const auto& t : enumerate_tableaux(bp.mu.plus(bp.nu))) out.push_back({bp, t});
  return out;
}

struct RskConfig {
  std::uint64_t seed = 1;
  int samples = 8;
};

struct RskRow {
  OrbitParam param;
  TaggedPair value;
  int agreement;  // votes for the winning value
  int samples;
  int stratum_dim;   // dimension of the (v,u,x)-stratum of the winning label
  int springer_dim;  // dimension of the Springer stratum of the tableau shape
};

/// The correspondence at a single orbit parameter: sample the conormal space
/// over a representative, classify each sample, and take the majority value.
/// `index` is the parameter's position in the canonical enumeration, used to
/// derive the per-parameter random stream.
inline RskRow exotic_rsk(const OrbitParam& p, PrimeField field, const RskConfig& cfg,
                         std::uint64_t index) {
  SplitMix64 rng = SplitMix64(cfg.seed).fork(index);
  SymplecticPoint rep = representative(p, field, rng.next());
  AffineSpace fiber = conormal_fiber(rep);

  std::map<std::string, std::pair<TaggedPair, int>> votes;
  for (int s = 0; s < cfg.samples; ++s) {
    ConormalSample sample = unpack_sample(rep, fiber.random_point(rng));
    TaggedPair value{enhanced_orbit(sample.x, sample.v), tableau_of(sample.x, sample.flag)};
    auto [it, inserted] = votes.try_emplace(value.to_string(), value, 0);
    ++it->second.second;
  }
  int threshold = std::min(cfg.samples, (cfg.samples + 1) / 2 + 1);
  const std::pair<TaggedPair, int>* winner = nullptr;
  for (const auto& [key, entry] : votes)
    if (entry.second >= threshold) winner = &entry;
  if (winner == nullptr)
    throw error(errc::genericity_unstable,
                "no value reached the majority threshold at " + print_param(p));

  const TaggedPair& value = winner->first;
  if (!is_balanced(value.label))
    throw error(errc::invalid_recursion, "sampled label is not balanced at " + print_param(p));
  if (!(value.tableau.shape() == value.label.mu.plus(value.label.nu)))
    throw error(errc::invalid_recursion, "tableau shape mismatch at " + print_param(p));

  int n = p.n2() / 2;
  return {p,
          value,
          winner->second,
          cfg.samples,
          pair_stratum_dim(n, value.label),
          springer_stratum_dim(value.tableau.shape())};
}

inline std::uint64_t param_index(const OrbitParam& p) {
  auto all = enumerate_orbit_params(p.n2() / 2);
  auto it = std::find(all.begin(), all.end(), p);
  if (it == all.end()) throw error(errc::bad_argument, "unknown orbit parameter");
  return static_cast<std::uint64_t>(it - all.begin());
}

inline RskRow exotic_rsk(const OrbitParam& p, PrimeField field, const RskConfig& cfg) {
  return exotic_rsk(p, field, cfg, param_index(p));
}

struct RskTable {
  std::vector<RskRow> rows;
  bool bijective = false;
  std::vector<std::string> collisions;  // tagged pairs hit more than once
  std::vector<std::string> omissions;   // tagged pairs never hit
};

/// The full correspondence for a given n, with the global bijectivity check
/// onto the tagged pairs — the arbiter of the genericity protocol.
inline RskTable rsk_table(int n, PrimeField field, const RskConfig& cfg) {
  RskTable table{{}, true, {}, {}};
  auto params = enumerate_orbit_params(n);
  for (std::size_t i = 0; i < params.size(); ++i)
    table.rows.push_back(exotic_rsk(params[i], field, cfg, i));

  std::map<std::string, int> hits;
  for (const auto& pair : enumerate_tagged_pairs(n)) hits[pair.to_string()] = 0;
  for (const auto& row : table.rows) {
    auto it = hits.find(row.value.to_string());
    if (it == hits.end())
      table.collisions.push_back("unexpected value " + row.value.to_string());
    else
      ++it->second;
  }
  for (const auto& [key, count] : hits) {
    if (count == 0) table.omissions.push_back(key);
    if (count > 1) table.collisions.push_back(key + " hit " + std::to_string(count) + " times");
  }
  table.bijective = table.collisions.empty() && table.omissions.empty();
  return table;
}

}  // namespace exotic
