#pragma once

#include <json.hpp>

#include <sstream>
#include <string>

#include "exotic/fixtures.hpp"
#include "exotic/rsk.hpp"
#include "exotic/verify.hpp"

namespace exotic {

using ordered_json = nlohmann::ordered_json;

constexpr const char* schema_version = "exotic-rsk/1";

struct RunConfig {
  int n = 2;
  std::uint64_t prime = PrimeField::default_prime;
  std::uint64_t seed = 1;
  int samples = 8;
  std::string format = "json";  // json | csv | dot
  bool slow = false;

  int max_n() const { return slow ? 4 : 3; }
};

inline ordered_json partition_json(const Partition& p) {
  ordered_json arr = ordered_json::array();
  for (int part : p.parts()) arr.push_back(part);
  return arr;
}

inline Partition partition_from_json(const ordered_json& j) {
  std::vector<int> parts;
  for (const auto& v : j) parts.push_back(v.get<int>());
  return Partition(std::move(parts));
}

inline std::string descents_text(const std::set<int>& des) {
  std::string s = "{";
  bool first = true;
  for (int d : des) {
    if (!first) s += ";";
    s += std::to_string(d);
    first = false;
  }
  return s + "}";
}

inline std::uint64_t row_checksum(const RskRow& row) {
  return fnv1a(print_param(row.param) + "|" + row.value.label.to_string() + "|" +
               row.value.tableau.to_string() + "|" + std::to_string(row.stratum_dim) + "|" +
               std::to_string(row.springer_dim));
}

inline std::string hex64(std::uint64_t v) {
  std::ostringstream os;
  os << std::hex << v;
  return os.str();
}

inline ordered_json config_json(const RunConfig& cfg, const std::string& command) {
  ordered_json j;
  j["schema"] = schema_version;
  j["command"] = command;
  j["n"] = cfg.n;
  j["prime"] = cfg.prime;
  j["seed"] = cfg.seed;
  return j;
}

// ---- rsk ----

inline ordered_json rsk_row_json(const RskRow& row) {
  ordered_json j;
  j["param"] = print_param(row.param);
  j["mu"] = partition_json(row.value.label.mu);
  j["nu"] = partition_json(row.value.label.nu);
  ordered_json chain = ordered_json::array();
  for (const auto& p : row.value.tableau.chain()) chain.push_back(partition_json(p));
  j["tableau_chain"] = chain;
  ordered_json des = ordered_json::array();
  for (int d : row.value.tableau.descent_set()) des.push_back(d);
  j["descents"] = des;
  j["z_dim"] = row.stratum_dim;
  j["springer_dim"] = row.springer_dim;
  j["checksum"] = hex64(row_checksum(row));
  return j;
}

/// Round-trip of the documented row schema back into a (label, tableau) pair.
inline TaggedPair tagged_pair_from_json(const ordered_json& j) {
  std::vector<Partition> chain;
  for (const auto& p : j.at("tableau_chain")) chain.push_back(partition_from_json(p));
  return TaggedPair{{partition_from_json(j.at("mu")), partition_from_json(j.at("nu"))},
                    StandardTableau::from_chain(std::move(chain))};
}

inline std::string rsk_json(const RskTable& table, const RunConfig& cfg, bool with_verdict) {
  ordered_json j = config_json(cfg, "rsk");
  j["samples"] = cfg.samples;
  ordered_json rows = ordered_json::array();
  std::string all_rows_text;
  for (const auto& row : table.rows) {
    rows.push_back(rsk_row_json(row));
    all_rows_text += hex64(row_checksum(row)) + "\n";
  }
  j["rows"] = rows;
  if (with_verdict) {
    j["bijective"] = table.bijective;
    j["collisions"] = table.collisions;
    j["omissions"] = table.omissions;
  }
  j["table_checksum"] = hex64(fnv1a(all_rows_text));
  return j.dump(2) + "\n";
}

inline std::string rsk_csv(const RskTable& table, bool with_verdict) {
  std::string s = "param,mu,nu,tableau,descents,z_dim,springer_dim,checksum\n";
  for (const auto& row : table.rows) {
    s += print_param(row.param) + "," + row.value.label.mu.to_string() + "," +
         row.value.label.nu.to_string() + "," + row.value.tableau.to_string() + "," +
         descents_text(row.value.tableau.descent_set()) + "," + std::to_string(row.stratum_dim) +
         "," + std::to_string(row.springer_dim) + "," + hex64(row_checksum(row)) + "\n";
  }
  if (with_verdict) s += "# bijective=" + std::string(table.bijective ? "true" : "false") + "\n";
  return s;
}

// ---- enumerate ----

struct EnumeratedOrbit {
  OrbitParam param;
  int stabilizer;
  int orbit_dimension;
};

inline std::vector<EnumeratedOrbit> enumerate_with_dims(int n, PrimeField field,
                                                        std::uint64_t seed) {
  std::vector<EnumeratedOrbit> out;
  SplitMix64 rng(seed);
  for (const auto& p : enumerate_orbit_params(n)) {
    SymplecticPoint rep = representative(p, field, rng.next());
    int stab = stabilizer_dim(rep);
    out.push_back({p, stab, n * (2 * n + 1) - stab});
  }
  return out;
}

inline std::string enumerate_json(const std::vector<EnumeratedOrbit>& orbits,
                                  const RunConfig& cfg) {
  ordered_json j = config_json(cfg, "enumerate");
  j["count"] = orbits.size();
  j["formula"] = orbit_count_formula(cfg.n);
  j["count_matches_formula"] = orbits.size() == orbit_count_formula(cfg.n);
  ordered_json rows = ordered_json::array();
  for (const auto& o : orbits) {
    ordered_json row;
    row["param"] = print_param(o.param);
    row["stabilizer_dim"] = o.stabilizer;
    row["orbit_dim"] = o.orbit_dimension;
    rows.push_back(row);
  }
  j["orbits"] = rows;
  return j.dump(2) + "\n";
}

inline std::string enumerate_csv(const std::vector<EnumeratedOrbit>& orbits,
                                 const RunConfig& cfg) {
  std::string s = "# count=" + std::to_string(orbits.size()) +
                  " formula=" + std::to_string(orbit_count_formula(cfg.n)) +
                  (orbits.size() == orbit_count_formula(cfg.n) ? " OK" : " MISMATCH") + "\n";
  s += "param,stabilizer_dim,orbit_dim\n";
  for (const auto& o : orbits)
    s += print_param(o.param) + "," + std::to_string(o.stabilizer) + "," +
         std::to_string(o.orbit_dimension) + "\n";
  return s;
}

// ---- hasse ----

struct HasseReport {
  std::vector<OrbitParam> nodes;
  std::vector<std::pair<int, int>> candidate_covers;    // transitive reduction
  std::vector<std::pair<int, int>> fixture_edges;       // n = 2 only
  std::vector<std::string> fixture_violations;          // edges failing necessity
  std::vector<std::string> candidate_only;              // covers absent from the fixture
  std::vector<std::string> fixture_only;                // fixture edges that are not covers
};

inline HasseReport hasse_report(int n) {
  HasseReport report;
  report.nodes = enumerate_orbit_params(n);
  std::size_t count = report.nodes.size();
  std::vector<std::vector<bool>> leq(count, std::vector<bool>(count, false));
  for (std::size_t i = 0; i < count; ++i)
    for (std::size_t j = 0; j < count; ++j)
      leq[i][j] = closure_necessary_leq(report.nodes[i], report.nodes[j]);
  for (std::size_t i = 0; i < count; ++i)
    for (std::size_t j = 0; j < count; ++j) {
      if (i == j || !leq[i][j]) continue;
      bool cover = true;
      for (std::size_t k = 0; k < count && cover; ++k)
        if (k != i && k != j && leq[i][k] && leq[k][j]) cover = false;
      if (cover) report.candidate_covers.emplace_back(static_cast<int>(i), static_cast<int>(j));
    }

  if (n == 2) {
    HasseFixture fx = hasse_fixture_n2();
    auto index_of = [&](const OrbitParam& p) {
      return static_cast<int>(std::find(report.nodes.begin(), report.nodes.end(), p) -
                              report.nodes.begin());
    };
    for (auto [lo, hi] : fx.edges) {
      int i = index_of(fx.nodes[lo]);
      int j = index_of(fx.nodes[hi]);
      report.fixture_edges.emplace_back(i, j);
      if (!leq[i][j])
        report.fixture_violations.push_back(print_param(fx.nodes[lo]) + " < " +
                                            print_param(fx.nodes[hi]));
    }
    auto edge_text = [&](std::pair<int, int> e) {
      return print_param(report.nodes[e.first]) + " < " + print_param(report.nodes[e.second]);
    };
    for (auto e : report.candidate_covers)
      if (std::find(report.fixture_edges.begin(), report.fixture_edges.end(), e) ==
          report.fixture_edges.end())
        report.candidate_only.push_back(edge_text(e));
    for (auto e : report.fixture_edges)
      if (std::find(report.candidate_covers.begin(), report.candidate_covers.end(), e) ==
          report.candidate_covers.end())
        report.fixture_only.push_back(edge_text(e));
  }
  return report;
}

inline std::string hasse_dot(const HasseReport& report, const RunConfig& cfg) {
  std::string s = "// candidate closure order (necessary condition), n=" + std::to_string(cfg.n) + "\n";
  s += "digraph hasse {\n  rankdir=BT;\n";
  for (std::size_t i = 0; i < report.nodes.size(); ++i)
    s += "  n" + std::to_string(i) + " [label=\"" + print_param(report.nodes[i]) + "\"];\n";
  for (auto [lo, hi] : report.candidate_covers)
    s += "  n" + std::to_string(lo) + " -> n" + std::to_string(hi) + ";\n";
  s += "}\n";
  if (cfg.n == 2) {
    s += "// reference diagram check: " +
         std::to_string(report.fixture_edges.size() - report.fixture_violations.size()) + "/" +
         std::to_string(report.fixture_edges.size()) + " edges satisfy necessity\n";
    for (const auto& v : report.fixture_violations) s += "// VIOLATION: " + v + "\n";
    s += "// candidate covers not in the reference diagram: " +
         std::to_string(report.candidate_only.size()) + "\n";
    for (const auto& e : report.candidate_only) s += "//   candidate-only: " + e + "\n";
    s += "// reference edges that are not candidate covers: " +
         std::to_string(report.fixture_only.size()) + "\n";
    for (const auto& e : report.fixture_only) s += "//   reference-only: " + e + "\n";
  }
  return s;
}

// ---- verify ----

inline std::string verify_json(const std::vector<CheckResult>& checks, const RunConfig& cfg) {
  ordered_json j = config_json(cfg, "verify");
  j["samples_per_orbit"] = cfg.samples;
  ordered_json arr = ordered_json::array();
  bool all = true;
  for (const auto& c : checks) {
    ordered_json entry;
    entry["name"] = c.name;
    entry["passed"] = c.passed;
    arr.push_back(entry);
    all = all && c.passed;
  }
  j["checks"] = arr;
  j["all_passed"] = all;
  return j.dump(2) + "\n";
}

inline std::string verify_text(const std::vector<CheckResult>& checks) {
  std::string s;
  for (const auto& c : checks) s += std::string(c.passed ? "PASS" : "FAIL") + " " + c.name + "\n";
  return s;
}

}  // namespace exotic
