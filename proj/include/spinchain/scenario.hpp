// Scenario catalog and runner. A Scenario bundles a chain configuration, an
// initial state, the observable channels to record, and a time grid; the
// bundled catalog (data/scenarios.json, embedded at build time) defines the
// standard runs fig1a..fig7.
//
// Catalog entries keep chain-length-dependent sites symbolic ("N", "N-1",
// "middle", ...) so one entry covers every configured N; make_scenario
// resolves them for a concrete chain.
#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "spinchain/evolution.hpp"
#include "spinchain/model.hpp"
#include "spinchain/observables.hpp"
#include "spinchain/states.hpp"
#include "spinchain/timeseries.hpp"
#include "spinchain/types.hpp"

#include <spinchain/catalog_data.hpp>

namespace spinchain::scenarios {

enum class InitKind { AllUp, FirstDown, Bell12 };

inline InitKind init_kind_from_name(const std::string& name) {
  if (name == "all-up") return InitKind::AllUp;
  if (name == "first-down") return InitKind::FirstDown;
  if (name == "bell12") return InitKind::Bell12;
  throw std::invalid_argument("spinchain: unknown init '" + name +
                              "' (expected all-up, first-down or bell12)");
}

inline Vector initial_state(InitKind kind, int n_spins) {
  switch (kind) {
    case InitKind::AllUp: return states::all_up_vector(n_spins);
    case InitKind::FirstDown: return states::first_down_vector(n_spins);
    case InitKind::Bell12: return states::bell12_vector(n_spins);
  }
  throw std::invalid_argument("spinchain: unknown init kind");
}

struct Scenario {
  std::string id = "custom";
  model::SpinChainConfig config;
  InitKind init = InitKind::AllUp;
  std::vector<std::pair<int, int>> pairs;  // concurrence channels C_m_n
  std::vector<int> spins;                  // polarization channels P_n
  evolution::TimeGrid grid;
};

// ---- symbolic sites ----

namespace detail {

// Site tokens: "<int>", "N", "N-<k>", "middle", "middle+1", and (for channel
// lists) "d1"/"d2" = the selectively driven pair.
inline int resolve_site(const std::string& token, int n_spins, int d1, int d2) {
  const int middle = (n_spins + 1) / 2;
  int site = 0;
  if (token == "N")
    site = n_spins;
  else if (token.rfind("N-", 0) == 0)
    site = n_spins - std::stoi(token.substr(2));
  else if (token == "middle")
    site = middle;
  else if (token == "middle+1")
    site = middle + 1;
  else if (token == "d1")
    site = d1;
  else if (token == "d2")
    site = d2;
  else {
    std::size_t pos = 0;
    site = std::stoi(token, &pos);
    if (pos != token.size())
      throw std::invalid_argument("spinchain: bad site token '" + token + "'");
  }
  require_site(site, n_spins, ("site token '" + token + "'").c_str());
  return site;
}

}  // namespace detail

// ---- catalog ----

struct CatalogEntry {
  std::string id;
  std::string title;
  std::vector<int> n_values;  // chain lengths the entry is defined for
  double j = 1.0;
  model::Drive::Kind drive_kind = model::Drive::Kind::All;
  double omega1 = 0.0;                        // uniform drive
  std::string drive_m, drive_n;               // selective drive (symbolic)
  double omega_x = 0.0;
  InitKind init = InitKind::AllUp;
  std::vector<std::pair<std::string, std::string>> pairs;
  std::vector<std::string> spins;             // empty = none; {"all"} = every spin
  double t_start = 0.0, t_end = 0.0, dt = 0.0;
};

// Resolve a catalog entry for a concrete chain length.
inline Scenario make_scenario(const CatalogEntry& entry, int n_spins) {
  Scenario s;
  s.id = entry.id;
  s.config.n_spins = n_spins;
  s.config.j = entry.j;
  int d1 = 0, d2 = 0;
  if (entry.drive_kind == model::Drive::Kind::All) {
    s.config.omega1 = entry.omega1;
  } else {
    d1 = detail::resolve_site(entry.drive_m, n_spins, 0, 0);
    d2 = detail::resolve_site(entry.drive_n, n_spins, 0, 0);
    s.config.drive = {model::Drive::Kind::Selective, d1, d2, entry.omega_x};
  }
  s.init = entry.init;
  for (const auto& [a, b] : entry.pairs) {
    int m = detail::resolve_site(a, n_spins, d1, d2);
    int n = detail::resolve_site(b, n_spins, d1, d2);
    if (m == n) throw std::invalid_argument("spinchain: pair needs two distinct spins");
    if (m > n) std::swap(m, n);
    s.pairs.emplace_back(m, n);
  }
  if (entry.spins.size() == 1 && entry.spins.front() == "all") {
    for (int k = 1; k <= n_spins; ++k) s.spins.push_back(k);
  } else {
    for (const auto& token : entry.spins)
      s.spins.push_back(detail::resolve_site(token, n_spins, d1, d2));
  }
  s.grid = evolution::TimeGrid::make(entry.t_start, entry.t_end, entry.dt);
  s.config.validate();
  return s;
}

class Catalog {
 public:
  static Catalog from_json(const nlohmann::json& doc) {
    if (!doc.contains("scenarios") || !doc["scenarios"].is_array())
      throw std::invalid_argument("spinchain: catalog needs a 'scenarios' array");
    Catalog catalog;
    for (const auto& node : doc["scenarios"]) {
      CatalogEntry e;
      e.id = node.at("id").get<std::string>();
      e.title = node.value("title", std::string{});
      e.n_values = node.at("n").get<std::vector<int>>();
      e.j = node.value("j", 1.0);
      const auto& drive = node.at("drive");
      const auto kind = drive.at("kind").get<std::string>();
      if (kind == "all") {
        e.drive_kind = model::Drive::Kind::All;
        e.omega1 = drive.at("omega1").get<double>();
      } else if (kind == "selective") {
        e.drive_kind = model::Drive::Kind::Selective;
        e.omega_x = drive.at("omega_x").get<double>();
        const auto& pair = drive.at("pair");
        if (pair.is_string() && pair.get<std::string>() == "middle") {
          e.drive_m = "middle";
          e.drive_n = "middle+1";
        } else {
          e.drive_m = pair.at(0).get<std::string>();
          e.drive_n = pair.at(1).get<std::string>();
        }
      } else {
        throw std::invalid_argument("spinchain: unknown drive kind '" + kind + "'");
      }
      e.init = init_kind_from_name(node.at("init").get<std::string>());
      for (const auto& pair : node.at("pairs"))
        e.pairs.emplace_back(pair.at(0).get<std::string>(), pair.at(1).get<std::string>());
      const auto& spins = node.at("spins");
      if (spins.is_string())
        e.spins = {spins.get<std::string>()};
      else
        e.spins = spins.get<std::vector<std::string>>();
      const auto& grid = node.at("grid");
      e.t_start = grid.value("t_start", 0.0);
      e.t_end = grid.at("t_end").get<double>();
      e.dt = grid.at("dt").get<double>();
      catalog.entries_.push_back(std::move(e));
    }
    return catalog;
  }

  // The catalog compiled into the library from data/scenarios.json.
  static const Catalog& bundled() {
    static const Catalog catalog =
        from_json(nlohmann::json::parse(detail::kCatalogJson));
    return catalog;
  }

  const std::vector<CatalogEntry>& entries() const { return entries_; }

  const CatalogEntry& entry(const std::string& id) const {
    for (const auto& e : entries_)
      if (e.id == id) return e;
    throw std::out_of_range("spinchain: no catalog scenario named '" + id + "'");
  }

  bool has(const std::string& id) const {
    for (const auto& e : entries_)
      if (e.id == id) return true;
    return false;
  }

 private:
  std::vector<CatalogEntry> entries_;
};

// ---- runner ----

inline std::string polarization_channel_name(int n) { return "P_" + std::to_string(n); }
inline std::string concurrence_channel_name(int m, int n) {
  return "C_" + std::to_string(m) + "_" + std::to_string(n);
}

// Evolve the scenario's initial state and fold the requested channels per
// grid point (states are not stored). The optional observer sees every
// evolved state, e.g. for invariant audits.
inline series::TimeSeries run_scenario(const Scenario& s,
                                       const evolution::VectorSink& observer = {}) {
  s.config.validate();
  const int n_spins = s.config.n_spins;
  for (int spin : s.spins) require_site(spin, n_spins, "polarization spin");
  for (const auto& [m, n] : s.pairs) {
    require_site(m, n_spins, "pair spin");
    require_site(n, n_spins, "pair spin");
    if (m == n) throw std::invalid_argument("spinchain: pair needs two distinct spins");
  }

  const model::Hamiltonian h = s.config.drive.kind == model::Drive::Kind::Selective
                                   ? model::selective_hamiltonian(s.config)
                                   : model::rotating_hamiltonian(s.config);
  const Vector psi0 = initial_state(s.init, n_spins);

  series::TimeSeries out;
  out.grid = s.grid;
  for (int spin : s.spins) out.add_channel(polarization_channel_name(spin));
  for (const auto& [m, n] : s.pairs) out.add_channel(concurrence_channel_name(m, n));

  evolution::evolve_state(h.matrix, psi0, s.grid,
                          [&](std::size_t i, double t, const Vector& psi) {
                            std::size_t c = 0;
                            for (int spin : s.spins)
                              out.values[c++].push_back(observables::polarization(psi, spin));
                            for (const auto& [m, n] : s.pairs)
                              out.values[c++].push_back(observables::concurrence(psi, m, n));
                            if (observer) observer(i, t, psi);
                          });
  return out;
}

}  // namespace spinchain::scenarios
