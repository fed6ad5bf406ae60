// spinchain CLI: run chain simulations, the bundled figure scenarios, peak
// extraction on emitted CSVs, and the domino gate cascade.
//
// Exit codes: 0 success, 1 argument/usage error, 2 numerical-validity failure.
#include <filesystem>
#include <iostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "spinchain/spinchain.hpp"

namespace {

using namespace spinchain;

// "1-2,1-3" -> {(1,2), (1,3)}
std::vector<std::pair<int, int>> parse_pairs(const std::string& text) {
  std::vector<std::pair<int, int>> pairs;
  if (text.empty()) return pairs;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto dash = item.find('-');
    if (dash == std::string::npos)
      throw std::invalid_argument("bad pair '" + item + "' (expected m-n)");
    pairs.emplace_back(std::stoi(item.substr(0, dash)), std::stoi(item.substr(dash + 1)));
  }
  return pairs;
}

// "m,n" (or "m-n") -> (m, n)
std::pair<int, int> parse_drive_pair(const std::string& text) {
  auto sep = text.find(',');
  if (sep == std::string::npos) sep = text.find('-');
  if (sep == std::string::npos)
    throw std::invalid_argument("--drive expects 'all' or a pair m,n");
  return {std::stoi(text.substr(0, sep)), std::stoi(text.substr(sep + 1))};
}

// "1,2" -> {1, 2}
std::vector<int> parse_spins(const std::string& text) {
  std::vector<int> spins;
  if (text.empty()) return spins;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) spins.push_back(std::stoi(item));
  return spins;
}

struct SimulateArgs {
  int n = 0;
  double j = 1.0;
  double omega1 = 0.0;
  std::string drive = "all";
  double omega_x = 0.0;
  bool omega_x_given = false;
  std::string init = "all-up";
  double t_max = 40.0;
  double dt = 0.01;
  std::string pairs, spins;
  std::string format = "csv";
  std::string out;
  std::string svg;
};

void run_simulate(const SimulateArgs& args) {
  scenarios::Scenario s;
  s.config.n_spins = args.n;
  s.config.j = args.j;
  s.config.omega1 = args.omega1;
  if (args.drive != "all") {
    const auto pair = parse_drive_pair(args.drive);
    s.config.drive = {model::Drive::Kind::Selective, pair.first, pair.second,
                      args.omega_x};
  } else if (args.omega_x_given) {
    throw std::invalid_argument("--omega-x needs a selective --drive m,n");
  }
  s.init = scenarios::init_kind_from_name(args.init);
  s.pairs = parse_pairs(args.pairs);
  s.spins = parse_spins(args.spins);
  s.grid = evolution::TimeGrid::make(0.0, args.t_max, args.dt);

  const series::TimeSeries out = scenarios::run_scenario(s);
  if (args.format == "csv")
    series::emit_csv(out, args.out);
  else if (args.format == "json")
    series::emit_json(out, args.out);
  else
    throw std::invalid_argument("--format expects csv or json");
  std::cout << "wrote " << args.out << " (" << out.grid.count << " points, "
            << out.names.size() << " channels)\n";
  if (!args.svg.empty()) {
    series::emit_svg(out, args.svg);
    std::cout << "wrote " << args.svg << "\n";
  }
}

struct ScenarioArgs {
  std::string id;
  int n = 0;  // 0 = all configured chain lengths
  std::string out_dir;
};

void run_scenario_cmd(const ScenarioArgs& args) {
  const auto& entry = scenarios::Catalog::bundled().entry(args.id);
  std::vector<int> n_values = entry.n_values;
  if (args.n > 0) n_values = {args.n};
  std::filesystem::create_directories(args.out_dir);
  for (int n : n_values) {
    const auto scenario = scenarios::make_scenario(entry, n);
    const series::TimeSeries out = scenarios::run_scenario(scenario);
    const std::filesystem::path base =
        std::filesystem::path(args.out_dir) / (args.id + "_n" + std::to_string(n));
    series::emit_csv(out, base.string() + ".csv");
    series::emit_svg(out, base.string() + ".svg");
    std::cout << "wrote " << base.string() << ".csv and .svg (" << out.grid.count
              << " points, " << out.names.size() << " channels)\n";
  }
}

struct PeaksArgs {
  std::string in;
  std::string channel;
  double min_height = 0.0;
};

void run_peaks(const PeaksArgs& args) {
  if (args.min_height < 0.0)
    throw std::invalid_argument("--min-height must be >= 0");
  const series::TimeSeries in = series::read_csv(args.in);
  const auto peaks = series::find_peaks(in, args.channel, args.min_height);
  nlohmann::ordered_json doc = nlohmann::ordered_json::array();
  for (const auto& p : peaks)
    doc.push_back({{"t", p.t}, {"value", p.value}, {"index", p.index}});
  std::cout << doc.dump(2) << "\n";
}

struct DominoArgs {
  int n = 0;
  std::string seed;
};

void run_domino(const DominoArgs& args) {
  if (static_cast<int>(args.seed.size()) != args.n)
    throw std::invalid_argument("--seed-state must have exactly n characters");
  Index seed_index = 0;
  for (char c : args.seed) {
    if (c != '0' && c != '1')
      throw std::invalid_argument("--seed-state must be a bitstring of 0s and 1s");
    seed_index = (seed_index << 1) | (c == '1' ? 1 : 0);
  }
  const auto image = domino::domino_permutation(args.n);
  const Index final_index = image[static_cast<std::size_t>(seed_index)];
  std::string final_state(static_cast<std::size_t>(args.n), '0');
  int gain = 0;
  for (int k = 0; k < args.n; ++k) {
    const int before = static_cast<int>((seed_index >> (args.n - 1 - k)) & 1);
    const int after = static_cast<int>((final_index >> (args.n - 1 - k)) & 1);
    final_state[static_cast<std::size_t>(k)] = after ? '1' : '0';
    gain += after - before;  // each 0->1 flip raises total polarization by 1
  }
  nlohmann::ordered_json doc{{"final_state", final_state}, {"gain", gain}};
  std::cout << doc.dump(2) << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact entanglement dynamics in driven Ising spin-1/2 chains"};
  app.require_subcommand(1);

  SimulateArgs sim;
  auto* simulate = app.add_subcommand("simulate", "Run a custom chain and emit its time series");
  simulate->add_option("--n", sim.n, "Chain length")->required()->check(CLI::Range(1, 12));
  simulate->add_option("--j", sim.j, "Ising coupling J")->capture_default_str();
  simulate->add_option("--omega1", sim.omega1, "Uniform drive amplitude")->capture_default_str();
  simulate->add_option("--drive", sim.drive, "'all' or a driven pair m,n")->capture_default_str();
  auto* omega_x_opt =
      simulate->add_option("--omega-x", sim.omega_x, "Selective drive amplitude");
  simulate->add_option("--init", sim.init, "all-up | first-down | bell12")
      ->capture_default_str()
      ->check(CLI::IsMember({"all-up", "first-down", "bell12"}));
  simulate->add_option("--t-max", sim.t_max, "Grid end time (units 1/J)")->capture_default_str();
  simulate->add_option("--dt", sim.dt, "Grid step (units 1/J)")->capture_default_str();
  simulate->add_option("--pairs", sim.pairs, "Concurrence pairs, e.g. \"1-2,1-3\"");
  simulate->add_option("--spins", sim.spins, "Polarization spins, e.g. \"1,2\"");
  simulate->add_option("--format", sim.format, "csv | json")
      ->capture_default_str()
      ->check(CLI::IsMember({"csv", "json"}));
  simulate->add_option("--out", sim.out, "Output path")->required();
  simulate->add_option("--svg", sim.svg, "Also write an SVG plot here");
  simulate->callback([&] {
    sim.omega_x_given = omega_x_opt->count() > 0;
    run_simulate(sim);
  });

  ScenarioArgs scn;
  auto* scenario = app.add_subcommand("scenario", "Run a bundled scenario (fig1a..fig7)");
  {
    std::vector<std::string> ids;
    for (const auto& e : spinchain::scenarios::Catalog::bundled().entries())
      ids.push_back(e.id);
    scenario->add_option("id", scn.id, "Scenario id")->required()->check(CLI::IsMember(ids));
  }
  scenario->add_option("--n", scn.n, "Run a single chain length instead of all configured")
      ->check(CLI::Range(1, 12));
  scenario->add_option("--out-dir", scn.out_dir, "Directory for CSV/SVG output")->required();
  scenario->callback([&] { run_scenario_cmd(scn); });

  PeaksArgs pk;
  auto* peaks = app.add_subcommand("peaks", "Find local maxima of a CSV channel");
  peaks->add_option("--in", pk.in, "Input CSV (as written by simulate/scenario)")->required();
  peaks->add_option("--channel", pk.channel, "Channel name, e.g. C_1_2")->required();
  peaks->add_option("--min-height", pk.min_height, "Ignore maxima at or below this value")
      ->capture_default_str();
  peaks->callback([&] { run_peaks(pk); });

  DominoArgs dom;
  auto* domino_cmd = app.add_subcommand("domino", "Apply the CNOT domino cascade to a basis state");
  domino_cmd->add_option("--n", dom.n, "Chain length")->required()->check(CLI::Range(2, 12));
  domino_cmd->add_option("--seed-state", dom.seed, "Bitstring, spin 1 first, 1 = up")->required();
  domino_cmd->callback([&] { run_domino(dom); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);  // --help / --version
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  } catch (const spinchain::numerical_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
