#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "center_kit/checks.hpp"
#include "center_kit/fusion_io.hpp"

namespace {

using namespace ck;

struct RunConfig {
  std::string command;
  std::vector<std::string> inputs;
  double tolerance = 1e-9;
  std::uint64_t seed = 1;
  int trials = 50;
  std::string mode = "unitary";
  std::string output;
  bool emit_braidings = false;
  bool json = false;

  void check() const {
    if (!(tolerance > 0)) throw Error(codes::kUsage, "--tolerance must be positive");
    if (trials < 1) throw Error(codes::kUsage, "--trials must be at least 1");
  }
  Options options() const { return {seed, trials, parse_mode(mode), tolerance}; }
  std::string echo() const {
    std::string s = command;
    for (const auto& i : inputs) s += " " + i;
    char buf[64];
    std::snprintf(buf, sizeof buf, " --tolerance %.3e --seed %llu", tolerance, static_cast<unsigned long long>(seed));
    s += buf;
    if (command == "monad-check" || command == "bimonad-check") s += " --trials " + std::to_string(trials);
    s += " --mode " + mode;
    if (emit_braidings) s += " --emit-braidings";
    return s;
  }
};

void write_output(const RunConfig& cfg, const std::string& text) {
  if (cfg.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(cfg.output, std::ios::binary);
  if (!out) throw Error(codes::kUsage, "cannot write " + cfg.output);
  out << text;
}

void canonical_tables(const FusionCategory& C, Report& r) {
  const int n = C.rank();
  nlohmann::json fibers = nlohmann::json::array(), gammas = nlohmann::json::array(), mult = nlohmann::json::array();
  r.line("fibers S_a(b [x] c):");
  for (int a = 0; a < n; ++a) {
    const SModule S = s_module(C, IndObject::simple(C, a));
    std::string row = "  " + C.label_name(a) + ":";
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        row += " " + std::to_string(S.fiber_dim(b, c));
        fibers.push_back({{"a", C.label_name(a)}, {"b", C.label_name(b)}, {"c", C.label_name(c)}, {"dim", S.fiber_dim(b, c)}});
      }
    r.line(row);
  }
  for (int a = 0; a < n; ++a)
    for (int a1 = 0; a1 < n; ++a1)
      for (int a2 = 0; a2 < n; ++a2) {
        const double g = gamma_norm(C, a, a1, a2);
        if (g > 0)
          gammas.push_back({{"a", C.label_name(a)}, {"a1", C.label_name(a1)}, {"a2", C.label_name(a2)}, {"norm", g}});
      }
  for (int a1 = 0; a1 < n; ++a1)
    for (int a2 = 0; a2 < n; ++a2) {
      const auto blocks = mult_S(C, a1, a2);
      for (int a3 = 0; a3 < n; ++a3) {
        if (blocks[a3].size() == 0) continue;
        nlohmann::json m = nlohmann::json::array();
        for (Eigen::Index i = 0; i < blocks[a3].rows(); ++i)
          for (Eigen::Index j = 0; j < blocks[a3].cols(); ++j) m.push_back({blocks[a3](i, j).real(), blocks[a3](i, j).imag()});
        mult.push_back({{"a1", C.label_name(a1)}, {"a2", C.label_name(a2)}, {"a3", C.label_name(a3)},
                        {"rows", blocks[a3].rows()}, {"cols", blocks[a3].cols()}, {"entries", m}});
      }
    }
  r.data()["fibers"] = fibers;
  r.data()["gamma_norms"] = gammas;
  r.data()["mu_S"] = mult;
}

int run(const RunConfig& cfg) {
  cfg.check();
  const Options o = cfg.options();
  const auto t0 = std::chrono::steady_clock::now();

  if (cfg.command == "export" || cfg.command == "opposite" || cfg.command == "deligne") {
    FusionCategory C = load_category(cfg.inputs.at(0));
    if (cfg.command == "opposite") C = monoidal_opposite(C);
    if (cfg.command == "deligne") C = deligne_product(C, load_category(cfg.inputs.at(1)));
    write_output(cfg, serialize(C));
    return 0;
  }

  const FusionCategory C = load_category(cfg.inputs.at(0));
  Report r(cfg.echo(), C.name(), fingerprint(C));
  if (cfg.command == "validate") {
    check_validation(C, r, o);
  } else if (cfg.command == "center") {
    check_center(C, r, o, cfg.emit_braidings);
  } else if (cfg.command == "monad-check") {
    check_monad(C, r, o);
    r.data()["trials"] = cfg.trials;
  } else if (cfg.command == "bimonad-check") {
    check_bimonad(C, r, o);
    r.data()["trials"] = cfg.trials;
  } else if (cfg.command == "canonical-algebra") {
    check_canonical_algebra(C, r, o);
    canonical_tables(C, r);
  } else if (cfg.command == "bimodule-roundtrip") {
    check_bimodule_roundtrip(C, r, o);
  } else if (cfg.command == "count-equivalence") {
    check_count_equivalence(C, r, o);
  } else {
    throw Error(codes::kUsage, "unknown command " + cfg.command);
  }
  write_output(cfg, cfg.json ? r.json().dump(2) + "\n" : r.text());
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::fprintf(stderr, "wall time: %.3f s\n", secs);
  return r.pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"center-kit: Drinfeld center computations over unitary fusion categories"};
  app.require_subcommand(1);
  RunConfig cfg;

  struct Verb {
    const char* name;
    const char* help;
    int inputs;
  };
  const Verb verbs[] = {
      {"validate", "check pentagon, unitarity and conjugate equations", 1},
      {"center", "enumerate the simple objects of the center", 1},
      {"monad-check", "check the monad laws of the centralizer on random instances", 1},
      {"bimonad-check", "check the op-lax monoidal laws of the centralizer", 1},
      {"canonical-algebra", "fibers, Gamma norms and structure constants of S", 1},
      {"bimodule-roundtrip", "half-braiding <-> S-bimodule round trips", 1},
      {"count-equivalence", "compare simple counts on both sides of the equivalence", 1},
      {"deligne", "emit the Deligne product of two categories", 2},
      {"opposite", "emit the monoidal opposite of a category", 1},
      {"export", "emit a category as a fusion-data file", 1},
  };
  for (const auto& v : verbs) {
    CLI::App* sub = app.add_subcommand(v.name, v.help);
    sub->add_option("inputs", cfg.inputs, v.inputs == 2 ? "two categories (files or built-in names)"
                                                        : "category (file or built-in name)")
        ->required()
        ->expected(v.inputs);
    sub->add_option("--tolerance", cfg.tolerance, "base residual threshold")->capture_default_str();
    sub->add_option("--seed", cfg.seed, "seed of the random instances")->capture_default_str();
    sub->add_option("--trials", cfg.trials, "number of random trials")->capture_default_str();
    sub->add_option("--mode", cfg.mode, "algebraic or unitary")->check(CLI::IsMember({"algebraic", "unitary"}))->capture_default_str();
    sub->add_option("-o,--output", cfg.output, "output path (default stdout)");
    sub->add_flag("--emit-braidings", cfg.emit_braidings, "include half-braiding matrices");
    sub->add_flag("--json", cfg.json, "print the report as JSON");
    sub->callback([&cfg, sub] { cfg.command = sub->get_name(); });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }
  try {
    return run(cfg);
  } catch (const ck::Error& e) {
    std::fprintf(stderr, "error %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error %s\n", e.what());
    return 2;
  }
}
