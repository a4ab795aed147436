#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <future>
#include <numbers>

#include "center_kit/checks.hpp"
#include "center_kit/fusion_io.hpp"

using namespace ck;

namespace {

const char* kCategories[] = {"vec_z2", "vec_z3", "fib", "ising"};

FusionCategory load(const std::string& name) { return load_fusion_file(std::string(CK_DATA_DIR) + "/" + name + ".json"); }

struct Criterion {
  int id;
  std::string title;
  bool pass = true;
  double worst = 0;
  std::string detail;

  void absorb(const Report& r, const std::string& cat) {
    for (const auto& c : r.records()) {
      if (c.kind == CheckRecord::Kind::Residual || c.kind == CheckRecord::Kind::Bound)
        worst = std::max(worst, c.kind == CheckRecord::Kind::Bound ? c.value - 1.0 : c.value);
      if (!c.pass) {
        pass = false;
        detail += " [" + cat + ": " + c.name + " = " + format_number(c.value) + "]";
      }
    }
  }
  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail += " [" + what + "]";
    }
  }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void print(const Criterion& c, double secs) {
  std::printf("%s criterion %d: %s (max residual %s, %.2f s)%s\n", c.pass ? "PASS" : "FAIL", c.id, c.title.c_str(),
              format_number(c.worst).c_str(), secs, c.detail.c_str());
  std::fflush(stdout);
}

using Suite = std::function<void(const FusionCategory&, Report&, Criterion&)>;

bool run(int id, const std::string& title, double budget, const Suite& suite) {
  Criterion c{id, title};
  const auto t0 = std::chrono::steady_clock::now();
  std::vector<std::future<Criterion>> parts;
  for (const char* name : kCategories)
    parts.push_back(std::async(std::launch::async, [&, name] {
      Criterion part{id, title};
      try {
        const FusionCategory C = load(name);
        Report r(title, name, fingerprint(C));
        suite(C, r, part);
        part.absorb(r, name);
      } catch (const std::exception& e) {
        part.require(false, std::string(name) + ": " + e.what());
      }
      return part;
    }));
  for (auto& f : parts) {
    const Criterion part = f.get();
    c.pass = c.pass && part.pass;
    c.worst = std::max(c.worst, part.worst);
    c.detail += part.detail;
  }
  const double secs = seconds_since(t0);
  if (budget > 0) c.require(secs < budget, "runtime " + std::to_string(secs) + " s exceeds " + std::to_string(budget) + " s");
  print(c, secs);
  return c.pass;
}

Options seeded(std::uint64_t seed, int trials, Mode mode = Mode::Unitary) {
  Options o;
  o.seed = seed;
  o.trials = trials;
  o.mode = mode;
  return o;
}

}  // namespace

int main() {
  bool all = true;

  all &= run(1, "pentagon, unitarity and conjugate equations; mutations rejected", 5.0,
             [](const FusionCategory& C, Report& r, Criterion&) {
               check_validation(C, r, Options{});
               check_mutations(C, r, Options{});
             });

  all &= run(2, "monad and op-lax monoidal laws on 50 random instances", 60.0,
             [](const FusionCategory& C, Report& r, Criterion&) {
               check_monad(C, r, seeded(2, 50));
               check_bimonad(C, r, seeded(2, 50));
             });

  all &= run(3, "rho dinaturality and norm, coupling through the free braiding", 0,
             [](const FusionCategory& C, Report& r, Criterion&) { check_rho(C, r, Options{}); });

  all &= run(4, "free half-braidings on 20 random objects", 0,
             [](const FusionCategory& C, Report& r, Criterion&) { check_free_half_braidings(C, r, seeded(4, 20)); });

  all &= run(5, "phi/psi round trip and tensor compatibility on 100 instances", 0,
             [](const FusionCategory& C, Report& r, Criterion&) {
               check_phi_psi(C, r, seeded(5, 100, Mode::Unitary));
               check_phi_psi(C, r, seeded(5, 100, Mode::Algebraic));
             });

  all &= run(6, "simple objects of the center", 120.0, [](const FusionCategory& C, Report& r, Criterion& c) {
    const CenterReport cr = check_center(C, r, Options{});
    const int expected = expected_center_count(C);
    c.require(expected > 0, C.name() + ": not a known category");
    std::vector<double> q;
    for (const auto& s : cr.simples) q.push_back(s.qdim);
    std::sort(q.begin(), q.end());
    std::vector<double> want;
    if (C.name() == "vec_z2") want.assign(4, 1.0);
    if (C.name() == "vec_z3") want.assign(9, 1.0);
    if (C.name() == "fib") {
      const double phi = std::numbers::phi;
      want = {1.0, phi, phi, phi * phi};
    }
    if (C.name() == "ising") want = {1.0, 1.0, 1.0, 1.0, std::sqrt(2.0), std::sqrt(2.0), std::sqrt(2.0), std::sqrt(2.0), 2.0};
    bool ok = q.size() == want.size();
    for (size_t i = 0; ok && i < q.size(); ++i) ok = std::abs(q[i] - want[i]) < 1e-9;
    c.require(ok, C.name() + ": quantum dimensions differ from the expected multiset");
  });

  all &= run(7, "canonical algebra fibers, associativity and Gamma norms", 0,
             [](const FusionCategory& C, Report& r, Criterion&) { check_canonical_algebra(C, r, Options{}); });

  all &= run(8, "half-braidings and S-bimodules: round trips and equal counts", 0,
             [](const FusionCategory& C, Report& r, Criterion&) {
               check_bimodule_roundtrip(C, r, seeded(8, 4));
               check_count_equivalence(C, r, seeded(8, 1));
             });

  std::printf("%s\n", all ? "all criteria pass" : "some criteria fail");
  return all ? 0 : 1;
}
