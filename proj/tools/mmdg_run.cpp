// Command-line driver: mmdg_run --problem landau --method mm --nu 0.25 ...
#include <cstdio>
#include <iostream>
#include <map>
#include <string>

#include "CLI11.hpp"
#include "mmdg/config.hpp"
#include "mmdg/error.hpp"
#include "mmdg/run.hpp"

int main(int argc, char** argv) {
  CLI::App app{"1D1V Vlasov-Poisson-Lenard-Bernstein solver (direct and micro-macro DG-IMEX)"};
  app.option_defaults()->always_capture_default(false);

  std::string problem = "landau", config_file;
  std::map<std::string, std::string> given;  // flag -> raw value
  app.add_option("--problem", problem, "relaxation | riemann | two_stream | landau");
  app.add_option("--config", config_file, "key = value file; flags override it");

  const char* keys[] = {"method", "nu", "nx", "nv", "p", "cfl", "dt", "t-end",
                        "tableau", "clean", "extended-cells", "inconsistent-quadrature",
                        "field-free", "transport", "vmin", "vmax", "xmin", "xmax",
                        "out", "snapshot-every", "record-every", "fit-t-a", "fit-t-b",
                        "serial"};
  std::map<std::string, std::string> raw;
  for (const char* k : keys) app.add_option(std::string("--") + k, raw[k]);

  CLI11_PARSE(app, argc, argv);

  try {
    auto cfg = mmdg::default_config(mmdg::parse_problem(problem));
    if (!config_file.empty()) {
      mmdg::load_config_file(cfg, config_file);
      if (cfg.problem != mmdg::parse_problem(problem) && app.count("--problem"))
        throw mmdg::ConfigError("--problem disagrees with the config file");
    }
    for (const auto& [k, v] : raw)
      if (app.count("--" + k)) mmdg::apply_setting(cfg, k, v);

    const auto res = mmdg::run(cfg);
    const auto& last = res.records.back();
    std::printf("problem=%s method=%s steps=%d dt=%.6e t=%.6f\n",
                mmdg::to_string(cfg.problem).c_str(), mmdg::to_string(cfg.method).c_str(),
                res.steps, res.dt, last.time);
    std::printf("max |dM| = %.3e %.3e %.3e   max |dE_t/E_t| = %.3e\n",
                res.max_conservation_error[0], res.max_conservation_error[1],
                res.max_conservation_error[2], res.max_energy_drift);
    if (res.damping)
      std::printf("damping rate = %.5f (%d maxima)\n", res.damping->rate, res.damping->maxima);
  } catch (const mmdg::ConfigError& e) {
    std::cerr << "configuration error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
