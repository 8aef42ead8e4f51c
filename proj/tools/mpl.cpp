// mpl: command-line front end. Exit status 0 on success, 1 on invalid input
// or usage, 2 on an internal invariant violation.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "mpl/abstraction.hpp"
#include "mpl/bench.hpp"
#include "mpl/error.hpp"
#include "mpl/io.hpp"
#include "mpl/pwa.hpp"
#include "mpl/reach.hpp"

namespace {

using mpl::io::json;

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) throw UsageError(path + ": cannot write file");
}

void emit(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") std::cout << text;
  else write_file(path, text);
}

// "3..15", "4", or "3,5,9".
std::vector<std::size_t> parse_dims(const std::string& spec) {
  std::vector<std::size_t> dims;
  auto number = [&](const std::string& s) -> std::size_t {
    std::size_t used = 0;
    unsigned long v = 0;
    try {
      v = std::stoul(s, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != s.size()) throw UsageError("--dims: '" + s + "' is not a count");
    return v;
  };
  if (const auto dots = spec.find(".."); dots != std::string::npos) {
    const auto lo = number(spec.substr(0, dots)), hi = number(spec.substr(dots + 2));
    if (lo > hi) throw UsageError("--dims: empty range " + spec);
    for (auto n = lo; n <= hi; ++n) dims.push_back(n);
    return dims;
  }
  std::stringstream ss(spec);
  for (std::string item; std::getline(ss, item, ',');) dims.push_back(number(item));
  return dims;
}

mpl::PwaSystem load_partition(const std::string& path, unsigned threads) {
  return mpl::generate_partition(mpl::io::parse_matrix(path), threads);
}

void require_dim(const mpl::DbmUnion& u, const mpl::PwaSystem& p, const std::string& what) {
  if (u.dim() != p.dim()) {
    throw mpl::DimensionError(what + " has " + std::to_string(u.dim()) + " variables, matrix has " +
                              std::to_string(p.dim()));
  }
}

mpl::ImageMethod method(bool oracle) { return oracle ? mpl::ImageMethod::lifting : mpl::ImageMethod::direct; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite abstractions and reachability of max-plus-linear systems"};
  app.require_subcommand(1);
  app.fallthrough();
  unsigned threads = 1;
  app.add_option("--threads", threads, "Worker threads for partition and transition generation")
      ->check(CLI::Range(1u, 256u));

  // pwa
  std::string matrix_path;
  bool no_partition = false, raw = false;
  auto* pwa = app.add_subcommand("pwa", "Print the regions of the piecewise-affine form");
  pwa->add_option("matrix", matrix_path, "Matrix JSON file")->required();
  pwa->add_flag("--no-partition", no_partition, "Closed, possibly overlapping regions");
  pwa->add_flag("--raw", raw, "Region bounds before canonicalisation");

  // abstract
  std::string json_out, dot_out;
  auto* abstract = app.add_subcommand("abstract", "Build the abstract transition system");
  abstract->add_option("matrix", matrix_path, "Matrix JSON file")->required();
  abstract->add_option("--json", json_out, "Write the transition system as JSON (default: stdout)");
  abstract->add_option("--dot", dot_out, "Write the transition graph as GraphViz");

  // image / preimage
  std::string set_path;
  bool oracle = false;
  auto* image = app.add_subcommand("image", "Image of a DBM or union under the system");
  auto* preimage = app.add_subcommand("preimage", "Inverse image of a DBM or union under the system");
  for (auto* sub : {image, preimage}) {
    sub->add_option("matrix", matrix_path, "Matrix JSON file")->required();
    sub->add_option("set", set_path, "DBM or union JSON file")->required();
    sub->add_flag("--oracle", oracle, "Use the lifted 2n-variable construction");
  }

  // reach
  std::vector<std::int64_t> box_bounds;
  std::size_t steps = 0;
  bool forward = false, backward = false;
  auto* reach = app.add_subcommand("reach", "Forward or backward reach sets, one JSON line per step");
  reach->add_option("matrix", matrix_path, "Matrix JSON file")->required();
  auto* init_opt = reach->add_option("init", set_path, "Initial DBM or union JSON file");
  auto* box_opt = reach->add_option("--box", box_bounds, "Initial set lo <= x_i <= hi")->expected(2);
  init_opt->excludes(box_opt);
  auto* fwd_flag = reach->add_flag("--forward", forward, "Images of the initial set");
  auto* bwd_flag = reach->add_flag("--backward", backward, "Preimages of the initial set");
  fwd_flag->excludes(bwd_flag);
  reach->add_option("--steps", steps, "Horizon N")->required()->check(CLI::PositiveNumber);
  reach->add_flag("--oracle", oracle, "Use the lifted 2n-variable construction");

  // bench
  mpl::bench::BenchConfig cfg;
  std::string dims_spec = "3..15", out_path, phases_spec;
  std::vector<std::int64_t> range;
  auto* bench = app.add_subcommand("bench", "Timing and operation counts on random systems (CSV)");
  bench->add_option("--dims", dims_spec, "Dimensions, e.g. 3..15 or 3,5,7")->capture_default_str();
  bench->add_option("--trials", cfg.trials, "Systems per dimension")->capture_default_str();
  bench->add_option("--seed", cfg.seed, "Seed")->capture_default_str();
  bench->add_option("--out", out_path, "CSV file (default: stdout)");
  bench->add_option("--finite-per-row", cfg.finite_per_row, "Finite entries per row")->capture_default_str();
  bench->add_option("--range", range, "Value range lo hi")->expected(2);
  bench->add_option("--horizon", cfg.horizon, "Reach horizon N")->capture_default_str();
  bench->add_option("--phases", phases_spec,
                    "Comma-separated subset of states,transitions,image,image_lifting,forward,backward");

  // gen
  std::size_t gen_n = 0, gen_trial = 0;
  auto* gen = app.add_subcommand("gen", "Print one random instance of the benchmark family");
  gen->add_option("--n", gen_n, "Dimension")->required()->check(CLI::PositiveNumber);
  gen->add_option("--seed", cfg.seed, "Seed")->capture_default_str();
  gen->add_option("--trial", gen_trial, "Trial index")->capture_default_str();
  gen->add_option("--finite-per-row", cfg.finite_per_row, "Finite entries per row")->capture_default_str();
  gen->add_option("--range", range, "Value range lo hi")->expected(2);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    if (!range.empty()) {
      cfg.value_lo = range[0];
      cfg.value_hi = range[1];
    }

    if (*pwa) {
      const mpl::Matrix a = mpl::io::parse_matrix(matrix_path);
      const auto p = no_partition ? mpl::generate_pwa(a, threads) : mpl::generate_partition(a, threads);
      json out = json::array();
      for (const auto& r : p.regions()) {
        json region = mpl::io::region_to_json(r);
        if (raw) {
          const auto zone = mpl::region_zone(p.source(), r.coefficient);
          region["dbm"] = mpl::io::dbm_to_json(no_partition ? zone : mpl::sign_rule(zone), true);
        }
        out.push_back(std::move(region));
      }
      std::cout << out.dump(2) << "\n";
    } else if (*abstract) {
      const auto ts = mpl::build_transitions(load_partition(matrix_path, threads), threads);
      emit(json_out, mpl::to_json(ts));
      if (!dot_out.empty()) emit(dot_out, mpl::to_dot(ts));
    } else if (*image || *preimage) {
      const auto p = load_partition(matrix_path, threads);
      const auto u = mpl::io::parse_union(set_path);
      require_dim(u, p, set_path);
      const auto out = *image ? mpl::image_mpl(u, p, method(oracle)) : mpl::preimage_mpl(u, p, method(oracle));
      std::cout << mpl::io::union_to_json(out).dump(2) << "\n";
    } else if (*reach) {
      if (!forward && !backward) throw UsageError("reach: give --forward or --backward");
      const auto p = load_partition(matrix_path, threads);
      mpl::DbmUnion init;
      if (!box_bounds.empty()) {
        if (box_bounds[0] > box_bounds[1]) std::cerr << "warning: --box lo > hi, the initial set is empty\n";
        init = mpl::DbmUnion(mpl::Dbm::box(p.dim(), box_bounds[0], box_bounds[1]));
      } else if (!set_path.empty()) {
        init = mpl::io::parse_union(set_path);
        require_dim(init, p, set_path);
      } else {
        throw UsageError("reach: give an initial set file or --box LO HI");
      }
      const auto seq = forward ? mpl::forward_reach(init, p, steps, method(oracle))
                               : mpl::backward_reach(init, p, steps, method(oracle));
      for (std::size_t k = 0; k < seq.steps.size(); ++k) {
        json line = mpl::io::union_to_json(seq.steps[k]);
        line.erase("n");
        const auto step = static_cast<long long>(k + 1);
        line["k"] = forward ? step : -step;
        std::cout << line.dump() << "\n";
      }
      if (backward && seq.empty_from) {
        std::cerr << "backward reach set empty from k = -" << *seq.empty_from << "; later steps not computed\n";
      }
    } else if (*bench) {
      cfg.dims = parse_dims(dims_spec);
      cfg.threads = threads;
      if (!phases_spec.empty()) {
        cfg.phases.clear();
        std::stringstream ss(phases_spec);
        for (std::string name; std::getline(ss, name, ',');) cfg.phases.push_back(mpl::bench::phase_from_string(name));
      }
      const auto report = mpl::bench::bench_run(cfg);
      std::ostringstream csv;
      mpl::bench::write_csv(csv, report);
      emit(out_path, csv.str());
    } else if (*gen) {
      cfg.dims = {gen_n};
      cfg.validate();
      std::cout << mpl::io::matrix_to_json(mpl::bench::random_row_finite(gen_n, cfg, gen_trial)).dump() << "\n";
    }
  } catch (const mpl::InvariantError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
