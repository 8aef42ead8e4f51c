#include "mpl/bench.hpp"

#include <algorithm>
#include <chrono>
#include <iomanip>
#include <limits>
#include <map>
#include <ostream>
#include <stdexcept>
#include <tuple>

#include "mpl/abstraction.hpp"
#include "mpl/op_counter.hpp"
#include "mpl/pwa.hpp"
#include "mpl/reach.hpp"

namespace mpl::bench {

namespace {

constexpr const char* kPhaseNames[] = {"states", "transitions", "image", "image_lifting", "forward", "backward"};

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

struct Timed {
  double wall_ms;
  std::uint64_t ops;
};

template <class F>
Timed timed(F&& f) {
  OpCounter counter;
  const auto start = std::chrono::steady_clock::now();
  f();
  const auto stop = std::chrono::steady_clock::now();
  return {std::chrono::duration<double, std::milli>(stop - start).count(), counter.counts().scalar_ops};
}

std::size_t total_parts(const ReachSequence& seq) {
  std::size_t total = 0;
  for (const auto& u : seq.steps) total += u.size();
  return total;
}

}  // namespace

std::string to_string(Phase p) { return kPhaseNames[static_cast<int>(p)]; }

Phase phase_from_string(const std::string& name) {
  for (int i = 0; i < 6; ++i)
    if (name == kPhaseNames[i]) return static_cast<Phase>(i);
  throw std::invalid_argument("unknown phase '" + name + "'");
}

void BenchConfig::validate() const {
  if (dims.empty()) throw std::invalid_argument("bench: no dimensions given");
  if (trials < 1) throw std::invalid_argument("bench: trials must be >= 1");
  if (value_lo > value_hi) throw std::invalid_argument("bench: value range lo > hi");
  if (finite_per_row < 1) throw std::invalid_argument("bench: finite_per_row must be >= 1");
  for (auto n : dims) {
    if (n < 1) throw std::invalid_argument("bench: dimensions must be >= 1");
    if (finite_per_row > n) {
      throw std::invalid_argument("bench: finite_per_row (" + std::to_string(finite_per_row) +
                                  ") exceeds dimension " + std::to_string(n));
    }
  }
}

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("uniform_below: empty range");
  // Largest multiple of bound representable, so that x % bound is unbiased.
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x = 0;
  do {
    x = rng();
  } while (x >= limit);
  return x % bound;
}

std::mt19937_64 instance_engine(std::uint64_t seed, std::size_t n, std::size_t trial) {
  const std::uint64_t s = splitmix64(splitmix64(splitmix64(seed) ^ n) ^ trial);
  return std::mt19937_64(s);
}

Matrix random_row_finite(std::size_t n, const BenchConfig& cfg, std::size_t trial) {
  if (cfg.finite_per_row < 1 || cfg.finite_per_row > n) {
    throw std::invalid_argument("random_row_finite: need 1 <= finite_per_row <= n");
  }
  if (cfg.value_lo > cfg.value_hi) throw std::invalid_argument("random_row_finite: value range lo > hi");
  auto rng = instance_engine(cfg.seed, n, trial);
  const auto span = static_cast<std::uint64_t>(cfg.value_hi - cfg.value_lo) + 1;
  Matrix a(n, n);
  std::vector<std::size_t> cols(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t c = 0; c < n; ++c) cols[c] = c;
    for (std::size_t c = n - 1; c > 0; --c) std::swap(cols[c], cols[uniform_below(rng, c + 1)]);
    for (std::size_t k = 0; k < cfg.finite_per_row; ++k) {
      a(i, cols[k]) = Scalar{cfg.value_lo + static_cast<std::int64_t>(uniform_below(rng, span))};
    }
  }
  return a;
}

BenchReport bench_run(const BenchConfig& cfg) {
  cfg.validate();
  auto wants = [&](Phase p) { return std::find(cfg.phases.begin(), cfg.phases.end(), p) != cfg.phases.end(); };
  BenchReport report;
  for (auto n : cfg.dims) {
    for (std::size_t trial = 0; trial < cfg.trials; ++trial) {
      const Matrix a = random_row_finite(n, cfg, trial);
      std::optional<PwaSystem> pwa;
      const Timed t_states = timed([&] { pwa.emplace(generate_partition(a, cfg.threads)); });
      const std::size_t k = pwa->size();
      auto row = [&](Phase p, Timed t) { return BenchRow{n, trial, p, t.wall_ms, t.ops, k, 0, std::nullopt}; };
      std::vector<BenchRow> rows;
      if (wants(Phase::states)) rows.push_back(row(Phase::states, t_states));

      if (wants(Phase::transitions)) {
        std::size_t count = 0;
        auto r = row(Phase::transitions, timed([&] { count = build_transitions(*pwa, cfg.threads).transitions.size(); }));
        r.transition_count = count;
        rows.push_back(r);
      }
      if (wants(Phase::image)) {
        rows.push_back(row(Phase::image, timed([&] {
                             for (const auto& s : pwa->regions()) (void)image_affine(s.zone, s.coefficient, s.dynamics);
                           })));
      }
      if (wants(Phase::image_lifting)) {
        rows.push_back(row(Phase::image_lifting, timed([&] {
                             for (const auto& s : pwa->regions())
                               (void)image_via_lifting(s.zone, s.coefficient, s.dynamics, Direction::forward);
                           })));
      }
      if (wants(Phase::forward)) {
        ReachSequence seq;
        auto r = row(Phase::forward, timed([&] { seq = forward_reach(DbmUnion(Dbm::box(n, 0, 1)), *pwa, cfg.horizon); }));
        r.state_count = total_parts(seq);
        r.terminated_at = seq.empty_from;
        rows.push_back(r);
      }
      if (wants(Phase::backward)) {
        ReachSequence seq;
        auto r = row(Phase::backward,
                     timed([&] { seq = backward_reach(DbmUnion(Dbm::box(n, 90, 100)), *pwa, cfg.horizon); }));
        r.state_count = total_parts(seq);
        r.terminated_at = seq.empty_from;
        rows.push_back(r);
      }
      report.rows.insert(report.rows.end(), rows.begin(), rows.end());
    }
  }
  std::stable_sort(report.rows.begin(), report.rows.end(), [](const BenchRow& x, const BenchRow& y) {
    return std::tie(x.n, x.trial, x.phase) < std::tie(y.n, y.trial, y.phase);
  });
  return report;
}

void write_csv(std::ostream& os, const BenchReport& report) {
  os << "# mpl-bench-csv v1\n";
  os << "n,trial,phase,wall_ms,op_count,state_count,transition_count,terminated_at\n";
  os << std::fixed << std::setprecision(3);
  for (const auto& r : report.rows) {
    os << r.n << ',' << r.trial << ',' << to_string(r.phase) << ',' << r.wall_ms << ',' << r.op_count << ','
       << r.state_count << ',' << r.transition_count << ',';
    if (r.terminated_at) os << *r.terminated_at;
    os << '\n';
  }

  struct Acc {
    std::size_t count = 0;
    double wall_sum = 0, wall_max = 0, ops_sum = 0, states_sum = 0, trans_sum = 0;
    std::uint64_t ops_max = 0;
    std::size_t states_max = 0, trans_max = 0;
  };
  std::map<std::pair<std::size_t, Phase>, Acc> acc;
  for (const auto& r : report.rows) {
    auto& a = acc[{r.n, r.phase}];
    ++a.count;
    a.wall_sum += r.wall_ms;
    a.wall_max = std::max(a.wall_max, r.wall_ms);
    a.ops_sum += static_cast<double>(r.op_count);
    a.ops_max = std::max(a.ops_max, r.op_count);
    a.states_sum += static_cast<double>(r.state_count);
    a.states_max = std::max(a.states_max, r.state_count);
    a.trans_sum += static_cast<double>(r.transition_count);
    a.trans_max = std::max(a.trans_max, r.transition_count);
  }
  for (const auto& [key, a] : acc) {
    const auto c = static_cast<double>(a.count);
    os << key.first << ",mean," << to_string(key.second) << ',' << a.wall_sum / c << ',' << a.ops_sum / c << ','
       << a.states_sum / c << ',' << a.trans_sum / c << ",\n";
    os << key.first << ",max," << to_string(key.second) << ',' << a.wall_max << ',' << a.ops_max << ','
       << a.states_max << ',' << a.trans_max << ",\n";
  }
}

}  // namespace mpl::bench
