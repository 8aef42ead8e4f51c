#include "mpl/abstraction.hpp"

#include <algorithm>
#include <sstream>

#include "mpl/error.hpp"
#include "mpl/parallel.hpp"
#include "mpl/reach.hpp"

namespace mpl {

bool TransitionSystem::has_transition(std::size_t from, std::size_t to) const {
  return std::binary_search(transitions.begin(), transitions.end(), std::pair{from, to});
}

bool operator==(const TransitionSystem& a, const TransitionSystem& b) {
  if (a.transitions != b.transitions || a.states.size() != b.states.size()) return false;
  for (std::size_t i = 0; i < a.states.size(); ++i) {
    const auto& x = a.states[i];
    const auto& y = b.states[i];
    if (x.coefficient != y.coefficient || !(x.zone == y.zone) || x.dynamics != y.dynamics) return false;
  }
  return true;
}

TransitionSystem build_transitions(const PwaSystem& pwa, unsigned threads) {
  if (!pwa.partitioned()) throw ContractError("build_transitions requires a partitioned PWA system");
  const auto& states = pwa.regions();
  const std::size_t k = states.size();

  std::vector<Dbm> images(k);
  parallel_chunks(k, threads, [&](unsigned, std::uint64_t begin, std::uint64_t end) {
    for (auto i = begin; i < end; ++i) images[i] = image_affine(states[i].zone, states[i].coefficient, states[i].dynamics);
  });

  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> chunks(std::max(1U, threads));
  parallel_chunks(k, threads, [&](unsigned chunk, std::uint64_t begin, std::uint64_t end) {
    for (auto i = begin; i < end; ++i) {
      for (std::size_t j = 0; j < k; ++j) {
        if (!is_empty(canonical_form(intersect(images[i], states[j].zone)))) chunks[chunk].emplace_back(i, j);
      }
    }
  });

  TransitionSystem ts;
  ts.states = states;
  for (auto& c : chunks) ts.transitions.insert(ts.transitions.end(), c.begin(), c.end());
  return ts;
}

std::string to_dot(const TransitionSystem& ts) {
  std::ostringstream os;
  os << "digraph mpl_abstraction {\n";
  for (std::size_t i = 0; i < ts.states.size(); ++i) {
    os << "  r" << i + 1 << " [label=\"r" << i + 1 << "\\n(";
    const auto g = ts.states[i].variable_coefficient();
    for (std::size_t v = 0; v < g.size(); ++v) os << (v ? "," : "") << g[v];
    os << ")\"];\n";
  }
  for (const auto& [from, to] : ts.transitions) os << "  r" << from + 1 << " -> r" << to + 1 << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace mpl
