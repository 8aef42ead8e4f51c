#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "mpl/pwa.hpp"

namespace mpl {

/// Finite abstraction of an MPL system: the abstract states r_1..r_K of the
/// partition (in partition order) and T, the pairs (i, j) with
/// Im(r_i) n r_j non-empty. Indices are 0-based here; serialised ids are
/// 1-based.
struct TransitionSystem {
  std::vector<Region> states;
  std::vector<std::pair<std::size_t, std::size_t>> transitions;  // sorted, unique

  bool has_transition(std::size_t from, std::size_t to) const;

  friend bool operator==(const TransitionSystem& a, const TransitionSystem& b);
};

/// One-step forward reachability. The image of each state is computed once;
/// each (i, j) pair is then decided by intersection, canonical form and the
/// emptiness test. Rows of the (i, j) grid are spread over `threads`.
/// Throws ContractError on an unpartitioned system.
TransitionSystem build_transitions(const PwaSystem& pwa, unsigned threads = 1);

/// GraphViz digraph: nodes r1..rK labelled with their coefficients, edges in
/// sorted order.
std::string to_dot(const TransitionSystem& ts);

/// {"states":[{"id","coefficient","dbm","dynamics"}...],"transitions":[[i,j]...]}
/// with 1-based ids and coefficients over variables 1..n.
std::string to_json(const TransitionSystem& ts);

/// Inverse of to_json. Throws ParseError.
TransitionSystem transition_system_from_json(const std::string& text);

}  // namespace mpl
