#pragma once

#include <string>

#include "kromatic/graph.hpp"

namespace kromatic {

/// Outcome of one exhaustive identity suite; `detail` names the first
/// failing case, empty when all checks pass.
struct SuiteResult {
  std::string name;
  bool passed = true;
  std::size_t checks = 0;
  std::string detail;
};

/// Vertex-deletion identity X(G) = X(G-v) (.) mbar_1 + f(v,G) (.) (mbar_1 + 1)
/// and its solved form for f, every graph with n <= max_n, every v, d = n+2.
SuiteResult verify_f_identity(int max_n = 6);

/// (.)-multiplicativity over joins, all pairs with n_G + n_H <= max_total,
/// d = n_G + n_H + 2.
SuiteResult verify_join(int max_total = 6);

/// Ordinary multiplicativity over disjoint unions in the monomial basis,
/// same ranges as verify_join.
SuiteResult verify_union(int max_total = 6);

/// Clan-graph expansion X(G) = sum_alpha (1/alpha!) CSF(C_alpha(G)) truncated
/// at d = n+1, every graph with n <= max_n.
SuiteResult verify_clan(int max_n = 4);

/// Series formula for attaching H to all of G but one vertex, against direct
/// expansion; G with n <= 4, H with n <= 2, every v, d = n_G + n_H + 2.
SuiteResult verify_attach();

/// Edge-swap instances up to max_n: equal CSF on both outputs; where the
/// pointwise automorphism holds and the claw margins differ, claw counts and
/// fingerprints must separate the pair.
SuiteResult verify_os(int max_n = 7);

/// Hat-swap instances up to max_n with n + |E| + 1 <= 12: equal CSF on the
/// split pair; under the distinguishing gate, the 7-vertex pattern count is
/// strictly greater on the uv side and fingerprints differ.
SuiteResult verify_split(int max_n = 6);

/// Dispatch by suite name (f-identity, join, union, clan, attach, os, split);
/// max_n <= 0 selects each suite's default bound. Unknown name → input error.
SuiteResult run_suite(const std::string& name, int max_n = 0);

}  // namespace kromatic
