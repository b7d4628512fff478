#pragma once

#include <stdexcept>

#include "lcc/cover.hpp"
#include "lcc/graph.hpp"
#include "lcc/invariants.hpp"

namespace lcc {

/// Adjacent pair whose removal keeps the chromatic number within one of the
/// original; carrier for the alpha=2 splitting step.
struct SplitPair {
  int u1 = -1;
  int u2 = -1;
  int chi_remainder = 0;
};

/// Raised when the lexicographic edge scan finds no adjacent pair with
/// chi(G - {u1,u2}) >= chi(G) - 1, which the splittability theorem rules out.
struct TheoremGapError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Raised when a claw-free precondition fails; carries the witness claw.
struct NotClawFreeError : std::invalid_argument {
  NotClawFreeError(Claw witness, const std::string& what)
      : std::invalid_argument(what), claw(witness) {}
  Claw claw;
};

/// Cover with max valency <= delta(g)+1, for graphs with alpha(g) = 2:
/// the non-neighbors of a minimum-degree vertex form a clique.
CoverCertificate cover_alpha2(const Graph& g);

/// Cover with max valency <= n+1-omega(g) built around one maximum clique.
CoverCertificate cover_max_clique(const Graph& g);

/// Cover such that every non-isolated v satisfies
/// val(v) + n/alpha_G(v) <= n+1, checked in exact integer arithmetic.
CoverCertificate cover_local_alpha(const Graph& g);

/// First adjacent pair (lexicographic edge order) whose removal leaves
/// chromatic number >= chi(g)-1. Requires alpha(g)=2 and chi > max(omega, 2).
SplitPair find_split_pair(const Graph& g);

/// Cover with max valency <= n+1-chi(g) for claw-free graphs.
CoverCertificate cover_claw_free(const Graph& g);

/// Certificate wrapping the exact solver's optimal cover (bound = lcc).
CoverCertificate exact_certificate(const Graph& g);

}  // namespace lcc
