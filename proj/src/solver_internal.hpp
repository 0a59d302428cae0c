#pragma once

#include <optional>
#include <vector>

#include "flagbkk/solver.hpp"
#include "system_eval.hpp"

namespace flagbkk::detail {

/// The cleared equations with each row scaled to unit largest coefficient.
std::vector<CompiledPolynomial> compile_cleared(const ClearedSystem& cs);

/// Refines candidate points, filters them to well-conditioned torus
/// solutions, merges duplicates and closes the set under conjugation and
/// the exchange of t3 and t4; fills the counters of `out`.
void finalize_candidates(const ClearedSystem& cs, const std::vector<std::optional<ComplexPoint>>& candidates,
                         const SolverOptions& options, SolutionSet& out);

}  // namespace flagbkk::detail
