#pragma once

#include <chrono>
#include <limits>
#include <optional>

#include "sepath/core.hpp"

// Exhaustive machinery: deterministic backtracking search for generator
// paths, and exact minimum separating-path-system computation for tiny
// orders. Both serve as ground-truth oracles for the constructions.

namespace sepath {

struct SearchBudget {
    long long max_nodes = std::numeric_limits<long long>::max();
    std::chrono::milliseconds wall_time_limit{0};  // 0 means unlimited
};

enum class SearchOutcome { Found, Exhausted, BudgetExceeded };

struct GeneratorSearchResult {
    SearchOutcome outcome = SearchOutcome::Exhausted;
    std::optional<PathSeq> path;
    long long nodes_visited = 0;
};

// First generator path in the deterministic extension order (start fixed at
// vertex 1, clockwise first step, ascending next-vertex label), or proof of
// absence when the space is exhausted.
GeneratorSearchResult search_generator(int n, const SearchBudget& budget = {});

struct ExactMinResult {
    SearchOutcome outcome = SearchOutcome::BudgetExceeded;
    int size = 0;  // certified minimum when outcome == Found
    PathFamily family;
    long long nodes_visited = 0;
};

// Exact f(K_n) for 2 <= n <= 5: iterative deepening over family size,
// starting from the pigeonhole bound ceil(log2 m), with paths enumerated
// once up to reversal and signature-class pruning.
ExactMinResult exact_min_sps(int n, const SearchBudget& budget = {});

}  // namespace sepath
