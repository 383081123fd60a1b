#pragma once

#include "rhombic/assemblee.hpp"
#include "rhombic/shapes.hpp"

#include <memory>
#include <string>
#include <vector>

namespace rhombic {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail; // counts only, never timings
};

// Each check covers every n up to its bound (capped at `max_n` where given).
CriterionResult check_lah_counts(int max_n);
CriterionResult check_partition_identity(int max_n, int jobs = 1);
CriterionResult check_tiling_invariance(int max_n);
CriterionResult check_round_trips(int max_n);
CriterionResult check_weight_preservation(int max_n);
CriterionResult check_stationarity(int max_n);
CriterionResult check_insertion(int max_n);
CriterionResult check_running_example();
CriterionResult check_confluence(int max_n, int orders_per_tiling = 20);

// Criteria 1 to 9 with their default bounds, each capped at max_n.
std::vector<CriterionResult> run_acceptance(int max_n, int jobs = 1);

std::string format_results(const std::vector<CriterionResult>& results);

// [2,10,12,7][5,9,1,8,6][3,11,4]
Assemblee running_example_assemblee();

// The first tiling of X(A), in enumeration order, on which fusion-exchange places 15 q.
std::shared_ptr<const Tiling> running_example_tiling();

} // namespace rhombic
