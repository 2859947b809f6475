#pragma once

// Identity and inequality sweeps over many continued fractions, run by
// `verify --all` next to the pipelines.

#include "qhpp/fixtures.hpp"
#include "qhpp/obstruction.hpp"
#include "qhpp/report.hpp"

#include <cstdint>

namespace qhpp {

struct PropertyOptions {
    long q_max = 200;
    long random_cf_cases = 10000;
    long random_esq_cases = 10000;
    long random_dioph_cases = 1000;
    std::uint64_t seed = 0x51ab1e;
};

/// Brute-force grid search over the box x_i <= target / c_i. Slow, but shares
/// nothing with solve_dioph beyond the problem type.
std::vector<DiophSolution> dioph_grid_oracle(const DiophProblem& p);

PipelineReport property_suites(const Fixtures& fx, const PropertyOptions& opts = {}, unsigned threads = 0);

}  // namespace qhpp
