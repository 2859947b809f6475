#pragma once

// Search pipelines over candidate singularity configurations. Each pipeline
// regenerates its candidate list from the governing inequalities, filters it,
// and diffs the outcome against the shipped fixture tables.

#include "qhpp/fixtures.hpp"
#include "qhpp/obstruction.hpp"
#include "qhpp/report.hpp"
#include "qhpp/surface.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <vector>

namespace qhpp {

/// Applies fn to every input on up to `threads` workers (0 = hardware count).
/// Output order follows input order, so results never depend on scheduling.
template <class In, class Fn>
auto parallel_map(const std::vector<In>& inputs, Fn fn, unsigned threads = 0) {
    using Out = decltype(fn(inputs.front()));
    std::vector<std::optional<Out>> slots(inputs.size());
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    threads = std::min<unsigned>(threads, std::max<std::size_t>(1, inputs.size()));
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < inputs.size();) {
            try {
                slots[i].emplace(fn(inputs[i]));
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) failure = std::current_exception();
            }
        }
    };
    std::vector<std::jthread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
    pool.clear();
    if (failure) std::rethrow_exception(failure);
    std::vector<Out> out;
    out.reserve(slots.size());
    for (auto& s : slots) out.push_back(std::move(*s));
    return out;
}

struct OrderTupleFamily {
    struct FreeSlot {
        BigInt min_q;
        std::optional<BigInt> max_q;  // absent for an unbounded family
        BigInt modulus;               // instances are coprime to this
        std::vector<BigInt> instances;
    };
    std::vector<BigInt> fixed_orders;
    std::optional<FreeSlot> free_slot;

    std::vector<std::vector<BigInt>> instantiate() const;
    std::string str() const;
};

/// Pairwise coprime 4-tuples 2 <= q1 < q2 < q3 < q4 with e_orb >= 0, grouped by
/// their first three entries. Unbounded families are instantiated up to cap.
std::vector<OrderTupleFamily> enumerate_order_tuples(long cap = 1000);

/// Every type (ordered list of canonical fractions) realising the order tuple.
std::vector<std::vector<HjCf>> types_for_orders(const std::vector<BigInt>& orders);

/// Inclusive trace range for the fourth singularity of length l in the
/// [2]+[3]+third+cf configuration when L <= 11, K^2 > 0 and K^2 <= 3e_orb.
std::optional<std::pair<long, long>> q20_trace_window(const HjCf& third, std::size_t l);
std::vector<HjCf> q20_cases(const HjCf& third);

/// Chains for the fourth singularity in the step5 sub-case with third singularity p3.
std::vector<HjCf> step5_chains(const HjCf& p3);

/// The linear equation obtained from the degree relation by grouping each
/// singularity's coefficients k_j/q into g/q times an integer.
struct AggregatedEquation {
    DiophProblem problem;
    std::vector<std::size_t> sing_index;            // singularity behind each variable
    std::vector<std::vector<std::size_t>> components;  // its components with positive coefficient (1-based)
    std::vector<std::vector<BigInt>> multipliers;   // k_j / g for that singularity
};
AggregatedEquation aggregated_equation(const SurfaceCandidate& cand, const Rational& target);

/// Exceptional component names used in the case analysis: A, B, C1.., D1...
std::string component_name(std::size_t sing, std::size_t j, std::size_t length);

struct SweepEntry {
    std::vector<std::string> components;  // the three curves met by the minimal curve
    Rational value;                       // (m / sqrt D) K^2 = 1 - degree sum
    std::optional<Rational> m;
    std::vector<std::string> gamma_meets;  // components met by the residual (-1)-curve
    std::string verdict;                   // negative, non-integer, gamma-end, open
};

/// Every admissible triple of components for a minimal (-1)-curve on a
/// finite-family row with -K ample, with the resulting m and its rejection reason.
std::vector<SweepEntry> minimal_curve_sweep(const SurfaceCandidate& cand);

/// Smallest L compatible with the curve meeting every component of
/// self-intersection <= -4.
long step6_min_L(const SurfaceCandidate& cand);

/// Elimination rule for a finite-family row: "A", "B", "C" or "" (residual).
std::string step6_rule(const SurfaceCandidate& cand);

struct GramCase {
    std::string name;
    GramConfig config;
    long expected_abs;
};
std::vector<GramCase> step34_configurations();

PipelineReport table1_pipeline(const Fixtures& fx, unsigned threads = 0);
PipelineReport noA2_scan(long q_cap, const Fixtures& fx, unsigned threads = 0);
PipelineReport lemma_q20_pipeline(const Fixtures& fx, unsigned threads = 0);
PipelineReport small_q_pipeline(const Fixtures& fx, unsigned threads = 0);
PipelineReport l11_rationality_checks(const Fixtures& fx);
PipelineReport lemma24_check(const Fixtures& fx);
PipelineReport step34_gram_checks(const Fixtures& fx);
PipelineReport step5_pipeline(const Fixtures& fx, unsigned threads = 0);
PipelineReport step6_classification(const Fixtures& fx, unsigned threads = 0);
PipelineReport section6_checks(const Fixtures& fx);
PipelineReport coefficient_tables_check(const Fixtures& fx);

/// Names accepted by run_pipeline, in the order verify --all runs them.
const std::vector<std::string>& pipeline_names();
PipelineReport run_pipeline(const std::string& name, const Fixtures& fx, unsigned threads = 0, long cap = 0);

}  // namespace qhpp
