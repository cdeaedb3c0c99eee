#pragma once

#include <cstdint>

#include "qbs/search.h"

namespace qbs {

struct CostModel {
    int64_t n = 1;
    int64_t t_uf = 0;

    void validate() const;
};

/// Closed-form gate and channel counts. All values are exact integers.
struct CostFormula {
    /// n - 1 + t_uf, the same for every stage.
    int64_t per_stage = 0;
    /// n (n - 1) + n t_uf.
    int64_t gate_sum = 0;
    /// floor(5/4 (n - 1)) + 1 amplifier channels for one stage.
    int64_t stage_channel_bound = 0;
    /// floor(5/8 n (n - 2)) + 1.
    int64_t channel_bound = 0;
    /// floor(13/8 n^2 - 9/4 n + n t_uf) + 1.
    int64_t total = 0;
    /// gate_sum + channel_bound <= total.
    bool identity_holds = false;
};

struct MeasuredCounts {
    uint64_t hadamards = 0;
    uint64_t nots = 0;
    uint64_t oracle_calls = 0;
    uint64_t elementary_oracle_gates = 0;
    long long channel_steps = 0;
};

struct ReconcileReport {
    CostModel model;
    CostFormula formula;
    MeasuredCounts measured;
    /// n (n - 1) / 2, both the exact Hadamard count and the worst-case NOT count.
    int64_t expected_hadamards = 0;
    int64_t max_nots = 0;
    bool hadamards_match = false;
    bool nots_within_bound = false;
    bool oracle_calls_match = false;
    /// Reported only; see channel_bound.
    bool channel_steps_within_bound = false;
    int64_t hadamard_delta = 0;
    int64_t not_delta = 0;
    int64_t channel_delta = 0;

    bool gates_ok() const { return hadamards_match && nots_within_bound && oracle_calls_match; }
};

/// floor(num / den) for den > 0, including negative numerators.
int64_t floor_div(int64_t num, int64_t den);

int64_t stage_cost(int64_t n, int64_t i, int64_t t_uf);
CostFormula total_cost(const CostModel& model);

/// Compares the instrumented counts of `report` with the closed forms.
ReconcileReport reconcile(const SearchReport& report, const CostModel& model);

}  // namespace qbs
