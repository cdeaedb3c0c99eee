#include "qbs/accounting.h"

#include <stdexcept>
#include <string>

namespace qbs {

void CostModel::validate() const {
    if (n < 1) {
        throw std::invalid_argument("cost model needs n >= 1");
    }
    if (t_uf < 0) {
        throw std::invalid_argument("cost model needs t_uf >= 0");
    }
}

int64_t floor_div(int64_t num, int64_t den) {
    int64_t q = num / den;
    if ((num % den != 0) && (num < 0)) {
        q--;
    }
    return q;
}

int64_t stage_cost(int64_t n, int64_t i, int64_t t_uf) {
    if (i < 1 || i > n) {
        throw std::out_of_range("stage " + std::to_string(i) + " outside [1, " + std::to_string(n) + "]");
    }
    // (n - i) Hadamards + (i - 1) NOTs + one oracle.
    return (n - i) + (i - 1) + t_uf;
}

CostFormula total_cost(const CostModel& model) {
    model.validate();
    int64_t n = model.n;
    int64_t t = model.t_uf;
    CostFormula f;
    f.per_stage = n - 1 + t;
    f.gate_sum = n * (n - 1) + n * t;
    f.stage_channel_bound = floor_div(5 * (n - 1), 4) + 1;
    f.channel_bound = floor_div(5 * n * (n - 2), 8) + 1;
    // 13/8 n^2 - 9/4 n + n t  ==  (13 n^2 - 18 n + 8 n t) / 8
    f.total = floor_div(13 * n * n - 18 * n + 8 * n * t, 8) + 1;
    f.identity_holds = f.gate_sum + f.channel_bound <= f.total;
    return f;
}

ReconcileReport reconcile(const SearchReport& report, const CostModel& model) {
    if (report.n != model.n) {
        throw std::invalid_argument("search report has n = " + std::to_string(report.n) + ", cost model n = " +
                                    std::to_string(model.n));
    }
    ReconcileReport r;
    r.model = model;
    r.formula = total_cost(model);
    r.measured.hadamards = report.gates.hadamard_count;
    r.measured.nots = report.gates.not_count;
    r.measured.oracle_calls = report.gates.oracle_count;
    r.measured.elementary_oracle_gates = report.gates.elementary_gate_count;
    r.measured.channel_steps = report.channel_steps();

    int64_t n = model.n;
    r.expected_hadamards = n * (n - 1) / 2;
    r.max_nots = n * (n - 1) / 2;
    r.hadamards_match = static_cast<int64_t>(r.measured.hadamards) == r.expected_hadamards;
    r.nots_within_bound = static_cast<int64_t>(r.measured.nots) <= r.max_nots;
    r.oracle_calls_match = static_cast<int64_t>(r.measured.oracle_calls) == n;
    r.channel_steps_within_bound = r.measured.channel_steps <= r.formula.channel_bound;
    r.hadamard_delta = static_cast<int64_t>(r.measured.hadamards) - r.expected_hadamards;
    r.not_delta = static_cast<int64_t>(r.measured.nots) - r.max_nots;
    r.channel_delta = r.measured.channel_steps - r.formula.channel_bound;
    return r;
}

}  // namespace qbs
