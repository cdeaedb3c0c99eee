#include "qbs/report.h"

#include <ostream>

namespace qbs {

Json to_json(const CostFormula& f) {
    Json j;
    j["per_stage"] = f.per_stage;
    j["gate_sum"] = f.gate_sum;
    j["stage_channel_bound"] = f.stage_channel_bound;
    j["channel_bound"] = f.channel_bound;
    j["total_T"] = f.total;
    j["identity_holds"] = f.identity_holds;
    return j;
}

Json to_json(const ReconcileReport& r) {
    Json j;
    j["n"] = r.model.n;
    j["t_uf"] = r.model.t_uf;
    j["formula"] = to_json(r.formula);
    Json measured;
    measured["hadamards"] = r.measured.hadamards;
    measured["nots"] = r.measured.nots;
    measured["oracle_calls"] = r.measured.oracle_calls;
    measured["elementary_oracle_gates"] = r.measured.elementary_oracle_gates;
    measured["channel_steps"] = r.measured.channel_steps;
    j["measured"] = measured;
    Json checks;
    checks["expected_hadamards"] = r.expected_hadamards;
    checks["max_nots"] = r.max_nots;
    checks["hadamards_match"] = r.hadamards_match;
    checks["nots_within_bound"] = r.nots_within_bound;
    checks["oracle_calls_match"] = r.oracle_calls_match;
    checks["channel_steps_within_bound"] = r.channel_steps_within_bound;
    checks["hadamard_delta"] = r.hadamard_delta;
    checks["not_delta"] = r.not_delta;
    checks["channel_delta"] = r.channel_delta;
    j["checks"] = checks;
    return j;
}

Json to_json(const ScanResult& result) {
    Json j;
    if (result.found) {
        j["verdict"] = "Found";
        j["bits"] = result.found->to_string();
        j["x"] = result.found->to_integer();
    } else {
        j["verdict"] = "Reject";
    }
    j["calls"] = result.calls;
    return j;
}

Json to_json(const SearchReport& report, const std::optional<ReconcileReport>& complexity) {
    Json j;
    j["n"] = report.n;
    j["bits"] = report.bits.to_string();
    j["x"] = report.bits.to_integer();
    j["existence"] = report.solution ? "SolutionFound" : "NoSolution";
    j["consistent"] = report.consistent;
    j["final_check_performed"] = report.final_check_performed;
    Json stages = Json::array();
    for (const auto& s : report.stages) {
        Json st;
        st["i"] = s.i;
        st["prefix"] = s.prefix.to_string();
        st["p"] = s.p;
        st["detected"] = s.trace.detected;
        st["k"] = s.trace.k ? Json(*s.trace.k) : Json(nullptr);
        st["steps"] = s.trace.steps();
        st["x_final"] = s.trace.xs.back();
        st["epsilon"] = s.epsilon;
        st["false_negative"] = s.false_negative;
        st["hadamards"] = s.gates.hadamard_count;
        st["nots"] = s.gates.not_count;
        st["oracle_calls"] = s.gates.oracle_count;
        stages.push_back(st);
    }
    j["stages"] = stages;
    Json inst;
    inst["hadamards"] = report.gates.hadamard_count;
    inst["nots"] = report.gates.not_count;
    inst["oracle_calls"] = report.gates.oracle_count;
    inst["elementary_oracle_gates"] = report.gates.elementary_gate_count;
    inst["channel_steps"] = report.channel_steps();
    j["instrumentation"] = inst;
    if (complexity) {
        j["complexity"] = to_json(*complexity);
    }
    return j;
}

void write_text(std::ostream& out, const SearchReport& report) {
    out << "n = " << report.n << "\n";
    for (const auto& s : report.stages) {
        out << "stage " << s.i << ": prefix=" << (s.prefix.size() ? s.prefix.to_string() : "-") << " p=" << s.p
            << " k=" << (s.trace.k ? std::to_string(*s.trace.k) : "none") << " eps=" << int(s.epsilon) << "\n";
    }
    out << "bits = " << report.bits.to_string() << " (x = " << report.bits.to_integer() << ")\n";
    if (report.final_check_performed) {
        out << "final check f(1...1) = " << (report.solution ? 1 : 0) << "\n";
    }
    out << (report.solution ? "SolutionFound" : "NoSolution") << "\n";
}

}  // namespace qbs
