#include "qbs/search.h"

#include <stdexcept>
#include <string>

namespace qbs {

long long SearchReport::channel_steps() const {
    long long total = 0;
    for (const auto& s : stages) {
        total += s.trace.steps();
    }
    return total;
}

StageResult run_stage(int i, const BitString& prefix, const OracleSpec& spec, const AmplifierConfig& config) {
    int n = spec.n();
    if (i < 1 || i > n) {
        throw std::out_of_range("stage " + std::to_string(i) + " outside [1, " + std::to_string(n) + "]");
    }
    if (prefix.size() != i - 1) {
        throw std::invalid_argument("stage " + std::to_string(i) + " needs a prefix of " + std::to_string(i - 1) +
                                    " bits");
    }

    auto state = QuantumState::basis(n, spec.ancilla_count(), BitString::zeros(n));
    for (int k = 1; k < i; k++) {
        if (prefix[k] == 1) {
            state.apply_not(k);
        }
    }

    BitString register_value = prefix;
    for (int k = i; k <= n; k++) {
        register_value.push_back(0);
    }
    auto amps = state.amplitudes();
    if (amps[register_value.to_integer()] != std::complex<double>{1, 0}) {
        throw std::logic_error("stage " + std::to_string(i) + " initial state does not encode the prefix");
    }

    for (int k = i + 1; k <= n; k++) {
        state.apply_hadamard(k);
    }
    state.apply_oracle(spec);

    QubitDensity rho = state.reduce_last_qubit();
    if (!rho.is_diagonal(1e-12)) {
        throw std::logic_error("answer-qubit reduction is not diagonal");
    }

    StageResult result;
    result.i = i;
    result.prefix = prefix;
    result.p = rho.p();
    result.trace = detect(result.p, config);
    result.epsilon = result.trace.detected ? 0 : 1;
    result.false_negative = !result.trace.detected && result.p > 0;
    result.gates = state.log();
    return result;
}

SearchReport run_search(const OracleSpec& spec, const AmplifierConfig& config) {
    config.validate();
    SearchReport report;
    report.n = spec.n();
    bool any_detected = false;
    for (int i = 1; i <= spec.n(); i++) {
        auto stage = run_stage(i, report.bits, spec, config);
        any_detected = any_detected || stage.trace.detected;
        report.bits.push_back(stage.epsilon);
        report.gates += stage.gates;
        report.stages.push_back(std::move(stage));
    }

    uint8_t value = eval_f(spec, report.bits);
    if (any_detected) {
        // The detecting branch guarantees a solution; a miss means the run is broken.
        report.consistent = value == 1;
    } else {
        report.final_check_performed = true;
    }
    if (value == 1) {
        report.solution = report.bits.to_integer();
    }
    return report;
}

SearchReport run_search(const OracleSpec& spec) { return run_search(spec, AmplifierConfig::for_width(spec.n())); }

}  // namespace qbs
