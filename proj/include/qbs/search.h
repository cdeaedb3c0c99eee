#pragma once

#include <optional>
#include <vector>

#include "qbs/amplifier.h"
#include "qbs/bitstring.h"
#include "qbs/oracle.h"
#include "qbs/state.h"

namespace qbs {

/// Outcome of the stage that decides bit eps_i.
struct StageResult {
    int i = 0;
    BitString prefix;
    double p = 0;
    AmplifierTrace trace;
    uint8_t epsilon = 0;
    GateLog gates;
    /// p > 0 but the amplifier never crossed 1/2 within k_max.
    bool false_negative = false;
};

struct SearchReport {
    int n = 0;
    BitString bits;
    /// Set when a solution was confirmed.
    std::optional<uint64_t> solution;
    std::vector<StageResult> stages;
    /// True when no stage detected and f(1...1) was evaluated directly.
    bool final_check_performed = false;
    /// False when a detecting branch ended on a candidate with f = 0.
    bool consistent = true;
    GateLog gates;

    /// Sum of amplifier channel applications over all stages.
    long long channel_steps() const;
};

/// Runs stage i with eps_1..eps_{i-1} fixed to `prefix`: NOTs for prefix ones,
/// Hadamards on qubits i+1..n, U_f, answer-qubit reduction and amplification.
StageResult run_stage(int i, const BitString& prefix, const OracleSpec& spec, const AmplifierConfig& config);

/// Runs stages 1..n in order, threading the decided bits forward.
SearchReport run_search(const OracleSpec& spec, const AmplifierConfig& config);
SearchReport run_search(const OracleSpec& spec);

}  // namespace qbs
