#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qbs/bool_expr.h"

namespace qbs {

/// Classical reversible gate. Qubits are 1-based; unused controls are 0.
struct ReversibleGate {
    enum class Kind { X, CNOT, Toffoli };

    Kind kind;
    int control1 = 0;
    int control2 = 0;
    int target = 0;

    static ReversibleGate x(int target) { return {Kind::X, 0, 0, target}; }
    static ReversibleGate cnot(int control, int target) { return {Kind::CNOT, control, 0, target}; }
    static ReversibleGate toffoli(int c1, int c2, int target) { return {Kind::Toffoli, c1, c2, target}; }

    bool operator==(const ReversibleGate&) const = default;
};

std::string to_string(const ReversibleGate& gate);

/// Oracle circuit over n search qubits, m dust ancillas and one answer qubit.
///
/// Layout: qubits 1..n hold x, n+1..n+m are ancillas, n+m+1 is the answer.
/// Ancillas are not uncomputed, so they end up holding intermediate values.
struct ReversibleCircuit {
    int n = 0;
    int m = 0;
    std::vector<ReversibleGate> gates;

    int total_qubits() const { return n + m + 1; }
    int answer_qubit() const { return n + m + 1; }
    int t_uf() const { return static_cast<int>(gates.size()); }

    /// Runs the gate list on a basis state (bit q-1 of `basis` is qubit q).
    uint64_t simulate(uint64_t basis) const;
};

constexpr int kDefaultMaxAncillas = 24;

/// Compiles `expr` into a reversible circuit computing f into the answer qubit.
///
/// Each internal node of the (binarized) tree gets its own ancilla, except the
/// root which writes straight into the answer qubit. Variables are used in
/// place as controls. Node rules, with t a fresh |0> line:
///   Var v        CNOT(v, t)                 (root only)
///   Not a        CNOT(a, t), X(t)
///   And a b      Toffoli(a, b, t)
///   Xor a b      CNOT(a, t), CNOT(b, t)
///   Or  a b      CNOT(a, t), CNOT(b, t), Toffoli(a, b, t)
/// Throws std::length_error when more than `max_ancillas` ancillas are needed.
ReversibleCircuit compile_reversible(const BoolExpr& expr, int n, int max_ancillas = kDefaultMaxAncillas);

}  // namespace qbs
