#pragma once

#include <complex>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "qbs/bitstring.h"
#include "qbs/oracle.h"

namespace qbs {

constexpr int kDefaultMaxQubits = 26;

/// Qubit cap for dense simulation; QBS_MAX_QUBITS overrides the default.
int max_qubits();

/// Gate applications recorded over a run.
struct GateLog {
    uint64_t hadamard_count = 0;
    uint64_t not_count = 0;
    uint64_t oracle_count = 0;
    /// X/CNOT/Toffoli gates executed inside compiled oracles.
    uint64_t elementary_gate_count = 0;

    GateLog& operator+=(const GateLog& other);
    bool operator==(const GateLog&) const = default;
};

/// 2x2 density operator of a single qubit.
struct QubitDensity {
    std::complex<double> r00{1, 0};
    std::complex<double> r01{0, 0};
    std::complex<double> r10{0, 0};
    std::complex<double> r11{0, 0};

    /// Weight on |1><1|.
    double p() const { return r11.real(); }
    double trace() const { return r00.real() + r11.real(); }
    /// tr(rho sigma_3).
    double bloch_z() const { return r00.real() - r11.real(); }
    double min_eigenvalue() const;
    bool is_hermitian(double tol = 1e-12) const;
    bool is_diagonal(double tol = 1e-12) const { return std::abs(r01) <= tol && std::abs(r10) <= tol; }

    static QubitDensity diagonal(double w0, double w1);
};

/// Dense amplitude vector over n search qubits, m dust qubits and one answer qubit.
///
/// Qubit q (1-based) is bit q-1 of the amplitude index, so the search register
/// value x = sum 2^(k-1) eps_k is the low n bits of the index.
class QuantumState {
   public:
    /// |prefix> (x) |0^m> (x) |0>. Throws std::length_error past max_qubits().
    static QuantumState basis(int n, int m, const BitString& prefix);

    int n() const { return n_; }
    int m() const { return m_; }
    int qubit_count() const { return n_ + m_ + 1; }
    int answer_qubit() const { return qubit_count(); }

    std::span<const std::complex<double>> amplitudes() const { return amps_; }
    const GateLog& log() const { return log_; }

    void apply_hadamard(int qubit);
    void apply_not(int qubit);

    /// U_f |x>|0^m>|0> = |x>|z_x>|f(x)>. Requires dust and answer to be |0>
    /// on every populated component.
    void apply_oracle(const OracleSpec& spec);

    /// Partial trace onto the answer qubit.
    QubitDensity reduce_last_qubit() const;

    double norm_squared() const;

    /// Lines of `index re im` for |amplitude| > threshold.
    void dump(std::ostream& out, double threshold = 1e-14) const;

   private:
    QuantumState(int n, int m);

    void check_qubit(int qubit) const;
    void apply_x_raw(int qubit);
    void apply_cnot_raw(int control, int target);
    void apply_toffoli_raw(int c1, int c2, int target);

    int n_;
    int m_;
    std::vector<std::complex<double>> amps_;
    GateLog log_;
};

}  // namespace qbs
