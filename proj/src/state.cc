#include "qbs/state.h"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <ostream>
#include <stdexcept>
#include <string>

namespace qbs {

int max_qubits() {
    if (const char* env = std::getenv("QBS_MAX_QUBITS")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v > 0 && v <= 40) {
            return static_cast<int>(v);
        }
    }
    return kDefaultMaxQubits;
}

GateLog& GateLog::operator+=(const GateLog& other) {
    hadamard_count += other.hadamard_count;
    not_count += other.not_count;
    oracle_count += other.oracle_count;
    elementary_gate_count += other.elementary_gate_count;
    return *this;
}

double QubitDensity::min_eigenvalue() const {
    double a = r00.real();
    double d = r11.real();
    double mean = (a + d) / 2;
    double half_gap = std::sqrt((a - d) * (a - d) / 4 + std::norm(r01));
    return mean - half_gap;
}

bool QubitDensity::is_hermitian(double tol) const {
    return std::abs(r00.imag()) <= tol && std::abs(r11.imag()) <= tol && std::abs(r01 - std::conj(r10)) <= tol;
}

QubitDensity QubitDensity::diagonal(double w0, double w1) { return QubitDensity{{w0, 0}, {0, 0}, {0, 0}, {w1, 0}}; }

QuantumState::QuantumState(int n, int m) : n_(n), m_(m) {
    if (n < 1 || m < 0) {
        throw std::invalid_argument("need n >= 1 and m >= 0");
    }
    int cap = max_qubits();
    if (n + m + 1 > cap) {
        throw std::length_error(std::to_string(n + m + 1) + " qubits exceed the cap of " + std::to_string(cap));
    }
    amps_.assign(size_t{1} << (n + m + 1), {0, 0});
}

QuantumState QuantumState::basis(int n, int m, const BitString& prefix) {
    if (prefix.size() != n) {
        throw std::invalid_argument("prefix must have exactly n bits");
    }
    QuantumState state(n, m);
    state.amps_[prefix.to_integer()] = 1;
    return state;
}

void QuantumState::check_qubit(int qubit) const {
    if (qubit < 1 || qubit > qubit_count()) {
        throw std::out_of_range("qubit " + std::to_string(qubit) + " outside [1, " + std::to_string(qubit_count()) + "]");
    }
}

namespace {

// 1/sqrt(2) split into the nearest double plus its residual. Scaling with the
// pair keeps repeated Hadamards from drifting the norm by the rounding bias of
// the constant alone.
constexpr double kInvSqrt2Hi = 0.7071067811865476;
constexpr double kInvSqrt2Lo = -4.833646656726457e-17;

inline double scale_inv_sqrt2(double v) { return std::fma(v, kInvSqrt2Hi, v * kInvSqrt2Lo); }

inline std::complex<double> scale_inv_sqrt2(std::complex<double> v) {
    return {scale_inv_sqrt2(v.real()), scale_inv_sqrt2(v.imag())};
}

}  // namespace

void QuantumState::apply_hadamard(int qubit) {
    check_qubit(qubit);
    size_t stride = size_t{1} << (qubit - 1);
    for (size_t base = 0; base < amps_.size(); base += 2 * stride) {
        for (size_t k = base; k < base + stride; k++) {
            auto a = amps_[k];
            auto b = amps_[k + stride];
            amps_[k] = scale_inv_sqrt2(a + b);
            amps_[k + stride] = scale_inv_sqrt2(a - b);
        }
    }
    log_.hadamard_count++;
}

void QuantumState::apply_not(int qubit) {
    check_qubit(qubit);
    apply_x_raw(qubit);
    log_.not_count++;
}

void QuantumState::apply_x_raw(int qubit) {
    size_t stride = size_t{1} << (qubit - 1);
    for (size_t base = 0; base < amps_.size(); base += 2 * stride) {
        for (size_t k = base; k < base + stride; k++) {
            std::swap(amps_[k], amps_[k + stride]);
        }
    }
}

void QuantumState::apply_cnot_raw(int control, int target) {
    size_t cmask = size_t{1} << (control - 1);
    size_t tmask = size_t{1} << (target - 1);
    for (size_t k = 0; k < amps_.size(); k++) {
        if ((k & cmask) && !(k & tmask)) {
            std::swap(amps_[k], amps_[k | tmask]);
        }
    }
}

void QuantumState::apply_toffoli_raw(int c1, int c2, int target) {
    size_t cmask = (size_t{1} << (c1 - 1)) | (size_t{1} << (c2 - 1));
    size_t tmask = size_t{1} << (target - 1);
    for (size_t k = 0; k < amps_.size(); k++) {
        if ((k & cmask) == cmask && !(k & tmask)) {
            std::swap(amps_[k], amps_[k | tmask]);
        }
    }
}

void QuantumState::apply_oracle(const OracleSpec& spec) {
    if (spec.n() != n_) {
        throw std::invalid_argument("oracle width " + std::to_string(spec.n()) + " does not match search register " +
                                    std::to_string(n_));
    }
    if (spec.ancilla_count() != m_) {
        throw std::invalid_argument("oracle needs " + std::to_string(spec.ancilla_count()) + " dust qubits, state has " +
                                    std::to_string(m_));
    }
    size_t search_mask = (size_t{1} << n_) - 1;
    for (size_t k = 0; k < amps_.size(); k++) {
        if ((k & ~search_mask) != 0 && amps_[k] != std::complex<double>{0, 0}) {
            throw std::logic_error("oracle input must have dust and answer qubits in |0>; index " + std::to_string(k) +
                                   " is populated");
        }
    }

    if (const auto* circuit = std::get_if<ReversibleCircuit>(&spec.backend())) {
        for (const auto& g : circuit->gates) {
            switch (g.kind) {
                case ReversibleGate::Kind::X:
                    apply_x_raw(g.target);
                    break;
                case ReversibleGate::Kind::CNOT:
                    apply_cnot_raw(g.control1, g.target);
                    break;
                case ReversibleGate::Kind::Toffoli:
                    apply_toffoli_raw(g.control1, g.control2, g.target);
                    break;
            }
        }
        log_.elementary_gate_count += circuit->gates.size();
    } else {
        // Only the |x>|0>|0> block is populated, so flipping the answer bit is a swap with an empty slot.
        size_t answer = size_t{1} << (answer_qubit() - 1);
        for (size_t x = 0; x <= search_mask; x++) {
            if (amps_[x] != std::complex<double>{0, 0} && spec.eval(x) == 1) {
                std::swap(amps_[x], amps_[x | answer]);
            }
        }
    }
    log_.oracle_count++;
}

QubitDensity QuantumState::reduce_last_qubit() const {
    double norm = norm_squared();
    if (std::abs(norm - 1) > 1e-9) {
        throw std::logic_error("state norm^2 = " + std::to_string(norm) + " is not 1");
    }
    size_t half = amps_.size() / 2;
    QubitDensity rho;
    rho.r00 = 0;
    for (size_t k = 0; k < half; k++) {
        const auto& a0 = amps_[k];
        const auto& a1 = amps_[k + half];
        rho.r00 += std::norm(a0);
        rho.r11 += std::norm(a1);
        rho.r01 += a0 * std::conj(a1);
    }
    // Divide out the residual norm so that exact splits (all weight on one side,
    // or equal halves) come out exact.
    double total = rho.r00.real() + rho.r11.real();
    rho.r00 /= total;
    rho.r11 /= total;
    rho.r01 /= total;
    rho.r10 = std::conj(rho.r01);
    return rho;
}

double QuantumState::norm_squared() const {
    double total = 0;
    for (const auto& a : amps_) {
        total += std::norm(a);
    }
    return total;
}

void QuantumState::dump(std::ostream& out, double threshold) const {
    char line[96];
    for (size_t k = 0; k < amps_.size(); k++) {
        if (std::abs(amps_[k]) > threshold) {
            std::snprintf(line, sizeof(line), "%zu %.17g %.17g\n", k, amps_[k].real(), amps_[k].imag());
            out << line;
        }
    }
}

}  // namespace qbs
