#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "qbs/bitstring.h"
#include "qbs/bool_expr.h"
#include "qbs/reversible.h"

namespace qbs {

constexpr int kDefaultMaxSearchBits = 20;

/// Explicit table of f: entry x holds f(x).
struct TruthTable {
    std::vector<uint8_t> values;

    uint8_t operator[](uint64_t x) const { return values[x]; }
    bool operator==(const TruthTable&) const = default;
};

/// The objective function f: {0..2^n-1} -> {0,1}. The search target y is always 1.
class OracleSpec {
   public:
    using Backend = std::variant<TruthTable, BoolExpr, ReversibleCircuit>;

    OracleSpec(int n, Backend backend);

    int n() const { return n_; }
    const Backend& backend() const { return backend_; }

    /// Dust qubits the backend's U_f needs (zero unless compiled).
    int ancilla_count() const;

    /// T(U_f) for the compiled backend.
    std::optional<int> t_uf() const;

    uint8_t eval(uint64_t x) const;
    uint8_t eval(const BitString& x) const;

    /// Materializes f for every x, whatever the backend.
    TruthTable table() const;

   private:
    int n_;
    Backend backend_;
};

OracleSpec build_truth_table(const BoolExpr& expr, int n, int max_bits = kDefaultMaxSearchBits);
OracleSpec build_truth_table(std::span<const uint64_t> minterms, int n, int max_bits = kDefaultMaxSearchBits);

/// f(x) for `x` of length spec.n(). Throws std::invalid_argument on length mismatch.
uint8_t eval_f(const OracleSpec& spec, const BitString& x);

struct ScanResult {
    std::optional<BitString> found;
    uint64_t calls = 0;
};

/// Linear scan x = 0, 1, ... stopping at the first solution.
ScanResult classical_scan(const OracleSpec& spec);

}  // namespace qbs
