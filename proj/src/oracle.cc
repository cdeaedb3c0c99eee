#include "qbs/oracle.h"

#include <stdexcept>
#include <string>

namespace qbs {

namespace {

void check_width(int n, int max_bits) {
    if (n < 1) {
        throw std::invalid_argument("n must be positive");
    }
    if (n > max_bits) {
        throw std::length_error("n = " + std::to_string(n) + " exceeds cap of " + std::to_string(max_bits));
    }
}

template <class... Fs>
struct overloaded : Fs... {
    using Fs::operator()...;
};

}  // namespace

OracleSpec::OracleSpec(int n, Backend backend) : n_(n), backend_(std::move(backend)) {
    if (n < 1 || n > 63) {
        throw std::invalid_argument("n must be in [1, 63]");
    }
    std::visit(overloaded{
                   [&](const TruthTable& t) {
                       if (t.values.size() != (uint64_t{1} << n_)) {
                           throw std::invalid_argument("truth table length must be 2^n");
                       }
                       for (auto v : t.values) {
                           if (v > 1) {
                               throw std::invalid_argument("truth table entries must be 0 or 1");
                           }
                       }
                   },
                   [&](const BoolExpr& e) { validate(e, n_); },
                   [&](const ReversibleCircuit& c) {
                       if (c.n != n_) {
                           throw std::invalid_argument("circuit search width does not match n");
                       }
                       for (const auto& g : c.gates) {
                           if (g.target <= n_ || g.target > c.total_qubits()) {
                               throw std::invalid_argument("circuit gate " + to_string(g) + " targets an invalid qubit");
                           }
                       }
                   },
               },
               backend_);
}

int OracleSpec::ancilla_count() const {
    if (auto c = std::get_if<ReversibleCircuit>(&backend_)) {
        return c->m;
    }
    return 0;
}

std::optional<int> OracleSpec::t_uf() const {
    if (auto c = std::get_if<ReversibleCircuit>(&backend_)) {
        return c->t_uf();
    }
    return std::nullopt;
}

uint8_t OracleSpec::eval(uint64_t x) const {
    if (x >> n_) {
        throw std::out_of_range("x = " + std::to_string(x) + " outside {0, ..., 2^" + std::to_string(n_) + " - 1}");
    }
    return std::visit(overloaded{
                          [&](const TruthTable& t) { return t[x]; },
                          [&](const BoolExpr& e) { return static_cast<uint8_t>(e.eval(x)); },
                          [&](const ReversibleCircuit& c) {
                              return static_cast<uint8_t>((c.simulate(x) >> (c.answer_qubit() - 1)) & 1);
                          },
                      },
                      backend_);
}

uint8_t OracleSpec::eval(const BitString& x) const { return eval_f(*this, x); }

TruthTable OracleSpec::table() const {
    if (auto t = std::get_if<TruthTable>(&backend_)) {
        return *t;
    }
    TruthTable out;
    uint64_t size = uint64_t{1} << n_;
    out.values.resize(size);
    for (uint64_t x = 0; x < size; x++) {
        out.values[x] = eval(x);
    }
    return out;
}

OracleSpec build_truth_table(const BoolExpr& expr, int n, int max_bits) {
    check_width(n, max_bits);
    validate(expr, n);
    TruthTable table;
    uint64_t size = uint64_t{1} << n;
    table.values.resize(size);
    for (uint64_t x = 0; x < size; x++) {
        table.values[x] = expr.eval(x) ? 1 : 0;
    }
    return OracleSpec(n, std::move(table));
}

OracleSpec build_truth_table(std::span<const uint64_t> minterms, int n, int max_bits) {
    check_width(n, max_bits);
    TruthTable table;
    uint64_t size = uint64_t{1} << n;
    table.values.assign(size, 0);
    for (auto x : minterms) {
        if (x >= size) {
            throw std::out_of_range("minterm " + std::to_string(x) + " outside [0, " + std::to_string(size - 1) + "]");
        }
        table.values[x] = 1;
    }
    return OracleSpec(n, std::move(table));
}

uint8_t eval_f(const OracleSpec& spec, const BitString& x) {
    if (x.size() != spec.n()) {
        throw std::invalid_argument("input has " + std::to_string(x.size()) + " bits, oracle expects " +
                                    std::to_string(spec.n()));
    }
    return spec.eval(x.to_integer());
}

ScanResult classical_scan(const OracleSpec& spec) {
    ScanResult result;
    uint64_t size = uint64_t{1} << spec.n();
    for (uint64_t i = 0; i < size; i++) {
        result.calls++;
        if (spec.eval(i) == 1) {
            result.found = BitString::from_integer(i, spec.n());
            return result;
        }
    }
    return result;
}

}  // namespace qbs
