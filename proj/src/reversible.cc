#include "qbs/reversible.h"

#include <stdexcept>

namespace qbs {

std::string to_string(const ReversibleGate& gate) {
    switch (gate.kind) {
        case ReversibleGate::Kind::X:
            return "X(" + std::to_string(gate.target) + ")";
        case ReversibleGate::Kind::CNOT:
            return "CNOT(" + std::to_string(gate.control1) + "," + std::to_string(gate.target) + ")";
        case ReversibleGate::Kind::Toffoli:
            return "Toffoli(" + std::to_string(gate.control1) + "," + std::to_string(gate.control2) + "," +
                   std::to_string(gate.target) + ")";
    }
    return "?";
}

uint64_t ReversibleCircuit::simulate(uint64_t basis) const {
    auto bit = [&](int q) { return (basis >> (q - 1)) & 1; };
    for (const auto& g : gates) {
        uint64_t flip = 0;
        switch (g.kind) {
            case ReversibleGate::Kind::X:
                flip = 1;
                break;
            case ReversibleGate::Kind::CNOT:
                flip = bit(g.control1);
                break;
            case ReversibleGate::Kind::Toffoli:
                flip = bit(g.control1) & bit(g.control2);
                break;
        }
        basis ^= flip << (g.target - 1);
    }
    return basis;
}

namespace {

BoolExpr binarize(const BoolExpr& e) {
    if (e.kind == BoolExpr::Kind::Var) {
        return e;
    }
    std::vector<BoolExpr> args;
    args.reserve(e.args.size());
    for (const auto& a : e.args) {
        args.push_back(binarize(a));
    }
    if (e.kind == BoolExpr::Kind::Not) {
        return BoolExpr::negate(std::move(args[0]));
    }
    if (e.kind == BoolExpr::Kind::Xor) {
        return BoolExpr::exclusive_or(std::move(args[0]), std::move(args[1]));
    }
    // Left fold: a & b & c -> (a & b) & c.
    BoolExpr acc = std::move(args[0]);
    for (size_t k = 1; k < args.size(); k++) {
        std::vector<BoolExpr> pair;
        pair.push_back(std::move(acc));
        pair.push_back(std::move(args[k]));
        acc = e.kind == BoolExpr::Kind::And ? BoolExpr::conj(std::move(pair)) : BoolExpr::disj(std::move(pair));
    }
    return acc;
}

class Compiler {
   public:
    Compiler(int n, int max_ancillas) : n_(n), max_ancillas_(max_ancillas) {}

    // Returns the qubit holding the value of `e`. Internal nodes are written to
    // a fresh ancilla.
    int operand(const BoolExpr& e) {
        if (e.kind == BoolExpr::Kind::Var) {
            return e.var;
        }
        if (ancillas_ >= max_ancillas_) {
            throw std::length_error("ancilla budget of " + std::to_string(max_ancillas_) + " exceeded");
        }
        ancillas_++;
        // Ancilla numbers are provisional; they are shifted past the search
        // register once the final count is known. Encode as negative.
        int line = -ancillas_;
        emit_into(e, line);
        return line;
    }

    void emit_into(const BoolExpr& e, int target) {
        switch (e.kind) {
            case BoolExpr::Kind::Var:
                gates_.push_back(ReversibleGate::cnot(e.var, target));
                break;
            case BoolExpr::Kind::Not: {
                int a = operand(e.args[0]);
                gates_.push_back(ReversibleGate::cnot(a, target));
                gates_.push_back(ReversibleGate::x(target));
                break;
            }
            case BoolExpr::Kind::And: {
                int a = operand(e.args[0]);
                int b = operand(e.args[1]);
                gates_.push_back(ReversibleGate::toffoli(a, b, target));
                break;
            }
            case BoolExpr::Kind::Xor: {
                int a = operand(e.args[0]);
                int b = operand(e.args[1]);
                gates_.push_back(ReversibleGate::cnot(a, target));
                gates_.push_back(ReversibleGate::cnot(b, target));
                break;
            }
            case BoolExpr::Kind::Or: {
                // a | b == a ^ b ^ (a & b)
                int a = operand(e.args[0]);
                int b = operand(e.args[1]);
                gates_.push_back(ReversibleGate::cnot(a, target));
                gates_.push_back(ReversibleGate::cnot(b, target));
                gates_.push_back(ReversibleGate::toffoli(a, b, target));
                break;
            }
        }
    }

    ReversibleCircuit finish() {
        ReversibleCircuit circuit;
        circuit.n = n_;
        circuit.m = ancillas_;
        int answer = circuit.answer_qubit();
        auto resolve = [&](int q) {
            if (q == kAnswer) {
                return answer;
            }
            return q < 0 ? n_ - q : q;
        };
        for (auto g : gates_) {
            if (g.control1 != 0) {
                g.control1 = resolve(g.control1);
            }
            if (g.control2 != 0) {
                g.control2 = resolve(g.control2);
            }
            g.target = resolve(g.target);
            circuit.gates.push_back(g);
        }
        return circuit;
    }

    static constexpr int kAnswer = -(1 << 30);

   private:
    int n_;
    int max_ancillas_;
    int ancillas_ = 0;
    std::vector<ReversibleGate> gates_;
};

}  // namespace

ReversibleCircuit compile_reversible(const BoolExpr& expr, int n, int max_ancillas) {
    if (n < 1) {
        throw std::invalid_argument("n must be positive");
    }
    validate(expr, n);
    Compiler compiler(n, max_ancillas);
    compiler.emit_into(binarize(expr), Compiler::kAnswer);
    return compiler.finish();
}

}  // namespace qbs
