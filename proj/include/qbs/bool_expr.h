#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace qbs {

/// Boolean formula over variables x1…xn.
///
/// And/Or are n-ary (at least two operands), Xor is binary, Not is unary and
/// Var carries a 1-based variable index.
struct BoolExpr {
    enum class Kind { Var, Not, And, Or, Xor };

    Kind kind = Kind::Var;
    int var = 0;
    std::vector<BoolExpr> args;

    static BoolExpr variable(int index);
    static BoolExpr negate(BoolExpr operand);
    static BoolExpr conj(std::vector<BoolExpr> operands);
    static BoolExpr disj(std::vector<BoolExpr> operands);
    static BoolExpr exclusive_or(BoolExpr lhs, BoolExpr rhs);

    /// Evaluates with x_k = bit (k-1) of `assignment`.
    bool eval(uint64_t assignment) const;

    int max_var() const;
    int node_count() const;
    int depth() const;

    bool operator==(const BoolExpr&) const = default;
};

/// Thrown for malformed expression text. `position` is a 0-based byte offset.
class ParseError : public std::runtime_error {
   public:
    ParseError(const std::string& message, size_t position);
    size_t position() const { return position_; }

   private:
    size_t position_;
};

/// Grammar: `x1`…`xn`, `~`, `&`, `^`, `|`, parentheses. Precedence ~ > & > ^ > |.
BoolExpr parse_expression(std::string_view text, int n);

/// Prints an expression in the grammar accepted by parse_expression.
std::string to_string(const BoolExpr& expr);

/// Throws if any variable index lies outside [1, n].
void validate(const BoolExpr& expr, int n);

}  // namespace qbs
