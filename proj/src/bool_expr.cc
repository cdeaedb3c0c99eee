#include "qbs/bool_expr.h"

#include <algorithm>
#include <cctype>

namespace qbs {

BoolExpr BoolExpr::variable(int index) {
    BoolExpr e;
    e.kind = Kind::Var;
    e.var = index;
    return e;
}

BoolExpr BoolExpr::negate(BoolExpr operand) {
    BoolExpr e;
    e.kind = Kind::Not;
    e.args.push_back(std::move(operand));
    return e;
}

static BoolExpr make_nary(BoolExpr::Kind kind, std::vector<BoolExpr> operands) {
    if (operands.size() < 2) {
        throw std::invalid_argument("And/Or need at least two operands");
    }
    BoolExpr e;
    e.kind = kind;
    e.args = std::move(operands);
    return e;
}

BoolExpr BoolExpr::conj(std::vector<BoolExpr> operands) { return make_nary(Kind::And, std::move(operands)); }

BoolExpr BoolExpr::disj(std::vector<BoolExpr> operands) { return make_nary(Kind::Or, std::move(operands)); }

BoolExpr BoolExpr::exclusive_or(BoolExpr lhs, BoolExpr rhs) {
    BoolExpr e;
    e.kind = Kind::Xor;
    e.args.push_back(std::move(lhs));
    e.args.push_back(std::move(rhs));
    return e;
}

bool BoolExpr::eval(uint64_t assignment) const {
    switch (kind) {
        case Kind::Var:
            return ((assignment >> (var - 1)) & 1) != 0;
        case Kind::Not:
            return !args[0].eval(assignment);
        case Kind::And:
            return std::all_of(args.begin(), args.end(), [&](const BoolExpr& a) { return a.eval(assignment); });
        case Kind::Or:
            return std::any_of(args.begin(), args.end(), [&](const BoolExpr& a) { return a.eval(assignment); });
        case Kind::Xor:
            return args[0].eval(assignment) != args[1].eval(assignment);
    }
    return false;
}

int BoolExpr::max_var() const {
    int result = kind == Kind::Var ? var : 0;
    for (const auto& a : args) {
        result = std::max(result, a.max_var());
    }
    return result;
}

int BoolExpr::node_count() const {
    int result = 1;
    for (const auto& a : args) {
        result += a.node_count();
    }
    return result;
}

int BoolExpr::depth() const {
    int result = 0;
    for (const auto& a : args) {
        result = std::max(result, a.depth());
    }
    return result + 1;
}

ParseError::ParseError(const std::string& message, size_t position)
    : std::runtime_error(message + " at position " + std::to_string(position)), position_(position) {}

namespace {

// Recursive descent, one function per precedence level:
//   or   := xor ('|' xor)*
//   xor  := and ('^' and)*
//   and  := unary ('&' unary)*
//   unary:= '~' unary | atom
//   atom := 'x' digits | '(' or ')'
class Parser {
   public:
    Parser(std::string_view text, int n) : text_(text), n_(n) {}

    BoolExpr parse() {
        BoolExpr result = parse_or();
        skip_space();
        if (pos_ != text_.size()) {
            throw ParseError(std::string("unexpected character '") + text_[pos_] + "'", pos_);
        }
        return result;
    }

   private:
    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            pos_++;
        }
    }

    bool accept(char c) {
        skip_space();
        if (pos_ < text_.size() && text_[pos_] == c) {
            pos_++;
            return true;
        }
        return false;
    }

    BoolExpr parse_or() {
        std::vector<BoolExpr> operands;
        operands.push_back(parse_xor());
        while (accept('|')) {
            operands.push_back(parse_xor());
        }
        return operands.size() == 1 ? std::move(operands[0]) : BoolExpr::disj(std::move(operands));
    }

    BoolExpr parse_xor() {
        BoolExpr lhs = parse_and();
        while (accept('^')) {
            lhs = BoolExpr::exclusive_or(std::move(lhs), parse_and());
        }
        return lhs;
    }

    BoolExpr parse_and() {
        std::vector<BoolExpr> operands;
        operands.push_back(parse_unary());
        while (accept('&')) {
            operands.push_back(parse_unary());
        }
        return operands.size() == 1 ? std::move(operands[0]) : BoolExpr::conj(std::move(operands));
    }

    BoolExpr parse_unary() {
        if (accept('~')) {
            return BoolExpr::negate(parse_unary());
        }
        return parse_atom();
    }

    BoolExpr parse_atom() {
        skip_space();
        if (pos_ >= text_.size()) {
            throw ParseError("unexpected end of expression", pos_);
        }
        size_t start = pos_;
        if (accept('(')) {
            BoolExpr inner = parse_or();
            if (!accept(')')) {
                throw ParseError("unclosed parenthesis opened at position " + std::to_string(start), pos_);
            }
            return inner;
        }
        if (text_[pos_] == 'x') {
            pos_++;
            size_t digits_start = pos_;
            long long index = 0;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                index = std::min<long long>(index * 10 + (text_[pos_] - '0'), 1LL << 40);
                pos_++;
            }
            if (pos_ == digits_start) {
                throw ParseError("expected variable index after 'x'", pos_);
            }
            if (index < 1 || index > n_) {
                throw ParseError("variable x" + std::string(text_.substr(digits_start, pos_ - digits_start)) +
                                     " out of range [1, " + std::to_string(n_) + "]",
                                 start);
            }
            return BoolExpr::variable(static_cast<int>(index));
        }
        throw ParseError(std::string("unexpected character '") + text_[pos_] + "'", pos_);
    }

    std::string_view text_;
    int n_;
    size_t pos_ = 0;
};

int precedence(BoolExpr::Kind kind) {
    switch (kind) {
        case BoolExpr::Kind::Or:
            return 0;
        case BoolExpr::Kind::Xor:
            return 1;
        case BoolExpr::Kind::And:
            return 2;
        default:
            return 3;
    }
}

void print(const BoolExpr& e, int parent_precedence, std::string& out) {
    int own = precedence(e.kind);
    bool wrap = own < parent_precedence;
    if (wrap) {
        out.push_back('(');
    }
    switch (e.kind) {
        case BoolExpr::Kind::Var:
            out += "x" + std::to_string(e.var);
            break;
        case BoolExpr::Kind::Not:
            out.push_back('~');
            print(e.args[0], 3, out);
            break;
        case BoolExpr::Kind::And:
        case BoolExpr::Kind::Or: {
            const char* op = e.kind == BoolExpr::Kind::And ? " & " : " | ";
            for (size_t k = 0; k < e.args.size(); k++) {
                if (k > 0) {
                    out += op;
                }
                // Nested same-kind operands are parenthesized to keep the tree shape on reparse.
                print(e.args[k], own + 1, out);
            }
            break;
        }
        case BoolExpr::Kind::Xor:
            print(e.args[0], own, out);
            out += " ^ ";
            print(e.args[1], own + 1, out);
            break;
    }
    if (wrap) {
        out.push_back(')');
    }
}

}  // namespace

BoolExpr parse_expression(std::string_view text, int n) {
    if (n < 1) {
        throw std::invalid_argument("n must be positive");
    }
    return Parser(text, n).parse();
}

std::string to_string(const BoolExpr& expr) {
    std::string out;
    print(expr, 0, out);
    return out;
}

void validate(const BoolExpr& expr, int n) {
    if (expr.kind == BoolExpr::Kind::Var && (expr.var < 1 || expr.var > n)) {
        throw std::out_of_range("variable x" + std::to_string(expr.var) + " out of range [1, " + std::to_string(n) + "]");
    }
    for (const auto& a : expr.args) {
        validate(a, n);
    }
}

}  // namespace qbs
