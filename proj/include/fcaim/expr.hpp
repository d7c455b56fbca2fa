#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "fcaim/contingency.hpp"

namespace fcaim {

/// Probability symbols a measure may reference, plus the total n.
enum class Var { pxy, pxny, pnxy, pnxny, px, py, pnx, pny, n };
inline constexpr std::size_t kVarCount = 9;

std::string_view var_name(Var v);

enum class BinOp { add, sub, mul, div, pow };
enum class Func { sqrt, ln, log2, abs, min, max };

std::string_view func_name(Func f);
std::size_t func_arity(Func f);

/// Expression tree node. Literals are non-negative; negation is a node.
struct Expr {
    enum class Kind { number, variable, negate, binary, call };

    Kind kind = Kind::number;
    double number = 0;
    Var var = Var::pxy;
    BinOp op = BinOp::add;
    Func func = Func::sqrt;
    std::vector<Expr> children;

    static Expr literal(double v);
    static Expr variable(Var v);
    static Expr negate(Expr e);
    static Expr binary(BinOp op, Expr lhs, Expr rhs);
    static Expr call(Func f, std::vector<Expr> args);

    friend bool operator==(const Expr&, const Expr&) = default;
};

/// Syntax error carrying the 0-based character offset where parsing failed.
class syntax_error : public input_error {
public:
    syntax_error(const std::string& what, std::size_t position)
        : input_error(what + " at position " + std::to_string(position)), position_(position) {}
    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

class unknown_identifier : public input_error {
public:
    explicit unknown_identifier(std::string name)
        : input_error("unknown identifier '" + name + "'"), name_(std::move(name)) {}
    const std::string& name() const noexcept { return name_; }

private:
    std::string name_;
};

/// Precedence, tightest first: ^ (right-assoc), unary minus, * /, + -.
Expr parse_expr(std::string_view src);

/// Minimal-parenthesis rendering; parse_expr(print_expr(e)) == e.
std::string print_expr(const Expr& e);

/// Why an evaluation has no value.
enum class Fault { none, division_by_zero, log_domain, sqrt_domain, pow_domain, non_finite };

std::string_view fault_name(Fault f);

/// Either a finite value or the fault that prevented one.
struct Evaluation {
    double value = 0;
    Fault fault = Fault::none;

    bool defined() const noexcept { return fault == Fault::none; }
    static Evaluation undefined(Fault f) { return {0.0, f}; }
};

using Bindings = std::array<double, kVarCount>;

Bindings bind(const FullTable& t);

/// Parsed measure expression compiled to a postfix program.
class MeasureExpr {
public:
    MeasureExpr() = default;
    explicit MeasureExpr(Expr tree);
    static MeasureExpr parse(std::string_view src) { return MeasureExpr(parse_expr(src)); }

    const Expr& tree() const noexcept { return tree_; }
    bool uses(Var v) const noexcept { return uses_[static_cast<std::size_t>(v)]; }

    Evaluation evaluate(const Bindings& b) const;
    Evaluation evaluate(const ContingencyTable& t) const { return evaluate(bind(derive_cells(t))); }

private:
    struct Instr {
        enum class Code { push, load, neg, add, sub, mul, div, pow, sqrt, ln, log2, abs, min, max };
        Code code;
        double value = 0;
        std::size_t slot = 0;
    };
    void compile(const Expr& e);

    Expr tree_;
    std::vector<Instr> program_;
    std::array<bool, kVarCount> uses_{};
    std::size_t max_depth_ = 0;
};

}  // namespace fcaim
