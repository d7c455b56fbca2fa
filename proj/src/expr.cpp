#include "fcaim/expr.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>

namespace fcaim {

namespace {

constexpr std::array<std::string_view, kVarCount> kVarNames = {
    "pxy", "pxny", "pnxy", "pnxny", "px", "py", "pnx", "pny", "n"};

struct FuncInfo {
    std::string_view name;
    Func func;
    std::size_t arity;
};

constexpr std::array<FuncInfo, 6> kFuncs = {{
    {"sqrt", Func::sqrt, 1},
    {"ln", Func::ln, 1},
    {"log2", Func::log2, 1},
    {"abs", Func::abs, 1},
    {"min", Func::min, 2},
    {"max", Func::max, 2},
}};

class Parser {
public:
    explicit Parser(std::string_view src) : src_(src) {}

    Expr run() {
        skip_space();
        if (pos_ == src_.size()) throw syntax_error("empty expression", pos_);
        Expr e = expression();
        skip_space();
        if (pos_ != src_.size()) throw syntax_error("unexpected '" + std::string(1, src_[pos_]) + "'", pos_);
        return e;
    }

private:
    void skip_space() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    }
    bool accept(char c) {
        skip_space();
        if (pos_ < src_.size() && src_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!accept(c)) {
            if (pos_ == src_.size())
                throw syntax_error(std::string("expected '") + c + "' but input ended", pos_);
            throw syntax_error(std::string("expected '") + c + "'", pos_);
        }
    }

    Expr expression() {
        Expr lhs = term();
        while (true) {
            if (accept('+'))
                lhs = Expr::binary(BinOp::add, std::move(lhs), term());
            else if (accept('-'))
                lhs = Expr::binary(BinOp::sub, std::move(lhs), term());
            else
                return lhs;
        }
    }

    Expr term() {
        Expr lhs = unary();
        while (true) {
            if (accept('*'))
                lhs = Expr::binary(BinOp::mul, std::move(lhs), unary());
            else if (accept('/'))
                lhs = Expr::binary(BinOp::div, std::move(lhs), unary());
            else
                return lhs;
        }
    }

    Expr unary() {
        if (accept('-')) return Expr::negate(unary());
        return power();
    }

    Expr power() {
        Expr base = primary();
        if (accept('^')) return Expr::binary(BinOp::pow, std::move(base), unary());
        return base;
    }

    Expr primary() {
        skip_space();
        if (pos_ == src_.size()) throw syntax_error("expected operand but input ended", pos_);
        char c = src_[pos_];
        if (c == '(') {
            ++pos_;
            Expr e = expression();
            expect(')');
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return identifier();
        throw syntax_error("unexpected '" + std::string(1, c) + "'", pos_);
    }

    Expr number() {
        std::size_t start = pos_;
        auto digits = [&] {
            std::size_t s = pos_;
            while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
            return pos_ - s;
        };
        std::size_t int_digits = digits();
        std::size_t frac_digits = 0;
        if (pos_ < src_.size() && src_[pos_] == '.') {
            ++pos_;
            frac_digits = digits();
        }
        if (int_digits + frac_digits == 0) throw syntax_error("malformed number", start);
        if (pos_ < src_.size() && (src_[pos_] == 'e' || src_[pos_] == 'E')) {
            std::size_t save = pos_++;
            if (pos_ < src_.size() && (src_[pos_] == '+' || src_[pos_] == '-')) ++pos_;
            if (digits() == 0) throw syntax_error("malformed exponent", save);
        }
        std::string text(src_.substr(start, pos_ - start));
        char* end = nullptr;
        double v = std::strtod(text.c_str(), &end);
        if (end != text.c_str() + text.size() || !std::isfinite(v)) throw syntax_error("malformed number", start);
        return Expr::literal(v);
    }

    Expr identifier() {
        std::size_t start = pos_;
        while (pos_ < src_.size() &&
               (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
            ++pos_;
        std::string_view name = src_.substr(start, pos_ - start);
        for (std::size_t i = 0; i < kVarCount; ++i)
            if (kVarNames[i] == name) return Expr::variable(static_cast<Var>(i));
        for (const auto& f : kFuncs) {
            if (f.name != name) continue;
            expect('(');
            std::vector<Expr> args;
            args.push_back(expression());
            while (accept(',')) args.push_back(expression());
            expect(')');
            if (args.size() != f.arity)
                throw syntax_error(std::string(f.name) + " expects " + std::to_string(f.arity) +
                                       " argument(s), got " + std::to_string(args.size()),
                                   start);
            return Expr::call(f.func, std::move(args));
        }
        throw unknown_identifier(std::string(name));
    }

    std::string_view src_;
    std::size_t pos_ = 0;
};

// Binding strength used by the printer.
int precedence(const Expr& e) {
    switch (e.kind) {
    case Expr::Kind::binary:
        switch (e.op) {
        case BinOp::add:
        case BinOp::sub: return 1;
        case BinOp::mul:
        case BinOp::div: return 2;
        case BinOp::pow: return 4;
        }
        break;
    case Expr::Kind::negate: return 3;
    default: return 5;
    }
    return 5;
}

void print(const Expr& e, std::string& out);

void print_paren(const Expr& e, bool paren, std::string& out) {
    if (paren) out += '(';
    print(e, out);
    if (paren) out += ')';
}

void print(const Expr& e, std::string& out) {
    switch (e.kind) {
    case Expr::Kind::number: {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.17g", e.number);
        out += buf;
        return;
    }
    case Expr::Kind::variable: out += var_name(e.var); return;
    case Expr::Kind::negate:
        out += '-';
        print_paren(e.children[0], precedence(e.children[0]) < 3, out);
        return;
    case Expr::Kind::call:
        out += func_name(e.func);
        out += '(';
        for (std::size_t i = 0; i < e.children.size(); ++i) {
            if (i) out += ", ";
            print(e.children[i], out);
        }
        out += ')';
        return;
    case Expr::Kind::binary: {
        const Expr& l = e.children[0];
        const Expr& r = e.children[1];
        int p = precedence(e);
        if (e.op == BinOp::pow) {
            print_paren(l, precedence(l) <= 4, out);
            out += '^';
            print_paren(r, precedence(r) < 3, out);
            return;
        }
        print_paren(l, precedence(l) < p, out);
        switch (e.op) {
        case BinOp::add: out += " + "; break;
        case BinOp::sub: out += " - "; break;
        case BinOp::mul: out += " * "; break;
        case BinOp::div: out += " / "; break;
        case BinOp::pow: break;
        }
        print_paren(r, precedence(r) <= p, out);
        return;
    }
    }
}

}  // namespace

std::string_view var_name(Var v) { return kVarNames[static_cast<std::size_t>(v)]; }

std::string_view func_name(Func f) {
    for (const auto& i : kFuncs)
        if (i.func == f) return i.name;
    return "?";
}

std::size_t func_arity(Func f) {
    for (const auto& i : kFuncs)
        if (i.func == f) return i.arity;
    return 0;
}

std::string_view fault_name(Fault f) {
    switch (f) {
    case Fault::none: return "none";
    case Fault::division_by_zero: return "division by zero";
    case Fault::log_domain: return "logarithm of non-positive value";
    case Fault::sqrt_domain: return "square root of negative value";
    case Fault::pow_domain: return "power outside real domain";
    case Fault::non_finite: return "non-finite result";
    }
    return "?";
}

Expr Expr::literal(double v) {
    Expr e;
    e.kind = Kind::number;
    e.number = v;
    return e;
}

Expr Expr::variable(Var v) {
    Expr e;
    e.kind = Kind::variable;
    e.var = v;
    return e;
}

Expr Expr::negate(Expr child) {
    Expr e;
    e.kind = Kind::negate;
    e.children.push_back(std::move(child));
    return e;
}

Expr Expr::binary(BinOp op, Expr lhs, Expr rhs) {
    Expr e;
    e.kind = Kind::binary;
    e.op = op;
    e.children.push_back(std::move(lhs));
    e.children.push_back(std::move(rhs));
    return e;
}

Expr Expr::call(Func f, std::vector<Expr> args) {
    Expr e;
    e.kind = Kind::call;
    e.func = f;
    e.children = std::move(args);
    return e;
}

Expr parse_expr(std::string_view src) { return Parser(src).run(); }

std::string print_expr(const Expr& e) {
    std::string out;
    print(e, out);
    return out;
}

Bindings bind(const FullTable& t) {
    return {t.p_xy, t.p_x_ny, t.p_nx_y, t.p_nx_ny, t.p_x, t.p_y, t.p_nx, t.p_ny, t.n};
}

MeasureExpr::MeasureExpr(Expr tree) : tree_(std::move(tree)) {
    compile(tree_);
    // Every instruction pushes at most one value, so the program length bounds the stack.
    max_depth_ = program_.size();
}

void MeasureExpr::compile(const Expr& e) {
    using Code = Instr::Code;
    switch (e.kind) {
    case Expr::Kind::number: program_.push_back({Code::push, e.number, 0}); return;
    case Expr::Kind::variable: {
        auto slot = static_cast<std::size_t>(e.var);
        uses_[slot] = true;
        program_.push_back({Code::load, 0, slot});
        return;
    }
    case Expr::Kind::negate:
        compile(e.children[0]);
        program_.push_back({Code::neg});
        return;
    case Expr::Kind::binary: {
        compile(e.children[0]);
        compile(e.children[1]);
        static constexpr Code codes[] = {Code::add, Code::sub, Code::mul, Code::div, Code::pow};
        program_.push_back({codes[static_cast<int>(e.op)]});
        return;
    }
    case Expr::Kind::call: {
        for (const auto& c : e.children) compile(c);
        static constexpr Code codes[] = {Code::sqrt, Code::ln, Code::log2, Code::abs, Code::min, Code::max};
        program_.push_back({codes[static_cast<int>(e.func)]});
        return;
    }
    }
}

Evaluation MeasureExpr::evaluate(const Bindings& b) const {
    using Code = Instr::Code;
    if (program_.empty()) return Evaluation::undefined(Fault::non_finite);
    std::vector<double> stack;
    stack.reserve(max_depth_);
    for (const Instr& ins : program_) {
        switch (ins.code) {
        case Code::push: stack.push_back(ins.value); continue;
        case Code::load: stack.push_back(b[ins.slot]); continue;
        case Code::neg: stack.back() = -stack.back(); continue;
        case Code::sqrt:
            if (stack.back() < 0) return Evaluation::undefined(Fault::sqrt_domain);
            stack.back() = std::sqrt(stack.back());
            continue;
        case Code::ln:
            if (stack.back() <= 0) return Evaluation::undefined(Fault::log_domain);
            stack.back() = std::log(stack.back());
            continue;
        case Code::log2:
            if (stack.back() <= 0) return Evaluation::undefined(Fault::log_domain);
            stack.back() = std::log2(stack.back());
            continue;
        case Code::abs: stack.back() = std::fabs(stack.back()); continue;
        default: break;
        }
        double r = stack.back();
        stack.pop_back();
        double& l = stack.back();
        switch (ins.code) {
        case Code::add: l = l + r; break;
        case Code::sub: l = l - r; break;
        case Code::mul: l = l * r; break;
        case Code::div:
            if (r == 0) return Evaluation::undefined(Fault::division_by_zero);
            l = l / r;
            break;
        case Code::pow:
            if ((l == 0 && r < 0) || (l < 0 && r != std::floor(r))) return Evaluation::undefined(Fault::pow_domain);
            l = std::pow(l, r);
            break;
        case Code::min: l = std::min(l, r); break;
        case Code::max: l = std::max(l, r); break;
        default: break;
        }
        if (!std::isfinite(l)) return Evaluation::undefined(Fault::non_finite);
    }
    double v = stack.back();
    if (!std::isfinite(v)) return Evaluation::undefined(Fault::non_finite);
    return {v, Fault::none};
}

}  // namespace fcaim
