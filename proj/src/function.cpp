#include "weyl/function.hpp"

#include <cmath>
#include <utility>

namespace weyl {

namespace {

ExprPtr node(Expr::Kind k, Complex v, int e, ExprPtr a, ExprPtr b) {
    return std::make_shared<const Expr>(k, v, e, std::move(a), std::move(b));
}

bool is_const(const ExprPtr& e, Complex c) {
    return e->kind == Expr::Kind::Const && e->value == c;
}

}  // namespace

ExprPtr constant(Complex c) { return node(Expr::Kind::Const, c, 0, nullptr, nullptr); }

ExprPtr variable() { return node(Expr::Kind::Var, {}, 0, nullptr, nullptr); }

ExprPtr add(ExprPtr x, ExprPtr y) {
    if (x->kind == Expr::Kind::Const && y->kind == Expr::Kind::Const)
        return constant(x->value + y->value);
    if (is_const(x, {0.0})) return y;
    if (is_const(y, {0.0})) return x;
    return node(Expr::Kind::Add, {}, 0, std::move(x), std::move(y));
}

ExprPtr sub(ExprPtr x, ExprPtr y) { return add(std::move(x), neg(std::move(y))); }

ExprPtr neg(ExprPtr x) {
    if (x->kind == Expr::Kind::Const) return constant(-x->value);
    if (x->kind == Expr::Kind::Neg) return x->a;
    return node(Expr::Kind::Neg, {}, 0, std::move(x), nullptr);
}

ExprPtr mul(ExprPtr x, ExprPtr y) {
    if (x->kind == Expr::Kind::Const && y->kind == Expr::Kind::Const)
        return constant(x->value * y->value);
    if (is_const(x, {0.0}) || is_const(y, {0.0})) return constant({0.0});
    if (is_const(x, {1.0})) return y;
    if (is_const(y, {1.0})) return x;
    return node(Expr::Kind::Mul, {}, 0, std::move(x), std::move(y));
}

ExprPtr div(ExprPtr x, ExprPtr y) {
    // never folded when the denominator could vanish; poles are reported
    // at evaluation time
    if (y->kind == Expr::Kind::Const && y->value != Complex{0.0}) {
        if (x->kind == Expr::Kind::Const) return constant(x->value / y->value);
        if (y->value == Complex{1.0}) return x;
    }
    return node(Expr::Kind::Div, {}, 0, std::move(x), std::move(y));
}

ExprPtr intpow(ExprPtr x, int n) {
    if (n == 0) return constant({1.0});
    if (n == 1) return x;
    if (x->kind == Expr::Kind::Const && (x->value != Complex{0.0} || n > 0)) {
        Complex acc{1.0};
        for (int i = 0; i < std::abs(n); ++i) acc *= x->value;
        return constant(n > 0 ? acc : Complex{1.0} / acc);
    }
    return node(Expr::Kind::IntPow, {}, n, std::move(x), nullptr);
}

ExprPtr expfn(ExprPtr x) {
    if (x->kind == Expr::Kind::Const) return constant(std::exp(x->value));
    return node(Expr::Kind::Exp, {}, 0, std::move(x), nullptr);
}

ExprPtr sinfn(ExprPtr x) {
    if (x->kind == Expr::Kind::Const) return constant(std::sin(x->value));
    return node(Expr::Kind::Sin, {}, 0, std::move(x), nullptr);
}

ExprPtr cosfn(ExprPtr x) {
    if (x->kind == Expr::Kind::Const) return constant(std::cos(x->value));
    return node(Expr::Kind::Cos, {}, 0, std::move(x), nullptr);
}

ExprPtr const_base_pow(Complex base, ExprPtr u) {
    if (base == Complex{0.0})
        throw std::invalid_argument("constant-base power requires a nonzero base");
    if (u->kind == Expr::Kind::Const) return constant(std::exp(u->value * std::log(base)));
    return node(Expr::Kind::ConstBasePow, base, 0, std::move(u), nullptr);
}

Complex evaluate(const ExprPtr& e, Complex t) {
    switch (e->kind) {
        case Expr::Kind::Const: return e->value;
        case Expr::Kind::Var: return t;
        case Expr::Kind::Add: return evaluate(e->a, t) + evaluate(e->b, t);
        case Expr::Kind::Neg: return -evaluate(e->a, t);
        case Expr::Kind::Mul: return evaluate(e->a, t) * evaluate(e->b, t);
        case Expr::Kind::Div: {
            Complex den = evaluate(e->b, t);
            if (den == Complex{0.0})
                throw EvalError(EvalError::Kind::Pole, "division by zero");
            return evaluate(e->a, t) / den;
        }
        case Expr::Kind::IntPow: {
            Complex base = evaluate(e->a, t);
            if (e->exponent < 0 && base == Complex{0.0})
                throw EvalError(EvalError::Kind::Pole, "negative power of zero");
            Complex acc{1.0};
            for (int i = 0; i < std::abs(e->exponent); ++i) acc *= base;
            return e->exponent >= 0 ? acc : Complex{1.0} / acc;
        }
        case Expr::Kind::Exp: return std::exp(evaluate(e->a, t));
        case Expr::Kind::Sin: return std::sin(evaluate(e->a, t));
        case Expr::Kind::Cos: return std::cos(evaluate(e->a, t));
        case Expr::Kind::ConstBasePow:
            return std::exp(evaluate(e->a, t) * std::log(e->value));
    }
    throw std::logic_error("unreachable expression kind");
}

Complex evaluate(const AnalyticFunction& f, Complex t) {
    if (f.domain == Domain::Punctured && t == Complex{0.0})
        throw EvalError(EvalError::Kind::Domain, "t = 0 outside punctured domain");
    return evaluate(f.root, t);
}

ExprPtr differentiate(const ExprPtr& e) {
    switch (e->kind) {
        case Expr::Kind::Const: return constant({0.0});
        case Expr::Kind::Var: return constant({1.0});
        case Expr::Kind::Add: return add(differentiate(e->a), differentiate(e->b));
        case Expr::Kind::Neg: return neg(differentiate(e->a));
        case Expr::Kind::Mul:
            return add(mul(differentiate(e->a), e->b), mul(e->a, differentiate(e->b)));
        case Expr::Kind::Div:
            return div(sub(mul(differentiate(e->a), e->b), mul(e->a, differentiate(e->b))),
                       intpow(e->b, 2));
        case Expr::Kind::IntPow:
            return mul(mul(constant({double(e->exponent)}), intpow(e->a, e->exponent - 1)),
                       differentiate(e->a));
        case Expr::Kind::Exp: return mul(expfn(e->a), differentiate(e->a));
        case Expr::Kind::Sin: return mul(cosfn(e->a), differentiate(e->a));
        case Expr::Kind::Cos: return neg(mul(sinfn(e->a), differentiate(e->a)));
        case Expr::Kind::ConstBasePow:
            return mul(mul(constant(std::log(e->value)), const_base_pow(e->value, e->a)),
                       differentiate(e->a));
    }
    throw std::logic_error("unreachable expression kind");
}

AnalyticFunction differentiate(const AnalyticFunction& f) {
    return AnalyticFunction{differentiate(f.root), f.domain};
}

Func::Func(AnalyticFunction f)
    : tree_(std::make_shared<const AnalyticFunction>(std::move(f))) {
    auto t = tree_;
    eval_ = [t](Complex z) { return evaluate(*t, z); };
}

Func::Func(std::function<Complex(Complex)> fn) : eval_(std::move(fn)) {}

Func Func::constant(Complex c) { return Func(AnalyticFunction{weyl::constant(c)}); }

Complex Func::operator()(Complex t) const { return eval_(t); }

Func quotient(const Func& f, const Func& g) {
    if (f.tree() && g.tree())
        return Func(AnalyticFunction{div(f.tree()->root, g.tree()->root),
                                     f.tree()->domain == Domain::Punctured ||
                                             g.tree()->domain == Domain::Punctured
                                         ? Domain::Punctured
                                         : Domain::All});
    return Func([f, g](Complex t) {
        Complex den = g(t);
        if (den == Complex{0.0})
            throw EvalError(EvalError::Kind::Pole, "division by zero");
        return f(t) / den;
    });
}

}  // namespace weyl
