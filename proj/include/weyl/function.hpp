#pragma once

// Expression trees for analytic functions of one complex variable, with
// exact pointwise evaluation and symbolic differentiation closed on the
// node set.  Functions produced by the operator actions elsewhere are
// closures layered over these trees (see semantics.hpp); Func is the
// common evaluable handle for both.

#include <complex>
#include <functional>
#include <memory>
#include <stdexcept>
#include <string>

namespace weyl {

using Complex = std::complex<double>;

enum class Domain { All, Punctured };  // entire plane, or C \ {0}

class EvalError : public std::runtime_error {
  public:
    enum class Kind { Pole, Domain };

    EvalError(Kind k, const std::string& msg) : std::runtime_error(msg), kind(k) {}
    Kind kind;
};

class Expr;
using ExprPtr = std::shared_ptr<const Expr>;

class Expr {
  public:
    enum class Kind {
        Const,
        Var,
        Add,
        Neg,
        Mul,
        Div,
        IntPow,
        Exp,
        Sin,
        Cos,
        ConstBasePow,  // b^u with constant nonzero base, as exp(u Log b)
    };

    Kind kind;
    Complex value{};   // Const payload; ConstBasePow base
    int exponent = 0;  // IntPow payload
    ExprPtr a, b;

    Expr(Kind k, Complex v, int e, ExprPtr x, ExprPtr y)
        : kind(k), value(v), exponent(e), a(std::move(x)), b(std::move(y)) {}
};

// Smart constructors; constants fold where that cannot change poles.
ExprPtr constant(Complex c);
ExprPtr variable();
ExprPtr add(ExprPtr x, ExprPtr y);
ExprPtr sub(ExprPtr x, ExprPtr y);
ExprPtr neg(ExprPtr x);
ExprPtr mul(ExprPtr x, ExprPtr y);
ExprPtr div(ExprPtr x, ExprPtr y);
ExprPtr intpow(ExprPtr x, int n);
ExprPtr expfn(ExprPtr x);
ExprPtr sinfn(ExprPtr x);
ExprPtr cosfn(ExprPtr x);
ExprPtr const_base_pow(Complex base, ExprPtr u);

struct AnalyticFunction {
    ExprPtr root;
    Domain domain = Domain::All;
};

Complex evaluate(const ExprPtr& e, Complex t);
Complex evaluate(const AnalyticFunction& f, Complex t);

// Symbolic derivative; closed on the node set above.
ExprPtr differentiate(const ExprPtr& e);
AnalyticFunction differentiate(const AnalyticFunction& f);

// Evaluable function handle.  Either a bare closure or an expression
// tree; only tree-backed functions support symbolic differentiation.
class Func {
  public:
    explicit Func(AnalyticFunction f);
    explicit Func(std::function<Complex(Complex)> fn);

    static Func constant(Complex c);

    Complex operator()(Complex t) const;
    // Non-null when the function is exactly an expression tree.
    const AnalyticFunction* tree() const { return tree_.get(); }

  private:
    std::shared_ptr<const AnalyticFunction> tree_;
    std::function<Complex(Complex)> eval_;
};

// Pointwise quotient f/g as a closure.
Func quotient(const Func& f, const Func& g);

}  // namespace weyl
