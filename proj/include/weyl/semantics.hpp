#pragma once

// The four module structures that realize the algebra symbols X, X^-1, d
// as operators on analytic functions:
//
//   Classical          (Xf)(t) = t f(t)        (df)(t) = f'(t)
//   ForwardDifference  (Xf)(t) = t f(t-1)      (df)(t) = f(t+1) - f(t)
//   JacksonA           (Xf)(t) = (t-1) f(qt)   (df)(t) = (f(t)-f(t/q))/(t-t/q)
//   JacksonB           (Xf)(t) = t f(qt)       (df)(t) = (f(t)-f(t/q))/(t-t/q)
//
// The inverse X actions solve Xg = f.  Classical and ForwardDifference
// realize the relation dX - Xd = 1, the Jackson kinds dX - qXd = 1.

#include <complex>

#include "weyl/algebra.hpp"
#include "weyl/function.hpp"

namespace weyl {

enum class ModelKind { Classical, ForwardDifference, JacksonA, JacksonB };

std::string to_string(ModelKind k);

class ModelSemantics {
  public:
    static ModelSemantics classical(Func p = Func::constant({1.0}));
    // p must be 1-periodic; checked on a sample grid to 1e-10
    static ModelSemantics forward_difference(Func p = Func::constant({1.0}));
    static ModelSemantics jackson_a(Complex q, Func p = Func::constant({1.0}));
    static ModelSemantics jackson_b(Complex q, Func p = Func::constant({1.0}));

    ModelKind kind() const { return kind_; }
    Complex q() const { return q_; }
    const Func& generator() const { return p_; }
    // deformation parameter of the matching algebra: 1 or q
    Complex lambda() const;

  private:
    ModelSemantics(ModelKind k, Complex q, Func p);

    ModelKind kind_;
    Complex q_;
    Func p_;
};

Func actX(const ModelSemantics& s, const Func& f);
Func actXinv(const ModelSemantics& s, const Func& f);
Func actD(const ModelSemantics& s, const Func& f);

// Closed-form evaluation of the basis element phi_k = X^k p.
Complex basis_eval(const ModelSemantics& s, int k, Complex t);

// Termwise application of a normal-form element via the actions above;
// with f = p this realizes the evaluation maps of the series expansions.
Func interpret(const ModelSemantics& s, const WeylElement& w, const Func& f);
Func interpret(const ModelSemantics& s, const LaurentPoly& p, const Func& f);

}  // namespace weyl
