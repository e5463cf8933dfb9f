#pragma once

// Expansion-coefficient extraction along two independent routes: exact
// interpolation oracles per basis, and residue functionals realized as
// numerical contour integrals (vertical line with cosine weight for the
// forward-difference model, circle otherwise) with a calibration scalar
// fixed by the residue of X^-1 p.

#include <string>
#include <variant>
#include <vector>

#include "weyl/function.hpp"
#include "weyl/semantics.hpp"

namespace weyl {

struct CoefficientSeries {
    std::vector<Complex> values;  // a_0 .. a_K
    ModelKind kind = ModelKind::Classical;
    std::string basis;            // monomial | falling-factorial | q-pochhammer | q-monomial
    std::string method;           // oracle | residue
    std::vector<double> errors;   // per-coefficient estimates, nonnegative
    std::vector<std::string> warnings;

    int truncation() const { return static_cast<int>(values.size()) - 1; }
};

// Vertical line Re t = abscissa with weight exp(-sigma cos(2 pi t)),
// truncated symmetrically at half_height (principal value), trapezoid
// with the given step.  Decay needs sigma*cos(2 pi abscissa) > 0.
struct VerticalLineSpec {
    double abscissa = 0.1;
    double half_height = 1.5;
    double step = 1e-3;
    int sigma = +1;

    void validate() const;
};

// Circle |t| = radius, N-node trapezoid rule (spectrally accurate for
// integrands analytic near the circle).
struct CircleSpec {
    double radius = 2.0;
    int nodes = 512;

    void validate() const;
};

using ContourSpec = std::variant<VerticalLineSpec, CircleSpec>;

std::string describe(const ContourSpec& spec);

struct Calibration {
    Complex c{1.0};
    std::string provenance;
};

class CalibrationError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

struct BarnesResult {
    Complex value{0.0};
    double tail_magnitude = 0.0;  // |integrand| at the truncation ends
    bool decay_ok = true;
};

// Newton coefficients a_k = (Delta^k f)(0) / k! via the alternating
// binomial sum with compensated summation.  K > 25 needs the explicit
// override and is flagged for cancellation.
CoefficientSeries newton_oracle(const Func& f, int K, bool allow_large_K = false);

// Triangular interpolation at the nodes t_j = q^{-j}, where phi_k
// vanishes for all k > j; JacksonA semantics only.
CoefficientSeries q_oracle(const ModelSemantics& s, const Func& f, int K);

// Maclaurin coefficients by repeated symbolic differentiation at 0.
CoefficientSeries taylor_oracle(const AnalyticFunction& f, int K);

// Basis-appropriate oracle for any of the four models (JacksonB route:
// monomial coefficients rescaled by q^{-binom(k,2)}).
CoefficientSeries oracle_extract(const ModelSemantics& s, const Func& f, int K);

BarnesResult barnes_residue(const Func& g, const VerticalLineSpec& spec);
Complex circle_residue(const Func& g, const CircleSpec& spec);

// The residue functional of the model applied to an evaluable class
// representative (for the forward-difference model this divides by the
// generator inside the integral).
Complex residue_functional(const ModelSemantics& s, const Func& g, const ContourSpec& spec);

// c = 1 / Res(X^-1 p); fails when the reference residue is near zero.
Calibration calibrate(const ModelSemantics& s, const ContourSpec& spec);

// a_k = c * Res(X^-(k+1) f).
Complex residue_extract(const ModelSemantics& s, const Func& f, int k,
                        const ContourSpec& spec, const Calibration& cal);

// Calibrates once and extracts a_0..a_K; forward-difference results are
// tagged experimental.
CoefficientSeries residue_extract_series(const ModelSemantics& s, const Func& f, int K,
                                         const ContourSpec& spec);

// Partial-sum evaluator sum a_k phi_k.
Func synthesize(const ModelSemantics& s, const CoefficientSeries& coeffs);

// Last-term magnitude |a_K phi_K(t)| as a truncation error estimate.
double synthesis_error_estimate(const ModelSemantics& s, const CoefficientSeries& coeffs,
                                Complex t);

}  // namespace weyl
