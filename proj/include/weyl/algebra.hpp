#pragma once

// Exact arithmetic in the lambda-deformed Weyl algebra generated by
// X, X^-1 and d, with the relation  d*X = lambda*X*d + 1.  Elements are
// kept in normal order (all X powers to the left of all d powers), so
// equality is equality of term maps.  lambda = 1 gives the ordinary
// Weyl algebra, lambda = q the q-deformation.

#include <complex>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace weyl {

using Complex = std::complex<double>;

struct AlgebraParams {
    Complex lambda{1.0, 0.0};

    AlgebraParams() = default;
    explicit AlgebraParams(Complex l);
};

// Integer power of a complex scalar; negative exponents invert once.
Complex cpow_int(Complex base, int n);

// q-integer [m] = 1 + lambda + ... + lambda^{m-1}, extended to negative m
// by [m] = -lambda^m [-m].  At lambda = 1 this is the limit value m,
// taken by an explicit branch.  Built from ring operations only.
Complex qbracket(Complex lambda, int m);

// Normal-form element: (m, n) -> coefficient of X^m d^n, coefficients
// never stored as exact zero.  m ranges over all integers, n >= 0.
class WeylElement {
  public:
    using Key = std::pair<int, int>;  // (x exponent, d exponent)
    using TermMap = std::map<Key, Complex>;

    WeylElement() = default;

    static WeylElement zero() { return WeylElement{}; }
    static WeylElement one() { return term(0, 0, Complex{1.0}); }
    static WeylElement xpow(int m) { return term(m, 0, Complex{1.0}); }
    static WeylElement d() { return term(0, 1, Complex{1.0}); }
    static WeylElement constant(Complex c) { return term(0, 0, c); }
    static WeylElement term(int m, int n, Complex c);

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    // True when every term has d exponent 0.
    bool is_x_only() const;
    // Sole term (m, 0) with coefficient, if the element is c*X^m.
    std::optional<std::pair<int, Complex>> single_x_term() const;
    Complex coeff(int m, int n) const;
    void add_term(int m, int n, Complex c);

    bool operator==(const WeylElement& o) const { return terms_ == o.terms_; }

  private:
    TermMap terms_;
};

// Laurent polynomial in X: carrier of classes modulo the left ideal A0*d.
class LaurentPoly {
  public:
    using CoeffMap = std::map<int, Complex>;

    LaurentPoly() = default;

    static LaurentPoly xpow(int m) { return term(m, Complex{1.0}); }
    static LaurentPoly term(int m, Complex c);

    const CoeffMap& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    Complex coeff(int m) const;
    void add_term(int m, Complex c);

    bool operator==(const LaurentPoly& o) const { return coeffs_ == o.coeffs_; }

  private:
    CoeffMap coeffs_;
};

WeylElement add(const WeylElement& a, const WeylElement& b);
WeylElement negate(const WeylElement& a);
WeylElement scale(Complex c, const WeylElement& a);

// Product rewritten to normal order with the single-step rule
//   d * X^m = lambda^m X^m d + [m] X^{m-1}
// applied left to right; expansions of d^n X^m are memoized per lambda.
WeylElement multiply(const AlgebraParams& ctx, const WeylElement& a,
                     const WeylElement& b);

// n-fold product; power(ctx, a, 0) is the identity.
WeylElement power(const AlgebraParams& ctx, const WeylElement& a, unsigned n);

// Normal form of d * X^m straight from the closed form, used as a
// cross-check of the rewriting path.
WeylElement d_times_xpow(const AlgebraParams& ctx, int m);

// Quotient map A0 -> A0 / A0*d: drops every term with d exponent >= 1.
LaurentPoly reduce_mod_ideal(const WeylElement& a);

// Induced action of d on the quotient: X^m -> [m] X^{m-1}.
LaurentPoly reduced_d_action(const AlgebraParams& ctx, const LaurentPoly& p);

// Coefficient of X^-1; vanishes exactly on images of reduced_d_action.
Complex symbolic_residue(const LaurentPoly& p);

// ---------------------------------------------------------------------------
// Truncated coefficient sequences with a declared growth family, plus the
// finite-sample diagnostics for the family's defining condition.

enum class SeriesFamily { DifferenceF, QSmallF, QLargeF, ClassicalF };

std::string to_string(SeriesFamily f);

struct FormalSeriesF {
    std::vector<Complex> coeffs;  // a_0 .. a_K
    SeriesFamily family = SeriesFamily::ClassicalF;

    int truncation() const { return static_cast<int>(coeffs.size()) - 1; }
};

enum class Consistency { Consistent, Inconsistent, Indeterminate, TrivialInFamily };

std::string to_string(Consistency c);

struct FamilyDiagnostics {
    SeriesFamily family;
    std::vector<double> samples;   // finite-sample values of the defining functional
    std::vector<int> indices;      // n for each sample
    std::string trend;             // "decreasing" | "increasing" | "mixed" | "constant"
    Consistency flag = Consistency::Indeterminate;
    std::string note;
};

// Finite-sample trend report for the family's defining limit condition.
// Never a proof of membership.  For QLargeF a comparison threshold
// (|1/q|) may be supplied; without it the flag stays indeterminate.
FamilyDiagnostics family_diagnostics(const FormalSeriesF& s,
                                     std::optional<double> threshold = std::nullopt);

}  // namespace weyl
