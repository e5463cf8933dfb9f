#include "weyl/algebra.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <tuple>

namespace weyl {

namespace {

// Exact zero test; the algebra layer never purges by epsilon.
bool is_exact_zero(Complex c) { return c.real() == 0.0 && c.imag() == 0.0; }

Complex canonical(Complex c) {
    // normalize -0.0 components so term maps compare predictably
    return {c.real() + 0.0, c.imag() + 0.0};
}

}  // namespace

AlgebraParams::AlgebraParams(Complex l) : lambda(l) {
    if (is_exact_zero(l)) throw std::invalid_argument("lambda must be nonzero");
}

Complex cpow_int(Complex base, int n) {
    if (n < 0) return Complex{1.0} / cpow_int(base, -n);
    Complex acc{1.0};
    for (int i = 0; i < n; ++i) acc *= base;
    return acc;
}

Complex qbracket(Complex lambda, int m) {
    if (lambda == Complex{1.0}) return Complex(static_cast<double>(m));
    if (m < 0) return -cpow_int(lambda, m) * qbracket(lambda, -m);
    Complex sum{0.0};
    Complex pw{1.0};
    for (int j = 0; j < m; ++j) {
        sum += pw;
        pw *= lambda;
    }
    return sum;
}

WeylElement WeylElement::term(int m, int n, Complex c) {
    WeylElement e;
    e.add_term(m, n, c);
    return e;
}

bool WeylElement::is_x_only() const {
    for (const auto& [key, c] : terms_)
        if (key.second != 0) return false;
    return true;
}

std::optional<std::pair<int, Complex>> WeylElement::single_x_term() const {
    if (terms_.size() != 1) return std::nullopt;
    const auto& [key, c] = *terms_.begin();
    if (key.second != 0) return std::nullopt;
    return std::make_pair(key.first, c);
}

Complex WeylElement::coeff(int m, int n) const {
    auto it = terms_.find({m, n});
    return it == terms_.end() ? Complex{0.0} : it->second;
}

void WeylElement::add_term(int m, int n, Complex c) {
    if (n < 0) throw std::invalid_argument("d exponent must be nonnegative");
    if (is_exact_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace({m, n}, canonical(c));
    if (!inserted) {
        it->second = canonical(it->second + c);
        if (is_exact_zero(it->second)) terms_.erase(it);
    }
}

LaurentPoly LaurentPoly::term(int m, Complex c) {
    LaurentPoly p;
    p.add_term(m, c);
    return p;
}

Complex LaurentPoly::coeff(int m) const {
    auto it = coeffs_.find(m);
    return it == coeffs_.end() ? Complex{0.0} : it->second;
}

void LaurentPoly::add_term(int m, Complex c) {
    if (is_exact_zero(c)) return;
    auto [it, inserted] = coeffs_.try_emplace(m, canonical(c));
    if (!inserted) {
        it->second = canonical(it->second + c);
        if (is_exact_zero(it->second)) coeffs_.erase(it);
    }
}

WeylElement add(const WeylElement& a, const WeylElement& b) {
    WeylElement out = a;
    for (const auto& [key, c] : b.terms()) out.add_term(key.first, key.second, c);
    return out;
}

WeylElement negate(const WeylElement& a) { return scale(Complex{-1.0}, a); }

WeylElement scale(Complex c, const WeylElement& a) {
    WeylElement out;
    for (const auto& [key, v] : a.terms()) out.add_term(key.first, key.second, c * v);
    return out;
}

namespace {

// Normal form of d^n X^m, memoized per lambda.  Recursion peels one d:
//   d * (X^a d^b) = lambda^a X^a d^{b+1} + [a] X^{a-1} d^b.
class DPowXPowTable {
  public:
    const WeylElement& get(Complex lambda, int n, int m) {
        auto key = std::make_tuple(lambda.real(), lambda.imag(), n, m);
        auto it = cache_.find(key);
        if (it != cache_.end()) return it->second;
        WeylElement value;
        if (n == 0) {
            value = WeylElement::xpow(m);
        } else {
            const WeylElement& prev = get(lambda, n - 1, m);
            for (const auto& [k, c] : prev.terms()) {
                const int a = k.first;
                const int b = k.second;
                value.add_term(a, b + 1, c * cpow_int(lambda, a));
                value.add_term(a - 1, b, c * qbracket(lambda, a));
            }
        }
        auto [pos, ignored] = cache_.try_emplace(key, std::move(value));
        return pos->second;
    }

  private:
    std::map<std::tuple<double, double, int, int>, WeylElement> cache_;
};

DPowXPowTable& dpow_table() {
    thread_local DPowXPowTable table;  // partitioned per thread, no locking
    return table;
}

}  // namespace

WeylElement multiply(const AlgebraParams& ctx, const WeylElement& a,
                     const WeylElement& b) {
    WeylElement out;
    for (const auto& [ka, ca] : a.terms()) {
        for (const auto& [kb, cb] : b.terms()) {
            // X^{m1} d^{n1} * X^{m2} d^{n2} = X^{m1} (d^{n1} X^{m2}) d^{n2}
            const WeylElement& mid = dpow_table().get(ctx.lambda, ka.second, kb.first);
            const Complex c = ca * cb;
            for (const auto& [km, cm] : mid.terms())
                out.add_term(ka.first + km.first, km.second + kb.second, c * cm);
        }
    }
    return out;
}

WeylElement power(const AlgebraParams& ctx, const WeylElement& a, unsigned n) {
    WeylElement acc = WeylElement::one();
    for (unsigned i = 0; i < n; ++i) acc = multiply(ctx, acc, a);
    return acc;
}

WeylElement d_times_xpow(const AlgebraParams& ctx, int m) {
    WeylElement out;
    out.add_term(m, 1, cpow_int(ctx.lambda, m));
    out.add_term(m - 1, 0, qbracket(ctx.lambda, m));
    return out;
}

LaurentPoly reduce_mod_ideal(const WeylElement& a) {
    LaurentPoly out;
    for (const auto& [key, c] : a.terms())
        if (key.second == 0) out.add_term(key.first, c);
    return out;
}

LaurentPoly reduced_d_action(const AlgebraParams& ctx, const LaurentPoly& p) {
    LaurentPoly out;
    for (const auto& [m, c] : p.coeffs())
        out.add_term(m - 1, c * qbracket(ctx.lambda, m));
    return out;
}

Complex symbolic_residue(const LaurentPoly& p) { return p.coeff(-1); }

std::string to_string(SeriesFamily f) {
    switch (f) {
        case SeriesFamily::DifferenceF: return "difference-F";
        case SeriesFamily::QSmallF: return "q-small-F";
        case SeriesFamily::QLargeF: return "q-large-F";
        case SeriesFamily::ClassicalF: return "classical-F";
    }
    return "?";
}

std::string to_string(Consistency c) {
    switch (c) {
        case Consistency::Consistent: return "consistent";
        case Consistency::Inconsistent: return "inconsistent";
        case Consistency::Indeterminate: return "indeterminate";
        case Consistency::TrivialInFamily: return "tail vanishes (trivially in family)";
    }
    return "?";
}

namespace {

std::string classify_trend(const std::vector<double>& v) {
    bool dec = true, inc = true;
    for (size_t i = 1; i < v.size(); ++i) {
        if (v[i] > v[i - 1]) dec = false;
        if (v[i] < v[i - 1]) inc = false;
    }
    if (dec && inc) return "constant";
    if (dec) return "decreasing";
    if (inc) return "increasing";
    return "mixed";
}

}  // namespace

FamilyDiagnostics family_diagnostics(const FormalSeriesF& s,
                                     std::optional<double> threshold) {
    const int K = s.truncation();
    if (K < 2) throw std::invalid_argument("family_diagnostics needs K >= 2");

    FamilyDiagnostics out;
    out.family = s.family;

    bool tail_zero = true;
    for (int k = 1; k <= K; ++k)
        if (std::abs(s.coeffs[k]) != 0.0) tail_zero = false;
    if (tail_zero) {
        out.flag = Consistency::TrivialInFamily;
        out.trend = "constant";
        out.note = "tail vanishes (trivially in family)";
        return out;
    }

    if (s.family == SeriesFamily::DifferenceF) {
        // g(n) = ln|sum_{k=n..K} (-1)^k k! a_k| / ln n,  n = 2..K
        double factorial = 1.0;
        std::vector<Complex> weighted(K + 1);
        for (int k = 0; k <= K; ++k) {
            if (k > 0) factorial *= k;
            weighted[k] = ((k % 2 == 0) ? 1.0 : -1.0) * factorial * s.coeffs[k];
        }
        for (int n = 2; n <= K; ++n) {
            Complex tail{0.0};
            for (int k = n; k <= K; ++k) tail += weighted[k];
            const double mag = std::abs(tail);
            const double g = mag == 0.0 ? -std::numeric_limits<double>::infinity()
                                        : std::log(mag) / std::log(double(n));
            out.indices.push_back(n);
            out.samples.push_back(g);
        }
        std::vector<double> finite;
        for (double g : out.samples)
            if (std::isfinite(g)) finite.push_back(g);
        out.trend = classify_trend(out.samples);
        const double last = finite.empty() ? 0.0 : finite.back();
        if (out.trend == "decreasing" && last <= -3.0)
            out.flag = Consistency::Consistent;
        else if ((out.trend == "increasing" || out.trend == "constant") && last >= -0.5)
            out.flag = Consistency::Inconsistent;
        else
            out.flag = Consistency::Indeterminate;
        out.note = "finite-sample Gelfond functional; membership is a limit statement";
        return out;
    }

    // Root-test families.
    for (int n = 2; n <= K; ++n) {
        const double mag = std::abs(s.coeffs[n]);
        double sample;
        if (mag == 0.0) {
            sample = 0.0;
        } else if (s.family == SeriesFamily::QLargeF) {
            sample = std::pow(mag, 2.0 / (double(n) * (n - 1)));
        } else {
            sample = std::pow(mag, 1.0 / double(n));
        }
        out.indices.push_back(n);
        out.samples.push_back(sample);
    }
    out.trend = classify_trend(out.samples);
    const double last = out.samples.back();

    switch (s.family) {
        case SeriesFamily::QSmallF:
            out.flag = last < 1.0 ? Consistency::Consistent : Consistency::Inconsistent;
            out.note = "limsup |a_n|^{1/n} < 1 required";
            break;
        case SeriesFamily::QLargeF:
            if (threshold) {
                out.flag = last < *threshold ? Consistency::Consistent
                                             : Consistency::Inconsistent;
                out.note = "compared against |1/q|";
            } else {
                out.flag = Consistency::Indeterminate;
                out.note = "compare against |1/q| (threshold not supplied)";
            }
            break;
        case SeriesFamily::ClassicalF:
            if (last >= 1.0 || out.trend == "increasing")
                out.flag = Consistency::Inconsistent;
            else if (out.trend == "decreasing" && last < 0.5)
                out.flag = Consistency::Consistent;
            else
                out.flag = Consistency::Indeterminate;
            out.note = "lim |a_n|^{1/n} = 0 required";
            break;
        default:
            break;
    }
    return out;
}

}  // namespace weyl
