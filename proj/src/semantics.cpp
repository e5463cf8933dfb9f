#include "weyl/semantics.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace weyl {

std::string to_string(ModelKind k) {
    switch (k) {
        case ModelKind::Classical: return "classical";
        case ModelKind::ForwardDifference: return "delta";
        case ModelKind::JacksonA: return "qa";
        case ModelKind::JacksonB: return "qb";
    }
    return "?";
}

ModelSemantics::ModelSemantics(ModelKind k, Complex q, Func p)
    : kind_(k), q_(q), p_(std::move(p)) {}

ModelSemantics ModelSemantics::classical(Func p) {
    return ModelSemantics(ModelKind::Classical, {1.0}, std::move(p));
}

ModelSemantics ModelSemantics::forward_difference(Func p) {
    static const std::vector<Complex> grid = {
        {0.2, 0.0},  {1.3, 0.4},  {-0.7, 0.9}, {2.5, -0.6},
        {0.1, -1.0}, {3.7, 0.2},  {-1.4, -0.3}, {0.9, 0.7}};
    for (Complex t : grid) {
        Complex a = p(t + Complex{1.0});
        Complex b = p(t);
        if (std::abs(a - b) > 1e-10)
            throw std::invalid_argument(
                "forward-difference generator must be 1-periodic (grid check failed)");
    }
    return ModelSemantics(ModelKind::ForwardDifference, {1.0}, std::move(p));
}

namespace {

void require_valid_q(Complex q) {
    if (q == Complex{0.0} || std::abs(std::abs(q) - 1.0) < 1e-12)
        throw std::invalid_argument("Jackson semantics require q != 0 and |q| != 1");
}

}  // namespace

ModelSemantics ModelSemantics::jackson_a(Complex q, Func p) {
    require_valid_q(q);
    return ModelSemantics(ModelKind::JacksonA, q, std::move(p));
}

ModelSemantics ModelSemantics::jackson_b(Complex q, Func p) {
    require_valid_q(q);
    return ModelSemantics(ModelKind::JacksonB, q, std::move(p));
}

Complex ModelSemantics::lambda() const {
    return (kind_ == ModelKind::JacksonA || kind_ == ModelKind::JacksonB) ? q_
                                                                          : Complex{1.0};
}

Func actX(const ModelSemantics& s, const Func& f) {
    switch (s.kind()) {
        case ModelKind::Classical:
            if (f.tree()) return Func(AnalyticFunction{mul(variable(), f.tree()->root),
                                                       f.tree()->domain});
            return Func([f](Complex t) { return t * f(t); });
        case ModelKind::ForwardDifference:
            return Func([f](Complex t) { return t * f(t - Complex{1.0}); });
        case ModelKind::JacksonA: {
            Complex q = s.q();
            return Func([f, q](Complex t) { return (t - Complex{1.0}) * f(q * t); });
        }
        case ModelKind::JacksonB: {
            Complex q = s.q();
            return Func([f, q](Complex t) { return t * f(q * t); });
        }
    }
    throw std::logic_error("unreachable model kind");
}

Func actXinv(const ModelSemantics& s, const Func& f) {
    switch (s.kind()) {
        case ModelKind::Classical:
            if (f.tree()) return Func(AnalyticFunction{div(f.tree()->root, variable()),
                                                       f.tree()->domain});
            return Func([f](Complex t) {
                if (t == Complex{0.0}) throw EvalError(EvalError::Kind::Pole, "pole at t = 0");
                return f(t) / t;
            });
        case ModelKind::ForwardDifference:
            return Func([f](Complex t) {
                Complex den = t + Complex{1.0};
                if (den == Complex{0.0})
                    throw EvalError(EvalError::Kind::Pole, "pole at t = -1");
                return f(t + Complex{1.0}) / den;
            });
        case ModelKind::JacksonA: {
            Complex q = s.q();
            return Func([f, q](Complex t) {
                Complex den = t / q - Complex{1.0};
                if (den == Complex{0.0})
                    throw EvalError(EvalError::Kind::Pole, "pole at t = q");
                return f(t / q) / den;
            });
        }
        case ModelKind::JacksonB: {
            Complex q = s.q();
            return Func([f, q](Complex t) {
                if (t == Complex{0.0}) throw EvalError(EvalError::Kind::Pole, "pole at t = 0");
                return f(t / q) / (t / q);
            });
        }
    }
    throw std::logic_error("unreachable model kind");
}

Func actD(const ModelSemantics& s, const Func& f) {
    switch (s.kind()) {
        case ModelKind::Classical:
            if (!f.tree())
                throw std::invalid_argument(
                    "classical d acts by symbolic differentiation and needs an expression tree");
            return Func(differentiate(*f.tree()));
        case ModelKind::ForwardDifference:
            return Func([f](Complex t) { return f(t + Complex{1.0}) - f(t); });
        case ModelKind::JacksonA:
        case ModelKind::JacksonB: {
            Complex q = s.q();
            return Func([f, q](Complex t) {
                Complex den = t - t / q;
                if (den == Complex{0.0})
                    throw EvalError(EvalError::Kind::Pole, "Jackson d undefined at t = 0");
                return (f(t) - f(t / q)) / den;
            });
        }
    }
    throw std::logic_error("unreachable model kind");
}

Complex basis_eval(const ModelSemantics& s, int k, Complex t) {
    if (k < 0) throw std::invalid_argument("basis index must be nonnegative");
    const Func& p = s.generator();
    switch (s.kind()) {
        case ModelKind::Classical: {
            Complex acc{1.0};
            for (int j = 0; j < k; ++j) acc *= t;
            return acc * p(t);
        }
        case ModelKind::ForwardDifference: {
            Complex acc{1.0};
            for (int j = 0; j < k; ++j) acc *= (t - Complex{double(j)});
            return acc * p(t - Complex{double(k)});
        }
        case ModelKind::JacksonA: {
            Complex acc{1.0};
            Complex qj{1.0};
            for (int j = 0; j < k; ++j) {
                acc *= (qj * t - Complex{1.0});
                qj *= s.q();
            }
            return acc * p(qj * t);
        }
        case ModelKind::JacksonB: {
            Complex acc{1.0};
            for (int j = 0; j < k; ++j) acc *= t;
            // q^{k(k-1)/2} t^k p(q^k t)
            Complex scale = cpow_int(s.q(), k * (k - 1) / 2);
            return scale * acc * p(cpow_int(s.q(), k) * t);
        }
    }
    throw std::logic_error("unreachable model kind");
}

Func interpret(const ModelSemantics& s, const WeylElement& w, const Func& f) {
    if (w.is_zero()) return Func::constant({0.0});
    std::vector<std::pair<Complex, Func>> parts;
    parts.reserve(w.terms().size());
    for (const auto& [key, c] : w.terms()) {
        Func g = f;
        for (int j = 0; j < key.second; ++j) g = actD(s, g);
        if (key.first >= 0)
            for (int j = 0; j < key.first; ++j) g = actX(s, g);
        else
            for (int j = 0; j < -key.first; ++j) g = actXinv(s, g);
        parts.emplace_back(c, std::move(g));
    }
    return Func([parts](Complex t) {
        Complex sum{0.0};
        for (const auto& [c, g] : parts) sum += c * g(t);
        return sum;
    });
}

Func interpret(const ModelSemantics& s, const LaurentPoly& p, const Func& f) {
    WeylElement w;
    for (const auto& [m, c] : p.coeffs()) w.add_term(m, 0, c);
    return interpret(s, w, f);
}

}  // namespace weyl
