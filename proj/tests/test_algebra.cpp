#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "weyl/algebra.hpp"

using namespace weyl;

namespace {

// Independent oracle: normal ordering by exhaustive single-step string
// rewriting on words over {X, D}, rule  D X -> lambda X D + 1.  Shares no
// code with the memoized expansion in multiply().
struct Word {
    Complex coeff;
    std::string letters;  // 'X' and 'D' only
};

WeylElement rewrite_oracle(Complex lambda, std::vector<Word> words) {
    WeylElement out;
    while (!words.empty()) {
        Word w = words.back();
        words.pop_back();
        size_t pos = w.letters.find("DX");
        if (pos == std::string::npos) {
            // sorted word X^m D^n
            int m = 0, n = 0;
            for (char ch : w.letters) (ch == 'X' ? m : n)++;
            out.add_term(m, n, w.coeff);
            continue;
        }
        std::string left = w.letters.substr(0, pos);
        std::string right = w.letters.substr(pos + 2);
        words.push_back({w.coeff * lambda, left + "XD" + right});
        words.push_back({w.coeff, left + right});
    }
    return out;
}

WeylElement oracle_product(Complex lambda, const std::string& word) {
    return rewrite_oracle(lambda, {{Complex{1.0}, word}});
}

bool approx_equal(const WeylElement& a, const WeylElement& b, double tol) {
    WeylElement diff = add(a, negate(b));
    for (const auto& [key, c] : diff.terms())
        if (std::abs(c) > tol) return false;
    return true;
}

WeylElement random_element(std::mt19937& rng, int max_total_degree) {
    std::uniform_int_distribution<int> nterms(1, 3);
    std::uniform_int_distribution<int> coeff(-2, 2);
    WeylElement e;
    int terms = nterms(rng);
    for (int i = 0; i < terms; ++i) {
        std::uniform_int_distribution<int> ddeg(0, max_total_degree / 2);
        int n = ddeg(rng);
        std::uniform_int_distribution<int> xdeg(-(max_total_degree - n), max_total_degree - n);
        int m = xdeg(rng);
        Complex c{double(coeff(rng)), double(coeff(rng))};
        if (c == Complex{0.0}) c = Complex{1.0};
        e.add_term(m, n, c);
    }
    return e;
}

const std::vector<Complex> kLambdas = {
    {1.0, 0.0}, {0.5, 0.0}, {2.0, 0.0}, {0.3, 0.1}};

}  // namespace

TEST_CASE("qbracket limit and generic values") {
    CHECK(qbracket({1.0, 0.0}, 5) == Complex{5.0});
    CHECK(qbracket({1.0, 0.0}, -3) == Complex{-3.0});
    CHECK(qbracket({1.0, 0.0}, 0) == Complex{0.0});
    // independent route: (q^m - 1)/(q - 1)
    for (Complex q : {Complex{0.5, 0.0}, Complex{2.0, 0.0}, Complex{0.3, 0.1}}) {
        for (int m = -5; m <= 5; ++m) {
            Complex expect = (cpow_int(q, m) - Complex{1.0}) / (q - Complex{1.0});
            CHECK(std::abs(qbracket(q, m) - expect) < 1e-13);
        }
    }
}

TEST_CASE("add examples") {
    AlgebraParams ctx;
    WeylElement xd = WeylElement::term(1, 1, {1.0});
    CHECK(add(xd, negate(xd)).is_zero());
    CHECK(add(WeylElement::term(1, 0, {2.0}), WeylElement::term(1, 0, {3.0})) ==
          WeylElement::term(1, 0, {5.0}));
    WeylElement sum = add(add(WeylElement::xpow(1), WeylElement::d()), WeylElement::xpow(-1));
    CHECK(sum.terms().size() == 3);
    CHECK(sum.coeff(-1, 0) == Complex{1.0});
}

TEST_CASE("multiply matches the defining relation") {
    AlgebraParams ctx{Complex{1.0}};
    WeylElement dx = multiply(ctx, WeylElement::d(), WeylElement::xpow(1));
    // d X = X d + 1
    CHECK(dx.coeff(1, 1) == Complex{1.0});
    CHECK(dx.coeff(0, 0) == Complex{1.0});
    CHECK(dx.terms().size() == 2);
}

TEST_CASE("multiply vs rewriting oracle") {
    // d^2 X^2 at lambda = 1: X^2 d^2 + 4 X d + 2
    AlgebraParams one{Complex{1.0}};
    WeylElement got = multiply(one, power(one, WeylElement::d(), 2),
                               power(one, WeylElement::xpow(1), 2));
    WeylElement expect = oracle_product({1.0, 0.0}, "DDXX");
    CHECK(approx_equal(got, expect, 1e-14));
    CHECK(expect.coeff(2, 2) == Complex{1.0});
    CHECK(expect.coeff(1, 1) == Complex{4.0});
    CHECK(expect.coeff(0, 0) == Complex{2.0});

    // d X^2 at lambda = q: q^2 X^2 d + (1+q) X
    Complex q{0.5, 0.0};
    AlgebraParams qc{q};
    WeylElement got2 = multiply(qc, WeylElement::d(), power(qc, WeylElement::xpow(1), 2));
    WeylElement expect2 = oracle_product(q, "DXX");
    CHECK(approx_equal(got2, expect2, 1e-14));
    CHECK(std::abs(got2.coeff(2, 1) - q * q) < 1e-15);
    CHECK(std::abs(got2.coeff(1, 0) - (Complex{1.0} + q)) < 1e-15);

    // (X d)^2 = X^2 d^2 + X d
    WeylElement xd = multiply(one, WeylElement::xpow(1), WeylElement::d());
    WeylElement got3 = power(one, xd, 2);
    WeylElement expect3 = oracle_product({1.0, 0.0}, "XDXD");
    CHECK(approx_equal(got3, expect3, 1e-14));
    CHECK(got3.coeff(2, 2) == Complex{1.0});
    CHECK(got3.coeff(1, 1) == Complex{1.0});
}

TEST_CASE("localized rule: d * Xinv") {
    AlgebraParams one{Complex{1.0}};
    WeylElement got = multiply(one, WeylElement::d(), WeylElement::xpow(-1));
    CHECK(got.coeff(-1, 1) == Complex{1.0});
    CHECK(got.coeff(-2, 0) == Complex{-1.0});
    CHECK(got.terms().size() == 2);
}

TEST_CASE("closed form d*X^m cross-checks the rewriting path") {
    for (Complex lam : kLambdas) {
        AlgebraParams ctx{lam};
        for (int m = -5; m <= 5; ++m) {
            WeylElement via_mul = multiply(ctx, WeylElement::d(), WeylElement::xpow(m));
            CHECK(approx_equal(via_mul, d_times_xpow(ctx, m), 1e-12));
        }
    }
}

TEST_CASE("power basics") {
    AlgebraParams one{Complex{1.0}};
    WeylElement base = add(WeylElement::one(), scale({-0.5, 0.0}, WeylElement::xpow(1)));
    CHECK(power(one, base, 0) == WeylElement::one());
    WeylElement sq = power(one, base, 2);  // 1 - X + X^2/4
    CHECK(sq.coeff(0, 0) == Complex{1.0});
    CHECK(sq.coeff(1, 0) == Complex{-1.0});
    CHECK(sq.coeff(2, 0) == Complex{0.25});
}

TEST_CASE("normal form of dX - lambda X d is 1") {
    for (Complex lam : kLambdas) {
        AlgebraParams ctx{lam};
        WeylElement rel = add(multiply(ctx, WeylElement::d(), WeylElement::xpow(1)),
                              scale(-lam, multiply(ctx, WeylElement::xpow(1), WeylElement::d())));
        CHECK(rel == WeylElement::one());
    }
}

TEST_CASE("reduce_mod_ideal drops d terms") {
    AlgebraParams one{Complex{1.0}};
    WeylElement e = multiply(one, power(one, WeylElement::d(), 2),
                             power(one, WeylElement::xpow(1), 2));
    LaurentPoly r = reduce_mod_ideal(e);
    CHECK(r == LaurentPoly::term(0, {2.0}));

    WeylElement f = add(WeylElement::term(-1, 0, {3.0}), WeylElement::term(1, 1, {1.0}));
    CHECK(reduce_mod_ideal(f) == LaurentPoly::term(-1, {3.0}));
    CHECK(reduce_mod_ideal(WeylElement::zero()).is_zero());
}

TEST_CASE("reduced d action and the ideal identity") {
    AlgebraParams one{Complex{1.0}};
    CHECK(reduced_d_action(one, LaurentPoly::xpow(3)) == LaurentPoly::term(2, {3.0}));

    AlgebraParams qc{Complex{0.5, 0.0}};
    LaurentPoly r = reduced_d_action(qc, LaurentPoly::xpow(3));
    CHECK(std::abs(r.coeff(2) - Complex{1.75}) < 1e-15);  // 1 + q + q^2

    CHECK(reduced_d_action(one, LaurentPoly::xpow(-1)) == LaurentPoly::term(-2, {-1.0}));

    // reduce(d * X^m) = [m] X^{m-1} for all m and lambda
    for (Complex lam : kLambdas) {
        AlgebraParams ctx{lam};
        for (int m = -5; m <= 5; ++m) {
            LaurentPoly got = reduce_mod_ideal(multiply(ctx, WeylElement::d(), WeylElement::xpow(m)));
            Complex expect = qbracket(lam, m);
            CHECK(std::abs(got.coeff(m - 1) - expect) < 1e-12);
            for (const auto& [deg, c] : got.coeffs()) CHECK(deg == m - 1);
        }
    }
}

TEST_CASE("symbolic residue") {
    LaurentPoly p;
    p.add_term(-1, {5.0});
    p.add_term(0, {2.0});
    p.add_term(1, {1.0});
    CHECK(symbolic_residue(p) == Complex{5.0});
    CHECK(symbolic_residue(LaurentPoly{}) == Complex{0.0});
}

TEST_CASE("residue vanishes on reduced d images") {
    std::mt19937 rng(20260809);
    std::uniform_int_distribution<int> deg(-6, 6);
    std::uniform_int_distribution<int> coeff(-3, 3);
    for (Complex lam : kLambdas) {
        AlgebraParams ctx{lam};
        for (int trial = 0; trial < 40; ++trial) {
            LaurentPoly p;
            for (int i = 0; i < 4; ++i) p.add_term(deg(rng), {double(coeff(rng)), double(coeff(rng))});
            CHECK(std::abs(symbolic_residue(reduced_d_action(ctx, p))) == 0.0);
        }
    }
}

TEST_CASE("associativity and distributivity on random triples") {
    std::mt19937 rng(7);
    for (Complex lam : kLambdas) {
        AlgebraParams ctx{lam};
        for (int trial = 0; trial < 50; ++trial) {
            WeylElement a = random_element(rng, 4);
            WeylElement b = random_element(rng, 4);
            WeylElement c = random_element(rng, 4);
            CHECK(approx_equal(multiply(ctx, a, multiply(ctx, b, c)),
                               multiply(ctx, multiply(ctx, a, b), c), 1e-12));
            CHECK(approx_equal(multiply(ctx, a, add(b, c)),
                               add(multiply(ctx, a, b), multiply(ctx, a, c)), 1e-12));
        }
    }
}

TEST_CASE("lambda=1 multiplication is the limit of the lambda formula") {
    std::mt19937 rng(11);
    AlgebraParams one{Complex{1.0}};
    for (int trial = 0; trial < 20; ++trial) {
        WeylElement a = random_element(rng, 3);
        WeylElement b = random_element(rng, 3);
        WeylElement at_one = multiply(one, a, b);
        AlgebraParams close{Complex{1.0 + 1e-7, 0.0}};
        WeylElement near_one = multiply(close, a, b);
        WeylElement diff = add(at_one, negate(near_one));
        for (const auto& [key, c] : diff.terms()) CHECK(std::abs(c) < 1e-4);
    }
}

TEST_CASE("family diagnostics") {
    SUBCASE("difference-F with a_k = 1/k!") {
        FormalSeriesF s;
        s.family = SeriesFamily::DifferenceF;
        double fact = 1.0;
        for (int k = 0; k <= 10; ++k) {
            if (k > 0) fact *= k;
            s.coeffs.push_back(Complex{1.0 / fact});
        }
        FamilyDiagnostics d = family_diagnostics(s);
        REQUIRE(d.samples.size() == 9);
        // tail sums are exactly 0 or 1, so samples alternate between
        // strongly negative (or -inf) and 0; nothing positive appears
        double min_finite = 0.0;
        for (double g : d.samples) {
            CHECK(g <= 1e-12);
            if (std::isfinite(g)) min_finite = std::min(min_finite, g);
        }
        CHECK(min_finite < -5.0);
        CHECK(d.flag != Consistency::Inconsistent);
    }
    SUBCASE("q-small root test") {
        FormalSeriesF s;
        s.family = SeriesFamily::QSmallF;
        for (int k = 0; k <= 8; ++k) s.coeffs.push_back(Complex{std::pow(2.0, -k)});
        FamilyDiagnostics d = family_diagnostics(s);
        CHECK(d.flag == Consistency::Consistent);
        CHECK(std::abs(d.samples.back() - 0.5) < 1e-12);
    }
    SUBCASE("classical with a_k = 1 is inconsistent") {
        FormalSeriesF s;
        s.family = SeriesFamily::ClassicalF;
        for (int k = 0; k <= 8; ++k) s.coeffs.push_back(Complex{1.0});
        FamilyDiagnostics d = family_diagnostics(s);
        CHECK(d.flag == Consistency::Inconsistent);
        CHECK(d.samples.back() == 1.0);
    }
    SUBCASE("vanishing tail") {
        FormalSeriesF s;
        s.family = SeriesFamily::QSmallF;
        s.coeffs = {Complex{7.0}, Complex{0.0}, Complex{0.0}};
        CHECK(family_diagnostics(s).flag == Consistency::TrivialInFamily);
    }
}
