#include "weyl/expr_parser.hpp"

#include <cctype>
#include <cstdlib>
#include <optional>

namespace weyl {

namespace {

class FunctionParser {
  public:
    explicit FunctionParser(const std::string& text) : text_(text) {}

    ExprPtr parse() {
        ExprPtr e = parse_sum();
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected trailing input");
        return e;
    }

  private:
    const std::string& text_;
    size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    bool consume(char c) {
        if (peek() == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (!consume(c)) fail(std::string("expected '") + c + "'");
    }

    bool lookahead_word(const char* w) {
        skip_ws();
        size_t n = 0;
        while (w[n]) ++n;
        if (text_.compare(pos_, n, w) != 0) return false;
        // reject if part of a longer identifier
        size_t after = pos_ + n;
        if (after < text_.size() && std::isalpha(static_cast<unsigned char>(text_[after])))
            return false;
        return true;
    }

    bool consume_word(const char* w) {
        if (!lookahead_word(w)) return false;
        while (*w++) ++pos_;
        return true;
    }

    // decimal literal scanned manually so that "2exp" splits after "2"
    // and words like "inf" are never absorbed
    std::optional<double> scan_decimal() {
        skip_ws();
        size_t start = pos_;
        size_t i = pos_;
        while (i < text_.size() && std::isdigit(static_cast<unsigned char>(text_[i]))) ++i;
        size_t int_digits = i - start;
        size_t frac_digits = 0;
        if (i < text_.size() && text_[i] == '.') {
            size_t j = i + 1;
            while (j < text_.size() && std::isdigit(static_cast<unsigned char>(text_[j]))) ++j;
            frac_digits = j - (i + 1);
            if (int_digits + frac_digits > 0) i = j;
        }
        if (int_digits + frac_digits == 0) return std::nullopt;
        if (i < text_.size() && (text_[i] == 'e' || text_[i] == 'E')) {
            size_t j = i + 1;
            if (j < text_.size() && (text_[j] == '+' || text_[j] == '-')) ++j;
            size_t exp_start = j;
            while (j < text_.size() && std::isdigit(static_cast<unsigned char>(text_[j]))) ++j;
            if (j > exp_start) i = j;  // otherwise the 'e' belongs to an identifier
        }
        double v = std::strtod(text_.substr(start, i - start).c_str(), nullptr);
        pos_ = i;
        return v;
    }

    // decimal ["i"], optionally signed
    std::optional<Complex> scan_simple_const() {
        skip_ws();
        size_t save = pos_;
        double sign = 1.0;
        if (consume('-')) sign = -1.0;
        if (lookahead_word("i")) {
            consume_word("i");
            return Complex{0.0, sign};
        }
        auto d = scan_decimal();
        if (!d) {
            pos_ = save;
            return std::nullopt;
        }
        if (pos_ < text_.size() && text_[pos_] == 'i' &&
            (pos_ + 1 >= text_.size() ||
             !std::isalpha(static_cast<unsigned char>(text_[pos_ + 1])))) {
            ++pos_;
            return Complex{0.0, sign * *d};
        }
        return Complex{sign * *d, 0.0};
    }

    // const ::= decimal ["i"] | "(" const ("+"|"-") const ")"
    std::optional<Complex> try_const() {
        skip_ws();
        size_t save = pos_;
        if (consume('(')) {
            auto lhs = try_const();
            if (!lhs) {
                pos_ = save;
                return std::nullopt;
            }
            skip_ws();
            char op = peek();
            if (op != '+' && op != '-') {
                pos_ = save;
                return std::nullopt;
            }
            ++pos_;
            auto rhs = try_const();
            if (!rhs || !consume(')')) {
                pos_ = save;
                return std::nullopt;
            }
            return op == '+' ? *lhs + *rhs : *lhs - *rhs;
        }
        return scan_simple_const();
    }

    Complex parse_const() {
        auto c = try_const();
        if (!c) fail("expected a constant");
        return *c;
    }

    int parse_int_exponent() {
        skip_ws();
        bool parenthesized = consume('(');
        skip_ws();
        int sign = 1;
        if (consume('-')) sign = -1;
        skip_ws();
        size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (pos_ == start) fail("expected an integer exponent");
        int v = std::atoi(text_.substr(start, pos_ - start).c_str());
        if (parenthesized) expect(')');
        return sign * v;
    }

    ExprPtr parse_sum() {
        ExprPtr e = parse_product();
        while (true) {
            if (consume('+')) e = add(e, parse_product());
            else if (consume('-')) e = sub(e, parse_product());
            else return e;
        }
    }

    ExprPtr parse_product() {
        ExprPtr e = parse_unary();
        while (true) {
            if (consume('*')) e = mul(e, parse_unary());
            else if (consume('/')) e = div(e, parse_unary());
            else return e;
        }
    }

    ExprPtr parse_unary() {
        if (consume('-')) return neg(parse_unary());
        return parse_power();
    }

    ExprPtr parse_power() {
        ExprPtr e = parse_atom();
        while (consume('^')) e = intpow(e, parse_int_exponent());
        return e;
    }

    ExprPtr parse_atom() {
        skip_ws();
        if (pos_ >= text_.size()) fail("unexpected end of input");
        // complex literal, including the parenthesized (a+bi) form
        {
            size_t save = pos_;
            if (auto c = try_const()) {
                // "(1" followed by "+t)" must not be eaten as a const
                return constant(*c);
            }
            pos_ = save;
        }
        if (consume_word("t")) return variable();
        if (consume_word("exp")) return parse_call_one(&expfn);
        if (consume_word("sin")) return parse_call_one(&sinfn);
        if (consume_word("cos")) return parse_call_one(&cosfn);
        if (consume_word("pow")) {
            expect('(');
            Complex base = parse_const();
            if (base == Complex{0.0}) fail("pow base must be nonzero");
            expect(',');
            ExprPtr u = parse_sum();
            expect(')');
            return const_base_pow(base, u);
        }
        if (consume('(')) {
            ExprPtr e = parse_sum();
            expect(')');
            return e;
        }
        fail("unexpected token");
    }

    ExprPtr parse_call_one(ExprPtr (*make)(ExprPtr)) {
        expect('(');
        ExprPtr e = parse_sum();
        expect(')');
        return make(e);
    }
};

}  // namespace

AnalyticFunction parse_function(const std::string& text, Domain domain) {
    FunctionParser p(text);
    return AnalyticFunction{p.parse(), domain};
}

}  // namespace weyl
