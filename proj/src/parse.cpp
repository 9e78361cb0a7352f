#include "polyfunc/parse.hpp"

#include <cctype>

namespace polyfunc {

namespace {

class Parser {
  public:
    Parser(std::string_view text, Ring ring, uint32_t arity)
        : text_(text), ring_(std::move(ring)), arity_(arity) {}

    MVPoly parse() {
        MVPoly out = expr();
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected trailing input");
        return out;
    }

  private:
    std::string_view text_;
    Ring ring_;
    uint32_t arity_;
    size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace((unsigned char)text_[pos_])) ++pos_;
    }

    bool eat(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    MVPoly expr() {
        bool negate = eat('-');
        MVPoly out = term();
        if (negate) out = -out;
        while (true) {
            if (eat('+')) {
                out = out + term();
            } else if (eat('-')) {
                out = out - term();
            } else {
                return out;
            }
        }
    }

    MVPoly term() {
        MVPoly out = power();
        while (eat('*')) out = out * power();
        return out;
    }

    MVPoly power() {
        MVPoly base = atom();
        if (eat('^')) {
            uint64_t e = uint_literal("exponent expected");
            if (e > 4096) fail("exponent too large");
            return base.pow(e);
        }
        return base;
    }

    uint64_t uint_literal(const char* what) {
        skip_ws();
        if (pos_ >= text_.size() || !std::isdigit((unsigned char)text_[pos_])) fail(what);
        uint64_t v = 0;
        while (pos_ < text_.size() && std::isdigit((unsigned char)text_[pos_])) {
            v = v * 10 + (uint64_t)(text_[pos_] - '0');
            if (v > (uint64_t(1) << 62)) fail("number too large");
            ++pos_;
        }
        return v;
    }

    MVPoly atom() {
        skip_ws();
        if (pos_ >= text_.size()) fail("operand expected");
        char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            MVPoly inner = expr();
            if (!eat(')')) fail("missing closing parenthesis");
            return inner;
        }
        if (std::isdigit((unsigned char)c)) return number();
        if (c == 'x') return variable();
        if (c == 't') {
            if (ring_->is_integers()) fail("t is only available over F_q[t]");
            ++pos_;
            BasePolynomial t;
            t.coeffs = {ring_->fq_zero(), ring_->fq_one()};
            return MVPoly::constant(ring_, arity_, BaseElement::polynomial(ring_, std::move(t)));
        }
        if (c == 'u') {
            if (ring_->is_integers() || ring_->extension_degree() < 2)
                fail("u is only available over F_{p^s} with s > 1");
            ++pos_;
            GFElement gen = ring_->fq_zero();
            gen.coords[1] = 1;
            BasePolynomial p;
            p.coeffs = {gen};
            return MVPoly::constant(ring_, arity_, BaseElement::polynomial(ring_, std::move(p)));
        }
        fail("operand expected");
    }

    MVPoly number() {
        size_t start = pos_;
        BigInt v = 0;
        while (pos_ < text_.size() && std::isdigit((unsigned char)text_[pos_])) {
            v = v * 10 + (int)(text_[pos_] - '0');
            ++pos_;
        }
        if (ring_->is_integers())
            return MVPoly::constant(ring_, arity_, BaseElement::integer(ring_, v));
        if (v >= ring_->characteristic()) {
            pos_ = start;
            fail("coefficient outside the F_q digit range");
        }
        GFElement e = ring_->fq_zero();
        e.coords[0] = v.convert_to<uint32_t>();
        BasePolynomial p;
        p.coeffs = {e};
        BaseElement elem = BaseElement::polynomial(ring_, std::move(p));
        return MVPoly::constant(ring_, arity_, elem);
    }

    MVPoly variable() {
        size_t start = pos_;
        ++pos_;  // consume 'x'
        uint64_t index = 0;
        bool has_digits = false;
        while (pos_ < text_.size() && std::isdigit((unsigned char)text_[pos_])) {
            index = index * 10 + (uint64_t)(text_[pos_] - '0');
            has_digits = true;
            ++pos_;
            if (index > 1u << 20) break;
        }
        if (!has_digits) {
            if (arity_ == 0) {
                pos_ = start;
                fail("variables are not allowed here");
            }
            if (arity_ != 1) {
                pos_ = start;
                fail("use x1..xr for several variables");
            }
            return MVPoly::variable(ring_, arity_, 0);
        }
        if (index < 1 || index > arity_) {
            pos_ = start;
            fail("unknown variable");
        }
        return MVPoly::variable(ring_, arity_, (uint32_t)(index - 1));
    }
};

}  // namespace

MVPoly parse_poly(std::string_view text, const Ring& ring, uint32_t arity) {
    return Parser(text, ring, arity).parse();
}

BaseElement parse_element(std::string_view text, const Ring& ring) {
    MVPoly p = parse_poly(text, ring, 0);
    return p.coeff(MultiIndex{{}});
}

IdealGen parse_ideal(std::string_view text, const Ring& ring) {
    return IdealGen(parse_element(text, ring));
}

namespace {

std::string render_coeff(const BaseElement& c, bool with_variables) {
    std::string s = to_string(c);
    bool composite = s.find('+') != std::string::npos;
    if (with_variables && composite) return "(" + s + ")";
    return s;
}

}  // namespace

std::string render_poly(const MVPoly& F) {
    if (F.is_zero()) return "0";
    const bool integers = F.ring()->is_integers();
    std::string out;
    // Descending lex order reads like handwritten polynomials.
    for (auto it = F.terms().rbegin(); it != F.terms().rend(); ++it) {
        const MultiIndex& k = it->first;
        BaseElement c = it->second;
        bool negative = integers && c.int_value() < 0;
        if (out.empty()) {
            if (negative) out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
        if (negative) c = -c;
        std::string vars;
        for (size_t i = 0; i < k.parts.size(); ++i) {
            if (!k.parts[i]) continue;
            if (!vars.empty()) vars += "*";
            vars += (k.parts.size() == 1) ? "x" : "x" + std::to_string(i + 1);
            if (k.parts[i] > 1) vars += "^" + std::to_string(k.parts[i]);
        }
        if (vars.empty()) {
            out += render_coeff(c, false);
        } else if (c.is_one()) {
            out += vars;
        } else {
            out += render_coeff(c, true) + "*" + vars;
        }
    }
    return out;
}

}  // namespace polyfunc
