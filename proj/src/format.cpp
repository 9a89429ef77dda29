#include "gaphase/format.hpp"

#include <cctype>
#include <cstdio>
#include <string>

#include "gaphase/errors.hpp"

namespace gaphase {

namespace {

// cpp_int's string constructor treats leading "0" as an octal prefix; all
// digit strings here are decimal.
boost::multiprecision::cpp_int decimal_int(const std::string& digits) {
    std::size_t i = 0;
    while (i + 1 < digits.size() && digits[i] == '0') ++i;
    return boost::multiprecision::cpp_int(digits.substr(i));
}

std::string coeff_str(const Rational& c) { return c.str(); }

std::string coeff_str(double c) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", c);
    return buf;
}

template <typename Coeff>
bool is_negative(const Coeff& c) {
    return c < Coeff(0);
}

template <typename Coeff>
std::string render_impl(const Multivector<Coeff>& mv) {
    if (mv.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [mask, coeff] : mv.terms()) {
        bool neg = is_negative(coeff);
        Coeff mag = neg ? Coeff(-coeff) : coeff;
        if (first) {
            if (neg) out += '-';
            first = false;
        } else {
            out += neg ? " - " : " + ";
        }
        if (mask == 0) {
            out += coeff_str(mag);
        } else if (mag == Coeff(1)) {
            out += blade_name(mask);
        } else {
            out += coeff_str(mag);
            out += '*';
            out += blade_name(mask);
        }
    }
    return out;
}

class Parser {
public:
    Parser(const std::string& text, const Signature& sig) : text_(text), sig_(sig) {}

    MultivectorQ run() {
        MultivectorQ out(sig_);
        skip_ws();
        if (at_end()) throw ParseError("empty multivector expression");
        bool first = true;
        while (!at_end()) {
            int sign = 1;
            if (peek() == '+' || peek() == '-') {
                if (peek() == '-') sign = -1;
                ++pos_;
                skip_ws();
            } else if (!first) {
                throw ParseError("expected '+' or '-' before term at offset " + std::to_string(pos_));
            }
            parse_term(out, sign);
            skip_ws();
            first = false;
        }
        return out;
    }

private:
    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }
    void skip_ws() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
    }

    Rational parse_number() {
        std::size_t start = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        std::string digits = text_.substr(start, pos_ - start);
        if (digits.empty()) throw ParseError("expected number at offset " + std::to_string(start));
        if (!at_end() && peek() == '.') {
            ++pos_;
            std::size_t frac_start = pos_;
            while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
            std::string frac = text_.substr(frac_start, pos_ - frac_start);
            if (frac.empty()) throw ParseError("expected digits after '.' at offset " + std::to_string(frac_start));
            Rational denom = 1;
            for (std::size_t i = 0; i < frac.size(); ++i) denom *= 10;
            return Rational(decimal_int(digits + frac)) / denom;
        }
        if (!at_end() && peek() == '/') {
            ++pos_;
            skip_ws();
            std::size_t den_start = pos_;
            while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
            std::string den = text_.substr(den_start, pos_ - den_start);
            if (den.empty()) throw ParseError("expected denominator at offset " + std::to_string(den_start));
            Rational d{decimal_int(den)};
            if (d == 0) throw ParseError("zero denominator at offset " + std::to_string(den_start));
            return Rational(decimal_int(digits)) / d;
        }
        return Rational(decimal_int(digits));
    }

    int parse_index() {
        std::size_t start = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        if (pos_ == start) throw ParseError("expected basis index at offset " + std::to_string(start));
        int index = std::stoi(text_.substr(start, pos_ - start));
        if (index < 1 || index > sig_.n())
            throw ParseError("basis index " + std::to_string(index) + " outside 1.." + std::to_string(sig_.n()));
        return index;
    }

    // Returns the canonical signed blade for a factor list like e21 or
    // e{2,1}; repeated indices contract through the metric.
    SignedBlade parse_blade() {
        if (peek() == 'I') {
            ++pos_;
            return {sig_.pseudoscalar_mask(), 1};
        }
        ++pos_;  // consume 'e'
        if (at_end()) throw ParseError("dangling 'e' at offset " + std::to_string(pos_));
        SignedBlade acc{0, 1};
        auto apply = [&](int index) {
            SignedBlade step = blade_product(acc.mask, BladeMask{1} << (index - 1), sig_);
            acc.mask = step.mask;
            acc.sign *= step.sign;
        };
        if (peek() == '{') {
            ++pos_;
            while (true) {
                skip_ws();
                apply(parse_index());
                skip_ws();
                if (at_end()) throw ParseError("unterminated '{' in blade");
                if (peek() == ',') {
                    ++pos_;
                    continue;
                }
                if (peek() == '}') {
                    ++pos_;
                    break;
                }
                throw ParseError("expected ',' or '}' at offset " + std::to_string(pos_));
            }
        } else {
            if (!std::isdigit(static_cast<unsigned char>(peek())))
                throw ParseError("expected index digits after 'e' at offset " + std::to_string(pos_));
            while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
                int digit = peek() - '0';
                if (digit == 0) throw ParseError("basis index 0 at offset " + std::to_string(pos_));
                if (digit > sig_.n())
                    throw ParseError("basis index " + std::to_string(digit) + " outside 1.." +
                                     std::to_string(sig_.n()));
                apply(digit);
                ++pos_;
            }
        }
        return acc;
    }

    void parse_term(MultivectorQ& out, int sign) {
        Rational coeff = 1;
        bool saw_number = false;
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            coeff = parse_number();
            saw_number = true;
            skip_ws();
            if (!at_end() && peek() == '*') {
                ++pos_;
                skip_ws();
            }
        }
        SignedBlade blade{0, 1};
        if (!at_end() && (peek() == 'e' || peek() == 'I')) {
            blade = parse_blade();
        } else if (!saw_number) {
            throw ParseError("expected coefficient or blade at offset " + std::to_string(pos_));
        }
        Rational value = coeff * sign * blade.sign;
        out.add_term(blade.mask, value);
    }

    const std::string& text_;
    Signature sig_;
    std::size_t pos_ = 0;
};

}  // namespace

std::string render(const MultivectorQ& mv) { return render_impl(mv); }
std::string render(const MultivectorD& mv) { return render_impl(mv); }

std::string render_signed_blade(int sign, BladeMask mask) {
    return sign < 0 ? "-" + blade_name(mask) : blade_name(mask);
}

MultivectorQ parse_multivector(const std::string& text, const Signature& sig) {
    return Parser(text, sig).run();
}

Rational parse_rational(const std::string& text) {
    std::size_t pos = 0;
    auto digits = [&]() {
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start) throw ParseError("bad rational '" + text + "'");
        return text.substr(start, pos - start);
    };
    int sign = 1;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
        if (text[pos] == '-') sign = -1;
        ++pos;
    }
    std::string whole = digits();
    Rational value{decimal_int(whole)};
    if (pos < text.size() && text[pos] == '.') {
        ++pos;
        std::string frac = digits();
        Rational denom = 1;
        for (std::size_t i = 0; i < frac.size(); ++i) denom *= 10;
        value = Rational(decimal_int(whole + frac)) / denom;
    } else if (pos < text.size() && text[pos] == '/') {
        ++pos;
        Rational denom{decimal_int(digits())};
        if (denom == 0) throw ParseError("zero denominator in '" + text + "'");
        value /= denom;
    }
    if (pos != text.size()) throw ParseError("bad rational '" + text + "'");
    return sign < 0 ? Rational(-value) : value;
}

}  // namespace gaphase
