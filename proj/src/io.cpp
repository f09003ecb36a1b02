#include "qjf/io.hpp"

#include <cctype>

namespace qjf {

namespace {

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    Form parse()
    {
        Form f = expr();
        skip_ws();
        if (pos_ != text_.size())
            throw ParseError(pos_, "unexpected trailing input");
        return f;
    }

private:
    void skip_ws()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    char peek()
    {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    bool consume(char c)
    {
        if (peek() == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    Form expr()
    {
        Form f = addend();
        while (true) {
            if (consume('+'))
                f += addend();
            else if (consume('-'))
                f -= addend();
            else
                return f;
        }
    }

    Form addend()
    {
        if (consume('-'))
            return -addend();
        return mul();
    }

    Form mul()
    {
        Form f = power();
        while (consume('*'))
            f *= power();
        return f;
    }

    Form power()
    {
        Form base = atom();
        if (peek() == '^') {
            const std::size_t at = pos_;
            ++pos_;
            bool neg = consume('-');
            Integer n = integer();
            if (n > 1000000)
                throw ParseError(at, "exponent too large");
            int e = n.convert_to<int>();
            try {
                return base.pow(neg ? -e : e);
            } catch (const std::domain_error& ex) {
                throw ParseError(at, ex.what());
            }
        }
        return base;
    }

    Form atom()
    {
        skip_ws();
        if (pos_ >= text_.size())
            throw ParseError(pos_, "unexpected end of input");
        const char ch = text_[pos_];
        if (std::isdigit(static_cast<unsigned char>(ch))) {
            Integer num = integer();
            if (peek() == '/') {
                ++pos_;
                const std::size_t at = pos_;
                Integer den = integer();
                if (den == 0)
                    throw ParseError(at, "zero denominator");
                return Form(Scalar(Rational(num, den)));
            }
            return Form(Scalar(Rational(num)));
        }
        if (std::isalpha(static_cast<unsigned char>(ch)))
            return identifier();
        if (ch == '(') {
            ++pos_;
            Form f = expr();
            if (!consume(')'))
                throw ParseError(pos_, "expected ')'");
            return f;
        }
        throw ParseError(pos_, std::string("unexpected character '") + ch + "'");
    }

    Integer integer()
    {
        skip_ws();
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        if (pos_ == start)
            throw ParseError(start, "expected integer");
        return Integer(std::string(text_.substr(start, pos_ - start)));
    }

    Form identifier()
    {
        const std::size_t start = pos_;
        while (pos_ < text_.size()
               && (std::isalnum(static_cast<unsigned char>(text_[pos_]))))
            ++pos_;
        const std::string name(text_.substr(start, pos_ - start));
        if (name == "c")
            return Form(Scalar::c_power(1));
        for (int i = 0; i < 5; ++i)
            if (name == kGenNames[i])
                return Form::generator(static_cast<Gen>(i));
        throw ParseError(start, "unknown identifier '" + name + "'");
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

// "q" or "q*c^e" for a single positive-coefficient piece.
std::string piece_string(int exponent, const Rational& q)
{
    std::string cpart;
    if (exponent == 1)
        cpart = "c";
    else if (exponent != 0)
        cpart = "c^" + std::to_string(exponent);
    if (cpart.empty())
        return to_string(q);
    if (q == 1)
        return cpart;
    return to_string(q) + "*" + cpart;
}

std::string scalar_sum_string(const Scalar& s)
{
    std::string out;
    bool first = true;
    for (const auto& [e, q] : s.coeffs()) {
        const bool neg = q < 0;
        const std::string body = piece_string(e, neg ? Rational(-q) : q);
        if (first)
            out += (neg ? "-" : "") + body;
        else
            out += (neg ? " - " : " + ") + body;
        first = false;
    }
    return out;
}

std::string monomial_string(const Monomial& m)
{
    std::string out;
    for (int i = 0; i < 5; ++i) {
        if (m.e[i] == 0)
            continue;
        if (!out.empty())
            out += "*";
        out += kGenNames[i];
        if (m.e[i] != 1)
            out += "^" + std::to_string(m.e[i]);
    }
    return out;
}

} // namespace

Form parse_form(std::string_view text)
{
    return Parser(text).parse();
}

std::string to_string(const Scalar& s)
{
    if (s.is_zero())
        return "0";
    if (s.coeffs().size() == 1) {
        const auto& [e, q] = *s.coeffs().begin();
        return (q < 0 ? "-" : "") + piece_string(e, q < 0 ? Rational(-q) : q);
    }
    return "(" + scalar_sum_string(s) + ")";
}

std::string to_string(const Form& f)
{
    if (f.is_zero())
        return "0";
    std::string out;
    bool first = true;
    // Descending graded-lex order: leading term first.
    for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
        const auto& [m, s] = *it;
        const std::string mono = monomial_string(m);
        bool neg = false;
        std::string body;
        if (s.coeffs().size() == 1) {
            const auto& [e, q] = *s.coeffs().begin();
            neg = q < 0;
            const std::string sc = piece_string(e, neg ? Rational(-q) : q);
            if (mono.empty())
                body = sc;
            else if (sc == "1")
                body = mono;
            else
                body = sc + "*" + mono;
        } else {
            body = "(" + scalar_sum_string(s) + ")";
            if (!mono.empty())
                body += "*" + mono;
        }
        if (first)
            out += (neg ? "-" : "") + body;
        else
            out += (neg ? " - " : " + ") + body;
        first = false;
    }
    return out;
}

} // namespace qjf
