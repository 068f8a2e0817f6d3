#include "atlas/polyparse.hpp"

#include <cctype>

namespace atlas {

namespace {

using PC = MultiPoly<Cyclotomic>;

class Parser {
public:
    Parser(std::string_view src, int nvars) : src_(src), nvars_(nvars) {}

    PC run() {
        PC p = expr();
        skip_ws();
        if (pos_ != src_.size()) fail("trailing input");
        return p;
    }

private:
    [[noreturn]] void fail(const std::string& why) {
        raise(Errc::ParseError,
              "parse error at offset " + std::to_string(pos_) + ": " + why + " in \"" +
                  std::string(src_) + "\"");
    }

    void skip_ws() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    }
    char peek() {
        skip_ws();
        return pos_ < src_.size() ? src_[pos_] : '\0';
    }
    bool eat(char c) {
        if (peek() == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    long integer() {
        skip_ws();
        size_t start = pos_;
        while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
        if (pos_ == start) fail("expected integer");
        return std::stol(std::string(src_.substr(start, pos_ - start)));
    }

    mpz_class big_integer() {
        skip_ws();
        size_t start = pos_;
        while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
        if (pos_ == start) fail("expected integer");
        return mpz_class(std::string(src_.substr(start, pos_ - start)));
    }

    std::string ident() {
        skip_ws();
        size_t start = pos_;
        while (pos_ < src_.size() &&
               (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
            ++pos_;
        return std::string(src_.substr(start, pos_ - start));
    }

    PC expr() {
        bool neg = false;
        if (eat('-')) neg = true;
        else eat('+');
        PC acc = term();
        if (neg) acc = -acc;
        for (;;) {
            if (eat('+')) acc = acc + term();
            else if (eat('-')) acc = acc - term();
            else break;
        }
        return acc;
    }

    PC term() {
        PC acc = factor();
        for (;;) {
            if (eat('*')) {
                acc = acc * factor();
            } else if (eat('/')) {
                PC d = factor();
                if (d.is_zero()) fail("division by zero");
                if (d.total_degree() != 0) fail("division by non-constant");
                Cyclotomic c = d.leading_coeff();
                acc = acc.scaled(c.inverse());
            } else {
                break;
            }
        }
        return acc;
    }

    PC factor() {
        PC base = atom();
        if (eat('^')) {
            bool neg = eat('-');
            long e = integer();
            if (neg) {
                if (base.total_degree() != 0 || base.is_zero()) fail("negative power of non-constant");
                return PC::constant(nvars_, base.leading_coeff().pow(-e));
            }
            return base.pow(static_cast<unsigned>(e));
        }
        return base;
    }

    PC atom() {
        char c = peek();
        if (c == '(') {
            ++pos_;
            PC p = expr();
            if (!eat(')')) fail("expected ')'");
            return p;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            return PC::constant(nvars_, Cyclotomic(Rational(big_integer())));
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::string name = ident();
            if (name == "zeta") {
                if (!eat('(')) fail("expected '(' after zeta");
                long n = integer();
                if (!eat(')')) fail("expected ')' after zeta order");
                if (n < 1) fail("zeta order must be positive");
                return PC::constant(nvars_, Cyclotomic::root_of_unity(static_cast<unsigned>(n), 1));
            }
            int var = var_index(name);
            if (var < 0) fail("unknown identifier '" + name + "'");
            return PC::variable(nvars_, var, Cyclotomic(1));
        }
        fail("unexpected character");
    }

    int var_index(const std::string& name) {
        if (nvars_ <= 3) {
            if (name == "x" && nvars_ >= 1) return 0;
            if (name == "y" && nvars_ >= 2) return 1;
            if (name == "z" && nvars_ >= 3) return 2;
        }
        if (name.size() >= 2 && name[0] == 'x') {
            bool digits = true;
            for (size_t i = 1; i < name.size(); ++i)
                digits = digits && std::isdigit(static_cast<unsigned char>(name[i]));
            if (digits) {
                int k = std::stoi(name.substr(1));
                if (k >= 1 && k <= nvars_) return k - 1;
            }
        }
        return -1;
    }

    std::string_view src_;
    int nvars_;
    size_t pos_ = 0;
};

} // namespace

MultiPoly<Cyclotomic> parse_poly(std::string_view src, int nvars) {
    return Parser(src, nvars).run();
}

Cyclotomic parse_scalar(std::string_view src) {
    PC p = Parser(src, 0).run();
    if (p.is_zero()) return Cyclotomic(0);
    return p.leading_coeff();
}

bool poly_is_rational(const MultiPoly<Cyclotomic>& p) {
    for (const auto& [m, c] : p.terms())
        if (!c.is_rational()) return false;
    return true;
}

MultiPoly<Rational> poly_rational_part(const MultiPoly<Cyclotomic>& p) {
    return map_coeffs(p, [](const Cyclotomic& c) { return c.to_rational(); });
}

} // namespace atlas
