#include "chom/parser.hpp"

#include <cctype>

namespace chom {

namespace {

class Parser {
public:
    Parser(const std::string& src, const std::vector<std::string>& vars) : src_(src), vars_(vars) {}

    Poly parse() {
        Poly p = expr();
        skip_ws();
        if (pos_ != src_.size()) throw SyntaxError("unexpected trailing input", pos_);
        return p;
    }

private:
    void skip_ws() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    }

    bool eat(char c) {
        skip_ws();
        if (pos_ < src_.size() && src_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    Poly expr() {
        Poly p = term();
        while (true) {
            if (eat('+'))
                p = p + term();
            else if (eat('-'))
                p = p - term();
            else
                return p;
        }
    }

    Poly term() {
        Poly p = factor();
        while (true) {
            if (eat('*')) {
                p = p * factor();
            } else if (eat('/')) {
                std::size_t at = pos_;
                Poly d = factor();
                Rat c = constant_value(d);
                if (c == 0) throw SyntaxError("division by a non-constant or zero", at);
                p = p.scaled(1 / c);
            } else {
                return p;
            }
        }
    }

    // the value of a constant polynomial, 0 when it is not constant
    static Rat constant_value(const Poly& p) {
        if (p.terms().size() != 1) return 0;
        const auto& [e, c] = *p.terms().begin();
        for (unsigned k : e)
            if (k != 0) return 0;
        return c;
    }

    Poly factor() {
        if (eat('-')) return -factor();
        return power();
    }

    Poly power() {
        Poly base = atom();
        if (eat('^')) {
            skip_ws();
            std::size_t at = pos_;
            // right-associative exponent chain; each exponent is an integer
            unsigned e = integer_literal();
            while (eat('^')) {
                unsigned f = integer_literal();
                unsigned acc = 1;
                for (unsigned i = 0; i < f; ++i) acc *= e;
                e = acc;
            }
            (void)at;
            return base.pow(e);
        }
        return base;
    }

    unsigned integer_literal() {
        skip_ws();
        if (pos_ >= src_.size() || !std::isdigit(static_cast<unsigned char>(src_[pos_])))
            throw SyntaxError("expected non-negative integer exponent", pos_);
        unsigned v = 0;
        while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
            v = v * 10 + static_cast<unsigned>(src_[pos_] - '0');
            ++pos_;
        }
        return v;
    }

    Poly atom() {
        skip_ws();
        if (pos_ >= src_.size()) throw SyntaxError("unexpected end of input", pos_);
        char c = src_[pos_];
        if (c == '(') {
            ++pos_;
            Poly p = expr();
            if (!eat(')')) throw SyntaxError("expected ')'", pos_);
            return p;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
            return Poly::constant(Rat(src_.substr(start, pos_ - start)),
                                  static_cast<int>(vars_.size()));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            while (pos_ < src_.size() &&
                   (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
                ++pos_;
            std::string name = src_.substr(start, pos_ - start);
            for (std::size_t i = 0; i < vars_.size(); ++i)
                if (vars_[i] == name)
                    return Poly::variable(static_cast<int>(i), static_cast<int>(vars_.size()));
            throw UnknownVariable(name, start);
        }
        throw SyntaxError(std::string("unexpected character '") + c + "'", pos_);
    }

    const std::string& src_;
    const std::vector<std::string>& vars_;
    std::size_t pos_ = 0;
};

}  // namespace

Poly parse_poly(const std::string& src, const std::vector<std::string>& vars) {
    return Parser(src, vars).parse();
}

}  // namespace chom
