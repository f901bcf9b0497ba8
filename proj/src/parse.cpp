#include "artin/parse.hpp"

#include <cctype>

#include "artin/errors.hpp"

namespace artin {

namespace {

struct Lexer {
    const std::string& s;
    std::size_t pos = 0;
    int line, col;

    Lexer(const std::string& text, int line0, int col0) : s(text), line(line0), col(col0) {}

    void advance() {
        if (pos < s.size()) {
            if (s[pos] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
            ++pos;
        }
    }

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) advance();
    }

    bool eof() {
        skip_ws();
        return pos >= s.size();
    }

    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }

    [[noreturn]] void fail(const std::string& msg) { throw parse_error(msg, line, col); }
};

struct Parser {
    Lexer lx;
    const WeightedRing& ring;

    Parser(const WeightedRing& r, const std::string& text, int line0, int col0)
        : lx(text, line0, col0), ring(r) {}

    Polynomial parse() {
        Polynomial p = expr();
        if (!lx.eof()) lx.fail(std::string("unexpected character '") + lx.peek() + "'");
        return p;
    }

    Polynomial expr() {
        char c = lx.peek();
        bool negate = false;
        if (c == '+' || c == '-') {
            negate = c == '-';
            lx.advance();
        }
        Polynomial p = product();
        if (negate) p = neg(ring, p);
        while (true) {
            char op = lx.peek();
            if (op != '+' && op != '-') break;
            lx.advance();
            Polynomial q = product();
            p = op == '+' ? add(ring, p, q) : sub(ring, p, q);
        }
        return p;
    }

    Polynomial product() {
        Polynomial p = factor();
        while (true) {
            char op = lx.peek();
            if (op != '*' && op != '/') break;
            int l = lx.line, c = lx.col;
            lx.advance();
            Polynomial q = factor();
            if (op == '*') {
                p = mul(ring, p, q);
            } else {
                if (q.is_zero()) throw parse_error("division by zero", l, c);
                if (q.terms().size() != 1 || !mono_is_one(q.terms()[0].mono))
                    throw parse_error("'/' may only divide by a nonzero constant", l, c);
                p = scale(ring, p, ring.field().inv(q.terms()[0].coef));
            }
        }
        return p;
    }

    Polynomial factor() {
        Polynomial base = atom();
        if (lx.peek() == '^') {
            int l = lx.line, c = lx.col;
            lx.advance();
            long e = natural();
            if (e < 0) throw parse_error("exponent must be a non-negative integer", l, c);
            base = pow(ring, base, e);
        }
        return base;
    }

    Polynomial atom() {
        char c = lx.peek();
        if (c == '(') {
            lx.advance();
            Polynomial p = expr();
            if (lx.peek() != ')') lx.fail("expected ')'");
            lx.advance();
            return p;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            return Polynomial::constant(ring, Rational(natural()));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            int l = lx.line, cc = lx.col;
            std::string name = identifier();
            auto idx = ring.var_index(name);
            if (!idx) throw parse_error("unknown variable '" + name + "'", l, cc);
            return Polynomial::variable(ring, *idx);
        }
        if (c == '\0') lx.fail("unexpected end of input");
        lx.fail(std::string("unexpected character '") + c + "'");
    }

    long natural() {
        lx.skip_ws();
        if (lx.pos >= lx.s.size() || !std::isdigit(static_cast<unsigned char>(lx.s[lx.pos])))
            lx.fail("expected an integer");
        long v = 0;
        int digits = 0;
        while (lx.pos < lx.s.size() && std::isdigit(static_cast<unsigned char>(lx.s[lx.pos]))) {
            if (++digits > 18) lx.fail("integer literal too large");
            v = v * 10 + (lx.s[lx.pos] - '0');
            lx.advance();
        }
        return v;
    }

    std::string identifier() {
        lx.skip_ws();
        std::string name;
        while (lx.pos < lx.s.size()) {
            char ch = lx.s[lx.pos];
            if (std::isalnum(static_cast<unsigned char>(ch)) || ch == '_') {
                name += ch;
                lx.advance();
            } else {
                break;
            }
        }
        return name;
    }
};

}  // namespace

Polynomial parse_polynomial(const WeightedRing& ring, const std::string& text,
                            int line0, int col0) {
    Parser p(ring, text, line0, col0);
    return p.parse();
}

std::vector<Polynomial> parse_polynomial_list(const WeightedRing& ring,
                                              const std::string& text,
                                              int line0, int col0) {
    std::vector<Polynomial> out;
    std::size_t start = 0;
    int start_line = line0, start_col = col0;  // position of `start` in the file
    int line = line0, col = col0;
    auto flush = [&](std::size_t end) {
        std::string piece = text.substr(start, end - start);
        bool blank = piece.find_first_not_of(" \t\r\n") == std::string::npos;
        if (!blank) out.push_back(parse_polynomial(ring, piece, start_line, start_col));
    };
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (text[i] == ';') flush(i);
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
        if (text[i] == ';') {
            start = i + 1;
            start_line = line;
            start_col = col;
        }
    }
    flush(text.size());
    return out;
}

}  // namespace artin
