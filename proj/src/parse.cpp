#include "charp/parse.hpp"

#include "charp/errors.hpp"

#include <cctype>

namespace charp {

namespace {

class Lexer {
public:
    Lexer(const std::string& text, const Ring& ring) : text_(text), ring_(ring) {}

    struct Pos { int line = 1; int col = 1; };

    void skip_ws() {
        while (i_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[i_]))) advance();
    }

    bool eof() {
        skip_ws();
        return i_ >= text_.size();
    }

    char peek() {
        skip_ws();
        return i_ < text_.size() ? text_[i_] : '\0';
    }

    Pos pos() {
        skip_ws();
        return pos_;
    }

    void expect(char c) {
        if (peek() != c) {
            fail(std::string("expected '") + c + "'");
        }
        advance();
    }

    bool accept(char c) {
        if (peek() == c) {
            advance();
            return true;
        }
        return false;
    }

    std::int64_t natural() {
        skip_ws();
        if (i_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[i_]))) {
            fail("expected a number");
        }
        std::int64_t v = 0;
        while (i_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[i_]))) {
            v = v * 10 + (text_[i_] - '0');
            if (v > 2147483647ll) fail("integer literal out of range [0, 2^31-1]");
            advance();
        }
        return v;
    }

    std::string identifier() {
        skip_ws();
        if (i_ >= text_.size() || !is_ident_start(text_[i_])) fail("expected an identifier");
        std::string s;
        while (i_ < text_.size() && is_ident_char(text_[i_])) {
            s += text_[i_];
            advance();
        }
        return s;
    }

    static bool is_ident_start(char c) {
        return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
    }
    static bool is_ident_char(char c) {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
    }

    [[noreturn]] void fail(const std::string& msg) {
        throw ParseError("polynomial: " + msg, pos_.line, pos_.col);
    }

    const Ring& ring() const { return ring_; }

private:
    void advance() {
        if (i_ < text_.size()) {
            if (text_[i_] == '\n') {
                ++pos_.line;
                pos_.col = 1;
            } else {
                ++pos_.col;
            }
            ++i_;
        }
    }

    const std::string& text_;
    const Ring& ring_;
    std::size_t i_ = 0;
    Pos pos_;
};

Polynomial parse_expr(Lexer& lx);

Polynomial parse_base(Lexer& lx) {
    char c = lx.peek();
    if (c == '(') {
        lx.expect('(');
        Polynomial inner = parse_expr(lx);
        lx.expect(')');
        return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
        return Polynomial::constant(lx.ring(), lx.natural());
    }
    if (Lexer::is_ident_start(c)) {
        auto at = lx.pos();
        std::string name = lx.identifier();
        int idx = lx.ring()->var_index(name);
        if (idx < 0) {
            throw ParseError("polynomial: unknown variable '" + name + "'", at.line, at.col);
        }
        return Polynomial::variable(lx.ring(), static_cast<std::size_t>(idx));
    }
    lx.fail("expected a number, variable, or '('");
}

Polynomial parse_factor(Lexer& lx) {
    bool neg = false;
    while (lx.accept('-')) neg = !neg;
    Polynomial base = parse_base(lx);
    if (lx.accept('^')) {
        base = base.pow(lx.natural());
    }
    return neg ? -base : base;
}

Polynomial parse_term(Lexer& lx) {
    Polynomial f = parse_factor(lx);
    while (lx.accept('*')) {
        f = f * parse_factor(lx);
    }
    return f;
}

Polynomial parse_expr(Lexer& lx) {
    Polynomial f = parse_term(lx);
    for (;;) {
        if (lx.accept('+')) {
            f = f + parse_term(lx);
        } else if (lx.accept('-')) {
            f = f - parse_term(lx);
        } else {
            return f;
        }
    }
}

} // namespace

Polynomial parse_polynomial(const std::string& text, const Ring& ring) {
    Lexer lx(text, ring);
    if (lx.eof()) lx.fail("empty polynomial");
    Polynomial f = parse_expr(lx);
    if (!lx.eof()) lx.fail("unexpected trailing input");
    return f;
}

} // namespace charp
