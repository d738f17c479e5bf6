#pragma once

#include <cctype>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "oplax/weyl.hpp"

namespace oplax {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

namespace detail {

// Recursive-descent reader for the canonical expression grammar. Accepts
// anything str() emits, plus ordinary infix notation:
//
//   expr    := ['+'|'-'] term (('+'|'-') term)*
//   term    := power (['*'] power)*        juxtaposition multiplies, in order
//   power   := primary ['^' ['-'] INT]
//   primary := INT ['/' INT] | 'i' | SYMBOL | GENERATOR | '(' expr ')'
class ExprParser {
public:
    ExprParser(std::string_view text, Mode mode) : text_(text), mode_(mode) {}

    OperatorExpr parse() {
        OperatorExpr e = expr();
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected trailing input");
        return e;
    }

private:
    [[noreturn]] void fail(const std::string& what) const {
        throw ParseError(what + " at offset " + std::to_string(pos_) + " in \"" + std::string(text_) + "\"");
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    bool starts_primary() {
        char c = peek();
        return std::isalnum(static_cast<unsigned char>(c)) || c == '(';
    }

    OperatorExpr expr() {
        OperatorExpr acc(mode_);
        bool negate = false;
        if (peek() == '-' || peek() == '+') negate = text_[pos_++] == '-';
        OperatorExpr t = term();
        acc = negate ? -t : t;
        for (;;) {
            char c = peek();
            if (c != '+' && c != '-') break;
            ++pos_;
            OperatorExpr next = term();
            acc = c == '+' ? acc + next : acc - next;
        }
        return acc;
    }

    OperatorExpr term() {
        OperatorExpr acc = power();
        for (;;) {
            if (peek() == '*') {
                ++pos_;
                acc = acc * power();
            } else if (starts_primary()) {
                acc = acc * power();
            } else {
                break;
            }
        }
        return acc;
    }

    std::int64_t integer() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_) fail("expected integer");
        try {
            return std::stoll(std::string(text_.substr(start, pos_ - start)));
        } catch (const std::out_of_range&) {
            fail("integer out of range");
        }
    }

    OperatorExpr power() {
        OperatorExpr base = primary();
        if (peek() != '^') return base;
        ++pos_;
        bool neg = false;
        if (peek() == '-') {
            neg = true;
            ++pos_;
        }
        auto e = static_cast<int>(integer());
        if (neg) {
            auto sv = base.scalar_value();
            if (!sv) fail("negative power of an operator");
            try {
                return OperatorExpr(mode_, sv->pow(-e));
            } catch (const std::domain_error& err) {
                fail(err.what());
            }
        }
        OperatorExpr r(mode_, ScalarPoly(1));
        for (int k = 0; k < e; ++k) r = r * base;
        return r;
    }

    OperatorExpr primary() {
        char c = peek();
        if (c == '(') {
            ++pos_;
            OperatorExpr e = expr();
            if (peek() != ')') fail("expected ')'");
            ++pos_;
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::int64_t n = integer();
            std::int64_t d = 1;
            if (peek() == '/') {
                ++pos_;
                d = integer();
                if (d == 0) fail("zero denominator");
            }
            return OperatorExpr(mode_, ScalarPoly(Rational(n, d)));
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            std::string id(text_.substr(start, pos_ - start));
            if ((id == "A" || id == "Ah") && pos_ < text_.size() && (text_[pos_] == '+' || text_[pos_] == '-')) {
                id += text_[pos_++];
            }
            return identifier(id);
        }
        fail("expected a factor");
    }

    OperatorExpr identifier(const std::string& id) {
        if (id == "i") return OperatorExpr(mode_, sym::i());
        if (auto s = symbol_from_name(id)) return OperatorExpr(mode_, ScalarPoly::symbol(*s));
        for (Mode m : {Mode::classical, Mode::quantum}) {
            for (Generator g : {Generator::Q, Generator::P, Generator::Ap, Generator::Am}) {
                if (id == generator_name(g, m)) {
                    if (m != mode_) fail("generator '" + id + "' does not belong to " + mode_name(mode_) + " mode");
                    return OperatorExpr::generator(mode_, g);
                }
            }
        }
        fail("unknown identifier '" + id + "'");
    }

    std::string_view text_;
    Mode mode_;
    std::size_t pos_ = 0;
};

}  // namespace detail

inline OperatorExpr parse_operator(std::string_view text, Mode mode) {
    return detail::ExprParser(text, mode).parse();
}

/// Parses a scalar; rejects any generator.
inline ScalarPoly parse_scalar(std::string_view text) {
    auto sv = parse_operator(text, Mode::classical).scalar_value();
    if (!sv) throw ParseError("expected a scalar expression: \"" + std::string(text) + "\"");
    return *sv;
}

}  // namespace oplax
