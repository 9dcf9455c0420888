#pragma once

#include <cctype>
#include <cstddef>
#include <string>
#include <string_view>
#include <utility>

#include "ore/error.hpp"
#include "ore/ore_ring.hpp"

namespace ore {

namespace detail {

/**
 * Recursive-descent parser for
 *
 *     expr   := ['+'|'-'] term (('+'|'-') term)*
 *     term   := power ('*' power)*
 *     power  := atom ('^' nat)*
 *     atom   := int ['/' int] | 'x' | 'y' | basis-name | '(' expr ')' | '-' atom
 *
 * Products are evaluated left to right with ore_mul and powers are
 * left-normed, so explicit parentheses keep their meaning when the
 * coefficient algebra is not associative.
 */
class ElementParser {
public:
    ElementParser(std::string_view src, const ContextPtr& ctx) : src_(src), ctx_(ctx) {}

    OreElem parse() {
        skip_space();
        if (at_end()) fail("empty expression");
        OreElem u = expr();
        skip_space();
        if (!at_end()) fail(std::string("unexpected '") + peek() + "'");
        return u;
    }

private:
    OreElem expr() {
        skip_space();
        bool negate = false;
        if (accept('-'))
            negate = true;
        else
            accept('+');
        OreElem acc = term();
        if (negate) acc = -acc;
        while (true) {
            skip_space();
            if (accept('+'))
                acc += term();
            else if (accept('-'))
                acc -= term();
            else
                return acc;
        }
    }

    OreElem term() {
        OreElem acc = power();
        while (true) {
            skip_space();
            if (!accept('*')) return acc;
            acc = ore_mul(acc, power());
        }
    }

    OreElem power() {
        OreElem base = atom();
        while (true) {
            skip_space();
            if (!accept('^')) return base;
            skip_space();
            if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) fail("expected exponent");
            const std::string digits = read_digits();
            if (digits.size() > 4) fail("exponent too large");
            base = left_power(base, static_cast<std::size_t>(std::stoul(digits)));
        }
    }

    OreElem atom() {
        skip_space();
        if (at_end()) fail("unexpected end of input");
        const char c = peek();
        if (accept('(')) {
            OreElem inner = expr();
            skip_space();
            if (!accept(')')) fail("expected ')'");
            return inner;
        }
        if (accept('-')) return -atom();
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string literal = read_digits();
            skip_space();
            if (accept('/')) {
                skip_space();
                if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) fail("expected denominator");
                const std::size_t at = pos_;
                literal += "/" + read_digits();
                try {
                    return OreElem::scalar(ctx_, Rat::parse(literal));
                } catch (const PreconditionError& e) {
                    fail(e.what(), at);
                }
            }
            return OreElem::scalar(ctx_, Rat::parse(literal));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            const std::size_t at = pos_;
            std::string name;
            while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) name += src_[pos_++];
            if (name == "x") return OreElem::x(ctx_);
            if (name == "y") return OreElem::y(ctx_);
            if (auto idx = ctx_->algebra().index_of(name)) return OreElem::constant(ctx_, ctx_->algebra().basis(*idx));
            fail("unknown name '" + name + "' (not x, y or a basis element of " + ctx_->algebra().label() + ")", at);
        }
        fail(std::string("unexpected '") + c + "'");
    }

    std::string read_digits() {
        std::string digits;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) digits += src_[pos_++];
        return digits;
    }

    bool at_end() const { return pos_ >= src_.size(); }
    char peek() const { return src_[pos_]; }
    bool accept(char c) {
        if (!at_end() && peek() == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    void skip_space() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
    }

    [[noreturn]] void fail(const std::string& what) const { fail(what, pos_); }
    [[noreturn]] void fail(const std::string& what, std::size_t at) const {
        std::size_t line = 1, column = 1;
        for (std::size_t i = 0; i < at && i < src_.size(); ++i) {
            if (src_[i] == '\n') {
                ++line;
                column = 1;
            } else {
                ++column;
            }
        }
        throw SyntaxError(what, line, column);
    }

    std::string_view src_;
    const ContextPtr& ctx_;
    std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses an element of the Ore extension described by ctx.
inline OreElem parse_element(std::string_view src, const ContextPtr& ctx) {
    if (!ctx) throw PreconditionError("parse_element needs a context");
    return detail::ElementParser(src, ctx).parse();
}

}  // namespace ore
