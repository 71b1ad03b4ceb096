#pragma once

#include <cctype>
#include <string>
#include <string_view>
#include <vector>

#include "fgmod/module.hpp"

namespace fgmod {

inline constexpr const char* expression_grammar =
    "expr := term ('+' term)*\n"
    "term := atom ('^' k)?\n"
    "atom := 'Z' | 'Z/<m>' | '0' | 'coker[[a,b,..],[c,d,..],..]'  (one row per generator)\n"
    "e.g. 'Z/4 + Z/2^2', 'Z^2 + Z/6', 'coker[[2,4],[6,8]]'; 'Z' is not allowed over Z/n";

namespace detail {

class ExpressionParser {
public:
    ExpressionParser(const RingSpec& ring, std::string_view text) : ring_(ring), text_(text) {}

    Presentation parse() {
        std::vector<Presentation> terms{term()};
        while (accept('+')) terms.push_back(term());
        skip_space();
        if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
        return direct_sum(terms, ring_);
    }

private:
    Presentation term() {
        Presentation base = atom();
        if (!accept('^')) return base;
        const Integer k = number();
        if (k > 64) fail("exponent too large");
        return direct_sum(std::vector<Presentation>(static_cast<std::size_t>(k), base), ring_);
    }

    Presentation atom() {
        skip_space();
        if (accept_word("coker")) return presentation_literal();
        if (accept('0')) return Presentation::zero(ring_);
        if (!accept('Z')) fail("expected 'Z', 'Z/<m>', '0' or 'coker[...]'");
        if (!accept('/')) {
            if (!ring_.is_integers()) fail("'Z' is not a module over " + ring_.to_string());
            return Presentation::free(ring_, 1);
        }
        const Integer m = number();
        if (m < 1) fail("cyclic order must be positive");
        if (!ring_.is_integers() && ring_.modulus() % m != 0)
            fail("Z/" + to_string(m) + " is not a module over " + ring_.to_string());
        return Presentation::cyclic(ring_, m);
    }

    Presentation presentation_literal() {
        expect('[');
        std::vector<std::vector<Integer>> rows;
        if (!accept(']')) {
            do {
                expect('[');
                std::vector<Integer> row;
                if (!accept(']')) {
                    do row.push_back(signed_number());
                    while (accept(','));
                    expect(']');
                }
                rows.push_back(std::move(row));
            } while (accept(','));
            expect(']');
        }
        const std::size_t cols = rows.empty() ? 0 : rows.front().size();
        Matrix rels(rows.size(), cols);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (rows[r].size() != cols) fail("ragged relation matrix");
            for (std::size_t c = 0; c < cols; ++c) rels(r, c) = rows[r][c];
        }
        return Presentation(ring_, rows.size(), rels);
    }

    Integer number() {
        skip_space();
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_) fail("expected a number");
        return parse_integer(text_.substr(start, pos_ - start));
    }

    Integer signed_number() {
        skip_space();
        const bool negative = accept('-');
        Integer n = number();
        return negative ? Integer(-n) : n;
    }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skip_space();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    bool accept_word(std::string_view word) {
        skip_space();
        if (text_.substr(pos_, word.size()) != word) return false;
        pos_ += word.size();
        return true;
    }

    void expect(char c) {
        if (!accept(c)) fail(std::string("expected '") + c + "'");
    }

    [[noreturn]] void fail(const std::string& what) const {
        throw Error(ErrorCode::ParseError,
                    what + " at position " + std::to_string(pos_) + " in '" + std::string(text_) + "'");
    }

    RingSpec ring_;
    std::string_view text_;
    std::size_t pos_ = 0;
};

} // namespace detail

/// Parses a module expression over the given ring.
inline Presentation parse_module(const RingSpec& ring, std::string_view text) {
    return detail::ExpressionParser(ring, text).parse();
}

/// `Z^r + Z/d1 + ...` or `0`; parses back to an isomorphic module.
inline std::string format_module(const Presentation& P) { return canonical_form(P).to_string(); }

} // namespace fgmod
