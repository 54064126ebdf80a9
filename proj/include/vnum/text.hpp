#pragma once

// Text grammar for monomials and ideals:
//   ideal    := monomial (',' monomial)*
//   monomial := factor ('*' factor)*
//   factor   := var ('^' int)? | '1'
//   var      := 'x' int | letter
//
// Indexed names x1..xt put the ideal in max-index variables. Single letters are
// ordered alphabetically among the letters that appear. The two styles cannot be mixed
// unless an explicit variable list is supplied.

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "vnum/error.hpp"
#include "vnum/monomial.hpp"

namespace vnum {

using VarNames = std::vector<std::string>;

inline VarNames indexed_names(std::size_t ambient) {
    VarNames n;
    for (std::size_t i = 1; i <= ambient; ++i) n.push_back("x" + std::to_string(i));
    return n;
}

/// Letters a, b, c, ... for t <= 26, indexed names otherwise.
inline VarNames letter_names(std::size_t ambient) {
    if (ambient > 26) return indexed_names(ambient);
    VarNames n;
    for (std::size_t i = 0; i < ambient; ++i) n.emplace_back(1, static_cast<char>('a' + i));
    return n;
}

struct ParsedIdeal {
    MonomialIdeal ideal;
    VarNames names;
};

namespace detail {

struct Factor {
    std::string name;  // empty for the constant 1
    Exponent exponent = 1;
    std::size_t position = 0;
    bool indexed = false;
    std::size_t index = 0;  // 1-based, when indexed
};

using Term = std::vector<Factor>;

class TermLexer {
public:
    explicit TermLexer(std::string_view text) : text_(text) {}

    std::vector<Term> terms() {
        std::vector<Term> out;
        skip_ws();
        if (at_end()) throw ParseError("empty expression", pos_);
        out.push_back(term());
        skip_ws();
        while (!at_end()) {
            expect(',');
            out.push_back(term());
            skip_ws();
        }
        return out;
    }

    Term single_term() {
        skip_ws();
        Term t = term();
        skip_ws();
        if (!at_end()) throw ParseError("unexpected '" + std::string(1, text_[pos_]) + "'", pos_);
        return t;
    }

private:
    bool at_end() const { return pos_ >= text_.size(); }

    void skip_ws() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    void expect(char c) {
        skip_ws();
        if (at_end()) throw ParseError(std::string("expected '") + c + "' but reached end", pos_);
        if (text_[pos_] != c)
            throw ParseError(std::string("expected '") + c + "' but found '" + text_[pos_] + "'", pos_);
        ++pos_;
    }

    Exponent integer() {
        skip_ws();
        const std::size_t start = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_) {
            if (at_end()) throw ParseError("expected integer but reached end", start);
            throw ParseError("expected integer but found '" + std::string(1, text_[start]) + "'", start);
        }
        Exponent v{};
        auto [p, ec] = std::from_chars(text_.data() + start, text_.data() + pos_, v);
        if (ec != std::errc()) throw ParseError("integer out of range", start);
        return v;
    }

    Factor factor() {
        skip_ws();
        Factor f;
        f.position = pos_;
        if (at_end()) throw ParseError("expected variable but reached end", pos_);
        const char c = text_[pos_];
        if (c == '1') {
            ++pos_;
            f.exponent = 0;
            return f;
        }
        if (!std::isalpha(static_cast<unsigned char>(c)))
            throw ParseError("expected variable but found '" + std::string(1, c) + "'", pos_);
        ++pos_;
        if ((c == 'x' || c == 'X') && !at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            const std::size_t at = pos_;
            f.index = integer();
            if (f.index == 0) throw ParseError("variable indices start at 1", at);
            f.indexed = true;
            f.name = "x" + std::to_string(f.index);
        } else {
            if (!at_end() && std::isalnum(static_cast<unsigned char>(text_[pos_])))
                throw ParseError("unknown variable name starting with '" + std::string(1, c) + "'", f.position);
            f.name = std::string(1, static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
        }
        skip_ws();
        if (!at_end() && text_[pos_] == '^') {
            ++pos_;
            f.exponent = integer();
        }
        return f;
    }

    Term term() {
        Term t;
        t.push_back(factor());
        skip_ws();
        while (!at_end() && text_[pos_] == '*') {
            ++pos_;
            t.push_back(factor());
            skip_ws();
        }
        return t;
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

inline VarNames infer_names(const std::vector<Term>& terms) {
    const Factor* first_indexed = nullptr;
    const Factor* first_letter = nullptr;
    std::size_t max_index = 0;
    std::vector<std::string> letters;
    for (const auto& t : terms)
        for (const auto& f : t) {
            if (f.name.empty()) continue;
            if (f.indexed) {
                if (!first_indexed) first_indexed = &f;
                max_index = std::max(max_index, f.index);
            } else {
                if (!first_letter) first_letter = &f;
                letters.push_back(f.name);
            }
        }
    if (first_indexed && first_letter) {
        const Factor* later = first_indexed->position > first_letter->position ? first_indexed : first_letter;
        throw ParseError("cannot mix indexed and letter variables ('" + later->name + "')", later->position);
    }
    if (first_indexed) return indexed_names(max_index);
    std::sort(letters.begin(), letters.end());
    letters.erase(std::unique(letters.begin(), letters.end()), letters.end());
    if (letters.empty()) throw ParseError("expression contains no variables", 0);
    return letters;
}

inline Monomial build(const Term& t, const VarNames& names) {
    std::vector<Exponent> e(names.size(), 0);
    for (const auto& f : t) {
        if (f.name.empty()) continue;
        auto it = std::find(names.begin(), names.end(), f.name);
        if (it == names.end()) throw ParseError("unknown variable '" + f.name + "'", f.position);
        auto& slot = e[static_cast<std::size_t>(it - names.begin())];
        slot = checked_add(slot, f.exponent);
    }
    return Monomial(std::move(e));
}

}  // namespace detail

/// Parses an ideal expression. With `vars`, names are resolved against that list
/// (which fixes the ambient ring); otherwise they are inferred.
inline ParsedIdeal parse_ideal(std::string_view text, const std::optional<VarNames>& vars = std::nullopt) {
    auto terms = detail::TermLexer(text).terms();
    VarNames names = vars ? *vars : detail::infer_names(terms);
    if (names.empty()) throw DomainError("variable list is empty");
    std::vector<Monomial> gens;
    for (const auto& t : terms) gens.push_back(detail::build(t, names));
    return ParsedIdeal{MonomialIdeal::minimalize(std::move(gens)), std::move(names)};
}

inline Monomial parse_monomial(std::string_view text, const VarNames& names) {
    return detail::build(detail::TermLexer(text).single_term(), names);
}

/// Parses a comma-separated variable list such as "x,y" or "x2, x4" into a prime.
inline MonomialPrime parse_prime(std::string_view text, const VarNames& names) {
    std::vector<std::size_t> support;
    for (const auto& t : detail::TermLexer(text).terms()) {
        if (t.size() != 1 || t.front().name.empty() || t.front().exponent != 1)
            throw ParseError("prime generators must be single variables", t.front().position);
        auto it = std::find(names.begin(), names.end(), t.front().name);
        if (it == names.end()) throw ParseError("unknown variable '" + t.front().name + "'", t.front().position);
        support.push_back(static_cast<std::size_t>(it - names.begin()));
    }
    return MonomialPrime(names.size(), std::move(support));
}

inline std::string format(const Monomial& m, const VarNames& names) {
    if (m.is_one()) return "1";
    std::string s;
    for (std::size_t i = 0; i < m.ambient(); ++i) {
        if (m[i] == 0) continue;
        if (!s.empty()) s += '*';
        s += names.at(i);
        if (m[i] > 1) s += '^' + std::to_string(m[i]);
    }
    return s;
}

inline std::string format(const MonomialIdeal& I, const VarNames& names) {
    std::string s;
    for (const auto& g : I.generators()) {
        if (!s.empty()) s += ", ";
        s += format(g, names);
    }
    return s;
}

inline std::string format(const MonomialPrime& P, const VarNames& names) {
    std::string s;
    for (std::size_t i : P.support()) {
        if (!s.empty()) s += ", ";
        s += names.at(i);
    }
    return s;
}

}  // namespace vnum
