#pragma once

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cyclic/error.hpp"

namespace cyclic {

/// Integer polynomial in the half-chord variables u_ij (0 <= i < j < n) and
/// the radius variable rho = s(2r)/2 of an n-vertex cyclic polygon.
///
/// Terms are kept canonical: one entry per exponent vector, no zero
/// coefficients. Variables are indexed u_01, u_02, ..., u_0(n-1), u_12, ...,
/// with rho last.
class ChordIdentity {
public:
    using Exponents = std::vector<unsigned>;
    using Terms = std::map<Exponents, std::int64_t>;

    explicit ChordIdentity(std::size_t n) : n_(n) {
        if (n < 2) throw ArityError("chord identity needs at least 2 vertices");
    }

    ChordIdentity(std::size_t n, const Terms& terms) : ChordIdentity(n) {
        for (const auto& [exps, coeff] : terms) add_term(exps, coeff);
    }

    static std::size_t variable_count(std::size_t n) { return n * (n - 1) / 2 + 1; }

    static std::size_t pair_index(std::size_t n, std::size_t i, std::size_t j) {
        if (i > j) std::swap(i, j);
        if (i == j || j >= n) {
            throw IndexError("chord variable u_" + std::to_string(i) + "_" + std::to_string(j) +
                             " is invalid for " + std::to_string(n) + " vertices");
        }
        // Pairs (i, *) are preceded by i rows of lengths n-1, n-2, ..., n-i.
        return i * (2 * n - i - 1) / 2 + (j - i - 1);
    }

    static std::size_t rho_index(std::size_t n) { return variable_count(n) - 1; }

    static ChordIdentity constant(std::size_t n, std::int64_t c) {
        ChordIdentity p(n);
        p.add_term(Exponents(variable_count(n), 0), c);
        return p;
    }

    static ChordIdentity chord(std::size_t n, std::size_t i, std::size_t j) {
        return single(n, pair_index(n, i, j));
    }

    static ChordIdentity rho(std::size_t n) { return single(n, rho_index(n)); }

    std::size_t vertex_count() const { return n_; }
    std::size_t variable_count() const { return variable_count(n_); }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    /// Add `coeff` to the coefficient of the monomial with exponents `exps`.
    void add_term(const Exponents& exps, std::int64_t coeff) {
        if (exps.size() != variable_count()) {
            throw ArityError("exponent vector does not match the variable count");
        }
        if (coeff == 0) return;
        auto [it, inserted] = terms_.try_emplace(exps, coeff);
        if (!inserted) {
            if (__builtin_add_overflow(it->second, coeff, &it->second)) {
                throw Error("chord identity coefficient overflow");
            }
            if (it->second == 0) terms_.erase(it);
        }
    }

    /// Common total degree of every monomial, or nullopt when degrees differ.
    /// The zero polynomial is homogeneous of degree 0.
    std::optional<unsigned> homogeneous_degree() const {
        std::optional<unsigned> degree;
        for (const auto& [exps, coeff] : terms_) {
            unsigned d = 0;
            for (unsigned e : exps) d += e;
            if (degree && *degree != d) return std::nullopt;
            degree = d;
        }
        return degree.value_or(0);
    }

    struct Evaluation {
        double value = 0.0;
        double scale = 0.0;  // sum of |coefficient * monomial|
    };

    Evaluation evaluate(std::span<const double> values) const {
        if (values.size() != variable_count()) {
            throw ArityError("assignment does not match the variable count");
        }
        Evaluation out;
        for (const auto& [exps, coeff] : terms_) {
            double m = static_cast<double>(coeff);
            for (std::size_t k = 0; k < exps.size(); ++k) {
                for (unsigned e = 0; e < exps[k]; ++e) m *= values[k];
            }
            out.value += m;
            out.scale += std::abs(m);
        }
        return out;
    }

    ChordIdentity operator-() const {
        ChordIdentity out(n_);
        for (const auto& [exps, coeff] : terms_) out.terms_.emplace(exps, -coeff);
        return out;
    }

    friend ChordIdentity operator+(ChordIdentity a, const ChordIdentity& b) {
        a.check_same(b);
        for (const auto& [exps, coeff] : b.terms_) a.add_term(exps, coeff);
        return a;
    }

    friend ChordIdentity operator-(const ChordIdentity& a, const ChordIdentity& b) {
        return a + (-b);
    }

    friend ChordIdentity operator*(const ChordIdentity& a, const ChordIdentity& b) {
        a.check_same(b);
        ChordIdentity out(a.n_);
        for (const auto& [ea, ca] : a.terms_) {
            for (const auto& [eb, cb] : b.terms_) {
                Exponents e(ea.size());
                for (std::size_t k = 0; k < e.size(); ++k) e[k] = ea[k] + eb[k];
                std::int64_t c = 0;
                if (__builtin_mul_overflow(ca, cb, &c)) {
                    throw Error("chord identity coefficient overflow");
                }
                out.add_term(e, c);
            }
        }
        return out;
    }

    friend ChordIdentity operator*(std::int64_t k, const ChordIdentity& a) {
        return constant(a.n_, k) * a;
    }

    friend bool operator==(const ChordIdentity&, const ChordIdentity&) = default;

    ChordIdentity pow(unsigned k) const {
        ChordIdentity out = constant(n_, 1);
        for (unsigned i = 0; i < k; ++i) out = out * *this;
        return out;
    }

    /// Text form, e.g. "-u_0_1 u_2_3 + u_0_2 u_1_3 - u_0_3 u_1_2"; monomials in
    /// descending lexicographic order of their exponent vectors.
    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string out;
        bool first = true;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            const auto& [exps, coeff] = *it;
            if (first) {
                if (coeff < 0) out += "-";
            } else {
                out += coeff < 0 ? " - " : " + ";
            }
            first = false;
            const std::uint64_t mag =
                coeff < 0 ? 0 - static_cast<std::uint64_t>(coeff) : static_cast<std::uint64_t>(coeff);
            std::string factors;
            for (std::size_t k = 0; k < exps.size(); ++k) {
                if (exps[k] == 0) continue;
                if (!factors.empty()) factors += ' ';
                factors += variable_name(k);
                if (exps[k] > 1) factors += "^" + std::to_string(exps[k]);
            }
            if (factors.empty()) {
                out += std::to_string(mag);
            } else {
                if (mag != 1) out += std::to_string(mag) + " ";
                out += factors;
            }
        }
        return out;
    }

    std::string variable_name(std::size_t index) const {
        if (index == rho_index(n_)) return "rho";
        for (std::size_t i = 0; i + 1 < n_; ++i) {
            const std::size_t row = n_ - i - 1;
            if (index < row) return "u_" + std::to_string(i) + "_" + std::to_string(i + 1 + index);
            index -= row;
        }
        throw IndexError("variable index out of range");
    }

    /// Parse the text form: monomials `<int-coeff> [u_i_j^k ...] [rho^k]`
    /// joined by `+` / `-`. Factors may be separated by blanks or `*`.
    /// Without an explicit vertex count, n = max(3, largest index + 1).
    static ChordIdentity parse(std::string_view text, std::optional<std::size_t> n = std::nullopt);

private:
    static ChordIdentity single(std::size_t n, std::size_t var) {
        ChordIdentity p(n);
        Exponents e(variable_count(n), 0);
        e[var] = 1;
        p.add_term(e, 1);
        return p;
    }

    void check_same(const ChordIdentity& other) const {
        if (other.n_ != n_) throw ArityError("chord identities have different vertex counts");
    }

    std::size_t n_;
    Terms terms_;
};

namespace detail {

struct ParsedFactor {
    bool is_rho = false;
    std::size_t i = 0;
    std::size_t j = 0;
    unsigned exponent = 1;
};

struct ParsedTerm {
    std::int64_t coeff = 1;
    std::vector<ParsedFactor> factors;
};

class IdentityParser {
public:
    explicit IdentityParser(std::string_view text) : text_(text) {}

    std::vector<ParsedTerm> parse() {
        std::vector<ParsedTerm> terms;
        skip_blank();
        if (at_end()) fail("empty polynomial");
        bool first = true;
        while (!at_end()) {
            int sign = 1;
            bool signed_term = false;
            while (!at_end() && (peek() == '+' || peek() == '-')) {
                if (peek() == '-') sign = -sign;
                signed_term = true;
                ++pos_;
                skip_blank();
            }
            if (!first && !signed_term) fail("expected '+' or '-' between monomials");
            first = false;
            ParsedTerm term = parse_term();
            if (sign < 0) term.coeff = -term.coeff;
            terms.push_back(std::move(term));
        }
        return terms;
    }

private:
    ParsedTerm parse_term() {
        ParsedTerm term;
        bool any = false;
        while (!at_end() && peek() != '+' && peek() != '-') {
            if (peek() == '*') {
                if (!any) fail("'*' before the first factor");
                ++pos_;
                skip_blank();
                continue;
            }
            if (std::isdigit(static_cast<unsigned char>(peek()))) {
                const std::int64_t c = parse_integer();
                if (__builtin_mul_overflow(term.coeff, c, &term.coeff)) fail("coefficient overflow");
            } else if (consume("rho")) {
                ParsedFactor f;
                f.is_rho = true;
                f.exponent = parse_exponent();
                term.factors.push_back(f);
            } else if (consume("u_")) {
                ParsedFactor f;
                f.i = static_cast<std::size_t>(parse_integer());
                if (!consume("_")) fail("expected '_' in chord variable");
                f.j = static_cast<std::size_t>(parse_integer());
                if (f.i == f.j) fail("chord variable with equal indices");
                f.exponent = parse_exponent();
                term.factors.push_back(f);
            } else {
                fail(std::string("unexpected character '") + peek() + "'");
            }
            any = true;
            skip_blank();
        }
        if (!any) fail("empty monomial");
        return term;
    }

    unsigned parse_exponent() {
        if (!consume("^")) return 1;
        const auto e = parse_integer();
        if (e > 1000) fail("exponent too large");
        return static_cast<unsigned>(e);
    }

    std::int64_t parse_integer() {
        if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) fail("expected an integer");
        std::int64_t v = 0;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
            if (__builtin_mul_overflow(v, 10, &v) || __builtin_add_overflow(v, peek() - '0', &v)) {
                fail("integer overflow");
            }
            ++pos_;
        }
        return v;
    }

    bool consume(std::string_view word) {
        if (text_.substr(pos_, word.size()) != word) return false;
        pos_ += word.size();
        return true;
    }

    void skip_blank() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
    }

    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }

    [[noreturn]] void fail(const std::string& what) const {
        throw ParseError("polynomial parse error at offset " + std::to_string(pos_) + ": " + what);
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

} // namespace detail

inline ChordIdentity ChordIdentity::parse(std::string_view text, std::optional<std::size_t> n) {
    const auto parsed = detail::IdentityParser(text).parse();
    std::size_t needed = 0;
    for (const auto& t : parsed) {
        for (const auto& f : t.factors) {
            if (!f.is_rho) needed = std::max(needed, std::max(f.i, f.j) + 1);
        }
    }
    const std::size_t count = n.value_or(std::max<std::size_t>(3, needed));
    if (needed > count) {
        throw ParseError("polynomial references vertex " + std::to_string(needed - 1) +
                         " but the identity has " + std::to_string(count) + " vertices");
    }
    ChordIdentity out(count);
    for (const auto& t : parsed) {
        Exponents e(variable_count(count), 0);
        for (const auto& f : t.factors) {
            e[f.is_rho ? rho_index(count) : pair_index(count, f.i, f.j)] += f.exponent;
        }
        out.add_term(e, t.coeff);
    }
    return out;
}

} // namespace cyclic
