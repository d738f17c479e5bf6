#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "oplax/rational.hpp"

namespace oplax {

// ---------------------------------------------------------------------------
// Gaussian rationals
// ---------------------------------------------------------------------------

/// re + im*i with exact rational parts.
struct GaussRat {
    Rational re;
    Rational im;

    constexpr GaussRat() = default;
    constexpr GaussRat(Rational r) : re(r) {}  // NOLINT(google-explicit-constructor)
    constexpr GaussRat(std::int64_t r) : re(r) {}  // NOLINT(google-explicit-constructor)
    constexpr GaussRat(Rational r, Rational i) : re(r), im(i) {}

    static GaussRat imag_unit() { return {Rational(0), Rational(1)}; }

    [[nodiscard]] bool is_zero() const { return re.is_zero() && im.is_zero(); }
    [[nodiscard]] bool is_one() const { return re.is_one() && im.is_zero(); }
    [[nodiscard]] bool is_real() const { return im.is_zero(); }

    friend GaussRat operator+(const GaussRat& a, const GaussRat& b) { return {a.re + b.re, a.im + b.im}; }
    friend GaussRat operator-(const GaussRat& a, const GaussRat& b) { return {a.re - b.re, a.im - b.im}; }
    friend GaussRat operator*(const GaussRat& a, const GaussRat& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    GaussRat operator-() const { return {-re, -im}; }
    GaussRat& operator+=(const GaussRat& o) { return *this = *this + o; }

    [[nodiscard]] GaussRat inverse() const {
        Rational n2 = re * re + im * im;
        if (n2.is_zero()) throw std::domain_error("inverse of zero");
        return {re / n2, -im / n2};
    }

    friend bool operator==(const GaussRat&, const GaussRat&) = default;

    /// Canonical text: "3/4", "-i", "1/2*i", "(1 + 2*i)".
    [[nodiscard]] std::string str() const {
        if (im.is_zero()) return re.str();
        auto imag = [](const Rational& v) {
            if (v == Rational(1)) return std::string("i");
            if (v == Rational(-1)) return std::string("-i");
            return v.str() + "*i";
        };
        if (re.is_zero()) return imag(im);
        std::string r = "(" + re.str();
        if (im < Rational(0)) {
            r += " - " + imag(-im);
        } else {
            r += " + " + imag(im);
        }
        return r + ")";
    }
};

// ---------------------------------------------------------------------------
// Parameter symbols
// ---------------------------------------------------------------------------

/// The fixed commuting alphabet. Order here is the exponent-vector order.
enum class Symbol : std::uint8_t { omega, hbar, s, a, beta, gamma, b, x1, x2, x3, y1, y2, y3, z1, z2, z3 };

inline constexpr std::size_t kSymbolCount = 16;

inline constexpr std::array<std::string_view, kSymbolCount> kSymbolNames = {
    "w", "hbar", "s", "a", "beta", "gamma", "b", "x1", "x2", "x3", "y1", "y2", "y3", "z1", "z2", "z3"};

inline std::string_view symbol_name(Symbol sym) { return kSymbolNames[static_cast<std::size_t>(sym)]; }

inline std::optional<Symbol> symbol_from_name(std::string_view name) {
    for (std::size_t k = 0; k < kSymbolCount; ++k) {
        if (kSymbolNames[k] == name) return static_cast<Symbol>(k);
    }
    return std::nullopt;
}

/// Exponent vector over the alphabet. Only the s slot may go negative.
using Monomial = std::array<std::int16_t, kSymbolCount>;

inline bool is_unit_monomial(const Monomial& m) {
    return std::all_of(m.begin(), m.end(), [](std::int16_t e) { return e == 0; });
}

inline Monomial operator+(const Monomial& a, const Monomial& b) {
    Monomial r{};
    for (std::size_t k = 0; k < kSymbolCount; ++k) r[k] = static_cast<std::int16_t>(a[k] + b[k]);
    return r;
}

// ---------------------------------------------------------------------------
// ScalarPoly
// ---------------------------------------------------------------------------

/// Gaussian-rational polynomial in the parameter symbols, Laurent in s.
///
/// Terms live in a flat vector sorted ascending by exponent vector with no
/// zero coefficients, so structural equality is mathematical equality.
class ScalarPoly {
public:
    using Term = std::pair<Monomial, GaussRat>;

    ScalarPoly() = default;
    ScalarPoly(GaussRat c) {  // NOLINT(google-explicit-constructor)
        if (!c.is_zero()) terms_.push_back({Monomial{}, c});
    }
    ScalarPoly(Rational c) : ScalarPoly(GaussRat(c)) {}  // NOLINT(google-explicit-constructor)
    ScalarPoly(std::int64_t c) : ScalarPoly(GaussRat(c)) {}  // NOLINT(google-explicit-constructor)
    ScalarPoly(int c) : ScalarPoly(GaussRat(std::int64_t{c})) {}  // NOLINT(google-explicit-constructor)

    static ScalarPoly symbol(Symbol sym, int power = 1) {
        Monomial m{};
        m[static_cast<std::size_t>(sym)] = static_cast<std::int16_t>(power);
        return monomial(m, GaussRat(1));
    }

    static ScalarPoly monomial(const Monomial& m, GaussRat c) {
        if (c.is_zero()) return {};
        for (std::size_t k = 0; k < kSymbolCount; ++k) {
            if (m[k] < 0 && k != static_cast<std::size_t>(Symbol::s)) {
                throw std::domain_error("negative exponent of " + std::string(kSymbolNames[k]));
            }
        }
        ScalarPoly p;
        p.terms_.push_back({m, c});
        return p;
    }

    static ScalarPoly imag_unit() { return ScalarPoly(GaussRat::imag_unit()); }

    /// Builds from arbitrary (possibly repeated, possibly zero) terms.
    static ScalarPoly from_terms(std::vector<Term> raw) {
        ScalarPoly p;
        p.terms_ = std::move(raw);
        p.canonicalize();
        return p;
    }

    [[nodiscard]] const std::vector<Term>& terms() const { return terms_; }
    [[nodiscard]] bool is_zero() const { return terms_.empty(); }
    [[nodiscard]] std::size_t size() const { return terms_.size(); }

    /// The constant value if this is a constant (possibly zero).
    [[nodiscard]] std::optional<GaussRat> constant_value() const {
        if (terms_.empty()) return GaussRat{};
        if (terms_.size() == 1 && is_unit_monomial(terms_[0].first)) return terms_[0].second;
        return std::nullopt;
    }
    [[nodiscard]] bool is_one() const {
        auto c = constant_value();
        return c && c->is_one();
    }

    [[nodiscard]] bool contains(Symbol sym) const {
        auto k = static_cast<std::size_t>(sym);
        return std::any_of(terms_.begin(), terms_.end(), [k](const Term& t) { return t.first[k] != 0; });
    }

    friend ScalarPoly operator+(const ScalarPoly& a, const ScalarPoly& b) {
        ScalarPoly r;
        r.terms_.reserve(a.terms_.size() + b.terms_.size());
        auto i = a.terms_.begin();
        auto j = b.terms_.begin();
        while (i != a.terms_.end() && j != b.terms_.end()) {
            if (i->first < j->first) {
                r.terms_.push_back(*i++);
            } else if (j->first < i->first) {
                r.terms_.push_back(*j++);
            } else {
                GaussRat c = i->second + j->second;
                if (!c.is_zero()) r.terms_.push_back({i->first, c});
                ++i;
                ++j;
            }
        }
        r.terms_.insert(r.terms_.end(), i, a.terms_.end());
        r.terms_.insert(r.terms_.end(), j, b.terms_.end());
        return r;
    }

    ScalarPoly operator-() const {
        ScalarPoly r = *this;
        for (auto& t : r.terms_) t.second = -t.second;
        return r;
    }

    friend ScalarPoly operator-(const ScalarPoly& a, const ScalarPoly& b) { return a + (-b); }

    friend ScalarPoly operator*(const ScalarPoly& a, const ScalarPoly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<Term> raw;
        raw.reserve(a.terms_.size() * b.terms_.size());
        for (const auto& [ma, ca] : a.terms_) {
            for (const auto& [mb, cb] : b.terms_) raw.push_back({ma + mb, ca * cb});
        }
        return from_terms(std::move(raw));
    }

    ScalarPoly& operator+=(const ScalarPoly& o) { return *this = *this + o; }
    ScalarPoly& operator-=(const ScalarPoly& o) { return *this = *this - o; }
    ScalarPoly& operator*=(const ScalarPoly& o) { return *this = *this * o; }

    friend bool operator==(const ScalarPoly&, const ScalarPoly&) = default;

    /// Inverse of a single-term Laurent monomial in s alone (times a nonzero constant).
    [[nodiscard]] ScalarPoly monomial_inverse() const {
        if (terms_.size() != 1) throw std::domain_error("only single-term scalars are invertible");
        const auto& [m, c] = terms_[0];
        Monomial inv{};
        for (std::size_t k = 0; k < kSymbolCount; ++k) inv[k] = static_cast<std::int16_t>(-m[k]);
        return monomial(inv, c.inverse());
    }

    /// Raises to an integer power; negative powers require an invertible monomial.
    [[nodiscard]] ScalarPoly pow(int e) const {
        ScalarPoly base = e < 0 ? monomial_inverse() : *this;
        ScalarPoly r(1);
        for (int k = 0; k < (e < 0 ? -e : e); ++k) r *= base;
        return r;
    }

    /// Simultaneous substitution of symbols by scalars.
    ///
    /// A negative power of s can only be substituted when the image of s is
    /// an invertible monomial; anything that would leave a negative exponent
    /// on another symbol is rejected with std::domain_error.
    [[nodiscard]] ScalarPoly subst(const std::map<Symbol, ScalarPoly>& bindings) const {
        if (bindings.empty()) return *this;
        ScalarPoly result;
        for (const auto& [m, c] : terms_) {
            ScalarPoly term(c);
            Monomial kept{};
            for (std::size_t k = 0; k < kSymbolCount; ++k) {
                if (m[k] == 0) continue;
                auto it = bindings.find(static_cast<Symbol>(k));
                if (it == bindings.end()) {
                    kept[k] = m[k];
                    continue;
                }
                if (m[k] < 0 && (it->second.size() != 1)) {
                    throw std::domain_error("substitution under a negative power needs a monomial image");
                }
                term *= it->second.pow(m[k]);
            }
            result += term * monomial(kept, GaussRat(1));
        }
        return result;
    }

    [[nodiscard]] ScalarPoly subst(Symbol sym, const ScalarPoly& value) const { return subst({{sym, value}}); }

    /// Canonical text: terms ascending by exponent vector, e.g. "1/2 + s^-2*w".
    [[nodiscard]] std::string str() const {
        if (terms_.empty()) return "0";
        std::string out;
        bool first = true;
        for (const auto& t : terms_) {
            std::string ts = term_str(t.first, t.second);
            if (first) {
                out = ts;
                first = false;
            } else if (ts.front() == '-') {
                out += " - " + ts.substr(1);
            } else {
                out += " + " + ts;
            }
        }
        return out;
    }

    static std::string monomial_str(const Monomial& m) {
        std::string out;
        for (std::size_t k = 0; k < kSymbolCount; ++k) {
            if (m[k] == 0) continue;
            if (!out.empty()) out += "*";
            out += kSymbolNames[k];
            if (m[k] != 1) out += "^" + std::to_string(m[k]);
        }
        return out;
    }

    static std::string term_str(const Monomial& m, const GaussRat& c) {
        std::string ms = monomial_str(m);
        if (ms.empty()) return c.str();
        if (c.is_one()) return ms;
        if (c == GaussRat(-1)) return "-" + ms;
        return c.str() + "*" + ms;
    }

private:
    void canonicalize() {
        std::sort(terms_.begin(), terms_.end(), [](const Term& x, const Term& y) { return x.first < y.first; });
        std::vector<Term> merged;
        merged.reserve(terms_.size());
        for (auto& t : terms_) {
            if (!merged.empty() && merged.back().first == t.first) {
                merged.back().second += t.second;
            } else {
                merged.push_back(std::move(t));
            }
        }
        std::erase_if(merged, [](const Term& t) { return t.second.is_zero(); });
        terms_ = std::move(merged);
    }

    std::vector<Term> terms_;
};

// Shorthands used throughout the tables.
namespace sym {
inline ScalarPoly w() { return ScalarPoly::symbol(Symbol::omega); }
inline ScalarPoly hbar() { return ScalarPoly::symbol(Symbol::hbar); }
inline ScalarPoly s(int power = 1) { return ScalarPoly::symbol(Symbol::s, power); }
inline ScalarPoly a() { return ScalarPoly::symbol(Symbol::a); }
inline ScalarPoly beta() { return ScalarPoly::symbol(Symbol::beta); }
inline ScalarPoly gamma() { return ScalarPoly::symbol(Symbol::gamma); }
inline ScalarPoly b() { return ScalarPoly::symbol(Symbol::b); }
inline ScalarPoly i() { return ScalarPoly::imag_unit(); }
inline ScalarPoly half() { return ScalarPoly(Rational(1, 2)); }

/// p0 = s^2/2, where s stands for sqrt(2 p0).
inline ScalarPoly p0() { return half() * s(2); }
/// 1/(2 p0) = s^-2.
inline ScalarPoly inv_2p0() { return s(-2); }
/// 1/sqrt(2 p0) = s^-1.
inline ScalarPoly inv_sqrt_2p0() { return s(-1); }
/// 1/sqrt(2 p0^3) = 2 s^-3.
inline ScalarPoly inv_sqrt_2p0_cubed() { return ScalarPoly(2) * s(-3); }
/// Energy E = p0^2 / 2.
inline ScalarPoly energy() { return half() * p0() * p0(); }
}  // namespace sym

}  // namespace oplax
