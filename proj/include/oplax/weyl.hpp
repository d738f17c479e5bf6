#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "oplax/scalars.hpp"

namespace oplax {

/// Noncommuting generators. Declaration order is the normal-form order.
enum class Generator : std::uint8_t { Q, P, Ap, Am };

/// classical: everything commutes. quantum: p q - q p = -i hbar, A+ and A- free.
enum class Mode : std::uint8_t { classical, quantum };

inline const char* mode_name(Mode m) { return m == Mode::classical ? "classical" : "quantum"; }

inline const char* generator_name(Generator g, Mode m) {
    static constexpr std::array<const char*, 4> classical = {"q", "p", "A+", "A-"};
    static constexpr std::array<const char*, 4> quantum = {"qh", "ph", "Ah+", "Ah-"};
    return (m == Mode::classical ? classical : quantum)[static_cast<std::size_t>(g)];
}

using Word = std::vector<Generator>;

/// Graded lexicographic: shorter words first, then generator order.
struct WordLess {
    bool operator()(const Word& x, const Word& y) const {
        if (x.size() != y.size()) return x.size() < y.size();
        return x < y;
    }
};

inline std::string word_str(const Word& w, Mode m) {
    std::string out;
    for (Generator g : w) {
        if (!out.empty()) out += ' ';
        out += generator_name(g, m);
    }
    return out;
}

/// One step of the commutation rewrite at position pos (which must hold P Q).
///
/// Returns the two words of P Q -> Q P - i hbar: the swapped word (same
/// coefficient) and the word with the pair removed (coefficient times -i hbar).
inline std::pair<Word, Word> ccr_rewrite_at(const Word& w, std::size_t pos) {
    if (pos + 1 >= w.size() || w[pos] != Generator::P || w[pos + 1] != Generator::Q) {
        throw std::invalid_argument("no p q pair at rewrite position");
    }
    Word swapped = w;
    std::swap(swapped[pos], swapped[pos + 1]);
    Word removed;
    removed.reserve(w.size() - 2);
    removed.insert(removed.end(), w.begin(), w.begin() + static_cast<std::ptrdiff_t>(pos));
    removed.insert(removed.end(), w.begin() + static_cast<std::ptrdiff_t>(pos) + 2, w.end());
    return {std::move(swapped), std::move(removed)};
}

/// Coefficient picked up by the removed-pair branch of the rewrite.
inline ScalarPoly ccr_constant() { return -(sym::i() * sym::hbar()); }

inline bool is_normal_word(const Word& w, Mode m) {
    if (m == Mode::classical) return std::is_sorted(w.begin(), w.end());
    for (std::size_t k = 0; k + 1 < w.size(); ++k) {
        if (w[k] == Generator::P && w[k + 1] == Generator::Q) return false;
    }
    return true;
}

/// Finite linear combination of normal-form words with ScalarPoly coefficients.
class OperatorExpr {
public:
    using TermMap = std::map<Word, ScalarPoly, WordLess>;

    explicit OperatorExpr(Mode mode = Mode::classical) : mode_(mode) {}
    OperatorExpr(Mode mode, const ScalarPoly& c) : mode_(mode) {
        if (!c.is_zero()) terms_.emplace(Word{}, c);
    }

    static OperatorExpr generator(Mode mode, Generator g) {
        OperatorExpr e(mode);
        e.terms_.emplace(Word{g}, ScalarPoly(1));
        return e;
    }

    /// Normalizes an arbitrary list of (word, coefficient) pairs.
    static OperatorExpr normalize(Mode mode, std::vector<std::pair<Word, ScalarPoly>> raw) {
        OperatorExpr e(mode);
        for (auto& [w, c] : raw) e.accumulate_normalized(std::move(w), std::move(c));
        return e;
    }

    [[nodiscard]] Mode mode() const { return mode_; }
    [[nodiscard]] const TermMap& terms() const { return terms_; }
    [[nodiscard]] bool is_zero() const { return terms_.empty(); }

    /// The scalar value if no word of positive length occurs.
    [[nodiscard]] std::optional<ScalarPoly> scalar_value() const {
        if (terms_.empty()) return ScalarPoly{};
        if (terms_.size() == 1 && terms_.begin()->first.empty()) return terms_.begin()->second;
        return std::nullopt;
    }

    [[nodiscard]] bool contains(Symbol s) const {
        return std::any_of(terms_.begin(), terms_.end(), [s](const auto& t) { return t.second.contains(s); });
    }

    friend OperatorExpr operator+(const OperatorExpr& u, const OperatorExpr& v) {
        check_modes(u, v);
        OperatorExpr r = u;
        for (const auto& [w, c] : v.terms_) r.add_term(w, c);
        return r;
    }

    OperatorExpr operator-() const {
        OperatorExpr r = *this;
        for (auto& [w, c] : r.terms_) c = -c;
        return r;
    }

    friend OperatorExpr operator-(const OperatorExpr& u, const OperatorExpr& v) { return u + (-v); }

    friend OperatorExpr operator*(const OperatorExpr& u, const OperatorExpr& v) {
        check_modes(u, v);
        OperatorExpr r(u.mode_);
        for (const auto& [wu, cu] : u.terms_) {
            for (const auto& [wv, cv] : v.terms_) {
                Word w;
                w.reserve(wu.size() + wv.size());
                w.insert(w.end(), wu.begin(), wu.end());
                w.insert(w.end(), wv.begin(), wv.end());
                r.accumulate_normalized(std::move(w), cu * cv);
            }
        }
        return r;
    }

    friend OperatorExpr operator*(const ScalarPoly& c, const OperatorExpr& v) {
        OperatorExpr r(v.mode_);
        if (c.is_zero()) return r;
        for (const auto& [w, cv] : v.terms_) {
            ScalarPoly p = c * cv;
            if (!p.is_zero()) r.terms_.emplace(w, std::move(p));
        }
        return r;
    }
    friend OperatorExpr operator*(const OperatorExpr& v, const ScalarPoly& c) { return c * v; }

    OperatorExpr& operator+=(const OperatorExpr& o) { return *this = *this + o; }
    OperatorExpr& operator-=(const OperatorExpr& o) { return *this = *this - o; }
    OperatorExpr& operator*=(const OperatorExpr& o) { return *this = *this * o; }

    friend bool operator==(const OperatorExpr&, const OperatorExpr&) = default;

    /// Applies a scalar substitution to every coefficient.
    [[nodiscard]] OperatorExpr subst(const std::map<Symbol, ScalarPoly>& bindings) const {
        OperatorExpr r(mode_);
        for (const auto& [w, c] : terms_) r.add_term(w, c.subst(bindings));
        return r;
    }

    /// Replaces each generator by an expression (in the target mode) and
    /// multiplies out in word order.
    [[nodiscard]] OperatorExpr substitute_generators(Mode target, const std::array<OperatorExpr, 4>& images) const {
        OperatorExpr r(target);
        for (const auto& [w, c] : terms_) {
            OperatorExpr prod(target, c);
            for (Generator g : w) prod = prod * images[static_cast<std::size_t>(g)];
            r += prod;
        }
        return r;
    }

    /// Canonical rendering (see README for the grammar).
    [[nodiscard]] std::string str() const;

private:
    static void check_modes(const OperatorExpr& u, const OperatorExpr& v) {
        if (u.mode_ != v.mode_) throw std::invalid_argument("operator expressions of different modes");
    }

    void add_term(const Word& w, const ScalarPoly& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(w, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    // Leftmost-first rewriting to the normal form of the current mode.
    void accumulate_normalized(Word w, ScalarPoly c) {
        if (c.is_zero()) return;
        if (mode_ == Mode::classical) {
            std::sort(w.begin(), w.end());
            add_term(w, c);
            return;
        }
        std::vector<std::pair<Word, ScalarPoly>> work;
        work.emplace_back(std::move(w), std::move(c));
        const ScalarPoly k = ccr_constant();
        while (!work.empty()) {
            auto [cur, coef] = std::move(work.back());
            work.pop_back();
            std::size_t pos = 0;
            while (pos + 1 < cur.size() && !(cur[pos] == Generator::P && cur[pos + 1] == Generator::Q)) ++pos;
            if (pos + 1 >= cur.size()) {
                add_term(cur, coef);
                continue;
            }
            auto [swapped, removed] = ccr_rewrite_at(cur, pos);
            work.emplace_back(std::move(removed), coef * k);
            work.emplace_back(std::move(swapped), std::move(coef));
        }
    }

    Mode mode_;
    TermMap terms_;
};

inline OperatorExpr commutator(const OperatorExpr& u, const OperatorExpr& v) { return u * v - v * u; }

namespace detail {

inline std::string coefficient_prefix(const ScalarPoly& c) {
    if (c.size() == 1) return c.str() + " * ";
    return "(" + c.str() + ") * ";
}

// Renders sum_k c_k w_k with no common-factor extraction.
inline std::string render_terms(const OperatorExpr::TermMap& terms, Mode m) {
    std::vector<std::string> parts;
    for (const auto& [w, c] : terms) {
        if (w.empty()) {
            // scalar part flattens into the outer sum
            for (const auto& [mono, coef] : c.terms()) parts.push_back(ScalarPoly::term_str(mono, coef));
            continue;
        }
        std::string ws = word_str(w, m);
        if (c.is_one()) {
            parts.push_back(ws);
        } else if (c == ScalarPoly(-1)) {
            parts.push_back("-" + ws);
        } else if (c.size() == 1) {
            parts.push_back(c.str() + " * " + ws);
        } else {
            parts.push_back("(" + c.str() + ") * " + ws);
        }
    }
    std::string out;
    for (std::size_t k = 0; k < parts.size(); ++k) {
        const std::string& p = parts[k];
        if (k == 0) {
            out = p;
        } else if (p.front() == '-') {
            out += " - " + p.substr(1);
        } else {
            out += " + " + p;
        }
    }
    return out;
}

}  // namespace detail

inline std::string OperatorExpr::str() const {
    if (terms_.empty()) return "0";
    // Common factor: every coefficient is +c or -c for the leading c, and at
    // least two words occur. Rendered as "c * (w1 - w2 ...)".
    if (terms_.size() >= 2) {
        const ScalarPoly& lead = terms_.begin()->second;
        bool all_pm = !lead.is_one() && lead != ScalarPoly(-1) && std::all_of(terms_.begin(), terms_.end(), [&](const auto& t) {
            return t.second == lead || t.second == -lead;
        });
        if (all_pm) {
            TermMap unit;
            for (const auto& [w, c] : terms_) unit.emplace(w, c == lead ? ScalarPoly(1) : ScalarPoly(-1));
            std::string inner = detail::render_terms(unit, mode_);
            return detail::coefficient_prefix(lead) + "(" + inner + ")";
        }
    }
    return detail::render_terms(terms_, mode_);
}

// Generator shorthands.
namespace gen {
inline OperatorExpr q(Mode m = Mode::classical) { return OperatorExpr::generator(m, Generator::Q); }
inline OperatorExpr p(Mode m = Mode::classical) { return OperatorExpr::generator(m, Generator::P); }
inline OperatorExpr Ap(Mode m = Mode::classical) { return OperatorExpr::generator(m, Generator::Ap); }
inline OperatorExpr Am(Mode m = Mode::classical) { return OperatorExpr::generator(m, Generator::Am); }
inline OperatorExpr scalar(Mode m, const ScalarPoly& c) { return OperatorExpr(m, c); }
}  // namespace gen

}  // namespace oplax
