#pragma once

#include <ostream>
#include <map>
#include <random>
#include <vector>

#include "oplax/oplax.hpp"

namespace oplax {

inline void PrintTo(const Rational& v, std::ostream* os) { *os << v.str(); }
inline void PrintTo(const GaussRat& v, std::ostream* os) { *os << v.str(); }
inline void PrintTo(const ScalarPoly& v, std::ostream* os) { *os << v.str(); }
inline void PrintTo(const OperatorExpr& v, std::ostream* os) { *os << v.str(); }

}  // namespace oplax

namespace oplax::fixtures {

// Random sparse ScalarPoly over a few symbols, Laurent in s.
inline ScalarPoly random_scalar(std::mt19937_64& rng, int max_terms = 4) {
    std::uniform_int_distribution<int> nterms(0, max_terms);
    std::uniform_int_distribution<int> coef(-4, 4);
    std::uniform_int_distribution<int> den(1, 3);
    std::uniform_int_distribution<int> sym(0, 6);
    std::uniform_int_distribution<int> expo(0, 2);
    std::uniform_int_distribution<int> sexp(-3, 2);
    std::vector<ScalarPoly::Term> raw;
    int n = nterms(rng);
    for (int k = 0; k < n; ++k) {
        Monomial m{};
        m[static_cast<std::size_t>(Symbol::s)] = static_cast<std::int16_t>(sexp(rng));
        for (int j = 0; j < 2; ++j) {
            int which = sym(rng);
            if (which == static_cast<int>(Symbol::s)) continue;
            m[static_cast<std::size_t>(which)] = static_cast<std::int16_t>(m[static_cast<std::size_t>(which)] + expo(rng));
        }
        raw.push_back({m, GaussRat(Rational(coef(rng), den(rng)), Rational(coef(rng) / 2))});
    }
    return ScalarPoly::from_terms(std::move(raw));
}

inline Word random_word(std::mt19937_64& rng, std::size_t max_len, int generators = 4) {
    std::uniform_int_distribution<std::size_t> len(0, max_len);
    std::uniform_int_distribution<int> g(0, generators - 1);
    Word w(len(rng));
    for (auto& x : w) x = static_cast<Generator>(g(rng));
    return w;
}

inline OperatorExpr random_operator(std::mt19937_64& rng, Mode mode, int max_terms = 3, std::size_t max_len = 3) {
    std::uniform_int_distribution<int> nterms(0, max_terms);
    std::vector<std::pair<Word, ScalarPoly>> raw;
    int n = nterms(rng);
    for (int k = 0; k < n; ++k) raw.emplace_back(random_word(rng, max_len), random_scalar(rng, 2));
    return OperatorExpr::normalize(mode, std::move(raw));
}

// Reference normalizer: rewrites at a randomly chosen applicable position.
inline OperatorExpr normalize_random_strategy(const Word& w, std::mt19937_64& rng) {
    std::vector<std::pair<Word, ScalarPoly>> work = {{w, ScalarPoly(1)}};
    std::map<Word, ScalarPoly, WordLess> done;
    while (!work.empty()) {
        auto [cur, c] = work.back();
        work.pop_back();
        std::vector<std::size_t> spots;
        for (std::size_t k = 0; k + 1 < cur.size(); ++k) {
            if (cur[k] == Generator::P && cur[k + 1] == Generator::Q) spots.push_back(k);
        }
        if (spots.empty()) {
            done[cur] += c;
            continue;
        }
        std::uniform_int_distribution<std::size_t> pick(0, spots.size() - 1);
        auto [swapped, removed] = ccr_rewrite_at(cur, spots[pick(rng)]);
        work.emplace_back(swapped, c);
        work.emplace_back(removed, c * -(sym::i() * sym::hbar()));
    }
    std::vector<std::pair<Word, ScalarPoly>> terms(done.begin(), done.end());
    // Words are already normal; normalize() only merges them here.
    return OperatorExpr::normalize(Mode::quantum, std::move(terms));
}

}  // namespace oplax::fixtures
