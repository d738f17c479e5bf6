#pragma once

#include <cstdint>
#include <random>
#include <string>

#include "oplax/operad.hpp"
#include "oplax/report.hpp"

namespace oplax {

/// Operation with uniformly random small-integer entries.
inline MultiOp<Rational> random_operation(std::mt19937_64& rng, std::size_t dim, std::size_t degree, int lo = -3,
                                          int hi = 3) {
    std::uniform_int_distribution<int> coef(lo, hi);
    MultiOp<Rational> f(dim, degree, Rational(0));
    for (std::size_t k = 0; k < f.size(); ++k) f.entry(k) = Rational(coef(rng));
    return f;
}

/// Graded antisymmetry and the graded Jacobi identity on `count` random
/// triples of scalar-entried operations, dims 2..3, degrees 1..3.
inline VerificationReport verify_graded_lie(std::uint64_t seed, int count) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> dim_dist(2, 3);
    std::uniform_int_distribution<std::size_t> deg_dist(1, 3);
    VerificationReport rep;
    for (int n = 0; n < count; ++n) {
        const std::size_t d = dim_dist(rng);
        const std::size_t df = deg_dist(rng);
        const std::size_t dg = deg_dist(rng);
        const std::size_t dh = deg_dist(rng);
        auto f = random_operation(rng, d, df);
        auto g = random_operation(rng, d, dg);
        auto h = random_operation(rng, d, dh);
        const std::string tag = "graded-lie.sample-" + std::to_string(n) + "(dim " + std::to_string(d) + ", degrees " +
                                std::to_string(df) + "," + std::to_string(dg) + "," + std::to_string(dh) + ")";
        const long sfg = static_cast<long>(f.reduced_degree()) * g.reduced_degree();
        auto anti = gerstenhaber_bracket(f, g) + gerstenhaber_bracket(g, f).signed_by(sfg % 2 == 0 ? 1 : -1);
        rep.add_condition(tag + ".antisymmetry", "graded antisymmetry of the Gerstenhaber bracket", anti.is_zero(),
                          {}, "nonzero antisymmetry defect");
        rep.add_condition(tag + ".jacobi", "graded Jacobi identity", graded_jacobi_defect(f, g, h).is_zero(), {},
                          "nonzero Jacobi defect");
    }
    return rep;
}

}  // namespace oplax
