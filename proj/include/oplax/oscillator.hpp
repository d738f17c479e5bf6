#pragma once

#include <array>
#include <stdexcept>
#include <string>

#include "oplax/operad.hpp"
#include "oplax/report.hpp"

namespace oplax {

using Matrix3 = MultiOp<OperatorExpr>;  // degree 1, dim 3: M^k_s acts as (Mv)^k = sum_s M^k_s v^s

/// H = (p^2 + w^2 q^2) / 2.
inline OperatorExpr hamiltonian() {
    using namespace gen;
    return sym::half() * (p() * p() + (sym::w() * sym::w()) * (q() * q()));
}

/// Time derivative along the oscillator flow, as a derivation of the
/// classical algebra: q' = p, p' = -w^2 q, A+' = -(w/2) A-, A-' = (w/2) A+.
/// Parameters are constant.
///
/// The A rules follow from differentiating A+^2 - A-^2 = 2p and A+ A- = w q
/// and solving for (A+', A-'); see derivation_ideal_residuals().
inline OperatorExpr ddt(const OperatorExpr& e) {
    if (e.mode() != Mode::classical) throw std::invalid_argument("ddt is defined on classical expressions only");
    using namespace gen;
    const ScalarPoly half_w = sym::half() * sym::w();
    const std::array<OperatorExpr, 4> image = {p(), -(sym::w() * sym::w()) * q(), -half_w * Am(), half_w * Ap()};
    const std::array<OperatorExpr, 4> self = {q(), p(), Ap(), Am()};

    OperatorExpr r(Mode::classical);
    for (const auto& [w, c] : e.terms()) {
        // Leibniz: sum over positions of the word with one factor differentiated.
        for (std::size_t pos = 0; pos < w.size(); ++pos) {
            OperatorExpr prod(Mode::classical, c);
            for (std::size_t k = 0; k < w.size(); ++k) {
                auto g = static_cast<std::size_t>(w[k]);
                prod = prod * (k == pos ? image[g] : self[g]);
            }
            r += prod;
        }
    }
    return r;
}

/// The two quasi-canonical relations, as expressions that vanish on the
/// constraint surface: A+^2 - A-^2 - 2p and A+ A- - w q.
inline std::array<OperatorExpr, 2> quasi_canonical_relations() {
    using namespace gen;
    return {Ap() * Ap() - Am() * Am() - ScalarPoly(2) * p(), Ap() * Am() - sym::w() * q()};
}

/// ddt maps each relation back into the ideal they generate:
///   ddt(R1) = -2w R2,  ddt(R2) = (w/2) R1.
/// Returns the two residuals, both zero when ddt is consistent.
inline std::array<OperatorExpr, 2> derivation_ideal_residuals() {
    auto [r1, r2] = quasi_canonical_relations();
    return {ddt(r1) - (ScalarPoly(-2) * sym::w()) * r2, ddt(r2) - (sym::half() * sym::w()) * r1};
}

struct LaxPair {
    Matrix3 L;
    Matrix3 M;
};

inline Matrix3 matrix3(const std::array<std::array<OperatorExpr, 3>, 3>& rows) {
    Matrix3 m(3, 1, OperatorExpr(Mode::classical));
    for (std::size_t k = 0; k < 3; ++k) {
        for (std::size_t s = 0; s < 3; ++s) m.at({s}, k) = rows[k][s];
    }
    return m;
}

/// L = [[p, wq, 0], [wq, -p, 0], [0, 0, 1]],  M = (w/2) [[0, -1, 0], [1, 0, 0], [0, 0, 0]].
inline LaxPair lax_pair() {
    using namespace gen;
    const OperatorExpr zero(Mode::classical);
    const OperatorExpr wq = sym::w() * q();
    const OperatorExpr half_w(Mode::classical, sym::half() * sym::w());
    return {matrix3({{{p(), wq, zero}, {wq, -p(), zero}, {zero, zero, OperatorExpr(Mode::classical, 1)}}}),
            matrix3({{{zero, -half_w, zero}, {half_w, zero, zero}, {zero, zero, zero}}})};
}

inline Matrix3 ddt(const Matrix3& m) { return m.transform([](const OperatorExpr& e) { return ddt(e); }); }

inline OperatorExpr trace(const Matrix3& m) {
    OperatorExpr t = m.zero();
    for (std::size_t k = 0; k < 3; ++k) t += m.at({k}, k);
    return t;
}

inline OperatorExpr determinant(const Matrix3& m) {
    auto e = [&m](std::size_t r, std::size_t c) { return m.at({c}, r); };
    return e(0, 0) * (e(1, 1) * e(2, 2) - e(1, 2) * e(2, 1)) - e(0, 1) * (e(1, 0) * e(2, 2) - e(1, 2) * e(2, 0)) +
           e(0, 2) * (e(1, 0) * e(2, 1) - e(1, 1) * e(2, 0));
}

inline std::string entry_label(std::size_t row, std::size_t col) {
    return "(" + std::to_string(row + 1) + "," + std::to_string(col + 1) + ")";
}

/// dL/dt = ML - LM entrywise, plus the isospectral invariants.
inline VerificationReport verify_matrix_lax() {
    const LaxPair lp = lax_pair();
    const Matrix3 lhs = ddt(lp.L);
    const Matrix3 rhs = gerstenhaber_bracket(lp.M, lp.L);  // degree 1: plain commutator ML - LM
    VerificationReport rep;
    const std::string ref = "Lax representation of the oscillator: dL/dt = ML - LM";
    for (std::size_t r = 0; r < 3; ++r) {
        for (std::size_t c = 0; c < 3; ++c) {
            rep.add_residual("matrix-lax.entry" + entry_label(r, c), ref, lhs.at({c}, r) - rhs.at({c}, r),
                             "dL/dt = " + lhs.at({c}, r).str());
        }
    }
    const OperatorExpr det = determinant(lp.L);
    const Matrix3 l2 = total_compose(lp.L, lp.L);
    rep.add_residual("matrix-lax.det-conserved", "isospectral invariant det L", ddt(det), "det L = " + det.str());
    rep.add_residual("matrix-lax.trace-conserved", "isospectral invariant tr L", ddt(trace(lp.L)));
    rep.add_residual("matrix-lax.trace-square-conserved", "isospectral invariant tr L^2", ddt(trace(l2)));
    rep.add_residual("matrix-lax.det-is-minus-2H", "det L = -2H", det + ScalarPoly(2) * hamiltonian());
    rep.add_residual("matrix-lax.energy-conserved", "Hamilton equations conserve H", ddt(hamiltonian()));
    auto ideal = derivation_ideal_residuals();
    rep.add_residual("derivation.ideal-A+^2-A-^2-2p", "d/dt preserves A+^2 - A-^2 = 2p", ideal[0]);
    rep.add_residual("derivation.ideal-A+A--wq", "d/dt preserves A+ A- = w q", ideal[1]);
    return rep;
}

// ---------------------------------------------------------------------------
// The nine-parameter family of binary Lax operations
// ---------------------------------------------------------------------------

/// C_1 ... C_9 stored zero-based.
using CVec = std::array<ScalarPoly, 9>;

/// The anticommutative 3D operation whose constants are linear in
/// (p, wq, A+, A-) with coefficients C_1..C_9:
///   mu_23^1 = C2 p - C3 wq - C4     mu_13^2 = C2 p - C3 wq + C4
///   mu_31^1 = C2 wq + C3 p - C1     mu_23^2 = C2 wq + C3 p + C1
///   mu_12^1 = C5 A+ + C6 A-         mu_12^2 = C5 A- - C6 A+
///   mu_13^3 = C7 A+ + C8 A-         mu_23^3 = C7 A- - C8 A+
///   mu_12^3 = C9
inline MultiOp<OperatorExpr> build_mu(const CVec& C) {
    using namespace gen;
    const OperatorExpr wq = sym::w() * q();
    const OperatorExpr one(Mode::classical, 1);
    auto c = [&C](int nu) -> const ScalarPoly& { return C[static_cast<std::size_t>(nu - 1)]; };

    Row9<OperatorExpr> row;
    row[0] = c(5) * Ap() + c(6) * Am();                   // mu_12^1
    row[1] = c(5) * Am() - c(6) * Ap();                   // mu_12^2
    row[2] = c(9) * one;                                  // mu_12^3
    row[3] = c(2) * p() - c(3) * wq - c(4) * one;         // mu_23^1
    row[4] = c(2) * wq + c(3) * p() + c(1) * one;         // mu_23^2
    row[5] = c(7) * Am() - c(8) * Ap();                   // mu_23^3
    row[6] = c(2) * wq + c(3) * p() - c(1) * one;         // mu_31^1
    row[7] = -(c(2) * p() - c(3) * wq + c(4) * one);      // mu_31^2 = -mu_13^2
    row[8] = -(c(7) * Ap() + c(8) * Am());                // mu_31^3 = -mu_13^3
    return antisymmetric_from_row(row, OperatorExpr(Mode::classical));
}

/// Initial-value solve for C given mu at t = 0 with q = 0, p = p0 > 0,
/// A+ = sqrt(2 p0) = s, A- = 0.
inline CVec solve_C(const Row9<ScalarPoly>& mu0) {
    const ScalarPoly& m12_1 = mu0[0];
    const ScalarPoly& m12_2 = mu0[1];
    const ScalarPoly& m12_3 = mu0[2];
    const ScalarPoly& m23_1 = mu0[3];
    const ScalarPoly& m23_2 = mu0[4];
    const ScalarPoly& m23_3 = mu0[5];
    const ScalarPoly& m31_1 = mu0[6];
    const ScalarPoly m13_2 = -mu0[7];
    const ScalarPoly m13_3 = -mu0[8];
    const ScalarPoly half = sym::half();
    return {half * (m23_2 - m31_1),
            sym::inv_2p0() * (m13_2 + m23_1),
            sym::inv_2p0() * (m23_2 + m31_1),
            half * (m13_2 - m23_1),
            sym::inv_sqrt_2p0() * m12_1,
            -(sym::inv_sqrt_2p0() * m12_2),
            sym::inv_sqrt_2p0() * m13_3,
            -(sym::inv_sqrt_2p0() * m23_3),
            m12_3};
}

/// Nondegeneracy condition C2^2 + C3^2 + C5^2 + C6^2 + C7^2 + C8^2 != 0.
inline bool satisfies_nondegeneracy(const CVec& C) {
    ScalarPoly sum;
    for (int nu : {2, 3, 5, 6, 7, 8}) sum += C[nu - 1] * C[nu - 1];
    return !sum.is_zero();
}

/// Evaluates at t = 0 on the p0 > 0 branch: q -> 0, p -> s^2/2, A+ -> s, A- -> 0.
inline OperatorExpr at_initial(const OperatorExpr& e) {
    if (e.mode() != Mode::classical) throw std::invalid_argument("at_initial expects a classical expression");
    const OperatorExpr zero(Mode::classical);
    return e.substitute_generators(
        Mode::classical, {zero, OperatorExpr(Mode::classical, sym::p0()), OperatorExpr(Mode::classical, sym::s()), zero});
}

/// M of the Lax pair as a degree-1 operation.
inline const MultiOp<OperatorExpr>& lax_M() {
    static const MultiOp<OperatorExpr> m = lax_pair().M;
    return m;
}

/// dmu/dt - [M, mu] for every entry; the operation solves the Lax equation
/// iff the returned operation is zero.
inline MultiOp<OperatorExpr> operadic_lax_residual(const MultiOp<OperatorExpr>& mu) {
    if (mu.dim() != 3 || mu.degree() != 2 || mu.zero().mode() != Mode::classical) {
        throw std::invalid_argument("operadic Lax check expects a classical 3D binary operation");
    }
    return mu.transform([](const OperatorExpr& e) { return ddt(e); }) - gerstenhaber_bracket(lax_M(), mu);
}

/// 27 entry checks named "<prefix>.mu(i,j;k)".
inline VerificationReport verify_operadic_lax(const MultiOp<OperatorExpr>& mu, const std::string& prefix) {
    const MultiOp<OperatorExpr> res = operadic_lax_residual(mu);
    VerificationReport rep;
    for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = 0; j < 3; ++j) {
            for (std::size_t k = 0; k < 3; ++k) {
                std::string id = prefix + ".mu(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ";" +
                                 std::to_string(k + 1) + ")";
                rep.add_residual(std::move(id), "operadic Lax equation dmu/dt = [M, mu]", res.at({i, j}, k),
                                 "mu = " + mu.at({i, j}, k).str());
            }
        }
    }
    return rep;
}

}  // namespace oplax
