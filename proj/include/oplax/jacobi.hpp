#pragma once

#include <array>
#include <stdexcept>
#include <string>

#include "oplax/bianchi.hpp"

namespace oplax {

/// Scalar components (x^1, x^2, x^3) of a vector in span{e1, e2, e3}.
using Vec3 = std::array<ScalarPoly, 3>;

/// Operator-valued components of a product or Jacobi operator.
using OpVec3 = std::array<OperatorExpr, 3>;

inline Vec3 basis_vector(std::size_t k) {
    Vec3 v{0, 0, 0};
    v.at(k) = 1;
    return v;
}

/// (x1, x2, x3), (y1, y2, y3) or (z1, z2, z3) as free symbols.
inline Vec3 symbolic_vector(char which) {
    Symbol first = which == 'x' ? Symbol::x1 : which == 'y' ? Symbol::y1 : Symbol::z1;
    if (which != 'x' && which != 'y' && which != 'z') throw std::invalid_argument("symbolic vector must be x, y or z");
    auto k = static_cast<std::uint8_t>(first);
    return {ScalarPoly::symbol(static_cast<Symbol>(k)), ScalarPoly::symbol(static_cast<Symbol>(k + 1)),
            ScalarPoly::symbol(static_cast<Symbol>(k + 2))};
}

/// det of the matrix with rows x, y, z.
inline ScalarPoly det3(const Vec3& x, const Vec3& y, const Vec3& z) {
    return x[0] * (y[1] * z[2] - y[2] * z[1]) - x[1] * (y[0] * z[2] - y[2] * z[0]) + x[2] * (y[0] * z[1] - y[1] * z[0]);
}

namespace detail {
inline void check_binary_3d(const MultiOp<OperatorExpr>& mu) {
    if (mu.dim() != 3 || mu.degree() != 2) throw std::invalid_argument("expected a 3D binary operation");
}
}  // namespace detail

/// [x, w]^i = sum_{j,k} mu^i_{jk} x^j w^k with operator-valued w.
///
/// The structure operator stays to the left of w^k; the scalar x^j commutes.
inline OpVec3 bracket_with_operator(const Vec3& x, const OpVec3& w, const MultiOp<OperatorExpr>& mu) {
    detail::check_binary_3d(mu);
    const Mode m = mu.zero().mode();
    OpVec3 r{OperatorExpr(m), OperatorExpr(m), OperatorExpr(m)};
    for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = 0; j < 3; ++j) {
            if (x[j].is_zero()) continue;
            for (std::size_t k = 0; k < 3; ++k) {
                const OperatorExpr& c = mu.at({j, k}, i);
                if (c.is_zero() || w[k].is_zero()) continue;
                r[i] += x[j] * (c * w[k]);
            }
        }
    }
    return r;
}

/// [x, y]^i = sum_{j,k} mu^i_{jk} x^j y^k.
inline OpVec3 qbracket(const Vec3& x, const Vec3& y, const MultiOp<OperatorExpr>& mu) {
    detail::check_binary_3d(mu);
    const Mode m = mu.zero().mode();
    OpVec3 r{OperatorExpr(m), OperatorExpr(m), OperatorExpr(m)};
    for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = 0; j < 3; ++j) {
            for (std::size_t k = 0; k < 3; ++k) r[i] += (x[j] * y[k]) * mu.at({j, k}, i);
        }
    }
    return r;
}

/// J(x; y; z) = [x, [y, z]] + [y, [z, x]] + [z, [x, y]].
inline OpVec3 jacobi_op(const Vec3& x, const Vec3& y, const Vec3& z, const MultiOp<OperatorExpr>& mu) {
    OpVec3 a = bracket_with_operator(x, qbracket(y, z, mu), mu);
    OpVec3 b = bracket_with_operator(y, qbracket(z, x, mu), mu);
    OpVec3 c = bracket_with_operator(z, qbracket(x, y, mu), mu);
    return {a[0] + b[0] + c[0], a[1] + b[1] + c[1], a[2] + b[2] + c[2]};
}

/// xi+ = beta w qh Ah- + gamma (ph - p0) Ah+,  xi- = beta w qh Ah+ - gamma (ph + p0) Ah-.
inline std::array<OperatorExpr, 2> family_xi(const FamilyParams& fp) {
    constexpr Mode m = Mode::quantum;
    const OperatorExpr bwq = (fp.beta * sym::w()) * gen::q(m);
    const OperatorExpr p0(m, sym::p0());
    return {bwq * gen::Am(m) + fp.gamma * ((gen::p(m) - p0) * gen::Ap(m)),
            bwq * gen::Ap(m) - fp.gamma * ((gen::p(m) + p0) * gen::Am(m))};
}

/// Closed form of the family's Jacobi operator:
///   J1 = -a det/sqrt(2 p0^3) xi+,  J2 = -a det/sqrt(2 p0^3) xi-,  J3 = a^2 det/p0 [Ah+, Ah-].
inline OpVec3 family_jacobi_closed_form(const Vec3& x, const Vec3& y, const Vec3& z, const FamilyParams& fp) {
    constexpr Mode m = Mode::quantum;
    const ScalarPoly det = det3(x, y, z);
    const ScalarPoly lead = -(fp.a * det * sym::inv_sqrt_2p0_cubed());
    const ScalarPoly inv_p0 = ScalarPoly(2) * sym::s(-2);
    auto xi = family_xi(fp);
    return {lead * xi[0], lead * xi[1], (fp.a * fp.a * det * inv_p0) * commutator(gen::Ap(m), gen::Am(m))};
}

inline OpVec3 subst(const OpVec3& v, const std::map<Symbol, ScalarPoly>& bindings) {
    return {v[0].subst(bindings), v[1].subst(bindings), v[2].subst(bindings)};
}

/// Closed form against direct computation, everything symbolic; plus
/// independence of b.
inline VerificationReport verify_family_jacobi() {
    const Vec3 x = symbolic_vector('x');
    const Vec3 y = symbolic_vector('y');
    const Vec3 z = symbolic_vector('z');
    const FamilyParams fp = symbolic_family_params();
    const OpVec3 computed = jacobi_op(x, y, z, family_mu(fp));
    const OpVec3 closed = family_jacobi_closed_form(x, y, z, fp);

    VerificationReport rep;
    const std::string ref = "Jacobi operator of the quantum family in closed form";
    for (std::size_t k = 0; k < 3; ++k) {
        rep.add_residual("theorem-9-1.J" + std::to_string(k + 1), ref, computed[k] - closed[k],
                         std::to_string(computed[k].terms().size()) + " normal-ordered words");
    }
    bool b_free = !computed[0].contains(Symbol::b) && !computed[1].contains(Symbol::b) &&
                  !computed[2].contains(Symbol::b);
    rep.add_condition("theorem-9-1.b-independent", "Jacobi operator does not depend on b", b_free);
    const OpVec3 b0 = subst(computed, {{Symbol::b, 0}});
    const OpVec3 b1 = subst(computed, {{Symbol::b, 1}});
    rep.add_condition("theorem-9-1.b0-equals-b1", "Jacobi operator does not depend on b", b0 == b1);
    return rep;
}

/// Closed form specialized to each named family member, checked against the
/// Jacobi operator of its quantum table row.
inline VerificationReport verify_family_specializations(const BianchiData& data = {}) {
    const Vec3 x = symbolic_vector('x');
    const Vec3 y = symbolic_vector('y');
    const Vec3 z = symbolic_vector('z');
    VerificationReport rep;
    for (const FamilyRow& fr : data.t4) {
        const Row9<OperatorExpr>* row = data.t3.find(fr.name);
        if (row == nullptr) {
            rep.add_condition("theorem-9-1." + fr.name, "closed form specialized", false, "row missing", "missing row");
            continue;
        }
        const OpVec3 computed = jacobi_op(x, y, z, antisymmetric_from_row(*row, OperatorExpr(Mode::quantum)));
        const OpVec3 closed = family_jacobi_closed_form(x, y, z, fr.params);
        for (std::size_t k = 0; k < 3; ++k) {
            rep.add_residual("theorem-9-1." + fr.name + ".J" + std::to_string(k + 1),
                             "closed form specialized to " + fr.name, computed[k] - closed[k],
                             "J = " + closed[k].str());
        }
    }
    return rep;
}

/// The six quantum types whose Jacobi operator vanishes identically
/// (symbolic x, y, z and hbar).
inline VerificationReport verify_quantum_lie_types(const BianchiData& data = {}) {
    const Vec3 x = symbolic_vector('x');
    const Vec3 y = symbolic_vector('y');
    const Vec3 z = symbolic_vector('z');
    VerificationReport rep;
    for (const char* name : {"I", "II", "VII", "VI", "IX", "VIII"}) {
        const Row9<OperatorExpr>* row = data.t3.find(name);
        if (row == nullptr) {
            rep.add_condition(std::string("jacobi-quantum.") + name, "quantum Lie algebra", false, "row missing",
                              "missing row");
            continue;
        }
        const OpVec3 j = jacobi_op(x, y, z, antisymmetric_from_row(*row, OperatorExpr(Mode::quantum)));
        for (std::size_t k = 0; k < 3; ++k) {
            rep.add_residual(std::string("jacobi-quantum.") + name + ".J" + std::to_string(k + 1),
                             "quantum counterpart is a Lie algebra", j[k]);
        }
    }
    return rep;
}

/// Ordinary Jacobi identity for every initial (scalar) algebra.
inline VerificationReport verify_classical_lie_types(const BianchiData& data = {}) {
    const Vec3 x = symbolic_vector('x');
    const Vec3 y = symbolic_vector('y');
    const Vec3 z = symbolic_vector('z');
    VerificationReport rep;
    for (const BianchiRow& row : data.t1) {
        Row9<OperatorExpr> lifted;
        for (std::size_t k = 0; k < 9; ++k) lifted[k] = OperatorExpr(Mode::classical, row.mu0[k]);
        const OpVec3 j = jacobi_op(x, y, z, antisymmetric_from_row(lifted, OperatorExpr(Mode::classical)));
        for (std::size_t k = 0; k < 3; ++k) {
            rep.add_residual("jacobi-classical." + row.name + ".J" + std::to_string(k + 1),
                             "Bianchi algebra satisfies the Jacobi identity", j[k]);
        }
    }
    return rep;
}

}  // namespace oplax
