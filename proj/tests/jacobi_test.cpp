#include <gtest/gtest.h>

#include "test_support.hpp"

using namespace oplax;

namespace {
constexpr Mode Qu = Mode::quantum;

MultiOp<OperatorExpr> quantum_row(const std::string& name) {
    return antisymmetric_from_row(*table3().find(name), OperatorExpr(Qu));
}

Vec3 random_vec(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> d(-3, 3);
    return {d(rng), d(rng), d(rng)};
}

OpVec3 zero_vec() { return {OperatorExpr(Qu), OperatorExpr(Qu), OperatorExpr(Qu)}; }
}  // namespace

TEST(Jacobi, Determinant) {
    EXPECT_EQ(det3(basis_vector(0), basis_vector(1), basis_vector(2)), ScalarPoly(1));
    EXPECT_EQ(det3(basis_vector(1), basis_vector(0), basis_vector(2)), ScalarPoly(-1));
    EXPECT_TRUE(det3(basis_vector(0), basis_vector(0), basis_vector(2)).is_zero());
    EXPECT_EQ(det3({2, 0, 0}, {0, 3, 0}, {1, 1, 5}), ScalarPoly(30));
    const Vec3 x = symbolic_vector('x');
    const Vec3 y = symbolic_vector('y');
    const Vec3 z = symbolic_vector('z');
    EXPECT_EQ(det3(x, y, z), -det3(y, x, z));
    EXPECT_EQ(det3(x, y, z), det3(y, z, x));
    EXPECT_THROW(symbolic_vector('w'), std::invalid_argument);
}

TEST(Jacobi, BracketOfBasisVectorsReadsStructureConstants) {
    const auto ix = quantum_row("IX");
    OpVec3 e12 = qbracket(basis_vector(0), basis_vector(1), ix);
    EXPECT_TRUE(e12[0].is_zero());
    EXPECT_TRUE(e12[1].is_zero());
    EXPECT_EQ(e12[2], OperatorExpr(Qu, 1));
    const auto v = quantum_row("V");
    OpVec3 v12 = qbracket(basis_vector(0), basis_vector(1), v);
    EXPECT_EQ(v12[0], sym::s(-1) * gen::Am(Qu));
    EXPECT_EQ(v12[1], -(sym::s(-1) * gen::Ap(Qu)));
    OpVec3 v21 = qbracket(basis_vector(1), basis_vector(0), v);
    EXPECT_EQ(v21[0], -v12[0]);
}

TEST(Jacobi, OuterStructureOperatorStaysLeft) {
    // [e1, w e2] with mu_12^1 = A-/s and w = A+: the entry is (A-/s) A+, not A+ (A-/s).
    const auto v = quantum_row("V");
    OpVec3 w{OperatorExpr(Qu), gen::Ap(Qu), OperatorExpr(Qu)};
    OpVec3 r = bracket_with_operator(basis_vector(0), w, v);
    EXPECT_EQ(r[0], sym::s(-1) * (gen::Am(Qu) * gen::Ap(Qu)));
    EXPECT_NE(r[0], sym::s(-1) * (gen::Ap(Qu) * gen::Am(Qu)));
}

TEST(Jacobi, LieTypesVanishOnBasis) {
    for (const char* name : {"I", "II", "VII", "VI", "IX", "VIII"}) {
        const auto mu = quantum_row(name);
        OpVec3 j = jacobi_op(basis_vector(0), basis_vector(1), basis_vector(2), mu);
        for (const auto& c : j) EXPECT_TRUE(c.is_zero()) << name << ": " << c.str();
    }
}

TEST(Jacobi, TypeVOnBasis) {
    OpVec3 j = jacobi_op(basis_vector(0), basis_vector(1), basis_vector(2), quantum_row("V"));
    EXPECT_TRUE(j[0].is_zero());
    EXPECT_TRUE(j[1].is_zero());
    const OperatorExpr expected = (ScalarPoly(2) * sym::s(-2)) * commutator(gen::Ap(Qu), gen::Am(Qu));
    EXPECT_EQ(j[2], expected);
    EXPECT_EQ(j[2].str(), "2*s^-2 * (Ah+ Ah- - Ah- Ah+)");
}

TEST(Jacobi, RepeatedArgumentGivesZero) {
    std::mt19937_64 rng(51);
    for (const auto& name : bianchi_type_names()) {
        const auto mu = quantum_row(name);
        const Vec3 x = random_vec(rng);
        const Vec3 z = random_vec(rng);
        EXPECT_EQ(jacobi_op(x, x, z, mu), zero_vec()) << name;
    }
}

TEST(Jacobi, ClosedFormOnExamples) {
    const Vec3 e1 = basis_vector(0), e2 = basis_vector(1), e3 = basis_vector(2);
    // a = 0 kills every component.
    OpVec3 j = family_jacobi_closed_form(e1, e2, e3, {sym::beta(), sym::gamma(), 0, sym::b()});
    EXPECT_EQ(j, zero_vec());
    // type IV: beta = gamma = 0, a = 1.
    OpVec3 iv = family_jacobi_closed_form(e1, e2, e3, {0, 0, 1, 1});
    EXPECT_TRUE(iv[0].is_zero());
    EXPECT_EQ(iv[2], (ScalarPoly(2) * sym::s(-2)) * commutator(gen::Ap(Qu), gen::Am(Qu)));
    // beta = 1, gamma = 0: J1 = -a det 2 s^-3 beta w qh Ah-.
    OpVec3 b = family_jacobi_closed_form(e1, e2, e3, {1, 0, 1, 0});
    EXPECT_EQ(b[0], (ScalarPoly(-2) * sym::s(-3) * sym::w()) * (gen::q(Qu) * gen::Am(Qu)));
}

TEST(Jacobi, FamilyMatchesClosedFormOnRandomVectors) {
    std::mt19937_64 rng(52);
    const FamilyParams fp = symbolic_family_params();
    const auto mu = family_mu(fp);
    for (int n = 0; n < 15; ++n) {
        const Vec3 x = random_vec(rng), y = random_vec(rng), z = random_vec(rng);
        ASSERT_EQ(jacobi_op(x, y, z, mu), family_jacobi_closed_form(x, y, z, fp));
    }
}

TEST(Jacobi, TrilinearAndAlternating) {
    std::mt19937_64 rng(53);
    const auto mu = quantum_row("VII_a");
    for (int n = 0; n < 10; ++n) {
        const Vec3 x = random_vec(rng), x2 = random_vec(rng), y = random_vec(rng), z = random_vec(rng);
        Vec3 sum{x[0] + x2[0], x[1] + x2[1], x[2] + x2[2]};
        OpVec3 a = jacobi_op(sum, y, z, mu);
        OpVec3 b = jacobi_op(x, y, z, mu);
        OpVec3 c = jacobi_op(x2, y, z, mu);
        for (std::size_t k = 0; k < 3; ++k) ASSERT_EQ(a[k], b[k] + c[k]);
        OpVec3 swapped = jacobi_op(y, x, z, mu);
        for (std::size_t k = 0; k < 3; ++k) ASSERT_EQ(swapped[k], -b[k]);
        OpVec3 cyc = jacobi_op(y, z, x, mu);
        ASSERT_EQ(cyc, b);
    }
}

TEST(Jacobi, RejectsWrongShape) {
    MultiOp<OperatorExpr> bad(2, 2, OperatorExpr(Qu));
    EXPECT_THROW(qbracket(basis_vector(0), basis_vector(1), bad), std::invalid_argument);
}

TEST(Jacobi, Verifiers) {
    EXPECT_TRUE(verify_classical_lie_types().ok());
    EXPECT_EQ(verify_classical_lie_types().total(), 33U);
    auto q = verify_quantum_lie_types();
    EXPECT_TRUE(q.ok());
    EXPECT_EQ(q.total(), 18U);
    auto fam = verify_family_jacobi();
    EXPECT_TRUE(fam.ok());
    EXPECT_NE(fam.find("theorem-9-1.b-independent"), nullptr);
    auto special = verify_family_specializations();
    EXPECT_TRUE(special.ok());
    EXPECT_EQ(special.total(), 15U);
}

TEST(Jacobi, NonLieTypesHaveNonzeroJacobiOperator) {
    for (const char* name : {"V", "IV", "VII_a", "III_a=1", "VI_a!=1"}) {
        OpVec3 j = jacobi_op(basis_vector(0), basis_vector(1), basis_vector(2), quantum_row(name));
        EXPECT_FALSE(j[2].is_zero()) << name;
    }
}
