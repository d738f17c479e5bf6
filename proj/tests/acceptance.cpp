// Acceptance suite: one PASS/FAIL line per criterion, exit status 0 iff all pass.

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "test_support.hpp"

#ifndef OPLAX_CLI_PATH
#error "OPLAX_CLI_PATH must point at the oplax executable"
#endif

using namespace oplax;

namespace {

struct Outcome {
    bool passed = true;
    std::string detail;

    void require(bool cond, const std::string& what) {
        if (!cond && passed) {
            passed = false;
            detail = what;
        }
    }
};

struct Criterion {
    std::string id;
    std::string title;
    double limit_seconds;  // 0 means no limit
    std::function<Outcome()> body;
};

std::string failed_ids(const VerificationReport& rep) {
    std::string out;
    for (const auto& c : rep.checks()) {
        if (!c.passed) out += (out.empty() ? "" : ", ") + c.id;
    }
    return out;
}

struct Proc {
    int status;
    std::string out;
};

Proc run_cli(const std::string& args) {
    const std::string cmd = std::string("\"") + OPLAX_CLI_PATH + "\" " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (pipe == nullptr) return {-1, {}};
    std::string out;
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
    int st = pclose(pipe);
    return {WIFEXITED(st) ? WEXITSTATUS(st) : -1, out};
}

Outcome a1() {
    Outcome o;
    auto rep = verify_matrix_lax();
    int entries = 0;
    for (const auto& c : rep.checks()) entries += c.id.rfind("matrix-lax.entry", 0) == 0 ? 1 : 0;
    o.require(entries == 9, "expected 9 entry checks");
    o.require(rep.find("matrix-lax.det-conserved") != nullptr && rep.find("matrix-lax.det-is-minus-2H") != nullptr,
              "missing det checks");
    o.require(rep.ok(), "failing: " + failed_ids(rep));
    if (o.passed) o.detail = std::to_string(rep.total()) + " checks";
    return o;
}

Outcome a2() {
    Outcome o;
    const auto t2 = table2();
    const auto mu_ii = antisymmetric_from_row(*t2.find("II"), OperatorExpr(Mode::classical));
    const OperatorExpr oracle = -(sym::w() * sym::w() * sym::inv_2p0()) * gen::q();
    const OperatorExpr lhs = ddt(mu_ii.at({1, 2}, 0));
    const OperatorExpr rhs = gerstenhaber_bracket(lax_M(), mu_ii).at({1, 2}, 0);
    o.require(lhs == oracle, "II (2,3;1) dmu/dt = " + lhs.str());
    o.require(rhs == oracle, "II (2,3;1) [M, mu] = " + rhs.str());
    std::size_t total = 0;
    for (const auto& [name, row] : t2.rows) {
        auto rep = verify_operadic_lax(antisymmetric_from_row(row, OperatorExpr(Mode::classical)), name);
        total += rep.total();
        o.require(rep.ok(), "failing: " + failed_ids(rep));
    }
    o.require(t2.rows.size() == 11 && total == 297, "expected 11 rows x 27 entries");
    if (o.passed) o.detail = "hand oracle reproduced; " + std::to_string(total) + " entries zero";
    return o;
}

Outcome a3() {
    Outcome o;
    const auto t2 = table2();
    int derive = 0, initial = 0;
    for (const auto& r : table1()) {
        const auto* stored = t2.find(r.name);
        o.require(stored != nullptr, "missing row " + r.name);
        if (stored == nullptr) continue;
        const auto derived = row_from_operation(build_mu(solve_C(r.mu0)));
        for (std::size_t k = 0; k < 9; ++k) {
            o.require(derived[k] == (*stored)[k], r.name + " " + row9_label(k) + " derived " + derived[k].str());
            o.require(at_initial((*stored)[k]) == OperatorExpr(Mode::classical, r.mu0[k]),
                      r.name + " " + row9_label(k) + " at t = 0");
            ++derive;
            ++initial;
        }
    }
    o.require(derive == 99 && initial == 99, "expected 99 + 99 comparisons");
    if (o.passed) o.detail = "99 + 99 entries equal";
    return o;
}

Outcome from_report(const VerificationReport& rep, std::size_t expected) {
    Outcome o;
    o.require(rep.total() == expected,
              "expected " + std::to_string(expected) + " checks, got " + std::to_string(rep.total()));
    o.require(rep.ok(), "failing: " + failed_ids(rep));
    if (o.passed) o.detail = std::to_string(rep.total()) + " components zero";
    return o;
}

Outcome a4() { return from_report(verify_classical_lie_types(), 33); }

Outcome a5() {
    Outcome o = from_report(verify_quantum_lie_types(), 18);
    // (p + p0) (w q) in the II row reorders through the commutation relation.
    const auto& ii = *table3().find("II");
    const bool has_hbar = (ii[3] * ii[6]).contains(Symbol::hbar);
    o.require(has_hbar, "quantum rows never produce hbar terms; the check would be vacuous");
    return o;
}

Outcome a6() {
    Outcome o;
    auto rep = verify_family_jacobi();
    for (const char* id : {"theorem-9-1.J1", "theorem-9-1.J2", "theorem-9-1.J3", "theorem-9-1.b-independent"}) {
        const Check* c = rep.find(id);
        o.require(c != nullptr && c->passed, std::string(id) + " failed");
    }
    o.require(rep.ok(), "failing: " + failed_ids(rep));
    if (o.passed) o.detail = "closed form matches in all components; b-independent";
    return o;
}

Outcome a7() {
    Outcome o = from_report(verify_family_specializations(), 15);
    const auto t4 = table4();
    for (const auto& fr : t4) {
        if (fr.name == "III_a=1") o.require(fr.params.b == ScalarPoly(-1), "III_a=1 must use b = -1");
    }
    const Vec3 x = symbolic_vector('x'), y = symbolic_vector('y'), z = symbolic_vector('z');
    const auto j = jacobi_op(x, y, z, antisymmetric_from_row(*table3().find("V"), OperatorExpr(Mode::quantum)));
    const OperatorExpr j3 = (det3(x, y, z) * ScalarPoly(2) * sym::s(-2)) *
                            commutator(gen::Ap(Mode::quantum), gen::Am(Mode::quantum));
    o.require(j[0].is_zero() && j[1].is_zero() && j[2] == j3, "V does not give (0, 0, det/p0 [Ah+, Ah-])");
    return o;
}

Outcome a8() {
    Outcome o;
    auto rep = verify_graded_lie(20240601, 120);
    o.require(rep.total() == 240, "expected 120 triples");
    o.require(rep.ok(), "failing: " + failed_ids(rep));
    std::mt19937_64 rng(8);
    int words = 0;
    for (; words < 200 && o.passed; ++words) {
        Word w = fixtures::random_word(rng, 8, words % 3 == 0 ? 4 : 2);
        const OperatorExpr lib = OperatorExpr::normalize(Mode::quantum, {{w, ScalarPoly(1)}});
        for (int k = 0; k < 3; ++k) {
            o.require(fixtures::normalize_random_strategy(w, rng) == lib,
                      "rewriting not confluent on " + word_str(w, Mode::quantum));
        }
    }
    if (o.passed) o.detail = "120 triples, " + std::to_string(words) + " words";
    return o;
}

Outcome a9() {
    Outcome o;
    auto r = derivation_ideal_residuals();
    o.require(r[0].is_zero(), "ddt(A+^2 - A-^2 - 2p) residual " + r[0].str());
    o.require(r[1].is_zero(), "ddt(A+ A- - w q) residual " + r[1].str());
    if (o.passed) o.detail = "both identities exact";
    return o;
}

Outcome a10() {
    Outcome o;
    const Proc first = run_cli("verify all --format json");
    const Proc second = run_cli("verify all --format json");
    o.require(first.status == 0, "verify all exited " + std::to_string(first.status));
    o.require(!first.out.empty() && first.out == second.out, "output differs between runs");
    try {
        auto j = nlohmann::ordered_json::parse(first.out);
        o.require(j.at("summary").at("failed") == 0, "report lists failures");
    } catch (const std::exception& e) {
        o.require(false, std::string("unparsable JSON: ") + e.what());
    }

    const Proc exported = run_cli("export table2");
    o.require(exported.status == 0, "export failed");
    auto tbl = nlohmann::ordered_json::parse(exported.out);
    tbl["rows"]["II"]["mu_23^1"] = "s^-2 * p";
    const auto path = std::filesystem::temp_directory_path() / "oplax_acceptance_mutated_table2.json";
    std::ofstream(path) << tbl.dump(2);
    const Proc mutated = run_cli("verify all --format json --table2 \"" + path.string() + "\"");
    std::filesystem::remove(path);
    o.require(mutated.status == 1, "mutated table gave exit " + std::to_string(mutated.status));
    if (o.passed) o.detail = "deterministic, exit 0; mutated table exit 1";
    return o;
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {"A1", "matrix Lax representation", 1.0, a1},
        {"A2", "operadic Lax equation for all eleven rows", 5.0, a2},
        {"A3", "dynamical table regenerated from initial algebras", 0.0, a3},
        {"A4", "classical Bianchi algebras satisfy Jacobi", 0.0, a4},
        {"A5", "six quantum counterparts are Lie algebras", 0.0, a5},
        {"A6", "closed-form Jacobi operator of the quantum family", 10.0, a6},
        {"A7", "closed form specialized to the five non-Lie types", 0.0, a7},
        {"A8", "graded Lie properties and rewriting confluence", 0.0, a8},
        {"A9", "derivation preserves the quasi-canonical relations", 0.0, a9},
        {"A10", "CLI determinism and exit status", 0.0, a10},
    };
    int failures = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.body();
        } catch (const std::exception& e) {
            o.passed = false;
            o.detail = std::string("exception: ") + e.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (o.passed && c.limit_seconds > 0 && secs >= c.limit_seconds) {
            o.passed = false;
            o.detail = "over time limit";
        }
        std::ostringstream t;
        t.precision(3);
        t << std::fixed << secs;
        std::cout << (o.passed ? "PASS " : "FAIL ") << c.id << " " << c.title << ": " << o.detail << " (" << t.str()
                  << " s)\n";
        failures += o.passed ? 0 : 1;
    }
    std::cout << (criteria.size() - failures) << "/" << criteria.size() << " criteria passed\n";
    return failures == 0 ? 0 : 1;
}
