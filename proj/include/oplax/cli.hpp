#pragma once

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "oplax/jacobi.hpp"
#include "oplax/sampling.hpp"

namespace oplax::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string format = "text";
    std::string hbar = "symbolic";
    std::string table1_file;
    std::string table2_file;
    std::string table3_file;
    std::string suite;
    std::string type;
    std::string compute_what;
    std::string x, y, z;
    bool symbolic = false;
    std::string export_what;
};

inline nlohmann::ordered_json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open " + path);
    return nlohmann::ordered_json::parse(in);
}

inline BianchiData load_data(const Options& o) {
    BianchiData data;
    if (!o.table1_file.empty()) data.t1 = table1_from_json(read_json_file(o.table1_file));
    if (!o.table2_file.empty()) data.t2 = table_from_json(read_json_file(o.table2_file));
    if (!o.table3_file.empty()) data.t3 = table_from_json(read_json_file(o.table3_file));
    if (data.t2.mode != Mode::classical) throw UsageError("dynamical table must be classical");
    if (data.t3.mode != Mode::quantum) throw UsageError("quantum table must be quantum");
    return data;
}

inline std::string require_type(const std::string& in) {
    auto t = canonical_type_name(in);
    if (!t) throw UsageError("unknown Bianchi type '" + in + "'");
    return *t;
}

inline Vec3 parse_vec(const std::string& text, const char* flag) {
    std::vector<std::string> parts;
    std::stringstream ss(text);
    for (std::string item; std::getline(ss, item, ',');) parts.push_back(item);
    if (parts.size() != 3) throw UsageError(std::string(flag) + " expects three comma-separated components");
    Vec3 v;
    try {
        for (std::size_t k = 0; k < 3; ++k) v[k] = parse_scalar(parts[k]);
    } catch (const std::exception& e) {
        throw UsageError(std::string(flag) + ": " + e.what());
    }
    return v;
}

inline std::map<Symbol, ScalarPoly> hbar_bindings(const Options& o) {
    if (o.hbar == "0") return {{Symbol::hbar, 0}};
    return {};
}

// With --hbar 0, residuals are reported after setting hbar to zero.
inline VerificationReport apply_hbar(const VerificationReport& rep, const Options& o) {
    if (o.hbar != "0") return rep;
    return rep.with_residuals_substituted(hbar_bindings(o));
}

inline VerificationReport run_suite(const std::string& suite, const Options& o, const BianchiData& data) {
    VerificationReport rep;
    auto operadic = [&](const std::string& type) {
        const Row9<OperatorExpr>* row = data.t2.find(type);
        if (row == nullptr) {
            rep.add_condition("operadic-lax." + type, "operadic Lax equation dmu/dt = [M, mu]", false,
                              "row missing from dynamical table", "missing row");
            return;
        }
        rep.merge(verify_operadic_lax(antisymmetric_from_row(*row, OperatorExpr(Mode::classical)),
                                      "operadic-lax." + type));
    };
    const bool all = suite == "all";
    if (all || suite == "matrix-lax") rep.merge(verify_matrix_lax());
    if (all || suite == "operadic-lax") {
        if (!o.type.empty() && !all) {
            operadic(require_type(o.type));
        } else {
            for (const auto& t : bianchi_type_names()) operadic(t);
        }
    }
    if (all || suite == "tables") rep.merge(check_tables_consistency(data));
    if (all || suite == "jacobi-classical") rep.merge(verify_classical_lie_types(data));
    if (all || suite == "jacobi-quantum") rep.merge(verify_quantum_lie_types(data));
    if (all || suite == "theorem-9-1") {
        rep.merge(verify_family_jacobi());
        rep.merge(verify_family_specializations(data));
    }
    if (all || suite == "graded-lie") rep.merge(verify_graded_lie(20240601, 25));
    return apply_hbar(rep, o);
}

inline void emit_report(const VerificationReport& rep, const Options& o, std::ostream& out) {
    if (o.format == "json") {
        out << rep.to_json().dump(2) << '\n';
    } else {
        rep.write_text(out);
    }
}

inline int run_compute(const Options& o, const BianchiData& data, std::ostream& out) {
    if (o.compute_what != "jacobi") throw UsageError("unknown compute target '" + o.compute_what + "'");
    if (o.type.empty()) throw UsageError("compute jacobi requires --type");
    const std::string type = require_type(o.type);
    Vec3 x, y, z;
    if (o.symbolic) {
        x = symbolic_vector('x');
        y = symbolic_vector('y');
        z = symbolic_vector('z');
    } else {
        if (o.x.empty() || o.y.empty() || o.z.empty()) throw UsageError("compute jacobi requires --x --y --z or --symbolic");
        x = parse_vec(o.x, "--x");
        y = parse_vec(o.y, "--y");
        z = parse_vec(o.z, "--z");
    }
    const Row9<OperatorExpr>* row = data.t3.find(type);
    if (row == nullptr) throw UsageError("quantum table has no row '" + type + "'");
    OpVec3 j = subst(jacobi_op(x, y, z, antisymmetric_from_row(*row, OperatorExpr(Mode::quantum))), hbar_bindings(o));
    if (o.format == "json") {
        nlohmann::ordered_json res;
        res["type"] = type;
        for (std::size_t k = 0; k < 3; ++k) res["J" + std::to_string(k + 1)] = j[k].str();
        out << res.dump(2) << '\n';
    } else {
        for (std::size_t k = 0; k < 3; ++k) out << "J" << k + 1 << " = " << j[k].str() << '\n';
    }
    return kExitOk;
}

inline int run_export(const Options& o, const BianchiData& data, std::ostream& out) {
    if (o.export_what == "table1") {
        out << table1_to_json(data.t1).dump(2) << '\n';
    } else if (o.export_what == "table2") {
        out << table_to_json(data.t2).dump(2) << '\n';
    } else if (o.export_what == "table3") {
        out << table_to_json(data.t3).dump(2) << '\n';
    } else {
        throw UsageError("unknown export target '" + o.export_what + "'");
    }
    return kExitOk;
}

/// Entry point behind the `oplax` binary. args excludes the program name.
///
/// Exit status: 0 all checks pass, 1 some check fails, 2 usage error.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"oplax: exact verification of operadic Lax representations of the harmonic oscillator", "oplax"};
    app.require_subcommand(1);
    auto add_common = [&o](CLI::App* sub) {
        sub->add_option("--format", o.format, "output format")->check(CLI::IsMember({"text", "json"}));
        sub->add_option("--hbar", o.hbar, "treat hbar symbolically or set it to 0")
            ->check(CLI::IsMember({"symbolic", "0"}));
        sub->add_option("--table1", o.table1_file, "replace the Bianchi table by a JSON export");
        sub->add_option("--table2", o.table2_file, "replace the dynamical table by a JSON export");
        sub->add_option("--table3", o.table3_file, "replace the quantum table by a JSON export");
    };

    auto* verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("suite", o.suite, "suite name")
        ->required()
        ->check(CLI::IsMember({"all", "matrix-lax", "operadic-lax", "tables", "jacobi-classical", "jacobi-quantum",
                               "theorem-9-1", "graded-lie"}));
    verify->add_option("--type", o.type, "Bianchi type (operadic-lax only)");
    add_common(verify);

    auto* compute = app.add_subcommand("compute", "compute a quantity");
    compute->add_option("what", o.compute_what, "jacobi")->required()->check(CLI::IsMember({"jacobi"}));
    compute->add_option("--type", o.type, "Bianchi type");
    compute->add_option("--x", o.x, "components a,b,c");
    compute->add_option("--y", o.y, "components a,b,c");
    compute->add_option("--z", o.z, "components a,b,c");
    compute->add_flag("--symbolic", o.symbolic, "use symbolic x, y, z");
    add_common(compute);

    auto* exp = app.add_subcommand("export", "print a table as JSON");
    exp->add_option("table", o.export_what, "table1 | table2 | table3")
        ->required()
        ->check(CLI::IsMember({"table1", "table2", "table3"}));
    add_common(exp);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "oplax: " << e.what() << "\n" << app.help();
        return kExitUsage;
    }

    try {
        const BianchiData data = load_data(o);
        if (*verify) {
            if (!o.type.empty() && o.suite != "operadic-lax") throw UsageError("--type only applies to operadic-lax");
            VerificationReport rep = run_suite(o.suite, o, data);
            emit_report(rep, o, out);
            return rep.ok() ? kExitOk : kExitFail;
        }
        if (*compute) return run_compute(o, data, out);
        return run_export(o, data, out);
    } catch (const UsageError& e) {
        err << "oplax: " << e.what() << '\n';
        return kExitUsage;
    } catch (const ParseError& e) {
        err << "oplax: " << e.what() << '\n';
        return kExitUsage;
    } catch (const nlohmann::json::exception& e) {
        err << "oplax: bad table file: " << e.what() << '\n';
        return kExitUsage;
    }
}

}  // namespace oplax::cli
