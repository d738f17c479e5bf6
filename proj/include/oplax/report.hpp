#pragma once

#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

#include <nlohmann/json.hpp>

#include "oplax/weyl.hpp"

namespace oplax {

struct Check {
    std::string id;
    std::string paper_ref;
    bool passed = false;
    std::optional<std::string> residual;
    std::string detail;
    std::optional<OperatorExpr> residual_expr;  // absent for yes/no checks
};

/// Ordered list of named checks. Status is derived from the residual:
/// a check passes iff it has no residual or the residual renders as "0".
class VerificationReport {
public:
    void add_residual(std::string id, std::string ref, const OperatorExpr& residual, std::string detail = {}) {
        push({std::move(id), std::move(ref), residual.is_zero(), residual.str(), std::move(detail), residual});
    }

    /// A yes/no check; a failure carries `mismatch` as its residual.
    void add_condition(std::string id, std::string ref, bool ok, std::string detail = {},
                       std::string mismatch = "mismatch") {
        std::optional<std::string> res;
        if (!ok) res = std::move(mismatch);
        push({std::move(id), std::move(ref), ok, std::move(res), std::move(detail), std::nullopt});
    }

    void add(Check c) { push(std::move(c)); }

    void merge(const VerificationReport& other) {
        for (const auto& c : other.checks_) push(c);
    }

    /// Copy with a scalar substitution applied to every expression residual.
    [[nodiscard]] VerificationReport with_residuals_substituted(const std::map<Symbol, ScalarPoly>& bindings) const {
        VerificationReport out;
        for (const Check& c : checks_) {
            if (c.residual_expr) {
                out.add_residual(c.id, c.paper_ref, c.residual_expr->subst(bindings), c.detail);
            } else {
                out.push(c);
            }
        }
        return out;
    }

    [[nodiscard]] const std::vector<Check>& checks() const { return checks_; }
    [[nodiscard]] std::size_t total() const { return checks_.size(); }
    [[nodiscard]] std::size_t passed() const {
        std::size_t n = 0;
        for (const auto& c : checks_) n += c.passed ? 1 : 0;
        return n;
    }
    [[nodiscard]] std::size_t failed() const { return total() - passed(); }
    [[nodiscard]] bool ok() const { return failed() == 0; }

    [[nodiscard]] const Check* find(const std::string& id) const {
        for (const auto& c : checks_) {
            if (c.id == id) return &c;
        }
        return nullptr;
    }

    [[nodiscard]] nlohmann::ordered_json to_json() const {
        nlohmann::ordered_json checks = nlohmann::ordered_json::array();
        for (const auto& c : checks_) {
            nlohmann::ordered_json j;
            j["id"] = c.id;
            j["paper_ref"] = c.paper_ref;
            j["status"] = c.passed ? "pass" : "fail";
            j["residual"] = c.residual ? nlohmann::ordered_json(*c.residual) : nlohmann::ordered_json(nullptr);
            j["detail"] = c.detail;
            checks.push_back(std::move(j));
        }
        nlohmann::ordered_json out;
        out["checks"] = std::move(checks);
        out["summary"] = {{"total", total()}, {"passed", passed()}, {"failed", failed()}};
        return out;
    }

    void write_text(std::ostream& os) const {
        for (const auto& c : checks_) {
            os << (c.passed ? "[PASS] " : "[FAIL] ") << c.id << " — " << c.paper_ref << '\n';
            if (!c.passed && c.residual) os << "       residual: " << *c.residual << '\n';
        }
        os << "summary: " << passed() << "/" << total() << " passed, " << failed() << " failed\n";
    }

private:
    void push(Check c) {
        if (!ids_.insert(c.id).second) throw std::logic_error("duplicate check id: " + c.id);
        checks_.push_back(std::move(c));
    }

    std::vector<Check> checks_;
    std::unordered_set<std::string> ids_;
};

}  // namespace oplax
