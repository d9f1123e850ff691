#include "uin/certificate.hpp"

#include <cmath>

namespace uin {

const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::Holds: return "holds";
        case Verdict::Equality: return "equality";
        case Verdict::Violated: return "violated";
    }
    return "?";
}

Certificate check_le(std::string statement, double lhs, double rhs, double tol, double eq_tol,
                     nlohmann::json witness) {
    Certificate c;
    c.statement = std::move(statement);
    c.lhs = lhs;
    c.rhs = rhs;
    c.tol = tol;
    c.witness = std::move(witness);
    if (lhs <= rhs + tol)
        c.verdict = std::abs(lhs - rhs) <= eq_tol ? Verdict::Equality : Verdict::Holds;
    else
        c.verdict = Verdict::Violated;
    return c;
}

Certificate check_eq(std::string statement, double lhs, double rhs, double tol,
                     nlohmann::json witness) {
    Certificate c;
    c.statement = std::move(statement);
    c.lhs = lhs;
    c.rhs = rhs;
    c.tol = tol;
    c.witness = std::move(witness);
    c.verdict = std::abs(lhs - rhs) <= tol ? Verdict::Equality : Verdict::Violated;
    return c;
}

Certificate check_expected(std::string statement, Certificate raw, bool expect_violation) {
    Certificate c = std::move(raw);
    c.witness["raw_verdict"] = to_string(c.verdict);
    c.witness["expected_violation"] = expect_violation;
    const bool matched = expect_violation == (c.verdict == Verdict::Violated);
    c.statement = std::move(statement);
    c.verdict = matched ? Verdict::Holds : Verdict::Violated;
    return c;
}

bool all_hold(std::span<const Certificate> certs) {
    for (const auto& c : certs)
        if (c.violated()) return false;
    return true;
}

nlohmann::json to_json(const Certificate& c) {
    return {{"statement", c.statement}, {"lhs", c.lhs},         {"rhs", c.rhs},
            {"tol", c.tol},             {"verdict", to_string(c.verdict)}, {"witness", c.witness}};
}

}  // namespace uin
