#pragma once

#include <span>
#include <string>

#include <json.hpp>

namespace uin {

enum class Verdict { Holds, Equality, Violated };

const char* to_string(Verdict v);

// Machine-checkable record of one verified statement instance. lhs/rhs are
// the two sides as computed, tol the acceptance slack; the verdict is always
// derived from them by the check_* helpers so the three stay consistent.
struct Certificate {
    std::string statement;
    double lhs = 0.0;
    double rhs = 0.0;
    double tol = 0.0;
    Verdict verdict = Verdict::Holds;
    nlohmann::json witness = nlohmann::json::object();

    bool violated() const { return verdict == Verdict::Violated; }
};

// lhs <= rhs + tol; flags Equality when |lhs - rhs| <= eq_tol
Certificate check_le(std::string statement, double lhs, double rhs, double tol, double eq_tol,
                     nlohmann::json witness = nlohmann::json::object());

// |lhs - rhs| <= tol
Certificate check_eq(std::string statement, double lhs, double rhs, double tol,
                     nlohmann::json witness = nlohmann::json::object());

// Expresses "this instance was expected to fail the inequality and did".
// holds iff the raw verdict matches the expectation.
Certificate check_expected(std::string statement, Certificate raw, bool expect_violation);

bool all_hold(std::span<const Certificate> certs);

nlohmann::json to_json(const Certificate& c);

}  // namespace uin
