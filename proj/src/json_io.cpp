#include "uin/json_io.hpp"

#include <cmath>
#include <fstream>
#include <limits>

namespace uin {

namespace {

nlohmann::json complex_to_json(cdouble z) { return nlohmann::json::array({z.real(), z.imag()}); }

cdouble complex_from_json(const nlohmann::json& j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
        throw ParseError("complex value must be a [re, im] pair");
    const double re = j[0].get<double>();
    const double im = j[1].get<double>();
    if (!std::isfinite(re) || !std::isfinite(im)) throw ParseError("complex value is not finite");
    return {re, im};
}

double finite_number(const nlohmann::json& j, const char* what) {
    if (!j.is_number()) throw ParseError(std::string(what) + " must be a number");
    const double v = j.get<double>();
    if (!std::isfinite(v)) throw ParseError(std::string(what) + " is not finite");
    return v;
}

std::vector<double> weight_vector(const nlohmann::json& j, const char* what) {
    if (!j.is_array() || j.empty()) throw ParseError(std::string(what) + " must be a nonempty array");
    std::vector<double> c;
    for (const auto& v : j) c.push_back(finite_number(v, what));
    return c;
}

}  // namespace

nlohmann::json to_json(const TailOperator& a) {
    const std::size_t m = a.block_size();
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t i = 0; i < m; ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (std::size_t j = 0; j < m; ++j) row.push_back(complex_to_json(a.block()(i, j)));
        rows.push_back(std::move(row));
    }
    return {{"m", m}, {"F", std::move(rows)}, {"tau", complex_to_json(a.tail())}};
}

TailOperator operator_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("m") || !j.contains("F") || !j.contains("tau"))
        throw ParseError("operator needs fields m, F, tau");
    if (!j["m"].is_number_unsigned()) throw ParseError("m must be a nonnegative integer");
    const std::size_t m = j["m"].get<std::size_t>();
    if (m > 4096) throw ParseError("block size is implausibly large");
    const auto& rows = j["F"];
    if (!rows.is_array() || rows.size() != m) throw ParseError("F must be an m x m matrix");
    Matrix f(m, m);
    for (std::size_t i = 0; i < m; ++i) {
        if (!rows[i].is_array() || rows[i].size() != m) throw ParseError("F must be an m x m matrix");
        for (std::size_t k = 0; k < m; ++k) f(i, k) = complex_from_json(rows[i][k]);
    }
    return TailOperator(std::move(f), complex_from_json(j["tau"]));
}

nlohmann::json to_json(const SymmetricNorm& f) {
    nlohmann::json j{{"n", f.arity()}};
    switch (f.family()) {
        case SymmetricNorm::Family::Lp:
            j["family"] = "lp";
            if (std::isinf(f.p()))
                j["p"] = "inf";
            else
                j["p"] = f.p();
            break;
        case SymmetricNorm::Family::KyFan:
            j["family"] = "kyfan";
            j["k"] = f.k();
            break;
        case SymmetricNorm::Family::CNorm:
            j["family"] = "cnorm";
            j["c"] = f.c();
            break;
        case SymmetricNorm::Family::CPNorm:
            j["family"] = "cpnorm";
            j["c"] = f.c();
            j["p"] = f.p();
            break;
        case SymmetricNorm::Family::MaxC:
            j["family"] = "maxc";
            j["S"] = f.cset().vectors();
            break;
        case SymmetricNorm::Family::ScaledLInf:
            j["family"] = "scaled_linf";
            j["gamma"] = f.gamma();
            break;
    }
    return j;
}

SymmetricNorm norm_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("family")) throw ParseError("norm needs a family field");
    const std::string family = j.value("family", "");

    auto arity = [&]() -> std::size_t {
        if (!j.contains("n") || !j["n"].is_number_unsigned() || j["n"].get<std::size_t>() == 0)
            throw ParseError("norm needs a positive integer n");
        return j["n"].get<std::size_t>();
    };
    auto p_value = [&]() -> double {
        if (!j.contains("p")) throw ParseError("family needs p");
        if (j["p"].is_string()) {
            const std::string s = j["p"].get<std::string>();
            if (s == "inf" || s == "Inf" || s == "infinity")
                return std::numeric_limits<double>::infinity();
            throw ParseError("p must be a number or \"inf\"");
        }
        return finite_number(j["p"], "p");
    };

    try {
        if (family == "lp") return SymmetricNorm::lp(arity(), p_value());
        if (family == "kyfan") {
            if (!j.contains("k") || !j["k"].is_number_unsigned()) throw ParseError("kyfan needs k");
            return SymmetricNorm::ky_fan(arity(), j["k"].get<std::size_t>());
        }
        if (family == "cnorm") {
            if (!j.contains("c")) throw ParseError("cnorm needs c");
            return SymmetricNorm::c_norm(weight_vector(j["c"], "c"));
        }
        if (family == "cpnorm") {
            if (!j.contains("c")) throw ParseError("cpnorm needs c");
            return SymmetricNorm::cp_norm(weight_vector(j["c"], "c"), p_value());
        }
        if (family == "maxc") {
            if (!j.contains("S") || !j["S"].is_array() || j["S"].empty())
                throw ParseError("maxc needs a nonempty S");
            std::vector<std::vector<double>> s;
            for (const auto& row : j["S"]) s.push_back(weight_vector(row, "S member"));
            return SymmetricNorm::max_c(CSet(std::move(s)));
        }
        if (family == "scaled_linf") {
            if (!j.contains("gamma")) throw ParseError("scaled_linf needs gamma");
            return SymmetricNorm::scaled_linf(arity(), finite_number(j["gamma"], "gamma"));
        }
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
    throw ParseError("unknown norm family: " + family);
}

nlohmann::json to_json(const SingularSpectrum& s) {
    return {{"values", s.values}, {"tail_value", s.tail_value}};
}

nlohmann::json to_json(const Decomposition& d) {
    nlohmann::json parts = nlohmann::json::array();
    for (const auto& p : d.parts) parts.push_back(to_json(p));
    return {{"N", d.parts.size()}, {"parts", std::move(parts)}};
}

Decomposition decomposition_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("parts") || !j["parts"].is_array())
        throw ParseError("decomposition needs a parts array");
    Decomposition d;
    for (const auto& p : j["parts"]) d.parts.push_back(operator_from_json(p));
    if (j.contains("N") && j["N"].get<std::size_t>() != d.parts.size())
        throw ParseError("decomposition N does not match the parts array");
    return d;
}

nlohmann::json to_json(const IsometryForm& l) {
    return {{"U", to_json(l.u())},
            {"V", to_json(l.v())},
            {"phi", to_string(l.phi())},
            {"R0", to_json(l.r0())}};
}

IsometryForm isometry_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("U") || !j.contains("V") || !j.contains("phi") ||
        !j.contains("R0"))
        throw ParseError("isometry form needs U, V, phi, R0");
    const std::string phi = j["phi"].get<std::string>();
    Phi p;
    if (phi == "id")
        p = Phi::Id;
    else if (phi == "t")
        p = Phi::Transpose;
    else if (phi == "adj")
        p = Phi::Adjoint;
    else if (phi == "adjt")
        p = Phi::AdjointTranspose;
    else
        throw ParseError("phi must be one of id, t, adj, adjt");
    try {
        return IsometryForm(operator_from_json(j["U"]), operator_from_json(j["V"]), p,
                            operator_from_json(j["R0"]));
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
}

nlohmann::json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open file: " + path);
    try {
        return nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError("malformed JSON in " + path + ": " + e.what());
    }
}

TailOperator load_operator_file(const std::string& path) {
    try {
        return operator_from_json(load_json_file(path));
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
}

SymmetricNorm load_norm_file(const std::string& path) {
    return norm_from_json(load_json_file(path));
}

}  // namespace uin
