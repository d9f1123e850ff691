#pragma once

#include <stdexcept>
#include <string>

#include <json.hpp>

#include "uin/ballgeo.hpp"
#include "uin/isomaps.hpp"
#include "uin/opmodel.hpp"
#include "uin/vecnorm.hpp"

namespace uin {

// Input-side failure (malformed JSON, bad schema, NaN/Inf payload). The CLI
// maps this to exit code 2.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Operator files: {"m": int, "F": [[[re,im],...],...], "tau": [re,im]}
nlohmann::json to_json(const TailOperator& a);
TailOperator operator_from_json(const nlohmann::json& j);

// Norm files: {"n": int, "family": "lp"|"kyfan"|"cnorm"|"cpnorm"|"maxc"|
// "scaled_linf", "p": number|"inf", "k": int, "c": [...], "S": [[...]],
// "gamma": number} with the family-specific field present.
nlohmann::json to_json(const SymmetricNorm& f);
SymmetricNorm norm_from_json(const nlohmann::json& j);

nlohmann::json to_json(const SingularSpectrum& s);

// {"N": int, "parts": [operator, ...]}
nlohmann::json to_json(const Decomposition& d);
Decomposition decomposition_from_json(const nlohmann::json& j);

// {"U": operator, "V": operator, "phi": "id"|"t"|"adj"|"adjt", "R0": operator}
nlohmann::json to_json(const IsometryForm& l);
IsometryForm isometry_from_json(const nlohmann::json& j);

nlohmann::json load_json_file(const std::string& path);
TailOperator load_operator_file(const std::string& path);
SymmetricNorm load_norm_file(const std::string& path);

}  // namespace uin
