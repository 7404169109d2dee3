#pragma once

#include <json.hpp>

#include "odsl/lang/ast.hpp"

namespace odsl {

nlohmann::json value_to_json(const Value& v);
nlohmann::json statement_to_json(const Statement& s);
nlohmann::json program_to_json(const Program& p);

}  // namespace odsl
