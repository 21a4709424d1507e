#pragma once

#include <string>

#include "json.hpp"

#include "bargain/adnb2.hpp"
#include "bargain/dg2.hpp"
#include "bargain/game.hpp"
#include "bargain/oracle.hpp"

namespace bargain {

using Json = nlohmann::json;

// Rationals travel as canonical strings ("p/q" in lowest terms, plain
// decimal for integers); integral JSON numbers are accepted on input.
Rational rational_from_json(const Json& j, const std::string& where);
Json rational_to_json(const Rational& r);

Game2 game_from_json(const Json& j);
Dg2Instance dg2_from_json(const Json& j);
Adnb2Instance adnb2_from_json(const Json& j);

Json face_to_json(const Face& f);
Face face_from_json(const Json& j);

Json solution_to_json(const Solution& s);
Solution solution_from_json(const Json& j);

Json report_to_json(const VerificationReport& rep);
Json flows_to_json(const Dg2Instance& inst, const Dg2Flows& flows);
Json equilibrium_to_json(const Adnb2Instance& inst, const Adnb2Equilibrium& eq);
Json oracle_to_json(const OracleResult& res);
Json sweep_to_json(const SweepResult& sweep);

/// Parses a file into JSON; wraps stream and parse failures in InputError.
Json load_json_file(const std::string& path);

}  // namespace bargain
