#pragma once

#include "bridgeland/helix.hpp"
#include "bridgeland/regions.hpp"

#include <json.hpp>

#include <stdexcept>
#include <string>
#include <string_view>

namespace bridgeland {

/// Malformed user input: literals, JSON documents, flags.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Parses an object literal:
///   "O", "O(p,q)", "O(E)", "O(-E-2F)", "O(2E+3F)" (BlpP2), "T" (O_E(E), BlpP2),
///   "(r,(c1a,c1b),ch2)" with rational entries, each optionally followed by "[k]".
/// On BlpP2 "O(p,q)" means O(pE + qF). Throws ParseError.
ExcObject parse_object(Surface s, std::string_view text);

/// "p,q" or "(p,q)" with rational entries. Throws ParseError.
NSClass parse_ns_class(std::string_view text);

nlohmann::json to_json(const ChernCharacter& v);
ChernCharacter chern_from_json(const nlohmann::json& j);

nlohmann::json to_json(const ExcCollection& c);
/// {surface, objects: [{label, rank, c1, ch2, shift}]}. Throws ParseError.
ExcCollection collection_from_json(const nlohmann::json& j);

nlohmann::json to_json(const QuiverData& q);
nlohmann::json to_json(const CoverageReport& r);

}  // namespace bridgeland
