#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "ppfast/abstract.hpp"
#include "ppfast/diagram.hpp"
#include "ppfast/excision.hpp"
#include "ppfast/family.hpp"
#include "ppfast/projective.hpp"

namespace ppfast {

using Json = nlohmann::ordered_json;

// All parsers throw ParseError with the offending path.
Json to_json(const PLMap& f);
PLMap plmap_from_json(const Json& j);

// A list of maps; entries may carry a "name".
Json to_json(const Family& x);
// Accepts a list of maps or a fixture document; `which` picks a family of
// a fixture document (default: its "default").
Family family_from_json(const Json& j, const std::string& which = "");

Json to_json(const DynamicalDiagram& d);
// Accepts a diagram object or a fixture document with a "diagram".
DynamicalDiagram diagram_from_json(const Json& j);

Json to_json(const Blueprint& b);
// Accepts a blueprint object or a fixture document with a "blueprint" or
// "witness".
Blueprint blueprint_from_json(const Json& j);

Json to_json(const PingPongWitness& w);
PingPongWitness witness_from_json(const Json& j);

Json to_json(const Interval& i);
Json to_json(const DiagramIso& iso);
Json to_json(const ExtraneousCertificate& c, const FastSystem& sys);

Json parse_json_text(const std::string& text);
// Reads a file, or "-" for standard input.
Json read_json_file(const std::string& path);

}  // namespace ppfast
