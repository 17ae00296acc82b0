#ifndef WIDTHCALC_JSON_IO_HPP
#define WIDTHCALC_JSON_IO_HPP

#include "widthcalc/complexity.hpp"
#include "widthcalc/moves.hpp"
#include "widthcalc/search.hpp"

#include <json.hpp>

#include <stdexcept>
#include <string>
#include <vector>

namespace widthcalc {

/// Malformed document: wrong types, missing fields, unknown tags.
class SchemaError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

nlohmann::json to_json(const Surface& s);
nlohmann::json to_json(const TangleSummary& t);
nlohmann::json to_json(const Complex& c);
nlohmann::json to_json(const DiscData& d);
nlohmann::json to_json(const Move& m);
nlohmann::json to_json(const ComplexityVector& v);
nlohmann::json to_json(const TraceStep& s);
std::string hash_hex(std::uint64_t h);

Surface surface_from_json(const nlohmann::json& j);
TangleSummary tangle_from_json(const nlohmann::json& j);
Complex complex_from_json(const nlohmann::json& j);
DiscData disc_from_json(const nlohmann::json& j);
Move move_from_json(const nlohmann::json& j);
/// The optional "moves" array of an instance document.
std::vector<Move> moves_from_json(const nlohmann::json& doc);

/// Parses text; nlohmann parse errors and schema errors both surface as
/// SchemaError.
nlohmann::json parse_document(const std::string& text);

}  // namespace widthcalc

#endif
