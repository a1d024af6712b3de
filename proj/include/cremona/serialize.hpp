#pragma once

#include <json.hpp>
#include <string>

#include "cremona/classifier.hpp"

namespace cremona {

// Key order is insertion order, so dumps are byte-stable.
using Json = nlohmann::ordered_json;

// Rationals travel as strings ("3", "-2/5"). Every *_from_json throws
// ParseError on malformed input and DomainError when the data is well formed
// but mathematically invalid (for instance a map that fails verification).
Json to_json(const Rational& r);
Rational rational_from_json(const Json& j);

Json to_json(const ProjPoint& p);
ProjPoint point_from_json(const Json& j);
Json line_to_json(const ProjLine& l);
ProjLine line_from_json(const Json& j);

// {"degree": n, "terms": [[i, j, k, "c"], ...]} in increasing monomial order.
Json to_json(const HomPoly& f);
HomPoly poly_from_json(const Json& j);

// {"d": n, "lines": [["a","b","c"], ...]}
Json to_json(const LineArrangement& arr);
LineArrangement arrangement_from_json(const Json& j);

Json to_json(const BasePoint& b);
BasePoint base_point_from_json(const Json& j);

// Parsing re-runs the CremonaMap constructor and therefore all its checks.
Json to_json(const CremonaMap& m);
CremonaMap map_from_json(const Json& j);

Json to_json(const Certificate& c);
Certificate certificate_from_json(const Json& j);

Json to_json(const ReplayReport& r);
Json to_json(const AdjointSequence& a);
Json to_json(const PlurigenusReport& p);
Json to_json(const KodairaBound& k);
Json to_json(const NonContractWitness& w);
Json to_json(const SearchResult& s);
Json to_json(const Classification& c);

// Reads a file as JSON; ParseError when it cannot be opened or parsed.
Json read_json_file(const std::string& path);

}  // namespace cremona
