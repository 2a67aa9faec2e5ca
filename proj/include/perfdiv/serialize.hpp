#ifndef PERFDIV_SERIALIZE_HPP
#define PERFDIV_SERIALIZE_HPP

#include "perfdiv/decompose.hpp"
#include "perfdiv/detect.hpp"
#include "perfdiv/divide_color.hpp"
#include "perfdiv/graph.hpp"

#include <json.hpp>

namespace perfdiv {

// Vertex sets serialize as sorted index arrays, colorings as arrays.
nlohmann::json to_json(VertexSet s);
nlohmann::json to_json(const Witness& w);
nlohmann::json to_json(const PartitionCertificate& p);
nlohmann::json to_json(const ColoringCertificate& c);
nlohmann::json to_json(const ModularTree& t);

} // namespace perfdiv

#endif
