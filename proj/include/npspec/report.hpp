#pragma once

#include <json.hpp>

#include "npspec/certifier.hpp"
#include "npspec/numrange.hpp"

namespace npspec {

using Json = nlohmann::ordered_json;

// Non-finite values become null.
Json number(double v);

Json certificate_json(const Certificate& cert);
Json synthesized_json(const SynthesizedCertificate& cert);
Json walk_json(const WalkTrace& walk, double t);
Json polygon_json(const NumRangePolygon& polygon, const InscribedRadius& radius);

}  // namespace npspec
