#pragma once

#include <iosfwd>

#include <nlohmann/json.hpp>

#include "intpts/elliptic.hpp"
#include "intpts/genus0.hpp"
#include "intpts/sweeps.hpp"
#include "intpts/weil.hpp"

// Line-delimited JSON records. Points are strings "[a:b:c]", Weil values are
// "p^m", an exact rational, or "infinity", and levels use the "2:1,inf:4"
// syntax accepted by parse_levels. Keys are emitted in sorted order so output
// is byte-stable.

namespace intpts {

using Json = nlohmann::json;

Json record(const WeilValue& v);
Json record(const LevelVector& levels);
Json record(const PlaceSet& places);
Json record(const WeilReport& r);
Json record(const Classification& c);
Json record(const EmittedPoint& e);
Json record(const CloudPoint& p);
Json record(const CurveDiagnostic& d);
Json record(const FiberOutcome& f);
Json record(const DegreeVerdict& v);
Json record(const TorsionCertificate& c);

/// Writes one record per line.
void write_record(std::ostream& out, const Json& j);

}  // namespace intpts
