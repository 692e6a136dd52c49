#pragma once

#include <nlohmann/json.hpp>

#include "umbral/curve.hpp"
#include "umbral/delta_op.hpp"
#include "umbral/pairing.hpp"
#include "umbral/poly.hpp"
#include "umbral/power_series.hpp"
#include "umbral/seq.hpp"
#include "umbral/tri_matrix.hpp"
#include "umbral/verify.hpp"
#include "umbral/wronskian.hpp"

namespace umbral {

// JSON encodings used repo-wide.  All exact scalars are lowest-terms
// strings "p" or "p/q"; every encoder/decoder pair round-trips.
//
//   Poly          {"coeffs": ["0","-1/2","1"]}            ascending degree
//   PowerSeries   {"order": N, "coeffs": [...]}
//   Seq           {"level": n, "entries": [...]}
//   LowerTriMatrix{"size": n+1, "rows": [["1"],["1","1"],...]}
//   DeltaOp       {"level": n, "coeffs": [...]} or {"named": "...", "level": n}
//   Curve         {"level": n, "components": [Poly...]}
//   WronskianForm {"level": n, "columns": [Poly...]}
//   PairingReport {"value": "p/q", "constant": true}
//   VerificationReport
//                 {"trials":., "violations":., "worst_margin":., "seed":., "tol":.}
//
// Decoders throw DomainError(ParseError) on malformed input.

nlohmann::json to_json(const Poly& p);
Poly poly_from_json(const nlohmann::json& j);

nlohmann::json to_json(const PowerSeries& f);
PowerSeries series_from_json(const nlohmann::json& j);

nlohmann::json to_json(const Seq& s);
Seq seq_from_json(const nlohmann::json& j);

nlohmann::json to_json(const LowerTriMatrix& m);
LowerTriMatrix matrix_from_json(const nlohmann::json& j);

nlohmann::json to_json(const DeltaOp& d);
DeltaOp delta_from_json(const nlohmann::json& j);

nlohmann::json to_json(const Curve& c);
Curve curve_from_json(const nlohmann::json& j);

nlohmann::json to_json(const WronskianForm& w);
WronskianForm wronskian_from_json(const nlohmann::json& j);

nlohmann::json to_json(const PairingReport& r);
nlohmann::json to_json(const VerificationReport& r);

}  // namespace umbral
