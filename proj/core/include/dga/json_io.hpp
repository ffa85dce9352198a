#pragma once

#include <string>

#include <json.hpp>

#include "dga/cohomology.hpp"
#include "dga/constructions.hpp"
#include "dga/deformation.hpp"

namespace dga {

using Json = nlohmann::ordered_json;

/// Accepts an integer, a "p/q" string, [num, den], or
/// [re_num, re_den, im_num, im_den]; each component integer or string.
GaussianRational rational_from_json(const Json& j);
Json rational_to_json(const GaussianRational& c);

/// Term list [ [ [i1..ik], coeff ] ... ] with indices into a basis of the
/// given ambient dimension.
Multivector multivector_from_json(const Json& j, int ambient);
Json multivector_to_json(const Multivector& a);

Matrix matrix_from_json(const Json& j);
Json matrix_to_json(const Matrix& m);

/// { "dim", "basis"?, "brackets": [ [i, j, [ [k, coeff] ... ] ] ... ],
///   "J"?: matrix, "real"?: bool }
LieAlgebraSpec spec_from_json(const Json& j);
Json spec_to_json(const LieAlgebraSpec& spec);

/// Algebra-spec fields plus "omega" (2-form term list), "gamma" (array of
/// matrices) and optional "metric".
SymplecticConnectionData connection_from_json(const Json& j);
Json connection_to_json(const SymplecticConnectionData& data);

/// Reads and parses a file; throws ParseError naming the file and the
/// parser's byte position on malformed input.
Json load_json_file(const std::string& path);

Json validation_report_to_json(const ValidationReport& rep);
Json context_dump(const GcaContext& ctx);
Json cohomology_to_json(const CohomologyBasis& h, const std::vector<std::string>& names);
Json compatible_report_to_json(const CompatiblePairReport& rep,
                               const std::vector<std::string>& names);
Json series_report_to_json(const SeriesReport& rep);
Json pipeline_report_to_json(const PipelineReport& rep);
Json center_report_to_json(const CenterReport& rep);
Json diagnostic_to_json(const QuasiIsoDiagnostic& d);

}  // namespace dga
