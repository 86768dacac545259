#pragma once

#include "opalg/cstar.hpp"
#include "opalg/sequences.hpp"
#include "opalg/types.hpp"

#include <nlohmann/json.hpp>

#include <string>

namespace opalg {

using Json = nlohmann::ordered_json;

/// Matrix wire format: {"rows": r, "cols": c, "data": [[re, im], ...]} with
/// data in row-major order.
Json matrix_to_json(const ComplexMatrix& m);
ComplexMatrix matrix_from_json(const Json& j);

/// Sequence wire format: {"depth": n, "samples": [[re, im], ...],
/// "limit": [re, im] | null}.
Json sequence_to_json(const SequenceFunction& f);
SequenceFunction sequence_from_json(const Json& j);

Json element_to_json(const BimoduleElement& e);
BimoduleElement element_from_json(const Json& j);

Json coefficients_to_json(const CoefficientTuple& ts);
CoefficientTuple coefficients_from_json(const Json& j);

/// Segment programs reference operands as "in:<i>" or "step:<j>".
Json program_to_json(const SegmentProgram& prog);
SegmentProgram program_from_json(const Json& j);

std::string operand_ref_to_string(const OperandRef& ref);
OperandRef operand_ref_from_string(const std::string& s);

Json load_json_file(const std::string& path);
void save_json_file(const std::string& path, const Json& j);

}  // namespace opalg
