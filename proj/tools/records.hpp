#pragma once

#include <string>

#include <json.hpp>

#include "lorentzvol/approx_real.hpp"
#include "lorentzvol/coxeter.hpp"
#include "lorentzvol/gram.hpp"
#include "lorentzvol/rational.hpp"
#include "lorentzvol/volume.hpp"

namespace lorentzvol::cli {

using Json = nlohmann::ordered_json;

/// {"numerator", "denominator", "numerator_factors", "denominator_factors", "factored"}
Json rational_record(const ExactRational& q);

/// Exact part of a symbolic result.
Json expression_record(const VolumeExpression& expr);

/// {"value", "abs_error", "precision_bits"}; value carries as many digits
/// as the requested precision supports, the error is rounded up.
Json decimal_record(const ApproxReal& x, long precision_bits);

Json lattice_record(const GramMatrix& g);

/// Node count, degree sequence, exact signature and rank of the Coxeter Gram matrix.
Json diagram_record(const CoxeterDiagram& d);

std::string signature_string(const Signature& s);

/// Human-readable rendering of any record produced by the CLI.
std::string render_text(const Json& record);

}  // namespace lorentzvol::cli
