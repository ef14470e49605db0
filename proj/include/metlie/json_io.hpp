#pragma once

#include "metlie/calculus.hpp"
#include "metlie/finite_model.hpp"
#include "metlie/metlie.hpp"
#include "metlie/primitivity.hpp"

#include <json.hpp>

namespace metlie {

using Json = nlohmann::ordered_json;

/// Integers within 64 bits become JSON numbers, larger ones strings.
Json to_json(Integer const &a);
Json to_json(Poly const &p);
Json to_json(QuotientParams const &q);
Json to_json(BasisExpansion const &b);

/// { "rows", "cols", "entries": [[poly, ...], ...] }
Json to_json(PolyMatrix const &a);

/// { "primitive": bool | "inconclusive", "method", "certificate", "refutation", ... }
Json to_json(PrimitivityVerdict const &v);

struct ReportJsonOptions
{
	bool timing = false; // elapsed_ms is null unless set, keeping output reproducible
};

/// { "model", "k", "expected_fiber", "fiber_min", "fiber_max", "uniform", "witness_target", "elapsed_ms" }
Json to_json(UniformityReport const &r, ReportJsonOptions const &options = {});

/// Serializes with two-space indentation and a trailing newline.
std::string dump(Json const &j);

} // namespace metlie
