#pragma once

#include "metlie/finite_model.hpp"
#include "metlie/json_io.hpp"
#include "metlie/primitivity.hpp"

#include <istream>
#include <optional>
#include <string>
#include <vector>

namespace metlie {

/// One line of a catalog: elements separated by ';', optionally followed by
/// '| primitive' or '| non-primitive'.
struct CatalogEntry
{
	std::vector<std::string> elements;
	std::optional<bool> expected_primitive;
	int line = 0;
};

struct Catalog
{
	int n = 0;
	std::vector<CatalogEntry> entries;
};

/// Format: header line `n=<count>`, `#` starts a comment, blank lines ignored.
Catalog parse_catalog(std::istream &in);
Catalog parse_catalog_file(std::string const &path);

struct ConsistencyConfig
{
	std::vector<QuotientParams> grid;      // n filled in from the catalog
	std::vector<std::uint64_t> abelian;    // abelian moduli checked for every system
	TopLeft top_left = TopLeft::linear_only;
	UniformityOptions uniformity;
	PrimitivityOptions primitivity = PrimitivityOptions::defaults();
	ReportJsonOptions json;

	/// Grid {1,2}×{1,2}×{2,3} and abelian moduli 2, 3, 4.
	static ConsistencyConfig defaults();
};

struct SystemOutcome
{
	CatalogEntry entry;
	std::vector<MElement> system;
	PrimitivityVerdict verdict;
	bool abelian_primitive = false;
	std::vector<GridEntry> models;         // checked models, in grid order
	std::vector<UniformityReport> reports; // parallel to models
	std::vector<std::string> skipped;
	std::optional<std::size_t> witness;    // index into reports
	std::vector<std::string> contradictions;
	std::vector<std::string> warnings;
};

struct ConsistencyResult
{
	int n = 0;
	std::vector<SystemOutcome> systems;
	std::size_t contradictions = 0;
	std::size_t warnings = 0;
	std::size_t skipped = 0;

	/// 1 on any contradiction, else 4 if a model was skipped for budget, else 0.
	int exit_code() const;
};

/// Decides primitivity and checks uniformity on every model for each system.
///
/// Contradictions: a primitive system that is not uniform somewhere; a
/// verdict differing from the catalog's expectation; an abelian-imprimitive
/// system judged primitive or lacking an abelian witness. A non-primitive
/// system without a witness on the grid is only a warning.
ConsistencyResult run_consistency(Catalog const &catalog, ConsistencyConfig const &config);

Json to_json(ConsistencyResult const &r, ReportJsonOptions const &options = {});

} // namespace metlie
