#include "metlie/consistency.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <fstream>
#include <sstream>

namespace metlie {

namespace {

std::string trim(std::string_view s)
{
	auto b = s.find_first_not_of(" \t\r");
	if (b == std::string_view::npos)
		return {};
	auto e = s.find_last_not_of(" \t\r");
	return std::string(s.substr(b, e - b + 1));
}

} // namespace

Catalog parse_catalog(std::istream &in)
{
	Catalog cat;
	std::string raw;
	int line = 0;
	while (std::getline(in, raw))
	{
		++line;
		auto text = trim(std::string_view(raw).substr(0, raw.find('#')));
		if (text.empty())
			continue;
		if (cat.n == 0)
		{
			if (text.rfind("n=", 0) != 0 && text.rfind("n =", 0) != 0)
				throw ParseError("catalog must start with a header 'n=<count>'", line, 1);
			auto value = trim(text.substr(text.find('=') + 1));
			try
			{
				std::size_t used = 0;
				cat.n = std::stoi(value, &used);
				if (used != value.size())
					throw std::invalid_argument(value);
			}
			catch (std::exception const &)
			{
				throw ParseError(fmt::format("bad generator count '{}'", value), line, 1);
			}
			if (cat.n < 1 || cat.n > kMaxVars)
				throw ParseError(fmt::format("generator count {} outside 1..{}", cat.n, kMaxVars),
				                 line, 1);
			continue;
		}
		CatalogEntry entry;
		entry.line = line;
		auto bar = text.find('|');
		if (bar != std::string::npos)
		{
			auto tag = trim(text.substr(bar + 1));
			if (tag == "primitive")
				entry.expected_primitive = true;
			else if (tag == "non-primitive" || tag == "not-primitive")
				entry.expected_primitive = false;
			else
				throw ParseError(fmt::format("unknown expectation '{}'", tag), line,
				                 static_cast<int>(bar) + 1);
			text = trim(text.substr(0, bar));
		}
		std::stringstream parts(text);
		std::string part;
		while (std::getline(parts, part, ';'))
		{
			auto t = trim(part);
			if (t.empty())
				throw ParseError("empty system element", line, 1);
			entry.elements.push_back(t);
		}
		if (entry.elements.empty())
			throw ParseError("empty system", line, 1);
		cat.entries.push_back(std::move(entry));
	}
	if (cat.n == 0)
		throw ParseError("catalog has no 'n=<count>' header", line, 1);
	return cat;
}

Catalog parse_catalog_file(std::string const &path)
{
	std::ifstream in(path);
	if (!in)
		throw DomainError(fmt::format("cannot open catalog '{}'", path));
	return parse_catalog(in);
}

ConsistencyConfig ConsistencyConfig::defaults()
{
	ConsistencyConfig c;
	for (unsigned p : {1u, 2u})
		for (unsigned q : {1u, 2u})
			for (unsigned m : {2u, 3u})
				c.grid.push_back({p, q, m, 1});
	c.abelian = {2, 3, 4};
	return c;
}

int ConsistencyResult::exit_code() const
{
	if (contradictions)
		return 1;
	if (skipped)
		return 4;
	return 0;
}

ConsistencyResult run_consistency(Catalog const &catalog, ConsistencyConfig const &config)
{
	ConsistencyResult result;
	result.n = catalog.n;
	for (auto const &entry : catalog.entries)
	{
		SystemOutcome out;
		out.entry = entry;
		for (auto const &text : entry.elements)
		{
			try
			{
				out.system.push_back(parse_element(text, catalog.n));
			}
			catch (ParseError const &e)
			{
				throw ParseError(fmt::format("catalog line {}: {}", entry.line, e.what()), entry.line,
				                 e.column());
			}
		}

		out.verdict = is_primitive(out.system, config.primitivity);
		auto rows = linear_parts(out.system);
		out.abelian_primitive = abelian_primitive(rows);

		auto abelian = config.abelian;
		if (out.verdict.refutation && out.verdict.refutation->kind == Refutation::Kind::abelian &&
		    out.verdict.refutation->modulus >= 2)
			abelian.push_back(out.verdict.refutation->modulus);
		out.models = order_grid(config.grid, abelian, catalog.n, config.top_left);

		for (auto const &model : out.models)
		{
			try
			{
				auto report = model.matrix
				                  ? uniformity_check(out.system, FiniteModel(*model.matrix),
				                                     config.uniformity)
				                  : uniformity_check_abelian(out.system, model.abelian_modulus,
				                                             config.uniformity);
				if (!report.uniform && !out.witness)
					out.witness = out.reports.size();
				out.reports.push_back(std::move(report));
			}
			catch (BudgetExceeded const &e)
			{
				out.skipped.push_back(model.describe() + ": " + e.what());
			}
		}
		// keep models parallel to reports
		std::vector<GridEntry> checked;
		for (auto const &r : out.reports)
			checked.push_back(r.kind == "abelian" ? GridEntry{std::nullopt, r.abelian_modulus}
			                                      : GridEntry{r.params, 0});
		out.models = std::move(checked);

		bool const primitive = out.verdict.verdict == Verdict::primitive;
		bool const refuted = out.verdict.verdict == Verdict::not_primitive;
		if (primitive)
			for (std::size_t i = 0; i < out.reports.size(); ++i)
				if (!out.reports[i].uniform)
					out.contradictions.push_back(
					    fmt::format("primitive but not uniform on {}", out.models[i].describe()));
		if (entry.expected_primitive && out.verdict.verdict != Verdict::inconclusive &&
		    *entry.expected_primitive != primitive)
			out.contradictions.push_back(fmt::format("expected {}, decided {}",
			                                         *entry.expected_primitive ? "primitive"
			                                                                   : "not-primitive",
			                                         to_string(out.verdict.verdict)));
		if (!out.abelian_primitive)
		{
			if (!refuted)
				out.contradictions.push_back("abelianization is not primitive but the verdict is " +
				                             to_string(out.verdict.verdict));
			bool abelian_witness = std::any_of(out.reports.begin(), out.reports.end(), [](auto const &r) {
				return r.kind == "abelian" && !r.uniform;
			});
			if (!abelian_witness)
				out.contradictions.push_back("abelianization is not primitive but no abelian model "
				                             "is non-uniform");
		}
		if (refuted && !out.witness)
			out.warnings.push_back("witness not found on the grid; a larger finite ring must have one");
		if (out.verdict.verdict == Verdict::inconclusive)
			out.warnings.push_back("primitivity inconclusive: " + out.verdict.note);
		for (auto const &s : out.skipped)
			out.warnings.push_back("skipped " + s);

		result.contradictions += out.contradictions.size();
		result.warnings += out.warnings.size();
		result.skipped += out.skipped.size();
		result.systems.push_back(std::move(out));
	}
	return result;
}

Json to_json(ConsistencyResult const &r, ReportJsonOptions const &options)
{
	Json systems = Json::array();
	for (auto const &s : r.systems)
	{
		Json models = Json::array();
		for (auto const &rep : s.reports)
			models.push_back(to_json(rep, options));
		Json j;
		j["line"] = s.entry.line;
		j["elements"] = s.entry.elements;
		j["expected"] = s.entry.expected_primitive ? Json(*s.entry.expected_primitive) : Json(nullptr);
		j["verdict"] = to_json(s.verdict);
		j["abelian_primitive"] = s.abelian_primitive;
		j["models"] = models;
		j["witness"] = s.witness ? Json(s.models[*s.witness].describe()) : Json(nullptr);
		j["skipped"] = s.skipped;
		j["contradictions"] = s.contradictions;
		j["warnings"] = s.warnings;
		systems.push_back(std::move(j));
	}
	Json out;
	out["n"] = r.n;
	out["systems"] = systems;
	out["contradictions"] = r.contradictions;
	out["warnings"] = r.warnings;
	out["skipped"] = r.skipped;
	out["exit_code"] = r.exit_code();
	return out;
}

} // namespace metlie
