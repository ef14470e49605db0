#include "cli_app.hpp"

#include "metlie/consistency.hpp"
#include "metlie/json_io.hpp"
#include "metlie/random.hpp"

#include <CLI11.hpp>
#include <fmt/format.h>
#include <fmt/ostream.h>

#include <algorithm>
#include <cstdlib>
#include <sstream>

namespace metlie::cli {

namespace {

constexpr int kExitInput = 2;
constexpr int kExitInconclusive = 3;
constexpr int kExitBudget = 4;

struct Config
{
	int n = 0; // 0: inferred from the input
	bool json = false;
	std::uint64_t budget = 0; // 0: default or METLIE_BUDGET
	std::string grid = "1:1:2,1:1:3,1:2:2,1:2:3,2:1:2,2:1:3,2:2:2,2:2:3";
	std::string abelian = "2,3,4";
	std::uint64_t seed = 1;
	bool timing = false;
	int threads = 0;
	std::string variant = "linear";
	std::string method = "auto";
	std::size_t groebner_size = 10000;
	unsigned groebner_degree = 40;
};

struct Output
{
	std::ostream &out;
	Config const &cfg;

	void json(Json const &j) const { out << dump(j); }
	template <typename... Args>
	void line(fmt::format_string<Args...> f, Args &&...args) const
	{
		out << fmt::format(f, std::forward<Args>(args)...) << '\n';
	}
};

std::vector<std::string> split(std::string const &text, char sep)
{
	std::vector<std::string> parts;
	std::stringstream ss(text);
	std::string part;
	while (std::getline(ss, part, sep))
	{
		auto b = part.find_first_not_of(" \t");
		auto e = part.find_last_not_of(" \t");
		if (b != std::string::npos)
			parts.push_back(part.substr(b, e - b + 1));
	}
	return parts;
}

std::uint64_t parse_u64(std::string const &s, std::string const &what)
{
	char *end = nullptr;
	auto v = std::strtoull(s.c_str(), &end, 10);
	if (s.empty() || *end != '\0')
		throw DomainError(fmt::format("bad {} '{}'", what, s));
	return v;
}

std::vector<QuotientParams> parse_grid(std::string const &text)
{
	std::vector<QuotientParams> grid;
	for (auto const &item : split(text, ','))
	{
		auto f = split(item, ':');
		if (f.size() != 3)
			throw DomainError(fmt::format("grid entry '{}' is not p:q:m", item));
		QuotientParams q{static_cast<unsigned>(parse_u64(f[0], "p")),
		                 static_cast<unsigned>(parse_u64(f[1], "q")),
		                 static_cast<unsigned>(parse_u64(f[2], "m")), 1};
		q.validate();
		grid.push_back(q);
	}
	return grid;
}

std::vector<std::uint64_t> parse_moduli(std::string const &text)
{
	std::vector<std::uint64_t> out;
	for (auto const &item : split(text, ','))
	{
		auto m = parse_u64(item, "modulus");
		if (m < 2)
			throw DomainError(fmt::format("abelian modulus {} is below 2", m));
		out.push_back(m);
	}
	return out;
}

TopLeft parse_variant(std::string const &v)
{
	if (v == "linear")
		return TopLeft::linear_only;
	if (v == "full")
		return TopLeft::full_ring;
	throw DomainError(fmt::format("unknown variant '{}' (linear or full)", v));
}

UniformityMethod parse_method(std::string const &m)
{
	if (m == "auto")
		return UniformityMethod::automatic;
	if (m == "exhaustive")
		return UniformityMethod::exhaustive;
	if (m == "census")
		return UniformityMethod::census;
	if (m == "serial")
		return UniformityMethod::serial;
	throw DomainError(fmt::format("unknown method '{}'", m));
}

UniformityOptions uniformity_options(Config const &cfg)
{
	auto o = UniformityOptions::from_environment();
	if (cfg.budget)
		o.budget = cfg.budget;
	o.method = parse_method(cfg.method);
	o.threads = cfg.threads;
	return o;
}

PrimitivityOptions primitivity_options(Config const &cfg)
{
	auto o = PrimitivityOptions::defaults();
	o.groebner.max_basis_size = cfg.groebner_size;
	o.groebner.max_degree = cfg.groebner_degree;
	return o;
}

/// Elements given as separate arguments and/or separated by ';'.
struct Input
{
	std::vector<std::string> texts;
	std::vector<MElement> elements;
	int n = 0;
};

Input read_input(std::vector<std::string> const &args, Config const &cfg)
{
	Input in;
	for (auto const &a : args)
		for (auto const &t : split(a, ';'))
			in.texts.push_back(t);
	if (in.texts.empty())
		throw DomainError("no elements given");
	in.n = cfg.n;
	if (in.n == 0)
	{
		for (auto const &t : in.texts)
			in.n = std::max(in.n, parse_lie(t, kMaxVars)->max_generator());
		in.n = std::max(in.n, 1);
	}
	if (in.n < 1 || in.n > kMaxVars)
		throw DomainError(fmt::format("generator count must lie in 1..{}", kMaxVars));
	for (auto const &t : in.texts)
		in.elements.push_back(parse_element(t, in.n));
	return in;
}

// ---------------------------------------------------------------------------
// Subcommands

int cmd_normalize(Input const &in, Output const &o)
{
	if (o.cfg.json)
	{
		Json items = Json::array();
		for (std::size_t i = 0; i < in.elements.size(); ++i)
			items.push_back({{"input", in.texts[i]},
			                 {"normal", format(in.elements[i])},
			                 {"basis", to_json(to_basis(in.elements[i]))}});
		o.json({{"n", in.n}, {"elements", items}});
	}
	else
		for (auto const &g : in.elements)
			o.line("{}", format(g));
	return 0;
}

int cmd_derive(Input const &in, Output const &o)
{
	Json items = Json::array();
	for (std::size_t e = 0; e < in.elements.size(); ++e)
	{
		auto const &g = in.elements[e];
		Json ds = Json::array();
		if (!o.cfg.json)
			o.line("g = {}", format(g));
		for (int i = 0; i < in.n; ++i)
		{
			ds.push_back(format(g.deriv[i]));
			if (!o.cfg.json)
				o.line("  d{} = {}", i + 1, format(g.deriv[i]));
		}
		items.push_back({{"input", in.texts[e]}, {"normal", format(g)}, {"derivatives", ds}});
	}
	if (o.cfg.json)
		o.json({{"n", in.n}, {"elements", items}});
	return 0;
}

int cmd_jacobian(Input const &in, Output const &o)
{
	auto a = jacobi_matrix(in.elements);
	if (o.cfg.json)
		o.json(to_json(a));
	else
		for (std::size_t r = 0; r < a.rows(); ++r)
		{
			std::vector<std::string> row;
			for (std::size_t c = 0; c < a.cols(); ++c)
				row.push_back(format(a(r, c)));
			o.line("[ {} ]", fmt::join(row, ", "));
		}
	return 0;
}

int verdict_exit(Verdict v)
{
	switch (v)
	{
	case Verdict::primitive: return 0;
	case Verdict::not_primitive: return 1;
	case Verdict::inconclusive: return kExitInconclusive;
	}
	return kExitInconclusive;
}

void print_verdict(PrimitivityVerdict const &v, Output const &o)
{
	o.line("{} ({})", to_string(v.verdict), to_string(v.method));
	std::vector<std::string> minors;
	for (auto const &m : v.minors)
		minors.push_back(format(m));
	o.line("minors: {}", fmt::join(minors, ", "));
	if (v.certificate)
	{
		std::vector<std::string> terms;
		for (std::size_t i = 0; i < v.minors.size(); ++i)
			if (!v.certificate->cofactors[i].is_zero())
				terms.push_back(fmt::format("({})*({})", format(v.certificate->cofactors[i]),
				                            format(v.minors[i])));
		o.line("certificate: 1 = {}", fmt::join(terms, " + "));
	}
	if (v.refutation)
	{
		auto const &r = *v.refutation;
		switch (r.kind)
		{
		case Refutation::Kind::abelian:
			o.line("refutation: gcd of linear minors is {}, non-uniform on Z_{}", r.minor_gcd.get_str(),
			       r.modulus);
			break;
		case Refutation::Kind::quotient:
			o.line("refutation: minors generate a proper ideal of Z_{{{},{},{}}}[X]", r.params->p,
			       r.params->q, r.params->m);
			break;
		case Refutation::Kind::evaluation:
			o.line("refutation: minors share a zero over a prime field");
			break;
		}
		if (r.point)
			o.line("vanishing point over F_{}: ({})", r.point->prime, fmt::join(r.point->values, ", "));
	}
	if (!v.note.empty())
		o.line("note: {}", v.note);
}

int cmd_primitive(Input const &in, Output const &o)
{
	auto v = is_primitive(in.elements, primitivity_options(o.cfg));
	if (o.cfg.json)
		o.json(to_json(v));
	else
		print_verdict(v, o);
	return verdict_exit(v.verdict);
}

void print_report(UniformityReport const &r, Output const &o)
{
	std::string model = r.kind == "abelian"
	                        ? fmt::format("Z_{}", r.abelian_modulus)
	                        : fmt::format("M(p={},q={},m={},n={},{})", r.params.quotient.p,
	                                      r.params.quotient.q, r.params.quotient.m, r.n,
	                                      to_string(r.params.top_left));
	o.line("model {} |R| = {}, k = {}, method {}", model, r.model_size.get_str(), r.k,
	       to_string(r.method));
	o.line("expected fiber {}, min {}, max {}", r.expected_fiber.get_str(),
	       r.fiber_min ? r.fiber_min->get_str() : "unknown", r.fiber_max.get_str());
	o.line("{}", r.uniform ? "uniform" : "not uniform");
	if (r.witness)
		o.line("witness target ({}) with fiber {}", fmt::join(r.witness->elements, ", "),
		       r.witness->fiber.get_str());
	if (o.cfg.timing)
		o.line("elapsed {:.1f} ms", r.elapsed_ms);
}

struct UniformArgs
{
	unsigned p = 1, q = 1, m = 2;
	bool abelian = false;
};

int cmd_uniform(Input const &in, UniformArgs const &a, Output const &o)
{
	auto options = uniformity_options(o.cfg);
	UniformityReport r;
	if (a.abelian)
		r = uniformity_check_abelian(in.elements, a.m, options);
	else
	{
		QuotientParams q{a.p, a.q, a.m, in.n};
		q.validate();
		r = uniformity_check(in.elements, FiniteModel({q, parse_variant(o.cfg.variant)}), options);
	}
	if (o.cfg.json)
		o.json(to_json(r, {o.cfg.timing}));
	else
		print_report(r, o);
	return r.uniform ? 0 : 1;
}

int cmd_witness(Input const &in, Output const &o)
{
	auto grid = order_grid(parse_grid(o.cfg.grid), parse_moduli(o.cfg.abelian), in.n,
	                       parse_variant(o.cfg.variant));
	auto res = witness_search(in.elements, grid, uniformity_options(o.cfg));
	if (o.cfg.json)
	{
		Json passed = Json::array();
		for (auto const &r : res.passed)
			passed.push_back(to_json(r, {o.cfg.timing}));
		o.json({{"witness", res.witness ? to_json(*res.witness, {o.cfg.timing}) : Json(nullptr)},
		        {"passed", passed},
		        {"skipped", res.skipped}});
	}
	else
	{
		for (auto const &s : res.skipped)
			o.line("skipped {}", s);
		if (res.witness)
		{
			o.line("witness found");
			print_report(*res.witness, o);
		}
		else
			o.line("no witness on {} checked models", res.passed.size());
	}
	return res.witness ? 1 : 0;
}

int cmd_auto(Input const &in, Output const &o)
{
	if (static_cast<int>(in.elements.size()) != in.n)
		throw DomainError(fmt::format("auto needs exactly n = {} elements, got {}", in.n,
		                              in.elements.size()));
	auto a = jacobi_matrix(in.elements);
	auto d = det(a);
	bool yes = is_automorphism_system(in.elements);
	if (o.cfg.json)
		o.json({{"automorphism", yes}, {"det", format(d)}, {"jacobian", to_json(a)}});
	else
	{
		o.line("det = {}", format(d));
		o.line("{}", yes ? "automorphism" : "not an automorphism");
	}
	return yes ? 0 : 1;
}

int cmd_consistency(std::string const &path, Output const &o)
{
	auto catalog = parse_catalog_file(path);
	auto config = ConsistencyConfig::defaults();
	config.grid = parse_grid(o.cfg.grid);
	config.abelian = parse_moduli(o.cfg.abelian);
	config.top_left = parse_variant(o.cfg.variant);
	config.uniformity = uniformity_options(o.cfg);
	config.primitivity = primitivity_options(o.cfg);
	config.json.timing = o.cfg.timing;
	auto result = run_consistency(catalog, config);
	if (o.cfg.json)
		o.json(to_json(result, config.json));
	else
	{
		for (auto const &s : result.systems)
		{
			std::string status = !s.contradictions.empty() ? "CONTRADICTION"
			                     : !s.warnings.empty()     ? "warning"
			                                               : "ok";
			std::string detail;
			if (s.verdict.verdict == Verdict::primitive)
				detail = fmt::format("uniform on all {} models", s.reports.size());
			else if (s.witness)
				detail = "witness on " + s.models[*s.witness].describe();
			else
				detail = "no witness";
			o.line("{:<14} {:<40} {} ({}), {}", status, fmt::format("{}", fmt::join(s.entry.elements, "; ")),
			       to_string(s.verdict.verdict), to_string(s.verdict.method), detail);
			for (auto const &c : s.contradictions)
				o.line("    contradiction: {}", c);
			for (auto const &w : s.warnings)
				o.line("    warning: {}", w);
		}
		o.line("{} systems, {} contradictions, {} warnings", result.systems.size(),
		       result.contradictions, result.warnings);
	}
	return result.exit_code();
}

int cmd_selfcheck(int count, Output const &o)
{
	RandomInputs rnd(o.cfg.seed);
	int const n = o.cfg.n ? o.cfg.n : 3;
	struct Check
	{
		std::string name;
		int failures = 0;
	};
	std::vector<Check> checks{{"fundamental identity"}, {"basis round trip"}, {"jacobi identity"},
	                          {"metabelian law"}, {"closed form"}};
	FiniteModel model({{1, 1, 2, std::min(n, 2)}, TopLeft::linear_only});
	for (int t = 0; t < count; ++t)
	{
		auto a = rnd.element(n), b = rnd.element(n), c = rnd.element(n), d = rnd.element(n);
		if (!a.satisfies_fundamental_identity())
			++checks[0].failures;
		if (from_basis(to_basis(a), n) != a)
			++checks[1].failures;
		if (!(bracket(bracket(a, b), c) + bracket(bracket(b, c), a) + bracket(bracket(c, a), b)).is_zero())
			++checks[2].failures;
		if (!bracket(bracket(a, b), bracket(c, d)).is_zero())
			++checks[3].failures;
		auto g = rnd.element(model.n());
		std::vector<ModelElement> r;
		for (int i = 0; i < model.n(); ++i)
			r.push_back(model.random_element(rnd.engine()));
		if (eval_closed_form(g, r, model) != eval_element(g, std::span<ModelElement const>(r), model))
			++checks[4].failures;
	}
	bool ok = true;
	Json items = Json::array();
	for (auto const &c : checks)
	{
		ok = ok && c.failures == 0;
		items.push_back({{"check", c.name}, {"cases", count}, {"failures", c.failures}});
		if (!o.cfg.json)
			o.line("{} {} ({} cases, {} failures)", c.failures ? "FAIL" : "PASS", c.name, count,
			       c.failures);
	}
	if (o.cfg.json)
		o.json({{"seed", o.cfg.seed}, {"n", n}, {"checks", items}, {"ok", ok}});
	return ok ? 0 : 1;
}

} // namespace

int run_cli(std::vector<std::string> args, std::ostream &out, std::ostream &err)
{
	CLI::App app{"Exact computations in the free metabelian Lie ring", "metlie"};
	app.require_subcommand(1);
	app.fallthrough();
	app.allow_extras();
	Config cfg;
	app.add_option("--n", cfg.n, "Generator count (default: largest index used)")
	    ->check(CLI::Range(1, kMaxVars));
	app.add_flag("--json", cfg.json, "Machine-readable output");
	app.add_option("--budget", cfg.budget, "Maximum enumeration size (default 2^28 or METLIE_BUDGET)")
	    ->check(CLI::PositiveNumber);
	app.add_option("--grid", cfg.grid, "Matrix models as p:q:m,...");
	app.add_option("--abelian", cfg.abelian, "Abelian moduli as m,...");
	app.add_option("--seed", cfg.seed, "Seed for randomized checks");
	app.add_flag("--timing", cfg.timing, "Report elapsed times");
	app.add_option("--threads", cfg.threads, "OpenMP threads (0 = default)");
	app.add_option("--variant", cfg.variant, "Top-left carrier: linear or full");
	app.add_option("--method", cfg.method, "Uniformity method: auto, exhaustive, census, serial");
	app.add_option("--groebner-size", cfg.groebner_size, "Gröbner basis size cap");
	app.add_option("--groebner-degree", cfg.groebner_degree, "Gröbner degree cap");

	// Elements are collected as extras: CLI11 would otherwise split "[a,b]" as a list.
	std::vector<CLI::App *> element_commands;
	auto add_exprs = [&](CLI::App *sub) {
		sub->allow_extras();
		sub->positionals_at_end(false);
		element_commands.push_back(sub);
	};
	auto *normalize = app.add_subcommand("normalize", "Print elements in the right-normed basis");
	add_exprs(normalize);
	auto *derive = app.add_subcommand("derive", "Print the partial derivatives");
	add_exprs(derive);
	auto *jacobian = app.add_subcommand("jacobian", "Print the Jacobi matrix of a system");
	add_exprs(jacobian);
	auto *primitive = app.add_subcommand("primitive", "Decide primitivity of a system");
	add_exprs(primitive);
	UniformArgs ua;
	auto *uniform = app.add_subcommand("uniform", "Check uniform distribution on one finite model");
	add_exprs(uniform);
	uniform->add_option("--p", ua.p, "Exponent offset p")->check(CLI::PositiveNumber);
	uniform->add_option("--q", ua.q, "Exponent period q")->check(CLI::PositiveNumber);
	uniform->add_option("--m", ua.m, "Coefficient modulus m")->check(CLI::Range(2u, 65536u));
	uniform->add_flag("--abelian-model", ua.abelian, "Use the abelian ring Z_m instead");
	auto *witness = app.add_subcommand("witness", "Search the grid for a non-uniform model");
	add_exprs(witness);
	auto *automorphism = app.add_subcommand("auto", "Test whether n elements define an automorphism");
	add_exprs(automorphism);
	std::string catalog;
	auto *consistency = app.add_subcommand("consistency", "Cross-check primitivity and uniformity");
	consistency->add_option("catalog", catalog, "Catalog file")->required();
	int count = 200;
	auto *selfcheck = app.add_subcommand("selfcheck", "Randomized identity checks");
	selfcheck->add_option("--count", count, "Random cases per check")->check(CLI::PositiveNumber);

	std::reverse(args.begin(), args.end());
	try
	{
		app.parse(args);
	}
	catch (CLI::CallForHelp const &e)
	{
		out << app.help();
		return 0;
	}
	catch (CLI::ParseError const &e)
	{
		err << "error: " << e.what() << '\n';
		return kExitInput;
	}

	Output o{out, cfg};
	try
	{
		auto exprs = app.remaining(true);
		bool takes_elements = std::any_of(element_commands.begin(), element_commands.end(),
		                                  [](CLI::App *sub) { return sub->parsed(); });
		if (!takes_elements && !exprs.empty())
			throw DomainError(fmt::format("unexpected argument '{}'", exprs.front()));
		if (*consistency)
			return cmd_consistency(catalog, o);
		if (*selfcheck)
			return cmd_selfcheck(count, o);
		auto in = read_input(exprs, cfg);
		if (*normalize)
			return cmd_normalize(in, o);
		if (*derive)
			return cmd_derive(in, o);
		if (*jacobian)
			return cmd_jacobian(in, o);
		if (*primitive)
			return cmd_primitive(in, o);
		if (*uniform)
			return cmd_uniform(in, ua, o);
		if (*witness)
			return cmd_witness(in, o);
		if (*automorphism)
			return cmd_auto(in, o);
	}
	catch (BudgetExceeded const &e)
	{
		err << "budget exceeded: " << e.what() << '\n';
		return kExitBudget;
	}
	catch (Error const &e)
	{
		err << "error: " << e.what() << '\n';
		return kExitInput;
	}
	return kExitInput;
}

} // namespace metlie::cli
