#include "metlie/json_io.hpp"

namespace metlie {

Json to_json(Integer const &a)
{
	if (a.fits_slong_p())
		return static_cast<std::int64_t>(a.get_si());
	return a.get_str();
}

Json to_json(Poly const &p)
{
	return format(p);
}

Json to_json(QuotientParams const &q)
{
	return Json{{"p", q.p}, {"q", q.q}, {"m", q.m}, {"n", q.n}};
}

Json to_json(BasisExpansion const &b)
{
	Json linear = Json::array();
	for (auto const &c : b.linear)
		linear.push_back(to_json(c));
	Json terms = Json::array();
	for (auto const &t : b.terms)
		terms.push_back({{"coefficient", to_json(t.coefficient)},
		                 {"word", t.word.indices},
		                 {"text", format(t.word)}});
	return Json{{"linear", linear}, {"terms", terms}};
}

Json to_json(PolyMatrix const &a)
{
	Json rows = Json::array();
	for (std::size_t r = 0; r < a.rows(); ++r)
	{
		Json row = Json::array();
		for (std::size_t c = 0; c < a.cols(); ++c)
			row.push_back(format(a(r, c)));
		rows.push_back(row);
	}
	return Json{{"rows", a.rows()}, {"cols", a.cols()}, {"entries", rows}};
}

namespace {

Json poly_list(std::span<Poly const> ps)
{
	Json out = Json::array();
	for (auto const &p : ps)
		out.push_back(format(p));
	return out;
}

Json refutation_json(Refutation const &r)
{
	Json j;
	j["kind"] = to_string(r.kind);
	switch (r.kind)
	{
	case Refutation::Kind::abelian:
		j["params"] = {{"minor_gcd", to_json(r.minor_gcd)}, {"modulus", r.modulus}};
		break;
	case Refutation::Kind::quotient:
		j["params"] = to_json(*r.params);
		break;
	case Refutation::Kind::evaluation:
		j["params"] = nullptr;
		break;
	}
	if (r.point)
		j["point"] = {{"prime", r.point->prime}, {"values", r.point->values}};
	else
		j["point"] = nullptr;
	return j;
}

} // namespace

Json to_json(PrimitivityVerdict const &v)
{
	Json j;
	switch (v.verdict)
	{
	case Verdict::primitive: j["primitive"] = true; break;
	case Verdict::not_primitive: j["primitive"] = false; break;
	case Verdict::inconclusive: j["primitive"] = "inconclusive"; break;
	}
	j["method"] = to_string(v.method);
	j["k"] = v.k;
	j["minors"] = poly_list(v.minors);
	if (v.certificate)
		j["certificate"] = {{"cofactors", poly_list(v.certificate->cofactors)},
		                    {"verified", v.certificate->verify(v.minors)}};
	else
		j["certificate"] = nullptr;
	j["refutation"] = v.refutation ? refutation_json(*v.refutation) : Json(nullptr);
	if (!v.note.empty())
		j["note"] = v.note;
	return j;
}

Json to_json(UniformityReport const &r, ReportJsonOptions const &options)
{
	Json j;
	if (r.kind == "abelian")
		j["model"] = {{"kind", "abelian"}, {"m", r.abelian_modulus}, {"n", r.n},
		              {"size", to_json(r.model_size)}};
	else
	{
		auto const &q = r.params.quotient;
		j["model"] = {{"kind", "matrix"}, {"p", q.p}, {"q", q.q}, {"m", q.m}, {"n", q.n},
		              {"variant", to_string(r.params.top_left)}, {"size", to_json(r.model_size)}};
	}
	j["k"] = r.k;
	j["method"] = to_string(r.method);
	j["expected_fiber"] = to_json(r.expected_fiber);
	j["fiber_min"] = r.fiber_min ? to_json(*r.fiber_min) : Json(nullptr);
	j["fiber_max"] = to_json(r.fiber_max);
	j["total"] = to_json(r.total);
	j["uniform"] = r.uniform;
	if (r.witness)
		j["witness_target"] = {{"encoding", to_json(r.witness->index)},
		                       {"elements", r.witness->elements},
		                       {"fiber", to_json(r.witness->fiber)}};
	else
		j["witness_target"] = nullptr;
	j["elapsed_ms"] = options.timing ? Json(r.elapsed_ms) : Json(nullptr);
	return j;
}

std::string dump(Json const &j)
{
	return j.dump(2) + "\n";
}

} // namespace metlie
