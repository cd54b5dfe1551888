#include "cli.hpp"

#include "arcfree/affine.hpp"
#include "arcfree/arcjet.hpp"
#include "arcfree/fieldexpr.hpp"
#include "arcfree/fockspan.hpp"
#include "arcfree/version.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

namespace py = pybind11;
using namespace arcfree;

namespace {

FreeFieldContext context_for(std::string const &a, std::string const &b, std::optional<int> n_bg,
                             std::optional<int> n_bc)
{
	auto ca = infer_context(a), cb = infer_context(b);
	FreeFieldContext ctx{std::max(ca.n_bg, cb.n_bg), std::max(ca.n_bc, cb.n_bc)};
	if (n_bg)
		ctx.n_bg = *n_bg;
	if (n_bc)
		ctx.n_bc = *n_bc;
	return ctx;
}

std::string ope_json(std::string const &a, std::string const &b, std::optional<int> n_bg, std::optional<int> n_bc)
{
	OpeEngine e(context_for(a, b, n_bg, n_bc));
	auto r = e.ope(parse_field(a, e), parse_field(b, e));
	nlohmann::json j{{"poles", r.to_json()}, {"regular", r.regular()}};
	return j.dump();
}

std::string central_charge_text(std::string const &src, std::optional<int> n_bg, std::optional<int> n_bc)
{
	OpeEngine e(context_for(src, src, n_bg, n_bc));
	return to_string(central_charge(parse_field(src, e)));
}

std::string realization_json(std::string const &family, int n, int m, int r)
{
	return build_realization(parse_realization_family(family), n, m, r).to_json().dump();
}

std::vector<std::size_t> coset_dims(int n, int m, int r, int twice_max, int threads)
{
	auto p = build_realization(RealizationFamily::s2, n, m, r, threads);
	return subalgebra_graded_dims(p.coset.currents, twice_max, threads);
}

std::string certify_json(int n, int m, int r, int max_weight, bool with_jet, std::optional<std::size_t> drop,
                         int threads)
{
	CertifyOptions o;
	o.n = n;
	o.m = m;
	o.r = r;
	o.max_weight = max_weight;
	o.with_jet = with_jet;
	o.drop_relation = drop;
	o.threads = threads;
	return certify_classical_freeness(o).to_json().dump();
}

py::tuple run_cli(std::vector<std::string> const &args)
{
	std::ostringstream out, err;
	int code;
	{
		py::gil_scoped_release nogil;
		code = cli::run(args, out, err);
	}
	return py::make_tuple(code, out.str(), err.str());
}

} // namespace

PYBIND11_MODULE(_arcfree, m)
{
	m.doc() = "Exact free-field vertex superalgebra engine";
	py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
	py::register_exception<ResourceLimit>(m, "ResourceLimit", PyExc_RuntimeError);

	m.def("version", [] { return std::string(tool_version()); });
	m.def("ope_json", &ope_json, py::arg("a"), py::arg("b"), py::arg("n_bg") = py::none(),
	      py::arg("n_bc") = py::none());
	m.def("central_charge", &central_charge_text, py::arg("field"), py::arg("n_bg") = py::none(),
	      py::arg("n_bc") = py::none());
	m.def("realization_json", &realization_json, py::arg("family"), py::arg("n"), py::arg("m"), py::arg("r"));
	m.def("coset_dims", &coset_dims, py::arg("n"), py::arg("m"), py::arg("r"), py::arg("twice_max"),
	      py::arg("threads") = 1, py::call_guard<py::gil_scoped_release>());
	m.def(
	    "jet_invariant_dims",
	    [](int n, int mm, int r, int twice_max, int threads) {
		    return jet_invariant_dims(n, mm, r, twice_max, threads).dims;
	    },
	    py::arg("n"), py::arg("m"), py::arg("r"), py::arg("twice_max"), py::arg("threads") = 1,
	    py::call_guard<py::gil_scoped_release>());
	m.def("certify_json", &certify_json, py::arg("n"), py::arg("m"), py::arg("r"), py::arg("max_weight"),
	      py::arg("with_jet") = false, py::arg("drop_relation") = py::none(), py::arg("threads") = 1,
	      py::call_guard<py::gil_scoped_release>());
	m.def("run_cli", &run_cli, py::arg("args"));
}
