#include "cli.hpp"

#include "arcfree/affine.hpp"
#include "arcfree/arcjet.hpp"
#include "arcfree/fieldexpr.hpp"
#include "arcfree/fockspan.hpp"
#include "arcfree/version.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

namespace arcfree::cli {

namespace {

using nlohmann::json;

struct RunConfig {
	std::string command;
	std::string family = "s2";
	int n = 1, m = 1, r = 1;
	std::string max_weight = "2"; // conformal weight, may be "p/2"
	int dmax = 0, delta_max = 0, dmax_cap = 0;
	int threads = 1;
	std::string format = "json";
	std::string output;
	std::string report_dir;
	bool with_jet = false;
	std::optional<int> drop_relation;
	std::optional<int> corrupt;
	std::string part = "both";
	std::string which = "coset";
	std::string algebra = "coset";
	std::string expr_a, expr_b;
	int n_bg = -1, n_bc = -1;

	int twice_max = 0;
	ResourceCaps caps;

	json echo() const
	{
		json j{{"command", command}, {"threads", threads}, {"format", format}};
		auto params = [&] {
			j["family"] = family;
			j["n"] = n;
			j["m"] = m;
			j["r"] = r;
		};
		if (command == "ope")
		{
			j["a"] = expr_a;
			j["b"] = expr_b;
			j["n_bg"] = n_bg;
			j["n_bc"] = n_bc;
			return j;
		}
		params();
		if (command == "verify-ope" || command == "coset-check")
		{
			j["part"] = part;
			if (corrupt)
				j["corrupt"] = *corrupt;
		}
		if (command == "sugawara")
			j["which"] = which;
		if (command == "char")
			j["algebra"] = algebra;
		if (command == "char" || command == "zhu" || command == "arc-hilbert" || command == "invariants" ||
		    command == "certify")
			j["max_weight"] = max_weight;
		if (command == "zhu" || command == "arc-hilbert" || command == "certify")
		{
			j["dmax"] = dmax;
			j["delta_max"] = delta_max;
		}
		if (command == "certify")
		{
			j["dmax_cap"] = dmax_cap;
			j["with_jet"] = with_jet;
			if (drop_relation)
				j["drop_relation"] = *drop_relation;
		}
		j["caps"] = {{"max_monomials", caps.max_monomials},
		             {"max_weight", to_string(make_rational(caps.max_twice_weight, 2))},
		             {"max_relation_degree", caps.max_relation_degree}};
		return j;
	}

	std::string params_key() const
	{
		if (command == "ope")
			return "ope_" + hex64(stable_hash(expr_a + "|" + expr_b));
		std::string s = family + "_n" + std::to_string(n) + "_m" + std::to_string(m) + "_r" + std::to_string(r);
		if (command == "char" || command == "zhu" || command == "arc-hilbert" || command == "invariants" ||
		    command == "certify")
			s += "_w" + std::to_string(twice_max) + "h";
		if (command == "sugawara")
			s += "_" + which;
		if (command == "char")
			s += "_" + algebra;
		if (drop_relation)
			s += "_drop" + std::to_string(*drop_relation);
		if (corrupt)
			s += "_corrupt" + std::to_string(*corrupt);
		return s;
	}
};

struct Outcome {
	json result;
	bool ok = true;
	std::string text;
	std::string csv; // empty for commands without a table
};

class UsageError : public std::invalid_argument {
public:
	using std::invalid_argument::invalid_argument;
};

std::string weight_text(int twice)
{
	return to_string(make_rational(twice, 2));
}

json dims_rows(std::vector<std::size_t> const &by_twice)
{
	json rows = json::array();
	for (std::size_t w = 0; w < by_twice.size(); ++w)
		rows.push_back({{"weight", weight_text(static_cast<int>(w))}, {"dim", by_twice[w]}});
	return rows;
}

std::string dims_csv(std::vector<std::size_t> const &by_twice)
{
	std::string s = "weight,dim\n";
	for (std::size_t w = 0; w < by_twice.size(); ++w)
		s += weight_text(static_cast<int>(w)) + "," + std::to_string(by_twice[w]) + "\n";
	return s;
}

std::string dims_line(std::vector<std::size_t> const &v)
{
	std::string s;
	for (auto x : v)
		s += (s.empty() ? "" : " ") + std::to_string(x);
	return s;
}

void validate(RunConfig &c)
{
	if (c.n < 1)
		throw UsageError("--n must be >= 1");
	if (c.m < 0)
		throw UsageError("--m must be >= 0");
	if (c.r < 1)
		throw UsageError("--r must be >= 1");
	if (c.threads < 0)
		throw UsageError("--threads must be >= 0 (0 = all cores)");
	if (c.dmax < 0 || c.delta_max < 0 || c.dmax_cap < 0)
		throw UsageError("degree and weight bounds must be non-negative");
	if (c.drop_relation && *c.drop_relation < 0)
		throw UsageError("--drop-relation must be >= 0");
	Rational w;
	try
	{
		w = parse_rational(c.max_weight);
	}
	catch (std::invalid_argument const &)
	{
		throw UsageError("--max-weight must be a rational such as 3 or 5/2");
	}
	Rational tw = 2 * w;
	if (tw < 0 || tw.get_den() != 1)
		throw UsageError("--max-weight must be a non-negative half-integer");
	if (tw > 4096)
		throw UsageError("--max-weight is unreasonably large");
	c.twice_max = static_cast<int>(tw.get_num().get_si());
	if (c.format != "json" && c.format != "text" && c.format != "csv")
		throw UsageError("--format must be json, text or csv");
}

int integer_weight(RunConfig const &c)
{
	if (c.twice_max % 2 != 0)
		throw UsageError("this command needs an integer --max-weight");
	return c.twice_max / 2;
}

RealizationPair realization(RunConfig const &c)
{
	return build_realization(parse_realization_family(c.family), c.n, c.m, c.r, c.threads);
}

std::string report_line(std::string const &what, VerifyReport const &r)
{
	std::size_t bad = 0;
	std::set<std::pair<int, int>> pairs;
	for (auto const &f : r.failures)
		pairs.insert({f.i, f.j});
	bad = pairs.size();
	return what + ": " + std::to_string(r.pairs_checked - bad) + "/" + std::to_string(r.pairs_checked) +
	       " pairs pass\n";
}

Outcome cmd_ope(RunConfig const &c)
{
	FreeFieldContext ctx = infer_context(c.expr_a + " " + c.expr_b);
	if (c.n_bg >= 0)
		ctx.n_bg = c.n_bg;
	if (c.n_bc >= 0)
		ctx.n_bc = c.n_bc;
	OpeEngine engine(ctx);
	FieldPoly a = parse_field(c.expr_a, engine);
	FieldPoly b = parse_field(c.expr_b, engine);
	OPEResult res = engine.ope(a, b);
	Outcome o;
	o.result = {{"ctx", {{"n_bg", ctx.n_bg}, {"n_bc", ctx.n_bc}}},
	            {"a", a.to_text()},
	            {"b", b.to_text()},
	            {"poles", res.to_json()},
	            {"regular", res.regular()}};
	if (res.regular())
		o.text = "regular\n";
	for (auto it = res.poles.rbegin(); it != res.poles.rend(); ++it)
		o.text += "(z-w)^-" + std::to_string(it->first) + ": " + it->second.to_text() + "\n";
	return o;
}

void corrupt_current(RunConfig const &c, RealizationPair &p, bool for_coset_check)
{
	if (!c.corrupt)
		return;
	auto i = static_cast<std::size_t>(*c.corrupt);
	if (i >= p.coset.currents.size())
		throw UsageError("--corrupt index out of range (coset has " + std::to_string(p.coset.currents.size()) +
		                 " currents)");
	if (for_coset_check)
		p.coset.currents[i] += p.inner.currents[0];
	else
		p.coset.currents[i] *= Rational(2);
}

Outcome cmd_verify_ope(RunConfig const &c)
{
	if (c.part != "inner" && c.part != "coset" && c.part != "both")
		throw UsageError("--part must be inner, coset or both");
	RealizationPair p = realization(c);
	corrupt_current(c, p, false);
	Outcome o;
	o.result["realization"] = p.to_json();
	auto one = [&](char const *key, AffineRealization const &a) {
		VerifyReport rep = verify_affine_ope(a, c.threads);
		o.result[key] = rep.to_json();
		o.ok = o.ok && rep.ok();
		o.text += report_line(a.g.name() + " at level " + to_string(a.level), rep);
	};
	if (c.part != "coset")
		one("inner", p.inner);
	if (c.part != "inner")
		one("coset", p.coset);
	return o;
}

Outcome cmd_coset_check(RunConfig const &c)
{
	RealizationPair p = realization(c);
	corrupt_current(c, p, true);
	VerifyReport rep = verify_coset(p, c.threads);
	Outcome o;
	o.result = rep.to_json();
	o.ok = rep.ok();
	o.text = report_line(p.inner.g.name() + " x " + p.coset.g.name() + " mixed OPEs regular", rep);
	return o;
}

Outcome cmd_embed_check(RunConfig const &c)
{
	RealizationPair p = realization(c);
	Outcome o;
	try
	{
		EmbeddingReport rep = verify_conformal_embedding(p);
		o.result = rep.to_json();
		o.ok = rep.ok();
		o.text = std::string("L_inner + L_coset = L^S + L^E: ") + (rep.vector_identity ? "yes" : "no") + "\n" +
		         "c_inner = " + to_string(rep.c_inner) + ", c_coset = " + to_string(rep.c_coset) +
		         ", c_ambient = " + to_string(rep.c_ambient) + ", expected " + to_string(rep.c_expected) + "\n";
	}
	catch (std::domain_error const &e)
	{
		o.ok = false;
		o.result = {{"error", e.what()}};
		o.text = std::string("no Sugawara vector: ") + e.what() + "\n";
	}
	return o;
}

Outcome cmd_sugawara(RunConfig const &c)
{
	if (c.which != "inner" && c.which != "coset")
		throw UsageError("--which must be inner or coset");
	RealizationPair p = realization(c);
	AffineRealization const &a = c.which == "inner" ? p.inner : p.coset;
	Outcome o;
	try
	{
		FieldPoly L = sugawara(a);
		Rational expected = sugawara_central_charge(a);
		Rational got = central_charge(L);
		o.ok = got == expected;
		o.result = {{"algebra", a.g.name()},
		            {"level", to_string(a.level)},
		            {"h_dual", to_string(a.g.h_dual())},
		            {"sdim", a.g.sdim()},
		            {"vector", L.to_text()},
		            {"central_charge", to_string(got)},
		            {"expected_central_charge", to_string(expected)}};
		o.text = a.g.name() + " level " + to_string(a.level) + ": c = " + to_string(got) + " (expected " +
		         to_string(expected) + ")\nL = " + L.to_text() + "\n";
	}
	catch (VirasoroShapeError const &e)
	{
		o.ok = false;
		o.result = {{"algebra", a.g.name()}, {"error", e.what()}, {"pole", e.pole()}};
		o.text = std::string("not a Virasoro vector: ") + e.what() + "\n";
	}
	catch (std::domain_error const &e)
	{
		o.ok = false;
		o.result = {{"algebra", a.g.name()}, {"error", e.what()}};
		o.text = std::string("no Sugawara vector: ") + e.what() + "\n";
	}
	return o;
}

Outcome cmd_char(RunConfig const &c)
{
	Outcome o;
	std::vector<std::size_t> dims;
	if (c.algebra == "fock")
	{
		FreeFieldContext ctx = realization_context(parse_realization_family(c.family), c.n, c.m, c.r);
		check_twice_weight(c.caps, c.twice_max, "Fock character");
		dims = enumerate_basis(ctx, c.twice_max, c.caps).dims();
		auto closed = fock_character(ctx, c.twice_max);
		o.ok = dims == closed;
		o.result["closed_form"] = dims_rows(closed);
	}
	else if (c.algebra == "inner" || c.algebra == "coset")
	{
		RealizationPair p = realization(c);
		auto const &gens = c.algebra == "inner" ? p.inner.currents : p.coset.currents;
		Subalgebra v = generate_subalgebra(gens, c.twice_max, c.threads, c.caps);
		dims = v.dims;
		o.result["fixed_point_rounds"] = v.fixed_point_rounds;
	}
	else
		throw UsageError("--algebra must be inner, coset or fock");
	o.result["dims"] = dims_rows(dims);
	o.text = "dims by weight 0, 1/2, ..., " + c.max_weight + ": " + dims_line(dims) + "\n";
	o.csv = dims_csv(dims);
	return o;
}

C2Presentation presentation(RunConfig const &c, RealizationPair const &p, int &dmax, int &delta)
{
	int N = integer_weight(c);
	delta = c.delta_max > 0 ? c.delta_max : std::max(N, 1);
	dmax = c.dmax > 0 ? c.dmax : delta;
	if (dmax > c.caps.max_relation_degree)
		throw ResourceLimit("relation degree " + std::to_string(dmax) + " exceeds the cap of " +
		                    std::to_string(c.caps.max_relation_degree) + " (ARCFREE_MAX_DEGREE)");
	std::vector<std::string> labels;
	for (auto const &b : p.coset.g.basis())
		labels.push_back(b.label);
	return c2_presentation(p.coset.currents, labels, dmax, 2 * delta, c.threads, c.caps);
}

Outcome cmd_zhu(RunConfig const &c)
{
	if (c.family != "s2")
		throw UsageError("zhu is implemented for the s2 coset");
	RealizationPair p = realization(c);
	int dmax = 0, delta = 0;
	C2Presentation pres = presentation(c, p, dmax, delta);
	Outcome o;
	o.result = pres.to_json();
	o.text = "R_V dims by weight 0, 1/2, ..., " + std::to_string(delta) + ": " + dims_line(pres.rv_dims) + "\n";
	PolyRing ring(pres.gens);
	for (auto const &[deg, rels] : pres.relations)
		for (auto const &rel : rels)
			o.text += "degree " + std::to_string(deg) + ": " + ring.to_text(rel) + "\n";
	o.csv = dims_csv(pres.rv_dims);
	return o;
}

Outcome cmd_arc_hilbert(RunConfig const &c)
{
	if (c.family != "s2")
		throw UsageError("arc-hilbert is implemented for the s2 coset");
	RealizationPair p = realization(c);
	int dmax = 0, delta = 0;
	C2Presentation pres = presentation(c, p, dmax, delta);
	DiffPresentation dp{pres.gens, pres.all_relations()};
	QuotientDetails q = quotient_details(dp, c.twice_max, c.threads, c.caps);
	HilbertTable free = free_diff_dims(pres.gens, c.twice_max);
	Outcome o;
	o.result = q.table.to_json();
	o.result["free_dims"] = dims_rows(free.dims);
	o.result["ideal_dims"] = dims_rows(q.ideal_dims);
	o.result["derivation_stable"] = q.derivation_stable;
	o.result["presentation"] = dp.to_json();
	o.ok = q.derivation_stable;
	o.text = "arc-space dims by weight 0, 1/2, ..., " + c.max_weight + ": " + dims_line(q.table.dims) + "\n";
	o.csv = q.table.to_csv();
	return o;
}

Outcome cmd_invariants(RunConfig const &c)
{
	HilbertTable t = jet_invariant_dims(c.n, c.m, c.r, c.twice_max, c.threads, c.caps);
	Outcome o;
	o.result = t.to_json();
	o.text = "jet invariant dims by weight 0, 1/2, ..., " + c.max_weight + ": " + dims_line(t.dims) + "\n";
	o.csv = t.to_csv();
	return o;
}

Outcome cmd_certify(RunConfig const &c)
{
	if (c.family != "s2")
		throw UsageError("certify uses the s2 realization");
	CertifyOptions opt;
	opt.n = c.n;
	opt.m = c.m;
	opt.r = c.r;
	opt.max_weight = integer_weight(c);
	opt.dmax = c.dmax;
	opt.delta_max = c.delta_max;
	opt.dmax_cap = c.dmax_cap;
	opt.with_jet = c.with_jet;
	if (c.drop_relation)
		opt.drop_relation = static_cast<std::size_t>(*c.drop_relation);
	opt.threads = c.threads;
	opt.caps = c.caps;
	Outcome o;
	FreenessCertificate cert = certify_classical_freeness(opt);
	o.result = cert.to_json();
	o.ok = cert.equal;
	o.text = cert.verdict() + " (" + cert.label() + ")\n" + "dims_V:   " + dims_line(cert.dims_v) + "\n" +
	         "dims_arc: " + dims_line(cert.dims_arc) + "\n";
	if (!cert.dims_jet.empty())
		o.text += "dims_jet: " + dims_line(cert.dims_jet) + "\n";
	std::string csv = "weight,dim_V,dim_arc" + std::string(cert.dims_jet.empty() ? "" : ",dim_jet") + "\n";
	for (std::size_t w = 0; w < cert.dims_v.size(); ++w)
		csv += std::to_string(w) + "," + std::to_string(cert.dims_v[w]) + "," + std::to_string(cert.dims_arc[w]) +
		       (cert.dims_jet.empty() ? "" : "," + std::to_string(cert.dims_jet[w])) + "\n";
	o.csv = csv;
	return o;
}

Outcome dispatch(RunConfig const &c)
{
	if (c.command == "ope")
		return cmd_ope(c);
	if (c.command == "verify-ope")
		return cmd_verify_ope(c);
	if (c.command == "coset-check")
		return cmd_coset_check(c);
	if (c.command == "embed-check")
		return cmd_embed_check(c);
	if (c.command == "sugawara")
		return cmd_sugawara(c);
	if (c.command == "char")
		return cmd_char(c);
	if (c.command == "zhu")
		return cmd_zhu(c);
	if (c.command == "arc-hilbert")
		return cmd_arc_hilbert(c);
	if (c.command == "invariants")
		return cmd_invariants(c);
	if (c.command == "certify")
		return cmd_certify(c);
	throw UsageError("unknown command " + c.command);
}

json envelope(RunConfig const &c, std::string const &status)
{
	return {{"schema", "arcfree.report/1"},
	        {"tool_version", std::string(tool_version())},
	        {"command", c.command},
	        {"config", c.echo()},
	        {"status", status}};
}

void write_file(std::filesystem::path const &path, std::string const &body)
{
	if (path.has_parent_path())
		std::filesystem::create_directories(path.parent_path());
	std::ofstream f(path);
	if (!f)
		throw std::runtime_error("cannot write " + path.string());
	f << body;
}

void add_params(CLI::App *sub, RunConfig &c, bool family = true)
{
	if (family)
		sub->add_option("--family", c.family, "realization family")->check(CLI::IsMember({"s1", "s2"}));
	sub->add_option("--n", c.n, "rank parameter n");
	sub->add_option("--m", c.m, "number of even copies m");
	sub->add_option("--r", c.r, "odd copy parameter r");
}

} // namespace

int run(std::vector<std::string> const &args, std::ostream &out, std::ostream &err)
{
	RunConfig c;
	CLI::App app{"Exact free-field vertex superalgebra engine", "arcfree"};
	app.require_subcommand(1);
	app.set_version_flag("--version", std::string(tool_version()));

	auto global = [&](CLI::App *sub) {
		sub->add_option("--threads", c.threads, "worker threads (0 = all cores)");
		sub->add_option("--format", c.format, "json, text or csv");
		sub->add_option("--output,-o", c.output, "write the report here instead of stdout");
		sub->add_option("--report-dir", c.report_dir, "also store JSON at <dir>/<command>/<params>.json");
	};

	auto *ope = app.add_subcommand("ope", "singular part of a(z) b(w)");
	ope->add_option("a", c.expr_a, "field expression")->required();
	ope->add_option("b", c.expr_b, "field expression")->required();
	ope->add_option("--n-bg", c.n_bg, "beta-gamma rank (default: inferred)");
	ope->add_option("--n-bc", c.n_bc, "bc rank (default: inferred)");

	auto *vo = app.add_subcommand("verify-ope", "check the affine OPEs of a realization");
	add_params(vo, c);
	vo->add_option("--part", c.part, "inner, coset or both");
	vo->add_option("--corrupt", c.corrupt, "double this coset current first (negative control)");

	auto *cc = app.add_subcommand("coset-check", "check that inner and coset currents commute");
	add_params(cc, c);
	cc->add_option("--corrupt", c.corrupt, "add an inner current to this coset current (negative control)");

	auto *ec = app.add_subcommand("embed-check", "check L_inner + L_coset = L^S + L^E");
	add_params(ec, c);

	auto *sg = app.add_subcommand("sugawara", "Sugawara vector and its central charge");
	add_params(sg, c);
	sg->add_option("--which", c.which, "inner or coset");

	auto *ch = app.add_subcommand("char", "graded dimensions");
	add_params(ch, c);
	ch->add_option("--algebra", c.algebra, "coset, inner or fock");
	ch->add_option("--max-weight", c.max_weight, "maximal conformal weight (half-integer)");

	auto *zh = app.add_subcommand("zhu", "C2 algebra and its minimal relations");
	add_params(zh, c);
	zh->add_option("--max-weight", c.max_weight, "default for --delta-max");
	zh->add_option("--dmax", c.dmax, "maximal relation degree (default: Delta_max)");
	zh->add_option("--delta-max", c.delta_max, "weight through which R_V is computed");

	auto *ah = app.add_subcommand("arc-hilbert", "Hilbert series of the arc space of R_V");
	add_params(ah, c);
	ah->add_option("--max-weight", c.max_weight, "N");
	ah->add_option("--dmax", c.dmax, "maximal relation degree");
	ah->add_option("--delta-max", c.delta_max, "weight through which R_V is computed");

	auto *iv = app.add_subcommand("invariants", "jet-group invariant dimensions");
	add_params(iv, c, false);
	iv->add_option("--max-weight", c.max_weight, "N");

	auto *ce = app.add_subcommand("certify", "classical freeness certificate through weight N");
	add_params(ce, c, false);
	ce->add_option("--max-weight", c.max_weight, "N (integer)");
	ce->add_option("--dmax", c.dmax, "initial relation degree (default: N)");
	ce->add_option("--delta-max", c.delta_max, "weight through which R_V is computed (default: N)");
	ce->add_option("--dmax-cap", c.dmax_cap, "largest relation degree tried (default: Delta_max)");
	ce->add_flag("--with-jet", c.with_jet, "also compute jet invariants");
	ce->add_option("--drop-relation", c.drop_relation, "omit one relation (negative control)");

	for (auto *sub : {ope, vo, cc, ec, sg, ch, zh, ah, iv, ce})
		global(sub);

	std::vector<std::string> rev(args.rbegin(), args.rend());
	try
	{
		app.parse(rev);
	}
	catch (CLI::CallForHelp const &)
	{
		out << app.help();
		return pass;
	}
	catch (CLI::CallForAllHelp const &)
	{
		out << app.help("", CLI::AppFormatMode::All);
		return pass;
	}
	catch (CLI::CallForVersion const &)
	{
		out << tool_version() << "\n";
		return pass;
	}
	catch (CLI::ParseError const &e)
	{
		err << "arcfree: " << e.what() << "\n";
		return usage;
	}
	for (auto *sub : app.get_subcommands())
		c.command = sub->get_name();

	int code = pass;
	json report;
	std::string body;
	try
	{
		c.caps = ResourceCaps::from_env();
		if (c.command != "ope")
			validate(c);
		else if (c.format == "csv")
			throw UsageError("ope has no table output");
		Outcome o = dispatch(c);
		code = o.ok ? pass : failure;
		report = envelope(c, o.ok ? "pass" : "fail");
		report["result"] = o.result;
		if (c.format == "json")
			body = report.dump(2) + "\n";
		else if (c.format == "text")
			body = o.text + (o.ok ? "" : "FAIL\n");
		else if (o.csv.empty())
			throw UsageError(c.command + " has no table output; use json or text");
		else
			body = o.csv;
	}
	catch (std::exception const &e)
	{
		// usage and resource problems exit 2, anything a computation rejects exits 1
		bool is_usage = dynamic_cast<std::invalid_argument const *>(&e) != nullptr ||
		                dynamic_cast<ResourceLimit const *>(&e) != nullptr;
		code = is_usage ? usage : failure;
		report = envelope(c, is_usage ? "error" : "fail");
		report["error"] = e.what();
		err << "arcfree " << c.command << ": " << e.what() << "\n";
		body = c.format == "json" ? report.dump(2) + "\n" : std::string(is_usage ? "ERROR: " : "FAIL: ") + e.what() + "\n";
	}

	try
	{
		if (c.output.empty())
			out << body;
		else
			write_file(c.output, body);
		if (!c.report_dir.empty())
			write_file(std::filesystem::path(c.report_dir) / c.command / (c.params_key() + ".json"),
			           report.dump(2) + "\n");
	}
	catch (std::exception const &e)
	{
		err << "arcfree: " << e.what() << "\n";
		return usage;
	}
	return code;
}

} // namespace arcfree::cli
