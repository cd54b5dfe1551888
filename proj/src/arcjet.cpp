#include "arcfree/arcjet.hpp"

#include "arcfree/affine.hpp"
#include "arcfree/fockspan.hpp"
#include "arcfree/parallel.hpp"
#include "arcfree/sparse.hpp"
#include "arcfree/version.hpp"

#include <unordered_map>

namespace arcfree {

namespace {

nlohmann::json weight_rows(std::vector<std::size_t> const &by_twice)
{
	nlohmann::json rows = nlohmann::json::array();
	for (std::size_t w = 0; w < by_twice.size(); ++w)
		rows.push_back({{"weight", to_string(make_rational(static_cast<long>(w), 2))}, {"dim", by_twice[w]}});
	return rows;
}

struct MonoIndexHash {
	std::size_t operator()(PolyMonomial const &m) const noexcept
	{
		std::size_t h = 1469598103934665603ull;
		for (auto v : m)
			h = (h ^ (static_cast<std::size_t>(v.gen) * 131 + static_cast<std::size_t>(v.order))) * 1099511628211ull;
		return h;
	}
};

using MonoIndex = std::unordered_map<PolyMonomial, std::int32_t, MonoIndexHash>;

MonoIndex make_index(std::vector<PolyMonomial> const &monos)
{
	MonoIndex idx;
	idx.reserve(monos.size());
	for (std::size_t i = 0; i < monos.size(); ++i)
		idx.emplace(monos[i], static_cast<std::int32_t>(i));
	return idx;
}

SparseVec to_vec(SuperPoly const &p, MonoIndex const &idx, std::int32_t offset = 0)
{
	std::vector<SparseVec::Entry> e;
	e.reserve(p.size());
	for (auto const &[m, c] : p)
		e.emplace_back(offset + idx.at(m), c);
	return SparseVec(std::move(e));
}

} // namespace

std::vector<std::size_t> integer_weights(std::vector<std::size_t> const &by_twice, int max_weight)
{
	std::vector<std::size_t> out;
	for (int w = 0; w <= max_weight && static_cast<std::size_t>(2 * w) < by_twice.size(); ++w)
		out.push_back(by_twice[static_cast<std::size_t>(2 * w)]);
	return out;
}

nlohmann::json HilbertTable::to_json() const
{
	nlohmann::json j{{"schema", "arcfree.hilbert/1"},
	                 {"max_weight", to_string(make_rational(twice_max, 2))},
	                 {"dims", weight_rows(dims)}};
	if (!presentation_hash.empty())
	{
		j["presentation_hash"] = presentation_hash;
		j["relation_degree_bound"] = relation_degree_bound;
	}
	return j;
}

std::string HilbertTable::to_csv() const
{
	std::string s = "weight,dim\n";
	for (std::size_t w = 0; w < dims.size(); ++w)
		s += to_string(make_rational(static_cast<long>(w), 2)) + "," + std::to_string(dims[w]) + "\n";
	return s;
}

void DiffPresentation::validate() const
{
	PolyRing ring(gens);
	for (std::size_t k = 0; k < relations.size(); ++k)
	{
		std::optional<int> w;
		std::optional<Parity> p;
		for (auto const &[m, c] : relations[k])
		{
			for (auto v : m)
				if (v.gen < 0 || v.gen >= static_cast<int>(gens.size()) || v.order < 0)
					throw std::invalid_argument("relation " + std::to_string(k) + " uses an unknown variable");
			int tw = ring.twice_weight(m);
			Parity q = ring.parity(m);
			if ((w && *w != tw) || (p && *p != q))
				throw std::invalid_argument("relation " + std::to_string(k) + " is not homogeneous");
			w = tw;
			p = q;
		}
	}
}

std::string DiffPresentation::hash() const
{
	PolyRing ring(gens);
	nlohmann::json j = nlohmann::json::array();
	for (auto const &g : gens)
		j.push_back({g.label, is_odd(g.parity), g.twice_weight});
	for (auto const &r : relations)
		j.push_back(ring.to_json(r));
	return hex64(stable_hash(j.dump()));
}

nlohmann::json DiffPresentation::to_json() const
{
	PolyRing ring(gens);
	nlohmann::json g = nlohmann::json::array();
	for (auto const &x : gens)
		g.push_back({{"label", x.label},
		             {"parity", std::string(to_string(x.parity))},
		             {"weight", to_string(make_rational(x.twice_weight, 2))}});
	nlohmann::json rel = nlohmann::json::array();
	for (auto const &r : relations)
		rel.push_back(ring.to_text(r));
	return {{"schema", "arcfree.diff_presentation/1"}, {"generators", g}, {"relations", rel}, {"hash", hash()}};
}

HilbertTable free_diff_dims(std::vector<PolyGen> const &gens, int twice_max)
{
	if (twice_max < 0)
		throw std::invalid_argument("maximal weight must be non-negative");
	std::vector<std::size_t> c(static_cast<std::size_t>(twice_max + 1), 0);
	c[0] = 1;
	for (auto const &g : gens)
	{
		if (g.twice_weight <= 0)
			throw std::invalid_argument("generator weights must be positive");
		for (int tw = g.twice_weight; tw <= twice_max; tw += 2)
		{
			if (is_odd(g.parity))
				for (int t = twice_max; t >= tw; --t)
					c[static_cast<std::size_t>(t)] += c[static_cast<std::size_t>(t - tw)];
			else
				for (int t = tw; t <= twice_max; ++t)
					c[static_cast<std::size_t>(t)] += c[static_cast<std::size_t>(t - tw)];
		}
	}
	return HilbertTable{twice_max, std::move(c), {}, 0};
}

QuotientDetails quotient_details(DiffPresentation const &p, int twice_max, int threads, ResourceCaps const &caps)
{
	p.validate();
	check_twice_weight(caps, twice_max, "arc-space quotient");
	PolyRing ring(p.gens);
	auto const W = static_cast<std::size_t>(twice_max + 1);

	std::vector<std::vector<PolyMonomial>> monos(W);
	for (std::size_t w = 0; w < W; ++w)
	{
		monos[w] = ring.monomials(static_cast<int>(w));
		check_monomials(caps, monos[w].size(), "arc-space monomials at weight " +
		                                           to_string(make_rational(static_cast<long>(w), 2)));
	}

	// d^s(rel) for every relation and every s that still fits
	struct Derived {
		int twice_weight;
		SuperPoly poly;
	};
	std::vector<Derived> derived;
	for (auto const &rel : p.relations)
	{
		if (rel.empty())
			continue;
		int tw = ring.twice_weight(rel.begin()->first);
		SuperPoly cur = rel;
		for (; tw <= twice_max && !cur.empty(); tw += 2)
		{
			derived.push_back({tw, cur});
			cur = ring.derivative(cur);
		}
	}

	std::vector<std::size_t> ideal_dims(W, 0);
	std::vector<std::vector<SuperPoly>> ideal_basis(W); // independent spanning elements
	std::vector<EchelonBasis> ech(W);
	parallel_for(W, threads, [&](std::size_t w, int) {
		auto idx = make_index(monos[w]);
		for (auto const &d : derived)
		{
			if (d.twice_weight > static_cast<int>(w))
				continue;
			for (auto const &m : monos[w - static_cast<std::size_t>(d.twice_weight)])
			{
				SuperPoly prod = ring.multiply(m, d.poly);
				if (prod.empty())
					continue;
				if (ech[w].insert(to_vec(prod, idx)))
					ideal_basis[w].push_back(std::move(prod));
			}
		}
		ideal_dims[w] = ech[w].rank();
	});

	QuotientDetails out;
	out.table.twice_max = twice_max;
	out.table.presentation_hash = p.hash();
	for (std::size_t w = 0; w < W; ++w)
	{
		out.monomial_dims.push_back(monos[w].size());
		out.ideal_dims.push_back(ideal_dims[w]);
		out.table.dims.push_back(monos[w].size() - ideal_dims[w]);
	}
	for (auto const &rel : p.relations)
		if (!rel.empty())
			out.table.relation_degree_bound =
			    std::max(out.table.relation_degree_bound, static_cast<int>(rel.begin()->first.size()));

	for (std::size_t w = 0; w + 2 < W && out.derivation_stable; ++w)
	{
		auto idx = make_index(monos[w + 2]);
		for (auto const &b : ideal_basis[w])
			if (!ech[w + 2].contains(to_vec(ring.derivative(b), idx)))
			{
				out.derivation_stable = false;
				out.unstable_twice_weight = static_cast<int>(w);
				break;
			}
	}
	return out;
}

HilbertTable quotient_dims(DiffPresentation const &p, int twice_max, int threads, ResourceCaps const &caps)
{
	return quotient_details(p, twice_max, threads, caps).table;
}

HilbertTable jet_invariant_dims(int n, int m, int r, int twice_max, int threads, ResourceCaps const &caps)
{
	if (n < 1 || m < 0 || r < 0)
		throw std::invalid_argument("jet invariants need n >= 1, m >= 0, r >= 0");
	check_twice_weight(caps, twice_max, "jet invariants");
	int w2 = 2 * n;
	std::vector<PolyGen> vars;
	for (int a = 0; a < m + 2 * r; ++a)
		for (int i = 0; i < w2; ++i)
			vars.push_back({(a < m ? "v" : "u") + std::to_string(a + 1) + "_" + std::to_string(i + 1),
			                a < m ? Parity::even : Parity::odd, 1});
	PolyRing ring(vars);
	LieSuperAlgebra sp = build_algebra(Family::sp, {n});
	auto const W = static_cast<std::size_t>(twice_max + 1);

	std::vector<std::vector<PolyMonomial>> monos(W);
	std::vector<MonoIndex> index(W);
	for (std::size_t w = 0; w < W; ++w)
	{
		monos[w] = ring.monomials(static_cast<int>(w));
		check_monomials(caps, monos[w].size(), "jet monomials at weight " +
		                                           to_string(make_rational(static_cast<long>(w), 2)));
		index[w] = make_index(monos[w]);
	}
	auto torus_zero = [&](PolyMonomial const &mono) {
		std::vector<int> t(static_cast<std::size_t>(n), 0);
		for (auto v : mono)
		{
			int i = v.gen % w2;
			if (i < n)
				++t[static_cast<std::size_t>(i)];
			else
				--t[static_cast<std::size_t>(i - n)];
		}
		for (int x : t)
			if (x != 0)
				return false;
		return true;
	};

	// xi t^s sends the variable (copy, slot i, level j) to sum_l M_li (copy, slot l, level j-s)
	auto act = [&](int xi, int s, PolyMonomial const &mono) {
		SuperPoly out;
		SuperMatrix const &mat = sp.matrix(xi);
		for (std::size_t p = 0; p < mono.size(); ++p)
		{
			DiffVar v = mono[p];
			if (v.order < s)
				continue;
			PolyMonomial rest = mono;
			rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(p));
			int sign = 1;
			if (is_odd(ring.parity(v)))
				for (std::size_t k = 0; k < p; ++k)
					if (is_odd(ring.parity(mono[k])))
						sign = -sign;
			int copy = v.gen / w2, i = v.gen % w2;
			for (int l = 0; l < w2; ++l)
			{
				Rational const &c = mat.at(l, i);
				if (is_zero(c))
					continue;
				PolyMonomial prod;
				if (int t = ring.multiply({DiffVar{copy * w2 + l, v.order - s}}, rest, prod))
					add_term(out, prod, sign * t * c);
			}
		}
		return out;
	};

	std::vector<std::size_t> dims(W, 0);
	parallel_for(W, threads, [&](std::size_t w, int) {
		std::vector<std::int32_t> offsets;
		std::vector<std::pair<int, int>> blocks;
		std::int32_t off = 0;
		for (int s = 0; 2 * s <= static_cast<int>(w); ++s)
			for (int xi = 0; xi < sp.dim(); ++xi)
			{
				blocks.emplace_back(xi, s);
				offsets.push_back(off);
				off += static_cast<std::int32_t>(monos[w - 2 * static_cast<std::size_t>(s)].size());
			}
		EchelonBasis ech;
		std::size_t cols = 0;
		for (auto const &mono : monos[w])
		{
			if (!torus_zero(mono))
				continue;
			++cols;
			std::vector<SparseVec::Entry> entries;
			for (std::size_t b = 0; b < blocks.size(); ++b)
			{
				auto [xi, s] = blocks[b];
				for (auto const &[img, c] : act(xi, s, mono))
					entries.emplace_back(offsets[b] + index[w - 2 * static_cast<std::size_t>(s)].at(img), c);
			}
			ech.insert(SparseVec(std::move(entries)));
		}
		dims[w] = cols - ech.rank();
	});
	return HilbertTable{twice_max, std::move(dims), {}, 0};
}

std::string FreenessCertificate::verdict() const
{
	if (equal)
		return "equal-through-" + std::to_string(options.max_weight);
	auto w = static_cast<std::size_t>(*mismatch_weight);
	return "mismatch-at(" + std::to_string(w) + ", " + std::to_string(dims_arc[w]) + ", " + std::to_string(dims_v[w]) +
	       ")";
}

std::string FreenessCertificate::label() const
{
	return hypothesis_holds ? "simple affine vertex superalgebra" : "image algebra, simplicity not asserted";
}

nlohmann::json FreenessCertificate::to_json() const
{
	nlohmann::json j{{"schema", "arcfree.certificate/1"},
	                 {"tool_version", std::string(tool_version())},
	                 {"params", {{"n", options.n}, {"m", options.m}, {"r", options.r}}},
	                 {"N", options.max_weight},
	                 {"dims_V", dims_v},
	                 {"dims_arc", dims_arc},
	                 {"rv_dims", rv_dims},
	                 {"verdict", verdict()},
	                 {"equal", equal},
	                 {"hypothesis", {{"holds", hypothesis_holds}, {"label", label()}}},
	                 {"provenance",
	                  {{"dmax", dmax_used},
	                   {"delta_max", delta_max},
	                   {"attempts", attempts},
	                   {"relation_count", relation_count},
	                   {"presentation_hash", presentation_hash},
	                   {"derivation_stable", derivation_stable}}},
	                 {"presentation", presentation}};
	if (!dims_jet.empty())
		j["dims_jet"] = dims_jet;
	if (options.drop_relation)
		j["dropped_relation"] = *options.drop_relation;
	if (mismatch_weight)
		j["mismatch"] = {{"weight", *mismatch_weight},
		                 {"dim_arc", dims_arc[static_cast<std::size_t>(*mismatch_weight)]},
		                 {"dim_V", dims_v[static_cast<std::size_t>(*mismatch_weight)]}};
	return j;
}

FreenessCertificate certify_classical_freeness(CertifyOptions const &opt)
{
	if (opt.n < 1 || opt.m < 0 || opt.r < 1)
		throw std::invalid_argument("certificate needs n >= 1, m >= 0, r >= 1");
	if (opt.max_weight < 0)
		throw std::invalid_argument("N must be non-negative");
	FreenessCertificate cert;
	cert.options = opt;
	int N = opt.max_weight;
	int delta_max = opt.delta_max > 0 ? opt.delta_max : std::max(N, 1);
	if (delta_max < N)
		throw std::invalid_argument("Delta_max must be >= N");
	int dmax = opt.dmax > 0 ? opt.dmax : std::max(N, 1);
	int cap = opt.dmax_cap > 0 ? opt.dmax_cap : delta_max;
	cap = std::min({cap, delta_max, opt.caps.max_relation_degree});
	if (dmax > delta_max)
		throw std::invalid_argument("Dmax exceeds Delta_max; the presentation cannot be certified");
	if (dmax > opt.caps.max_relation_degree)
		throw ResourceLimit("relation degree " + std::to_string(dmax) + " exceeds the cap of " +
		                    std::to_string(opt.caps.max_relation_degree) + " (ARCFREE_MAX_DEGREE)");
	cert.delta_max = delta_max;
	cert.options.max_weight = N;
	cert.hypothesis_holds = 2 * (opt.r + opt.n + 1) > opt.m;

	auto pair = build_realization(RealizationFamily::s2, opt.n, opt.m, opt.r, opt.threads);
	auto const &cur = pair.coset.currents;
	std::vector<std::string> labels;
	for (auto const &b : pair.coset.g.basis())
		labels.push_back(b.label);
	Subalgebra v = generate_subalgebra(cur, 2 * delta_max, opt.threads, opt.caps);
	cert.dims_v = integer_weights(v.dims, N);

	for (int d = dmax;; ++d)
	{
		++cert.attempts;
		C2Presentation pres = c2_presentation(v, cur, labels, d, 2 * delta_max, opt.threads);
		DiffPresentation dp{pres.gens, pres.all_relations()};
		if (opt.drop_relation)
		{
			if (*opt.drop_relation >= dp.relations.size())
				throw std::invalid_argument("no relation with index " + std::to_string(*opt.drop_relation));
			dp.relations.erase(dp.relations.begin() + static_cast<std::ptrdiff_t>(*opt.drop_relation));
		}
		auto q = quotient_details(dp, 2 * N, opt.threads, opt.caps);
		cert.dims_arc = integer_weights(q.table.dims, N);
		cert.rv_dims = integer_weights(pres.rv_dims, delta_max);
		cert.dmax_used = d;
		cert.relation_count = dp.relations.size();
		cert.presentation_hash = dp.hash();
		cert.presentation = pres.to_json();
		cert.derivation_stable = q.derivation_stable;
		if (!q.derivation_stable)
			throw std::logic_error("differential ideal is not stable under d at weight " +
			                       to_string(make_rational(*q.unstable_twice_weight, 2)));

		cert.mismatch_weight.reset();
		for (int w = 0; w <= N; ++w)
		{
			auto uw = static_cast<std::size_t>(w);
			if (cert.dims_arc[uw] < cert.dims_v[uw])
				throw std::logic_error("arc-space dimension " + std::to_string(cert.dims_arc[uw]) + " < " +
				                       std::to_string(cert.dims_v[uw]) + " at weight " + std::to_string(w) +
				                       ": the presentation has spurious relations");
			if (cert.dims_arc[uw] > cert.dims_v[uw] && !cert.mismatch_weight)
				cert.mismatch_weight = w;
		}
		cert.equal = !cert.mismatch_weight;
		if (cert.equal || d >= cap || opt.drop_relation)
			break;
	}
	if (opt.with_jet)
		cert.dims_jet = integer_weights(jet_invariant_dims(opt.n, opt.m, opt.r, 2 * N, opt.threads, opt.caps).dims, N);
	return cert;
}

} // namespace arcfree
