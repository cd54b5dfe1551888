#include "arcfree/fockspan.hpp"

#include "arcfree/parallel.hpp"

#include <algorithm>
#include <functional>
#include <memory>

namespace arcfree {

namespace {

void add_into(FockVector::Terms &dst, FockMonomial const &m, Rational const &c)
{
	if (is_zero(c))
		return;
	auto [it, inserted] = dst.try_emplace(m, c);
	if (!inserted)
	{
		it->second += c;
		if (is_zero(it->second))
			dst.erase(it);
	}
}

std::string mode_text(Factor const &f)
{
	return std::string(to_string(f.gen.kind)) + "_" + std::to_string(f.gen.index) + "[-" + std::to_string(2 * f.deriv + 1) +
	       "/2]";
}

int twice_weight_of(FieldPoly const &a, std::string const &what)
{
	auto w = weight(a);
	if (!w)
		throw std::invalid_argument(what + " is zero or not weight-homogeneous");
	Rational tw = 2 * *w;
	return static_cast<int>(tw.get_num().get_si());
}

} // namespace

FockVector FockVector::vacuum(FreeFieldContext ctx)
{
	FockVector v(ctx);
	v.add(FockMonomial{}, Rational(1));
	return v;
}

void FockVector::add(FockMonomial const &m, Rational const &c)
{
	add_into(terms_, m, c);
}

void FockVector::add(FockVector const &v, Rational const &c)
{
	if (!(v.ctx_ == ctx_))
		throw ContextMismatch("adding Fock vectors from different contexts");
	for (auto const &[m, x] : v.terms_)
		add_into(terms_, m, c * x);
}

std::optional<int> FockVector::twice_weight() const
{
	std::optional<int> w;
	for (auto const &[m, c] : terms_)
	{
		int t = arcfree::twice_weight(m);
		if (w && *w != t)
			return std::nullopt;
		w = t;
	}
	return w;
}

std::string FockVector::to_text() const
{
	if (terms_.empty())
		return "0";
	std::string out;
	for (auto const &[m, c] : terms_)
	{
		if (!out.empty())
			out += " + ";
		if (c != 1)
			out += to_string(c) + " ";
		for (auto const &f : m)
			out += mode_text(f) + " ";
		out += "|0>";
	}
	return out;
}

// ---------------------------------------------------------------------------

GradedBasis::GradedBasis(FreeFieldContext ctx, int twice_max, ResourceCaps const &caps)
    : ctx_(ctx), twice_max_(twice_max)
{
	ctx_.validate();
	if (twice_max < 0)
		throw std::invalid_argument("maximal weight must be non-negative");
	check_twice_weight(caps, twice_max, "Fock basis");
	std::vector<Factor> modes;
	auto add_kind = [&](GenKind k, int rank) {
		for (int i = 1; i <= rank; ++i)
			for (int d = 0; 1 + 2 * d <= twice_max; ++d)
				modes.push_back({{k, i}, d});
	};
	add_kind(GenKind::beta, ctx.n_bg);
	add_kind(GenKind::gamma, ctx.n_bg);
	add_kind(GenKind::b, ctx.n_bc);
	add_kind(GenKind::c, ctx.n_bc);
	std::sort(modes.begin(), modes.end());

	by_weight_.assign(static_cast<std::size_t>(twice_max + 1), {});
	FockMonomial cur;
	std::function<void(std::size_t, int)> rec = [&](std::size_t start, int w) {
		auto &slot = by_weight_[static_cast<std::size_t>(w)];
		slot.push_back(cur);
		if (slot.size() > caps.max_monomials)
			check_monomials(caps, slot.size(), "Fock basis at weight " + to_string(make_rational(w, 2)));
		for (std::size_t k = start; k < modes.size(); ++k)
		{
			int tw = modes[k].twice_weight();
			if (w + tw > twice_max)
				continue;
			cur.push_back(modes[k]);
			rec(is_odd(modes[k].parity()) ? k + 1 : k, w + tw);
			cur.pop_back();
		}
	};
	rec(0, 0);
	index_.resize(by_weight_.size());
	for (std::size_t w = 0; w < by_weight_.size(); ++w)
	{
		std::sort(by_weight_[w].begin(), by_weight_[w].end());
		for (std::size_t i = 0; i < by_weight_[w].size(); ++i)
			index_[w].emplace(by_weight_[w][i], static_cast<std::int32_t>(i));
	}
}

std::vector<std::size_t> GradedBasis::dims() const
{
	std::vector<std::size_t> d;
	for (auto const &w : by_weight_)
		d.push_back(w.size());
	return d;
}

std::int32_t GradedBasis::index(FockMonomial const &m) const
{
	int w = twice_weight(m);
	if (w > twice_max_)
		throw ResourceLimit("Fock monomial beyond the enumerated weight range");
	auto const &idx = index_[static_cast<std::size_t>(w)];
	auto it = idx.find(m);
	if (it == idx.end())
		throw std::out_of_range("not a canonical Fock monomial of this context");
	return it->second;
}

SparseVec GradedBasis::coordinates(FockVector const &v) const
{
	std::vector<SparseVec::Entry> e;
	e.reserve(v.terms().size());
	for (auto const &[m, c] : v.terms())
		e.emplace_back(index(m), c);
	return SparseVec(std::move(e));
}

FockVector GradedBasis::vector(int twice_weight, SparseVec const &coords) const
{
	FockVector v(ctx_);
	for (auto const &[i, c] : coords.entries())
		v.add(at(twice_weight)[static_cast<std::size_t>(i)], c);
	return v;
}

GradedBasis enumerate_basis(FreeFieldContext ctx, int twice_max, ResourceCaps const &caps)
{
	return GradedBasis(ctx, twice_max, caps);
}

std::vector<std::size_t> fock_character(FreeFieldContext ctx, int twice_max)
{
	std::vector<std::size_t> c(static_cast<std::size_t>(twice_max + 1), 0);
	c[0] = 1;
	for (int tw = 1; tw <= twice_max; tw += 2)
	{
		for (int k = 0; k < 2 * ctx.n_bg; ++k)
			for (int t = tw; t <= twice_max; ++t)
				c[static_cast<std::size_t>(t)] += c[static_cast<std::size_t>(t - tw)];
		for (int k = 0; k < 2 * ctx.n_bc; ++k)
			for (int t = twice_max; t >= tw; --t)
				c[static_cast<std::size_t>(t)] += c[static_cast<std::size_t>(t - tw)];
	}
	return c;
}

// ---------------------------------------------------------------------------

std::size_t FockSpace::KeyHash::operator()(Key const &k) const noexcept
{
	MonomialHash h;
	return (h(k.a) * 1000003u) ^ (h(k.v) * 31u) ^ static_cast<std::size_t>(k.n + 4096);
}

FockSpace::FockSpace(FreeFieldContext ctx, int twice_max) : ctx_(ctx), twice_max_(twice_max)
{
	ctx_.validate();
}

FockSpace::Terms FockSpace::gen_mode(Factor const &x, int n, FockMonomial const &v) const
{
	// (d^d g)_(n) = (-1)^d n(n-1)...(n-d+1) g_(n-d), and g_(k) is the mode g_{k+1/2}
	Terms out;
	Rational pre = falling_factorial(n, x.deriv);
	if (is_zero(pre))
		return out;
	if (x.deriv % 2)
		pre = -pre;
	int k = n - x.deriv;
	bool odd = is_odd(x.parity());
	if (k >= 0)
	{
		int sign = 1;
		for (std::size_t i = 0; i < v.size(); ++i)
		{
			int kappa = contraction(x.gen, v[i].gen);
			if (kappa != 0 && v[i].deriv == k)
			{
				FockMonomial rest = v;
				rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(i));
				add_into(out, rest, sign * kappa * pre);
			}
			if (odd && is_odd(v[i].parity()))
				sign = -sign;
		}
		return out;
	}
	Factor created{x.gen, -k - 1};
	auto pos = std::lower_bound(v.begin(), v.end(), created);
	if (odd && pos != v.end() && *pos == created)
		return out;
	int sign = 1;
	if (odd)
		for (auto it = v.begin(); it != pos; ++it)
			if (is_odd(it->parity()))
				sign = -sign;
	FockMonomial m;
	m.reserve(v.size() + 1);
	m.insert(m.end(), v.begin(), pos);
	m.push_back(created);
	m.insert(m.end(), pos, v.end());
	add_into(out, m, sign * pre);
	return out;
}

FockVector FockSpace::mode(Generator g, int k, FockVector const &v) const
{
	FockVector out(ctx_);
	for (auto const &[m, c] : v.terms())
		for (auto const &[r, x] : gen_mode(Factor{g, 0}, k, m))
			out.add(r, c * x);
	return out;
}

FockSpace::Terms const &FockSpace::apply(Monomial const &a, int n, FockMonomial const &v)
{
	Key key{a, n, v};
	if (auto it = cache_.find(key); it != cache_.end())
		return it->second;

	Terms out;
	if (a.empty())
	{
		if (n == -1)
			out.emplace(v, Rational(1));
	}
	else if (a.size() == 1)
		out = gen_mode(a[0], n, v);
	else
	{
		Factor const &x = a[0];
		Monomial rest(a.begin() + 1, a.end());
		int twr = twice_weight(rest), twv = twice_weight(v), twx = x.twice_weight();
		for (int j = 0; 2 * (n + j + 1) <= twr + twv; ++j)
		{
			Terms const &inner = apply(rest, n + j, v);
			for (auto const &[u, c] : inner)
				for (auto const &[w, d] : gen_mode(x, -1 - j, u))
					add_into(out, w, c * d);
		}
		int s = koszul(x.parity(), parity(rest));
		for (int j = 0; 2 * (j + 1) <= twx + twv; ++j)
			for (auto const &[u, c] : gen_mode(x, j, v))
				for (auto const &[w, d] : apply(rest, n - 1 - j, u))
					add_into(out, w, s * c * d);
	}
	return cache_.emplace(std::move(key), std::move(out)).first->second;
}

FockSpace::Terms FockSpace::apply_terms(Monomial const &a, int n, Terms const &v)
{
	Terms out;
	for (auto const &[m, c] : v)
		for (auto const &[w, d] : apply(a, n, m))
			add_into(out, w, c * d);
	return out;
}

FockVector FockSpace::apply(FieldPoly const &a, int n, FockVector const &v)
{
	if (!(a.ctx() == ctx_) || !(v.ctx() == ctx_))
		throw ContextMismatch("mode action across different free-field contexts");
	FockVector out(ctx_);
	for (auto const &[ma, ca] : a.terms())
		for (auto const &[w, d] : apply_terms(ma, n, v.terms()))
			out.add(w, ca * d);
	if (twice_max_ >= 0)
		for (auto const &[m, c] : out.terms())
			if (twice_weight(m) > twice_max_)
				throw ResourceLimit("mode action leaves the truncated Fock space (weight " +
				                    to_string(make_rational(twice_weight(m), 2)) + " > " +
				                    to_string(make_rational(twice_max_, 2)) + ")");
	return out;
}

FockVector mode_action(FieldPoly const &a, int n, FockVector const &v)
{
	FockSpace f(a.ctx());
	return f.apply(a, n, v);
}

FockVector state_of(FieldPoly const &a)
{
	FockVector v(a.ctx());
	for (auto const &[m, c] : a.terms())
	{
		Rational s = c;
		for (auto const &f : m)
			s *= factorial(f.deriv);
		v.add(m, s);
	}
	return v;
}

FieldPoly field_of(FockVector const &v)
{
	FieldPoly a(v.ctx());
	for (auto const &[m, c] : v.terms())
	{
		Rational s = c;
		for (auto const &f : m)
			s /= factorial(f.deriv);
		a.add_monomial(m, s);
	}
	return a;
}

// ---------------------------------------------------------------------------

nlohmann::json Subalgebra::to_json() const
{
	nlohmann::json rows = nlohmann::json::array();
	for (std::size_t w = 0; w < dims.size(); ++w)
		rows.push_back({{"weight", to_string(make_rational(static_cast<long>(w), 2))}, {"dim", dims[w]}});
	return {{"schema", "arcfree.graded_dims/1"},
	        {"ctx", {{"n_bg", ctx.n_bg}, {"n_bc", ctx.n_bc}}},
	        {"max_weight", to_string(make_rational(twice_max, 2))},
	        {"fixed_point_rounds", fixed_point_rounds},
	        {"dims", rows}};
}

std::string Subalgebra::to_csv() const
{
	std::string s = "weight,dim\n";
	for (std::size_t w = 0; w < dims.size(); ++w)
		s += to_string(make_rational(static_cast<long>(w), 2)) + "," + std::to_string(dims[w]) + "\n";
	return s;
}

namespace {

struct ModeTask {
	std::size_t gen;
	int twice_src;
	std::size_t src;
	int n;
};

} // namespace

Subalgebra generate_subalgebra(std::vector<FieldPoly> const &gens, int twice_max, int threads, ResourceCaps const &caps)
{
	if (gens.empty())
		throw std::invalid_argument("subalgebra needs at least one generator");
	FreeFieldContext ctx = gens.front().ctx();
	std::vector<int> gw;
	for (auto const &g : gens)
	{
		if (!(g.ctx() == ctx))
			throw ContextMismatch("generators live in different contexts");
		gw.push_back(twice_weight_of(g, "generator " + g.to_text()));
		if (gw.back() <= 0)
			throw std::invalid_argument("generators must have positive weight");
	}
	GradedBasis fb(ctx, twice_max, caps);
	auto const W = static_cast<std::size_t>(twice_max + 1);
	Subalgebra out{ctx, twice_max, std::vector<std::vector<FockVector>>(W), {}, 0};
	std::vector<EchelonBasis> ech(W);
	out.basis[0].push_back(FockVector::vacuum(ctx));
	ech[0].insert(fb.coordinates(out.basis[0][0]));

	int nt = resolve_threads(threads);
	std::vector<std::unique_ptr<FockSpace>> spaces;
	for (int w = 0; w < nt; ++w)
		spaces.push_back(std::make_unique<FockSpace>(ctx, twice_max));

	// runs tasks in parallel, inserts results in task order; returns the new (weight, index) pairs
	auto run = [&](std::vector<ModeTask> const &tasks) {
		std::vector<FockVector> res(tasks.size());
		parallel_for(tasks.size(), threads, [&](std::size_t i, int worker) {
			auto const &t = tasks[i];
			res[i] = spaces[static_cast<std::size_t>(worker)]->apply(
			    gens[t.gen], t.n, out.basis[static_cast<std::size_t>(t.twice_src)][t.src]);
		});
		std::vector<std::pair<int, std::size_t>> added;
		for (std::size_t i = 0; i < tasks.size(); ++i)
		{
			if (res[i].is_zero())
				continue;
			int tw = *res[i].twice_weight();
			auto uw = static_cast<std::size_t>(tw);
			if (ech[uw].insert(fb.coordinates(res[i])))
			{
				out.basis[uw].push_back(std::move(res[i]));
				added.emplace_back(tw, out.basis[uw].size() - 1);
				check_monomials(caps, out.basis[uw].size(), "subalgebra basis");
			}
		}
		return added;
	};

	// creation sweep, weight by weight
	for (int T = 1; T <= twice_max; ++T)
	{
		std::vector<ModeTask> tasks;
		for (std::size_t g = 0; g < gens.size(); ++g)
			for (int src = 0; src < T; ++src)
			{
				int diff = gw[g] + src - T;
				if (diff % 2 != 0)
					continue;
				int n = diff / 2 - 1;
				if (n > -1)
					continue;
				for (std::size_t i = 0; i < out.basis[static_cast<std::size_t>(src)].size(); ++i)
					tasks.push_back({g, src, i, n});
			}
		run(tasks);
	}

	// closure passes: annihilation modes on everything, then all modes on whatever is new
	std::vector<std::pair<int, std::size_t>> pending;
	for (int w = 0; w <= twice_max; ++w)
		for (std::size_t i = 0; i < out.basis[static_cast<std::size_t>(w)].size(); ++i)
			pending.emplace_back(w, i);
	bool first = true;
	while (!pending.empty())
	{
		++out.fixed_point_rounds;
		std::vector<ModeTask> tasks;
		for (auto [w, i] : pending)
			for (std::size_t g = 0; g < gens.size(); ++g)
			{
				int nmin = first ? 0 : -twice_max - 1;
				for (int n = nmin; 2 * (n + 1) <= gw[g] + w; ++n)
				{
					int res = gw[g] + w - 2 * (n + 1);
					if (res <= twice_max)
						tasks.push_back({g, w, i, n});
				}
			}
		pending = run(tasks);
		first = false;
	}

	for (auto const &b : out.basis)
		out.dims.push_back(b.size());
	return out;
}

std::vector<std::size_t> subalgebra_graded_dims(std::vector<FieldPoly> const &gens, int twice_max, int threads,
                                                ResourceCaps const &caps)
{
	return generate_subalgebra(gens, twice_max, threads, caps).dims;
}

// ---------------------------------------------------------------------------

std::vector<SuperPoly> C2Presentation::all_relations() const
{
	std::vector<SuperPoly> out;
	for (auto const &[d, rels] : relations)
		out.insert(out.end(), rels.begin(), rels.end());
	return out;
}

std::size_t C2Presentation::relation_count() const
{
	std::size_t n = 0;
	for (auto const &[d, rels] : relations)
		n += rels.size();
	return n;
}

nlohmann::json C2Presentation::to_json() const
{
	PolyRing ring(gens);
	nlohmann::json g = nlohmann::json::array();
	for (std::size_t i = 0; i < gens.size(); ++i)
		g.push_back({{"label", gens[i].label},
		             {"parity", std::string(to_string(gens[i].parity))},
		             {"weight", to_string(make_rational(gens[i].twice_weight, 2))},
		             {"field", gen_fields[i].to_text()}});
	nlohmann::json rel = nlohmann::json::object();
	for (auto const &[d, rels] : relations)
	{
		nlohmann::json list = nlohmann::json::array();
		for (auto const &p : rels)
			list.push_back({{"text", ring.to_text(p)}, {"terms", ring.to_json(p)}});
		rel[std::to_string(d)] = list;
	}
	nlohmann::json sq = nlohmann::json::array();
	for (int i : odd_squares)
		sq.push_back(gens[static_cast<std::size_t>(i)].label + "^2");
	auto weights = [](std::vector<std::size_t> const &d) {
		nlohmann::json rows = nlohmann::json::array();
		for (std::size_t w = 0; w < d.size(); ++w)
			rows.push_back({{"weight", to_string(make_rational(static_cast<long>(w), 2))}, {"dim", d[w]}});
		return rows;
	};
	return {{"schema", "arcfree.c2_presentation/1"},
	        {"generators", g},
	        {"relations", rel},
	        {"odd_square_relations", sq},
	        {"dmax", dmax},
	        {"verified_through_weight", to_string(make_rational(twice_weight_max, 2))},
	        {"v_dims", weights(v_dims)},
	        {"c2_dims", weights(c2_dims)},
	        {"rv_dims", weights(rv_dims)},
	        {"hash", hash()}};
}

std::string C2Presentation::hash() const
{
	PolyRing ring(gens);
	nlohmann::json j = nlohmann::json::array();
	for (auto const &g : gens)
		j.push_back({g.label, is_odd(g.parity), g.twice_weight});
	for (auto const &[d, rels] : relations)
		for (auto const &p : rels)
			j.push_back(ring.to_json(p));
	return hex64(stable_hash(j.dump()));
}

C2Presentation c2_presentation(Subalgebra const &v, std::vector<FieldPoly> const &gens,
                               std::vector<std::string> const &labels, int dmax, int twice_weight_max, int threads)
{
	if (labels.size() != gens.size())
		throw std::invalid_argument("one label per generator required");
	if (dmax < 1)
		throw std::invalid_argument("relation degree bound must be >= 1");
	if (v.twice_max < twice_weight_max)
		throw std::invalid_argument("subalgebra was generated through a lower weight than requested");
	FreeFieldContext ctx = v.ctx;
	C2Presentation out;
	out.dmax = dmax;
	out.twice_weight_max = twice_weight_max;
	out.gen_fields = gens;
	int min_tw = std::numeric_limits<int>::max();
	for (std::size_t i = 0; i < gens.size(); ++i)
	{
		auto p = parity(gens[i]);
		int tw = twice_weight_of(gens[i], "generator");
		if (tw <= 0 || !p)
			throw std::invalid_argument("presentation generators must be homogeneous of positive weight");
		out.gens.push_back({labels[i], *p, tw});
		min_tw = std::min(min_tw, tw);
		if (is_odd(*p))
			out.odd_squares.push_back(static_cast<int>(i));
	}
	if (!gens.empty() && dmax * min_tw > twice_weight_max)
		throw std::invalid_argument("relations of degree " + std::to_string(dmax) + " start at weight " +
		                            to_string(make_rational(dmax * min_tw, 2)) + " > maximal weight " +
		                            to_string(make_rational(twice_weight_max, 2)) + "; presentation cannot be certified");

	GradedBasis fb(ctx, twice_weight_max, ResourceCaps{std::size_t(-1), twice_weight_max, dmax});
	auto const W = static_cast<std::size_t>(twice_weight_max + 1);
	int nt = resolve_threads(threads);
	std::vector<std::unique_ptr<FockSpace>> spaces;
	for (int w = 0; w < nt; ++w)
		spaces.push_back(std::make_unique<FockSpace>(ctx, twice_weight_max));

	// fields of the subalgebra basis, used as the left argument of a_(-2)
	std::vector<std::vector<FieldPoly>> fields(W);
	for (std::size_t w = 1; w < W; ++w)
		for (auto const &s : v.basis[w])
			fields[w].push_back(field_of(s));

	std::vector<EchelonBasis> c2(W);
	for (int T = 0; T <= twice_weight_max; ++T)
	{
		struct Pair {
			int wa;
			std::size_t a;
			int wb;
			std::size_t b;
		};
		std::vector<Pair> pairs;
		for (int wa = 1; wa + 2 <= T; ++wa)
		{
			int wb = T - 2 - wa;
			for (std::size_t a = 0; a < v.basis[static_cast<std::size_t>(wa)].size(); ++a)
				for (std::size_t b = 0; b < v.basis[static_cast<std::size_t>(wb)].size(); ++b)
					pairs.push_back({wa, a, wb, b});
		}
		std::vector<FockVector> res(pairs.size());
		parallel_for(pairs.size(), threads, [&](std::size_t i, int worker) {
			auto const &p = pairs[i];
			res[i] = spaces[static_cast<std::size_t>(worker)]->apply(
			    fields[static_cast<std::size_t>(p.wa)][p.a], -2, v.basis[static_cast<std::size_t>(p.wb)][p.b]);
		});
		for (auto &r : res)
			if (!r.is_zero())
				c2[static_cast<std::size_t>(T)].insert(fb.coordinates(r));
		out.v_dims.push_back(v.dims[static_cast<std::size_t>(T)]);
		out.c2_dims.push_back(c2[static_cast<std::size_t>(T)].rank());
		out.rv_dims.push_back(out.v_dims.back() - out.c2_dims.back());
	}

	// relations among the images of generator monomials in R_V
	PolyRing ring(out.gens);
	std::vector<FockVector> gen_states;
	for (auto const &g : gens)
		gen_states.push_back(state_of(g));
	std::map<PolyMonomial, FockVector> states; // X_{i1}(-1) ... X_{id}(-1)|0>
	states.emplace(PolyMonomial{}, FockVector::vacuum(ctx));
	FockSpace &fock = *spaces[0];
	// kernels are computed per (degree, doubled weight) block
	std::map<int, std::vector<SuperPoly>> prev_kernel;
	for (int d = 1; d <= dmax; ++d)
	{
		std::map<int, std::vector<SuperPoly>> kernel_by_weight;
		std::vector<SuperPoly> minimal;
		for (int T = 0; T <= twice_weight_max; ++T)
		{
			std::vector<PolyMonomial> monos;
			for (auto &mu : ring.monomials(T, 0))
				if (static_cast<int>(mu.size()) == d)
					monos.push_back(std::move(mu));
			if (monos.empty())
				continue;
			std::map<PolyMonomial, std::int32_t> idx;
			for (std::size_t i = 0; i < monos.size(); ++i)
				idx.emplace(monos[i], static_cast<std::int32_t>(i));
			std::vector<FockVector> images(monos.size());
			for (std::size_t i = 0; i < monos.size(); ++i)
			{
				auto const &mu = monos[i];
				PolyMonomial tail(mu.begin() + 1, mu.end());
				images[i] = fock.apply(gens[static_cast<std::size_t>(mu.front().gen)], -1, states.at(tail));
			}
			for (std::size_t i = 0; i < monos.size(); ++i)
				states.emplace(monos[i], images[i]);

			auto to_vec = [&](SuperPoly const &p) {
				std::vector<SparseVec::Entry> e;
				for (auto const &[m, c] : p)
					e.emplace_back(idx.at(m), c);
				return SparseVec(std::move(e));
			};
			auto to_poly = [&](SparseVec const &sv) {
				SuperPoly p;
				for (auto const &[i, c] : sv.entries())
					add_term(p, monos[static_cast<std::size_t>(i)], c);
				return p;
			};

			EchelonBasis img(true);
			std::vector<SuperPoly> kernel;
			for (std::size_t i = 0; i < monos.size(); ++i)
			{
				SparseVec r = c2[static_cast<std::size_t>(T)].remainder(fb.coordinates(images[i]));
				if (auto rel = img.insert_or_relation(std::move(r), SparseVec::unit(static_cast<std::int32_t>(i))))
					kernel.push_back(to_poly(*rel));
			}
			EchelonBasis ideal;
			for (std::size_t g = 0; g < out.gens.size(); ++g)
			{
				auto it = prev_kernel.find(T - out.gens[g].twice_weight);
				if (it == prev_kernel.end())
					continue;
				for (auto const &k : it->second)
				{
					auto prod = ring.multiply(PolyMonomial{DiffVar{static_cast<int>(g), 0}}, k);
					if (!prod.empty())
						ideal.insert(to_vec(prod));
				}
			}
			for (auto const &k : kernel)
				if (ideal.insert(to_vec(k)))
					minimal.push_back(k);
			kernel_by_weight[T] = std::move(kernel);
		}
		if (!minimal.empty())
			out.relations[d] = std::move(minimal);
		prev_kernel = std::move(kernel_by_weight);
	}
	return out;
}

C2Presentation c2_presentation(std::vector<FieldPoly> const &gens, std::vector<std::string> const &labels, int dmax,
                               int twice_weight_max, int threads, ResourceCaps const &caps)
{
	auto v = generate_subalgebra(gens, twice_weight_max, threads, caps);
	return c2_presentation(v, gens, labels, dmax, twice_weight_max, threads);
}

// ---------------------------------------------------------------------------

nlohmann::json CrosscheckReport::to_json() const
{
	return {{"check", "ope/fock two-path"},
	        {"products_checked", products_checked},
	        {"ok", ok()},
	        {"failures", failures}};
}

CrosscheckReport ope_fock_crosscheck(FieldPoly const &a, FieldPoly const &b, OpeEngine &engine, FockSpace &fock)
{
	CrosscheckReport rep;
	auto res = engine.ope(a, b);
	int top = 0;
	for (auto const &[m, c] : a.terms())
		for (auto const &[mb, cb] : b.terms())
			top = std::max(top, (twice_weight(m) + twice_weight(mb)) / 2);
	FockVector vb = state_of(b);
	for (auto const &[p, f] : res.poles)
		top = std::max(top, p);
	for (int n = 0; n <= top; ++n)
	{
		FockVector sym = state_of(res.pole(n + 1, a.ctx()));
		FockVector modes = fock.apply(a, n, vb);
		++rep.products_checked;
		if (!(sym == modes))
			rep.failures.push_back("(" + a.to_text() + ")_(" + std::to_string(n) + ") (" + b.to_text() +
			                       "): engine gives " + sym.to_text() + ", modes give " + modes.to_text());
	}
	return rep;
}

CrosscheckReport ope_fock_crosscheck(FieldPoly const &a, FieldPoly const &b)
{
	OpeEngine e(a.ctx());
	FockSpace f(a.ctx());
	return ope_fock_crosscheck(a, b, e, f);
}

} // namespace arcfree
