#include "arcfree/superpoly.hpp"

#include <algorithm>
#include <cstdio>
#include <functional>

namespace arcfree {

void add_term(SuperPoly &p, PolyMonomial const &m, Rational const &c)
{
	if (is_zero(c))
		return;
	auto [it, inserted] = p.try_emplace(m, c);
	if (!inserted)
	{
		it->second += c;
		if (is_zero(it->second))
			p.erase(it);
	}
}

PolyRing::PolyRing(std::vector<PolyGen> gens) : gens_(std::move(gens))
{
	for (auto const &g : gens_)
		if (g.twice_weight <= 0)
			throw std::invalid_argument("generator " + g.label + " must have positive weight");
}

int PolyRing::twice_weight(PolyMonomial const &m) const
{
	int w = 0;
	for (auto v : m)
		w += twice_weight(v);
	return w;
}

Parity PolyRing::parity(PolyMonomial const &m) const
{
	Parity p = Parity::even;
	for (auto v : m)
		p = p + parity(v);
	return p;
}

int PolyRing::multiply(PolyMonomial const &a, PolyMonomial const &b, PolyMonomial &out) const
{
	out.clear();
	out.reserve(a.size() + b.size());
	int odd_left_in_a = 0;
	for (auto v : a)
		if (is_odd(parity(v)))
			++odd_left_in_a;
	int sign = 1;
	std::size_t i = 0, j = 0;
	while (i < a.size() || j < b.size())
	{
		if (j == b.size() || (i < a.size() && a[i] < b[j]))
		{
			if (is_odd(parity(a[i])))
				--odd_left_in_a;
			out.push_back(a[i++]);
		}
		else if (i < a.size() && a[i] == b[j] && is_odd(parity(a[i])))
			return 0;
		else
		{
			// b[j] moves left past the odd variables of a not yet placed
			if (is_odd(parity(b[j])) && odd_left_in_a % 2)
				sign = -sign;
			out.push_back(b[j++]);
		}
	}
	return sign;
}

SuperPoly PolyRing::multiply(PolyMonomial const &a, SuperPoly const &b) const
{
	SuperPoly out;
	PolyMonomial m;
	for (auto const &[mb, cb] : b)
		if (int s = multiply(a, mb, m))
			add_term(out, m, s * cb);
	return out;
}

SuperPoly PolyRing::multiply(SuperPoly const &a, SuperPoly const &b) const
{
	SuperPoly out;
	PolyMonomial m;
	for (auto const &[ma, ca] : a)
		for (auto const &[mb, cb] : b)
			if (int s = multiply(ma, mb, m))
				add_term(out, m, s * ca * cb);
	return out;
}

SuperPoly PolyRing::derivative(SuperPoly const &p) const
{
	SuperPoly out;
	for (auto const &[m, c] : p)
		for (std::size_t i = 0; i < m.size(); ++i)
		{
			PolyMonomial rest = m;
			DiffVar v = rest[i];
			rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(i));
			// v sat after the odd variables before position i; move it back to the front first
			int s = 1;
			if (is_odd(parity(v)))
				for (std::size_t k = 0; k < i; ++k)
					if (is_odd(parity(m[k])))
						s = -s;
			++v.order;
			PolyMonomial prod;
			if (int t = multiply({v}, rest, prod))
				add_term(out, prod, s * t * c);
		}
	return out;
}

std::vector<PolyMonomial> PolyRing::monomials(int twice_weight, int max_order) const
{
	std::vector<DiffVar> vars;
	for (int g = 0; g < static_cast<int>(gens_.size()); ++g)
		for (int o = 0; max_order < 0 || o <= max_order; ++o)
		{
			DiffVar v{g, o};
			if (this->twice_weight(v) > twice_weight)
				break;
			vars.push_back(v);
		}
	std::sort(vars.begin(), vars.end());
	std::vector<PolyMonomial> out;
	PolyMonomial cur;
	std::function<void(std::size_t, int)> rec = [&](std::size_t start, int left) {
		if (left == 0)
		{
			out.push_back(cur);
			return;
		}
		for (std::size_t k = start; k < vars.size(); ++k)
		{
			int w = this->twice_weight(vars[k]);
			if (w > left)
				continue;
			cur.push_back(vars[k]);
			rec(is_odd(parity(vars[k])) ? k + 1 : k, left - w);
			cur.pop_back();
		}
	};
	rec(0, twice_weight);
	std::sort(out.begin(), out.end());
	return out;
}

std::string PolyRing::to_text(PolyMonomial const &m) const
{
	if (m.empty())
		return "1";
	std::string s;
	for (std::size_t i = 0; i < m.size(); ++i)
	{
		if (i)
			s += '*';
		if (m[i].order > 0)
			s += "d^" + std::to_string(m[i].order) + " ";
		s += gens_[static_cast<std::size_t>(m[i].gen)].label;
	}
	return s;
}

std::string PolyRing::to_text(SuperPoly const &p) const
{
	if (p.empty())
		return "0";
	std::string out;
	for (auto const &[m, c] : p)
	{
		if (!out.empty())
			out += " + ";
		if (c == 1 && !m.empty())
			out += to_text(m);
		else if (m.empty())
			out += to_string(c);
		else
			out += to_string(c) + " " + to_text(m);
	}
	return out;
}

nlohmann::json PolyRing::to_json(SuperPoly const &p) const
{
	nlohmann::json terms = nlohmann::json::array();
	for (auto const &[m, c] : p)
	{
		nlohmann::json vars = nlohmann::json::array();
		for (auto v : m)
			vars.push_back({v.gen, v.order});
		terms.push_back({{"vars", vars}, {"coeff", to_string(c)}});
	}
	return terms;
}

std::uint64_t stable_hash(std::string_view s)
{
	std::uint64_t h = 14695981039346656037ull;
	for (unsigned char ch : s)
	{
		h ^= ch;
		h *= 1099511628211ull;
	}
	return h;
}

std::string hex64(std::uint64_t h)
{
	char buf[17];
	std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
	return buf;
}

} // namespace arcfree
