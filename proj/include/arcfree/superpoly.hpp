#pragma once

#include "arcfree/liesuper.hpp"
#include "arcfree/rational.hpp"

#include <json.hpp>

#include <map>
#include <string>
#include <vector>

namespace arcfree {

/// Generator of a supercommutative polynomial ring; weights are kept doubled.
struct PolyGen {
	std::string label;
	Parity parity = Parity::even;
	int twice_weight = 2;
};

/// d^order applied to generator `gen`; weight grows by 1 per derivative.
struct DiffVar {
	int gen = 0;
	int order = 0;
	auto operator<=>(DiffVar const &) const = default;
};

/// Sorted variable list; odd variables appear at most once.
using PolyMonomial = std::vector<DiffVar>;

using SuperPoly = std::map<PolyMonomial, Rational>;

/// Free supercommutative differential algebra on a list of generators. Products and
/// derivatives use Koszul signs; d is even.
class PolyRing {
public:
	explicit PolyRing(std::vector<PolyGen> gens);

	std::vector<PolyGen> const &gens() const { return gens_; }
	Parity parity(DiffVar v) const { return gens_[static_cast<std::size_t>(v.gen)].parity; }
	int twice_weight(DiffVar v) const { return gens_[static_cast<std::size_t>(v.gen)].twice_weight + 2 * v.order; }
	int twice_weight(PolyMonomial const &m) const;
	Parity parity(PolyMonomial const &m) const;

	/// Canonical product a*b; returns the sign (0 if an odd variable repeats).
	int multiply(PolyMonomial const &a, PolyMonomial const &b, PolyMonomial &out) const;
	SuperPoly multiply(SuperPoly const &a, SuperPoly const &b) const;
	SuperPoly multiply(PolyMonomial const &a, SuperPoly const &b) const;
	SuperPoly derivative(SuperPoly const &p) const;

	/// All monomials of exactly this doubled weight, in increasing order.
	/// With max_order = 0 only underived generators are used.
	std::vector<PolyMonomial> monomials(int twice_weight, int max_order = -1) const;

	std::string to_text(PolyMonomial const &m) const;
	std::string to_text(SuperPoly const &p) const;
	nlohmann::json to_json(SuperPoly const &p) const;

private:
	std::vector<PolyGen> gens_;
};

void add_term(SuperPoly &p, PolyMonomial const &m, Rational const &c);

/// 64-bit FNV-1a of a string; stable across platforms and runs.
std::uint64_t stable_hash(std::string_view s);
std::string hex64(std::uint64_t h);

} // namespace arcfree
