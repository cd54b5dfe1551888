#pragma once

#include "arcfree/limits.hpp"
#include "arcfree/superpoly.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace arcfree {

/// Graded dimensions indexed by doubled weight 0..twice_max.
struct HilbertTable {
	int twice_max = 0;
	std::vector<std::size_t> dims;
	std::string presentation_hash; // empty for tables not tied to a presentation
	int relation_degree_bound = 0;

	std::size_t at_weight(int twice_weight) const { return dims[static_cast<std::size_t>(twice_weight)]; }
	nlohmann::json to_json() const;
	std::string to_csv() const;
};

/// Supercommutative ring presented by generators and relations, with d adjoined freely.
struct DiffPresentation {
	std::vector<PolyGen> gens;
	std::vector<SuperPoly> relations; // in underived or derived variables, weight-homogeneous

	/// Throws std::invalid_argument for inhomogeneous relations or out-of-range variables.
	void validate() const;
	std::string hash() const;
	nlohmann::json to_json() const;
};

/// Free differential superalgebra: generator g of weight w contributes g, dg, d^2 g, ...
/// of weights w, w+1, ...
HilbertTable free_diff_dims(std::vector<PolyGen> const &gens, int twice_max);

struct QuotientDetails {
	HilbertTable table;
	std::vector<std::size_t> monomial_dims; // free algebra, same indexing
	std::vector<std::size_t> ideal_dims;
	bool derivation_stable = true; // d(I_w) lies in I_{w+1} for every computed weight
	std::optional<int> unstable_twice_weight;
};

/// Exact dims of the free differential algebra modulo the differential ideal of the
/// relations: the weight-w ideal piece is spanned by m * d^s(rel) for all monomials m.
QuotientDetails quotient_details(DiffPresentation const &p, int twice_max, int threads = 1,
                                 ResourceCaps const &caps = ResourceCaps::from_env());
HilbertTable quotient_dims(DiffPresentation const &p, int twice_max, int threads = 1,
                           ResourceCaps const &caps = ResourceCaps::from_env());

/// Invariants of Sym(+_j V_j) (x) Ext(+_j U_j) under sp_2n[t], V_j = (C^2n)^m, U_j = (C^2n)^2r
/// at weight j + 1/2: joint kernel of xi t^s for all basis xi and 2s <= weight, restricted
/// to the torus-weight-zero monomials.
HilbertTable jet_invariant_dims(int n, int m, int r, int twice_max, int threads = 1,
                                ResourceCaps const &caps = ResourceCaps::from_env());

struct CertifyOptions {
	int n = 1, m = 1, r = 1;
	int max_weight = 2;        // N (integer)
	int dmax = 0;              // 0: use N
	int delta_max = 0;         // 0: use N
	int dmax_cap = 0;          // 0: use delta_max
	bool with_jet = false;     // also compute the jet-invariant table
	std::optional<std::size_t> drop_relation; // negative control: omit this relation
	int threads = 1;
	ResourceCaps caps = ResourceCaps::from_env();
};

struct FreenessCertificate {
	CertifyOptions options;
	std::vector<std::size_t> dims_v;   // subalgebra, integer weights 0..N
	std::vector<std::size_t> dims_arc; // arc-space quotient
	std::vector<std::size_t> dims_jet; // empty unless requested
	std::vector<std::size_t> rv_dims;  // Zhu algebra, integer weights 0..Delta_max
	bool equal = false;
	std::optional<int> mismatch_weight;
	int dmax_used = 0;
	int delta_max = 0;
	int attempts = 0;
	std::size_t relation_count = 0;
	std::string presentation_hash;
	bool hypothesis_holds = false; // -m/2 + r + n + 1 > 0
	bool derivation_stable = true;
	nlohmann::json presentation;

	std::string verdict() const; // "equal-through-N" or "mismatch-at(w, arc, V)"
	std::string label() const;
	nlohmann::json to_json() const;
};

/// Builds the s2 realization, compares the graded dimensions of the coset subalgebra
/// with those of the arc space of its Zhu algebra through weight N. A weight where the
/// arc dimension is smaller is a pipeline error (std::logic_error); a larger one triggers
/// a retry with a higher relation degree up to the cap before it is reported.
FreenessCertificate certify_classical_freeness(CertifyOptions const &opt);

std::vector<std::size_t> integer_weights(std::vector<std::size_t> const &by_twice, int max_weight);

} // namespace arcfree
