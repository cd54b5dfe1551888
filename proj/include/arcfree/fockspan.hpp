#pragma once

#include "arcfree/freefield.hpp"
#include "arcfree/limits.hpp"
#include "arcfree/sparse.hpp"
#include "arcfree/superpoly.hpp"

#include <json.hpp>

#include <unordered_map>
#include <vector>

namespace arcfree {

/// Fock basis monomial. A factor (g, d) stands for the creation mode g_{-1/2-d}; factors
/// are sorted and odd modes never repeat. Weight is the sum of the -mode indices.
using FockMonomial = Monomial;

/// Exact vector in the vacuum Fock module.
class FockVector {
public:
	using Terms = std::map<FockMonomial, Rational>;

	explicit FockVector(FreeFieldContext ctx = {}) : ctx_(ctx) {}
	static FockVector vacuum(FreeFieldContext ctx);

	FreeFieldContext const &ctx() const { return ctx_; }
	Terms const &terms() const { return terms_; }
	bool is_zero() const { return terms_.empty(); }
	void add(FockMonomial const &m, Rational const &c);
	void add(FockVector const &v, Rational const &c);
	/// Doubled weight if homogeneous; nullopt for zero or mixed vectors.
	std::optional<int> twice_weight() const;

	friend bool operator==(FockVector const &, FockVector const &) = default;
	std::string to_text() const; // e.g. "2 beta_1[-1/2] gamma_1[-3/2]|0>"

private:
	FreeFieldContext ctx_;
	Terms terms_;
};

/// Fock monomials of every doubled weight 0..twice_max, each weight sorted by the
/// canonical monomial order (which is also the column order of all reductions).
class GradedBasis {
public:
	GradedBasis(FreeFieldContext ctx, int twice_max, ResourceCaps const &caps = ResourceCaps::from_env());

	FreeFieldContext const &ctx() const { return ctx_; }
	int twice_max() const { return twice_max_; }
	std::vector<FockMonomial> const &at(int twice_weight) const { return by_weight_[static_cast<std::size_t>(twice_weight)]; }
	std::size_t dim(int twice_weight) const { return at(twice_weight).size(); }
	std::vector<std::size_t> dims() const;

	std::int32_t index(FockMonomial const &m) const; // throws if m is not a basis monomial
	SparseVec coordinates(FockVector const &v) const;
	FockVector vector(int twice_weight, SparseVec const &coords) const;

private:
	FreeFieldContext ctx_;
	int twice_max_;
	std::vector<std::vector<FockMonomial>> by_weight_;
	std::vector<std::unordered_map<FockMonomial, std::int32_t, MonomialHash>> index_;
};

GradedBasis enumerate_basis(FreeFieldContext ctx, int twice_max, ResourceCaps const &caps = ResourceCaps::from_env());

/// Coefficients of prod_j (1+q^{j+1/2})^{2 n_bc} / (1-q^{j+1/2})^{2 n_bg}, indexed by doubled weight.
std::vector<std::size_t> fock_character(FreeFieldContext ctx, int twice_max);

/// Mode action of fields on the Fock module, from the mode expansion of normally
/// ordered products: (:x R:)_(n) = sum_j x_(-1-j) R_(n+j) + (-1)^{|x||R|} sum_j R_(n-1-j) x_(j)
/// with beta_(k) = beta_{k+1/2}, [beta_p, gamma_q] = delta_{p+q,0}, {b_p, c_q} = delta_{p+q,0}.
/// Independent of the lambda-bracket engine. Memoised; not thread-safe.
class FockSpace {
public:
	explicit FockSpace(FreeFieldContext ctx, int twice_max = -1);

	FreeFieldContext const &ctx() const { return ctx_; }
	/// a_(n) v. Throws ResourceLimit if the result exceeds the truncation weight.
	FockVector apply(FieldPoly const &a, int n, FockVector const &v);
	/// Single creation/annihilation mode g_{k+1/2} (k = -1 - level for creation).
	FockVector mode(Generator g, int k, FockVector const &v) const;
	void clear_cache() { cache_.clear(); }

private:
	using Terms = FockVector::Terms;
	struct Key {
		Monomial a;
		int n;
		FockMonomial v;
		bool operator==(Key const &) const = default;
	};
	struct KeyHash {
		std::size_t operator()(Key const &k) const noexcept;
	};

	Terms const &apply(Monomial const &a, int n, FockMonomial const &v);
	Terms apply_terms(Monomial const &a, int n, Terms const &v);
	Terms gen_mode(Factor const &x, int n, FockMonomial const &v) const;

	FreeFieldContext ctx_;
	int twice_max_;
	std::unordered_map<Key, Terms, KeyHash> cache_;
};

FockVector mode_action(FieldPoly const &a, int n, FockVector const &v);

/// |a> = a_(-1)|0>. A field factor d^d g corresponds to d! g_{-1/2-d}.
FockVector state_of(FieldPoly const &a);
/// Inverse of state_of.
FieldPoly field_of(FockVector const &v);

struct Subalgebra {
	FreeFieldContext ctx;
	int twice_max = 0;
	std::vector<std::vector<FockVector>> basis; // [doubled weight]
	std::vector<std::size_t> dims;              // [doubled weight]
	int fixed_point_rounds = 0;                 // closure passes after the creation sweep

	nlohmann::json to_json() const;
	std::string to_csv() const;
};

/// Smallest mode-closed subspace through twice_max containing the vacuum and the
/// generators: breadth-first by weight with creation modes, then repeated passes of all
/// non-negative modes until nothing new appears.
Subalgebra generate_subalgebra(std::vector<FieldPoly> const &gens, int twice_max, int threads = 1,
                               ResourceCaps const &caps = ResourceCaps::from_env());
std::vector<std::size_t> subalgebra_graded_dims(std::vector<FieldPoly> const &gens, int twice_max, int threads = 1,
                                                ResourceCaps const &caps = ResourceCaps::from_env());

struct C2Presentation {
	std::vector<PolyGen> gens;           // one per current, weight 1
	std::vector<FieldPoly> gen_fields;
	std::map<int, std::vector<SuperPoly>> relations; // minimal relations by polynomial degree
	std::vector<int> odd_squares;                      // odd generators whose square vanishes
	std::vector<std::size_t> v_dims, c2_dims, rv_dims; // [doubled weight]
	int dmax = 0;
	int twice_weight_max = 0;

	std::vector<SuperPoly> all_relations() const;
	std::size_t relation_count() const;
	nlohmann::json to_json() const;
	/// Hash of the canonical JSON of generators and relations.
	std::string hash() const;
};

/// R_V = V / span{a_(-2) b} on the subalgebra generated by the weight-1 `gens`, and
/// the minimal relations of degree <= dmax among their images. Requires dmax <= Delta_max.
C2Presentation c2_presentation(std::vector<FieldPoly> const &gens, std::vector<std::string> const &labels, int dmax,
                               int twice_weight_max, int threads = 1,
                               ResourceCaps const &caps = ResourceCaps::from_env());
/// Same, reusing an already generated subalgebra (its twice_max must be >= twice_weight_max).
C2Presentation c2_presentation(Subalgebra const &v, std::vector<FieldPoly> const &gens,
                               std::vector<std::string> const &labels, int dmax, int twice_weight_max,
                               int threads = 1);

struct CrosscheckReport {
	std::size_t products_checked = 0;
	std::vector<std::string> failures;

	bool ok() const { return failures.empty(); }
	nlohmann::json to_json() const;
};

/// Compares a_(n) b from the OPE engine with the Fock mode action for every n >= 0 that
/// can be non-zero.
CrosscheckReport ope_fock_crosscheck(FieldPoly const &a, FieldPoly const &b, OpeEngine &engine, FockSpace &fock);
CrosscheckReport ope_fock_crosscheck(FieldPoly const &a, FieldPoly const &b);

} // namespace arcfree
