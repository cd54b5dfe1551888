#pragma once

#include "arcfree/rational.hpp"

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace arcfree {

enum class Parity : std::uint8_t { even = 0, odd = 1 };

constexpr Parity operator+(Parity a, Parity b)
{
	return static_cast<Parity>(static_cast<int>(a) ^ static_cast<int>(b));
}

constexpr bool is_odd(Parity p) { return p == Parity::odd; }

/// Koszul sign (-1)^{|a||b|}.
constexpr int koszul(Parity a, Parity b) { return (is_odd(a) && is_odd(b)) ? -1 : 1; }

std::string_view to_string(Parity p);

/// Square matrix acting on C^{p|q}; the first p coordinates are even.
struct SuperMatrix {
	int even_dim = 0;
	int odd_dim = 0;
	std::vector<Rational> entries; // row-major

	SuperMatrix() = default;
	SuperMatrix(int p, int q) : even_dim(p), odd_dim(q), entries(static_cast<std::size_t>((p + q) * (p + q))) {}

	int size() const { return even_dim + odd_dim; }
	Rational &at(int i, int j) { return entries[static_cast<std::size_t>(i * size() + j)]; }
	Rational const &at(int i, int j) const { return entries[static_cast<std::size_t>(i * size() + j)]; }
	Parity coord_parity(int i) const { return i < even_dim ? Parity::even : Parity::odd; }

	/// Parity of a homogeneous matrix; nullopt for the zero matrix or a mixed one.
	std::optional<Parity> parity() const;
	Rational supertrace() const;

	friend SuperMatrix operator*(SuperMatrix const &a, SuperMatrix const &b);
	friend SuperMatrix operator+(SuperMatrix const &a, SuperMatrix const &b);
	friend SuperMatrix operator*(Rational const &s, SuperMatrix const &a);
	friend bool operator==(SuperMatrix const &, SuperMatrix const &) = default;
};

/// Super commutator XY - (-1)^{|X||Y|} YX of homogeneous matrices.
SuperMatrix supercommutator(SuperMatrix const &x, SuperMatrix const &y);

enum class Family { gl, sl, so, sp, sl_super, osp };

std::string_view to_string(Family f);
Family parse_family(std::string_view name);

struct BasisElement {
	int index;
	Parity parity;
	std::string label;
};

struct StructureTerm {
	int index;
	Rational coeff;
};

/// Finite-dimensional Lie superalgebra given by a basis of its defining matrix
/// representation. Structure constants and the invariant form are exact and the
/// object is immutable after construction.
class LieSuperAlgebra {
public:
	std::string const &name() const { return name_; }
	Family family() const { return family_; }
	std::vector<int> const &params() const { return params_; }

	int dim() const { return static_cast<int>(basis_.size()); }
	int dim_even() const { return dim_even_; }
	int dim_odd() const { return dim() - dim_even_; }
	int sdim() const { return dim_even_ - dim_odd(); }

	std::vector<BasisElement> const &basis() const { return basis_; }
	Parity parity(int i) const { return basis_[static_cast<std::size_t>(i)].parity; }
	std::optional<int> find(std::string_view label) const;
	int index_of(std::string_view label) const; // throws if absent

	/// [xi_i, xi_j] as a sparse combination of basis elements.
	std::vector<StructureTerm> const &bracket_terms(int i, int j) const
	{
		return structure_[static_cast<std::size_t>(i * dim() + j)];
	}
	Rational structure(int i, int j, int k) const;

	Rational const &form(int i, int j) const { return form_[static_cast<std::size_t>(i * dim() + j)]; }
	Rational const &h_dual() const { return h_dual_; }

	/// Defining-representation matrix of basis element i.
	SuperMatrix const &matrix(int i) const { return matrices_[static_cast<std::size_t>(i)]; }
	int rep_even_dim() const { return rep_even_; }
	int rep_odd_dim() const { return rep_odd_; }

	/// Coordinates of a matrix in the basis; throws std::domain_error if it is not in the span.
	std::vector<Rational> coordinates(SuperMatrix const &m) const;

	/// Coordinates of a central element when the form is taken on a reductive, non-simple
	/// algebra (gl_n: the identity). Used to split the Sugawara construction.
	std::optional<std::vector<Rational>> const &center() const { return center_; }

	nlohmann::json to_json() const;

	friend LieSuperAlgebra build_algebra(Family family, std::vector<int> const &params);

private:
	LieSuperAlgebra() = default;
	void finalize(Rational const &form_scale);

	std::string name_;
	Family family_ = Family::gl;
	std::vector<int> params_;
	int dim_even_ = 0;
	int rep_even_ = 0, rep_odd_ = 0;
	std::vector<BasisElement> basis_;
	std::vector<SuperMatrix> matrices_;
	std::vector<std::vector<StructureTerm>> structure_;
	std::vector<Rational> form_;
	Rational h_dual_;
	std::optional<std::vector<Rational>> center_;
	std::vector<std::size_t> coord_rows_;     // matrix entries used to read coordinates
	std::vector<Rational> coord_inverse_;     // dim x dim inverse on those entries
};

/// Builds gl(n), sl(n), so(m), sp(n) [= sp_2n], sl_super(p,q) [= sl(p|q)], osp(m,n) [= osp(m|2n)].
///
/// Normalisations: gl, sl, sp use the trace form of the defining representation,
/// so uses half the trace form, sl(p|q) the supertrace, osp(m|2n) minus the
/// supertrace (so the sp_2n block carries the sp_2n form). Basis elements are even
/// first, then odd.
LieSuperAlgebra build_algebra(Family family, std::vector<int> const &params);
LieSuperAlgebra build_algebra(std::string_view family, std::vector<int> const &params);

/// Element of a specific algebra, expanded in its basis.
struct AlgebraVector {
	std::string algebra;
	std::vector<Rational> coeffs;

	std::optional<Parity> parity(LieSuperAlgebra const &g) const;
	bool is_zero() const;
	friend bool operator==(AlgebraVector const &, AlgebraVector const &) = default;
};

AlgebraVector basis_vector(LieSuperAlgebra const &g, int i);
AlgebraVector bracket(LieSuperAlgebra const &g, AlgebraVector const &a, AlgebraVector const &b);
Rational form(LieSuperAlgebra const &g, AlgebraVector const &a, AlgebraVector const &b);

/// xi'_j with (xi_i, xi'_j) = delta_ij. Throws std::domain_error for a degenerate form.
std::vector<AlgebraVector> dual_basis(LieSuperAlgebra const &g);

struct AlgebraCheck {
	std::string name;
	std::size_t checked = 0;
	std::vector<std::string> failures; // first few offending index tuples

	bool ok() const { return failures.empty(); }
};

AlgebraCheck check_skew_symmetry(LieSuperAlgebra const &g);
AlgebraCheck check_jacobi(LieSuperAlgebra const &g);
AlgebraCheck check_invariance(LieSuperAlgebra const &g);
AlgebraCheck check_form_even(LieSuperAlgebra const &g);
AlgebraCheck check_form_supersymmetric(LieSuperAlgebra const &g);
/// Defining matrices preserve the bilinear form they were built from (so, sp, osp only).
AlgebraCheck check_preserves_defining_form(LieSuperAlgebra const &g);

/// If the quadratic Casimir acts on the adjoint representation as a scalar, returns it.
std::optional<Rational> adjoint_casimir_eigenvalue(LieSuperAlgebra const &g);

} // namespace arcfree
