#pragma once

#include "arcfree/freefield.hpp"
#include "arcfree/liesuper.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace arcfree {

/// s2: sp_2n x osp(m|2r) on S(nm) x E(2nr); s1: gl_n x sl(r|m) on S(nm) x E(nr).
enum class RealizationFamily { s1, s2 };

std::string_view to_string(RealizationFamily f);
RealizationFamily parse_realization_family(std::string_view s);

/// Currents X^xi for every basis element xi of g, as quadratic free-field polynomials.
struct AffineRealization {
	LieSuperAlgebra g;
	Rational level;
	std::vector<FieldPoly> currents; // indexed like g.basis()
	FreeFieldContext ctx;

	nlohmann::json to_json() const;
};

struct RealizationPair {
	RealizationFamily family = RealizationFamily::s2;
	int n = 0, m = 0, r = 0;
	AffineRealization inner; // sp_2n or gl_n
	AffineRealization coset; // osp(m|2r) or sl(r|m)
	/// Whether the hypotheses under which the coset image is known to be simple hold.
	bool simplicity_asserted = false;

	FreeFieldContext ctx() const { return inner.ctx; }
	nlohmann::json to_json() const;
};

/// Free-field context used by a family at (n, m, r).
FreeFieldContext realization_context(RealizationFamily family, int n, int m, int r);

/// Derives the currents from invariant quadratic pairings: the coefficients are fixed
/// by the zero-mode action on the free generators, then every current pair is checked
/// against the affine OPE at the expected level. Throws std::invalid_argument for bad
/// parameters and std::runtime_error if either step fails.
RealizationPair build_realization(RealizationFamily family, int n, int m, int r, int threads = 1);

struct PairFailure {
	int i = 0, j = 0;
	int pole = 0;
	std::string expected;
	std::string actual;
	std::string difference; // actual - expected
};

struct VerifyReport {
	std::string check;
	std::size_t pairs_checked = 0;
	std::vector<PairFailure> failures;

	bool ok() const { return failures.empty(); }
	nlohmann::json to_json() const;
};

/// For all ordered basis pairs: pole 2 = k (xi_i, xi_j), pole 1 = X^[xi_i, xi_j], nothing higher.
VerifyReport verify_affine_ope(AffineRealization const &a, int threads = 1);

class CriticalLevel : public std::domain_error {
public:
	using std::domain_error::domain_error;
};

/// 1/(2(k+h)) sum_i (-1)^{|i|} :X^{xi_i} X^{xi'_i}:. For gl_n the centre is split off and
/// given its own Heisenberg Sugawara term. Throws CriticalLevel at k = -h (or k = 0 on
/// the gl_n centre).
FieldPoly sugawara(AffineRealization const &a);

/// Central charge expected from the level: k sdim / (k + h), plus 1 for the gl_n centre.
Rational sugawara_central_charge(AffineRealization const &a);

/// Every inner/coset current pair has a regular OPE.
VerifyReport verify_coset(RealizationPair const &p, int threads = 1);

struct EmbeddingReport {
	bool vector_identity = false; // L_inner + L_coset == L^S + L^E
	std::string difference;       // canonical text of the discrepancy
	Rational c_inner, c_coset, c_ambient, c_expected;
	bool charges_match = false;

	bool ok() const { return vector_identity && charges_match; }
	nlohmann::json to_json() const;
};

/// Throws ContextMismatch when inner and coset live in different free-field contexts,
/// CriticalLevel when a Sugawara vector does not exist.
EmbeddingReport verify_conformal_embedding(RealizationPair const &p);

/// L^S + L^E of the context (whichever parts are present).
FieldPoly ambient_virasoro(FreeFieldContext ctx);

} // namespace arcfree
