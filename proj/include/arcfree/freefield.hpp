#pragma once

#include "arcfree/liesuper.hpp"
#include "arcfree/rational.hpp"

#include <json.hpp>

#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace arcfree {

enum class GenKind : std::uint8_t { beta = 0, gamma = 1, b = 2, c = 3 };

std::string_view to_string(GenKind k);

/// One of beta^i, gamma^i (even) or b^i, c^i (odd); index is 1-based. Weight 1/2.
struct Generator {
	GenKind kind = GenKind::beta;
	int index = 1;

	Parity parity() const { return (kind == GenKind::b || kind == GenKind::c) ? Parity::odd : Parity::even; }
	auto operator<=>(Generator const &) const = default;
};

/// Ranks of the beta-gamma and bc parts.
struct FreeFieldContext {
	int n_bg = 0;
	int n_bc = 0;

	void validate() const;
	bool contains(Generator g) const;
	friend bool operator==(FreeFieldContext const &, FreeFieldContext const &) = default;
};

/// Constant in g(z) h(w) ~ kappa / (z - w).
int contraction(Generator g, Generator h);

/// d^deriv applied to a generator.
struct Factor {
	Generator gen;
	int deriv = 0;

	Parity parity() const { return gen.parity(); }
	int twice_weight() const { return 1 + 2 * deriv; }
	auto operator<=>(Factor const &) const = default;
};

/// Sorted factor list f1 f2 ... fk standing for the nested product :f1 :f2 ... fk::,
/// i.e. the state f1_(-1) f2_(-1) ... fk_(-1)|0>. Derivatives of free generators have
/// mutually (super)commuting (-1)-modes, so sorting with Koszul signs is exact.
/// The empty monomial is the identity field.
using Monomial = std::vector<Factor>;

struct MonomialHash {
	std::size_t operator()(Monomial const &m) const noexcept;
};

int twice_weight(Monomial const &m);
Parity parity(Monomial const &m);

/// Exact linear combination of canonical monomials over a fixed context.
class FieldPoly {
public:
	using Terms = std::map<Monomial, Rational>;

	explicit FieldPoly(FreeFieldContext ctx = {}) : ctx_(ctx) {}

	static FieldPoly identity(FreeFieldContext ctx, Rational coeff = Rational(1));
	static FieldPoly generator(FreeFieldContext ctx, Generator g, int deriv = 0);

	FreeFieldContext const &ctx() const { return ctx_; }
	Terms const &terms() const { return terms_; }
	bool is_zero() const { return terms_.empty(); }
	std::size_t size() const { return terms_.size(); }

	/// Adds coeff * (factors in any order); sorts with Koszul sign, drops repeated odd factors.
	void add_factors(std::vector<Factor> factors, Rational const &coeff);
	/// Adds coeff * m for an already canonical monomial.
	void add_monomial(Monomial const &m, Rational const &coeff);

	Rational coefficient(Monomial const &m) const;
	/// Coefficient of the identity field.
	Rational constant_term() const { return coefficient({}); }

	FieldPoly &operator+=(FieldPoly const &o);
	FieldPoly &operator-=(FieldPoly const &o);
	FieldPoly &operator*=(Rational const &s);
	friend FieldPoly operator+(FieldPoly a, FieldPoly const &b) { return a += b; }
	friend FieldPoly operator-(FieldPoly a, FieldPoly const &b) { return a -= b; }
	friend FieldPoly operator*(Rational const &s, FieldPoly a) { return a *= s; }
	friend bool operator==(FieldPoly const &, FieldPoly const &) = default;

	/// Canonical text, e.g. "1/2 :beta_1 d^1 gamma_1: + -1/2 :d^1 beta_1 gamma_1:".
	std::string to_text() const;
	nlohmann::json to_json() const;
	static FieldPoly from_json(nlohmann::json const &j);

private:
	FreeFieldContext ctx_;
	Terms terms_;
};

std::string to_text(Monomial const &m);

/// Pole order p >= 1 -> the field a_(p-1) b. Empty map = regular OPE.
struct OPEResult {
	std::map<int, FieldPoly> poles;

	bool regular() const { return poles.empty(); }
	FieldPoly pole(int p, FreeFieldContext ctx) const;
	nlohmann::json to_json() const;
	friend bool operator==(OPEResult const &, OPEResult const &) = default;
};

/// d^k / k!
FieldPoly divided_derivative(FieldPoly const &a, int k = 1);
FieldPoly derivative(FieldPoly const &a, int k = 1);

/// Conformal weight if all terms share one (zero polynomial: nullopt).
std::optional<Rational> weight(FieldPoly const &a);
std::optional<Parity> parity(FieldPoly const &a);

/// Symbolic OPE engine: lambda-bracket rewriting (generator base cases, derivation
/// rule, skew-symmetry, non-commutative Wick formula, quasi-associativity). Results
/// on monomial pairs are memoised; an engine is not thread-safe, create one per thread.
class OpeEngine {
public:
	explicit OpeEngine(FreeFieldContext ctx);

	FreeFieldContext const &ctx() const { return ctx_; }

	/// :a b: = a_(-1) b
	FieldPoly normal_order(FieldPoly const &a, FieldPoly const &b);
	/// a_(n) b for n >= 0
	FieldPoly product(FieldPoly const &a, FieldPoly const &b, int n);
	OPEResult ope(FieldPoly const &a, FieldPoly const &b);

	std::size_t cache_size() const { return prod_cache_.size() + nop_cache_.size(); }

private:
	using Poly = FieldPoly::Terms;
	struct PairHash {
		std::size_t operator()(std::pair<Monomial, Monomial> const &p) const noexcept;
	};

	void check(FieldPoly const &a) const;
	Poly prepend(Factor const &x, Poly const &p, Rational const &scale);
	Poly gen_mode(Factor const &x, int n, Monomial const &b);
	Poly divided_derivative(Monomial const &m, int k);
	std::vector<Poly> const &products(Monomial const &a, Monomial const &b);
	Poly const &normal_order(Monomial const &a, Monomial const &b);
	Poly normal_order(Poly const &a, Poly const &b);
	Poly product(Poly const &a, Monomial const &b, int n);

	FreeFieldContext ctx_;
	std::unordered_map<std::pair<Monomial, Monomial>, std::vector<Poly>, PairHash> prod_cache_;
	std::unordered_map<std::pair<Monomial, Monomial>, Poly, PairHash> nop_cache_;
};

FieldPoly normal_order(FieldPoly const &a, FieldPoly const &b);
OPEResult ope(FieldPoly const &a, FieldPoly const &b);

/// L^S = 1/2 sum (:beta d gamma: - :d beta gamma:), central charge -n_bg.
FieldPoly virasoro_S(FreeFieldContext ctx);
/// L^E = 1/2 sum (-:b d c: + :d b c:), central charge n_bc.
FieldPoly virasoro_E(FreeFieldContext ctx);

class VirasoroShapeError : public std::runtime_error {
public:
	VirasoroShapeError(int pole, std::string const &what) : std::runtime_error(what), pole_(pole) {}
	int pole() const { return pole_; }

private:
	int pole_;
};

/// Reads c from the fourth-order pole of L(z)L(w) after checking the Virasoro shape
/// (pole 4 constant, pole 3 zero, pole 2 = 2L, pole 1 = dL, nothing higher).
Rational central_charge(FieldPoly const &L);
Rational central_charge(OpeEngine &engine, FieldPoly const &L);

class ContextMismatch : public std::invalid_argument {
public:
	using std::invalid_argument::invalid_argument;
};

} // namespace arcfree
