#pragma once

#include "arcfree/rational.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace arcfree {

/// Sparse exact vector: strictly increasing column indices, no stored zeros.
class SparseVec {
public:
	using Entry = std::pair<std::int32_t, Rational>;

	SparseVec() = default;
	explicit SparseVec(std::vector<Entry> entries); // sorts and merges

	static SparseVec unit(std::int32_t col, Rational value = Rational(1));

	bool empty() const { return entries_.empty(); }
	std::size_t nnz() const { return entries_.size(); }
	std::vector<Entry> const &entries() const { return entries_; }

	Rational at(std::int32_t col) const;

	/// this += factor * other
	void add_scaled(SparseVec const &other, Rational const &factor);
	void scale(Rational const &factor);

	friend bool operator==(SparseVec const &, SparseVec const &) = default;

private:
	std::vector<Entry> entries_;
};

/// Incrementally built row-echelon basis over Q.
///
/// Each stored row has a distinct pivot (its first column) normalised to 1. When
/// tracking is on, every row also carries the combination of inserted vectors it
/// came from, so a vector reducing to zero yields a kernel element.
class EchelonBasis {
public:
	explicit EchelonBasis(bool track_history = false) : track_(track_history) {}

	/// Reduces v; returns true and stores it if independent of the current rows.
	/// `tag` is the history label of v (ignored unless tracking).
	bool insert(SparseVec v, SparseVec tag = {});

	/// Like insert, but returns the history combination when v is dependent.
	std::optional<SparseVec> insert_or_relation(SparseVec v, SparseVec tag);

	/// True if v lies in the span.
	bool contains(SparseVec v) const;

	/// Fully reduced remainder of v (zero iff v is in the span).
	SparseVec remainder(SparseVec v) const;

	std::size_t rank() const { return rows_.size(); }

private:
	struct Row {
		SparseVec vec;
		SparseVec tag;
	};
	// reduce in place; stops at the first entry without a pivot unless full is set
	void reduce(std::map<std::int32_t, Rational> &acc, SparseVec *tag, bool full) const;

	bool track_;
	std::vector<Row> rows_;
	std::map<std::int32_t, std::size_t> pivot_row_;
};

/// Exact rank of a list of sparse vectors.
std::size_t rank_of(std::vector<SparseVec> const &rows);

/// Dense exact matrix with reduced row echelon utilities; used for small systems.
class DenseMatQ {
public:
	DenseMatQ(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

	std::size_t rows() const { return rows_; }
	std::size_t cols() const { return cols_; }
	Rational &operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
	Rational const &operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

	/// Solves A x = b. Returns nullopt if inconsistent; free variables are set to zero.
	std::optional<std::vector<Rational>> solve(std::vector<Rational> const &b) const;

	/// Basis of the right null space.
	std::vector<std::vector<Rational>> nullspace() const;

	std::size_t rank() const;

private:
	// rref of [A | extra columns]; returns pivot columns
	static std::vector<std::size_t> rref(std::vector<Rational> &m, std::size_t rows, std::size_t cols,
	                                     std::size_t reduce_cols);

	std::size_t rows_, cols_;
	std::vector<Rational> a_;
};

} // namespace arcfree
