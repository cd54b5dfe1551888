#include "arcfree/sparse.hpp"

#include <algorithm>

namespace arcfree {

SparseVec::SparseVec(std::vector<Entry> entries)
{
	std::sort(entries.begin(), entries.end(), [](Entry const &a, Entry const &b) { return a.first < b.first; });
	for (auto &e : entries)
	{
		if (!entries_.empty() && entries_.back().first == e.first)
			entries_.back().second += e.second;
		else
			entries_.push_back(std::move(e));
	}
	std::erase_if(entries_, [](Entry const &e) { return is_zero(e.second); });
}

SparseVec SparseVec::unit(std::int32_t col, Rational value)
{
	SparseVec v;
	if (!is_zero(value))
		v.entries_.emplace_back(col, std::move(value));
	return v;
}

Rational SparseVec::at(std::int32_t col) const
{
	auto it = std::lower_bound(entries_.begin(), entries_.end(), col,
	                           [](Entry const &e, std::int32_t c) { return e.first < c; });
	if (it != entries_.end() && it->first == col)
		return it->second;
	return Rational(0);
}

void SparseVec::add_scaled(SparseVec const &other, Rational const &factor)
{
	if (is_zero(factor) || other.empty())
		return;
	std::vector<Entry> out;
	out.reserve(entries_.size() + other.entries_.size());
	auto a = entries_.begin();
	auto b = other.entries_.begin();
	while (a != entries_.end() || b != other.entries_.end())
	{
		if (b == other.entries_.end() || (a != entries_.end() && a->first < b->first))
			out.push_back(std::move(*a++));
		else if (a == entries_.end() || b->first < a->first)
		{
			out.emplace_back(b->first, factor * b->second);
			++b;
		}
		else
		{
			Rational s = a->second + factor * b->second;
			if (!is_zero(s))
				out.emplace_back(a->first, std::move(s));
			++a;
			++b;
		}
	}
	entries_ = std::move(out);
}

void SparseVec::scale(Rational const &factor)
{
	if (is_zero(factor))
	{
		entries_.clear();
		return;
	}
	for (auto &e : entries_)
		e.second *= factor;
}

void EchelonBasis::reduce(std::map<std::int32_t, Rational> &acc, SparseVec *tag, bool full) const
{
	auto it = acc.begin();
	while (it != acc.end())
	{
		auto pr = pivot_row_.find(it->first);
		if (pr == pivot_row_.end())
		{
			if (!full)
				return;
			++it;
			continue;
		}
		Row const &row = rows_[pr->second];
		Rational f = it->second; // pivot entry of row is 1
		for (auto const &[col, val] : row.vec.entries())
		{
			auto [pos, inserted] = acc.try_emplace(col, 0);
			pos->second -= f * val;
			if (is_zero(pos->second) && pos != it)
				acc.erase(pos);
		}
		if (tag && track_)
			tag->add_scaled(row.tag, -f);
		it = acc.erase(it);
	}
}

bool EchelonBasis::insert(SparseVec v, SparseVec tag)
{
	std::map<std::int32_t, Rational> acc;
	for (auto &[c, x] : v.entries())
		acc.emplace(c, x);
	reduce(acc, &tag, false);
	if (acc.empty())
		return false;
	std::vector<SparseVec::Entry> entries(acc.begin(), acc.end());
	SparseVec row(std::move(entries));
	Rational inv = 1 / row.entries().front().second;
	row.scale(inv);
	if (track_)
		tag.scale(inv);
	pivot_row_.emplace(row.entries().front().first, rows_.size());
	rows_.push_back(Row{std::move(row), track_ ? std::move(tag) : SparseVec{}});
	return true;
}

std::optional<SparseVec> EchelonBasis::insert_or_relation(SparseVec v, SparseVec tag)
{
	std::map<std::int32_t, Rational> acc;
	for (auto &[c, x] : v.entries())
		acc.emplace(c, x);
	reduce(acc, &tag, false);
	if (acc.empty())
		return tag;
	std::vector<SparseVec::Entry> entries(acc.begin(), acc.end());
	SparseVec row(std::move(entries));
	Rational inv = 1 / row.entries().front().second;
	row.scale(inv);
	if (track_)
		tag.scale(inv);
	pivot_row_.emplace(row.entries().front().first, rows_.size());
	rows_.push_back(Row{std::move(row), track_ ? std::move(tag) : SparseVec{}});
	return std::nullopt;
}

bool EchelonBasis::contains(SparseVec v) const
{
	std::map<std::int32_t, Rational> acc;
	for (auto &[c, x] : v.entries())
		acc.emplace(c, x);
	reduce(acc, nullptr, false);
	return acc.empty();
}

SparseVec EchelonBasis::remainder(SparseVec v) const
{
	std::map<std::int32_t, Rational> acc;
	for (auto &[c, x] : v.entries())
		acc.emplace(c, x);
	reduce(acc, nullptr, true);
	return SparseVec(std::vector<SparseVec::Entry>(acc.begin(), acc.end()));
}

std::size_t rank_of(std::vector<SparseVec> const &rows)
{
	EchelonBasis e;
	for (auto const &r : rows)
		e.insert(r);
	return e.rank();
}

std::vector<std::size_t> DenseMatQ::rref(std::vector<Rational> &m, std::size_t rows, std::size_t cols,
                                         std::size_t reduce_cols)
{
	std::vector<std::size_t> pivots;
	std::size_t r = 0;
	for (std::size_t c = 0; c < reduce_cols && r < rows; ++c)
	{
		std::size_t p = r;
		while (p < rows && is_zero(m[p * cols + c]))
			++p;
		if (p == rows)
			continue;
		if (p != r)
			for (std::size_t j = 0; j < cols; ++j)
				std::swap(m[p * cols + j], m[r * cols + j]);
		Rational inv = 1 / m[r * cols + c];
		for (std::size_t j = c; j < cols; ++j)
			m[r * cols + j] *= inv;
		for (std::size_t i = 0; i < rows; ++i)
		{
			if (i == r || is_zero(m[i * cols + c]))
				continue;
			Rational f = m[i * cols + c];
			for (std::size_t j = c; j < cols; ++j)
				m[i * cols + j] -= f * m[r * cols + j];
		}
		pivots.push_back(c);
		++r;
	}
	return pivots;
}

std::optional<std::vector<Rational>> DenseMatQ::solve(std::vector<Rational> const &b) const
{
	std::size_t w = cols_ + 1;
	std::vector<Rational> m(rows_ * w);
	for (std::size_t i = 0; i < rows_; ++i)
	{
		for (std::size_t j = 0; j < cols_; ++j)
			m[i * w + j] = (*this)(i, j);
		m[i * w + cols_] = b[i];
	}
	auto pivots = rref(m, rows_, w, cols_);
	for (std::size_t i = pivots.size(); i < rows_; ++i)
		if (!is_zero(m[i * w + cols_]))
			return std::nullopt;
	std::vector<Rational> x(cols_);
	for (std::size_t k = 0; k < pivots.size(); ++k)
		x[pivots[k]] = m[k * w + cols_];
	return x;
}

std::vector<std::vector<Rational>> DenseMatQ::nullspace() const
{
	std::vector<Rational> m = a_;
	auto pivots = rref(m, rows_, cols_, cols_);
	std::vector<bool> is_pivot(cols_, false);
	for (auto p : pivots)
		is_pivot[p] = true;
	std::vector<std::vector<Rational>> basis;
	for (std::size_t f = 0; f < cols_; ++f)
	{
		if (is_pivot[f])
			continue;
		std::vector<Rational> v(cols_);
		v[f] = 1;
		for (std::size_t k = 0; k < pivots.size(); ++k)
			v[pivots[k]] = -m[k * cols_ + f];
		basis.push_back(std::move(v));
	}
	return basis;
}

std::size_t DenseMatQ::rank() const
{
	std::vector<Rational> m = a_;
	return rref(m, rows_, cols_, cols_).size();
}

} // namespace arcfree
