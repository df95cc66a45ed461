#include "cyclex/core/sparse.hpp"

#include "cyclex/core/error.hpp"

#include <algorithm>
#include <stdexcept>

namespace cyclex {

Rational parse_rational(std::string_view text)
{
    if (text.empty())
        throw std::invalid_argument("empty rational");
    std::string s(text);
    if (s.front() == '+')
        s.erase(0, 1);
    auto digits = [](std::string_view part, bool allow_sign) {
        if (part.empty())
            return false;
        std::size_t start = 0;
        if (allow_sign && part[0] == '-')
            start = 1;
        if (start == part.size())
            return false;
        return std::all_of(part.begin() + start, part.end(), [](char c) { return c >= '0' && c <= '9'; });
    };
    const auto slash = s.find('/');
    if (slash == std::string::npos) {
        if (!digits(s, true))
            throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
        return Rational(Integer(s));
    }
    const std::string num = s.substr(0, slash);
    const std::string den = s.substr(slash + 1);
    if (!digits(num, true) || !digits(den, false))
        throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
    Integer d(den);
    if (d == 0)
        throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    Rational q(Integer(num), d);
    q.canonicalize();
    return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

// --- SparseVector -----------------------------------------------------------

SparseVector SparseVector::from_unsorted(std::vector<SparseEntry> entries)
{
    std::sort(entries.begin(), entries.end(),
              [](const SparseEntry& a, const SparseEntry& b) { return a.index < b.index; });
    SparseVector v;
    v.entries_.reserve(entries.size());
    for (auto& e : entries) {
        if (!v.entries_.empty() && v.entries_.back().index == e.index) {
            v.entries_.back().value += e.value;
        } else {
            if (!v.entries_.empty() && is_zero(v.entries_.back().value))
                v.entries_.pop_back();
            v.entries_.push_back(std::move(e));
        }
    }
    if (!v.entries_.empty() && is_zero(v.entries_.back().value))
        v.entries_.pop_back();
    return v;
}

SparseVector SparseVector::unit(std::size_t index, const Rational& value)
{
    SparseVector v;
    v.push_back(index, value);
    return v;
}

SparseVector SparseVector::from_dense(const std::vector<Rational>& dense)
{
    SparseVector v;
    for (std::size_t i = 0; i < dense.size(); ++i)
        v.push_back(i, dense[i]);
    return v;
}

Rational SparseVector::at(std::size_t index) const
{
    auto it = std::lower_bound(entries_.begin(), entries_.end(), index,
                               [](const SparseEntry& e, std::size_t i) { return e.index < i; });
    if (it != entries_.end() && it->index == index)
        return it->value;
    return 0;
}

void SparseVector::axpy(const Rational& alpha, const SparseVector& x)
{
    if (is_zero(alpha) || x.empty())
        return;
    std::vector<SparseEntry> out;
    out.reserve(entries_.size() + x.entries_.size());
    auto a = entries_.begin();
    auto b = x.entries_.begin();
    while (a != entries_.end() || b != x.entries_.end()) {
        if (b == x.entries_.end() || (a != entries_.end() && a->index < b->index)) {
            out.push_back(std::move(*a));
            ++a;
        } else if (a == entries_.end() || b->index < a->index) {
            out.push_back({b->index, alpha * b->value});
            ++b;
        } else {
            Rational sum = a->value + alpha * b->value;
            if (!is_zero(sum))
                out.push_back({a->index, std::move(sum)});
            ++a;
            ++b;
        }
    }
    entries_ = std::move(out);
}

SparseVector SparseVector::scaled(const Rational& alpha) const
{
    SparseVector v;
    if (is_zero(alpha))
        return v;
    v.entries_.reserve(entries_.size());
    for (const auto& e : entries_)
        v.entries_.push_back({e.index, alpha * e.value});
    return v;
}

void SparseVector::push_back(std::size_t index, const Rational& value)
{
    if (is_zero(value))
        return;
    if (!entries_.empty() && entries_.back().index >= index)
        throw std::logic_error("SparseVector::push_back: indices must increase");
    entries_.push_back({index, value});
}

std::vector<Rational> SparseVector::to_dense(std::size_t length) const
{
    std::vector<Rational> dense(length);
    for (const auto& e : entries_)
        dense.at(e.index) = e.value;
    return dense;
}

SparseVector operator+(const SparseVector& a, const SparseVector& b)
{
    SparseVector r = a;
    r.axpy(1, b);
    return r;
}

SparseVector operator-(const SparseVector& a, const SparseVector& b)
{
    SparseVector r = a;
    r.axpy(-1, b);
    return r;
}

// --- SparseMatrix -----------------------------------------------------------

SparseMatrix::SparseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), columns_(cols) {}

SparseMatrix::SparseMatrix(std::size_t rows, std::vector<SparseVector> columns)
    : rows_(rows), columns_(std::move(columns))
{
    for (const auto& c : columns_)
        if (c.extent() > rows_)
            throw ShapeError("sparse column has row index " + std::to_string(c.extent() - 1) +
                             " beyond " + std::to_string(rows_) + " rows");
}

SparseMatrix SparseMatrix::identity(std::size_t n)
{
    SparseMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m.columns_[i] = SparseVector::unit(i);
    return m;
}

SparseMatrix SparseMatrix::from_dense(const std::vector<std::vector<Rational>>& rows)
{
    const std::size_t r = rows.size();
    const std::size_t c = r == 0 ? 0 : rows[0].size();
    SparseMatrix m(r, c);
    for (std::size_t j = 0; j < c; ++j) {
        SparseVector col;
        for (std::size_t i = 0; i < r; ++i)
            col.push_back(i, rows[i].at(j));
        m.columns_[j] = std::move(col);
    }
    return m;
}

void SparseMatrix::set_column(std::size_t j, SparseVector v)
{
    if (v.extent() > rows_)
        throw ShapeError("set_column: row index out of range");
    columns_.at(j) = std::move(v);
}

std::size_t SparseMatrix::nnz() const
{
    std::size_t n = 0;
    for (const auto& c : columns_)
        n += c.nnz();
    return n;
}

bool SparseMatrix::is_zero() const
{
    return std::all_of(columns_.begin(), columns_.end(), [](const SparseVector& c) { return c.empty(); });
}

SparseMatrix SparseMatrix::transpose() const
{
    std::vector<std::vector<SparseEntry>> rows(rows_);
    for (std::size_t j = 0; j < columns_.size(); ++j)
        for (const auto& e : columns_[j].entries())
            rows[e.index].push_back({j, e.value});
    SparseMatrix t(columns_.size(), rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        SparseVector v;
        for (auto& e : rows[i])
            v.push_back(e.index, e.value);
        t.columns_[i] = std::move(v);
    }
    return t;
}

SparseMatrix SparseMatrix::scaled(const Rational& alpha) const
{
    SparseMatrix m(rows_, columns_.size());
    for (std::size_t j = 0; j < columns_.size(); ++j)
        m.columns_[j] = columns_[j].scaled(alpha);
    return m;
}

SparseVector SparseMatrix::apply(const SparseVector& v) const
{
    std::vector<SparseEntry> acc;
    for (const auto& e : v.entries()) {
        if (e.index >= columns_.size())
            throw ShapeError("apply: vector longer than matrix width");
        for (const auto& c : columns_[e.index].entries())
            acc.push_back({c.index, e.value * c.value});
    }
    return SparseVector::from_unsorted(std::move(acc));
}

std::vector<std::vector<Rational>> SparseMatrix::to_dense() const
{
    std::vector<std::vector<Rational>> d(rows_, std::vector<Rational>(columns_.size()));
    for (std::size_t j = 0; j < columns_.size(); ++j)
        for (const auto& e : columns_[j].entries())
            d[e.index][j] = e.value;
    return d;
}

SparseMatrix SparseMatrix::select_columns(const std::vector<std::size_t>& which) const
{
    SparseMatrix m(rows_, which.size());
    for (std::size_t k = 0; k < which.size(); ++k)
        m.columns_[k] = columns_.at(which[k]);
    return m;
}

SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b)
{
    if (a.cols() != b.rows())
        throw ShapeError("matrix product: " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                         " times " + std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
    std::vector<SparseVector> out(b.cols());
    const auto n = static_cast<std::ptrdiff_t>(b.cols());
#pragma omp parallel for schedule(dynamic, 16)
    for (std::ptrdiff_t j = 0; j < n; ++j)
        out[j] = a.apply(b.column(j));
    return SparseMatrix(a.rows(), std::move(out));
}

SparseMatrix operator+(const SparseMatrix& a, const SparseMatrix& b)
{
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw ShapeError("matrix sum: shape mismatch");
    std::vector<SparseVector> out(a.cols());
    for (std::size_t j = 0; j < a.cols(); ++j)
        out[j] = a.column(j) + b.column(j);
    return SparseMatrix(a.rows(), std::move(out));
}

SparseMatrix operator-(const SparseMatrix& a, const SparseMatrix& b)
{
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw ShapeError("matrix difference: shape mismatch");
    std::vector<SparseVector> out(a.cols());
    for (std::size_t j = 0; j < a.cols(); ++j)
        out[j] = a.column(j) - b.column(j);
    return SparseMatrix(a.rows(), std::move(out));
}

SparseMatrix operator-(const SparseMatrix& a) { return a.scaled(-1); }

SparseMatrix kronecker(const SparseMatrix& a, const SparseMatrix& b)
{
    const std::size_t rows = a.rows() * b.rows();
    std::vector<SparseVector> out(a.cols() * b.cols());
    for (std::size_t ja = 0; ja < a.cols(); ++ja)
        for (std::size_t jb = 0; jb < b.cols(); ++jb) {
            SparseVector col;
            for (const auto& ea : a.column(ja).entries())
                for (const auto& eb : b.column(jb).entries())
                    col.push_back(ea.index * b.rows() + eb.index, ea.value * eb.value);
            out[ja * b.cols() + jb] = std::move(col);
        }
    return SparseMatrix(rows, std::move(out));
}

SparseMatrix hstack(const SparseMatrix& a, const SparseMatrix& b)
{
    if (a.rows() != b.rows())
        throw ShapeError("hstack: row mismatch");
    std::vector<SparseVector> out = a.columns();
    out.insert(out.end(), b.columns().begin(), b.columns().end());
    return SparseMatrix(a.rows(), std::move(out));
}

// --- BlockMatrix ------------------------------------------------------------

BlockMatrix::BlockMatrix(std::vector<std::size_t> row_sizes, std::vector<std::size_t> col_sizes)
    : row_sizes_(std::move(row_sizes)), col_sizes_(std::move(col_sizes)),
      blocks_(row_sizes_.size(), std::vector<SparseMatrix>(col_sizes_.size())),
      present_(row_sizes_.size(), std::vector<bool>(col_sizes_.size(), false))
{
    row_offsets_.assign(row_sizes_.size() + 1, 0);
    for (std::size_t i = 0; i < row_sizes_.size(); ++i)
        row_offsets_[i + 1] = row_offsets_[i] + row_sizes_[i];
    col_offsets_.assign(col_sizes_.size() + 1, 0);
    for (std::size_t j = 0; j < col_sizes_.size(); ++j)
        col_offsets_[j + 1] = col_offsets_[j] + col_sizes_[j];
}

void BlockMatrix::set(std::size_t block_row, std::size_t block_col, const SparseMatrix& block)
{
    if (block.rows() != row_sizes_.at(block_row) || block.cols() != col_sizes_.at(block_col))
        throw ShapeError("BlockMatrix::set: block (" + std::to_string(block_row) + "," +
                         std::to_string(block_col) + ") has shape " + std::to_string(block.rows()) + "x" +
                         std::to_string(block.cols()) + ", expected " + std::to_string(row_sizes_[block_row]) +
                         "x" + std::to_string(col_sizes_[block_col]));
    blocks_[block_row][block_col] = block;
    present_[block_row][block_col] = true;
}

SparseMatrix BlockMatrix::assemble() const
{
    std::vector<SparseVector> out(col_offsets_.back());
    for (std::size_t bj = 0; bj < col_sizes_.size(); ++bj)
        for (std::size_t j = 0; j < col_sizes_[bj]; ++j) {
            SparseVector col;
            for (std::size_t bi = 0; bi < row_sizes_.size(); ++bi) {
                if (!present_[bi][bj])
                    continue;
                for (const auto& e : blocks_[bi][bj].column(j).entries())
                    col.push_back(row_offsets_[bi] + e.index, e.value);
            }
            out[col_offsets_[bj] + j] = std::move(col);
        }
    return SparseMatrix(row_offsets_.back(), std::move(out));
}

} // namespace cyclex
