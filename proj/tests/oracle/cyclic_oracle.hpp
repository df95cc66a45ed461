#pragma once

// Definitional dense model of the cyclic bicomplex, written from the face
// maps d_i and the signed rotation directly. Shares no code with the library
// builders; only structure constants are read from the Algebra.

#include "dense_oracle.hpp"

#include "cyclex/algebra/algebra.hpp"

#include <cstddef>
#include <vector>

namespace oracle {

using Tuple = std::vector<std::size_t>;

inline std::size_t power(std::size_t d, int k)
{
    std::size_t r = 1;
    while (k-- > 0)
        r *= d;
    return r;
}

inline Tuple unpack(std::size_t idx, std::size_t d, std::size_t len)
{
    Tuple t(len);
    for (std::size_t k = len; k-- > 0; idx /= d)
        t[k] = idx % d;
    return t;
}

inline std::size_t pack(const Tuple& t, std::size_t d)
{
    std::size_t idx = 0;
    for (auto x : t)
        idx = idx * d + x;
    return idx;
}

/// Structure constant c^k_{ij} of e_i e_j.
inline mpq_class mul(const cyclex::Algebra& a, std::size_t i, std::size_t j, std::size_t k)
{
    return a.product(i, j).at(k);
}

/// Face d_i on A^{(x)p+1} as a dense p x (p+1)-fold matrix, 0 <= i <= p.
inline Dense face(const cyclex::Algebra& a, int p, int i)
{
    const std::size_t d = a.dim();
    const std::size_t len = static_cast<std::size_t>(p) + 1;
    Dense m = zeros(power(d, p), power(d, p + 1));
    for (std::size_t col = 0; col < power(d, p + 1); ++col) {
        const Tuple x = unpack(col, d, len);
        for (std::size_t k = 0; k < d; ++k) {
            Tuple y;
            mpq_class c;
            if (i < p) {
                c = mul(a, x[static_cast<std::size_t>(i)], x[static_cast<std::size_t>(i) + 1], k);
                y = x;
                y[static_cast<std::size_t>(i)] = k;
                y.erase(y.begin() + i + 1);
            } else {
                c = mul(a, x[len - 1], x[0], k);
                y.assign(x.begin(), x.end() - 1);
                y[0] = k;
            }
            if (c != 0)
                m[pack(y, d)][col] += c;
        }
    }
    return m;
}

inline Dense add(const Dense& a, const Dense& b, int sign = 1)
{
    Dense c = a;
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a[i].size(); ++j)
            c[i][j] += sign * b[i][j];
    return c;
}

inline Dense scale(Dense a, int s)
{
    for (auto& row : a)
        for (auto& x : row)
            x *= s;
    return a;
}

/// b' = sum_{i<p} (-1)^i d_i and b = b' + (-1)^p d_p.
inline Dense bprime(const cyclex::Algebra& a, int p)
{
    Dense m = zeros(power(a.dim(), p), power(a.dim(), p + 1));
    for (int i = 0; i < p; ++i)
        m = add(m, face(a, p, i), i % 2 ? -1 : 1);
    return m;
}

inline Dense hochschild(const cyclex::Algebra& a, int p)
{
    return add(bprime(a, p), face(a, p, p), p % 2 ? -1 : 1);
}

/// Signed rotation t(a_0..a_p) = (-1)^p (a_p, a_0, ..., a_{p-1}).
inline Dense rotation(const cyclex::Algebra& a, int p)
{
    const std::size_t d = a.dim(), len = static_cast<std::size_t>(p) + 1;
    Dense m = zeros(power(d, p + 1), power(d, p + 1));
    for (std::size_t col = 0; col < power(d, p + 1); ++col) {
        const Tuple x = unpack(col, d, len);
        Tuple y(len);
        for (std::size_t k = 0; k < len; ++k)
            y[(k + 1) % len] = x[k];
        m[pack(y, d)][col] = p % 2 ? -1 : 1;
    }
    return m;
}

inline Dense identity(std::size_t n)
{
    Dense m = zeros(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m[i][i] = 1;
    return m;
}

struct Total {
    /// Columns present in total degree n.
    std::vector<int> columns;
    std::vector<std::size_t> dims;
    /// diff[n] : Tot_n -> Tot_{n-1}; diff[0] empty.
    std::vector<Dense> diff;
};

/// Total complex on degrees 0..top+1 with `columns` columns (0 for all).
/// Even columns b, odd columns -b'; 1-t out of odd columns and N out of even columns.
inline Total cyclic_total(const cyclex::Algebra& a, int top, int columns)
{
    const std::size_t d = a.dim();
    Total tot;
    auto ncols = [&](int n) { return columns == 0 ? n + 1 : std::min(columns, n + 1); };
    auto dim = [&](int n) {
        std::size_t s = 0;
        for (int c = 0; c < ncols(n); ++c)
            s += power(d, n - c + 1);
        return s;
    };
    auto offset = [&](int n, int c) {
        std::size_t s = 0;
        for (int k = 0; k < c; ++k)
            s += power(d, n - k + 1);
        return s;
    };
    tot.diff.resize(static_cast<std::size_t>(top) + 2);
    for (int n = 0; n <= top + 1; ++n) {
        tot.columns.push_back(ncols(n));
        tot.dims.push_back(dim(n));
    }
    for (int n = 1; n <= top + 1; ++n) {
        Dense m = zeros(dim(n - 1), dim(n));
        for (int c = 0; c < ncols(n); ++c) {
            const int p = n - c;
            auto put = [&](const Dense& blk, int rc) {
                const std::size_t r0 = offset(n - 1, rc), c0 = offset(n, c);
                for (std::size_t i = 0; i < blk.size(); ++i)
                    for (std::size_t j = 0; j < blk[i].size(); ++j)
                        m[r0 + i][c0 + j] += blk[i][j];
            };
            if (p >= 1 && c < ncols(n - 1))
                put(c % 2 ? scale(bprime(a, p), -1) : hochschild(a, p), c);
            if (c >= 1) {
                const Dense t = rotation(a, p);
                if (c % 2) {
                    put(add(identity(t.size()), t, -1), c - 1);
                } else {
                    Dense sum = identity(t.size()), pw = identity(t.size());
                    for (int k = 1; k <= p; ++k) {
                        pw = multiply(t, pw, t.size());
                        sum = add(sum, pw);
                    }
                    put(sum, c - 1);
                }
            }
        }
        tot.diff[static_cast<std::size_t>(n)] = std::move(m);
    }
    return tot;
}

/// Betti numbers of the total complex on total degrees 0..top.
inline std::vector<std::size_t> cyclic_betti(const cyclex::Algebra& a, int top, int columns)
{
    const Total tot = cyclic_total(a, top, columns);
    return betti(tot.dims, tot.diff, static_cast<std::size_t>(top) + 1);
}

/// f^{(x)k} for a dense linear map f : A -> B (rows dim B).
inline Dense tensor_power(const Dense& f, std::size_t da, int k)
{
    const std::size_t db = f.size();
    Dense out = zeros(power(db, k), power(da, k));
    for (std::size_t col = 0; col < power(da, k); ++col) {
        const Tuple src = unpack(col, da, static_cast<std::size_t>(k));
        for (std::size_t row = 0; row < power(db, k); ++row) {
            const Tuple dst = unpack(row, db, static_cast<std::size_t>(k));
            mpq_class v = 1;
            for (std::size_t s = 0; s < src.size() && v != 0; ++s)
                v *= f[dst[s]][src[s]];
            out[row][col] = v;
        }
    }
    return out;
}

/// Homology of ker(Tot(A) -> Tot(B)) for a surjective algebra map f, which is
/// the homotopy fiber. Uses dim ker(d restricted to ker F) = dim - rank [d; F].
inline std::vector<std::size_t> relative_betti(const cyclex::Algebra& a, const cyclex::Algebra& b, const Dense& f,
                                               int top, int columns)
{
    const Total ta = cyclic_total(a, top, columns);
    const Total tb = cyclic_total(b, top, columns);
    std::vector<std::size_t> stacked_rank, f_rank;
    for (int n = 0; n <= top + 1; ++n) {
        Dense fn = zeros(tb.dims[n], ta.dims[n]);
        std::size_t r0 = 0, c0 = 0;
        for (int c = 0; c < ta.columns[n]; ++c) {
            const Dense blk = tensor_power(f, a.dim(), n - c + 1);
            for (std::size_t i = 0; i < blk.size(); ++i)
                for (std::size_t j = 0; j < blk[i].size(); ++j)
                    fn[r0 + i][c0 + j] = blk[i][j];
            r0 += blk.size();
            c0 += blk.empty() ? 0 : blk[0].size();
        }
        f_rank.push_back(dense_rank(fn));
        Dense st = n == 0 ? Dense{} : ta.diff[n];
        st.insert(st.end(), fn.begin(), fn.end());
        stacked_rank.push_back(dense_rank(st));
    }
    std::vector<std::size_t> out;
    for (int n = 0; n <= top; ++n) {
        const std::size_t ker = ta.dims[n] - stacked_rank[n];
        const std::size_t image = stacked_rank[n + 1] - f_rank[n + 1];
        out.push_back(ker - image);
    }
    return out;
}

} // namespace oracle
