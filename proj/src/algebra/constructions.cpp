#include "cyclex/algebra/constructions.hpp"

#include "cyclex/core/error.hpp"

namespace cyclex {

namespace {

SparseVector shifted(const SparseVector& v, std::size_t offset)
{
    SparseVector out;
    for (const auto& e : v.entries())
        out.push_back(e.index + offset, e.value);
    return out;
}

// x (x) y as a vector in the tensor basis with stride dim(y-space).
SparseVector tensor_vec(const SparseVector& x, const SparseVector& y, std::size_t stride)
{
    SparseVector out;
    for (const auto& a : x.entries())
        for (const auto& b : y.entries())
            out.push_back(a.index * stride + b.index, a.value * b.value);
    return out;
}

} // namespace

Unitalization unitalization(const AlgebraPtr& a)
{
    const std::size_t n = a->dim();
    std::vector<std::string> labels{"1"};
    labels.insert(labels.end(), a->labels().begin(), a->labels().end());
    std::vector<SparseVector> products;
    for (std::size_t i = 0; i <= n; ++i)
        for (std::size_t j = 0; j <= n; ++j) {
            if (i == 0)
                products.push_back(SparseVector::unit(j));
            else if (j == 0)
                products.push_back(SparseVector::unit(i));
            else
                products.push_back(shifted(a->product(i - 1, j - 1), 1));
        }
    auto plus = std::make_shared<const Algebra>(a->name() + "+", std::move(labels), std::move(products),
                                                SparseVector::unit(0), SparseVector::unit(0));
    std::vector<SparseVector> cols;
    for (std::size_t i = 0; i < n; ++i)
        cols.push_back(SparseVector::unit(i + 1));
    AlgebraMorphism inc(a, plus, SparseMatrix(n + 1, std::move(cols)));
    return {plus, std::move(inc)};
}

Algebra tensor(const Algebra& a, const Algebra& b)
{
    const std::size_t da = a.dim(), db = b.dim();
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < da; ++i)
        for (std::size_t j = 0; j < db; ++j)
            labels.push_back(a.labels()[i] + "(x)" + b.labels()[j]);
    std::vector<SparseVector> products;
    products.reserve(da * db * da * db);
    for (std::size_t i = 0; i < da; ++i)
        for (std::size_t j = 0; j < db; ++j)
            for (std::size_t k = 0; k < da; ++k)
                for (std::size_t l = 0; l < db; ++l)
                    products.push_back(tensor_vec(a.product(i, k), b.product(j, l), db));
    std::optional<SparseVector> unit, aug;
    if (a.unit() && b.unit())
        unit = tensor_vec(*a.unit(), *b.unit(), db);
    if (a.augmentation() && b.augmentation())
        aug = tensor_vec(*a.augmentation(), *b.augmentation(), db);
    return Algebra(a.name() + "(x)" + b.name(), std::move(labels), std::move(products), std::move(unit),
                   std::move(aug));
}

Algebra matrix_algebra(const Algebra& a, std::size_t r)
{
    if (r == 0)
        throw ConfigError("matrix_algebra: r must be positive");
    const std::size_t da = a.dim();
    const std::size_t n = r * r * da;
    auto index = [&](std::size_t i, std::size_t j, std::size_t x) { return (i * r + j) * da + x; };
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j)
            for (std::size_t x = 0; x < da; ++x)
                labels.push_back("E" + std::to_string(i + 1) + std::to_string(j + 1) + "(x)" + a.labels()[x]);
    std::vector<SparseVector> products(n * n);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j)
            for (std::size_t x = 0; x < da; ++x)
                for (std::size_t l = 0; l < r; ++l)
                    for (std::size_t y = 0; y < da; ++y) {
                        // (E_ij x)(E_jl y) = E_il xy; other products vanish.
                        products[index(i, j, x) * n + index(j, l, y)] = shifted(a.product(x, y), index(i, l, 0));
                    }
    std::optional<SparseVector> unit;
    if (a.unit()) {
        SparseVector u;
        for (std::size_t i = 0; i < r; ++i)
            u = u + shifted(*a.unit(), index(i, i, 0));
        unit = u;
    }
    return Algebra("M" + std::to_string(r) + "(" + a.name() + ")", std::move(labels), std::move(products),
                   std::move(unit));
}

Algebra direct_product(const Algebra& a, const Algebra& b)
{
    const std::size_t da = a.dim(), db = b.dim(), n = da + db;
    std::vector<std::string> labels;
    for (const auto& l : a.labels())
        labels.push_back("(" + l + ",0)");
    for (const auto& l : b.labels())
        labels.push_back("(0," + l + ")");
    std::vector<SparseVector> products(n * n);
    for (std::size_t i = 0; i < da; ++i)
        for (std::size_t j = 0; j < da; ++j)
            products[i * n + j] = a.product(i, j);
    for (std::size_t i = 0; i < db; ++i)
        for (std::size_t j = 0; j < db; ++j)
            products[(da + i) * n + da + j] = shifted(b.product(i, j), da);
    std::optional<SparseVector> unit, aug;
    if (a.unit() && b.unit())
        unit = *a.unit() + shifted(*b.unit(), da);
    if (a.augmentation())
        aug = a.augmentation();
    return Algebra(a.name() + "x" + b.name(), std::move(labels), std::move(products), std::move(unit),
                   std::move(aug));
}

Ideal augmentation_ideal(const AlgebraPtr& b)
{
    if (!b->augmentation())
        throw NotAugmented("algebra " + b->name() + " has no augmentation");
    const auto& eps = *b->augmentation();
    std::vector<SparseVector> row_cols;
    for (std::size_t j = 0; j < b->dim(); ++j)
        row_cols.push_back(eps.at(j) == 0 ? SparseVector() : SparseVector::unit(0, eps.at(j)));
    Ideal ideal(b, rank_kernel(SparseMatrix(1, std::move(row_cols))).kernel);
    if (!ideal.as_algebra()->nilpotency_order())
        throw IdealNotNilpotent("augmentation ideal of " + b->name() + " is not nilpotent");
    return ideal;
}

Quotient quotient(const Ideal& ideal)
{
    const Algebra& a = ideal.ambient();
    const std::size_t n = a.dim();
    std::vector<bool> is_pivot(n, false);
    for (auto p : ideal.subspace().pivots())
        is_pivot[p] = true;
    std::vector<std::size_t> kept;
    std::vector<long> position(n, -1);
    for (std::size_t k = 0; k < n; ++k)
        if (!is_pivot[k]) {
            position[k] = static_cast<long>(kept.size());
            kept.push_back(k);
        }

    auto project = [&](const SparseVector& v) {
        SparseVector out;
        const SparseVector r = ideal.subspace().reduce(v);
        for (const auto& e : r.entries())
            out.push_back(static_cast<std::size_t>(position[e.index]), e.value);
        return out;
    };

    std::vector<std::string> labels;
    for (auto k : kept)
        labels.push_back(a.labels()[k]);
    std::vector<SparseVector> products;
    for (auto i : kept)
        for (auto j : kept)
            products.push_back(project(a.product(i, j)));
    std::optional<SparseVector> unit;
    if (a.unit())
        unit = project(*a.unit());
    std::optional<SparseVector> aug;
    if (a.augmentation()) {
        // The augmentation descends only if it kills the ideal.
        bool kills = true;
        for (const auto& v : ideal.subspace().basis()) {
            Rational s = 0;
            for (const auto& e : v.entries())
                s += e.value * a.augmentation()->at(e.index);
            kills = kills && s == 0;
        }
        if (kills) {
            SparseVector eps;
            for (std::size_t k = 0; k < kept.size(); ++k)
                eps.push_back(k, a.augmentation()->at(kept[k]));
            aug = eps;
        }
    }
    auto b = std::make_shared<const Algebra>(a.name() + "/I", std::move(labels), std::move(products),
                                             std::move(unit), std::move(aug));

    std::vector<SparseVector> proj_cols, sec_cols;
    for (std::size_t k = 0; k < n; ++k)
        proj_cols.push_back(project(SparseVector::unit(k)));
    for (auto k : kept)
        sec_cols.push_back(SparseVector::unit(k));
    AlgebraMorphism proj(ideal.ambient_ptr(), b, SparseMatrix(kept.size(), std::move(proj_cols)));
    return {b, std::move(proj), SparseMatrix(n, std::move(sec_cols))};
}

Subspace commutator_subspace(const Algebra& a)
{
    Subspace s(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = i + 1; j < a.dim(); ++j)
            s.add(a.product(i, j) - a.product(j, i));
    return s;
}

} // namespace cyclex
