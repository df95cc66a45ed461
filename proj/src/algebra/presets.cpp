#include "cyclex/algebra/presets.hpp"

#include "cyclex/algebra/constructions.hpp"
#include "cyclex/core/error.hpp"

#include <cctype>
#include <variant>

namespace cyclex {

namespace {

std::vector<SparseVector> zero_table(std::size_t n) { return std::vector<SparseVector>(n * n); }

} // namespace

Algebra ground_field()
{
    return Algebra("Q", {"1"}, {SparseVector::unit(0)}, SparseVector::unit(0), SparseVector::unit(0));
}

Algebra truncated_poly(std::size_t k)
{
    if (k == 0)
        throw ConfigError("truncated_poly: k must be at least 1");
    std::vector<std::string> labels{"1"};
    for (std::size_t i = 1; i < k; ++i)
        labels.push_back(i == 1 ? "t" : "t^" + std::to_string(i));
    auto products = zero_table(k);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; i + j < k; ++j)
            products[i * k + j] = SparseVector::unit(i + j);
    return Algebra("Q[t]/t^" + std::to_string(k), std::move(labels), std::move(products), SparseVector::unit(0),
                   SparseVector::unit(0));
}

Algebra dual_numbers()
{
    Algebra a("Q[e]", {"1", "e"}, {SparseVector::unit(0), SparseVector::unit(1), SparseVector::unit(1), {}},
              SparseVector::unit(0), SparseVector::unit(0));
    return a;
}

Algebra square_zero(std::size_t k)
{
    const std::size_t n = k + 1;
    std::vector<std::string> labels{"1"};
    for (std::size_t i = 1; i <= k; ++i)
        labels.push_back("v" + std::to_string(i));
    auto products = zero_table(n);
    for (std::size_t i = 0; i < n; ++i) {
        products[i] = SparseVector::unit(i);
        products[i * n] = SparseVector::unit(i);
    }
    return Algebra("Q+V" + std::to_string(k), std::move(labels), std::move(products), SparseVector::unit(0),
                   SparseVector::unit(0));
}

Algebra zero_mult(std::size_t k)
{
    std::vector<std::string> labels;
    for (std::size_t i = 1; i <= k; ++i)
        labels.push_back("v" + std::to_string(i));
    return Algebra("V" + std::to_string(k), std::move(labels), zero_table(k));
}

Algebra fat_point()
{
    auto products = zero_table(3);
    for (std::size_t i = 0; i < 3; ++i) {
        products[i] = SparseVector::unit(i);
        products[i * 3] = SparseVector::unit(i);
    }
    return Algebra("Q[x,y]/(x,y)^2", {"1", "x", "y"}, std::move(products), SparseVector::unit(0),
                   SparseVector::unit(0));
}

Algebra upper_triangular(std::size_t n, const Algebra& base)
{
    const std::size_t da = base.dim();
    std::vector<std::pair<std::size_t, std::size_t>> cells;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j)
            cells.emplace_back(i, j);
    std::vector<std::vector<long>> cell_index(n, std::vector<long>(n, -1));
    for (std::size_t c = 0; c < cells.size(); ++c)
        cell_index[cells[c].first][cells[c].second] = static_cast<long>(c);

    const std::size_t dim = cells.size() * da;
    std::vector<std::string> labels;
    for (auto [i, j] : cells)
        for (std::size_t x = 0; x < da; ++x)
            labels.push_back("E" + std::to_string(i + 1) + std::to_string(j + 1) + "(x)" + base.labels()[x]);
    auto products = zero_table(dim);
    for (std::size_t c = 0; c < cells.size(); ++c)
        for (std::size_t d = 0; d < cells.size(); ++d) {
            if (cells[c].second != cells[d].first)
                continue;
            const auto target = static_cast<std::size_t>(cell_index[cells[c].first][cells[d].second]);
            for (std::size_t x = 0; x < da; ++x)
                for (std::size_t y = 0; y < da; ++y) {
                    SparseVector v;
                    for (const auto& e : base.product(x, y).entries())
                        v.push_back(target * da + e.index, e.value);
                    products[(c * da + x) * dim + d * da + y] = std::move(v);
                }
        }
    std::optional<SparseVector> unit;
    if (base.unit()) {
        std::vector<SparseEntry> u;
        for (std::size_t i = 0; i < n; ++i)
            for (const auto& e : base.unit()->entries())
                u.push_back({static_cast<std::size_t>(cell_index[i][i]) * da + e.index, e.value});
        unit = SparseVector::from_unsorted(std::move(u));
    }
    return Algebra("UT" + std::to_string(n) + "(" + base.name() + ")", std::move(labels), std::move(products),
                   std::move(unit));
}

Algebra change_basis(const Algebra& a, const SparseMatrix& p)
{
    const std::size_t n = a.dim();
    if (p.rows() != n || p.cols() != n || rank(p) != n)
        throw ShapeError("change_basis: matrix is not invertible of size dim A");
    auto coords = [&](const SparseVector& w) { return *solve(p, w); };
    std::vector<SparseVector> products;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            products.push_back(coords(a.multiply(p.column(i), p.column(j))));
    std::optional<SparseVector> unit, aug;
    if (a.unit())
        unit = coords(*a.unit());
    if (a.augmentation()) {
        SparseVector eps;
        for (std::size_t j = 0; j < n; ++j) {
            Rational s = 0;
            for (const auto& e : p.column(j).entries())
                s += e.value * a.augmentation()->at(e.index);
            eps.push_back(j, s);
        }
        aug = eps;
    }
    std::vector<std::string> labels;
    for (std::size_t i = 1; i <= n; ++i)
        labels.push_back("f" + std::to_string(i));
    return Algebra(a.name() + "'", std::move(labels), std::move(products), std::move(unit), std::move(aug));
}

namespace {

struct Expr {
    std::string name;
    std::vector<std::variant<long, Expr>> args;
};

class ExprParser {
public:
    explicit ExprParser(std::string_view text) : s_(text) {}

    Expr parse()
    {
        Expr e = expr();
        skip();
        if (pos_ != s_.size())
            fail("unexpected trailing input");
        return e;
    }

private:
    std::string_view s_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& what) const
    {
        throw ConfigError("preset '" + std::string(s_) + "': " + what + " at offset " + std::to_string(pos_));
    }

    void skip()
    {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
    }

    std::string ident()
    {
        skip();
        const std::size_t start = pos_;
        while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
            ++pos_;
        if (start == pos_)
            fail("expected a name");
        return std::string(s_.substr(start, pos_ - start));
    }

    std::variant<long, Expr> arg(bool atom_only)
    {
        skip();
        if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            long v = 0;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
                v = v * 10 + (s_[pos_++] - '0');
            return v;
        }
        if (atom_only)
            return Expr{ident(), {}};
        return expr();
    }

    Expr expr()
    {
        Expr e{ident(), {}};
        skip();
        if (pos_ < s_.size() && s_[pos_] == '(') {
            ++pos_;
            skip();
            if (pos_ < s_.size() && s_[pos_] == ')') {
                ++pos_;
                return e;
            }
            for (;;) {
                e.args.push_back(arg(false));
                skip();
                if (pos_ < s_.size() && s_[pos_] == ',') {
                    ++pos_;
                    continue;
                }
                if (pos_ < s_.size() && s_[pos_] == ')') {
                    ++pos_;
                    break;
                }
                fail("expected ',' or ')'");
            }
        } else {
            while (pos_ < s_.size() && s_[pos_] == ':') {
                ++pos_;
                e.args.push_back(arg(true));
                skip();
            }
        }
        return e;
    }
};

AlgebraPtr build(const Expr& e);

long int_arg(const Expr& e, std::size_t k, long min)
{
    if (k >= e.args.size() || !std::holds_alternative<long>(e.args[k]))
        throw ConfigError("preset " + e.name + ": argument " + std::to_string(k + 1) + " must be an integer");
    const long v = std::get<long>(e.args[k]);
    if (v < min)
        throw ConfigError("preset " + e.name + ": argument " + std::to_string(k + 1) + " must be >= " +
                          std::to_string(min));
    return v;
}

AlgebraPtr algebra_arg(const Expr& e, std::size_t k)
{
    if (k >= e.args.size() || !std::holds_alternative<Expr>(e.args[k]))
        throw ConfigError("preset " + e.name + ": argument " + std::to_string(k + 1) + " must be an algebra");
    return build(std::get<Expr>(e.args[k]));
}

void arity(const Expr& e, std::size_t lo, std::size_t hi)
{
    if (e.args.size() < lo || e.args.size() > hi)
        throw ConfigError("preset " + e.name + ": wrong number of arguments");
}

template <class T>
AlgebraPtr share(T&& a)
{
    return std::make_shared<const Algebra>(std::forward<T>(a));
}

AlgebraPtr build(const Expr& e)
{
    const std::string& n = e.name;
    if (n == "ground" || n == "Q") {
        arity(e, 0, 0);
        return share(ground_field());
    }
    if (n == "dual_numbers" || n == "dual") {
        arity(e, 0, 0);
        return share(dual_numbers());
    }
    if (n == "truncated_poly" || n == "trunc") {
        arity(e, 1, 1);
        return share(truncated_poly(static_cast<std::size_t>(int_arg(e, 0, 1))));
    }
    if (n == "square_zero") {
        arity(e, 0, 1);
        return share(square_zero(e.args.empty() ? 1 : static_cast<std::size_t>(int_arg(e, 0, 0))));
    }
    if (n == "zero_mult") {
        arity(e, 0, 1);
        return share(zero_mult(e.args.empty() ? 1 : static_cast<std::size_t>(int_arg(e, 0, 0))));
    }
    if (n == "fat_point") {
        arity(e, 0, 0);
        return share(fat_point());
    }
    if (n == "matrix") {
        arity(e, 1, 2);
        const auto r = static_cast<std::size_t>(int_arg(e, 0, 1));
        return share(matrix_algebra(e.args.size() == 2 ? *algebra_arg(e, 1) : ground_field(), r));
    }
    if (n == "product") {
        arity(e, 2, 2);
        return share(direct_product(*algebra_arg(e, 0), *algebra_arg(e, 1)));
    }
    if (n == "upper_triangular") {
        arity(e, 1, 2);
        const auto k = static_cast<std::size_t>(int_arg(e, 0, 1));
        return share(upper_triangular(k, e.args.size() == 2 ? *algebra_arg(e, 1) : ground_field()));
    }
    if (n == "aug") {
        arity(e, 1, 1);
        const auto ideal = augmentation_ideal(algebra_arg(e, 0));
        return share(ideal.as_algebra()->renamed("Aug(" + ideal.ambient().name() + ")"));
    }
    if (n == "unitalization") {
        arity(e, 1, 1);
        return unitalization(algebra_arg(e, 0)).algebra;
    }
    throw ConfigError("unknown preset '" + n + "'");
}

} // namespace

AlgebraPtr preset(std::string_view expression) { return build(ExprParser(expression).parse()); }

std::vector<std::string> preset_names()
{
    return {"ground",         "dual_numbers",   "truncated_poly(k)", "square_zero(k)",
            "zero_mult(k)",   "fat_point",      "matrix(r, base)",   "product(A, B)",
            "upper_triangular(n[, base])", "aug(P)", "unitalization(P)"};
}

} // namespace cyclex
