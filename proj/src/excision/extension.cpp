#include "cyclex/excision/excision.hpp"

#include "cyclex/algebra/constructions.hpp"
#include "cyclex/algebra/presets.hpp"
#include "cyclex/core/error.hpp"

namespace cyclex {

namespace {

const AlgebraMorphism& require_surjective(const AlgebraMorphism& f)
{
    if (!f.is_surjective())
        throw MorphismError("extension: " + f.source().name() + " -> " + f.target().name() + " is not surjective");
    return f;
}

Ideal kernel_ideal(const AlgebraMorphism& f) { return Ideal(f.source_ptr(), rank_kernel(f.matrix()).kernel); }

SparseMatrix section_of(const AlgebraMorphism& f)
{
    std::vector<SparseVector> cols;
    for (std::size_t j = 0; j < f.target().dim(); ++j)
        cols.push_back(*solve(f.matrix(), SparseVector::unit(j)));
    return SparseMatrix(f.source().dim(), std::move(cols));
}

AlgebraPtr share(Algebra a) { return std::make_shared<const Algebra>(std::move(a)); }

// "name(arg, arg)" -> name and top-level comma separated arguments.
std::pair<std::string, std::vector<std::string>> split_call(std::string_view text)
{
    std::string s;
    for (char c : text)
        if (c != ' ')
            s += c;
    const auto open = s.find('(');
    if (open == std::string::npos)
        return {s, {}};
    if (s.back() != ')')
        throw ConfigError("extension '" + s + "': missing ')'");
    std::vector<std::string> args;
    int depth = 0;
    std::string cur;
    for (std::size_t k = open + 1; k + 1 < s.size(); ++k) {
        const char c = s[k];
        if (c == ',' && depth == 0) {
            args.push_back(cur);
            cur.clear();
            continue;
        }
        depth += c == '(' ? 1 : c == ')' ? -1 : 0;
        cur += c;
    }
    if (!cur.empty())
        args.push_back(cur);
    return {s.substr(0, open), args};
}

void expect_args(const std::string& name, const std::vector<std::string>& args, std::size_t lo, std::size_t hi)
{
    if (args.size() < lo || args.size() > hi)
        throw ConfigError("extension " + name + ": wrong number of arguments");
}

std::size_t positive(const std::string& name, const std::string& arg)
{
    try {
        const long v = std::stol(arg);
        if (v >= 1 && std::to_string(v) == arg)
            return static_cast<std::size_t>(v);
    } catch (const std::exception&) {
    }
    throw ConfigError("extension " + name + ": expected a positive integer, got '" + arg + "'");
}

// Row vector of the augmentation.
SparseMatrix augmentation_row(const Algebra& b)
{
    if (!b.augmentation())
        throw NotAugmented(b.name() + " has no augmentation");
    std::vector<SparseVector> cols(b.dim());
    for (const auto& e : b.augmentation()->entries())
        cols[e.index] = SparseVector::unit(0, e.value);
    return SparseMatrix(1, std::move(cols));
}

} // namespace

Extension::Extension(std::string name, AlgebraMorphism f)
    : name_(std::move(name)), f_(require_surjective(f)), ideal_(kernel_ideal(f_)), inclusion_(ideal_.inclusion()),
      section_(section_of(f_))
{
}

AlgebraMorphism augmentation_morphism(const AlgebraPtr& b)
{
    return AlgebraMorphism(b, share(ground_field()), augmentation_row(*b), b->is_unital());
}

Extension named_extension(std::string_view expression)
{
    const auto [name, args] = split_call(expression);
    const std::string label(expression);
    const AlgebraPtr q = share(ground_field());

    if (name == "split_product") {
        expect_args(name, args, 0, 0);
        auto a = share(direct_product(ground_field(), ground_field()));
        SparseMatrix m(1, {SparseVector(), SparseVector::unit(0)});
        return Extension(label, AlgebraMorphism(a, q, m, true));
    }
    if (name == "square_zero") {
        expect_args(name, args, 0, 1);
        const std::size_t k = args.empty() ? 1 : positive(name, args[0]);
        return Extension(label, augmentation_morphism(share(square_zero(k))));
    }
    if (name == "dual_numbers" || name == "dual") {
        expect_args(name, args, 0, 0);
        return Extension(label, augmentation_morphism(share(dual_numbers())));
    }
    if (name == "trunc3" || name == "trunc") {
        expect_args(name, args, 0, name == "trunc" ? 1 : 0);
        const std::size_t k = args.empty() ? 3 : positive(name, args[0]);
        return Extension(label, augmentation_morphism(share(truncated_poly(k))));
    }
    if (name == "trunc_step") {
        expect_args(name, args, 0, 1);
        const std::size_t k = args.empty() ? 3 : positive(name, args[0]);
        if (k < 2)
            throw ConfigError("extension trunc_step: k must be at least 2");
        // t^j -> t^j for j < k-1, t^{k-1} -> 0
        std::vector<SparseVector> cols;
        for (std::size_t j = 0; j + 1 < k; ++j)
            cols.push_back(SparseVector::unit(j));
        cols.emplace_back();
        return Extension(label, AlgebraMorphism(share(truncated_poly(k)), share(truncated_poly(k - 1)),
                                                SparseMatrix(k - 1, std::move(cols)), true));
    }
    if (name == "upper_triangular") {
        expect_args(name, args, 0, 0);
        // basis (1,1), (1,2), (2,2) -> (1, 0), 0, (0, 1)
        auto a = share(upper_triangular(2, ground_field()));
        auto b = share(direct_product(ground_field(), ground_field()));
        SparseMatrix m(2, {SparseVector::unit(0), SparseVector(), SparseVector::unit(1)});
        return Extension(label, AlgebraMorphism(a, b, m, true));
    }
    if (name == "matrix_dual" || name == "matrix") {
        std::size_t r = 2;
        AlgebraPtr base = share(dual_numbers());
        if (name == "matrix") {
            expect_args(name, args, 2, 2);
            r = positive(name, args[0]);
            base = preset(args[1]);
        } else {
            expect_args(name, args, 0, 0);
        }
        auto a = share(matrix_algebra(*base, r));
        auto b = share(matrix_algebra(ground_field(), r));
        const SparseMatrix m = kronecker(SparseMatrix::identity(r * r), augmentation_row(*base));
        return Extension(label, AlgebraMorphism(a, b, m, base->is_unital()));
    }
    if (name == "aug") {
        expect_args(name, args, 1, 1);
        return Extension(label, augmentation_morphism(preset(args[0])));
    }
    if (name == "tensor") {
        expect_args(name, args, 2, 2);
        const AlgebraPtr c = preset(args[0]), p = preset(args[1]);
        auto a = share(tensor(*c, *p));
        const SparseMatrix m = kronecker(SparseMatrix::identity(c->dim()), augmentation_row(*p));
        return Extension(label, AlgebraMorphism(a, c, m, c->is_unital() && p->is_unital()));
    }
    if (name == "identity") {
        expect_args(name, args, 1, 1);
        const AlgebraPtr p = preset(args[0]);
        return Extension(label, AlgebraMorphism(p, p, SparseMatrix::identity(p->dim())));
    }
    if (name == "zero") {
        expect_args(name, args, 1, 1);
        const AlgebraPtr p = preset(args[0]);
        auto zero = std::make_shared<const Algebra>("0", std::vector<std::string>{}, std::vector<SparseVector>{});
        return Extension(label, AlgebraMorphism(p, zero, SparseMatrix(0, p->dim())));
    }
    throw ConfigError("unknown extension '" + label + "'");
}

std::vector<std::string> extension_names()
{
    return {"split_product", "square_zero(k)", "dual_numbers", "trunc3", "trunc(k)", "trunc_step(k)", "upper_triangular",
            "matrix_dual", "matrix(r,P)", "aug(P)", "tensor(C,P)", "identity(P)", "zero(P)"};
}

} // namespace cyclex
