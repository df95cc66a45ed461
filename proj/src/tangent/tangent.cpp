#include "cyclex/tangent/tangent.hpp"

#include "cyclex/algebra/constructions.hpp"
#include "cyclex/algebra/presets.hpp"
#include "cyclex/core/error.hpp"
#include "cyclex/hochschild/cyclic.hpp"

#include <random>

namespace cyclex {

namespace {

// sum_{m>=1} coeff(m) x^m; x must be nilpotent.
template <class Coeff>
SparseVector nil_series(const Algebra& a, const SparseVector& x, Coeff coeff)
{
    SparseVector sum, power = x;
    for (std::size_t m = 1; !power.empty(); ++m) {
        if (m > a.dim() + 1)
            throw NotNilpotent("element of " + a.name() + " is not nilpotent");
        sum.axpy(coeff(m), power);
        power = a.multiply(power, x);
    }
    return sum;
}

struct Setting {
    AlgebraPtr mat;
    std::size_t r, da;
    /// Basis of M_r(I) inside M_r(A).
    std::vector<SparseVector> ideal_basis;
    Subspace commutators;
    Subspace quotient_commutators;
};

Setting make_setting(const Extension& ext, std::size_t r)
{
    if (r == 0)
        throw ConfigError("rank r must be at least 1");
    if (ext.ideal().dim() > 0 && !ext.ideal_algebra()->nilpotency_order())
        throw NotNilpotent("ideal of " + ext.name() + " is not nilpotent");
    Setting s{std::make_shared<const Algebra>(matrix_algebra(ext.ambient(), r)), r, ext.ambient().dim(), {},
              commutator_subspace(ext.ambient()), commutator_subspace(ext.quotient())};
    for (std::size_t slot = 0; slot < r * r; ++slot)
        for (const auto& v : ext.ideal().subspace().basis()) {
            SparseVector w;
            for (const auto& e : v.entries())
                w.push_back(slot * s.da + e.index, e.value);
            s.ideal_basis.push_back(std::move(w));
        }
    return s;
}

SparseVector random_combination(const std::vector<SparseVector>& basis, std::mt19937_64& rng)
{
    std::uniform_int_distribution<int> coeff(-2, 2);
    SparseVector v;
    for (const auto& b : basis)
        v.axpy(Rational(coeff(rng)), b);
    return v;
}

SparseVector chern_value(const Setting& s, const SparseVector& x)
{
    return matrix_trace(log_unipotent(*s.mat, x), s.r, s.da);
}

struct SampleResult {
    SparseVector value;
    bool homomorphism = true, commutator = true, conjugation = true;
};

std::mt19937_64 sample_rng(std::uint64_t seed, std::size_t k)
{
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(k)};
    return std::mt19937_64(seq);
}

// An invertible g in M_r(A) and its inverse, or nothing after a few draws.
std::optional<std::pair<SparseVector, SparseVector>> random_unit(const Setting& s, std::mt19937_64& rng)
{
    const Algebra& m = *s.mat;
    std::vector<SparseVector> all;
    for (std::size_t k = 0; k < m.dim(); ++k)
        all.push_back(SparseVector::unit(k));
    for (int attempt = 0; attempt < 16; ++attempt) {
        const SparseVector g = *m.unit() + random_combination(all, rng);
        if (auto h = solve(m.left_mult(g), *m.unit()))
            return std::make_pair(g, *h);
    }
    return std::nullopt;
}

SampleResult run_sample(const Setting& s, std::uint64_t seed, std::size_t k)
{
    auto rng = sample_rng(seed, k);
    const Algebra& m = *s.mat;
    const SparseVector x = random_combination(s.ideal_basis, rng);
    const SparseVector y = random_combination(s.ideal_basis, rng);
    SampleResult out;
    out.value = chern_value(s, x);
    const SparseVector cy = chern_value(s, y);

    const SparseVector defect = chern_value(s, unipotent_product(m, x, y)) - out.value - cy;
    out.homomorphism = s.commutators.contains(defect);

    const SparseVector comm = unipotent_product(
        m, unipotent_product(m, x, y), unipotent_product(m, unipotent_inverse(m, x), unipotent_inverse(m, y)));
    out.commutator = s.commutators.contains(chern_value(s, comm));

    if (m.is_unital()) {
        if (const auto g = random_unit(s, rng)) {
            const SparseVector conj = m.multiply(m.multiply(g->first, x), g->second);
            out.conjugation = s.commutators.contains(chern_value(s, conj) - out.value);
        }
    }
    return out;
}

std::vector<SampleResult> run_samples(const Setting& s, std::size_t samples, std::uint64_t seed)
{
    std::vector<SampleResult> results(samples);
#pragma omp parallel for schedule(dynamic, 4)
    for (std::ptrdiff_t k = 0; k < static_cast<std::ptrdiff_t>(samples); ++k)
        results[static_cast<std::size_t>(k)] = run_sample(s, seed, static_cast<std::size_t>(k));
    return results;
}

// Generators 1 + i E_jk; only diagonal slots have nonzero trace but all are included.
std::vector<SparseVector> generator_values(const Setting& s)
{
    std::vector<SparseVector> values;
    for (const auto& b : s.ideal_basis)
        values.push_back(chern_value(s, b));
    return values;
}

struct Span {
    std::size_t dim = 0;
    bool in_kernel = true;
};

Span image_span(const Extension& ext, const Setting& s, const std::vector<SparseVector>& values)
{
    Subspace span = s.commutators;
    Span out;
    for (const auto& v : values) {
        span.add(v);
        if (!s.quotient_commutators.contains(ext.projection().matrix().apply(v)))
            out.in_kernel = false;
    }
    out.dim = span.dim() - s.commutators.dim();
    return out;
}

} // namespace

SparseVector log_unipotent(const Algebra& a, const SparseVector& x)
{
    return nil_series(a, x, [](std::size_t m) { return Rational(m % 2 ? 1 : -1, static_cast<long>(m)); });
}

SparseVector exp_nilpotent(const Algebra& a, const SparseVector& y)
{
    Rational factorial = 1;
    return nil_series(a, y, [&](std::size_t m) -> Rational {
        factorial *= static_cast<long>(m);
        return Rational(1) / factorial;
    });
}

SparseVector unipotent_product(const Algebra& a, const SparseVector& x, const SparseVector& y)
{
    return x + y + a.multiply(x, y);
}

SparseVector unipotent_inverse(const Algebra& a, const SparseVector& x)
{
    return nil_series(a, x, [](std::size_t m) { return Rational(m % 2 ? -1 : 1); });
}

SparseVector matrix_trace(const SparseVector& x, std::size_t r, std::size_t dim_a)
{
    std::vector<SparseEntry> acc;
    for (const auto& e : x.entries()) {
        const std::size_t slot = e.index / dim_a;
        if (slot / r == slot % r)
            acc.push_back({e.index % dim_a, e.value});
    }
    return SparseVector::from_unsorted(std::move(acc));
}

Chern1Report chern1(const Extension& ext, std::size_t r, std::size_t samples, std::uint64_t seed)
{
    const Setting s = make_setting(ext, r);
    Chern1Report rep;
    rep.extension = ext.name();
    rep.r = r;
    rep.samples = samples;
    rep.seed = seed;
    rep.conjugation_checked = s.mat->is_unital();

    std::vector<SparseVector> values = generator_values(s);
    for (auto& res : run_samples(s, samples, seed)) {
        rep.homomorphism_failures += res.homomorphism ? 0 : 1;
        rep.commutator_failures += res.commutator ? 0 : 1;
        rep.conjugation_failures += res.conjugation ? 0 : 1;
        values.push_back(std::move(res.value));
    }
    const Span span = image_span(ext, s, values);
    rep.image_dim = span.dim;
    rep.image_in_kernel = span.in_kernel;
    rep.rel_hc0 = relative_hc(ext, 2).report.betti_at(0);
    rep.surjective = rep.image_dim == rep.rel_hc0;
    rep.pass = rep.homomorphism_failures == 0 && rep.commutator_failures == 0 && rep.conjugation_failures == 0 &&
               rep.image_in_kernel && rep.surjective;
    return rep;
}

K1Probe k1_rel_probe(const Extension& ext, std::size_t r, std::size_t samples, std::uint64_t seed)
{
    const Setting s = make_setting(ext, r);
    std::vector<SparseVector> values = generator_values(s);
    K1Probe p;
    p.generators = values.size();
    for (auto& res : run_samples(s, samples, seed))
        values.push_back(std::move(res.value));
    const Span span = image_span(ext, s, values);
    p.span_dim = span.dim;
    p.contained = span.in_kernel;
    p.rel_hc0 = relative_hc(ext, 2).report.betti_at(0);
    p.equal = p.contained && p.span_dim == p.rel_hc0;
    return p;
}

TangentTable tangent_table(const std::string& coefficient, const std::vector<std::string>& bases, int degree_bound,
                           std::size_t size_limit)
{
    if (degree_bound < 2)
        throw ConfigError("degree bound D must be at least 2, got " + std::to_string(degree_bound));
    TangentTable t;
    t.coefficient = coefficient;
    t.degree_bound = degree_bound;
    t.range = {0, degree_bound - 2};
    std::vector<Extension> exts;
    for (const auto& base : bases) {
        exts.push_back(named_extension("tensor(" + coefficient + "," + base + ")"));
        std::size_t top = 1;
        for (int k = 0; k < degree_bound + 3 && top <= size_limit; ++k)
            top *= exts.back().ambient().dim();
        if (top > size_limit)
            throw SizeLimit("tangent: " + exts.back().ambient().name() + " needs tensor powers of degree " +
                            std::to_string(degree_bound + 3) + " beyond size limit " + std::to_string(size_limit));
    }
    for (std::size_t k = 0; k < bases.size(); ++k) {
        const Extension& ext = exts[k];
        const std::string& base = bases[k];
        TangentRow row;
        row.base = base;
        row.rel_hc = relative_hc(ext, degree_bound).report.betti;
        row.ideal_hc = hc_homology(*ext.ideal_algebra(), degree_bound).betti;

        const Algebra& a = ext.ambient();
        Subspace ai(a.dim());
        for (const auto& i : ext.ideal().subspace().basis())
            for (std::size_t k = 0; k < a.dim(); ++k) {
                const SparseVector e = SparseVector::unit(k);
                ai.add(a.multiply(e, i) - a.multiply(i, e));
            }
        row.ideal_mod_commutators = ext.ideal().dim() - ai.dim();

        const ExcisionTheory eta = excision_check(ext, degree_bound, true);
        row.alpha = eta.verdict;
        row.alpha_iso_through = eta.iso_through;
        t.rows.push_back(std::move(row));
    }
    return t;
}

} // namespace cyclex
