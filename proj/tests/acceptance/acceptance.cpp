// One PASS/FAIL line per acceptance criterion. Expected numbers come from the
// dense oracles in tests/oracle or from library-independent models; a criterion
// that is mathematically unattainable is reported as FAIL with its evidence.
// Exit status is nonzero when any line fails.

#include "../oracle/ce_oracle.hpp"
#include "../oracle/cyclic_oracle.hpp"

#include "cyclex/algebra/constructions.hpp"
#include "cyclex/algebra/presets.hpp"
#include "cyclex/core/elimination.hpp"
#include "cyclex/excision/excision.hpp"
#include "cyclex/hochschild/cyclic.hpp"
#include "cyclex/hochschild/hochschild.hpp"
#include "cyclex/lie/ce.hpp"
#include "cyclex/lie/trace.hpp"
#include "cyclex/report/report.hpp"
#include "cyclex/tangent/tangent.hpp"

#include <omp.h>

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

using namespace cyclex;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
    Json json = Json::object();
};

struct Criterion {
    int id;
    std::string title;
    std::function<Outcome()> run;
};

template <class T>
std::string show(const std::vector<T>& v)
{
    std::ostringstream os;
    os << "(";
    for (std::size_t k = 0; k < v.size(); ++k)
        os << (k ? "," : "") << v[k];
    os << ")";
    return os.str();
}

std::vector<std::size_t> head(const std::vector<std::size_t>& v, std::size_t n)
{
    return {v.begin(), v.begin() + static_cast<std::ptrdiff_t>(std::min(n, v.size()))};
}

oracle::Dense to_dense(const SparseMatrix& m)
{
    auto d = oracle::zeros(m.rows(), m.cols());
    for (std::size_t j = 0; j < m.cols(); ++j)
        for (const auto& e : m.column(j).entries())
            d[e.index][j] = e.value;
    return d;
}

std::size_t ipow(std::size_t d, int k)
{
    std::size_t r = 1;
    while (k-- > 0)
        r *= d;
    return r;
}

// Recomputes d_{n-1} d_n on every materialized pair.
std::size_t dd_violations(const ChainComplex& c)
{
    std::size_t bad = 0;
    for (int n = c.lo() + 2; n <= c.hi(); ++n)
        if (!(c.d(n - 1) * c.d(n)).is_zero())
            ++bad;
    return bad;
}

const std::vector<std::string> kPresets = {
    "ground",          "dual_numbers", "truncated_poly(3)", "square_zero(2)",
    "zero_mult(1)",    "fat_point",    "matrix(2)",         "product(ground, ground)",
    "upper_triangular(2)", "aug(truncated_poly(3))", "unitalization(zero_mult(1))",
};

const std::vector<std::string> kStageExtensions = {"split_product", "square_zero(2)", "dual_numbers",
                                                   "trunc3",        "trunc_step",     "upper_triangular",
                                                   "matrix_dual"};

const std::vector<std::string> kConnesPresets = {"ground", "dual_numbers", "truncated_poly(3)", "matrix(2)"};

Outcome well_formedness()
{
    constexpr int D = 5;
    Outcome out;
    std::size_t complexes = 0, bad = 0;
    auto check = [&](const std::string& what, const ChainComplex& c) {
        ++complexes;
        const std::size_t v = dd_violations(c);
        bad += v;
        if (v)
            out.json["violations"].push_back(what);
    };
    const auto start = std::chrono::steady_clock::now();
    for (const auto& name : kPresets) {
        const AlgebraPtr a = preset(name);
        const Bimodule reg = Bimodule::regular(a);
        check(name + " bar", *bar_complex(reg, D));
        check(name + " hoch", *hoch_complex(reg, D));
        check(name + " hh", *hh_total(*a, D).complex);
        check(name + " hc", *hc_total(*a, D).complex);
        check(name + " lambda", *connes_lambda_complex(*a, D).complex);
        check(name + " ce gl1", *ce_complex(lie_from_assoc(*a), D));
        check(name + " ce gl2", *ce_complex(gl(*a, 2), D));
    }
    for (const auto& name : kStageExtensions) {
        const Extension e = named_extension(name);
        const Bimodule reg = Bimodule::regular(e.ambient_ptr());
        for (int n = 0; n <= 3; ++n)
            for (bool hoch : {false, true}) {
                const std::string tag = name + " n=" + std::to_string(n) + (hoch ? " hoch" : " bar");
                check(tag + " F", *filtration_F(e, reg, n, D, hoch).complex);
                check(tag + " Q", *filtration_Q(e, n, D, hoch).complex);
            }
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    out.json["complexes"] = complexes;
    out.json["violations_count"] = bad;
    out.pass = bad == 0 && seconds < 60;
    out.detail = std::to_string(complexes) + " complexes at D=5, " + std::to_string(bad) + " nonzero d^2";
    if (seconds >= 60)
        out.detail += ", over the 60 s budget";
    return out;
}

Outcome contracting_homotopy_identity()
{
    Outcome out;
    std::size_t checked = 0;
    for (const auto& name : kPresets) {
        const AlgebraPtr a = preset(name);
        if (!a->is_unital())
            continue;
        const Bimodule reg = Bimodule::regular(a);
        bool ok = b_prime(reg, 1) * contracting_homotopy(reg, 0) == SparseMatrix::identity(a->dim());
        for (int p = 1; p <= 4; ++p) {
            const SparseMatrix lhs =
                b_prime(reg, p + 1) * contracting_homotopy(reg, p) + contracting_homotopy(reg, p - 1) * b_prime(reg, p);
            ok = ok && lhs == SparseMatrix::identity(ipow(a->dim(), p + 1));
        }
        out.json[name] = ok;
        out.pass = out.pass && ok;
        ++checked;
    }
    out.detail = std::to_string(checked) + " unital presets, b's + sb' = id for p <= 4";
    return out;
}

Outcome ground_field()
{
    const AlgebraPtr q = preset("ground");
    const auto hh = hh_homology(*q, 5);
    const auto hc = hc_homology(*q, 6);
    const auto hh_oracle = oracle::cyclic_betti(*q, 3, 2);
    const auto hc_oracle = oracle::cyclic_betti(*q, 4, 0);
    const std::vector<std::size_t> hh_expected{1, 0, 0, 0}, hc_expected{1, 0, 1, 0, 1};
    Outcome out;
    out.json["hh"] = to_json(hh);
    out.json["hc"] = to_json(hc);
    out.json["hh_oracle"] = hh_oracle;
    out.json["hc_oracle"] = hc_oracle;
    out.pass = hh.range == Interval{0, 3} && hc.range == Interval{0, 4} && hh.betti == hh_expected &&
               hc.betti == hc_expected && hh_oracle == hh_expected && hc_oracle == hc_expected;
    out.detail = "hh " + show(hh.betti) + " on " + hh.range.to_string() + ", hc " + show(hc.betti) + " on " +
                 hc.range.to_string() + ", oracle " + show(hh_oracle) + " " + show(hc_oracle);
    return out;
}

Outcome morita()
{
    const auto start = std::chrono::steady_clock::now();
    const AlgebraPtr q = preset("ground"), m2 = preset("matrix(2)");
    const auto hh_q = hh_homology(*q, 5), hh_m = hh_homology(*m2, 5);
    const auto hc_q = hc_homology(*q, 5), hc_m = hc_homology(*m2, 5);
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    Outcome out;
    out.json["hh_Q"] = to_json(hh_q);
    out.json["hh_M2"] = to_json(hh_m);
    out.json["hc_Q"] = to_json(hc_q);
    out.json["hc_M2"] = to_json(hc_m);
    out.pass = hh_m.range == Interval{0, 3} && hc_m.range == Interval{0, 3} && hh_q.betti == hh_m.betti &&
               hc_q.betti == hc_m.betti && seconds < 120;
    out.detail = "M2(Q): hh " + show(hh_m.betti) + " hc " + show(hc_m.betti) + "; Q: hh " + show(hh_q.betti) +
                 " hc " + show(hc_q.betti);
    return out;
}

Outcome connes_sequence()
{
    Outcome out;
    std::ostringstream detail;
    for (const auto& name : kConnesPresets) {
        const auto rep = connes_check(*preset(name), 5);
        out.json[name] = to_json(rep);
        out.pass = out.pass && rep.exact && rep.checked.contains(Interval{0, 3});
        detail << name << (rep.exact ? " exact" : " not exact") << " on " << rep.checked.to_string() << "; ";
    }
    out.detail = detail.str();
    return out;
}

Outcome lambda_agreement()
{
    Outcome out;
    std::ostringstream detail;
    for (const auto& name : kConnesPresets) {
        const AlgebraPtr a = preset(name);
        const auto hc = hc_homology(*a, 5);
        const LambdaComplex lam = connes_lambda_complex(*a, 5);
        const Interval shared = lam.complex->certified().intersect(hc.range).intersect(Interval{0, 3});
        const auto lb = homology(*lam.complex, shared).betti;
        const auto hb = homology(*hc_total(*a, 5).complex, shared).betti;
        out.json[name] = {{"certified_range", to_json(shared)}, {"lambda", lb}, {"hc", hb}};
        out.pass = out.pass && shared == Interval{0, 3} && lb == hb;
        detail << name << " " << show(lb) << (lb == hb ? " = " : " != ") << show(hb) << "; ";
    }
    out.detail = detail.str();
    return out;
}

Outcome graded_pieces()
{
    Outcome out;
    std::size_t checks = 0, failures = 0;
    for (const char* name : {"dual_numbers", "trunc3", "upper_triangular"}) {
        const Extension e = named_extension(name);
        const Bimodule m = Bimodule::regular(e.ambient_ptr());
        for (int n = 0; n <= 2; ++n)
            for (bool hoch : {false, true}) {
                const auto v = graded_piece_F_check(e, m, n, 5, hoch);
                ++checks;
                failures += v.pass ? 0 : 1;
                out.json[std::string(name) + (hoch ? " hoch n=" : " bar n=") + std::to_string(n)] = to_json(v);
            }
    }
    out.pass = failures == 0;
    out.detail = std::to_string(checks) + " graded pieces (3 extensions, n <= 2, Bar and Hoch), " +
                 std::to_string(failures) + " failures";
    return out;
}

// Library relative and ideal betti against the dense fiber model.
bool excision_matches_oracle(const Extension& e, const ExcisionTheory& t, int top, Json& json)
{
    const int columns = t.theory == "HC" ? 0 : 2;
    const auto rel = oracle::relative_betti(e.ambient(), e.quotient(), to_dense(e.projection().matrix()), top, columns);
    const auto ideal = oracle::cyclic_betti(*e.ideal_algebra(), top, columns);
    json[t.theory] = {{"relative_oracle", rel}, {"ideal_oracle", ideal}};
    const std::size_t n = static_cast<std::size_t>(top) + 1;
    return head(t.relative_betti, n) == rel && head(t.ideal_betti, n) == ideal;
}

Outcome wodzicki()
{
    Outcome out;
    const Extension split = named_extension("split_product");
    const Extension sq = named_extension("square_zero(2)");
    const auto ws = wodzicki_verify(split, 5);
    const auto wq = wodzicki_verify(sq, 5);
    out.json["split_product"] = to_json(ws);
    out.json["square_zero(2)"] = to_json(wq);
    Json oracle_json;
    const bool split_oracle =
        excision_matches_oracle(split, ws.hh, 3, oracle_json["split_product"]) &&
        excision_matches_oracle(split, ws.hc, 3, oracle_json["split_product"]);
    const bool sq_oracle = excision_matches_oracle(sq, wq.hh, 3, oracle_json["square_zero(2)"]) &&
                           excision_matches_oracle(sq, wq.hc, 3, oracle_json["square_zero(2)"]);
    out.json["oracle"] = oracle_json;
    const bool split_ok = ws.pass && ws.hh.iso_through >= 3 && ws.hc.iso_through >= 3;
    const bool sq_fails = !wq.pass && (wq.hh.verdict.failing_degree || wq.hc.verdict.failing_degree);
    out.pass = split_ok && sq_fails && split_oracle && sq_oracle;
    std::ostringstream d;
    d << "split_product " << (ws.pass ? "PASS" : "FAIL") << " through " << std::min(ws.hh.iso_through, ws.hc.iso_through)
      << (split_oracle ? " (oracle agrees)" : " (oracle disagrees)") << "; square_zero(2) "
      << (wq.pass ? "PASS" : "FAIL") << " through " << std::min(wq.hh.iso_through, wq.hc.iso_through)
      << (sq_oracle ? " (oracle agrees)" : " (oracle disagrees)");
    if (!sq_fails)
        d << ", expected FAIL not attainable: Q + V is the unitalization of V, so excision holds although V is "
             "not H-unital (ideal Bar failing degree "
          << (wq.ideal_h_unital.failing_degree ? std::to_string(*wq.ideal_h_unital.failing_degree) : "none") << ")";
    out.detail = d.str();
    return out;
}

Outcome lqt()
{
    const auto start = std::chrono::steady_clock::now();
    const auto rep = lqt_verify(*preset("ground"), 4, 4);
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const std::vector<std::size_t> expected{1, 1, 0, 1, 1};
    Outcome out;
    out.json = to_json(rep);
    out.pass = rep.match && rep.stable_range && rep.ce_betti == expected && rep.sym_betti == expected && seconds < 600;
    out.detail = "gl4(Q) CE " + show(rep.ce_betti) + ", Sym model " + show(rep.sym_betti);
    return out;
}

Outcome central_extension()
{
    Outcome out;
    std::ostringstream d;
    for (const char* name : {"ground", "dual_numbers"}) {
        const AlgebraPtr a = preset(name);
        const auto r3 = h2_vs_hc1(*a, 3);
        const auto r4 = h2_vs_hc1(*a, 4);
        // Dense CE oracle on gl_3(A); gl_4 is beyond dense elimination here.
        const auto ce3 = oracle::ce_betti(gl(*a, 3), 2);
        const bool oracle_ok = ce3.at(2) == r3.h2_gl;
        out.json[name] = {{"r3", to_json(r3)}, {"r4", to_json(r4)}, {"oracle_h2_gl3", ce3.at(2)}};
        const bool ok = r3.equal && r4.equal && r3.h2_gl == r4.h2_gl && oracle_ok;
        out.pass = out.pass && ok;
        d << name << ": H2(gl3)=" << r3.h2_gl << " H2(gl4)=" << r4.h2_gl << " HC1=" << r3.hc1
          << (oracle_ok ? " (oracle agrees)" : " (oracle disagrees)");
        if (!r3.equal)
            d << ", H2 = Sym^2-part " << r3.sym_prediction << " = C(HC0,2)+HC1 since HC0=" << r3.hc0;
        d << "; ";
    }
    out.detail = d.str();
    return out;
}

Outcome trace_chain()
{
    Outcome out;
    std::ostringstream d;
    for (const char* name : {"ground", "dual_numbers"}) {
        Json arr = Json::array();
        d << name << " signs";
        for (const auto& c : trace_chain_check(*preset(name), 2, 3)) {
            arr.push_back(to_json(c));
            out.pass = out.pass && c.holds;
            d << " " << (c.vacuous ? "vac" : std::to_string(c.sign)) << (c.holds ? "" : "!");
        }
        out.json[name] = std::move(arr);
        d << "; ";
    }
    out.detail = d.str();
    return out;
}

Outcome chern()
{
    constexpr std::uint64_t kSeed = 20240517;
    struct Case {
        const char* ext;
        std::size_t r;
    };
    Outcome out;
    std::ostringstream d;
    for (const Case& c : {Case{"dual_numbers", 2}, Case{"matrix_dual", 1}, Case{"trunc3", 2}}) {
        const Extension e = named_extension(c.ext);
        const auto rep = chern1(e, c.r, 100, kSeed);
        const auto probe = k1_rel_probe(e, c.r, 100, kSeed);
        out.json[c.ext] = {{"chern1", to_json(rep)}, {"k1_rel_probe", to_json(probe)}};
        out.pass = out.pass && rep.pass && probe.equal;
        d << c.ext << " r=" << c.r << " failures " << rep.homomorphism_failures << "/" << rep.commutator_failures << "/"
          << rep.conjugation_failures << " span " << probe.span_dim << " relHC0 " << probe.rel_hc0 << "; ";
    }
    out.detail = d.str();
    return out;
}

std::vector<Criterion> criteria()
{
    return {
        {1, "complex well-formedness", well_formedness},
        {2, "unital contracting homotopy", contracting_homotopy_identity},
        {3, "ground-field homology", ground_field},
        {4, "Morita invariance M2(Q) vs Q", morita},
        {5, "Connes exact sequence", connes_sequence},
        {6, "lambda-model agreement", lambda_agreement},
        {7, "F graded pieces", graded_pieces},
        {8, "Wodzicki excision verifier", wodzicki},
        {9, "LQT at stable range", lqt},
        {10, "H2(gl_r) vs HC1", central_extension},
        {11, "trace chain map", trace_chain},
        {12, "degree-1 Chern map", chern},
    };
}

struct Run {
    std::vector<Outcome> outcomes;
    std::vector<double> seconds;
    std::string json;
};

Run run_all(int threads)
{
    omp_set_num_threads(threads);
    Report report(Json{{"suite", "acceptance"}});
    Run run;
    for (const auto& c : criteria()) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.pass = false;
            o.detail = std::string("exception: ") + e.what();
        }
        const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        Json result = {{"verdict", o.pass ? "PASS" : "FAIL"}, {"detail", o.detail}, {"data", o.json}};
        report.add("criterion " + std::to_string(c.id), Json{{"title", c.title}}, result, s * 1000);
        run.outcomes.push_back(std::move(o));
        run.seconds.push_back(s);
    }
    run.json = report.dump(false);
    return run;
}

} // namespace

int main(int argc, char** argv)
{
    const int many = std::max(2, omp_get_num_procs());
    const Run parallel = run_all(many);
    const auto list = criteria();
    int failures = 0;
    for (std::size_t k = 0; k < list.size(); ++k) {
        const Outcome& o = parallel.outcomes[k];
        failures += o.pass ? 0 : 1;
        std::printf("%s criterion %2d  %-30s %7.2fs  %s\n", o.pass ? "PASS" : "FAIL", list[k].id,
                    list[k].title.c_str(), parallel.seconds[k], o.detail.c_str());
        std::fflush(stdout);
    }

    const Run serial = run_all(1);
    const bool identical = serial.json == parallel.json;
    failures += identical ? 0 : 1;
    std::printf("%s criterion 13  %-30s          JSON of criteria 1-12 at %d threads vs 1 thread: %s (%zu bytes)\n",
                identical ? "PASS" : "FAIL", "determinism", many, identical ? "byte-identical" : "differs",
                parallel.json.size());

    if (argc > 1)
        std::ofstream(argv[1]) << parallel.json;
    std::printf("%d of 13 criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
