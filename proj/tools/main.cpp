#include "cyclex/algebra/constructions.hpp"
#include "cyclex/algebra/parser.hpp"
#include "cyclex/algebra/presets.hpp"
#include "cyclex/core/error.hpp"
#include "cyclex/excision/excision.hpp"
#include "cyclex/hochschild/cyclic.hpp"
#include "cyclex/lie/ce.hpp"
#include "cyclex/lie/trace.hpp"
#include "cyclex/report/report.hpp"
#include "cyclex/tangent/tangent.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <functional>
#include <iostream>
#include <optional>

using namespace cyclex;

namespace {

struct RunConfig {
    std::string subcommand;
    std::string preset, file, ext;
    int degree_bound = 4;
    std::size_t r = 2;
    std::uint64_t seed = 1;
    std::optional<std::size_t> size_limit;
    std::string format = "table";
    bool reps = false, timings = false;
    std::size_t samples = 100;
    int pieces = 2;
    std::string coefficient = "Q";
    std::vector<std::string> bases = {"Q", "dual_numbers", "truncated_poly(3)"};
};

// Largest tensor power a Bar/Hoch/cyclic task materializes is A^{(x) degree+1}.
constexpr std::size_t kTensorSizeLimit = 4000000;

void check_tensor_size(const Algebra& a, int power, std::size_t limit)
{
    std::size_t size = 1;
    for (int k = 0; k < power && size <= limit; ++k)
        size *= a.dim();
    if (size > limit)
        throw SizeLimit(a.name() + "^(x)" + std::to_string(power) + " exceeds size limit " + std::to_string(limit));
}

class Runner {
public:
    explicit Runner(const RunConfig& cfg) : cfg_(cfg), report_(config_echo(cfg)) {}

    Report run()
    {
        if (cfg_.degree_bound < 2)
            throw ConfigError("degree bound D must be at least 2, got " + std::to_string(cfg_.degree_bound));
        if (cfg_.r < 1)
            throw ConfigError("rank r must be at least 1");
        if (cfg_.size_limit && *cfg_.size_limit == 0)
            throw ConfigError("size limit must be positive");
        const std::map<std::string, std::function<void()>> tasks = {
            {"hh", [&] { homology(false); }},
            {"hc", [&] { homology(true); }},
            {"connes", [&] { connes(); }},
            {"hunital", [&] { hunital(); }},
            {"filtration", [&] { filtration(); }},
            {"wodzicki", [&] { wodzicki(); }},
            {"ce", [&] { ce(); }},
            {"trace", [&] { trace(); }},
            {"lqt", [&] { lqt(); }},
            {"h2hc1", [&] { h2hc1(); }},
            {"chern1", [&] { chern1_task(); }},
            {"tangent", [&] { tangent(); }},
        };
        tasks.at(cfg_.subcommand)();
        return report_;
    }

private:
    static Json config_echo(const RunConfig& cfg)
    {
        Json j;
        j["subcommand"] = cfg.subcommand;
        j["degree_bound"] = cfg.degree_bound;
        j["r"] = cfg.r;
        j["seed"] = cfg.seed;
        j["size_limit"] = cfg.size_limit ? Json(*cfg.size_limit) : Json(nullptr);
        j["format"] = cfg.format;
        return j;
    }

    std::size_t tensor_limit() const { return cfg_.size_limit.value_or(kTensorSizeLimit); }

    AlgebraPtr algebra()
    {
        if (!cfg_.file.empty())
            return parse_algebra_file(cfg_.file);
        if (cfg_.preset.empty())
            throw ConfigError(cfg_.subcommand + " needs --preset or --file");
        return preset(cfg_.preset);
    }

    Json algebra_inputs(const Algebra& a) const
    {
        Json j;
        if (!cfg_.file.empty())
            j["file"] = cfg_.file;
        else
            j["preset"] = cfg_.preset;
        j["algebra"] = a.name();
        j["dim"] = a.dim();
        return j;
    }

    Extension extension() const
    {
        if (cfg_.ext.empty())
            throw ConfigError(cfg_.subcommand + " needs --ext");
        return named_extension(cfg_.ext);
    }

    Json extension_inputs(const Extension& e) const
    {
        Json j;
        j["ext"] = cfg_.ext;
        j["ambient"] = e.ambient().name();
        j["ideal_dim"] = e.ideal().dim();
        j["quotient"] = e.quotient().name();
        return j;
    }

    template <class F>
    void timed(const std::string& task, Json inputs, F&& compute)
    {
        const auto start = std::chrono::steady_clock::now();
        const Json result = compute();
        const std::chrono::duration<double, std::milli> ms = std::chrono::steady_clock::now() - start;
        report_.add(task, std::move(inputs), result, ms.count());
    }

    void homology(bool cyclic)
    {
        const AlgebraPtr a = algebra();
        check_tensor_size(*a, cfg_.degree_bound + 1, tensor_limit());
        timed(cyclic ? "hc" : "hh", algebra_inputs(*a), [&] {
            const int d = cfg_.degree_bound;
            return to_json(cyclic ? hc_homology(*a, d, cfg_.reps) : hh_homology(*a, d, cfg_.reps));
        });
    }

    void connes()
    {
        const AlgebraPtr a = algebra();
        check_tensor_size(*a, cfg_.degree_bound + 1, tensor_limit());
        timed("connes", algebra_inputs(*a), [&] { return to_json(connes_check(*a, cfg_.degree_bound)); });
    }

    void hunital()
    {
        const AlgebraPtr a = algebra();
        check_tensor_size(*a, cfg_.degree_bound + 1, tensor_limit());
        timed("hunital", algebra_inputs(*a), [&] { return to_json(h_unitality_check(a, cfg_.degree_bound)); });
    }

    void filtration()
    {
        const Extension e = extension();
        check_tensor_size(e.ambient(), cfg_.degree_bound + 1, tensor_limit());
        const Bimodule m = Bimodule::regular(e.ambient_ptr());
        for (int n = 0; n <= cfg_.pieces; ++n)
            for (bool hoch : {false, true}) {
                Json inputs = extension_inputs(e);
                inputs["n"] = n;
                inputs["complex"] = hoch ? "hoch" : "bar";
                timed("filtration", std::move(inputs),
                      [&] { return to_json(graded_piece_F_check(e, m, n, cfg_.degree_bound, hoch)); });
            }
    }

    void wodzicki()
    {
        const Extension e = extension();
        check_tensor_size(e.ambient(), cfg_.degree_bound + 3, tensor_limit());
        timed("wodzicki", extension_inputs(e), [&] { return to_json(wodzicki_verify(e, cfg_.degree_bound)); });
    }

    void ce()
    {
        const AlgebraPtr a = algebra();
        const LieAlgebra g = gl(*a, cfg_.r);
        Json inputs = algebra_inputs(*a);
        inputs["lie"] = g.name();
        timed("ce", std::move(inputs), [&] {
            CEOptions opts;
            opts.size_limit = cfg_.size_limit.value_or(kDefaultSizeLimit);
            return to_json(ce_homology(g, cfg_.degree_bound, opts));
        });
    }

    // Tr_n is checked for n = 1..D-2, the degrees where the lambda complex is certified.
    void trace()
    {
        const AlgebraPtr a = algebra();
        Json inputs = algebra_inputs(*a);
        inputs["r"] = cfg_.r;
        timed("trace", std::move(inputs), [&] {
            Json checks = Json::array();
            bool holds = true;
            for (const auto& c : trace_chain_check(*a, cfg_.r, cfg_.degree_bound - 2)) {
                holds = holds && c.holds;
                checks.push_back(to_json(c));
            }
            Json j;
            j["verdict"] = holds ? "PASS" : "FAIL";
            j["checks"] = std::move(checks);
            return j;
        });
    }

    void lqt()
    {
        const AlgebraPtr a = algebra();
        timed("lqt", algebra_inputs(*a), [&] {
            return to_json(lqt_verify(*a, cfg_.r, cfg_.degree_bound, cfg_.size_limit.value_or(kDefaultSizeLimit)));
        });
    }

    void h2hc1()
    {
        const AlgebraPtr a = algebra();
        timed("h2hc1", algebra_inputs(*a),
              [&] { return to_json(h2_vs_hc1(*a, cfg_.r, cfg_.size_limit.value_or(kDefaultSizeLimit))); });
    }

    void chern1_task()
    {
        const Extension e = extension();
        Json inputs = extension_inputs(e);
        inputs["samples"] = cfg_.samples;
        timed("chern1", inputs, [&] { return to_json(chern1(e, cfg_.r, cfg_.samples, cfg_.seed)); });
        timed("k1_rel_probe", inputs, [&] { return to_json(k1_rel_probe(e, cfg_.r, cfg_.samples, cfg_.seed)); });
    }

    void tangent()
    {
        Json inputs;
        inputs["coefficient"] = cfg_.coefficient;
        inputs["bases"] = cfg_.bases;
        timed("tangent", std::move(inputs), [&] {
            return to_json(tangent_table(cfg_.coefficient, cfg_.bases, cfg_.degree_bound,
                                         cfg_.size_limit.value_or(kTangentSizeLimit)));
        });
    }

    const RunConfig& cfg_;
    Report report_;
};

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact Hochschild, cyclic and Lie algebra homology of finite-dimensional algebras over Q"};
    app.set_version_flag("--version", std::string(kVersion));
    app.require_subcommand(1);

    RunConfig cfg;
    const std::vector<std::pair<const char*, const char*>> commands = {
        {"hh", "Hochschild homology HH_n(A)"},
        {"hc", "cyclic homology HC_n(A) from the cyclic bicomplex"},
        {"connes", "rank bookkeeping for the Connes exact sequence"},
        {"hunital", "H-unitality: Bar(A) acyclic on certified degrees"},
        {"filtration", "graded pieces of the F filtration for an extension"},
        {"wodzicki", "excision maps for HH and HC of an extension"},
        {"ce", "Chevalley-Eilenberg homology of gl_r(A)"},
        {"trace", "generalized trace as a chain map, degrees 1..D-2"},
        {"lqt", "H(gl_r(A)) against the free model on HC_{.-1}(A)"},
        {"h2hc1", "H_2(gl_r(A)) against HC_1(A)"},
        {"chern1", "degree-1 relative Chern map and the K_1 probe"},
        {"tangent", "relative HC of C (x) B -> C over Artinian bases B"},
    };
    for (const auto& [name, help] : commands) {
        CLI::App* sub = app.add_subcommand(name, help);
        sub->add_option("--preset", cfg.preset, "preset expression, e.g. dual_numbers or truncated_poly(3)");
        sub->add_option("--file", cfg.file, "algebra structure-constant file")->check(CLI::ExistingFile);
        sub->add_option("--ext", cfg.ext, "named extension, e.g. split_product or trunc3");
        sub->add_option("-D,--degree-bound", cfg.degree_bound, "degree bound D (>= 2)")->capture_default_str();
        sub->add_option("-r,--rank", cfg.r, "matrix rank r (>= 1)")->capture_default_str();
        sub->add_option("--seed", cfg.seed, "seed for sampled checks")->capture_default_str();
        sub->add_option("--size-limit", cfg.size_limit, "cap on materialized dimensions");
        sub->add_option("--format", cfg.format, "output format")
            ->check(CLI::IsMember({"table", "json"}))
            ->capture_default_str();
        sub->add_flag("--reps", cfg.reps, "emit homology representatives");
        sub->add_flag("--timings", cfg.timings, "include wall-clock timings");
        sub->add_option("--samples", cfg.samples, "sample count for chern1")->capture_default_str();
        sub->add_option("--pieces", cfg.pieces, "largest graded piece n for filtration")->capture_default_str();
        sub->add_option("--coefficient", cfg.coefficient, "coefficient algebra C for tangent")
            ->capture_default_str();
        sub->add_option("--bases", cfg.bases, "Artinian bases B for tangent")->delimiter(',');
        sub->get_option("--preset")->excludes(sub->get_option("--file"));
        sub->final_callback([&cfg, sub] { cfg.subcommand = sub->get_name(); });
    }

    CLI11_PARSE(app, argc, argv);

    try {
        const Report report = Runner(cfg).run();
        std::cout << (cfg.format == "json" ? report.dump(cfg.timings) : report.table(cfg.timings));
    } catch (const ParseError& e) {
        std::string message = e.message();
        if (const std::string prefix = cfg.file + ": "; !cfg.file.empty() && message.rfind(prefix, 0) == 0)
            message.erase(0, prefix.size());
        std::cerr << (cfg.file.empty() ? std::string("<input>") : cfg.file) << ":" << e.line() << ":" << e.column()
                  << ": parse error: " << message << "\n";
        return 3;
    } catch (const SizeLimit& e) {
        std::cerr << "size limit: " << e.what() << "\n";
        return 4;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
