#include "cyclex/report/report.hpp"

#include <sstream>

namespace cyclex {

namespace {

Json optional_degree(const std::optional<int>& d) { return d ? Json(*d) : Json(nullptr); }

const char* verdict(bool pass) { return pass ? "PASS" : "FAIL"; }

// Sparse vector as [[index, "p/q"], ...]; rationals stay exact.
Json sparse(const SparseVector& v)
{
    Json out = Json::array();
    for (const auto& e : v.entries())
        out.push_back(Json::array({e.index, e.value.get_str()}));
    return out;
}

void render(std::ostringstream& os, const Json& j, const std::string& indent)
{
    for (const auto& [key, value] : j.items()) {
        if (value.is_object()) {
            os << indent << key << ":\n";
            render(os, value, indent + "  ");
        } else if (value.is_array() && !value.empty() && value.front().is_object()) {
            os << indent << key << ":\n";
            for (const auto& item : value) {
                os << indent << "  -\n";
                render(os, item, indent + "    ");
            }
        } else {
            os << indent << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << "\n";
        }
    }
}

} // namespace

Json to_json(const Interval& i) { return Json::array({i.lo, i.hi}); }

Json to_json(const HomologyReport& h)
{
    Json j;
    j["certified_range"] = to_json(h.range);
    j["betti"] = h.betti;
    if (!h.representatives.empty()) {
        Json reps = Json::array();
        for (const auto& degree : h.representatives) {
            Json d = Json::array();
            for (const auto& v : degree)
                d.push_back(sparse(v));
            reps.push_back(std::move(d));
        }
        j["representatives"] = std::move(reps);
    }
    return j;
}

Json to_json(const QuasiIsoVerdict& v)
{
    Json j;
    j["verdict"] = verdict(v.holds);
    j["checked_range"] = to_json(v.checked);
    j["failing_degree"] = optional_degree(v.failing_degree);
    j["defect"] = v.defect;
    j["cone_betti"] = v.cone_betti;
    return j;
}

Json to_json(const ConnesReport& c)
{
    Json j;
    j["verdict"] = verdict(c.exact);
    j["certified_range"] = to_json(c.checked);
    j["failing_degree"] = optional_degree(c.failing_degree);
    Json rows = Json::array();
    for (const auto& d : c.degrees) {
        Json r;
        r["n"] = d.n;
        r["hh"] = d.hh;
        r["hc"] = d.hc;
        r["hc_shift"] = d.hc_shift;
        r["rank_i"] = d.rank_i;
        r["rank_pi"] = d.rank_pi;
        r["rank_delta_in"] = d.rank_delta_in;
        r["rank_delta_out"] = d.rank_delta_out;
        r["exact"] = d.exact;
        rows.push_back(std::move(r));
    }
    j["degrees"] = std::move(rows);
    return j;
}

Json to_json(const HUnitalVerdict& v)
{
    Json j;
    j["verdict"] = verdict(v.pass);
    j["certified_range"] = to_json(v.certified);
    j["betti"] = v.betti;
    j["failing_degree"] = optional_degree(v.failing_degree);
    return j;
}

Json to_json(const GradedPieceVerdict& v)
{
    Json j;
    j["verdict"] = verdict(v.pass);
    j["checked_range"] = to_json(v.checked);
    j["failing_degree"] = optional_degree(v.failing_degree);
    j["signs"] = v.signs;
    j["dims"] = v.dims;
    return j;
}

Json to_json(const RelativeHomology& r)
{
    Json j = to_json(r.report);
    j["source_betti"] = r.source_betti;
    j["target_betti"] = r.target_betti;
    j["les_consistent"] = r.les_consistent;
    return j;
}

Json to_json(const ExcisionTheory& t)
{
    Json j;
    j["theory"] = t.theory;
    j["verdict"] = verdict(t.verdict.holds);
    j["iso_through"] = t.iso_through;
    j["failing_degree"] = optional_degree(t.verdict.failing_degree);
    j["cone"] = to_json(t.verdict);
    j["certified_range"] = Json::array({0, static_cast<int>(t.ideal_betti.size()) - 1});
    j["ideal_betti"] = t.ideal_betti;
    j["relative_betti"] = t.relative_betti;
    return j;
}

Json to_json(const WodzickiVerdict& w)
{
    Json j;
    j["verdict"] = verdict(w.pass);
    j["ideal_h_unital"] = to_json(w.ideal_h_unital);
    j["hh"] = to_json(w.hh);
    j["hc"] = to_json(w.hc);
    return j;
}

Json to_json(const CorollaryReport& c)
{
    Json j;
    j["name"] = c.name;
    j["hypothesis"] = c.hypothesis;
    j["conclusion"] = c.conclusion;
    j["detail"] = c.detail;
    return j;
}

Json to_json(const TraceChainCheck& c)
{
    Json j;
    j["n"] = c.n;
    j["verdict"] = verdict(c.holds);
    j["sign"] = c.sign;
    j["vacuous"] = c.vacuous;
    return j;
}

Json to_json(const LQTReport& r)
{
    Json j;
    j["verdict"] = verdict(r.match);
    j["r"] = r.r;
    j["certified_range"] = Json::array({0, r.top});
    j["ce_betti"] = r.ce_betti;
    j["sym_betti"] = r.sym_betti;
    j["hc_betti"] = r.hc_betti;
    j["stable_range"] = r.stable_range;
    j["failing_degree"] = optional_degree(r.first_mismatch);
    return j;
}

Json to_json(const H2Report& r)
{
    Json j;
    j["verdict"] = verdict(r.equal);
    j["r"] = r.r;
    Json dims;
    dims["h2_gl"] = r.h2_gl;
    dims["hc1"] = r.hc1;
    dims["hc0"] = r.hc0;
    dims["h2_derived"] = r.h2_derived;
    dims["sym_prediction"] = r.sym_prediction;
    j["dims"] = std::move(dims);
    return j;
}

Json to_json(const Chern1Report& r)
{
    Json j;
    j["verdict"] = verdict(r.pass);
    j["extension"] = r.extension;
    j["r"] = r.r;
    j["samples"] = r.samples;
    j["seed"] = r.seed;
    j["homomorphism_failures"] = r.homomorphism_failures;
    j["commutator_failures"] = r.commutator_failures;
    j["conjugation_failures"] = r.conjugation_failures;
    j["conjugation_checked"] = r.conjugation_checked;
    Json dims;
    dims["image"] = r.image_dim;
    dims["rel_hc0"] = r.rel_hc0;
    j["dims"] = std::move(dims);
    j["image_in_kernel"] = r.image_in_kernel;
    j["surjective"] = r.surjective;
    return j;
}

Json to_json(const K1Probe& p)
{
    Json j;
    j["verdict"] = verdict(p.equal);
    j["generators"] = p.generators;
    Json dims;
    dims["span"] = p.span_dim;
    dims["rel_hc0"] = p.rel_hc0;
    j["dims"] = std::move(dims);
    j["contained"] = p.contained;
    return j;
}

Json to_json(const TangentTable& t)
{
    Json j;
    j["coefficient"] = t.coefficient;
    j["certified_range"] = to_json(t.range);
    Json rows = Json::array();
    for (const auto& row : t.rows) {
        Json r;
        r["base"] = row.base;
        r["rel_hc"] = row.rel_hc;
        r["ideal_hc"] = row.ideal_hc;
        r["ideal_mod_commutators"] = row.ideal_mod_commutators;
        r["alpha"] = verdict(row.alpha.holds);
        r["alpha_iso_through"] = row.alpha_iso_through;
        r["alpha_failing_degree"] = optional_degree(row.alpha.failing_degree);
        rows.push_back(std::move(r));
    }
    j["rows"] = std::move(rows);
    return j;
}

Report::Report(Json config) : config_(std::move(config)) {}

void Report::add(const std::string& task, Json inputs, const Json& result, double milliseconds)
{
    Json entry;
    entry["task"] = task;
    entry["inputs"] = std::move(inputs);
    for (const auto& [key, value] : result.items())
        entry[key] = value;
    results_.push_back(std::move(entry));
    timings_.push_back(milliseconds);
}

Json Report::to_json(bool timings) const
{
    Json j;
    j["version"] = kVersion;
    j["config"] = config_;
    Json results = results_;
    if (timings)
        for (std::size_t k = 0; k < results.size(); ++k)
            results[k]["timings_ms"] = timings_[k];
    j["results"] = std::move(results);
    return j;
}

std::string Report::dump(bool timings) const { return to_json(timings).dump(2) + "\n"; }

std::string Report::table(bool timings) const
{
    std::ostringstream os;
    const Json j = to_json(timings);
    for (const auto& entry : j["results"]) {
        os << "== " << entry["task"].get<std::string>() << "\n";
        Json body = entry;
        body.erase("task");
        render(os, body, "  ");
    }
    return os.str();
}

} // namespace cyclex
