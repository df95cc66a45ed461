#pragma once

#include "cyclex/core/chain_complex.hpp"
#include "cyclex/excision/excision.hpp"
#include "cyclex/hochschild/cyclic.hpp"
#include "cyclex/lie/trace.hpp"
#include "cyclex/tangent/tangent.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace cyclex {

using Json = nlohmann::ordered_json;

inline constexpr const char* kVersion = "0.1.0";

Json to_json(const Interval& i);
/// Always carries certified_range next to betti.
Json to_json(const HomologyReport& h);
Json to_json(const QuasiIsoVerdict& v);
Json to_json(const ConnesReport& c);
Json to_json(const HUnitalVerdict& v);
Json to_json(const GradedPieceVerdict& v);
Json to_json(const RelativeHomology& r);
Json to_json(const ExcisionTheory& t);
Json to_json(const WodzickiVerdict& w);
Json to_json(const CorollaryReport& c);
Json to_json(const TraceChainCheck& c);
Json to_json(const LQTReport& r);
Json to_json(const H2Report& r);
Json to_json(const Chern1Report& r);
Json to_json(const K1Probe& p);
Json to_json(const TangentTable& t);

/// {version, config, results: [{task, inputs, ...result fields, timings_ms?}]}.
/// Keys keep insertion order, so output is byte-stable for fixed inputs.
class Report {
public:
    explicit Report(Json config);

    void add(const std::string& task, Json inputs, const Json& result, double milliseconds);

    const Json& results() const { return results_; }
    /// Timings are machine dependent and only emitted on request.
    Json to_json(bool timings) const;
    std::string dump(bool timings) const;
    /// One block per task: scalar fields as "key: value", arrays inline.
    std::string table(bool timings) const;

private:
    Json config_;
    Json results_ = Json::array();
    std::vector<double> timings_;
};

} // namespace cyclex
