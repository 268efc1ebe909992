#include "poolsim/scenario_io.hpp"

#include <cmath>
#include <fstream>
#include <stdexcept>

namespace poolsim {

using nlohmann::json;

namespace {

RateSegment segment_from_json(const json& s) {
    const std::string type = s.at("type").get<std::string>();
    const double t0 = s.at("t0").get<double>();
    const double t1 = s.at("t1").get<double>();
    if (type == "constant")
        return RateSegment::constant(t0, t1, s.at("rate").get<double>());
    if (type == "linear") {
        // "slope" (written by the serializer) round-trips bit-exactly; the
        // rate0/rate1 form is for hand-written files.
        if (s.contains("slope")) {
            RateSegment seg{RateSegment::Kind::linear, t0, t1, s.at("rate0").get<double>()};
            seg.slope = s.at("slope").get<double>();
            return seg;
        }
        return RateSegment::linear(t0, t1, s.at("rate0").get<double>(),
                                   s.at("rate1").get<double>());
    }
    if (type == "sinusoid")
        return RateSegment::sinusoid(t0, t1, s.at("base").get<double>(),
                                     s.at("amplitude").get<double>(),
                                     s.at("omega").get<double>(),
                                     s.value("phase", 0.0));
    throw std::invalid_argument("unknown rate segment type: " + type);
}

json segment_to_json(const RateSegment& s) {
    json j{{"t0", s.t0}, {"t1", s.t1}};
    switch (s.kind) {
        case RateSegment::Kind::constant:
            j["type"] = "constant";
            j["rate"] = s.base;
            break;
        case RateSegment::Kind::linear:
            j["type"] = "linear";
            j["rate0"] = s.base;
            j["rate1"] = s.base + s.slope * (s.t1 - s.t0);
            j["slope"] = s.slope;
            break;
        case RateSegment::Kind::sinusoid:
            j["type"] = "sinusoid";
            j["base"] = s.base;
            j["amplitude"] = s.amplitude;
            j["omega"] = s.omega;
            j["phase"] = s.phase;
            break;
    }
    return j;
}

EngineMode mode_from_string(const std::string& m) {
    if (m == "thinning") return EngineMode::thinning;
    if (m == "coupled") return EngineMode::coupled;
    if (m == "oracle") return EngineMode::oracle;
    throw std::invalid_argument("unknown engine mode: " + m);
}

}  // namespace

Scenario scenario_from_json(const json& doc) {
    Scenario sc;
    sc.n = doc.at("n").get<std::int64_t>();
    sc.mu = doc.at("mu").get<double>();
    sc.delta = doc.at("delta").get<int>();

    const json& alpha = doc.at("alpha");
    if (alpha.contains("value"))
        sc.alpha = AlphaRule{AlphaRule::Kind::value, alpha.at("value").get<double>()};
    else if (alpha.contains("exponent"))
        sc.alpha = AlphaRule{AlphaRule::Kind::exponent, alpha.at("exponent").get<double>()};
    else
        throw std::invalid_argument("alpha needs either \"value\" or \"exponent\"");

    std::vector<RateSegment> segments;
    for (const json& s : doc.at("lambda")) segments.push_back(segment_from_json(s));
    sc.lambda = ArrivalRateFn(std::move(segments));

    sc.horizon = doc.at("T").get<double>();
    if (doc.contains("init")) {
        const json& init = doc.at("init");
        sc.init_levels = init.value("levels", std::vector<std::int64_t>{});
        sc.ell0 = init.value("ell0", 0);
    }
    sc.seed = doc.value("seed", std::uint64_t{0});
    sc.mode = mode_from_string(doc.value("mode", std::string{"thinning"}));
    sc.grid = doc.value("grid", 0.01);
    sc.validate();
    return sc;
}

json scenario_to_json(const Scenario& sc) {
    json doc;
    doc["n"] = sc.n;
    doc["mu"] = sc.mu;
    doc["delta"] = sc.delta;
    doc["alpha"] = sc.alpha.kind == AlphaRule::Kind::value
                       ? json{{"value", sc.alpha.param}}
                       : json{{"exponent", sc.alpha.param}};
    json segments = json::array();
    for (const RateSegment& s : sc.lambda.segments()) segments.push_back(segment_to_json(s));
    doc["lambda"] = std::move(segments);
    doc["T"] = sc.horizon;
    doc["init"] = json{{"levels", sc.init_levels}, {"ell0", sc.ell0}};
    doc["seed"] = sc.seed;
    doc["mode"] = to_string(sc.mode);
    doc["grid"] = sc.grid;
    return doc;
}

Scenario load_scenario_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open scenario file: " + path);
    json doc;
    in >> doc;
    return scenario_from_json(doc);
}

void save_scenario_file(const Scenario& scenario, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write scenario file: " + path);
    out << scenario_to_json(scenario).dump(2) << '\n';
}

namespace {

Scenario figure2_base(int delta, std::int64_t n, std::uint64_t seed) {
    Scenario sc;
    sc.n = n;
    sc.mu = 1.0;
    sc.delta = delta;
    sc.alpha = AlphaRule{AlphaRule::Kind::exponent, 0.48};
    sc.horizon = 25.0;
    sc.ell0 = 0;
    sc.seed = seed;
    sc.grid = 0.01;
    return sc;
}

}  // namespace

Scenario figure2_scenario(int delta, std::int64_t n, std::uint64_t seed) {
    Scenario sc = figure2_base(delta, n, seed);
    const double high0 = 4.5 + 0.8 * std::sin(10.0 * 3.0);
    const double high1 = 4.5 + 0.8 * std::sin(10.0 * 12.0);
    const double low0 = 1.5 + 0.2 * std::sin(10.0 * 14.0);
    const double low1 = 1.5 + 0.2 * std::sin(10.0 * 23.0);
    sc.lambda = ArrivalRateFn({
        RateSegment::linear(0.0, 3.0, 0.0, high0),
        RateSegment::sinusoid(3.0, 12.0, 4.5, 0.8, 10.0),
        RateSegment::linear(12.0, 14.0, high1, low0),
        RateSegment::sinusoid(14.0, 23.0, 1.5, 0.2, 10.0),
        RateSegment::linear(23.0, 25.0, low1, 0.0),
    });
    sc.mode = EngineMode::thinning;
    sc.validate();
    return sc;
}

Scenario figure2_pwc_scenario(int delta, std::int64_t n, std::uint64_t seed) {
    Scenario sc = figure2_base(delta, n, seed);
    sc.lambda = ArrivalRateFn({
        RateSegment::linear(0.0, 3.0, 0.0, 4.5),
        RateSegment::constant(3.0, 12.0, 4.5),
        RateSegment::linear(12.0, 14.0, 4.5, 1.5),
        RateSegment::constant(14.0, 23.0, 1.5),
        RateSegment::linear(23.0, 25.0, 1.5, 0.0),
    });
    sc.mode = EngineMode::coupled;
    sc.validate();
    return sc;
}

}  // namespace poolsim
