#include "qhscatter/model.hpp"

#include <algorithm>
#include <cmath>

#include <json.hpp>

namespace qhs {

namespace {

bool finite(const complexd& z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
}

} // namespace

Potential1D Potential1D::build(std::vector<DeltaSpike> deltas,
                               std::vector<UniformSegment> segments) {
    for (const auto& d : deltas) {
        if (!std::isfinite(d.position) || !finite(d.strength))
            throw std::invalid_argument("delta spike has non-finite data");
    }
    for (const auto& s : segments) {
        if (!std::isfinite(s.x_lo) || !std::isfinite(s.x_hi) || !finite(s.value))
            throw std::invalid_argument("segment has non-finite data");
        if (!(s.x_lo < s.x_hi))
            throw std::invalid_argument("segment needs x_lo < x_hi");
    }

    std::sort(deltas.begin(), deltas.end(),
              [](const DeltaSpike& a, const DeltaSpike& b) { return a.position < b.position; });
    std::sort(segments.begin(), segments.end(),
              [](const UniformSegment& a, const UniformSegment& b) { return a.x_lo < b.x_lo; });

    for (std::size_t i = 1; i < segments.size(); ++i) {
        if (segments[i].x_lo < segments[i - 1].x_hi)
            throw OverlapError("segments overlap near x = " + std::to_string(segments[i].x_lo));
    }
    for (const auto& d : deltas) {
        for (const auto& s : segments) {
            if (d.position > s.x_lo && d.position < s.x_hi)
                throw PlacementError("delta at x = " + std::to_string(d.position) +
                                     " lies inside segment (" + std::to_string(s.x_lo) +
                                     ", " + std::to_string(s.x_hi) + ")");
        }
    }

    Potential1D p;
    p.deltas_ = std::move(deltas);
    p.segments_ = std::move(segments);
    return p;
}

bool Potential1D::real_valued() const {
    for (const auto& d : deltas_)
        if (d.strength.imag() != 0.0) return false;
    for (const auto& s : segments_)
        if (s.value.imag() != 0.0) return false;
    return true;
}

complexd Potential1D::value_at(double x) const {
    for (const auto& s : segments_) {
        if (x > s.x_lo && x < s.x_hi) return s.value;
    }
    return {0.0, 0.0};
}

std::string to_json(const Potential1D& p) {
    nlohmann::json j;
    j["deltas"] = nlohmann::json::array();
    for (const auto& d : p.deltas())
        j["deltas"].push_back({{"x", d.position},
                               {"re", d.strength.real()},
                               {"im", d.strength.imag()}});
    j["segments"] = nlohmann::json::array();
    for (const auto& s : p.segments())
        j["segments"].push_back({{"lo", s.x_lo},
                                 {"hi", s.x_hi},
                                 {"re", s.value.real()},
                                 {"im", s.value.imag()}});
    return j.dump();
}

Potential1D potential_from_json(const std::string& text) {
    std::vector<DeltaSpike> deltas;
    std::vector<UniformSegment> segments;
    try {
        const auto j = nlohmann::json::parse(text);
        if (j.contains("deltas"))
            for (const auto& d : j.at("deltas"))
                deltas.push_back({d.at("x").get<double>(),
                                  {d.at("re").get<double>(), d.at("im").get<double>()}});
        if (j.contains("segments"))
            for (const auto& s : j.at("segments"))
                segments.push_back({s.at("lo").get<double>(), s.at("hi").get<double>(),
                                    {s.at("re").get<double>(), s.at("im").get<double>()}});
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("bad potential JSON: ") + e.what());
    }
    return Potential1D::build(std::move(deltas), std::move(segments));
}

} // namespace qhs
