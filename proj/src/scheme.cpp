#include "mildisc/scheme.hpp"

#include "mildisc/dataset.hpp"
#include "mildisc/error.hpp"
#include "mildisc/kernels.hpp"

#include <json.hpp>

#include <cmath>
#include <fstream>
#include <limits>

namespace mildisc {

using nlohmann::json;

std::string_view to_string(Algorithm algorithm) noexcept {
    switch (algorithm) {
    case Algorithm::mil: return "mil";
    case Algorithm::modified_mil: return "modified-mil";
    case Algorithm::equal_width: return "equal-width";
    case Algorithm::equal_frequency: return "equal-frequency";
    case Algorithm::mdlp: return "mdlp";
    }
    return "?";
}

Algorithm parse_algorithm(std::string_view tag) {
    for (auto a : {Algorithm::mil, Algorithm::modified_mil, Algorithm::equal_width, Algorithm::equal_frequency,
                   Algorithm::mdlp}) {
        if (tag == to_string(a)) return a;
    }
    if (tag == "modified_mil" || tag == "mmil") return Algorithm::modified_mil;
    if (tag == "equal-freq") return Algorithm::equal_frequency;
    fail(ErrorKind::parameter, "unknown algorithm '" + std::string(tag) + "'");
}

std::vector<double> AttributeScheme::lower_bounds() const {
    std::vector<double> out;
    out.reserve(regions.size());
    for (const auto& r : regions) out.push_back(r.lower);
    return out;
}

std::size_t AttributeScheme::total_cts() const noexcept {
    std::size_t sum = 0;
    for (const auto& r : regions) sum += r.total_cts;
    return sum;
}

int apply_scheme(const AttributeScheme& scheme, double value) noexcept {
    if (scheme.regions.empty() || is_missing(value)) return 1;
    std::size_t lo = 0, hi = scheme.regions.size();
    while (hi - lo > 1) {
        const std::size_t mid = (lo + hi) / 2;
        if (value < scheme.regions[mid].lower) hi = mid;
        else lo = mid;
    }
    return scheme.regions[lo].label;
}

std::vector<RegionRepresentative> region_representatives(std::span<const Region> regions,
                                                         const InitialPartition& part) {
    std::vector<RegionRepresentative> out;
    out.reserve(regions.size());
    for (const auto& r : regions) out.push_back({r.label, (r.lower + std::min(r.upper, part.d_max)) / 2.0});
    return out;
}

std::string check_scheme(const AttributeScheme& s) {
    const auto& rs = s.regions;
    if (rs.empty()) return "scheme has no regions";
    if (rs.size() > s.subintervals)
        return "scheme has " + std::to_string(rs.size()) + " regions, more than " + std::to_string(s.subintervals);
    if (rs.front().lower != s.d_min) return "first region does not start at d_min";
    if (!std::isinf(rs.back().upper) || rs.back().upper < 0) return "last region is not open-ended";
    for (std::size_t i = 0; i < rs.size(); ++i) {
        if (rs[i].label != static_cast<int>(i) + 1) return "labels are not 1..R in order";
        if (rs[i].span < 1) return "region with zero span";
        if (i + 1 < rs.size()) {
            if (rs[i].upper != rs[i + 1].lower) return "regions are not contiguous";
            if (!(rs[i].lower < rs[i].upper)) return "region with empty extent";
        }
    }
    return {};
}

namespace {

json bound_to_json(double v) {
    if (std::isinf(v)) return v > 0 ? json("inf") : json("-inf");
    return v;
}

double bound_from_json(const json& j) {
    if (j.is_string()) {
        const auto s = j.get<std::string>();
        if (s == "inf") return std::numeric_limits<double>::infinity();
        if (s == "-inf") return -std::numeric_limits<double>::infinity();
        fail(ErrorKind::structural, "bad bound '" + s + "' in scheme file");
    }
    return j.get<double>();
}

json scheme_to_json(const AttributeScheme& s) {
    json params = json::object();
    if (s.mil_params) {
        params["c"] = s.mil_params->c;
        params["k"] = s.mil_params->k;
        params["seed"] = s.mil_params->seed;
    }
    if (s.bins) params["bins"] = *s.bins;
    json regions = json::array();
    for (const auto& r : s.regions) {
        json jr = {{"lower", r.lower}, {"upper", bound_to_json(r.upper)}, {"label", r.label},
                   {"count", r.total_cts}, {"span", r.span}};
        if (r.midpoint) jr["midpoint"] = *r.midpoint;
        regions.push_back(std::move(jr));
    }
    return json{{"attribute", s.attr_name},
                {"algorithm", std::string(to_string(s.algorithm))},
                {"params", std::move(params)},
                {"d_min", s.d_min},
                {"d_max", s.d_max},
                {"subintervals", s.subintervals},
                {"regions", std::move(regions)}};
}

AttributeScheme scheme_from_json(const json& j) {
    AttributeScheme s;
    s.attr_name = j.at("attribute").get<std::string>();
    s.algorithm = parse_algorithm(j.at("algorithm").get<std::string>());
    const auto& params = j.at("params");
    if (params.contains("c")) {
        MilParams p;
        p.c = params.at("c").get<std::uint32_t>();
        p.k = params.at("k").get<std::uint32_t>();
        p.seed = params.value("seed", std::uint64_t{0});
        s.mil_params = p;
    }
    if (params.contains("bins")) s.bins = params.at("bins").get<std::size_t>();
    s.d_min = j.at("d_min").get<double>();
    s.d_max = j.at("d_max").get<double>();
    for (const auto& jr : j.at("regions")) {
        Region r;
        r.lower = bound_from_json(jr.at("lower"));
        r.upper = bound_from_json(jr.at("upper"));
        r.label = jr.at("label").get<int>();
        r.total_cts = jr.value("count", std::size_t{0});
        r.span = jr.value("span", std::size_t{1});
        if (jr.contains("midpoint")) r.midpoint = jr.at("midpoint").get<double>();
        s.regions.push_back(r);
    }
    s.subintervals = j.value("subintervals", s.regions.size());
    if (auto problem = check_scheme(s); !problem.empty())
        fail(ErrorKind::structural, "scheme for '" + s.attr_name + "': " + problem);
    return s;
}

} // namespace

void write_scheme_file(const SchemeFile& file, std::ostream& out) {
    json schemes = json::array();
    for (const auto& s : file.schemes) schemes.push_back(scheme_to_json(s));
    const json doc = {{"dataset", file.dataset}, {"class_attribute", file.class_attribute}, {"schemes", schemes}};
    out << doc.dump(2) << '\n';
}

SchemeFile read_scheme_file(std::istream& in) {
    json doc;
    try {
        in >> doc;
        SchemeFile file;
        file.dataset = doc.value("dataset", std::string{});
        file.class_attribute = doc.value("class_attribute", std::string{});
        for (const auto& j : doc.at("schemes")) file.schemes.push_back(scheme_from_json(j));
        return file;
    } catch (const json::exception& e) {
        fail(ErrorKind::structural, std::string("scheme file: ") + e.what());
    }
}

SchemeFile load_scheme_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(ErrorKind::io, "cannot open '" + path + "'");
    return read_scheme_file(in);
}

} // namespace mildisc
