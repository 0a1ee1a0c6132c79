#include "srs/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace srs::io {

std::string decimal15(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.15g", v);
    return buf;
}

namespace {

Rat rat_from_json(const json& j) {
    if (j.is_number_integer()) return Rat(static_cast<long long>(j.get<long long>()));
    if (j.is_string()) return parse_rat(j.get<std::string>());
    if (j.is_number_float()) return parse_rat(decimal15(j.get<double>()));
    throw std::invalid_argument("expected rational as integer or string");
}

json rat_to_json(const Rat& r) {
    if (den(r) == 1 && num(r) >= -((Int(1) << 53)) && num(r) <= (Int(1) << 53))
        return num(r).convert_to<long long>();
    return rat_str(r);
}

std::string exact_str(const Rat& r) { return rat_str(r); }
std::string exact_str(const Root2& r) { return decimal15(r.to_double()); }
double as_double(const Rat& r) { return to_double(r); }
double as_double(const Root2& r) { return r.to_double(); }

}  // namespace

json instance_to_json(const Instance& inst) {
    json j;
    j["m"] = inst.m;
    if (inst.fluid) {
        j["fluid_volume"] = rat_to_json(inst.fluid_volume);
    } else {
        json jobs = json::array();
        for (const Rat& p : inst.jobs) jobs.push_back(rat_to_json(p));
        j["jobs"] = jobs;
    }
    return j;
}

Instance instance_from_json(const json& j) {
    int m = j.at("m").get<int>();
    if (j.contains("fluid_volume")) return Instance::fluid_of(rat_from_json(j.at("fluid_volume")), m);
    std::vector<Rat> jobs;
    for (const auto& item : j.at("jobs")) jobs.push_back(rat_from_json(item));
    return Instance(std::move(jobs), m);
}

json config_to_json(const SpeedConfig& cfg) {
    json speeds = json::array();
    for (const Rat& s : cfg.speeds) speeds.push_back(rat_to_json(s));
    return json{{"speeds", speeds}};
}

SpeedConfig config_from_json(const json& j) {
    std::vector<Rat> speeds;
    for (const auto& item : j.at("speeds")) speeds.push_back(rat_from_json(item));
    return SpeedConfig(std::move(speeds));
}

json profile_to_json(const BagProfile& bags) {
    json j;
    j["kind"] = bags.kind == ProfileKind::fluid ? "fluid" : "discrete";
    json sizes = json::array();
    for (const Rat& v : bags.sizes) sizes.push_back(rat_to_json(v));
    j["sizes"] = sizes;
    if (!bags.job_map.empty()) j["job_map"] = bags.job_map;
    return j;
}

json profile_to_json(const SampledProfile& bags) {
    json j;
    j["kind"] = "fluid";
    j["sampled"] = true;
    json sizes = json::array();
    for (const Root2& v : bags.sizes) sizes.push_back(decimal15(v.to_double()));
    j["sizes"] = sizes;
    return j;
}

BagProfile profile_from_json(const json& j) {
    BagProfile bags;
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "fluid") bags.kind = ProfileKind::fluid;
    else if (kind == "discrete") bags.kind = ProfileKind::discrete;
    else throw std::invalid_argument("unknown profile kind: " + kind);
    for (const auto& item : j.at("sizes")) bags.sizes.push_back(rat_from_json(item));
    if (j.contains("job_map")) bags.job_map = j.at("job_map").get<std::vector<int>>();
    return bags;
}

template <class T>
json report_to_json(const adversary::RobustnessReport<T>& report) {
    json j;
    j["family"] = report.family;
    j["certified"] = report.certified;
    j["exact"] = report.exact;
    j["configs"] = report.rows.size();
    j["max_ratio"] = exact_str(report.max_ratio);
    j["max_ratio_double"] = as_double(report.max_ratio);
    if (!report.rows.empty()) {
        const auto& worst = report.rows[report.argmax];
        j["worst_config"] = config_to_json(worst.cfg);
        j["worst_alg"] = exact_str(worst.alg);
        j["worst_opt"] = exact_str(worst.opt);
    }
    return j;
}

template <class T>
std::string report_to_csv(const adversary::RobustnessReport<T>& report) {
    std::ostringstream os;
    os << "speeds,alg,opt,ratio,ratio_double,exact_alg\n";
    for (const auto& row : report.rows) {
        std::string speeds;
        for (const Rat& s : row.cfg.speeds) {
            if (!speeds.empty()) speeds += ';';
            speeds += rat_str(s);
        }
        os << speeds << ',' << exact_str(row.alg) << ',' << exact_str(row.opt) << ','
           << exact_str(row.ratio) << ',' << as_double(row.ratio) << ','
           << (row.exact_alg ? 1 : 0) << '\n';
    }
    return os.str();
}

template json report_to_json<Rat>(const adversary::RobustnessReport<Rat>&);
template json report_to_json<Root2>(const adversary::RobustnessReport<Root2>&);
template std::string report_to_csv<Rat>(const adversary::RobustnessReport<Rat>&);
template std::string report_to_csv<Root2>(const adversary::RobustnessReport<Root2>&);

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot read file: " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot write file: " + path);
    out << content;
}

}  // namespace srs::io
