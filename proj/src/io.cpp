#include "lemni/io.hpp"

#include <charconv>
#include <chrono>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace lemni::io {

using nlohmann::json;

namespace {

// shortest round-trip representation keeps files readable and byte-stable
std::string fmt(double v) {
    char buf[32];
    auto [p, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    if (ec != std::errc()) throw std::runtime_error("number formatting failed");
    return std::string(buf, p);
}

double as_double(const json& j) { return j.get<double>(); }

}  // namespace

std::string config_to_json(const RootConfiguration& config) {
    json j;
    j["tag"] = to_string(config.tag());
    json roots = json::array();
    for (const Root& r : config.roots()) {
        roots.push_back({{"re", r.location.real()},
                         {"im", r.location.imag()},
                         {"mult", r.multiplicity}});
    }
    j["roots"] = roots;
    return j.dump(2) + "\n";
}

RootConfiguration parse_config(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw std::runtime_error(std::string("configuration JSON parse error: ") + e.what());
    }
    if (j.contains("angles_over_2pi")) {
        std::vector<double> angles = j.at("angles_over_2pi").get<std::vector<double>>();
        std::vector<long long> mults;
        if (j.contains("mults"))
            mults = j.at("mults").get<std::vector<long long>>();
        else
            mults.assign(angles.size(), 1);
        return RootConfiguration::from_angles(angles, mults);
    }
    if (!j.contains("roots"))
        throw std::runtime_error("configuration JSON needs \"roots\" or \"angles_over_2pi\"");
    std::vector<Root> roots;
    for (const json& r : j.at("roots")) {
        roots.push_back({Complex(as_double(r.at("re")), as_double(r.at("im"))),
                         r.value("mult", 1LL)});
    }
    ConstraintTag tag = tag_from_string(j.value("tag", std::string("NONE")));
    return RootConfiguration(std::move(roots), tag);
}

std::string measure_to_json(const CircleMeasure& measure) {
    json coeffs = json::array();
    for (size_t k = 0; k < measure.coeffs.size(); ++k) {
        coeffs.push_back({{"k", k + 1},
                          {"re", measure.coeffs[k].real()},
                          {"im", measure.coeffs[k].imag()}});
    }
    return json{{"coeffs", coeffs}}.dump(2) + "\n";
}

CircleMeasure parse_measure(const std::string& text) {
    json j = json::parse(text);
    CircleMeasure m;
    for (const json& c : j.at("coeffs")) {
        size_t k = c.at("k").get<size_t>();
        if (k < 1) throw std::runtime_error("measure JSON: k must be >= 1");
        if (m.coeffs.size() < k) m.coeffs.resize(k, Complex(0.0, 0.0));
        m.coeffs[k - 1] = Complex(as_double(c.at("re")), as_double(c.at("im")));
    }
    return m;
}

std::string verify_to_json(const std::vector<VerifyReport>& reports) {
    json arr = json::array();
    for (const VerifyReport& r : reports) {
        arr.push_back({{"check", r.check},
                       {"lhs", r.lhs},
                       {"rhs", r.rhs},
                       {"margin", r.margin},
                       {"tolerance", r.tolerance},
                       {"pass", r.pass}});
    }
    return arr.dump(2) + "\n";
}

std::string area_csv(const std::vector<AreaRow>& rows) {
    std::ostringstream out;
    out << "spec_id,kind,p,T,seed,radius,mean,stddev\n";
    for (const AreaRow& r : rows) {
        out << r.spec_id << ',' << r.kind << ',' << r.estimate.points_per_trial << ','
            << r.estimate.trials << ',' << r.estimate.seed << ','
            << fmt(r.estimate.bounding_radius) << ',' << fmt(r.estimate.mean) << ','
            << fmt(r.estimate.stddev) << '\n';
    }
    return out.str();
}

std::string trace_csv(const std::vector<TraceRow>& rows) {
    std::ostringstream out;
    out << "candidate_id,angles,q,s,r,area_mean,area_std\n";
    for (const TraceRow& row : rows) {
        out << row.candidate_id << ',';
        for (size_t i = 0; i < row.angles_over_2pi.size(); ++i) {
            if (i) out << ';';
            out << fmt(row.angles_over_2pi[i]);
        }
        out << ',' << row.q << ',' << row.s << ',' << row.r << ',' << fmt(row.area_mean) << ','
            << fmt(row.area_std) << '\n';
    }
    return out.str();
}

std::vector<TraceRow> parse_trace_csv(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line)) throw std::runtime_error("trace CSV: empty input");
    std::vector<TraceRow> rows;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::string field;
        TraceRow row;
        std::getline(ls, field, ',');
        row.candidate_id = std::stoll(field);
        std::getline(ls, field, ',');
        if (!field.empty()) {
            std::istringstream as(field);
            std::string a;
            while (std::getline(as, a, ';')) row.angles_over_2pi.push_back(std::stod(a));
        }
        std::getline(ls, field, ',');
        row.q = std::stoi(field);
        std::getline(ls, field, ',');
        row.s = std::stoi(field);
        std::getline(ls, field, ',');
        row.r = std::stoi(field);
        std::getline(ls, field, ',');
        row.area_mean = std::stod(field);
        std::getline(ls, field, ',');
        row.area_std = std::stod(field);
        rows.push_back(std::move(row));
    }
    return rows;
}

namespace {

json estimate_to_json(const AreaEstimate& e) {
    return {{"mean", e.mean},         {"stddev", e.stddev},
            {"trials", e.trials},     {"points_per_trial", e.points_per_trial},
            {"radius", e.bounding_radius}, {"seed", e.seed}};
}

AreaEstimate estimate_from_json(const json& j) {
    AreaEstimate e;
    e.mean = as_double(j.at("mean"));
    e.stddev = as_double(j.at("stddev"));
    e.trials = j.at("trials").get<int>();
    e.points_per_trial = j.at("points_per_trial").get<long long>();
    e.bounding_radius = as_double(j.at("radius"));
    e.seed = j.at("seed").get<std::uint64_t>();
    return e;
}

}  // namespace

std::string report_to_json(const SearchReport& report, const std::string& trace_file) {
    json j;
    j["best"] = json::parse(config_to_json(report.best));
    j["best_area"] = estimate_to_json(report.best_area);
    j["evaluated"] = report.evaluated;
    j["seed"] = report.seed;
    j["ties"] = report.ties;
    if (!trace_file.empty()) j["trace_file"] = trace_file;
    return j.dump(2) + "\n";
}

SearchReport parse_report(const std::string& text) {
    json j = json::parse(text);
    SearchReport report{parse_config(j.at("best").dump()),
                        estimate_from_json(j.at("best_area")),
                        j.at("evaluated").get<long long>(),
                        j.at("ties").get<std::vector<std::vector<double>>>(),
                        {},
                        j.at("seed").get<std::uint64_t>()};
    return report;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << content;
    if (!out) throw std::runtime_error("write failed for " + path);
}

std::uint64_t fnv1a(const std::string& bytes) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

std::string manifest_json(const std::string& command_line, std::uint64_t seed,
                          const std::vector<ManifestEntry>& outputs) {
    json files = json::array();
    for (const ManifestEntry& e : outputs) {
        std::ostringstream hex;
        hex << std::hex << e.hash;
        files.push_back({{"path", e.path}, {"fnv1a", hex.str()}});
    }
    auto now = std::chrono::system_clock::now().time_since_epoch();
    json j{{"command", command_line},
           {"seed", seed},
           {"version", "lemnikit 0.1.0"},
           {"timestamp_unix_ms",
            std::chrono::duration_cast<std::chrono::milliseconds>(now).count()},
           {"outputs", files}};
    return j.dump(2) + "\n";
}

}  // namespace lemni::io
