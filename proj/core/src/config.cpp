#include "rearr/config.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace rearr {

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    out.push_back(cur);
    return out;
}

std::string trim(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

double parse_double(const std::string& v, const std::string& key) {
    try {
        size_t pos = 0;
        const double x = std::stod(v, &pos);
        if (pos != v.size()) throw std::invalid_argument(v);
        return x;
    } catch (const std::exception&) {
        throw config_error("bad numeric value for '" + key + "': " + v);
    }
}

long parse_int(const std::string& v, const std::string& key) {
    try {
        size_t pos = 0;
        const long x = std::stol(v, &pos);
        if (pos != v.size()) throw std::invalid_argument(v);
        return x;
    } catch (const std::exception&) {
        throw config_error("bad integer value for '" + key + "': " + v);
    }
}

std::vector<double> parse_list(const std::string& v, const std::string& key) {
    std::vector<double> out;
    for (const auto& tok : split(v, ','))
        if (!trim(tok).empty()) out.push_back(parse_double(trim(tok), key));
    return out;
}

} // namespace

void apply_override(RunConfig& cfg, const std::string& key, const std::string& value) {
    const std::string v = trim(value);
    if (key == "dims") {
        cfg.dims.clear();
        for (const auto& tok : split(v, ','))
            if (!trim(tok).empty()) cfg.dims.push_back(int(parse_int(trim(tok), key)));
    } else if (key == "seed") {
        cfg.seed = std::uint64_t(parse_int(v, key));
    } else if (key == "samples") {
        cfg.samples = int(parse_int(v, key));
    } else if (key == "t_min_rel") {
        cfg.t_min_rel = parse_double(v, key);
    } else if (key == "t_points") {
        cfg.t_points = int(parse_int(v, key));
    } else if (key == "sigma") {
        cfg.sigma = parse_double(v, key);
    } else if (key == "R_schedule") {
        cfg.R_schedule = parse_list(v, key);
    } else if (key == "eps_schedule") {
        cfg.eps_schedule = parse_list(v, key);
    } else if (key == "delta_schedule") {
        cfg.delta_schedule = parse_list(v, key);
    } else if (key == "fixed_t_rel") {
        cfg.fixed_t_rel = parse_double(v, key);
    } else if (key == "pair_t0") {
        cfg.pair_t0 = parse_double(v, key);
    } else if (key == "alpha_over_pi") {
        cfg.alpha_over_pi = parse_list(v, key);
    } else if (key == "q_list") {
        cfg.q_list = parse_list(v, key);
    } else if (key == "tol") {
        cfg.tol = parse_double(v, key);
    } else if (key == "member_threshold") {
        cfg.member_threshold = parse_double(v, key);
    } else if (key == "kernel_scale") {
        cfg.kernel_scale = parse_double(v, key);
    } else if (key == "field_cells_per_delta") {
        cfg.field_cells_per_delta = int(parse_int(v, key));
    } else if (key == "threads") {
        cfg.threads = int(parse_int(v, key));
    } else if (key == "out") {
        cfg.out_path = v;
    } else {
        throw config_error("unknown config key: " + key);
    }
}

RunConfig load_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw config_error("cannot open config file: " + path);
    RunConfig cfg;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw config_error(path + ":" + std::to_string(lineno) +
                               ": expected key=value");
        apply_override(cfg, trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
    }
    return cfg;
}

void RunConfig::validate() const {
    if (dims.empty()) throw config_error("dims must be non-empty");
    for (int n : dims)
        if (n < 2) throw config_error("dims entries must be >= 2");
    if (samples < 1) throw config_error("samples must be >= 1");
    if (!(t_min_rel > 0.0) || t_min_rel >= 1.0)
        throw config_error("t_min_rel must be in (0, 1)");
    if (t_points < 2) throw config_error("t_points must be >= 2");
    if (!(sigma > 0.0 && sigma < 1.0)) throw config_error("sigma must be in (0, 1)");
    if (R_schedule.empty()) throw config_error("R_schedule must be non-empty");
    for (double R : R_schedule) {
        if (!(R > 0.0)) throw config_error("R_schedule entries must be > 0");
        const double lam = std::pow(R, sigma);
        if (!(lam < R)) throw config_error("R_schedule: lambda = R^sigma must stay below R");
    }
    for (double e : eps_schedule)
        if (!(e > 0.0 && e < 0.5)) throw config_error("eps_schedule entries must be in (0, 1/2)");
    for (double d : delta_schedule)
        if (!(d > 0.0 && d < 1.0)) throw config_error("delta_schedule entries must be in (0, 1)");
    if (!(fixed_t_rel > 0.0 && fixed_t_rel < 1.0))
        throw config_error("fixed_t_rel must be in (0, 1)");
    if (!(pair_t0 > 0.0)) throw config_error("pair_t0 must be > 0");
    for (double q : q_list)
        if (!(q >= 1.0)) throw config_error("q_list entries must be >= 1");
    if (!(tol > 0.0)) throw config_error("tol must be > 0");
    if (field_cells_per_delta < 2) throw config_error("field_cells_per_delta must be >= 2");
    if (threads < 0) throw config_error("threads must be >= 0");
}

std::string RunConfig::canonical() const {
    std::ostringstream os;
    os << "dims=";
    for (size_t i = 0; i < dims.size(); ++i) os << (i ? "," : "") << dims[i];
    os << ";seed=" << seed << ";samples=" << samples;
    char buf[64];
    auto num = [&](double x) {
        std::snprintf(buf, sizeof(buf), "%.17g", x);
        return std::string(buf);
    };
    os << ";t_min_rel=" << num(t_min_rel) << ";t_points=" << t_points;
    os << ";sigma=" << num(sigma) << ";R=";
    for (size_t i = 0; i < R_schedule.size(); ++i) os << (i ? "," : "") << num(R_schedule[i]);
    os << ";eps=";
    for (size_t i = 0; i < eps_schedule.size(); ++i)
        os << (i ? "," : "") << num(eps_schedule[i]);
    os << ";delta=";
    for (size_t i = 0; i < delta_schedule.size(); ++i)
        os << (i ? "," : "") << num(delta_schedule[i]);
    os << ";fixed_t_rel=" << num(fixed_t_rel) << ";pair_t0=" << num(pair_t0);
    os << ";alpha=";
    for (size_t i = 0; i < alpha_over_pi.size(); ++i)
        os << (i ? "," : "") << num(alpha_over_pi[i]);
    os << ";q=";
    for (size_t i = 0; i < q_list.size(); ++i) os << (i ? "," : "") << num(q_list[i]);
    os << ";tol=" << num(tol) << ";member_threshold=" << num(member_threshold);
    os << ";kernel_scale=" << num(kernel_scale)
       << ";cells=" << field_cells_per_delta;
    return os.str();
}

std::uint64_t RunConfig::config_hash() const {
    // FNV-1a
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : canonical()) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

} // namespace rearr
