#include "xgbm/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace xgbm::io {

KeyValues read_key_values(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open parameter file: " + path);
    KeyValues kv;
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ss(line);
        std::string key, value;
        if (!(ss >> key)) continue;
        if (!(ss >> value))
            throw Error("malformed line in " + path + ": '" + line + "'");
        kv[key] = value;
    }
    return kv;
}

bool has_key(const KeyValues& kv, const std::string& key) {
    return kv.find(key) != kv.end();
}

double get_double(const KeyValues& kv, const std::string& key) {
    auto it = kv.find(key);
    if (it == kv.end()) throw Error("missing parameter key: " + key);
    return std::stod(it->second);
}

double get_double(const KeyValues& kv, const std::string& key, double fallback) {
    auto it = kv.find(key);
    return it == kv.end() ? fallback : std::stod(it->second);
}

QParams qparams_from(const KeyValues& kv) {
    QParams qp;
    qp.r = get_double(kv, "r", 0.0);
    qp.q = get_double(kv, "q", 0.0);
    qp.omega_q = get_double(kv, "omega_q");
    qp.theta = get_double(kv, "theta");
    qp.xi = get_double(kv, "xi");
    qp.rho = get_double(kv, "rho");
    qp.validate();
    return qp;
}

PParams pparams_from(const KeyValues& kv) {
    PParams pp;
    pp.alpha = get_double(kv, "alpha", 0.0);
    pp.beta = get_double(kv, "beta", 0.0);
    pp.omega = get_double(kv, "omega");
    pp.theta = get_double(kv, "theta");
    pp.xi = get_double(kv, "xi");
    pp.rho = get_double(kv, "rho");
    pp.validate();
    return pp;
}

QuadCfg quadcfg_from(const KeyValues& kv) {
    QuadCfg cfg;
    cfg.contour_height = get_double(kv, "contour_height", cfg.contour_height);
    cfg.nu_max = get_double(kv, "nu_max", cfg.nu_max);
    cfg.x_max = get_double(kv, "x_max", cfg.x_max);
    cfg.abs_tol = get_double(kv, "abs_tol", cfg.abs_tol);
    cfg.rel_tol = get_double(kv, "rel_tol", cfg.rel_tol);
    cfg.transition_eps = get_double(kv, "transition_eps", cfg.transition_eps);
    cfg.case2_terms = int(get_double(kv, "case2_terms", cfg.case2_terms));
    cfg.validate();
    return cfg;
}

std::vector<std::vector<std::string>> read_csv(const std::string& path,
                                               bool skip_header) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open csv file: " + path);
    std::vector<std::vector<std::string>> rows;
    std::string line;
    bool first = true;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        if (first && skip_header) {
            first = false;
            continue;
        }
        first = false;
        std::vector<std::string> cells;
        std::string cell;
        std::istringstream ss(line);
        while (std::getline(ss, cell, ',')) cells.push_back(cell);
        rows.push_back(std::move(cells));
    }
    return rows;
}

std::string fmt_g17(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

void write_csv_row(std::ostream& os, const std::vector<std::string>& cells) {
    for (size_t i = 0; i < cells.size(); ++i) {
        if (i) os << ',';
        os << cells[i];
    }
    os << '\n';
}

} // namespace xgbm::io
