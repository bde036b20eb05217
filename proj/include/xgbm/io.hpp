#ifndef XGBM_IO_HPP
#define XGBM_IO_HPP

// Flat key-value parameter files ("key value" per line, '#' comments) and
// small CSV helpers. CSV is the single output format of the CLI.

#include "xgbm/model.hpp"
#include "xgbm/types.hpp"

#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace xgbm::io {

using KeyValues = std::map<std::string, std::string>;

KeyValues read_key_values(const std::string& path);

double get_double(const KeyValues& kv, const std::string& key);
double get_double(const KeyValues& kv, const std::string& key, double fallback);
bool has_key(const KeyValues& kv, const std::string& key);

// A Q-parameter file carries omega_q; a P-parameter file carries omega (and
// optionally alpha/beta).
QParams qparams_from(const KeyValues& kv);
PParams pparams_from(const KeyValues& kv);
QuadCfg quadcfg_from(const KeyValues& kv);

std::vector<std::vector<std::string>> read_csv(const std::string& path,
                                               bool skip_header = true);

// 17 significant digits, the precision the golden files pin.
std::string fmt_g17(double x);

void write_csv_row(std::ostream& os, const std::vector<std::string>& cells);

} // namespace xgbm::io

#endif
