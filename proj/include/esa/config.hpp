#pragma once

#include <mpfr.h>

#include <iosfwd>
#include <string>
#include <vector>

namespace esa {

/// Engine settings. Read from a key=value file (one setting per line, '#'
/// comments) whose path is taken from ESA_CONFIG; command-line flags
/// override it.
struct Config {
    std::vector<mpfr_prec_t> precision_ladder{128, 256, 512, 1024};
    mpfr_prec_t max_precision_bits = 4096;
    int lmax = 50;
    long series_term_cap = 1000000;
    int conjecture_m_max = 12;
};

/// Throws std::runtime_error on unreadable files, unknown keys or bad values.
Config load_config(std::istream& in);
Config load_config_file(const std::string& path);
/// Defaults, overlaid with $ESA_CONFIG when it is set.
Config config_from_environment();

}  // namespace esa
