#include "esa/config.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace esa {

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

long to_long(const std::string& key, const std::string& v) {
    std::size_t used = 0;
    long r = 0;
    try {
        r = std::stol(v, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used != v.size() || v.empty()) throw std::runtime_error("config: bad integer for " + key + ": " + v);
    return r;
}

}  // namespace

Config load_config(std::istream& in) {
    Config cfg;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) throw std::runtime_error("config line " + std::to_string(lineno) + ": expected key=value");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key == "precision_ladder") {
            cfg.precision_ladder.clear();
            std::stringstream ss(value);
            std::string item;
            while (std::getline(ss, item, ',')) {
                long bits = to_long(key, trim(item));
                if (bits < 32) throw std::runtime_error("config: precision below 32 bits");
                cfg.precision_ladder.push_back(static_cast<mpfr_prec_t>(bits));
            }
            if (cfg.precision_ladder.empty()) throw std::runtime_error("config: empty precision_ladder");
        } else if (key == "max_precision_bits") {
            cfg.max_precision_bits = static_cast<mpfr_prec_t>(to_long(key, value));
        } else if (key == "lmax") {
            cfg.lmax = static_cast<int>(to_long(key, value));
            if (cfg.lmax < 0) throw std::runtime_error("config: lmax must be nonnegative");
        } else if (key == "series_term_cap") {
            cfg.series_term_cap = to_long(key, value);
        } else if (key == "conjecture_m_max") {
            cfg.conjecture_m_max = static_cast<int>(to_long(key, value));
        } else {
            throw std::runtime_error("config: unknown key " + key);
        }
    }
    return cfg;
}

Config load_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("config: cannot read " + path);
    return load_config(in);
}

Config config_from_environment() {
    const char* path = std::getenv("ESA_CONFIG");
    if (path == nullptr || *path == '\0') return {};
    return load_config_file(path);
}

}  // namespace esa
