#include "pdm/cli/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "pdm/cli/catalog.hpp"

namespace pdm::cli {

namespace {

std::string trim(const std::string& s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string::npos) return "";
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

real parse_real(const std::string& key, const std::string& text) {
    std::size_t used = 0;
    real v = 0;
    try {
        v = std::stold(text, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used == 0 || used != text.size() || !std::isfinite(v)) {
        throw ConfigError("config key '" + key + "': expected a number, got '" + text + "'");
    }
    return v;
}

long parse_integer(const std::string& key, const std::string& text) {
    const real v = parse_real(key, text);
    if (v != std::floor(v) || std::abs(v) > 1e9L) {
        throw ConfigError("config key '" + key + "': expected an integer, got '" + text + "'");
    }
    return static_cast<long>(v);
}

bool parse_bool(const std::string& key, const std::string& text) {
    if (text == "true" || text == "1" || text == "yes") return true;
    if (text == "false" || text == "0" || text == "no") return false;
    throw ConfigError("config key '" + key + "': expected true or false, got '" + text + "'");
}

std::vector<real> parse_list(const std::string& key, const std::string& text) {
    std::vector<real> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(parse_real(key, trim(item)));
    return out;
}

}  // namespace

const std::vector<std::string>& config_keys() {
    static const std::vector<std::string> keys{"profile", "expr",   "xmin",   "xmax",   "n",      "stencil",
                                               "hbar",    "delta_e", "lambda", "nmax",   "sweep",  "outdir",
                                               "a",       "anchor", "expert"};
    return keys;
}

ConfigMap parse_config(const std::string& text) {
    ConfigMap out;
    std::stringstream ss(text);
    std::string line;
    int number = 0;
    while (std::getline(ss, line)) {
        ++number;
        const std::string body = trim(line);
        if (body.empty() || body[0] == '#') continue;
        const auto eq = body.find('=');
        if (eq == std::string::npos) {
            throw ConfigError("config line " + std::to_string(number) + ": expected key = value");
        }
        const std::string key = trim(body.substr(0, eq));
        const std::string value = trim(body.substr(eq + 1));
        const auto& keys = config_keys();
        if (std::find(keys.begin(), keys.end(), key) == keys.end()) {
            throw ConfigError("config line " + std::to_string(number) + ": unknown key '" + key + "'");
        }
        if (!out.emplace(key, value).second) {
            throw ConfigError("config line " + std::to_string(number) + ": repeated key '" + key + "'");
        }
    }
    return out;
}

ConfigMap load_config(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("cannot read config file " + path.string());
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_config(buf.str());
}

Scenario make_scenario(const ConfigMap& values) {
    auto get = [&](const std::string& key) -> const std::string* {
        const auto it = values.find(key);
        return it == values.end() ? nullptr : &it->second;
    };

    Scenario s;
    const std::string* expr = get("expr");
    const std::string* profile = get("profile");
    if (expr && profile) throw ConfigError("give either 'profile' or 'expr', not both");
    if (expr) {
        s.profile = "custom";
        s.expr = *expr;
        if (!get("xmin") || !get("xmax")) throw ConfigError("a custom 'expr' needs 'xmin' and 'xmax'");
    } else {
        const std::string name = profile ? *profile : "quadratic";
        const CatalogEntry* entry = find_profile(name);
        if (!entry) throw ConfigError("unknown profile '" + name + "' (catalog: quadratic, cosine, exponential)");
        s.profile = entry->name;
        s.expr = entry->expr;
        s.domain = entry->domain;
        s.params.anchor = entry->anchor;
        s.grid = entry->grid;
    }

    if (auto v = get("xmin")) s.domain.lo = parse_real("xmin", *v);
    if (auto v = get("xmax")) s.domain.hi = parse_real("xmax", *v);
    if (auto v = get("n")) {
        const long n = parse_integer("n", *v);
        if (n < 0) throw ConfigError("config key 'n' must be positive");
        s.grid = static_cast<std::size_t>(n);
    }
    if (auto v = get("stencil")) {
        const long order = parse_integer("stencil", *v);
        if (order != 2 && order != 4) throw ConfigError("config key 'stencil' must be 2 or 4");
        s.stencil = order == 2 ? Stencil::second : Stencil::fourth;
    }
    if (auto v = get("hbar")) s.params.hbar = parse_real("hbar", *v);
    if (auto v = get("delta_e")) s.params.delta_e = parse_real("delta_e", *v);
    if (auto v = get("lambda")) s.params.lambda = parse_real("lambda", *v);
    if (auto v = get("anchor")) {
        s.params.anchor = parse_real("anchor", *v);
    } else if (s.params.anchor < s.domain.lo || s.params.anchor > s.domain.hi) {
        s.params.anchor = (s.domain.lo + s.domain.hi) / 2;  // default anchor 0 lies outside the domain
    }
    if (auto v = get("expert")) s.params.expert_a_override = parse_bool("expert", *v);
    s.params.a = s.params.hbar;
    if (auto v = get("a")) s.params.a = parse_real("a", *v);
    if (auto v = get("nmax")) s.n_max = static_cast<int>(parse_integer("nmax", *v));
    if (auto v = get("sweep")) s.sweep = parse_list("sweep", *v);
    if (auto v = get("outdir")) s.outdir = *v;

    s.validate();
    return s;
}

void Scenario::validate() const {
    if (!(domain.lo < domain.hi)) throw ConfigError("domain must satisfy xmin < xmax");
    if (grid < min_scenario_grid) {
        throw ConfigError("grid size must be at least " + std::to_string(min_scenario_grid));
    }
    if (n_max < 0 || n_max > max_scenario_nmax) {
        throw ConfigError("nmax must lie in [0, " + std::to_string(max_scenario_nmax) + "]");
    }
    if (params.anchor < domain.lo || params.anchor > domain.hi) throw ConfigError("anchor must lie inside the domain");
    try {
        params.validate();
    } catch (const ParameterError& e) {
        throw ConfigError(e.what());
    }
    if (sweep.empty()) throw ConfigError("sweep list must not be empty");
    std::vector<real> sorted = sweep;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        throw ConfigError("sweep values must be distinct");
    }
    if (sorted.front() < 0) throw ConfigError("sweep values must be non-negative");
}

LadderSystem Scenario::build_system() const {
    return LadderSystem(make_profile(expr, domain), params, Grid(domain.lo, domain.hi, grid), stencil);
}

}  // namespace pdm::cli
