#include "config.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "qrat/laurent.hpp"

namespace qrat::cli {

namespace {

std::string trim(const std::string& s)
{
    auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos)
        return "";
    auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::uint64_t parse_seed(const std::string& v)
{
    std::size_t pos = 0;
    unsigned long long s = 0;
    try {
        if (!v.empty() && v[0] == '-')
            throw std::invalid_argument(v);
        s = std::stoull(v, &pos);
    } catch (const std::logic_error&) {
        throw ConfigError("bad rng_seed: " + v);
    }
    if (pos != v.size())
        throw ConfigError("bad rng_seed: " + v);
    return s;
}

}  // namespace

OutputFormat parse_format(const std::string& text)
{
    if (text == "text")
        return OutputFormat::Text;
    if (text == "json")
        return OutputFormat::Json;
    if (text == "csv")
        return OutputFormat::Csv;
    throw ConfigError("unknown output format: " + text);
}

std::string format_name(OutputFormat f)
{
    switch (f) {
    case OutputFormat::Json:
        return "json";
    case OutputFormat::Csv:
        return "csv";
    default:
        return "text";
    }
}

Config parse_config(const std::string& text)
{
    Config c;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos)
            line.erase(hash);
        line = trim(line);
        if (line.empty())
            continue;
        auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError("config line " + std::to_string(lineno) + ": expected key=value");
        std::string key = trim(line.substr(0, eq)), val = trim(line.substr(eq + 1));
        if (key == "default_q") {
            QValue q = QValue::parse(val);
            if (!(q.value > 0 && q.value < 1))
                throw ConfigError("default_q must lie in (0,1)");
            c.default_q = val;
        } else if (key == "default_depth") {
            std::size_t pos = 0;
            int d = 0;
            try {
                d = std::stoi(val, &pos);
            } catch (const std::logic_error&) {
                pos = 0;
            }
            if (pos == 0 || pos != val.size() || d < 1 || d > kMaxDepth)
                throw ConfigError("default_depth must be an integer in [1," + std::to_string(kMaxDepth) + "]");
            c.default_depth = d;
        } else if (key == "output_format") {
            c.output_format = parse_format(val);
        } else if (key == "svg_scale") {
            std::size_t pos = 0;
            double s = 0;
            try {
                s = std::stod(val, &pos);
            } catch (const std::logic_error&) {
                pos = 0;
            }
            if (pos == 0 || pos != val.size() || !(s > 0) || !std::isfinite(s))
                throw ConfigError("svg_scale must be positive");
            c.svg_scale = s;
        } else if (key == "rng_seed") {
            c.rng_seed = parse_seed(val);
        } else {
            throw ConfigError("unknown config key: " + key);
        }
    }
    return c;
}

Config load_config(const std::string& path)
{
    std::ifstream f(path);
    if (!f)
        throw ConfigError("cannot read config " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return parse_config(ss.str());
}

std::uint64_t resolve_seed(const std::optional<std::uint64_t>& flag, const Config& cfg, const char* env)
{
    if (flag)
        return *flag;
    if (env && *env)
        return parse_seed(env);
    return cfg.rng_seed;
}

}  // namespace qrat::cli
