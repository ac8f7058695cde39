#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace qrat::cli {

struct ConfigError : std::domain_error {
    using std::domain_error::domain_error;
};

enum class OutputFormat { Text, Json, Csv };

OutputFormat parse_format(const std::string& text);
std::string format_name(OutputFormat f);

constexpr int kMaxDepth = 12;

struct Config {
    std::string default_q = "0.5";
    int default_depth = 4;
    OutputFormat output_format = OutputFormat::Text;
    double svg_scale = 5.0;
    std::uint64_t rng_seed = 20240101;
};

// key=value lines, '#' starts a comment
Config parse_config(const std::string& text);
Config load_config(const std::string& path);

// flag, then QRAT_SEED, then the config value
std::uint64_t resolve_seed(const std::optional<std::uint64_t>& flag, const Config& cfg, const char* env);

}  // namespace qrat::cli
