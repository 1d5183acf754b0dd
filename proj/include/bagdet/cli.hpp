#ifndef BAGDET_CLI_HPP
#define BAGDET_CLI_HPP

#include "bagdet/limits.hpp"

#include <string>
#include <vector>

namespace bagdet::cli {

struct Config {
    Limits limits;
    std::string format = "json"; // or "text"
    unsigned long seed = 0;
};

/// Reads BAGDET_CONFIG (JSON with limit overrides) when set.
Config config_from_env();

/// Entry point used by main() and by in-process tests. Returns the exit
/// code: 0 success/determined, 1 not determined (or failed verification),
/// 2 error.
int run(const std::vector<std::string>& args);
int run(int argc, char** argv);

} // namespace bagdet::cli

#endif
