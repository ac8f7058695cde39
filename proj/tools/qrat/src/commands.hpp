#pragma once

namespace qrat::cli {

constexpr int kExitOk = 0;
constexpr int kExitDomain = 2;
constexpr int kExitUsage = 64;

int run(int argc, char** argv);

}  // namespace qrat::cli
