#pragma once

namespace stumpbounds {

/// Command-line entry point. Exit codes: 0 success, 1 usage/config error,
/// 2 data error, 3 numeric failure.
int run_cli(int argc, const char* const* argv);

}  // namespace stumpbounds
