#pragma once

namespace nodkit::cli {

constexpr int exit_usage = 64;

// Exit codes: 0 success or Found, 1 Refuted or failed check, 2 Inconclusive
// or error, 64 usage.
int run(int argc, const char* const* argv);

}  // namespace nodkit::cli
