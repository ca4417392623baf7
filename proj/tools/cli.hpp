#pragma once

namespace skewsim::cli {

/// Entry point of the skewsim command-line tool. Exit codes: 0 success,
/// 2 parameter/usage error, 3 numeric or sampling error.
int run(int argc, const char* const* argv);

}  // namespace skewsim::cli
