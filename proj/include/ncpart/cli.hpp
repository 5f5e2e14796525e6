#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ncpart::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitUsage = 2;

inline constexpr std::size_t kMaxTransformOrder = 16;
inline constexpr std::size_t kMaxCount = 13;
inline constexpr std::size_t kMaxPairingCount = 14;
inline constexpr std::size_t kMaxVerify = 9;
inline constexpr std::size_t kMaxBlockPolynomial = 10;

/// Runs one command line (args exclude the program name) and returns the
/// process exit code. Results go to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ncpart::cli
