#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <mckay/io.hpp>

namespace mckay::cli {

enum ExitCode : int {
  kOk = 0,
  kVerifyFailed = 1,
  kParseError = 2,
  kSizeError = 3,
  kInadmissibleType = 4,
  kUnsupported = 5,
};

/// Instances beyond these are refused with kSizeError.
inline constexpr std::size_t kMaxDimension = 6;
inline constexpr Int kMaxOrder = 2000;

struct VerifyReport {
  std::vector<std::string> passed;
  std::vector<std::string> failures;
  std::vector<std::string> notices;

  [[nodiscard]] bool ok() const { return failures.empty(); }
  [[nodiscard]] Json to_json() const;
};

/// Full invariant suite on one instance. Brute-force oracles run only when
/// m <= budget. A cut, if given, is checked as well.
VerifyReport verify_instance(const GroupInput& g, Int budget,
                             const std::optional<Json>& cut = std::nullopt);

/// Entry point; args excludes the program name.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace mckay::cli
