#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"
#include "vvmf/existence.hpp"

namespace vvmf::cli {

inline constexpr int kExitPass = 0;
inline constexpr int kExitVerificationFailure = 1;
inline constexpr int kExitUsage = 2;

struct RunConfig {
  Int order = kDefaultOrder;  // truncation N, at least 8
  double tol = 1e-8;          // in (0, 1e-2]
  std::size_t samples = 12;
  std::uint64_t seed = 2024;
  bool json = false;

  // Throws ParseError on out-of-range values.
  void validate() const;
};

// argv[0] is the program name. Output goes to `out`, diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
// Convenience form without the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// "trivial", "nu", "nu^k" or a JSON file {domain, kernel, name?, matrices}
// whose matrices are the values on the cosets of kernel in domain, in the
// order of coset_table(kernel, domain).
Representation parse_rep(const std::string& spec, const CongruenceSubgroup& domain);
Representation rep_from_json(const nlohmann::json& j);

// The cusps command's JSON object, read back.
CuspTableRow table_row_from_json(const nlohmann::json& j);

// Row for `h`: the reference representatives for the seven tabulated groups,
// computed orbit representatives otherwise; widths are always computed.
CuspTableRow cusp_row(const CongruenceSubgroup& h);

}  // namespace vvmf::cli
