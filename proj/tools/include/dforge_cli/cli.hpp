#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dforge::cli {

/// Runs one command. Returns 0 on success, 1 on a domain error (error name on
/// `err`), 2 on a usage error.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dforge::cli
