#pragma once

#include <iosfwd>

namespace varseq {

/// Entry point of the `varseq` tool, separated from main() so tests can
/// drive it directly. Returns the process exit code: 0 on success, 1 on
/// parse or usage errors, 2 when an instance is too large to enumerate.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace varseq
