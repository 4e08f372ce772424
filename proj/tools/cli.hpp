#pragma once

#include <iosfwd>

namespace rlpbwt {

/// Exit codes: 0 ok, 1 usage, 2 I/O, 3 validation, 4 selftest failure.
/// Results go to `out`, diagnostics to `err`.
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace rlpbwt
