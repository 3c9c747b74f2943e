// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <iosfwd>

namespace adiclp {

/// Entry point behind the binary; streams are injectable for tests.
/// Exit codes: 0 ok, 2 parse/usage error, 10-14 solve outcomes o1r/o1a/o2/o3/o4,
/// 20 invalid certificate.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace adiclp
