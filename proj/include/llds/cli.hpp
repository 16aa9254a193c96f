#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace llds {

// Runs one CLI invocation.  Exit code 0 on pass/true, 1 on fail or
// false-with-witness (operation errors included, surfaced in the report),
// 2 on usage errors.  All output goes through the given streams and is a
// deterministic function of (args, seeds).
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace llds
