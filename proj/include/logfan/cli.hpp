#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace logfan {

/// Exit codes of the command-line front end.
enum ExitCode : int {
  kExitOk = 0,
  kExitCheckFailed = 1,
  kExitUsage = 2,  // parse, document or precondition error
};

/// Runs one `logfan` command; `args` excludes the program name.
///
///   check <file>                          validity, completeness, smoothness
///   subdivide --star <file> --center R…   star subdivision, prints a document
///   blowup <pairfile> --center R…         admissible blow-up of a pair
///   strata <pairfile>                     boundary strata counts
///   hom --src G --dst G --matrix M [--char p]
///   gallery [name] [--mutate]
///   render <file> [-o out.svg]
///   refine <file> --goal <file>           depth from LOGFAN_DEPTH (default 4)
///
/// Rays are written "1,0" and may be given as separate arguments or joined
/// with ';'. Generator lists and matrix rows use the same syntax.
int execute(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace logfan
