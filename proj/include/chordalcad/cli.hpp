#ifndef CHORDALCAD_CLI_HPP
#define CHORDALCAD_CLI_HPP

namespace chordalcad {

/// Command-line entry point. Exit codes: 0 success, 1 parse or math
/// error, 2 usage error.
int run(int argc, const char* const* argv);

}  // namespace chordalcad

#endif
