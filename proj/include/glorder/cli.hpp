#ifndef GLORDER_CLI_HPP
#define GLORDER_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace glorder {

// Entry point shared by the glorder binary and the tests. args excludes the
// program name. Returns 0 on success, 1 on validation/computation failure,
// 2 on usage errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace glorder

#endif
