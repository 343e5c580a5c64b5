#ifndef ORTHOLAB_CLI_HPP
#define ORTHOLAB_CLI_HPP

#include <string>
#include <vector>

namespace ortholab::cli {

// Executes one subcommand (kernel-check, ortho-verify, ellipse-ortho,
// summability, norm-identity, full-suite).  Returns 0 when every check
// passed, 1 on any failed check or numeric error, 2 on a usage error,
// 3 on an output I/O error.
int run(const std::vector<std::string>& args);

} // namespace ortholab::cli

#endif
