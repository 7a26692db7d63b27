#pragma once

#include <string>

namespace demat::cli {

/// Directory holding the bundled dataset: the DEMAT_DATA_DIR environment
/// variable when set, otherwise the location configured at build time.
std::string default_data_dir();

/// Parses argv and executes one subcommand. Exit codes: 0 on success, 1 on
/// data errors, 2 on usage errors, 3 when a replication run fails its check.
int run(int argc, char** argv);

}  // namespace demat::cli
