#pragma once

namespace levylab {

/// Entry point of the command-line tool (argv[0] is the program name).
/// Returns the process exit code: 0 on success, 1 when a validation suite
/// reports a failing check, 2 on argument errors, 3 on domain/numerical
/// errors raised while executing a command.
int cli_main(int argc, char** argv);

}  // namespace levylab
