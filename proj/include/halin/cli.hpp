/*
 * Command-line front end.  Subcommands:
 *   dist        compute a genus distribution with a chosen engine
 *   crosscheck  run several engines and compare coefficient-for-coefficient
 *   closed      evaluate the genus-0/1/2 closed forms
 *   canon       canonicalize a parameter tuple
 *   series      dump truncated generating-function coefficients as JSON
 *
 * Exit codes: 0 success/match, 1 engine mismatch, 2 bad arguments,
 * 3 enumeration budget exceeded, 4 unsupported domain.
 */
#pragma once

namespace halin {

int run_cli(int argc, char** argv);

}  // namespace halin
