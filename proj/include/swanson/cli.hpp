#pragma once

namespace swanson::cli {

// Entry point for the swanson-ep command line tool.
// Exit codes: 0 success, 1 usage/config error, 2 numerical failure,
// 3 verification-suite mismatch.
int cli_main(int argc, char** argv);

}  // namespace swanson::cli
