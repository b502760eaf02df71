#pragma once

namespace carriergame {

// Subcommands: gamma-star, run, montecarlo, classify, check-lgdp.
// Exit codes: 0 success, 1 usage error, 2 I/O error.
int cli_main(int argc, const char* const* argv);

}  // namespace carriergame
