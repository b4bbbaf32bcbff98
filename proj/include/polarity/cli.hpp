#pragma once

namespace polarity {

// Exit codes: 0 pass, 1 usage or input error, 2 certificate failure,
// 3 inconclusive (budget exceeded).
int run_cli(int argc, const char* const* argv);

}  // namespace polarity
