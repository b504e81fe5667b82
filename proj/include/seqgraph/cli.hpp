#pragma once

#include <iosfwd>

namespace seqgraph {

// Exit codes: 0 success, 1 usage error (help on err), 2 runtime error.
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int cli_main(int argc, const char* const* argv);

}  // namespace seqgraph
