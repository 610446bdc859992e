#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace weyl {

// Exit codes: 0 success, 1 a mathematical check failed, 2 usage or input error.
// args excludes the program name.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Checkpoint directory used by `chain search` when --checkpoint is not given.
inline constexpr const char* kCheckpointDirEnv = "WEYLCHAIN_CHECKPOINT_DIR";

}  // namespace weyl
