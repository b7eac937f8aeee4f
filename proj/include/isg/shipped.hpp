#pragma once

// The witness files shipped under data/witnesses, rebuilt from the group
// files under data/groups. isg_derive writes them; the test suite checks
// that the shipped copies still match.

#include <filesystem>
#include <vector>

#include "isg/witness.hpp"

namespace isg {

std::vector<WitnessCase> derive_shipped_witnesses(const std::filesystem::path& groups_dir);

}  // namespace isg
