#pragma once

#include <filesystem>
#include <string>

#include "so7/group.hpp"

namespace so7 {

// Element-list cache file: a header line "so7-atlas group-cache v1", one
// element per line in text form, ascending, and a final "order=N" line.

void save_group_cache(const Group& g, const std::filesystem::path& path);

// Parses and re-verifies a cache file: header, element syntax, sortedness,
// identity membership, the order line, and closure (via the greedy
// generator check, which certifies the list is really a group).  Any
// violation throws so7::Error.
Group load_group_cache(const std::filesystem::path& path);

// named_group(id) backed by cache_dir/<id>.group: load when the file
// exists (corruption propagates as so7::Error), otherwise build and save.
Group load_or_build(const std::filesystem::path& cache_dir,
                    const std::string& id);

}  // namespace so7
