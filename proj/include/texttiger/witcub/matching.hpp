#pragma once

#include <span>
#include <string_view>
#include <vector>

#include "texttiger/witcub/dataset.hpp"

namespace texttiger::witcub {

/// Entries whose name occurs in `caption` as a whole phrase, ignoring case.
/// A match must not be preceded or followed by a letter or digit. Results are
/// ordered by first occurrence in the caption (ties keep list order) and each
/// name appears once.
std::vector<EntityEntry> match_entities(std::string_view caption, std::span<const EntityEntry> entities);

}  // namespace texttiger::witcub
