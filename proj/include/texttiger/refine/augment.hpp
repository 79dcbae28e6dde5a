#pragma once

#include <string>
#include <vector>

#include "texttiger/witcub/dataset.hpp"

namespace texttiger::refine {

struct EntityDescription {
    std::string name;
    std::string description;

    bool operator==(const EntityDescription&) const = default;
};

/// Entity knowledge attached to a caption before summarization.
struct AugmentedDescription {
    std::vector<EntityDescription> per_entity;
    std::string joined_text;

    bool operator==(const AugmentedDescription&) const = default;
};

inline constexpr std::string_view kDescriptionSeparator = "\n\n";

/// Descriptions joined by a blank line, in list order.
std::string join_descriptions(const std::vector<EntityDescription>& per_entity);

/// Entities of `instance` that occur in its caption, in caption order.
/// No matches gives an empty joined_text.
AugmentedDescription build_augmentation(const witcub::WitCubInstance& instance);

}  // namespace texttiger::refine
