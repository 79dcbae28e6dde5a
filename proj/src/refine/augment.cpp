#include "texttiger/refine/augment.hpp"

#include "texttiger/witcub/matching.hpp"

namespace texttiger::refine {

std::string join_descriptions(const std::vector<EntityDescription>& per_entity) {
    std::string out;
    for (std::size_t i = 0; i < per_entity.size(); ++i) {
        if (i > 0) out += kDescriptionSeparator;
        out += per_entity[i].description;
    }
    return out;
}

AugmentedDescription build_augmentation(const witcub::WitCubInstance& instance) {
    AugmentedDescription aug;
    for (const auto& entity : witcub::match_entities(instance.caption, instance.entities)) {
        if (entity.description.empty()) continue;
        aug.per_entity.push_back({entity.name, entity.description});
    }
    aug.joined_text = join_descriptions(aug.per_entity);
    return aug;
}

}  // namespace texttiger::refine
