#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>

#include <json.hpp>

#include "texttiger/common/error.hpp"
#include "texttiger/promptgen/prompt.hpp"

namespace texttiger::audit {

class EmptyAudit : public Error {
public:
    using Error::Error;
};

struct MethodAudit {
    double mean_tokens = 0.0;
    std::size_t violations = 0;
    std::size_t n = 0;
    std::optional<std::size_t> clip_violations;

    bool operator==(const MethodAudit&) const = default;
};

struct AuditOptions {
    std::size_t limit = 256;                // T5 window
    std::optional<std::size_t> clip_limit;  // adds a CLIP column when set
};

struct AuditReport {
    std::map<promptgen::PromptMethod, MethodAudit> per_method;
    std::size_t limit = 256;
    std::optional<std::size_t> clip_limit;

    bool operator==(const AuditReport&) const = default;
};

/// Groups prompts by method; a violation is token_count > limit.
/// Throws EmptyAudit for no prompts and std::invalid_argument for a zero limit.
AuditReport audit_prompts(std::span<const promptgen::AssembledPrompt> prompts, const AuditOptions& options = {});

nlohmann::json to_json(const AuditReport& report);
/// Columns: method, average token count, violations, n (and CLIP violations when requested).
std::string to_table(const AuditReport& report);

}  // namespace texttiger::audit
