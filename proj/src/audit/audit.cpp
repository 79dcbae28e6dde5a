#include "texttiger/audit/audit.hpp"

#include <cstdio>
#include <stdexcept>
#include <vector>

namespace texttiger::audit {

using nlohmann::json;

AuditReport audit_prompts(std::span<const promptgen::AssembledPrompt> prompts, const AuditOptions& options) {
    if (prompts.empty()) throw EmptyAudit("no prompts to audit");
    if (options.limit == 0 || (options.clip_limit && *options.clip_limit == 0)) {
        throw std::invalid_argument("token limit must be positive");
    }

    struct Totals {
        std::size_t tokens = 0, violations = 0, n = 0, clip_violations = 0;
    };
    std::map<promptgen::PromptMethod, Totals> totals;
    for (const auto& p : prompts) {
        auto& t = totals[p.method];
        const std::size_t count = p.token_count.content_tokens;
        t.tokens += count;
        t.n += 1;
        if (count > options.limit) ++t.violations;
        if (options.clip_limit && count > *options.clip_limit) ++t.clip_violations;
    }

    AuditReport report;
    report.limit = options.limit;
    report.clip_limit = options.clip_limit;
    for (const auto& [method, t] : totals) {
        MethodAudit m;
        m.mean_tokens = static_cast<double>(t.tokens) / static_cast<double>(t.n);
        m.violations = t.violations;
        m.n = t.n;
        if (options.clip_limit) m.clip_violations = t.clip_violations;
        report.per_method.emplace(method, m);
    }
    return report;
}

json to_json(const AuditReport& report) {
    json methods = json::array();
    for (const auto& [method, m] : report.per_method) {
        json row{{"method", promptgen::to_string(method)},
                 {"mean_tokens", m.mean_tokens},
                 {"violations", m.violations},
                 {"n", m.n}};
        if (m.clip_violations) row["clip_violations"] = *m.clip_violations;
        methods.push_back(std::move(row));
    }
    json out{{"limit", report.limit}, {"per_method", std::move(methods)}};
    if (report.clip_limit) out["clip_limit"] = *report.clip_limit;
    return out;
}

std::string to_table(const AuditReport& report) {
    std::vector<std::vector<std::string>> rows;
    std::vector<std::string> head{"Method", "Avg. tokens", "Violations (>" + std::to_string(report.limit) + ")", "N"};
    if (report.clip_limit) head.push_back("CLIP violations (>" + std::to_string(*report.clip_limit) + ")");
    rows.push_back(head);
    for (const auto& [method, m] : report.per_method) {
        char mean[32];
        std::snprintf(mean, sizeof mean, "%.2f", m.mean_tokens);
        std::vector<std::string> row{std::string(promptgen::to_string(method)), mean, std::to_string(m.violations),
                                     std::to_string(m.n)};
        if (report.clip_limit) row.push_back(std::to_string(m.clip_violations.value_or(0)));
        rows.push_back(std::move(row));
    }

    std::vector<std::size_t> width(head.size(), 0);
    for (const auto& row : rows)
        for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());

    std::string out;
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i > 0) out += "  ";
            const std::string pad(width[i] - row[i].size(), ' ');
            out += i == 0 ? row[i] + pad : pad + row[i];  // method left, numbers right
        }
        while (!out.empty() && out.back() == ' ') out.pop_back();
        out += '\n';
    }
    return out;
}

}  // namespace texttiger::audit
