#pragma once

#include <ostream>
#include <string>

#include <json.hpp>

#include "texttiger/audit/audit.hpp"
#include "texttiger/cli/run_config.hpp"
#include "texttiger/promptgen/prompt.hpp"

namespace texttiger::cli {

struct CommandIo {
    std::ostream& out;
    std::ostream& err;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitConfig = 2;

// Each command throws ConfigError for missing or invalid configuration and
// returns kExitFailure when some records could not be produced.
int cmd_build_dataset(const RunConfig& config, CommandIo io);
int cmd_summarize(const RunConfig& config, CommandIo io);
int cmd_assemble(const RunConfig& config, CommandIo io);
int cmd_generate(const RunConfig& config, CommandIo io);
int cmd_evaluate(const RunConfig& config, CommandIo io);
int cmd_audit(const RunConfig& config, CommandIo io);

/// Prompt records as written by assemble.
nlohmann::json prompt_record(const std::string& id, const promptgen::AssembledPrompt& prompt, bool has_note);
promptgen::AssembledPrompt prompt_from_record(const nlohmann::json& record);

/// Characters outside [A-Za-z0-9._-] become '_'.
std::string file_slug(std::string_view text);

}  // namespace texttiger::cli
