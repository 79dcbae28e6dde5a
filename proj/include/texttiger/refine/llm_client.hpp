#pragma once

#include <chrono>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "texttiger/common/error.hpp"

namespace texttiger::refine {

/// The completion service failed. status is the HTTP status, or 0 when no
/// response arrived.
class LlmError : public Error {
public:
    LlmError(const std::string& message, int status) : Error(message), status_(status) {}
    int status() const noexcept { return status_; }

private:
    int status_;
};

class LlmTimeout : public LlmError {
public:
    explicit LlmTimeout(const std::string& message) : LlmError(message, 0) {}
};

struct ChatMessage {
    std::string role;
    std::string content;

    bool operator==(const ChatMessage&) const = default;
};

struct CompletionRequest {
    std::string model;
    std::vector<ChatMessage> messages;
    int max_output_tokens = 180;
    int seed = 0;
    double temperature = 0.0;
};

/// {"model", "messages": [{"role","content"}...], "max_tokens", "seed", "temperature"}
nlohmann::json to_json(const CompletionRequest& request);

class CompletionClient {
public:
    virtual ~CompletionClient() = default;
    virtual std::string complete(const CompletionRequest& request) const = 0;
};

struct ChatCompletionConfig {
    std::string endpoint;  // full URL of the chat-completions route
    std::optional<std::string> api_key;
    std::chrono::milliseconds timeout{120000};
    int retries = 1;
    std::chrono::milliseconds retry_delay{1000};
};

/// OpenAI-compatible chat-completions over HTTP; returns choices[0].message.content.
class ChatCompletionClient : public CompletionClient {
public:
    explicit ChatCompletionClient(ChatCompletionConfig config);
    std::string complete(const CompletionRequest& request) const override;

private:
    ChatCompletionConfig config_;
};

inline std::string llm_complete(const CompletionRequest& request, const CompletionClient& client) {
    return client.complete(request);
}

}  // namespace texttiger::refine
