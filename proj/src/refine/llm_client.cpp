#include "texttiger/refine/llm_client.hpp"

#include <thread>

#include "texttiger/common/http.hpp"

namespace texttiger::refine {

using nlohmann::json;

json to_json(const CompletionRequest& request) {
    json messages = json::array();
    for (const auto& m : request.messages) messages.push_back({{"role", m.role}, {"content", m.content}});
    return json{{"model", request.model},
                {"messages", std::move(messages)},
                {"max_tokens", request.max_output_tokens},
                {"seed", request.seed},
                {"temperature", request.temperature}};
}

ChatCompletionClient::ChatCompletionClient(ChatCompletionConfig config) : config_(std::move(config)) {
    if (config_.endpoint.empty()) throw ConfigError("LLM endpoint is not configured");
    http::Url::parse(config_.endpoint);
}

namespace {

std::string parse_content(const std::string& body) {
    json reply = json::parse(body, nullptr, false);
    if (reply.is_discarded()) throw LlmError("LLM response is not JSON", 200);
    const json* content = nullptr;
    if (reply.contains("choices") && reply["choices"].is_array() && !reply["choices"].empty()) {
        const json& choice = reply["choices"][0];
        if (choice.contains("message") && choice["message"].contains("content")) {
            content = &choice["message"]["content"];
        } else if (choice.contains("text")) {
            content = &choice["text"];
        }
    }
    if (content == nullptr || !content->is_string()) throw LlmError("LLM response has no completion text", 200);
    return content->get<std::string>();
}

}  // namespace

std::string ChatCompletionClient::complete(const CompletionRequest& request) const {
    const http::Url url = http::Url::parse(config_.endpoint);
    http::ClientOptions options;
    options.read_timeout = config_.timeout;
    options.bearer_token = config_.api_key;
    const std::string body = to_json(request).dump();

    for (int attempt = 0;; ++attempt) {
        const bool last = attempt >= config_.retries;
        try {
            http::Response response = http::post_json(url, body, options);
            if (http::is_success(response.status)) return parse_content(response.body);
            if (last) {
                throw LlmError("LLM endpoint answered HTTP " + std::to_string(response.status), response.status);
            }
        } catch (const http::TransportError& e) {
            if (last) {
                if (e.timed_out()) throw LlmTimeout(std::string("LLM request timed out: ") + e.what());
                throw LlmError(std::string("LLM endpoint unreachable: ") + e.what(), 0);
            }
        }
        std::this_thread::sleep_for(config_.retry_delay);
    }
}

}  // namespace texttiger::refine
