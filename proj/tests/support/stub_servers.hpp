#pragma once

// Local HTTP stand-ins for the external services: the Wikipedia Action API
// (recorded responses), an image host, an OpenAI-compatible chat-completion
// endpoint and an image-generation backend. Each listens on 127.0.0.1 with an
// ephemeral port and stops on destruction.

#include <atomic>
#include <deque>
#include <filesystem>
#include <functional>
#include <memory>
#include <mutex>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

namespace httplib {
class Server;
}

namespace texttiger::stubs {

class StubServer {
public:
    StubServer();
    virtual ~StubServer();
    StubServer(const StubServer&) = delete;
    StubServer& operator=(const StubServer&) = delete;

    std::string base_url() const;
    int port() const noexcept { return port_; }
    std::size_t request_count() const noexcept { return requests_; }

protected:
    httplib::Server& server() { return *server_; }
    void start();
    void count_request() { ++requests_; }

private:
    std::unique_ptr<httplib::Server> server_;
    std::thread thread_;
    int port_ = 0;
    std::atomic<std::size_t> requests_{0};
};

/// Serves GET /w/api.php from a title -> response map and images under /img/.
/// Unknown titles answer with a "missing" page, image names starting with
/// "dead" answer 404.
class WikipediaStub : public StubServer {
public:
    explicit WikipediaStub(const std::filesystem::path& recorded_json);

    std::string api_url() const { return base_url() + "/w/api.php"; }
    std::string image_url(const std::string& name) const { return base_url() + "/img/" + name; }

    /// The next `n` API requests fail with `status`.
    void fail_next(int n, int status = 503) { fail_remaining_ = n, fail_status_ = status; }
    /// HEAD requests for images answer 405, forcing a GET fallback.
    void refuse_head(bool refuse) { refuse_head_ = refuse; }

private:
    nlohmann::json recorded_;
    std::atomic<int> fail_remaining_{0};
    std::atomic<int> fail_status_{503};
    std::atomic<bool> refuse_head_{false};
};

struct LlmReply {
    int status = 200;
    std::string content;
};

/// POST /v1/chat/completions. Replies come from a responder function; every
/// request body is recorded.
class LlmStub : public StubServer {
public:
    using Responder = std::function<LlmReply(const nlohmann::json& request)>;
    explicit LlmStub(Responder responder);

    std::string endpoint() const { return base_url() + "/v1/chat/completions"; }
    std::vector<nlohmann::json> requests() const;

private:
    Responder responder_;
    mutable std::mutex mutex_;
    std::vector<nlohmann::json> requests_;
};

/// POST /generate answering {"image": <base64 PNG>} (or {"image": <path>}).
class ImageBackendStub : public StubServer {
public:
    ImageBackendStub();

    std::string endpoint() const { return base_url() + "/generate"; }
    std::vector<nlohmann::json> requests() const;
    void fail_with(int status) { fail_status_ = status; }
    void reply_with_path(std::string path) {
        std::lock_guard lock(mutex_);
        path_reply_ = std::move(path);
    }

    static const std::string& png_bytes();

private:
    mutable std::mutex mutex_;
    std::vector<nlohmann::json> requests_;
    std::atomic<int> fail_status_{0};
    std::string path_reply_;
};

/// Content of a chat-completion request's user message.
std::string user_message(const nlohmann::json& request);

}  // namespace texttiger::stubs
