#pragma once

#include <chrono>
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "texttiger/common/error.hpp"

namespace texttiger::http {

/// Absolute http(s) URL split into the pieces the transport needs.
struct Url {
    std::string scheme;  // "http" or "https"
    std::string host;
    int port = 0;
    std::string target = "/";  // path + query

    /// Throws ConfigError unless `text` is an absolute http(s) URL.
    static Url parse(std::string_view text);
    static bool is_absolute(std::string_view text) noexcept;

    /// "scheme://host:port" as accepted by the transport.
    std::string origin() const;
    std::string str() const;
};

std::string percent_encode(std::string_view text);
std::string percent_decode(std::string_view text);

struct Response {
    int status = 0;
    std::string body;
    std::map<std::string, std::string> headers;
};

/// Transport-level failure: no HTTP status was received.
class TransportError : public Error {
public:
    TransportError(const std::string& message, bool timed_out)
        : Error(message), timed_out_(timed_out) {}
    bool timed_out() const noexcept { return timed_out_; }

private:
    bool timed_out_;
};

struct ClientOptions {
    std::chrono::milliseconds connect_timeout{5000};
    std::chrono::milliseconds read_timeout{60000};
    std::string user_agent = "texttiger/1.0";
    std::optional<std::string> bearer_token;
    bool follow_redirects = true;
};

/// Blocking request helpers. Non-2xx statuses are returned, not thrown;
/// TransportError is thrown when the server cannot be reached or times out.
Response get(const Url& url, const ClientOptions& options = {});
Response head(const Url& url, const ClientOptions& options = {});
Response post_json(const Url& url, const std::string& body, const ClientOptions& options = {});

inline bool is_success(int status) noexcept { return status >= 200 && status < 300; }

}  // namespace texttiger::http
