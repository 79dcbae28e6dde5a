#include "texttiger/common/http.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

#include <httplib.h>

namespace texttiger::http {

namespace {

std::string lower_ascii(std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return out;
}

int hex_value(char c) {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    return -1;
}

httplib::Client make_client(const Url& url, const ClientOptions& options) {
    httplib::Client client(url.origin());
    auto to_timeval = [](std::chrono::milliseconds ms) {
        return std::pair<time_t, time_t>(ms.count() / 1000, (ms.count() % 1000) * 1000);
    };
    auto [cs, cus] = to_timeval(options.connect_timeout);
    auto [rs, rus] = to_timeval(options.read_timeout);
    client.set_connection_timeout(cs, cus);
    client.set_read_timeout(rs, rus);
    client.set_write_timeout(rs, rus);
    client.set_follow_location(options.follow_redirects);
    httplib::Headers headers{{"User-Agent", options.user_agent}};
    if (options.bearer_token) headers.emplace("Authorization", "Bearer " + *options.bearer_token);
    client.set_default_headers(std::move(headers));
    return client;
}

Response convert(const httplib::Result& result, const Url& url,
                 std::chrono::steady_clock::time_point started, const ClientOptions& options) {
    if (!result) {
        const auto err = result.error();
        const auto elapsed = std::chrono::steady_clock::now() - started;
        const bool timed_out = err == httplib::Error::ConnectionTimeout ||
                               (err == httplib::Error::Read && elapsed >= options.read_timeout);
        throw TransportError(url.str() + ": " + httplib::to_string(err), timed_out);
    }
    Response response;
    response.status = result->status;
    response.body = result->body;
    for (const auto& [key, value] : result->headers) response.headers[lower_ascii(key)] = value;
    return response;
}

}  // namespace

bool Url::is_absolute(std::string_view text) noexcept {
    const auto lowered = lower_ascii(text.substr(0, 8));
    return lowered.starts_with("http://") || lowered.starts_with("https://");
}

Url Url::parse(std::string_view text) {
    const auto sep = text.find("://");
    if (sep == std::string_view::npos) throw ConfigError("not an absolute URL: " + std::string(text));
    Url url;
    url.scheme = lower_ascii(text.substr(0, sep));
    if (url.scheme != "http" && url.scheme != "https") {
        throw ConfigError("unsupported URL scheme: " + std::string(text));
    }
    auto rest = text.substr(sep + 3);
    const auto slash = rest.find_first_of("/?");
    auto authority = rest.substr(0, slash);
    url.target = slash == std::string_view::npos ? "/" : std::string(rest.substr(slash));
    if (url.target.front() == '?') url.target.insert(0, "/");
    if (const auto at = authority.rfind('@'); at != std::string_view::npos) authority.remove_prefix(at + 1);
    if (authority.empty()) throw ConfigError("URL has no host: " + std::string(text));

    url.port = url.scheme == "https" ? 443 : 80;
    auto colon = authority.rfind(':');
    if (colon != std::string_view::npos && authority.find(']') == std::string_view::npos) {
        const auto port_text = authority.substr(colon + 1);
        int port = 0;
        auto [ptr, ec] = std::from_chars(port_text.data(), port_text.data() + port_text.size(), port);
        if (ec != std::errc{} || ptr != port_text.data() + port_text.size() || port <= 0 || port > 65535) {
            throw ConfigError("bad port in URL: " + std::string(text));
        }
        url.port = port;
        authority = authority.substr(0, colon);
    }
    url.host = lower_ascii(authority);
    return url;
}

std::string Url::origin() const {
    return scheme + "://" + host + ":" + std::to_string(port);
}

std::string Url::str() const {
    const bool default_port = (scheme == "https" && port == 443) || (scheme == "http" && port == 80);
    return scheme + "://" + host + (default_port ? "" : ":" + std::to_string(port)) + target;
}

std::string percent_encode(std::string_view text) {
    static constexpr char kHex[] = "0123456789ABCDEF";
    std::string out;
    out.reserve(text.size() * 3);
    for (unsigned char c : text) {
        if (std::isalnum(c) || c == '-' || c == '_' || c == '.' || c == '~') {
            out.push_back(static_cast<char>(c));
        } else {
            out.push_back('%');
            out.push_back(kHex[c >> 4]);
            out.push_back(kHex[c & 0xF]);
        }
    }
    return out;
}

std::string percent_decode(std::string_view text) {
    std::string out;
    out.reserve(text.size());
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (text[i] == '%' && i + 2 < text.size()) {
            const int hi = hex_value(text[i + 1]);
            const int lo = hex_value(text[i + 2]);
            if (hi >= 0 && lo >= 0) {
                out.push_back(static_cast<char>(hi * 16 + lo));
                i += 2;
                continue;
            }
        }
        out.push_back(text[i]);
    }
    return out;
}

Response get(const Url& url, const ClientOptions& options) {
    auto client = make_client(url, options);
    const auto started = std::chrono::steady_clock::now();
    return convert(client.Get(url.target), url, started, options);
}

Response head(const Url& url, const ClientOptions& options) {
    auto client = make_client(url, options);
    const auto started = std::chrono::steady_clock::now();
    return convert(client.Head(url.target), url, started, options);
}

Response post_json(const Url& url, const std::string& body, const ClientOptions& options) {
    auto client = make_client(url, options);
    const auto started = std::chrono::steady_clock::now();
    return convert(client.Post(url.target, body, "application/json"), url, started, options);
}

}  // namespace texttiger::http
