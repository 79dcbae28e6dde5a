#include "texttiger/witcub/wikipedia.hpp"

#include <algorithm>
#include <thread>

#include <json.hpp>

#include "texttiger/common/http.hpp"

namespace texttiger::witcub {

using nlohmann::json;

std::string title_from_url(std::string_view title_or_url) {
    std::string_view title = title_or_url;
    if (http::Url::is_absolute(title_or_url)) {
        const auto url = http::Url::parse(title_or_url);
        std::string_view target = url.target;
        if (const auto hash = target.find('#'); hash != std::string_view::npos) target = target.substr(0, hash);
        if (const auto wiki = target.find("/wiki/"); wiki != std::string_view::npos) {
            target = target.substr(wiki + 6);
        } else if (const auto q = target.find("title="); q != std::string_view::npos) {
            target = target.substr(q + 6);
            target = target.substr(0, target.find('&'));
        }
        auto decoded = http::percent_decode(target);
        std::replace(decoded.begin(), decoded.end(), '_', ' ');
        return decoded;
    }
    std::string out(title);
    std::replace(out.begin(), out.end(), '_', ' ');
    return out;
}

WikipediaClient::WikipediaClient(WikipediaConfig config) : config_(std::move(config)) {
    http::Url::parse(config_.endpoint);
    if (config_.max_attempts < 1) throw ConfigError("max_attempts must be at least 1");
}

EntityEntry WikipediaClient::fetch(std::string_view title_or_url) const {
    const auto title = title_from_url(title_or_url);
    if (title.empty()) throw NotFound("empty entity title");
    auto backoff = config_.initial_backoff;
    for (int attempt = 1;; ++attempt) {
        try {
            return fetch_once(title);
        } catch (const FetchError& e) {
            if (!e.retryable() || attempt >= config_.max_attempts) throw;
        }
        std::this_thread::sleep_for(backoff);
        backoff *= 2;
    }
}

EntityEntry WikipediaClient::fetch_once(const std::string& title) const {
    if (config_.politeness_delay.count() > 0) std::this_thread::sleep_for(config_.politeness_delay);

    auto url = http::Url::parse(config_.endpoint);
    url.target += url.target.find('?') == std::string::npos ? "?" : "&";
    url.target +=
        "action=query&format=json&formatversion=2&prop=extracts%7Cinfo&inprop=url"
        "&exintro=1&explaintext=1&redirects=1&titles=" +
        http::percent_encode(title);

    http::ClientOptions options;
    options.user_agent = config_.user_agent;
    options.connect_timeout = config_.timeout;
    options.read_timeout = config_.timeout;

    http::Response response;
    try {
        response = http::get(url, options);
    } catch (const http::TransportError& e) {
        throw FetchError(e.what(), 0);
    }
    if (!http::is_success(response.status)) {
        throw FetchError("Wikipedia API returned HTTP " + std::to_string(response.status) + " for '" + title + "'",
                         response.status);
    }

    json body;
    try {
        body = json::parse(response.body);
    } catch (const json::parse_error&) {
        throw FetchError("Wikipedia API returned a non-JSON body for '" + title + "'", response.status);
    }
    const auto pages = body.value("/query/pages"_json_pointer, json::array());
    if (!pages.is_array() || pages.empty()) throw NotFound("no page for '" + title + "'");
    const auto& page = pages.front();
    if (page.value("missing", false) || page.value("invalid", false)) {
        throw NotFound("Wikipedia has no article '" + title + "'");
    }

    EntityEntry entry;
    entry.name = page.value("title", title);
    entry.description = page.value("extract", std::string{});
    const auto last = entry.description.find_last_not_of(" \t\r\n");
    entry.description.erase(last == std::string::npos ? 0 : last + 1);
    if (entry.description.empty()) throw EmptyDescription("article '" + entry.name + "' has an empty extract");

    entry.source_url = page.value("fullurl", std::string{});
    if (entry.source_url.empty()) {
        auto page_name = entry.name;
        std::replace(page_name.begin(), page_name.end(), ' ', '_');
        const auto api = http::Url::parse(config_.endpoint);
        http::Url article{api.scheme, api.host, api.port, "/wiki/" + http::percent_encode(page_name)};
        entry.source_url = article.str();
    }
    return entry;
}

EntityEntry fetch_entity_description(std::string_view title_or_url, const EntitySource& client) {
    return client.fetch(title_or_url);
}

}  // namespace texttiger::witcub
