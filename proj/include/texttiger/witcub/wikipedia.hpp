#pragma once

#include <chrono>
#include <string>
#include <string_view>

#include "texttiger/common/error.hpp"
#include "texttiger/witcub/dataset.hpp"

namespace texttiger::witcub {

/// Non-2xx answer from the API (status 0: the server could not be reached).
class FetchError : public Error {
public:
    FetchError(const std::string& message, int status) : Error(message), status_(status) {}
    int status() const noexcept { return status_; }
    bool retryable() const noexcept { return status_ == 0 || status_ == 429 || status_ >= 500; }

private:
    int status_;
};

class NotFound : public Error {
public:
    using Error::Error;
};

class EmptyDescription : public Error {
public:
    using Error::Error;
};

/// Anything that can resolve an entity title or article URL to its abstract.
class EntitySource {
public:
    virtual ~EntitySource() = default;
    virtual EntityEntry fetch(std::string_view title_or_url) const = 0;
};

struct WikipediaConfig {
    std::string endpoint = "https://en.wikipedia.org/w/api.php";
    std::string user_agent = "texttiger/1.0 (dataset builder)";
    int max_attempts = 3;
    std::chrono::milliseconds initial_backoff{500};
    std::chrono::milliseconds politeness_delay{100};
    std::chrono::milliseconds timeout{20000};
};

/// Article title from "https://<lang>.wikipedia.org/wiki/Some_Title#frag";
/// other input is returned with underscores turned into spaces.
std::string title_from_url(std::string_view title_or_url);

/// MediaWiki Action API client: lead-section plain-text extracts
/// (prop=extracts, exintro, explaintext) following redirects.
class WikipediaClient : public EntitySource {
public:
    explicit WikipediaClient(WikipediaConfig config);

    /// Retries transport failures and 429/5xx with exponential backoff.
    /// NotFound and EmptyDescription are final.
    EntityEntry fetch(std::string_view title_or_url) const override;

    const WikipediaConfig& config() const noexcept { return config_; }

private:
    EntityEntry fetch_once(const std::string& title) const;

    WikipediaConfig config_;
};

/// Free-function form of WikipediaClient::fetch.
EntityEntry fetch_entity_description(std::string_view title_or_url, const EntitySource& client);

}  // namespace texttiger::witcub
