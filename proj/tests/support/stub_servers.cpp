#include "stub_servers.hpp"

#include <fstream>
#include <stdexcept>

#include <httplib.h>

namespace texttiger::stubs {

using nlohmann::json;

namespace {

std::string base64_encode(const std::string& in) {
    static constexpr char kTable[] = "ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz0123456789+/";
    std::string out;
    std::size_t i = 0;
    for (; i + 2 < in.size(); i += 3) {
        const unsigned v = (static_cast<unsigned char>(in[i]) << 16) |
                           (static_cast<unsigned char>(in[i + 1]) << 8) | static_cast<unsigned char>(in[i + 2]);
        out += kTable[(v >> 18) & 63];
        out += kTable[(v >> 12) & 63];
        out += kTable[(v >> 6) & 63];
        out += kTable[v & 63];
    }
    if (i + 1 == in.size()) {
        const unsigned v = static_cast<unsigned char>(in[i]) << 16;
        out += kTable[(v >> 18) & 63];
        out += kTable[(v >> 12) & 63];
        out += "==";
    } else if (i + 2 == in.size()) {
        const unsigned v = (static_cast<unsigned char>(in[i]) << 16) | (static_cast<unsigned char>(in[i + 1]) << 8);
        out += kTable[(v >> 18) & 63];
        out += kTable[(v >> 12) & 63];
        out += kTable[(v >> 6) & 63];
        out += '=';
    }
    return out;
}

}  // namespace

StubServer::StubServer() : server_(std::make_unique<httplib::Server>()) {}

StubServer::~StubServer() {
    server_->stop();
    if (thread_.joinable()) thread_.join();
}

void StubServer::start() {
    port_ = server_->bind_to_any_port("127.0.0.1");
    if (port_ <= 0) throw std::runtime_error("stub server could not bind a port");
    thread_ = std::thread([this] { server_->listen_after_bind(); });
    server_->wait_until_ready();
}

std::string StubServer::base_url() const { return "http://127.0.0.1:" + std::to_string(port_); }

WikipediaStub::WikipediaStub(const std::filesystem::path& recorded_json) {
    std::ifstream in(recorded_json);
    if (!in) throw std::runtime_error("cannot open " + recorded_json.string());
    recorded_ = json::parse(in);

    server().Get("/w/api.php", [this](const httplib::Request& req, httplib::Response& res) {
        count_request();
        if (fail_remaining_ > 0) {
            --fail_remaining_;
            res.status = fail_status_;
            res.set_content("{\"error\":\"unavailable\"}", "application/json");
            return;
        }
        const auto title = req.get_param_value("titles");
        if (auto it = recorded_.find(title); it != recorded_.end()) {
            res.set_content(it->dump(), "application/json");
            return;
        }
        json missing{{"batchcomplete", true},
                     {"query", {{"pages", json::array({{{"ns", 0}, {"title", title}, {"missing", true}}})}}}};
        res.set_content(missing.dump(), "application/json");
    });

    server().Get(R"(/img/(.+))", [this](const httplib::Request& req, httplib::Response& res) {
        const std::string name = req.matches[1];
        if (req.method == "HEAD" && refuse_head_) {
            res.status = 405;
            return;
        }
        if (name.starts_with("dead")) {
            res.status = 404;
            return;
        }
        res.set_content(ImageBackendStub::png_bytes(), "image/png");
    });
    start();
}

LlmStub::LlmStub(Responder responder) : responder_(std::move(responder)) {
    server().Post("/v1/chat/completions", [this](const httplib::Request& req, httplib::Response& res) {
        count_request();
        json request;
        try {
            request = json::parse(req.body);
        } catch (const json::parse_error&) {
            res.status = 400;
            return;
        }
        {
            std::lock_guard lock(mutex_);
            requests_.push_back(request);
        }
        const auto reply = responder_(request);
        res.status = reply.status;
        if (reply.status != 200) {
            res.set_content(json{{"error", {{"message", "stub failure"}}}}.dump(), "application/json");
            return;
        }
        json body{{"id", "stub-completion"},
                  {"object", "chat.completion"},
                  {"model", request.value("model", "")},
                  {"choices",
                   json::array({{{"index", 0},
                                 {"message", {{"role", "assistant"}, {"content", reply.content}}},
                                 {"finish_reason", "stop"}}})}};
        res.set_content(body.dump(), "application/json");
    });
    start();
}

std::vector<json> LlmStub::requests() const {
    std::lock_guard lock(mutex_);
    return requests_;
}

ImageBackendStub::ImageBackendStub() {
    server().Post("/generate", [this](const httplib::Request& req, httplib::Response& res) {
        count_request();
        json request = json::parse(req.body, nullptr, false);
        std::string path;
        {
            std::lock_guard lock(mutex_);
            requests_.push_back(request);
            path = path_reply_;
        }
        if (fail_status_ != 0) {
            res.status = fail_status_;
            res.set_content("{\"error\":\"backend failure\"}", "application/json");
            return;
        }
        json body{{"image", path.empty() ? base64_encode(png_bytes()) : path}};
        res.set_content(body.dump(), "application/json");
    });
    start();
}

std::vector<json> ImageBackendStub::requests() const {
    std::lock_guard lock(mutex_);
    return requests_;
}

const std::string& ImageBackendStub::png_bytes() {
    // 1x1 opaque white PNG.
    static const std::string png = [] {
        const unsigned char bytes[] = {
            0x89, 0x50, 0x4E, 0x47, 0x0D, 0x0A, 0x1A, 0x0A, 0x00, 0x00, 0x00, 0x0D, 0x49, 0x48, 0x44, 0x52,
            0x00, 0x00, 0x00, 0x01, 0x00, 0x00, 0x00, 0x01, 0x08, 0x02, 0x00, 0x00, 0x00, 0x90, 0x77, 0x53,
            0xDE, 0x00, 0x00, 0x00, 0x0C, 0x49, 0x44, 0x41, 0x54, 0x08, 0xD7, 0x63, 0xF8, 0xFF, 0xFF, 0x3F,
            0x00, 0x05, 0xFE, 0x02, 0xFE, 0xDC, 0xCC, 0x59, 0xE7, 0x00, 0x00, 0x00, 0x00, 0x49, 0x45, 0x4E,
            0x44, 0xAE, 0x42, 0x60, 0x82};
        return std::string(reinterpret_cast<const char*>(bytes), sizeof(bytes));
    }();
    return png;
}

std::string user_message(const json& request) {
    for (const auto& m : request.at("messages")) {
        if (m.value("role", "") == "user") return m.value("content", "");
    }
    return {};
}

}  // namespace texttiger::stubs
