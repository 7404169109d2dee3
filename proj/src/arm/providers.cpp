#include "odsl/arm/providers.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <thread>

#include <httplib.h>
#include <json.hpp>

#include "odsl/support/strings.hpp"

namespace odsl::arm {

using nlohmann::json;

namespace {

// Utterance on the prompt's final "User:" line.
std::optional<std::string> last_user_line(const std::string& prompt) {
    std::optional<std::string> found;
    std::istringstream in(prompt);
    std::string line;
    while (std::getline(in, line)) {
        if (line.rfind("User: ", 0) == 0) found = line.substr(6);
    }
    if (found) *found = strings::trim(*found);
    return found;
}

bool is_classifier_prompt(const std::string& prompt) {
    return prompt.find("Categories:") != std::string::npos &&
           prompt.find("RequiresContext:") != std::string::npos;
}

template <typename Fn>
std::string with_retries(int attempts, int backoff_initial_ms, Fn&& fn) {
    int delay = backoff_initial_ms;
    for (int attempt = 1;; ++attempt) {
        try {
            return fn();
        } catch (const ProviderError& e) {
            if (!e.retryable() || attempt >= attempts) throw;
            std::this_thread::sleep_for(std::chrono::milliseconds(delay));
            delay *= 2;
        }
    }
}

std::pair<std::string, std::string> split_endpoint(const std::string& endpoint) {
    // httplib takes scheme+host as a base URL; anything after the host is a
    // path prefix.
    auto scheme_end = endpoint.find("://");
    std::size_t host_start = scheme_end == std::string::npos ? 0 : scheme_end + 3;
    auto path_start = endpoint.find('/', host_start);
    if (path_start == std::string::npos) return {endpoint, ""};
    return {endpoint.substr(0, path_start), endpoint.substr(path_start)};
}

std::string http_post_json(const HttpOptions& options, const std::string& path,
                           const std::string& body) {
    const std::string payload = path + "\n" + body;
    if (options.cache) {
        if (auto hit = options.cache->get(payload)) return *hit;
    }

    const std::string response = with_retries(options.attempts, options.backoff_initial_ms, [&] {
        auto [base, prefix] = split_endpoint(options.endpoint);
        httplib::Client client(base);
        client.set_connection_timeout(options.timeout_seconds);
        client.set_read_timeout(options.timeout_seconds);
        httplib::Headers headers;
        if (!options.api_key.empty())
            headers.emplace("Authorization", "Bearer " + options.api_key);
        auto res = client.Post(prefix + path, headers, body, "application/json");
        if (!res) throw ProviderError("no response from " + options.endpoint + path, true);
        if (res->status == 429 || res->status >= 500)
            throw ProviderError("provider returned status " + std::to_string(res->status), true);
        if (res->status != 200)
            throw ProviderError("provider returned status " + std::to_string(res->status), false);
        return res->body;
    });

    if (options.cache) options.cache->put(payload, response);
    return response;
}

}  // namespace

MockLLMClient MockLLMClient::load_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ProviderError("mock: cannot open " + path, false);
    json root = json::parse(in);
    std::map<std::string, Entry> entries;
    for (const auto& item : root.at("responses")) {
        Entry e;
        e.classification = item.value("classification", "");
        e.completion = item.value("completion", "");
        entries[item.at("utterance").get<std::string>()] = std::move(e);
    }
    return MockLLMClient(std::move(entries));
}

std::string MockLLMClient::complete(const CompletionRequest& request) {
    auto utterance = last_user_line(request.prompt);
    if (!utterance) throw ProviderError("mock: prompt has no User line", false);
    auto it = entries_.find(*utterance);
    if (it == entries_.end())
        throw ProviderError("mock: no canned response for utterance '" + *utterance + "'", false);
    if (is_classifier_prompt(request.prompt)) {
        if (it->second.classification.empty())
            throw ProviderError("mock: no canned classification for '" + *utterance + "'", false);
        return it->second.classification;
    }
    if (it->second.completion.empty())
        throw ProviderError("mock: no canned completion for '" + *utterance + "'", false);
    return it->second.completion;
}

ResponseCache::ResponseCache(std::string dir) : dir_(std::move(dir)) {
    std::filesystem::create_directories(dir_);
}

std::string ResponseCache::path_for(const std::string& request_payload) const {
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx",
                  static_cast<unsigned long long>(strings::fnv1a64(request_payload)));
    return dir_ + "/" + buf + ".json";
}

std::optional<std::string> ResponseCache::get(const std::string& request_payload) const {
    std::ifstream in(path_for(request_payload));
    if (!in) return std::nullopt;
    try {
        json j = json::parse(in);
        if (j.value("request", "") != request_payload) return std::nullopt;
        return j.at("response").get<std::string>();
    } catch (const json::exception&) {
        return std::nullopt;
    }
}

void ResponseCache::put(const std::string& request_payload, const std::string& response) const {
    const std::string path = path_for(request_payload);
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp);
        out << json{{"request", request_payload}, {"response", response}}.dump();
    }
    std::filesystem::rename(tmp, path);
}

std::string HttpLLMClient::complete(const CompletionRequest& request) {
    json body{{"model", options_.model},
              {"messages", json::array({json{{"role", "user"}, {"content", request.prompt}}})},
              {"temperature", request.temperature},
              {"top_p", request.top_p},
              {"max_tokens", request.max_tokens}};
    const std::string response = http_post_json(options_, "/v1/chat/completions", body.dump());
    try {
        json j = json::parse(response);
        return j.at("choices").at(0).at("message").at("content").get<std::string>();
    } catch (const json::exception& e) {
        throw ProviderError(std::string("malformed completion response: ") + e.what(), false);
    }
}

std::vector<float> HttpEmbeddingProvider::embed(const std::string& text) const {
    json body{{"model", options_.model}, {"input", json::array({text})}};
    const std::string response = http_post_json(options_, "/v1/embeddings", body.dump());
    try {
        json j = json::parse(response);
        std::vector<float> vec = j.at("data").at(0).at("embedding").get<std::vector<float>>();
        const double norm = l2_norm(vec);
        if (norm > 0) {
            for (auto& v : vec) v = static_cast<float>(v / norm);
        }
        return vec;
    } catch (const json::exception& e) {
        throw ProviderError(std::string("malformed embedding response: ") + e.what(), false);
    }
}

}  // namespace odsl::arm
