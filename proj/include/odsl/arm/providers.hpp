#pragma once

#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>

#include "odsl/arm/embedding.hpp"

namespace odsl::arm {

class ProviderError : public std::runtime_error {
public:
    ProviderError(const std::string& what, bool retryable)
        : std::runtime_error(what), retryable_(retryable) {}

    bool retryable() const { return retryable_; }

private:
    bool retryable_;
};

struct CompletionRequest {
    std::string prompt;
    double temperature = 0.0;
    double top_p = 1.0;
    int max_tokens = 512;
};

class LLMClient {
public:
    virtual ~LLMClient() = default;
    virtual std::string complete(const CompletionRequest& request) = 0;
    virtual std::string id() const = 0;
};

// Offline client with canned responses keyed by the utterance found on the
// prompt's last `User:` line. Classification requests (recognized by the
// few-shot classifier markers in the prompt) return the canned classifier
// transcript, synthesis requests the canned program.
class MockLLMClient final : public LLMClient {
public:
    struct Entry {
        std::string classification;  // transcript with Categories/RequiresContext lines
        std::string completion;      // ODSL program text
    };

    static MockLLMClient load_file(const std::string& path);
    explicit MockLLMClient(std::map<std::string, Entry> entries) : entries_(std::move(entries)) {}

    std::string complete(const CompletionRequest& request) override;
    std::string id() const override { return "mock"; }

private:
    std::map<std::string, Entry> entries_;
};

// On-disk response cache keyed by a hash of the request payload, so
// experiments replay offline. Safe against hash collisions: the stored
// request is compared before a hit counts.
class ResponseCache {
public:
    explicit ResponseCache(std::string dir);

    std::optional<std::string> get(const std::string& request_payload) const;
    void put(const std::string& request_payload, const std::string& response) const;

private:
    std::string path_for(const std::string& request_payload) const;
    std::string dir_;
};

struct HttpOptions {
    std::string endpoint;  // e.g. https://api.example.com
    std::string api_key;
    std::string model = "gpt-3.5-turbo";
    int timeout_seconds = 30;
    int attempts = 3;                 // retries with exponential backoff
    int backoff_initial_ms = 250;
    std::shared_ptr<ResponseCache> cache;
};

// Chat-completions JSON wire format:
//   POST {endpoint}/v1/chat/completions
//   {"model": ..., "messages": [{"role": "user", "content": prompt}],
//    "temperature": ..., "top_p": ..., "max_tokens": ...}
// response: {"choices": [{"message": {"content": ...}}]}
class HttpLLMClient final : public LLMClient {
public:
    explicit HttpLLMClient(HttpOptions options) : options_(std::move(options)) {}

    std::string complete(const CompletionRequest& request) override;
    std::string id() const override { return "http"; }

private:
    HttpOptions options_;
};

// Embeddings JSON wire format:
//   POST {endpoint}/v1/embeddings   {"model": ..., "input": [text]}
//   response: {"data": [{"embedding": [...]}]}
class HttpEmbeddingProvider final : public EmbeddingProvider {
public:
    HttpEmbeddingProvider(HttpOptions options, std::size_t dim)
        : options_(std::move(options)), dim_(dim) {}

    std::vector<float> embed(const std::string& text) const override;
    std::size_t dim() const override { return dim_; }
    std::string id() const override { return "http"; }

private:
    HttpOptions options_;
    std::size_t dim_;
};

}  // namespace odsl::arm
