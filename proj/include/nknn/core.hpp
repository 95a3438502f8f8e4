#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace nknn {

using TokenId = int32_t;

constexpr TokenId kPadId = 0;
constexpr TokenId kBosId = 1;
constexpr TokenId kEosId = 2;
constexpr TokenId kUnkId = 3;
constexpr int kNumReserved = 4;

// Error taxonomy mirrored by the CLI exit codes.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct ValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct CorruptFileError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct VersionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct FingerprintError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Token alphabet with fixed reserved entries at ids 0..3.
class Vocabulary {
public:
    Vocabulary();

    // Appends a non-reserved token; the string must be new.
    TokenId add(const std::string& token);

    std::optional<TokenId> find(const std::string& token) const;
    // find() with UNK fallback.
    TokenId to_id(const std::string& token) const;
    const std::string& to_token(TokenId id) const;

    int size() const { return static_cast<int>(tokens_.size()); }
    const std::vector<std::string>& tokens() const { return tokens_; }

private:
    std::vector<std::string> tokens_;
    std::unordered_map<std::string, TokenId> index_;
};

struct SentencePair {
    std::vector<TokenId> source;
    std::vector<TokenId> target;
};

// Dense probability vector over the vocabulary. The all-zero vector is the
// "no evidence" marker produced by retrieval with an empty neighbor set.
using Distribution = std::vector<double>;

/// Row-major T x dim matrix of per-position hidden states.
struct HiddenSequence {
    int dim = 0;
    std::vector<float> data;

    int rows() const { return dim == 0 ? 0 : static_cast<int>(data.size()) / dim; }
    std::span<const float> row(int t) const {
        return {data.data() + static_cast<size_t>(t) * dim, static_cast<size_t>(dim)};
    }
    float* mutable_row(int t) { return data.data() + static_cast<size_t>(t) * dim; }
};

// Frequency-ordered vocabulary from whitespace-tokenized lines; ties broken
// lexicographically so the result is byte-stable across runs.
Vocabulary build_vocab(const std::vector<std::string>& lines, int max_size);

std::vector<TokenId> tokenize(const std::string& text, const Vocabulary& vocab);
std::string detokenize(std::span<const TokenId> tokens, const Vocabulary& vocab);

// JSONL corpus with "source"/"target" whitespace-tokenized text fields.
std::vector<SentencePair> load_corpus(const std::string& path, const Vocabulary& vocab);
void save_corpus(const std::vector<SentencePair>& corpus, const Vocabulary& vocab,
                 const std::string& path);

// Newline-delimited token list, index order implicit.
void save_vocab(const Vocabulary& vocab, const std::string& path);
Vocabulary load_vocab(const std::string& path);

std::vector<std::string> split_whitespace(const std::string& text);

}  // namespace nknn
