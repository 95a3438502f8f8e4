#include "nknn/core.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

#include "json.hpp"

namespace nknn {

namespace {
const char* kReservedTokens[kNumReserved] = {"<pad>", "<bos>", "<eos>", "<unk>"};
}

Vocabulary::Vocabulary() {
    for (const char* t : kReservedTokens) {
        TokenId id = static_cast<TokenId>(tokens_.size());
        tokens_.emplace_back(t);
        index_.emplace(t, id);
    }
}

TokenId Vocabulary::add(const std::string& token) {
    if (index_.count(token)) {
        throw ValidationError("duplicate token in vocabulary: " + token);
    }
    TokenId id = static_cast<TokenId>(tokens_.size());
    tokens_.push_back(token);
    index_.emplace(token, id);
    return id;
}

std::optional<TokenId> Vocabulary::find(const std::string& token) const {
    auto it = index_.find(token);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

TokenId Vocabulary::to_id(const std::string& token) const {
    auto it = index_.find(token);
    return it == index_.end() ? kUnkId : it->second;
}

const std::string& Vocabulary::to_token(TokenId id) const {
    if (id < 0 || id >= size()) {
        throw ValidationError("token id out of range: " + std::to_string(id));
    }
    return tokens_[static_cast<size_t>(id)];
}

std::vector<std::string> split_whitespace(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream iss(text);
    std::string tok;
    while (iss >> tok) out.push_back(tok);
    return out;
}

Vocabulary build_vocab(const std::vector<std::string>& lines, int max_size) {
    if (max_size < kNumReserved + 1) {
        throw ConfigError("vocabulary max_size must be at least 5, got " +
                          std::to_string(max_size));
    }
    std::map<std::string, int64_t> counts;  // ordered map gives the lexicographic tie-break
    for (const auto& line : lines) {
        for (auto& tok : split_whitespace(line)) counts[tok] += 1;
    }
    std::vector<std::pair<std::string, int64_t>> by_freq(counts.begin(), counts.end());
    std::stable_sort(by_freq.begin(), by_freq.end(),
                     [](const auto& a, const auto& b) { return a.second > b.second; });
    Vocabulary vocab;
    for (const auto& [tok, cnt] : by_freq) {
        if (vocab.size() >= max_size) break;
        vocab.add(tok);
    }
    return vocab;
}

std::vector<TokenId> tokenize(const std::string& text, const Vocabulary& vocab) {
    std::vector<TokenId> out;
    for (auto& tok : split_whitespace(text)) out.push_back(vocab.to_id(tok));
    return out;
}

std::string detokenize(std::span<const TokenId> tokens, const Vocabulary& vocab) {
    std::string out;
    for (size_t i = 0; i < tokens.size(); ++i) {
        if (i) out += ' ';
        out += vocab.to_token(tokens[i]);
    }
    return out;
}

std::vector<SentencePair> load_corpus(const std::string& path, const Vocabulary& vocab) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open corpus file: " + path);
    std::vector<SentencePair> corpus;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        nlohmann::json rec = nlohmann::json::parse(line, nullptr, false);
        if (rec.is_discarded() || !rec.is_object() || !rec.contains("source") ||
            !rec.contains("target") || !rec["source"].is_string() ||
            !rec["target"].is_string()) {
            throw ParseError("malformed corpus record at line " + std::to_string(line_no) +
                             " of " + path);
        }
        SentencePair pair;
        pair.source = tokenize(rec["source"].get<std::string>(), vocab);
        pair.target = tokenize(rec["target"].get<std::string>(), vocab);
        if (pair.source.empty() || pair.target.empty()) {
            throw ValidationError("empty source or target at line " + std::to_string(line_no) +
                                  " of " + path);
        }
        corpus.push_back(std::move(pair));
    }
    return corpus;
}

void save_corpus(const std::vector<SentencePair>& corpus, const Vocabulary& vocab,
                 const std::string& path) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot write corpus file: " + path);
    for (const auto& pair : corpus) {
        nlohmann::json rec;
        rec["source"] = detokenize(pair.source, vocab);
        rec["target"] = detokenize(pair.target, vocab);
        out << rec.dump() << '\n';
    }
}

void save_vocab(const Vocabulary& vocab, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot write vocabulary file: " + path);
    for (const auto& tok : vocab.tokens()) out << tok << '\n';
}

Vocabulary load_vocab(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open vocabulary file: " + path);
    Vocabulary vocab;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        if (line_no < kNumReserved) {
            if (line != kReservedTokens[line_no]) {
                throw CorruptFileError("vocabulary file missing reserved token at index " +
                                       std::to_string(line_no) + ": " + path);
            }
        } else {
            vocab.add(line);
        }
        ++line_no;
    }
    if (line_no < kNumReserved) {
        throw CorruptFileError("vocabulary file truncated: " + path);
    }
    return vocab;
}

}  // namespace nknn
