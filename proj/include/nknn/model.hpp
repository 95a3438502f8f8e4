#pragma once

#include <cstdint>
#include <memory>
#include <string>

#include "nknn/core.hpp"

namespace nknn {

struct StepResult {
    std::vector<float> hidden;
    Distribution dist;
};

struct PassResult {
    HiddenSequence hidden;
    std::vector<Distribution> dists;
};

/// Left-to-right model contract: one decoding step conditioned on the source
/// and the target prefix emitted so far.
class AutoregressiveModel {
public:
    virtual ~AutoregressiveModel() = default;
    virtual int dim() const = 0;
    virtual int vocab_size() const = 0;
    // Fingerprint of everything that determines hidden states; stored in the
    // datastore header so query-time and build-time models provably match.
    virtual uint64_t fingerprint() const = 0;
    virtual StepResult step(std::span<const TokenId> source,
                            std::span<const TokenId> prefix) const = 0;
};

/// Parallel-generation model contract: explicit length prediction, a first
/// pass conditioned on the source only, and a second pass conditioned on a
/// candidate translation.
class NonAutoregressiveModel {
public:
    virtual ~NonAutoregressiveModel() = default;
    virtual int dim() const = 0;
    virtual int vocab_size() const = 0;
    virtual uint64_t first_pass_fingerprint() const = 0;
    virtual uint64_t second_pass_fingerprint() const = 0;
    virtual int predict_length(std::span<const TokenId> source) const = 0;
    virtual PassResult first_pass(std::span<const TokenId> source, int length) const = 0;
    virtual PassResult second_pass(std::span<const TokenId> source,
                                   std::span<const TokenId> candidate) const = 0;
};

struct SyntheticModelConfig {
    int dim = 16;
    uint64_t seed = 17;
    float noise_scale = 0.0f;
    int vocab_size = 100;

    uint64_t base_fingerprint() const;
};

// Flat key=value file (dim, seed, noise_scale, vocab_size).
void save_model_config(const SyntheticModelConfig& config, const std::string& path);
SyntheticModelConfig load_model_config(const std::string& path);

/// Deterministic stand-in for a trained translation model. Hidden states are
/// seeded hash embeddings, so a context seen at datastore-build time produces
/// a bit-identical query vector at inference time.
///
/// The model carries an underlying target function ("clean target"): the
/// first token pair follows its own step distribution and the rest follows a
/// seeded bigram continuation table. First-pass NAT states expose that target
/// only through a position-bucketed lens plus noise of magnitude noise_scale,
/// which makes adjacent positions nearly indistinguishable; second-pass
/// states are rebuilt from the candidate token window and are well separated.
class SyntheticModel : public AutoregressiveModel, public NonAutoregressiveModel {
public:
    explicit SyntheticModel(const SyntheticModelConfig& config);

    const SyntheticModelConfig& config() const { return config_; }

    // AutoregressiveModel
    int dim() const override { return config_.dim; }
    int vocab_size() const override { return config_.vocab_size; }
    uint64_t fingerprint() const override;
    StepResult step(std::span<const TokenId> source,
                    std::span<const TokenId> prefix) const override;

    // NonAutoregressiveModel
    uint64_t first_pass_fingerprint() const override;
    uint64_t second_pass_fingerprint() const override;
    int predict_length(std::span<const TokenId> source) const override;
    PassResult first_pass(std::span<const TokenId> source, int length) const override;
    PassResult second_pass(std::span<const TokenId> source,
                           std::span<const TokenId> candidate) const override;

    // The noise-free target sequence the synthetic model is built around;
    // corpus generators use it as the gold reference for a source.
    std::vector<TokenId> clean_target(std::span<const TokenId> source, int length) const;

private:
    void token_embedding(TokenId token, float* out) const;
    void add_embedding(uint64_t h, float weight, float* out) const;
    double dot_token(const float* state, TokenId token) const;
    Distribution softmax_logits(const std::vector<double>& logits) const;
    Distribution at_distribution(const float* hidden, std::span<const TokenId> source,
                                 int step_index) const;
    TokenId gram_next(TokenId a, TokenId b) const;

    SyntheticModelConfig config_;
    std::vector<float> token_vectors_;  // vocab_size x dim, precomputed
};

// Index of the largest entry, ties broken by the lowest index.
int argmax(const Distribution& dist);

}  // namespace nknn
