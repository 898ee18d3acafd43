#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "planpref/common.hpp"
#include "planpref/linalg.hpp"
#include "planpref/parallel.hpp"
#include "planpref/preprocess.hpp"
#include "planpref/rng.hpp"

namespace planpref {

enum class ActivationKind { Relu, Tanh, Sigmoid };
enum class LossKind { MAE, LogLoss };

std::string activation_name(ActivationKind k);
ActivationKind activation_from_name(const std::string& name);
std::string loss_name(LossKind k);
LossKind loss_from_name(const std::string& name);

double apply_activation(ActivationKind kind, double x);
// Derivative at pre-activation z whose activation value is h; passing h in
// avoids recomputing exp/tanh. Relu derivative at exactly 0 is 0.
double activation_derivative(ActivationKind kind, double z, double h);

struct AdamConstants {
    double learning_rate = 0.001;
    double beta1 = 0.9;
    double beta2 = 0.999;
    double epsilon = 1e-8;
};

struct MlpConfig {
    std::vector<std::size_t> layer_sizes;     // [input, hidden..., 1]
    std::vector<ActivationKind> activations;  // one per non-input layer
    double dropout_rate = 0.0;                // hidden layers only, inverted scaling
    LossKind loss = LossKind::MAE;
    AdamConstants adam;
    std::size_t batch_size = 96;
    std::size_t epochs = 120;
    std::uint64_t seed = 42;
};

// Shape and range checks; width rules of thumb (first hidden layer at least
// twice the input, or a hidden layer wider than its predecessor) only warn.
void validate_config(const MlpConfig& config, WarningSink* warnings = nullptr);

// The tuned two-hidden-layer setup: [input,100,50,1], Relu/Tanh/Sigmoid,
// dropout 0.25, MAE, batch 96, 120 epochs.
MlpConfig default_architecture(std::size_t input_dim, WarningSink* warnings = nullptr);
// The first-cut setup kept for comparison: all-Relu, no dropout, log loss.
MlpConfig original_architecture(std::size_t input_dim, WarningSink* warnings = nullptr);

struct MlpModel {
    MlpConfig config;
    std::vector<Matrix> weights;  // per layer, (out x in) row-major
    std::vector<std::vector<double>> biases;
    bool trained = false;
    std::vector<std::string> feature_names;  // column order the model expects
    std::string scaler_ref;                  // path of the scaler artifact, if any
};

// Seeded uniform init: Relu layers draw from +/- sqrt(6/fan_in), others from
// +/- sqrt(6/(fan_in+fan_out)); biases start at zero. The draw stream is
// keyed by (seed, layer), so equal seeds and shapes initialize equally.
MlpModel init_network(const MlpConfig& config, WarningSink* warnings = nullptr);

enum class ForwardMode { Train, Infer };

struct ForwardCache {
    Matrix input;
    std::vector<Matrix> z;      // pre-activations per layer
    std::vector<Matrix> h;      // activations before dropout per layer
    std::vector<Matrix> scale;  // dropout multiplier actually applied (train mode)
    std::vector<Matrix> a;      // what the next layer saw
};

// Train mode draws an inverted-dropout mask for each hidden unit from
// dropout_rng: kept units scale by 1/(1-p), dropped ones go to 0, so the
// expected activation matches infer mode. Infer mode never touches the rng.
std::vector<double> forward(const MlpModel& model, const Matrix& batch, ForwardMode mode,
                            ForwardCache* cache = nullptr, Rng* dropout_rng = nullptr,
                            parallel::Exec exec = parallel::default_exec());

// MAE or log loss (predictions clamped into [1e-7, 1-1e-7]). Empty input is
// an error.
double loss(LossKind kind, const std::vector<double>& predictions,
            const std::vector<double>& targets);

struct Gradients {
    std::vector<Matrix> dw;
    std::vector<std::vector<double>> db;
};

// Analytic gradients through the cached forward pass, dropout masks
// included. Log-loss predictions outside the clamp range contribute zero
// gradient (the clamp saturates rather than passing a false slope through).
Gradients backward(const MlpModel& model, const ForwardCache& cache,
                   const std::vector<double>& targets,
                   parallel::Exec exec = parallel::default_exec());

struct AdamState {
    std::vector<Matrix> mw, vw;
    std::vector<std::vector<double>> mb, vb;
    std::uint64_t t = 0;
};

AdamState init_adam(const MlpModel& model);

// One scalar Adam update; the tensor step applies this to every parameter.
// t is the already-incremented timestep.
void adam_update(double& theta, double g, double& m, double& v, std::uint64_t t,
                 const AdamConstants& c);

void adam_step(MlpModel& model, const Gradients& grads, AdamState& state,
               const AdamConstants& constants);

struct EpochStats {
    std::size_t epoch = 0;  // 1-based
    double train_loss = 0.0;
    double val_loss = 0.0;
};

struct TrainResult {
    MlpModel model;
    std::vector<EpochStats> history;
};

// Feature columns (everything but the target) and the target vector.
struct Dataset {
    Matrix x;
    std::vector<double> y;
    std::vector<std::string> feature_names;
};
Dataset split_xy(const FeatureMatrix& m);

// Seeded-shuffle mini-batch training with Adam. The last partial batch is
// trained on. Validation loss is computed without dropout after each epoch.
// A non-finite loss aborts with the epoch number. epochs=0 returns the
// initialized model untouched with empty history.
TrainResult train(const FeatureMatrix& matrix, const SplitIndices& split, const MlpConfig& config,
                  WarningSink* warnings = nullptr, parallel::Exec exec = parallel::default_exec());

std::vector<double> predict(const MlpModel& model, const Matrix& x,
                            parallel::Exec exec = parallel::default_exec());

struct GridTrial {
    std::size_t index = 0;
    std::size_t batch_size = 0;
    std::size_t epochs = 0;
    std::uint64_t seed = 0;
    double val_accuracy = 0.0;
    double final_train_loss = 0.0;
    double final_val_loss = 0.0;
};

// Scores a trained trial model on the validation block; returns accuracy.
using ValScorer =
    std::function<double(const MlpModel& model, const Matrix& x_val, const std::vector<double>& y_val)>;

struct GridResult {
    MlpConfig best;
    std::vector<GridTrial> trials;
};

// One trial per (batch, epochs) pair, batch-major, seeded base.seed + index.
// Best trial by validation accuracy; ties prefer fewer epochs, then smaller
// batches. The trial table always comes back in trial-index order.
GridResult grid_search(const FeatureMatrix& matrix, const SplitIndices& split,
                       const MlpConfig& base, const std::vector<std::size_t>& batch_grid,
                       const std::vector<std::size_t>& epoch_grid, const ValScorer& scorer,
                       WarningSink* warnings = nullptr,
                       parallel::Exec exec = parallel::default_exec());

std::string grid_trials_to_csv(const std::vector<GridTrial>& trials);

std::string model_to_json(const MlpModel& model);
MlpModel model_from_json(const std::string& text);

std::string mlp_config_to_json(const MlpConfig& config);
MlpConfig mlp_config_from_json(const std::string& text);

std::string history_to_csv(const std::vector<EpochStats>& history);

}  // namespace planpref
