#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "planpref/common.hpp"
#include "planpref/linalg.hpp"
#include "planpref/parallel.hpp"

namespace planpref {

// Gaussian Naive Bayes: per-class priors plus per-feature normal densities,
// variances smoothed by 1e-9 times the largest feature variance.
struct GnbModel {
    std::vector<std::string> classes;  // sorted
    std::vector<double> priors;
    std::vector<std::vector<double>> means;      // class -> feature
    std::vector<std::vector<double>> variances;  // class -> feature, all > 0
};

// class_list pins the class universe (a listed class with no samples is an
// error); empty means "classes seen in labels".
GnbModel gnb_fit(const Matrix& x, const std::vector<std::string>& labels,
                 const std::vector<std::string>& class_list = {});
std::vector<std::string> gnb_predict(const GnbModel& model, const Matrix& rows);

// One-vs-rest logistic regression trained by per-sample gradient steps with
// a constant learning rate and a seeded shuffle each epoch.
struct SgdClassifier {
    std::vector<std::string> classes;  // sorted
    Matrix weights;                    // class x feature
    std::vector<double> biases;
    double learning_rate = 0.01;
    std::size_t epochs = 100;
    std::uint64_t seed = 42;
};

SgdClassifier sgd_fit(const Matrix& x, const std::vector<std::string>& labels, double learning_rate = 0.01,
                      std::size_t epochs = 100, std::uint64_t seed = 42);
std::vector<std::string> sgd_predict(const SgdClassifier& model, const Matrix& rows);

// Binary decision tree stored as a flat node array; nodes[0] is the root.
struct TreeNode {
    int feature = -1;  // -1 marks a leaf
    double threshold = 0.0;
    int left = -1;
    int right = -1;
    std::vector<std::size_t> counts;  // per-class sample counts, leaves only
};

struct DecisionTree {
    std::vector<TreeNode> nodes;
};

struct RandomForest {
    std::vector<std::string> classes;  // sorted
    std::vector<DecisionTree> trees;
    std::size_t n_trees = 100;
    std::uint64_t seed = 42;
};

// Each tree fits a seeded bootstrap resample with greedy Gini splits over
// max(1, floor(sqrt(d))) candidate features per node, unlimited depth,
// min-split 2. Trees are independent, so fitting may run in parallel; the
// forest is assembled in tree-index order either way.
RandomForest rf_fit(const Matrix& x, const std::vector<std::string>& labels, std::size_t n_trees = 100,
                    std::uint64_t seed = 42, parallel::Exec exec = parallel::default_exec());
std::vector<std::string> rf_predict(const RandomForest& model, const Matrix& rows);

// The bootstrap row indices tree `tree_index` trained on; exposed so tests
// can check each tree against its own training sample.
std::vector<std::size_t> rf_bootstrap_indices(std::uint64_t seed, std::size_t tree_index,
                                              std::size_t n_rows);

// Single-tree vote, mainly for inspecting forests in tests.
std::vector<std::string> tree_predict(const RandomForest& model, std::size_t tree_index,
                                      const Matrix& rows);

std::string gnb_to_json(const GnbModel& model);
GnbModel gnb_from_json(const std::string& text);
std::string sgd_to_json(const SgdClassifier& model);
SgdClassifier sgd_from_json(const std::string& text);
std::string rf_to_json(const RandomForest& model);
RandomForest rf_from_json(const std::string& text);

}  // namespace planpref
