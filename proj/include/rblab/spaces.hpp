// Finite-dimensional complex Banach-space models and Schauder decompositions:
// evaluable norms, exact/searched operator norms, block-projection families.
#pragma once

#include <Eigen/Dense>

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace rblab {

using Complex = std::complex<double>;
using Vector = Eigen::VectorXcd;
using Matrix = Eigen::MatrixXcd;
using RealMatrix = Eigen::MatrixXd;

inline double max_abs(const Matrix& m) {
    return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

// ===================== Space models =====================

enum class NormKind { lp, weighted_l1, sup };

struct SpaceModel {
    int dim = 0;
    NormKind kind = NormKind::lp;
    double p = 2.0;                  // lp only; std::numeric_limits<double>::infinity() allowed
    std::vector<double> weights;     // weighted_l1 only, all positive

    static SpaceModel lp_space(int dim, double p);
    static SpaceModel weighted_l1_space(std::vector<double> weights);
    static SpaceModel sup_space(int dim);

    // true when operator_norm has a closed-form column/row evaluation
    bool has_exact_operator_norm() const;
    std::string describe() const;
};

double norm(const SpaceModel& space, const Vector& x);

struct OperatorNormResult {
    double value = 0.0;
    bool exact = false;
};

struct OperatorNormOptions {
    int restarts = 8;
    int iterations = 80;
    double tol = 1e-12;
    std::uint64_t seed = 0x5DEECE66DULL;
};

// Exact for l1 / weighted-l1 / sup norms; otherwise a lower bound found by
// randomized duality-map power iteration, flagged inexact.
OperatorNormResult operator_norm(const SpaceModel& space, const Matrix& B,
                                 const OperatorNormOptions& opts = {});

// ===================== Decompositions =====================

// Projection stored in factored form p = basis * functionals with
// functionals * basis = I_rank.
struct ProjectionBlock {
    Matrix basis;        // dim x rank
    Matrix functionals;  // rank x dim

    Eigen::Index rank() const { return basis.cols(); }
    Matrix dense() const { return basis * functionals; }
};

struct DecompositionModel {
    SpaceModel space;
    std::vector<ProjectionBlock> blocks;
    std::optional<Matrix> basis_change;
    double schauder_constant = 1.0;  // K = max over N of ||P_N||
    bool schauder_exact = true;

    // caches filled by finalize(): stacked factors and a real copy when possible
    Matrix stacked_basis;          // dim x total_rank
    Matrix stacked_functionals;    // total_rank x dim
    std::vector<Eigen::Index> rank_offsets;  // size M+1, prefix ranks
    bool real_factors = false;
    RealMatrix real_basis;
    RealMatrix real_functionals;

    int block_count() const { return static_cast<int>(blocks.size()); }
    int dim() const { return space.dim; }

    void finalize();  // builds the stacked/real caches; idempotent

    Matrix block_matrix(int n) const;        // p_n, n in 1..M
    Matrix partial_sum_matrix(int N) const;  // P_N, N in 0..M (P_0 = 0)
    Matrix tail_matrix(int N) const;         // Q_N = I - P_N
    Vector apply_block(int n, const Vector& x) const;
    Vector apply_partial_sum(int N, const Vector& x) const;
};

DecompositionModel build_coordinate_decomposition(const SpaceModel& space,
                                                  const std::vector<int>& block_dims);
DecompositionModel build_haar_l1(int levels);
DecompositionModel build_trig_lp(double p, int n_modes);

// Similarity transform p_n -> S p_n S^{-1}; changes K, keeps the algebra.
DecompositionModel conjugate_decomposition(const DecompositionModel& model, const Matrix& S);

Matrix partial_sum(const DecompositionModel& model, int N);
Matrix tail_projection(const DecompositionModel& model, int N);

struct SchauderConstant {
    double value = 1.0;
    bool exact = true;
};
SchauderConstant schauder_constant_of(const SpaceModel& space,
                                      const std::vector<ProjectionBlock>& blocks,
                                      const OperatorNormOptions& opts = {});

struct ValidationIssue {
    std::string what;
    double magnitude = 0.0;
};

struct ValidationReport {
    bool passed = true;
    double worst_violation = 0.0;
    double tolerance = 1e-9;
    std::vector<ValidationIssue> issues;
};

ValidationReport validate_decomposition(const DecompositionModel& model, double tol = 1e-9);

}  // namespace rblab
