#ifndef HADKIT_LINALG_HPP
#define HADKIT_LINALG_HPP

#include <Eigen/Dense>
#include <cstdint>

namespace had::linalg {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

// L such that L*L^T = a, L lower triangular with positive diagonal.
// Throws FactorizationError naming the failing pivot if a is not positive
// definite. Input is assumed symmetric; only the lower triangle is read.
Matrix cholesky_lower(const Matrix& a);

// Solves lower*m = v. Throws SingularSolveError on a zero diagonal entry.
Vector forward_substitute(const Matrix& lower, const Vector& v);

// In-place variant for hot loops: x holds v on entry, m on exit.
void forward_substitute_inplace(const Matrix& lower, double* x, int n);

// Inverse of (A + c*u*u^T) given ainv = A^{-1} (symmetric rank-1 Woodbury).
// Throws UpdateInstabilityError when |1/c + u^T ainv u| is below
// 1e-12 * scale of the involved terms.
Matrix woodbury_rank1(const Matrix& ainv, const Vector& u, double c);

// Inverse of (R + X^T X) given rinv = R^{-1}, where the rows of x are k new
// samples (un-normalised sum form; any 1/n scaling is the caller's job).
// Throws UpdateInstabilityError if the inner k x k system is singular.
Matrix woodbury_block(const Matrix& rinv, const Matrix& x);

// Batched Welford update. On entry (mean, cov, n_seen) describe the exact
// running statistics of n_seen rows (cov unbiased, 1/(n-1); zero matrix while
// n_seen < 2). On exit they describe all n_seen + batch.rows() rows.
void welford_batch_update(Vector& mean, Matrix& cov, std::int64_t& n_seen, const Matrix& batch);

struct EigResult {
    Vector values;   // descending
    Matrix vectors;  // n x k, orthonormal columns
    bool converged = true;
};

// Top-k eigenpairs of a symmetric PSD matrix by power iteration with
// Hotelling deflation. Stops a pair when successive Rayleigh quotients agree
// to 1e-8 relative, giving up after 100 iterations (converged=false, best
// iterate kept). Eigenvector sign is fixed so the largest-magnitude entry is
// positive. warm_start, when given, supplies start vectors column-by-column.
EigResult power_deflation_eigs(const Matrix& k_matrix, int k, const Matrix* warm_start = nullptr);

}  // namespace had::linalg

#endif
