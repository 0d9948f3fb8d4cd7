#pragma once

#include <Eigen/Dense>
#include <complex>

// Dense complex linear-algebra kernel used by every other module.
// All matrices are small (dim <= ~64) square complex matrices; errors
// are reported via exceptions.

namespace qcov {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

// Default absolute entrywise tolerance for equality / Hermiticity checks.
inline constexpr double kTol = 1e-10;

enum class Factor { First, Second };

bool approx_equal(const Matrix& a, const Matrix& b, double tol = kTol);
bool is_hermitian(const Matrix& m, double tol = kTol);
bool is_unitary(const Matrix& m, double tol = kTol);

// Kronecker product; first factor is the slow index:
// result(i*db+k, j*db+l) = a(i,j) * b(k,l).
Matrix kron(const Matrix& a, const Matrix& b);

// Reduced matrix after tracing out the selected factor of a d1*d2 system.
// Tracing out Factor::First yields a d2 x d2 matrix, Factor::Second d1 x d1.
Matrix partial_trace(const Matrix& m, int d1, int d2, Factor traced);

struct EigSystem {
  Eigen::VectorXd values;  // ascending
  Matrix vectors;          // unitary, columns are eigenvectors
};

// Hermitian eigendecomposition; throws std::invalid_argument when the
// input is not Hermitian within tol.
EigSystem herm_eig(const Matrix& m, double tol = kTol);

Matrix commutator(const Matrix& a, const Matrix& b);
Matrix anticommutator(const Matrix& a, const Matrix& b);

// exp(i*h) for Hermitian h; the result is unitary.
Matrix expm_i(const Matrix& h);

Matrix pauli(int k);  // k in {1,2,3}

void require_finite(const Matrix& m);
void require_same_dim(const Matrix& a, const Matrix& b);

}  // namespace qcov
