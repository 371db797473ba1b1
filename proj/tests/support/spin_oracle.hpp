// Copyright 2026 The magcp Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef MAGCP_TESTS_SPIN_ORACLE_HPP_
#define MAGCP_TESTS_SPIN_ORACLE_HPP_

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <map>
#include <utility>
#include <vector>

namespace magcp::oracle {

using cdouble = std::complex<double>;

// Angular momentum operators for spin j in the basis m = j, j-1, ..., -j.
struct SpinOps
{
    Eigen::MatrixXcd x, y, z;
};

inline SpinOps spin_ops(double j)
{
    const int n = static_cast<int>(std::lround(2 * j + 1));
    Eigen::MatrixXcd plus = Eigen::MatrixXcd::Zero(n, n);
    Eigen::MatrixXcd z = Eigen::MatrixXcd::Zero(n, n);
    for (int i = 0; i < n; ++i) {
        const double m = j - i;
        z(i, i) = m;
        if (i > 0) {
            plus(i - 1, i) = std::sqrt(j * (j + 1) - m * (m + 1));
        }
    }
    const Eigen::MatrixXcd minus = plus.adjoint();
    return {(plus + minus) / 2.0, (plus - minus) / cdouble(0.0, 2.0), z};
}

inline Eigen::MatrixXcd kron(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b)
{
    Eigen::MatrixXcd out(a.rows() * b.rows(), a.cols() * b.cols());
    for (int i = 0; i < a.rows(); ++i) {
        for (int j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

// Coupled states |F, M> of j1 (x) j2 found by diagonalising F^2 inside each
// M block of the product basis. Keyed by (2F, 2M).
inline std::map<std::pair<int, int>, Eigen::VectorXcd> coupled_states(double j1, double j2)
{
    const auto s1 = spin_ops(j1);
    const auto s2 = spin_ops(j2);
    const int n1 = s1.z.rows();
    const int n2 = s2.z.rows();
    const auto id1 = Eigen::MatrixXcd::Identity(n1, n1);
    const auto id2 = Eigen::MatrixXcd::Identity(n2, n2);
    const Eigen::MatrixXcd fx = kron(s1.x, id2) + kron(id1, s2.x);
    const Eigen::MatrixXcd fy = kron(s1.y, id2) + kron(id1, s2.y);
    const Eigen::MatrixXcd fz = kron(s1.z, id2) + kron(id1, s2.z);
    const Eigen::MatrixXcd f2 = fx * fx + fy * fy + fz * fz;

    std::map<std::pair<int, int>, Eigen::VectorXcd> out;
    for (int twoM = -static_cast<int>(2 * (j1 + j2)); twoM <= 2 * (j1 + j2); twoM += 2) {
        std::vector<int> idx;
        for (int i = 0; i < n1 * n2; ++i) {
            if (std::lround(2.0 * fz(i, i).real()) == twoM) {
                idx.push_back(i);
            }
        }
        Eigen::MatrixXcd block(idx.size(), idx.size());
        for (std::size_t a = 0; a < idx.size(); ++a) {
            for (std::size_t b = 0; b < idx.size(); ++b) {
                block(a, b) = f2(idx[a], idx[b]);
            }
        }
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(block);
        for (int k = 0; k < es.eigenvalues().size(); ++k) {
            const double ff = es.eigenvalues()(k);
            const double F = 0.5 * (-1.0 + std::sqrt(1.0 + 4.0 * ff));
            Eigen::VectorXcd v = Eigen::VectorXcd::Zero(n1 * n2);
            for (std::size_t a = 0; a < idx.size(); ++a) {
                v(idx[a]) = es.eigenvectors()(a, k);
            }
            out[{static_cast<int>(std::lround(2 * F)), twoM}] = v;
        }
    }
    return out;
}

} // namespace magcp::oracle

#endif // MAGCP_TESTS_SPIN_ORACLE_HPP_
