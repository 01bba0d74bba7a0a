#pragma once

#include <Eigen/Dense>

#include "qmetro/pauli.hpp"

namespace qmetro {

// Exact Kronecker expansions on n <= limit sites (matrix dimension 2^n).
// Site 0 is the most significant bit of the basis index, so on one site
// Z -> diag(1, -1) with |0> the +1 eigenstate.
inline constexpr int kDefaultDenseSiteLimit = 12;

void check_dense_capacity(int n_sites, int site_limit = kDefaultDenseSiteLimit);

Eigen::MatrixXcd to_dense(const PauliOperator& op, int site_limit = kDefaultDenseSiteLimit);
Eigen::MatrixXcd to_dense(const PauliString& term, int n_sites,
                          int site_limit = kDefaultDenseSiteLimit);

// P * m without materializing P (row permutation with phases).
Eigen::MatrixXcd apply_left(const PauliString& term, int n_sites, const Eigen::MatrixXcd& m);
Eigen::MatrixXcd apply_left(const PauliOperator& op, const Eigen::MatrixXcd& m);
Eigen::VectorXcd apply(const PauliOperator& op, const Eigen::VectorXcd& v);

// Tr{op * m} in O(terms * dim).
Complex trace_product(const PauliOperator& op, const Eigen::MatrixXcd& m);

// (|0..0> + |1..1>) / sqrt(2); reduces to (|0> + |1>)/sqrt(2) on one site.
Eigen::VectorXcd ghz_state(int n_sites);

} // namespace qmetro
