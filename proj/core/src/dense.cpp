#include "qmetro/dense.hpp"

#include <cmath>

namespace qmetro {

namespace {

// Action of a string on basis index `in` (site 0 = most significant bit):
// returns the output index and accumulates the phase.
inline Eigen::Index string_action(const PauliString& term, int n_sites, Eigen::Index in,
                                  Complex& phase) {
    Eigen::Index out = in;
    phase = term.coefficient;
    for (const auto& [site, axis] : term.letters) {
        const Eigen::Index bit = Eigen::Index(1) << (n_sites - 1 - site);
        const bool one = (in & bit) != 0;
        switch (axis) {
            case Axis::X:
                out ^= bit;
                break;
            case Axis::Y:
                out ^= bit;
                phase *= one ? Complex{0.0, -1.0} : Complex{0.0, 1.0};
                break;
            case Axis::Z:
                if (one) phase = -phase;
                break;
        }
    }
    return out;
}

} // namespace

void check_dense_capacity(int n_sites, int site_limit) {
    if (n_sites > site_limit)
        throw CapacityError("dense expansion limited to " + std::to_string(site_limit) +
                            " sites, got " + std::to_string(n_sites));
}

Eigen::MatrixXcd to_dense(const PauliString& term, int n_sites, int site_limit) {
    check_dense_capacity(n_sites, site_limit);
    const Eigen::Index dim = Eigen::Index(1) << n_sites;
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
    for (Eigen::Index col = 0; col < dim; ++col) {
        Complex phase;
        const Eigen::Index row = string_action(term, n_sites, col, phase);
        m(row, col) += phase;
    }
    return m;
}

Eigen::MatrixXcd to_dense(const PauliOperator& op, int site_limit) {
    check_dense_capacity(op.n_sites(), site_limit);
    const Eigen::Index dim = Eigen::Index(1) << op.n_sites();
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
    for (const auto& term : op.terms()) {
        for (Eigen::Index col = 0; col < dim; ++col) {
            Complex phase;
            const Eigen::Index row = string_action(term, op.n_sites(), col, phase);
            m(row, col) += phase;
        }
    }
    return m;
}

Eigen::MatrixXcd apply_left(const PauliString& term, int n_sites, const Eigen::MatrixXcd& m) {
    Eigen::MatrixXcd out(m.rows(), m.cols());
    for (Eigen::Index col = 0; col < m.rows(); ++col) {
        Complex phase;
        const Eigen::Index row = string_action(term, n_sites, col, phase);
        out.row(row) = phase * m.row(col);
    }
    return out;
}

Eigen::MatrixXcd apply_left(const PauliOperator& op, const Eigen::MatrixXcd& m) {
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(m.rows(), m.cols());
    for (const auto& term : op.terms()) {
        for (Eigen::Index col = 0; col < m.rows(); ++col) {
            Complex phase;
            const Eigen::Index row = string_action(term, op.n_sites(), col, phase);
            out.row(row) += phase * m.row(col);
        }
    }
    return out;
}

Eigen::VectorXcd apply(const PauliOperator& op, const Eigen::VectorXcd& v) {
    const Eigen::Index dim = Eigen::Index(1) << op.n_sites();
    if (v.size() != dim)
        throw DimensionError("state dimension does not match operator site count");
    Eigen::VectorXcd out = Eigen::VectorXcd::Zero(dim);
    for (const auto& term : op.terms()) {
        for (Eigen::Index i = 0; i < dim; ++i) {
            Complex phase;
            const Eigen::Index j = string_action(term, op.n_sites(), i, phase);
            out(j) += phase * v(i);
        }
    }
    return out;
}

Complex trace_product(const PauliOperator& op, const Eigen::MatrixXcd& m) {
    const Eigen::Index dim = Eigen::Index(1) << op.n_sites();
    if (m.rows() != dim || m.cols() != dim)
        throw DimensionError("matrix dimension does not match operator site count");
    Complex acc{0.0, 0.0};
    for (const auto& term : op.terms()) {
        // Tr{P m} = sum_col phase(col) * m(col, row(col)).
        for (Eigen::Index col = 0; col < dim; ++col) {
            Complex phase;
            const Eigen::Index row = string_action(term, op.n_sites(), col, phase);
            acc += phase * m(col, row);
        }
    }
    return acc;
}

Eigen::VectorXcd ghz_state(int n_sites) {
    const Eigen::Index dim = Eigen::Index(1) << n_sites;
    Eigen::VectorXcd v = Eigen::VectorXcd::Zero(dim);
    v(0) = Complex{1.0 / std::sqrt(2.0), 0.0};
    v(dim - 1) = Complex{1.0 / std::sqrt(2.0), 0.0};
    return v;
}

} // namespace qmetro
