#pragma once

#include <complex>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "qmetro/errors.hpp"

namespace qmetro {

using Complex = std::complex<double>;

// Coefficients below this magnitude are dropped during normalization.
// Phase products of long strings accumulate dust at the 1e-16 level.
inline constexpr double kCoefficientZeroTolerance = 1e-14;

enum class Axis : std::uint8_t { X = 0, Y = 1, Z = 2 };

char axis_char(Axis a);
Axis axis_from_char(char c);

enum class BoundaryCondition { periodic, open };

// A scaled tensor product of single-site Pauli matrices. Sites not listed
// carry the identity. `letters` is kept sorted by site with unique sites;
// an empty letter list is a scaled identity.
struct PauliString {
    Complex coefficient{1.0, 0.0};
    std::vector<std::pair<int, Axis>> letters;

    PauliString() = default;
    PauliString(Complex coeff, std::vector<std::pair<int, Axis>> lts);

    static PauliString identity(Complex coeff = {1.0, 0.0});
    static PauliString single(int site, Axis axis, Complex coeff = {1.0, 0.0});

    bool is_identity() const { return letters.empty(); }
    int weight() const { return static_cast<int>(letters.size()); }
    // Largest site index used, or -1 for the identity.
    int max_site() const;
    // Letter at `site`, or Axis-independent "none" signalled via bool.
    bool letter_at(int site, Axis& out) const;

    bool same_letters(const PauliString& other) const { return letters == other.letters; }
};

// Matrix product of two strings: always a single string with an accumulated
// phase (the single-site products close on {1, i, -i} times a Pauli).
PauliString multiply(const PauliString& a, const PauliString& b);

// Shared-site statistics of a string pair: `p` counts shared sites, `q`
// counts shared sites carrying the same letter. The commutator vanishes
// exactly when p - q is even.
struct OverlapCounts {
    int shared_sites = 0;        // p
    int matching_letters = 0;    // q
};
OverlapCounts overlap_counts(const PauliString& a, const PauliString& b);

// Sparse sum of Pauli strings on a fixed number of sites. Terms are kept
// normalized: sorted by letter map, duplicates merged, near-zero dropped.
// Values are immutable after construction; all operations are pure.
class PauliOperator {
public:
    PauliOperator() = default;
    explicit PauliOperator(int n_sites);
    PauliOperator(int n_sites, std::vector<PauliString> terms);

    static PauliOperator zero(int n_sites) { return PauliOperator(n_sites); }
    static PauliOperator identity(int n_sites, Complex coeff = {1.0, 0.0});

    int n_sites() const { return n_sites_; }
    const std::vector<PauliString>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    int term_count() const { return static_cast<int>(terms_.size()); }

    PauliOperator adjoint() const;
    // Max |Im coeff| over normalized terms; the operator is Hermitian iff
    // every merged coefficient is real (each stored string is Hermitian).
    double hermiticity_defect() const;
    bool is_hermitian(double tol = 1e-12) const { return hermiticity_defect() <= tol; }

    // Trace over the full 2^n space.
    Complex trace() const;
    double max_abs_coefficient() const;
    // Sum of |coefficients|; an upper bound on the spectral norm.
    double coefficient_norm() const;

    // Terms of a given weight (0 = identity component).
    PauliOperator weight_part(int weight) const;
    PauliOperator weight_at_most(int weight) const;
    PauliOperator weight_at_least(int weight) const;

    PauliOperator& operator+=(const PauliOperator& other);
    PauliOperator& operator-=(const PauliOperator& other);
    PauliOperator& operator*=(Complex scalar);

    friend PauliOperator operator+(PauliOperator a, const PauliOperator& b) { return a += b; }
    friend PauliOperator operator-(PauliOperator a, const PauliOperator& b) { return a -= b; }
    friend PauliOperator operator*(PauliOperator a, Complex s) { return a *= s; }
    friend PauliOperator operator*(Complex s, PauliOperator a) { return a *= s; }
    friend PauliOperator operator*(PauliOperator a, double s) { return a *= Complex{s, 0.0}; }
    friend PauliOperator operator*(double s, PauliOperator a) { return a *= Complex{s, 0.0}; }
    friend PauliOperator operator-(PauliOperator a) { return a *= Complex{-1.0, 0.0}; }

    // Full operator product (term-by-term string products, then normalize).
    friend PauliOperator operator*(const PauliOperator& a, const PauliOperator& b);

private:
    void check_same_sites(const PauliOperator& other) const;
    void normalize();

    int n_sites_ = 0;
    std::vector<PauliString> terms_;
};

// [a, b] = ab - ba in normalized form.
PauliOperator commutator(const PauliOperator& a, const PauliOperator& b);

// Hilbert-Schmidt inner product Tr{a^dag b} / 2^n.
Complex hs_inner(const PauliOperator& a, const PauliOperator& b);

// Largest |a - b| coefficient after normalization.
double max_coefficient_distance(const PauliOperator& a, const PauliOperator& b);
bool approx_equal(const PauliOperator& a, const PauliOperator& b, double tol = 1e-12);

// Transverse-field chain with nearest-neighbour XX couplings, XXX
// three-site couplings and a uniform Z field:
//   (J/2) sum_i X_i X_{i+1} + (Delta/2) sum_i X_i X_{i+1} X_{i+2}
//   + (lambda/2) sum_i Z_i
// Site i+1 wraps modulo n only under periodic boundary conditions.
PauliOperator build_spin_chain(int n_sites, double coupling_j, double coupling_delta,
                               double field_lambda, BoundaryCondition bc);

// Uniform one-body sums, e.g. (scale) * sum_i Z_i.
PauliOperator uniform_field(int n_sites, Axis axis, double scale);

// Text form, one term per line: "coeff_re coeff_im site:letter site:letter ...".
std::string to_text(const PauliOperator& op);
PauliOperator from_text(int n_sites, const std::string& text);

std::string to_string(const PauliString& s);
std::string to_string(const PauliOperator& op);
std::ostream& operator<<(std::ostream& os, const PauliOperator& op);

} // namespace qmetro
