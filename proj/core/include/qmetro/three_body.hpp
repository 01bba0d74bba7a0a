#pragma once

#include <span>
#include <vector>

#include "qmetro/pauli.hpp"

namespace qmetro {

// Synthesis of effective three-body chain interactions out of periodically
// driven two-body terms. A drive pair (H_+, H_- = H_+^dag) built from
// nearest-neighbour strings produces [H_+, H_-] whose three-body part can be
// steered onto a chosen letter pattern sum_i s^a_i s^b_{i+1} s^c_{i+2} by a
// suitable per-site coefficient scheme. Everything assumes periodic
// boundaries (the wrap terms enter the commutator identities).

struct ThreeBodyPattern {
    Axis first;
    Axis second;
    Axis third;
};

enum class ThreeBodyCase {
    all_same,     // (k,k,k): two families, s^k s^l and s^m s^k
    outer_pair,   // (k,m,k): families s^k s^l and s^k s^k
    all_distinct, // (k,m,l): one family s^k s^l with site-varying ratio
    matched_pair, // (k,k,l): built jointly with (m,m,l); families s^k s^l, s^m s^l
};

// Throws UnsupportedError for patterns with no implemented scheme
// (e.g. (k,m,m) with k != m).
ThreeBodyCase classify_pattern(const ThreeBodyPattern& pattern);

struct ThreeBodySynthesis {
    PauliOperator drive_plus;  // harmonic component at +l
    PauliOperator drive_minus; // adjoint component at -l
    PauliOperator three_body;  // three-body part of [drive_plus, drive_minus]
    PauliOperator residual;    // at-most-two-body remainder, to absorb into
                               // the static control
};

// Coefficient families are per-site complex values of length n_sites; entry i
// scales the two-body string starting at site i. The family in use per case:
//   all_same(k):     a = c^{kl} on s^k_i s^l_{i+1}, b = c^{mk} on s^m_i s^k_{i+1}
//                    with (l, m) the axes satisfying [s^l, s^m] = 2i s^k
//   outer_pair(kmk): a = c^{kl} on s^k s^l (l = remaining axis), b = c^{kk}
//   all_distinct:    a = c^{kl} on s^k_i s^l_{i+1} (first/third letters)
//   matched_pair:    a = c^{kl}, b = c^{ml} (m = remaining axis)
// Families marked with the common-ratio requirement must satisfy
// Im(z_i z_{i+1}^*) = 0 for all i including the periodic wrap (equivalently
// Re/Im constant along the chain); violations raise ConstraintError.
// all_distinct is the opposite regime: only a site-varying ratio produces a
// nonzero three-body term, and no constraint is imposed.
ThreeBodySynthesis three_body_drive(const ThreeBodyPattern& pattern, int n_sites,
                                    std::span<const Complex> family_a,
                                    std::span<const Complex> family_b = {});

// Largest |Im(z_i z_{i+1}^*)| around the ring, normalized by max|z|^2.
double ratio_condition_defect(std::span<const Complex> values);
bool satisfies_ratio_condition(std::span<const Complex> values, double tol = 1e-9);

std::vector<Complex> uniform_coefficients(int n_sites, Complex value);

// Site profile c_i = (alpha_i + i) * v_i whose ratio climbs by alpha_step per
// site, with the last site adjusted so every ring pair contributes the same
// Im(c_i c_{i+1}^*) = alpha_step * magnitude^2. Needs n_sites >= 3.
std::vector<Complex> staircase_coefficients(int n_sites, double alpha_start,
                                            double alpha_step, double magnitude);

} // namespace qmetro
