#include "qmetro/three_body.hpp"

#include <algorithm>
#include <cmath>

namespace qmetro {

namespace {

// Third axis given two distinct ones.
Axis remaining_axis(Axis a, Axis b) {
    return static_cast<Axis>(3 - static_cast<int>(a) - static_cast<int>(b));
}

// Axes (l, m) with [s^l, s^m] = 2i s^k, i.e. (l, m, k) a cyclic triple.
std::pair<Axis, Axis> commuting_partners(Axis k) {
    switch (k) {
        case Axis::X: return {Axis::Y, Axis::Z};
        case Axis::Y: return {Axis::Z, Axis::X};
        case Axis::Z: return {Axis::X, Axis::Y};
    }
    return {Axis::X, Axis::Y};
}

PauliOperator two_body_family(int n_sites, Axis left, Axis right,
                              std::span<const Complex> values) {
    std::vector<PauliString> terms;
    terms.reserve(values.size());
    for (int i = 0; i < n_sites; ++i) {
        const int j = (i + 1) % n_sites;
        if (std::abs(values[i]) == 0.0) continue;
        terms.push_back(PauliString(values[i], {{i, left}, {j, right}}));
    }
    return PauliOperator(n_sites, std::move(terms));
}

void require_ratio_condition(std::span<const Complex> values, const char* family) {
    if (!satisfies_ratio_condition(values)) {
        throw ConstraintError(std::string("coefficient family ") + family +
                              " must keep a common Re/Im ratio along the chain "
                              "(Im(z_i z_{i+1}^*) = 0 including the wrap)");
    }
}

void require_family_size(std::span<const Complex> values, int n_sites, const char* family) {
    if (static_cast<int>(values.size()) != n_sites)
        throw ValidationError(std::string("coefficient family ") + family + " needs " +
                              std::to_string(n_sites) + " per-site values");
}

// The post-condition of the synthesis: every three-body term sits on a
// consecutive site triple and carries the requested letters.
void check_three_body_pattern(const PauliOperator& three_body, const ThreeBodyPattern& want,
                              const ThreeBodyPattern& partner, bool has_partner, int n_sites) {
    for (const auto& term : three_body.terms()) {
        if (term.weight() != 3) continue;
        bool ok = false;
        for (int i = 0; i < n_sites && !ok; ++i) {
            const std::vector<std::pair<int, Axis>> a = {
                {i, want.first}, {(i + 1) % n_sites, want.second}, {(i + 2) % n_sites, want.third}};
            PauliString probe(Complex{1.0, 0.0}, a);
            if (probe.same_letters(term)) ok = true;
            if (!ok && has_partner) {
                const std::vector<std::pair<int, Axis>> b = {{i, partner.first},
                                                             {(i + 1) % n_sites, partner.second},
                                                             {(i + 2) % n_sites, partner.third}};
                PauliString probe2(Complex{1.0, 0.0}, b);
                if (probe2.same_letters(term)) ok = true;
            }
        }
        if (!ok)
            throw ConstraintError("coefficient scheme leaked a three-body term off the "
                                  "target pattern: " + to_string(term));
    }
}

} // namespace

ThreeBodyCase classify_pattern(const ThreeBodyPattern& p) {
    if (p.first == p.second && p.second == p.third) return ThreeBodyCase::all_same;
    if (p.first == p.third && p.first != p.second) return ThreeBodyCase::outer_pair;
    if (p.first != p.second && p.second != p.third && p.first != p.third)
        return ThreeBodyCase::all_distinct;
    if (p.first == p.second && p.first != p.third) return ThreeBodyCase::matched_pair;
    // Remaining shape: (k, m, m) with k != m. First order in 1/omega offers no
    // simple two-body scheme for it on its own.
    throw UnsupportedError(std::string("no drive scheme for three-body pattern (") +
                           axis_char(p.first) + ", " + axis_char(p.second) + ", " +
                           axis_char(p.third) + ")");
}

ThreeBodySynthesis three_body_drive(const ThreeBodyPattern& pattern, int n_sites,
                                    std::span<const Complex> family_a,
                                    std::span<const Complex> family_b) {
    if (n_sites < 3) throw ValidationError("three-body synthesis needs n >= 3");
    const ThreeBodyCase kind = classify_pattern(pattern);

    PauliOperator drive(n_sites);
    ThreeBodyPattern partner = pattern;
    bool has_partner = false;

    switch (kind) {
        case ThreeBodyCase::all_same: {
            const Axis k = pattern.first;
            const auto [l, m] = commuting_partners(k);
            require_family_size(family_a, n_sites, "a");
            require_family_size(family_b, n_sites, "b");
            require_ratio_condition(family_a, "a");
            require_ratio_condition(family_b, "b");
            drive = two_body_family(n_sites, k, l, family_a) +
                    two_body_family(n_sites, m, k, family_b);
            break;
        }
        case ThreeBodyCase::outer_pair: {
            const Axis k = pattern.first;
            const Axis l = remaining_axis(pattern.first, pattern.second);
            require_family_size(family_a, n_sites, "a");
            require_family_size(family_b, n_sites, "b");
            require_ratio_condition(family_a, "a");
            drive = two_body_family(n_sites, k, l, family_a) +
                    two_body_family(n_sites, k, k, family_b);
            break;
        }
        case ThreeBodyCase::all_distinct: {
            require_family_size(family_a, n_sites, "a");
            if (!family_b.empty())
                throw ValidationError("all-distinct pattern takes a single family");
            drive = two_body_family(n_sites, pattern.first, pattern.third, family_a);
            break;
        }
        case ThreeBodyCase::matched_pair: {
            const Axis k = pattern.first;
            const Axis l = pattern.third;
            const Axis m = remaining_axis(k, l);
            require_family_size(family_a, n_sites, "a");
            require_family_size(family_b, n_sites, "b");
            require_ratio_condition(family_a, "a");
            require_ratio_condition(family_b, "b");
            drive = two_body_family(n_sites, k, l, family_a) +
                    two_body_family(n_sites, m, l, family_b);
            partner = ThreeBodyPattern{m, m, l};
            has_partner = true;
            break;
        }
    }

    ThreeBodySynthesis out{drive, drive.adjoint(), PauliOperator(n_sites),
                           PauliOperator(n_sites)};
    const PauliOperator full = commutator(out.drive_plus, out.drive_minus);
    out.three_body = full.weight_part(3);
    out.residual = full - out.three_body;
    check_three_body_pattern(out.three_body, pattern, partner, has_partner, n_sites);
    return out;
}

double ratio_condition_defect(std::span<const Complex> values) {
    if (values.size() < 2) return 0.0;
    double scale = 0.0;
    for (const auto& z : values) scale = std::max(scale, std::norm(z));
    if (scale == 0.0) return 0.0;
    double worst = 0.0;
    const int n = static_cast<int>(values.size());
    for (int i = 0; i < n; ++i) {
        const Complex prod = values[i] * std::conj(values[(i + 1) % n]);
        worst = std::max(worst, std::abs(prod.imag()));
    }
    return worst / scale;
}

bool satisfies_ratio_condition(std::span<const Complex> values, double tol) {
    return ratio_condition_defect(values) <= tol;
}

std::vector<Complex> uniform_coefficients(int n_sites, Complex value) {
    return std::vector<Complex>(static_cast<std::size_t>(n_sites), value);
}

std::vector<Complex> staircase_coefficients(int n_sites, double alpha_start,
                                            double alpha_step, double magnitude) {
    if (n_sites < 3) throw ValidationError("staircase profile needs n >= 3");
    std::vector<Complex> values(static_cast<std::size_t>(n_sites));
    for (int i = 0; i + 1 < n_sites; ++i) {
        const double alpha = alpha_start + i * alpha_step;
        values[i] = Complex{alpha, 1.0} * magnitude;
    }
    // Close the ring: pick the last site so the wrap pairs contribute the
    // same Im(c_i c_{i+1}^*) = alpha_step * magnitude^2 as the interior.
    const double alpha_last = alpha_start + (n_sites - 2) * alpha_step / 2.0;
    const double magnitude_last = 2.0 * magnitude / (2.0 - n_sites);
    values[n_sites - 1] = Complex{alpha_last, 1.0} * magnitude_last;
    return values;
}

} // namespace qmetro
