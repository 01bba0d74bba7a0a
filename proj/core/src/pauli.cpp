#include "qmetro/pauli.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <sstream>

namespace qmetro {

namespace {

const Complex kI{0.0, 1.0};

// sigma_a sigma_b = table_coeff * sigma_c (c == a when a == b gives identity,
// encoded as weight drop). Axes are indexed X=0, Y=1, Z=2.
struct SiteProduct {
    Complex phase;
    bool keeps_site;
    Axis axis;
};

SiteProduct site_product(Axis a, Axis b) {
    if (a == b) return {Complex{1.0, 0.0}, false, Axis::X};
    const int ia = static_cast<int>(a);
    const int ib = static_cast<int>(b);
    // Remaining axis index and Levi-Civita sign of (a, b, c).
    const int ic = 3 - ia - ib;
    const bool cyclic = (ib == (ia + 1) % 3);
    return {cyclic ? kI : -kI, true, static_cast<Axis>(ic)};
}

bool letter_order(const std::pair<int, Axis>& a, const std::pair<int, Axis>& b) {
    return a.first < b.first;
}

// Strict ordering on letter maps for canonical term order.
bool letters_less(const std::vector<std::pair<int, Axis>>& a,
                  const std::vector<std::pair<int, Axis>>& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].first != b[i].first) return a[i].first < b[i].first;
        if (a[i].second != b[i].second)
            return static_cast<int>(a[i].second) < static_cast<int>(b[i].second);
    }
    return false;
}

} // namespace

char axis_char(Axis a) {
    switch (a) {
        case Axis::X: return 'x';
        case Axis::Y: return 'y';
        case Axis::Z: return 'z';
    }
    return '?';
}

Axis axis_from_char(char c) {
    switch (std::tolower(static_cast<unsigned char>(c))) {
        case 'x': return Axis::X;
        case 'y': return Axis::Y;
        case 'z': return Axis::Z;
        default: throw ValidationError(std::string("unknown Pauli letter '") + c + "'");
    }
}

PauliString::PauliString(Complex coeff, std::vector<std::pair<int, Axis>> lts)
    : coefficient(coeff), letters(std::move(lts)) {
    std::sort(letters.begin(), letters.end(), letter_order);
    for (std::size_t i = 0; i + 1 < letters.size(); ++i) {
        if (letters[i].first == letters[i + 1].first)
            throw ValidationError("duplicate site in Pauli string");
    }
    if (!letters.empty() && letters.front().first < 0)
        throw ValidationError("negative site index in Pauli string");
}

PauliString PauliString::identity(Complex coeff) { return PauliString(coeff, {}); }

PauliString PauliString::single(int site, Axis axis, Complex coeff) {
    return PauliString(coeff, {{site, axis}});
}

int PauliString::max_site() const {
    return letters.empty() ? -1 : letters.back().first;
}

bool PauliString::letter_at(int site, Axis& out) const {
    auto it = std::lower_bound(letters.begin(), letters.end(), std::make_pair(site, Axis::X),
                               letter_order);
    if (it == letters.end() || it->first != site) return false;
    out = it->second;
    return true;
}

PauliString multiply(const PauliString& a, const PauliString& b) {
    PauliString out;
    out.coefficient = a.coefficient * b.coefficient;
    out.letters.reserve(a.letters.size() + b.letters.size());
    std::size_t ia = 0;
    std::size_t ib = 0;
    while (ia < a.letters.size() || ib < b.letters.size()) {
        if (ib == b.letters.size() ||
            (ia < a.letters.size() && a.letters[ia].first < b.letters[ib].first)) {
            out.letters.push_back(a.letters[ia++]);
        } else if (ia == a.letters.size() || b.letters[ib].first < a.letters[ia].first) {
            out.letters.push_back(b.letters[ib++]);
        } else {
            const int site = a.letters[ia].first;
            const SiteProduct p = site_product(a.letters[ia].second, b.letters[ib].second);
            out.coefficient *= p.phase;
            if (p.keeps_site) out.letters.emplace_back(site, p.axis);
            ++ia;
            ++ib;
        }
    }
    return out;
}

OverlapCounts overlap_counts(const PauliString& a, const PauliString& b) {
    OverlapCounts c;
    std::size_t ia = 0;
    std::size_t ib = 0;
    while (ia < a.letters.size() && ib < b.letters.size()) {
        if (a.letters[ia].first < b.letters[ib].first) {
            ++ia;
        } else if (b.letters[ib].first < a.letters[ia].first) {
            ++ib;
        } else {
            ++c.shared_sites;
            if (a.letters[ia].second == b.letters[ib].second) ++c.matching_letters;
            ++ia;
            ++ib;
        }
    }
    return c;
}

PauliOperator::PauliOperator(int n_sites) : n_sites_(n_sites) {
    if (n_sites < 1) throw ValidationError("operator needs at least one site");
}

PauliOperator::PauliOperator(int n_sites, std::vector<PauliString> terms)
    : n_sites_(n_sites), terms_(std::move(terms)) {
    if (n_sites < 1) throw ValidationError("operator needs at least one site");
    for (const auto& t : terms_) {
        if (t.max_site() >= n_sites)
            throw DimensionError("Pauli string touches site " + std::to_string(t.max_site()) +
                                 " outside [0, " + std::to_string(n_sites) + ")");
    }
    normalize();
}

PauliOperator PauliOperator::identity(int n_sites, Complex coeff) {
    return PauliOperator(n_sites, {PauliString::identity(coeff)});
}

void PauliOperator::normalize() {
    std::sort(terms_.begin(), terms_.end(), [](const PauliString& a, const PauliString& b) {
        return letters_less(a.letters, b.letters);
    });
    std::vector<PauliString> merged;
    merged.reserve(terms_.size());
    for (auto& t : terms_) {
        if (!merged.empty() && merged.back().same_letters(t)) {
            merged.back().coefficient += t.coefficient;
        } else {
            merged.push_back(std::move(t));
        }
    }
    merged.erase(std::remove_if(merged.begin(), merged.end(),
                                [](const PauliString& t) {
                                    return std::abs(t.coefficient) < kCoefficientZeroTolerance;
                                }),
                 merged.end());
    terms_ = std::move(merged);
}

void PauliOperator::check_same_sites(const PauliOperator& other) const {
    if (n_sites_ != other.n_sites_)
        throw DimensionError("operators on " + std::to_string(n_sites_) + " vs " +
                             std::to_string(other.n_sites_) + " sites");
}

PauliOperator PauliOperator::adjoint() const {
    PauliOperator out(*this);
    for (auto& t : out.terms_) t.coefficient = std::conj(t.coefficient);
    return out;
}

double PauliOperator::hermiticity_defect() const {
    double d = 0.0;
    for (const auto& t : terms_) d = std::max(d, std::abs(t.coefficient.imag()));
    return d;
}

Complex PauliOperator::trace() const {
    const double dim = std::pow(2.0, n_sites_);
    for (const auto& t : terms_) {
        if (t.is_identity()) return t.coefficient * dim;
    }
    return {0.0, 0.0};
}

double PauliOperator::max_abs_coefficient() const {
    double m = 0.0;
    for (const auto& t : terms_) m = std::max(m, std::abs(t.coefficient));
    return m;
}

double PauliOperator::coefficient_norm() const {
    double s = 0.0;
    for (const auto& t : terms_) s += std::abs(t.coefficient);
    return s;
}

PauliOperator PauliOperator::weight_part(int weight) const {
    PauliOperator out(n_sites_);
    for (const auto& t : terms_) {
        if (t.weight() == weight) out.terms_.push_back(t);
    }
    return out;
}

PauliOperator PauliOperator::weight_at_most(int weight) const {
    PauliOperator out(n_sites_);
    for (const auto& t : terms_) {
        if (t.weight() <= weight) out.terms_.push_back(t);
    }
    return out;
}

PauliOperator PauliOperator::weight_at_least(int weight) const {
    PauliOperator out(n_sites_);
    for (const auto& t : terms_) {
        if (t.weight() >= weight) out.terms_.push_back(t);
    }
    return out;
}

PauliOperator& PauliOperator::operator+=(const PauliOperator& other) {
    check_same_sites(other);
    terms_.insert(terms_.end(), other.terms_.begin(), other.terms_.end());
    normalize();
    return *this;
}

PauliOperator& PauliOperator::operator-=(const PauliOperator& other) {
    check_same_sites(other);
    terms_.reserve(terms_.size() + other.terms_.size());
    for (const auto& t : other.terms_) {
        PauliString neg = t;
        neg.coefficient = -neg.coefficient;
        terms_.push_back(std::move(neg));
    }
    normalize();
    return *this;
}

PauliOperator& PauliOperator::operator*=(Complex scalar) {
    for (auto& t : terms_) t.coefficient *= scalar;
    normalize();
    return *this;
}

PauliOperator operator*(const PauliOperator& a, const PauliOperator& b) {
    a.check_same_sites(b);
    std::vector<PauliString> terms;
    terms.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& ta : a.terms_) {
        for (const auto& tb : b.terms_) {
            terms.push_back(multiply(ta, tb));
        }
    }
    return PauliOperator(a.n_sites_, std::move(terms));
}

PauliOperator commutator(const PauliOperator& a, const PauliOperator& b) {
    return a * b - b * a;
}

Complex hs_inner(const PauliOperator& a, const PauliOperator& b) {
    if (a.n_sites() != b.n_sites())
        throw DimensionError("Hilbert-Schmidt inner product needs matching site counts");
    // Strings are orthogonal under the normalized trace, so walk the two
    // normalized term lists and match letter maps.
    Complex acc{0.0, 0.0};
    const auto& ta = a.terms();
    const auto& tb = b.terms();
    std::size_t ib = 0;
    for (const auto& s : ta) {
        while (ib < tb.size() && letters_less(tb[ib].letters, s.letters)) ++ib;
        if (ib < tb.size() && tb[ib].same_letters(s))
            acc += std::conj(s.coefficient) * tb[ib].coefficient;
    }
    return acc;
}

double max_coefficient_distance(const PauliOperator& a, const PauliOperator& b) {
    return (a - b).max_abs_coefficient();
}

bool approx_equal(const PauliOperator& a, const PauliOperator& b, double tol) {
    return max_coefficient_distance(a, b) <= tol;
}

PauliOperator build_spin_chain(int n_sites, double coupling_j, double coupling_delta,
                               double field_lambda, BoundaryCondition bc) {
    if (n_sites < 1) throw ValidationError("chain needs at least one site");
    if (coupling_delta != 0.0 && bc == BoundaryCondition::periodic && n_sites < 3)
        throw ValidationError("three-site couplings on a periodic chain need n >= 3");

    std::vector<PauliString> terms;
    const auto wrap = [&](int i) { return i % n_sites; };
    if (coupling_j != 0.0 && n_sites >= 2) {
        const int last = bc == BoundaryCondition::periodic ? n_sites : n_sites - 1;
        for (int i = 0; i < last; ++i) {
            terms.push_back(PauliString(Complex{coupling_j / 2.0, 0.0},
                                        {{i, Axis::X}, {wrap(i + 1), Axis::X}}));
        }
    }
    if (coupling_delta != 0.0 && n_sites >= 3) {
        const int last = bc == BoundaryCondition::periodic ? n_sites : n_sites - 2;
        for (int i = 0; i < last; ++i) {
            terms.push_back(PauliString(
                Complex{coupling_delta / 2.0, 0.0},
                {{i, Axis::X}, {wrap(i + 1), Axis::X}, {wrap(i + 2), Axis::X}}));
        }
    }
    if (field_lambda != 0.0) {
        for (int i = 0; i < n_sites; ++i) {
            terms.push_back(PauliString::single(i, Axis::Z, Complex{field_lambda / 2.0, 0.0}));
        }
    }
    return PauliOperator(n_sites, std::move(terms));
}

PauliOperator uniform_field(int n_sites, Axis axis, double scale) {
    std::vector<PauliString> terms;
    terms.reserve(n_sites);
    for (int i = 0; i < n_sites; ++i)
        terms.push_back(PauliString::single(i, axis, Complex{scale, 0.0}));
    return PauliOperator(n_sites, std::move(terms));
}

std::string to_text(const PauliOperator& op) {
    std::string out;
    char buf[64];
    for (const auto& t : op.terms()) {
        std::snprintf(buf, sizeof(buf), "%.17g %.17g", t.coefficient.real(),
                      t.coefficient.imag());
        out += buf;
        for (const auto& [site, axis] : t.letters) {
            std::snprintf(buf, sizeof(buf), " %d:%c", site, axis_char(axis));
            out += buf;
        }
        out += '\n';
    }
    return out;
}

PauliOperator from_text(int n_sites, const std::string& text) {
    std::vector<PauliString> terms;
    std::istringstream stream(text);
    std::string line;
    int line_no = 0;
    while (std::getline(stream, line)) {
        ++line_no;
        std::istringstream ls(line);
        double re = 0.0;
        double im = 0.0;
        if (!(ls >> re)) continue; // blank line
        if (!(ls >> im))
            throw ValidationError("operator text line " + std::to_string(line_no) +
                                  ": expected coeff_re coeff_im");
        std::vector<std::pair<int, Axis>> letters;
        std::string tok;
        while (ls >> tok) {
            const auto colon = tok.find(':');
            if (colon == std::string::npos || colon + 1 >= tok.size())
                throw ValidationError("operator text line " + std::to_string(line_no) +
                                      ": bad token '" + tok + "'");
            letters.emplace_back(std::stoi(tok.substr(0, colon)),
                                 axis_from_char(tok[colon + 1]));
        }
        terms.emplace_back(Complex{re, im}, std::move(letters));
    }
    return PauliOperator(n_sites, std::move(terms));
}

std::string to_string(const PauliString& s) {
    std::ostringstream os;
    os << "(" << s.coefficient.real();
    if (s.coefficient.imag() != 0.0) os << (s.coefficient.imag() < 0 ? "" : "+")
                                        << s.coefficient.imag() << "i";
    os << ")";
    if (s.is_identity()) {
        os << " I";
    } else {
        for (const auto& [site, axis] : s.letters) os << " " << axis_char(axis) << site;
    }
    return os.str();
}

std::string to_string(const PauliOperator& op) {
    if (op.is_zero()) return "0";
    std::string out;
    for (const auto& t : op.terms()) {
        if (!out.empty()) out += " + ";
        out += to_string(t);
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const PauliOperator& op) {
    return os << to_string(op);
}

} // namespace qmetro
