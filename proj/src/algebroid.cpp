#include "algcalc/algebroid.hpp"

#include "algcalc/error.hpp"

#include <string>

namespace algcalc {

// ---------------------------------------------------------------------------
// Section

Section Section::frame(std::size_t rank, std::size_t alpha) {
    if (alpha >= rank) throw DimensionError("frame index out of range");
    Section s(rank);
    s.components_[alpha] = ScalarExpr(1L);
    return s;
}

bool Section::is_zero() const noexcept {
    for (const auto& c : components_) {
        if (!c.is_zero()) return false;
    }
    return true;
}

Section& Section::operator+=(const Section& other) {
    if (other.rank() != rank()) throw DimensionError("section rank mismatch");
    for (std::size_t a = 0; a < rank(); ++a) components_[a] += other.components_[a];
    return *this;
}

Section& Section::operator-=(const Section& other) {
    if (other.rank() != rank()) throw DimensionError("section rank mismatch");
    for (std::size_t a = 0; a < rank(); ++a) components_[a] -= other.components_[a];
    return *this;
}

Section operator-(const Section& a) {
    Section r(a);
    for (auto& c : r.components_) c = -c;
    return r;
}

Section operator*(const ScalarExpr& f, const Section& s) {
    Section r(s);
    for (auto& c : r.components_) c = f * c;
    return r;
}

// ---------------------------------------------------------------------------
// LieAlgebroid

LieAlgebroid::LieAlgebroid(std::vector<Coordinate> coords, std::size_t rank)
    : coords_(std::move(coords)), rank_(rank),
      anchor_(coords_.size() * rank), structure_(rank * rank * rank) {}

LieAlgebroid::LieAlgebroid(std::vector<Coordinate> coords, std::size_t rank, ExprMatrix anchor,
                           std::vector<std::vector<std::vector<ScalarExpr>>> structure)
    : LieAlgebroid(std::move(coords), rank) {
    const std::size_t n = coords_.size();
    if (anchor.size() != n) throw DimensionError("anchor must have one row per coordinate");
    for (std::size_t i = 0; i < n; ++i) {
        if (anchor[i].size() != rank) throw DimensionError("anchor rows must have rank entries");
        for (std::size_t a = 0; a < rank; ++a) anchor_[i * rank + a] = anchor[i][a];
    }
    if (structure.size() != rank) throw DimensionError("structure must be rank x rank x rank");
    for (std::size_t a = 0; a < rank; ++a) {
        if (structure[a].size() != rank) throw DimensionError("structure must be rank x rank x rank");
        for (std::size_t b = 0; b < rank; ++b) {
            if (structure[a][b].size() != rank)
                throw DimensionError("structure must be rank x rank x rank");
            for (std::size_t c = 0; c < rank; ++c) set_structure(a, b, c, structure[a][b][c]);
        }
    }
}

LieAlgebroid LieAlgebroid::tangent(std::size_t n) {
    LieAlgebroid A(default_coordinates(n), n);
    for (std::size_t i = 0; i < n; ++i) A.set_anchor(i, i, ScalarExpr(1L));
    return A;
}

std::vector<std::string> LieAlgebroid::coordinate_names() const {
    return algcalc::coordinate_names(coords_);
}

void LieAlgebroid::set_anchor(std::size_t i, std::size_t a, ScalarExpr value) {
    if (i >= base_dim() || a >= rank_) throw DimensionError("anchor index out of range");
    anchor_[i * rank_ + a] = std::move(value);
}

void LieAlgebroid::set_structure(std::size_t a, std::size_t b, std::size_t c, ScalarExpr value) {
    if (a >= rank_ || b >= rank_ || c >= rank_) throw DimensionError("structure index out of range");
    structure_[(a * rank_ + b) * rank_ + c] = std::move(value);
}

void LieAlgebroid::set_bracket(std::size_t a, std::size_t b, std::size_t c, const ScalarExpr& value) {
    set_structure(a, b, c, value);
    set_structure(b, a, c, -value);
}

// ---------------------------------------------------------------------------
// Anchor action and bracket

namespace {

void require_rank(const LieAlgebroid& A, const Section& z) {
    if (z.rank() != A.rank())
        throw DimensionError("section has " + std::to_string(z.rank()) +
                             " components, algebroid rank is " + std::to_string(A.rank()));
}

ScalarExpr apply_vector_field(const std::vector<ScalarExpr>& field, const ScalarExpr& f,
                              std::size_t n) {
    ScalarExpr sum;
    if (f.is_constant()) return sum;
    for (std::size_t i = 0; i < n; ++i) {
        if (field[i].is_zero()) continue;
        sum += field[i] * partial(f, i + 1, n);
    }
    return sum;
}

} // namespace

std::vector<ScalarExpr> anchor_vector(const LieAlgebroid& A, const Section& z) {
    require_rank(A, z);
    std::vector<ScalarExpr> field(A.base_dim());
    for (std::size_t i = 0; i < A.base_dim(); ++i) {
        for (std::size_t a = 0; a < A.rank(); ++a) {
            if (z[a].is_zero() || A.anchor(i, a).is_zero()) continue;
            field[i] += A.anchor(i, a) * z[a];
        }
    }
    return field;
}

ScalarExpr anchor_apply(const LieAlgebroid& A, const Section& z, const ScalarExpr& f) {
    return apply_vector_field(anchor_vector(A, z), f, A.base_dim());
}

Section bracket(const LieAlgebroid& A, const Section& u, const Section& v) {
    require_rank(A, u);
    require_rank(A, v);
    const std::size_t p = A.rank();
    const std::size_t n = A.base_dim();
    const auto rho_u = anchor_vector(A, u);
    const auto rho_v = anchor_vector(A, v);
    Section out(p);
    for (std::size_t c = 0; c < p; ++c) {
        ScalarExpr sum;
        for (std::size_t a = 0; a < p; ++a) {
            if (u[a].is_zero()) continue;
            for (std::size_t b = 0; b < p; ++b) {
                if (v[b].is_zero() || A.structure(a, b, c).is_zero()) continue;
                sum += u[a] * v[b] * A.structure(a, b, c);
            }
        }
        sum += apply_vector_field(rho_u, v[c], n);
        sum -= apply_vector_field(rho_v, u[c], n);
        out[c] = std::move(sum);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Axiom checks

CheckReport check_antisymmetry(const LieAlgebroid& A) {
    CheckReport report{"antisymmetry", {}, {}};
    const std::size_t p = A.rank();
    for (std::size_t a = 0; a < p; ++a)
        for (std::size_t b = a; b < p; ++b)
            for (std::size_t c = 0; c < p; ++c)
                report.record("antisymmetry", {a + 1, b + 1, c + 1},
                              A.structure(a, b, c) + A.structure(b, a, c));
    return report;
}

CheckReport check_anchor_compatibility(const LieAlgebroid& A) {
    // L^c_{ab} rho^k_c = rho^i_a d_i rho^k_b - rho^j_b d_j rho^k_a, for a < b.
    // The a > b instances are the negatives of these once antisymmetry holds.
    CheckReport report{"anchor compatibility", {}, {}};
    const std::size_t p = A.rank();
    const std::size_t n = A.base_dim();
    for (std::size_t a = 0; a < p; ++a) {
        const Section ta = Section::frame(p, a);
        for (std::size_t b = a + 1; b < p; ++b) {
            const Section tb = Section::frame(p, b);
            for (std::size_t k = 0; k < n; ++k) {
                ScalarExpr lhs;
                for (std::size_t c = 0; c < p; ++c) lhs += A.structure(a, b, c) * A.anchor(k, c);
                const ScalarExpr rhs =
                    anchor_apply(A, ta, A.anchor(k, b)) - anchor_apply(A, tb, A.anchor(k, a));
                report.record("anchor compatibility", {a + 1, b + 1, k + 1}, rhs - lhs);
            }
        }
    }
    return report;
}

CheckReport check_jacobi(const LieAlgebroid& A) {
    CheckReport report{"jacobi", {}, {}};
    const std::size_t p = A.rank();
    std::vector<Section> frame;
    for (std::size_t a = 0; a < p; ++a) frame.push_back(Section::frame(p, a));
    for (std::size_t a = 0; a < p; ++a)
        for (std::size_t b = a + 1; b < p; ++b)
            for (std::size_t c = b + 1; c < p; ++c) {
                const Section cyclic = bracket(A, frame[a], bracket(A, frame[b], frame[c])) +
                                       bracket(A, frame[b], bracket(A, frame[c], frame[a])) +
                                       bracket(A, frame[c], bracket(A, frame[a], frame[b]));
                for (std::size_t d = 0; d < p; ++d)
                    report.record("jacobi", {a + 1, b + 1, c + 1, d + 1}, cyclic[d]);
            }
    return report;
}

CheckReport validate(const LieAlgebroid& A) {
    CheckReport report{"axioms", {}, {}};
    report.children = {check_antisymmetry(A), check_anchor_compatibility(A), check_jacobi(A)};
    for (const auto& child : report.children)
        report.witnesses.insert(report.witnesses.end(), child.witnesses.begin(), child.witnesses.end());
    return report;
}

} // namespace algcalc
