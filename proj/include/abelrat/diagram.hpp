#pragma once

#include "abelrat/ratpoly.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace abelrat {

enum class Term : std::uint8_t { A3 = 0, A2 = 1, A1 = 2, Deriv = 3 };

inline constexpr std::array<Term, 4> kAllTerms{Term::A3, Term::A2, Term::A1, Term::Deriv};
inline constexpr std::array<Term, 3> kCoefficientTerms{Term::A3, Term::A2, Term::A1};

const char* term_label(Term t);  // "3", "2", "1", "∂"

class TieSet {
public:
    TieSet() = default;
    TieSet(std::initializer_list<Term> terms);

    bool has(Term t) const { return (bits_ >> static_cast<int>(t)) & 1u; }
    void add(Term t) { bits_ |= static_cast<std::uint8_t>(1u << static_cast<int>(t)); }
    int size() const;
    std::vector<Term> members() const;
    std::uint8_t bits() const { return bits_; }
    // "{3,2,1,∂}" in the canonical order 3, 2, 1, ∂.
    std::string label() const;

    friend bool operator==(TieSet a, TieSet b) { return a.bits_ == b.bits_; }
    friend bool operator!=(TieSet a, TieSet b) { return a.bits_ != b.bits_; }

private:
    std::uint8_t bits_ = 0;
};

class AbelEquation {
public:
    // Throws InvalidEquation unless 1 < n1 < n2 < n3 and every A_i is nonzero.
    AbelEquation(int n1, int n2, int n3, RatPoly A1, RatPoly A2, RatPoly A3);

    int n(Term t) const;         // n_∂ = 1
    int a(Term t) const;         // a_∂ = -1
    const Rational& alpha(Term t) const;
    const RatPoly& A(Term t) const;

    int n1() const { return n_[2]; }
    int n2() const { return n_[1]; }
    int n3() const { return n_[0]; }
    const RatPoly& A1() const { return A_[2]; }
    const RatPoly& A2() const { return A_[1]; }
    const RatPoly& A3() const { return A_[0]; }

    friend bool operator==(const AbelEquation& x, const AbelEquation& y) {
        return x.n_ == y.n_ && x.A_ == y.A_;
    }

private:
    std::array<int, 3> n_;      // indexed by Term A3, A2, A1
    std::array<RatPoly, 3> A_;
};

struct Vertex {
    int a;
    int n;
};

struct VertexSet {
    Vertex Q3, Q2, Q1;
    Vertex Qpartial{-1, 1};
};

VertexSet vertex_set(const AbelEquation& eq);

int phi(const AbelEquation& eq, Term ell, int r);

struct CandidateDegrees {
    Rational r32, r31, r21, r3d, r2d, r1d;
    Rational r0;
    std::set<int> gamma;
};

CandidateDegrees candidate_degrees(const AbelEquation& eq);

struct EdgeProfile {
    int r = 0;
    int Or = 0;
    TieSet tie;
    std::array<int, 4> phis{};  // indexed by Term
    RatPoly edge_poly;
    int e_r = 0;
    RatPoly reduced_poly;
};

// nullopt when r is not edge-admissible.
std::optional<EdgeProfile> edge_profile(const AbelEquation& eq, int r);

// Profiles for every edge-admissible r in Γ, ascending.
std::vector<EdgeProfile> admissible_profiles(const AbelEquation& eq);

enum class TieKind {
    T32, T321, T32d, T321d, T31, T31d, T21, T21d, T3d, T2d, T1d
};

const char* tie_kind_label(TieKind k);

// Re-verifies the dominance relations among the six ratios. Throws InternalInconsistency.
TieKind classify_tie(const EdgeProfile& profile, const AbelEquation& eq);

// Binomial tie {i, ∂}.
bool is_binomial_with_derivative(TieSet t);

}  // namespace abelrat
