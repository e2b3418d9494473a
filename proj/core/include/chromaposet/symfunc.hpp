#pragma once

#include <map>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "chromaposet/partition.hpp"
#include "chromaposet/rational.hpp"

namespace chromaposet {

enum class Basis { M, P, E, S };

char basis_letter(Basis b);
Basis basis_from_letter(char c);  // throws std::invalid_argument

using CoeffMap = std::map<Partition, Rational, PartitionCanonicalOrder>;
using RatMatrix = std::vector<std::vector<Rational>>;

/// A homogeneous symmetric function of fixed degree, stored as a sparse
/// exact-rational coefficient map over partitions of that degree in one of
/// the four classical bases. Zero coefficients are never stored.
class SymFunc {
public:
    SymFunc(int degree, Basis basis) : degree_(degree), basis_(basis) {}

    static SymFunc basis_element(Basis basis, const Partition& index);

    int degree() const { return degree_; }
    Basis basis() const { return basis_; }
    const CoeffMap& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }

    Rational coeff(const Partition& p) const;
    void set_coeff(const Partition& p, const Rational& value);
    void add_coeff(const Partition& p, const Rational& value);

    SymFunc& operator+=(const SymFunc& other);
    SymFunc& operator-=(const SymFunc& other);
    SymFunc& operator*=(const Rational& scalar);
    friend SymFunc operator+(SymFunc a, const SymFunc& b) { return a += b; }
    friend SymFunc operator-(SymFunc a, const SymFunc& b) { return a -= b; }
    friend SymFunc operator*(const Rational& c, SymFunc f) { return f *= c; }

    bool operator==(const SymFunc& other) const;

    /// "m[2,1] + 6 m[1,1,1]", terms in canonical partition order.
    std::string to_string() const;

    nlohmann::json to_json() const;
    static SymFunc from_json(const nlohmann::json& j);

private:
    int degree_;
    Basis basis_;
    CoeffMap coeffs_;
};

/// Per-degree transition matrices between the four bases, routed through the
/// monomial basis. Indexed by partitions_of(n) in canonical order. Built once
/// per degree and immutable afterwards; safe to share across threads.
class TransitionTable {
public:
    static const TransitionTable& for_degree(int n);

    int degree() const { return degree_; }
    int dimension() const { return static_cast<int>(index_.size()); }
    const std::vector<Partition>& index() const { return index_; }
    int index_of(const Partition& p) const;

    /// Row lambda holds b_lambda expanded in the m basis.
    const RatMatrix& expansion_into_m(Basis b) const;
    /// Exact inverse of expansion_into_m(b).
    const RatMatrix& expansion_from_m(Basis b) const;

private:
    explicit TransitionTable(int n);

    int degree_;
    std::vector<Partition> index_;
    std::map<Partition, int, PartitionCanonicalOrder> position_;
    RatMatrix into_m_[4];
    RatMatrix from_m_[4];
};

SymFunc convert(const SymFunc& f, Basis target);

/// Product of two symmetric functions. Computed via the power-sum basis
/// (where multiplication is part-multiset concatenation); if the inputs share
/// a basis the result is converted back to it, otherwise it is returned in P.
SymFunc multiply(const SymFunc& f, const SymFunc& g);

bool is_nonneg_in(const SymFunc& f, Basis basis);

/// p_n expanded in the e basis via the Newton identity closed form.
SymFunc newton_p_in_e(int n);

/// s_lambda expanded in the e basis via the Jacobi-Trudi determinant.
SymFunc jacobi_trudi_s_in_e(const Partition& lambda);

/// Number of semistandard Young tableaux of the given shape and content.
Integer kostka_number(const Partition& shape, const Partition& content);

/// Exact inverse of a square rational matrix (Gauss-Jordan).
RatMatrix invert_matrix(const RatMatrix& a);

}  // namespace chromaposet
