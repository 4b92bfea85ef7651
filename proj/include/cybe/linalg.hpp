#ifndef CYBE_LINALG_HPP
#define CYBE_LINALG_HPP

#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

#include "cybe/rational.hpp"

namespace cybe {

using SparseVec = std::map<int, Rational>;

/// Incremental row-echelon form over Q with sparse rows. Rows are equations
/// sum_c row[c] * x_c = 0; an inhomogeneous system folds the right-hand side
/// into an extra column (see LinearSystem below).
class SparseRref {
public:
    /// Reduces row in place against the current pivot rows.
    void reduce(SparseVec& row) const {
        while (!row.empty()) {
            const int p = row.begin()->first;
            auto it = rows_.find(p);
            if (it == rows_.end()) return;
            const Rational factor = row.begin()->second;
            axpy(row, -factor, it->second);
        }
    }

    /// Reduces and, if a residual survives, installs it as a new pivot row.
    /// Returns true when the rank grew.
    bool insert(SparseVec row) {
        reduce(row);
        if (row.empty()) return false;
        const int p = row.begin()->first;
        const Rational lead = row.begin()->second;
        for (auto& [c, v] : row) v /= lead;
        rows_.emplace(p, std::move(row));
        return true;
    }

    bool contains(SparseVec row) const {
        reduce(row);
        return row.empty();
    }

    int rank() const { return static_cast<int>(rows_.size()); }
    bool has_pivot(int col) const { return rows_.count(col) > 0; }
    const std::map<int, SparseVec>& rows() const { return rows_; }

private:
    static void axpy(SparseVec& dst, const Rational& c, const SparseVec& src) {
        for (const auto& [col, v] : src) {
            auto [it, inserted] = dst.try_emplace(col, c * v);
            if (!inserted) {
                it->second += c * v;
                if (it->second.is_zero()) dst.erase(it);
            }
        }
    }

    std::map<int, SparseVec> rows_;  // pivot column -> normalized row
};

/// Exact linear system over Q with unknowns x_0..x_{dim-1}. Equations are
/// added as (coefficients, rhs); solve() reports consistency, uniqueness and
/// one solution (free variables set to zero).
class LinearSystem {
public:
    explicit LinearSystem(int dim) : dim_(dim) {}

    void add_equation(const SparseVec& coeffs, const Rational& rhs) {
        SparseVec row = coeffs;
        if (!rhs.is_zero()) row[dim_] = -rhs;
        rref_.insert(std::move(row));
    }

    bool consistent() const { return !rref_.has_pivot(dim_); }

    int rank() const { return rref_.rank() - (rref_.has_pivot(dim_) ? 1 : 0); }

    int nullity() const { return dim_ - rank(); }

    /// Particular solution with free variables zero; nullopt if inconsistent.
    std::optional<std::vector<Rational>> solve() const {
        if (!consistent()) return std::nullopt;
        std::vector<Rational> x(static_cast<std::size_t>(dim_), Rational(0));
        // Back-substitute from the bottom pivot up.
        const auto& rows = rref_.rows();
        for (auto it = rows.rbegin(); it != rows.rend(); ++it) {
            const int p = it->first;
            Rational val(0);
            for (const auto& [c, v] : it->second) {
                if (c == p) continue;
                if (c == dim_)
                    val -= v;  // constant column carries -rhs
                else
                    val -= v * x[static_cast<std::size_t>(c)];
            }
            x[static_cast<std::size_t>(p)] = val;
        }
        return x;
    }

private:
    int dim_;
    SparseRref rref_;
};

/// Row space of dense rational vectors, used for subalgebra spans:
/// membership, rank, and bracket-closure bookkeeping.
class RowSpace {
public:
    explicit RowSpace(int dim) : dim_(dim) {}

    int dim() const { return dim_; }
    int rank() const { return rref_.rank(); }

    bool insert(const std::vector<Rational>& v) { return rref_.insert(to_sparse(v)); }
    bool contains(const std::vector<Rational>& v) const { return rref_.contains(to_sparse(v)); }

    const std::map<int, SparseVec>& rows() const { return rref_.rows(); }

private:
    SparseVec to_sparse(const std::vector<Rational>& v) const {
        if (static_cast<int>(v.size()) != dim_)
            throw std::invalid_argument("RowSpace: bad vector length");
        SparseVec s;
        for (int i = 0; i < dim_; ++i)
            if (!v[static_cast<std::size_t>(i)].is_zero()) s[i] = v[static_cast<std::size_t>(i)];
        return s;
    }

    int dim_;
    SparseRref rref_;
};

/// Basis of the null space of the linear map given by sparse rows
/// (functionals) on Q^dim.
inline std::vector<std::vector<Rational>> null_space(const std::vector<SparseVec>& rows, int dim) {
    SparseRref rref;
    for (const auto& r : rows) rref.insert(r);
    std::set<int> pivots;
    for (const auto& [p, row] : rref.rows()) pivots.insert(p);
    std::vector<std::vector<Rational>> basis;
    for (int free = 0; free < dim; ++free) {
        if (pivots.count(free)) continue;
        std::vector<Rational> v(static_cast<std::size_t>(dim), Rational(0));
        v[static_cast<std::size_t>(free)] = Rational(1);
        // Solve for pivot variables bottom-up.
        const auto& rws = rref.rows();
        for (auto it = rws.rbegin(); it != rws.rend(); ++it) {
            Rational val(0);
            for (const auto& [c, coeff] : it->second) {
                if (c == it->first) continue;
                val -= coeff * v[static_cast<std::size_t>(c)];
            }
            v[static_cast<std::size_t>(it->first)] = val;
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace cybe

#endif
