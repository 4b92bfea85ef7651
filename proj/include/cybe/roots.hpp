#ifndef CYBE_ROOTS_HPP
#define CYBE_ROOTS_HPP

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "cybe/lie.hpp"

namespace cybe {

enum class Series { A, B, C, D };

inline char series_letter(Series s) {
    switch (s) {
        case Series::A: return 'A';
        case Series::B: return 'B';
        case Series::C: return 'C';
        case Series::D: return 'D';
    }
    throw std::logic_error("series_letter: bad series");
}

inline Series series_from_letter(char c) {
    switch (c) {
        case 'A': return Series::A;
        case 'B': return Series::B;
        case 'C': return Series::C;
        case 'D': return Series::D;
        default: throw std::invalid_argument("series: expected one of A, B, C, D");
    }
}

/// Full root list of a classical series in e-coordinates.
/// A_r lives in R^{r+1} (coordinate sums zero), B/C/D_r in R^r.
struct RootSystem {
    Series series;
    int rank;
    std::vector<RootVector> roots;
};

inline RootSystem root_system(Series series, int rank) {
    if (rank < 1) throw std::invalid_argument("root_system: rank must be >= 1");
    if (series == Series::D && rank < 2)
        throw std::invalid_argument("root_system: D series needs rank >= 2");
    RootSystem rs{series, rank, {}};
    const std::size_t dim =
        series == Series::A ? static_cast<std::size_t>(rank + 1) : static_cast<std::size_t>(rank);
    auto unit = [&](int i, long s) {
        RootVector v = RootVector::zero(dim);
        v.coords[static_cast<std::size_t>(i - 1)] = s;
        return v;
    };
    switch (series) {
        case Series::A:
            for (int i = 1; i <= rank + 1; ++i)
                for (int j = 1; j <= rank + 1; ++j)
                    if (i != j) rs.roots.push_back(RootVector::e_minus_e(dim, i, j));
            break;
        case Series::B:
            for (int i = 1; i <= rank; ++i) {
                rs.roots.push_back(unit(i, 1));
                rs.roots.push_back(unit(i, -1));
            }
            [[fallthrough]];
        case Series::D:
            for (int i = 1; i <= rank; ++i)
                for (int j = i + 1; j <= rank; ++j)
                    for (long si : {1L, -1L})
                        for (long sj : {1L, -1L}) {
                            RootVector v = RootVector::zero(dim);
                            v.coords[static_cast<std::size_t>(i - 1)] = si;
                            v.coords[static_cast<std::size_t>(j - 1)] = sj;
                            rs.roots.push_back(v);
                        }
            break;
        case Series::C:
            for (int i = 1; i <= rank; ++i) {
                rs.roots.push_back(unit(i, 2));
                rs.roots.push_back(unit(i, -2));
            }
            for (int i = 1; i <= rank; ++i)
                for (int j = i + 1; j <= rank; ++j)
                    for (long si : {1L, -1L})
                        for (long sj : {1L, -1L}) {
                            RootVector v = RootVector::zero(dim);
                            v.coords[static_cast<std::size_t>(i - 1)] = si;
                            v.coords[static_cast<std::size_t>(j - 1)] = sj;
                            rs.roots.push_back(v);
                        }
            break;
    }
    return rs;
}

enum class FiltrationType { I, II };

/// The orthogonal highest-root sequence theta_0, ..., theta_{f-1} and the
/// chain of subspaces V_0 (span of the roots) down to V_f. dim V_k = rank - k;
/// the filtration is type II exactly when V_f = 0.
struct ThetaFiltration {
    std::vector<RootVector> thetas;
    std::vector<int> subspace_dims;  // dim V_0, ..., dim V_f
    FiltrationType type_tag;
};

/// Iteratively picks the highest remaining root (maximal in lexicographic
/// order on e-coordinates, which realizes the canonical choice for all four
/// series and is deterministic on every subsystem), then restricts to its
/// orthogonal complement until no roots remain.
inline ThetaFiltration theta_filtration(const RootSystem& rs) {
    ThetaFiltration f;
    f.subspace_dims.push_back(rs.rank);
    std::vector<RootVector> remaining = rs.roots;
    while (!remaining.empty()) {
        const RootVector theta = *std::max_element(remaining.begin(), remaining.end());
        f.thetas.push_back(theta);
        f.subspace_dims.push_back(rs.rank - static_cast<int>(f.thetas.size()));
        std::vector<RootVector> next;
        for (const auto& r : remaining)
            if (r.dot(theta) == 0) next.push_back(r);
        remaining = std::move(next);
    }
    f.type_tag = f.subspace_dims.back() == 0 ? FiltrationType::II : FiltrationType::I;
    return f;
}

/// Classification summary. dim_last is dim V_f, the terminal space that
/// contains no roots; dim_prev is dim V_{f-1}.
struct TypeReport {
    FiltrationType type_tag;
    int f;
    int dim_last;
    int dim_prev;
};

inline TypeReport classify_type(Series series, int rank) {
    const ThetaFiltration f = theta_filtration(root_system(series, rank));
    const int steps = static_cast<int>(f.thetas.size());
    return TypeReport{f.type_tag, steps, rank - steps, rank - steps + 1};
}

}  // namespace cybe

#endif
