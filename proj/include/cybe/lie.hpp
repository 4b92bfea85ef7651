#ifndef CYBE_LIE_HPP
#define CYBE_LIE_HPP

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cybe/rational.hpp"

namespace cybe {

using IndexPair = std::pair<int, int>;

/// Sparse n-by-n matrix over Rational, 1-based indices, used as an element
/// of gl(n); everything the named constructors below produce is traceless,
/// i.e. lies in sl(n). Canonical sparse form: no stored entry is zero.
class LieElement {
public:
    explicit LieElement(int n) : n_(n) {
        if (n < 1) throw std::invalid_argument("LieElement: n must be >= 1");
    }

    int n() const { return n_; }
    const std::map<IndexPair, Rational>& entries() const { return entries_; }

    bool is_zero() const { return entries_.empty(); }

    Rational entry(int i, int j) const {
        auto it = entries_.find({i, j});
        return it == entries_.end() ? Rational(0) : it->second;
    }

    /// Accumulates c into entry (i,j), dropping the entry if it cancels.
    void add(int i, int j, const Rational& c) {
        check_index(i);
        check_index(j);
        if (c.is_zero()) return;
        auto [it, inserted] = entries_.try_emplace({i, j}, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) entries_.erase(it);
        }
    }

    Rational trace() const {
        Rational t(0);
        for (const auto& [ij, c] : entries_)
            if (ij.first == ij.second) t += c;
        return t;
    }

    bool is_diagonal() const {
        for (const auto& [ij, c] : entries_)
            if (ij.first != ij.second) return false;
        return true;
    }

    /// Diagonal as a dense length-n vector (valid for any element).
    std::vector<Rational> diagonal() const {
        std::vector<Rational> d(static_cast<std::size_t>(n_), Rational(0));
        for (const auto& [ij, c] : entries_)
            if (ij.first == ij.second) d[static_cast<std::size_t>(ij.first - 1)] = c;
        return d;
    }

    LieElement& operator+=(const LieElement& o) {
        check_same_n(o);
        for (const auto& [ij, c] : o.entries_) add(ij.first, ij.second, c);
        return *this;
    }
    LieElement& operator-=(const LieElement& o) {
        check_same_n(o);
        for (const auto& [ij, c] : o.entries_) add(ij.first, ij.second, -c);
        return *this;
    }
    friend LieElement operator+(LieElement a, const LieElement& b) { a += b; return a; }
    friend LieElement operator-(LieElement a, const LieElement& b) { a -= b; return a; }
    friend LieElement operator*(const Rational& c, const LieElement& x) {
        LieElement r(x.n_);
        if (c.is_zero()) return r;
        for (const auto& [ij, v] : x.entries_) r.entries_[ij] = c * v;
        return r;
    }
    LieElement operator-() const { return Rational(-1) * *this; }

    friend bool operator==(const LieElement& a, const LieElement& b) {
        return a.n_ == b.n_ && a.entries_ == b.entries_;
    }
    friend bool operator!=(const LieElement& a, const LieElement& b) { return !(a == b); }

    friend std::ostream& operator<<(std::ostream& os, const LieElement& x) {
        os << "{";
        bool first = true;
        for (const auto& [ij, c] : x.entries_) {
            if (!first) os << ", ";
            first = false;
            os << "(" << ij.first << "," << ij.second << "): " << c;
        }
        return os << "}";
    }

private:
    void check_index(int i) const {
        if (i < 1 || i > n_) throw std::out_of_range("LieElement: index out of range");
    }
    void check_same_n(const LieElement& o) const {
        if (n_ != o.n_) throw std::invalid_argument("LieElement: dimension mismatch");
    }

    int n_;
    std::map<IndexPair, Rational> entries_;
};

/// E_{i,j}, i != j. Diagonal units are rejected: they are not traceless,
/// diagonal elements enter only through the Cartan constructors.
inline LieElement matrix_unit(int n, int i, int j) {
    if (i < 1 || i > n || j < 1 || j > n)
        throw std::out_of_range("matrix_unit: index out of range");
    if (i == j) throw std::invalid_argument("matrix_unit: i == j is not traceless");
    LieElement e(n);
    e.add(i, j, Rational(1));
    return e;
}

/// H_{i,j} = E_{ii} - E_{jj}, 1 <= i < j <= n.
inline LieElement cartan_H(int n, int i, int j) {
    if (i < 1 || j > n || i >= j) throw std::out_of_range("cartan_H: need 1 <= i < j <= n");
    LieElement h(n);
    h.add(i, i, Rational(1));
    h.add(j, j, Rational(-1));
    return h;
}

/// Matrix commutator xy - yx.
inline LieElement bracket(const LieElement& x, const LieElement& y) {
    if (x.n() != y.n()) throw std::invalid_argument("bracket: dimension mismatch");
    LieElement r(x.n());
    for (const auto& [ab, ca] : x.entries())
        for (const auto& [cd, cb] : y.entries()) {
            if (ab.second == cd.first) r.add(ab.first, cd.second, ca * cb);
            if (cd.second == ab.first) r.add(cd.first, ab.second, -(ca * cb));
        }
    return r;
}

/// Cartan element orthogonal to every theta_s = e_s - e_{n-s+1}, acting with
/// eigenvalue delta_{kl} on the paired lowering combinations (see builders):
///   sum_v ((4k-2)/n) E_{vv} - sum_{u=1}^{2k-1} (E_{uu} + E_{n-u+1,n-u+1}).
/// Requires n odd, n = 2m+1, 1 <= k <= m.
inline LieElement h_perp(int n, int k) {
    if (n < 3 || n % 2 == 0) throw std::invalid_argument("h_perp: n must be odd and >= 3");
    const int m = (n - 1) / 2;
    if (k < 1 || k > m) throw std::out_of_range("h_perp: k out of range");
    LieElement h(n);
    const Rational bulk(4L * k - 2, n);
    for (int v = 1; v <= n; ++v) h.add(v, v, bulk);
    for (int u = 1; u <= 2 * k - 1; ++u) {
        h.add(u, u, Rational(-1));
        h.add(n - u + 1, n - u + 1, Rational(-1));
    }
    return h;
}

/// Alternating sum of simple Cartan elements,
///   sum_{j=i}^{n-i} (-1)^{j+1} H_{j,j+1},
/// orthogonal to all theta_s for odd n. Requires n odd, 1 <= i <= m.
inline LieElement h_tilde_perp(int n, int i) {
    if (n < 3 || n % 2 == 0) throw std::invalid_argument("h_tilde_perp: n must be odd and >= 3");
    const int m = (n - 1) / 2;
    if (i < 1 || i > m) throw std::out_of_range("h_tilde_perp: i out of range");
    LieElement h(n);
    for (int j = i; j <= n - i; ++j) {
        Rational s(j % 2 == 1 ? 1 : -1);
        h.add(j, j, s);
        h.add(j + 1, j + 1, -s);
    }
    return h;
}

/// Closed form of the solved chain Cartans, normalized so that
/// [hat_H_k, E_{l,n-l+1}] = delta_{kl} E_{l,n-l+1}:
///   (-1)^{k+1} ( ((2k-1)/n) sum_i E_{ii} - sum_{j<k} (E_{jj} + E_{n-j+1,n-j+1})
///                + (1/2)((-1)^{k+1}(E_{kk} - E_{n-k+1,n-k+1}) - E_{kk} - E_{n-k+1,n-k+1}) ).
inline LieElement hat_H_closed(int n, int k) {
    if (n < 3 || n % 2 == 0) throw std::invalid_argument("hat_H_closed: n must be odd and >= 3");
    const int m = (n - 1) / 2;
    if (k < 1 || k > m) throw std::out_of_range("hat_H_closed: k out of range");
    LieElement h(n);
    const Rational bulk(2L * k - 1, n);
    for (int i = 1; i <= n; ++i) h.add(i, i, bulk);
    for (int j = 1; j <= k - 1; ++j) {
        h.add(j, j, Rational(-1));
        h.add(n - j + 1, n - j + 1, Rational(-1));
    }
    const Rational sk(k % 2 == 1 ? 1 : -1);
    h.add(k, k, half() * (sk - Rational(1)));
    h.add(n - k + 1, n - k + 1, half() * (-sk - Rational(1)));
    LieElement out = sk * h;
    return out;
}

/// Integer vector in the orthonormal e-basis; for the A series the length is
/// n and every root has coordinate sum zero.
struct RootVector {
    std::vector<long> coords;

    RootVector() = default;
    explicit RootVector(std::vector<long> c) : coords(std::move(c)) {}
    static RootVector zero(std::size_t len) { return RootVector(std::vector<long>(len, 0)); }

    /// e_i - e_j inside a length-len ambient space, 1-based.
    static RootVector e_minus_e(std::size_t len, int i, int j) {
        RootVector v = zero(len);
        v.coords[static_cast<std::size_t>(i - 1)] += 1;
        v.coords[static_cast<std::size_t>(j - 1)] -= 1;
        return v;
    }

    bool is_zero() const {
        for (long c : coords)
            if (c != 0) return false;
        return true;
    }

    long dot(const RootVector& o) const {
        if (coords.size() != o.coords.size())
            throw std::invalid_argument("RootVector::dot: length mismatch");
        long s = 0;
        for (std::size_t i = 0; i < coords.size(); ++i) s += coords[i] * o.coords[i];
        return s;
    }

    friend RootVector operator+(const RootVector& a, const RootVector& b) {
        if (a.coords.size() != b.coords.size())
            throw std::invalid_argument("RootVector: length mismatch");
        RootVector r = a;
        for (std::size_t i = 0; i < r.coords.size(); ++i) r.coords[i] += b.coords[i];
        return r;
    }
    friend RootVector operator-(const RootVector& a, const RootVector& b) {
        if (a.coords.size() != b.coords.size())
            throw std::invalid_argument("RootVector: length mismatch");
        RootVector r = a;
        for (std::size_t i = 0; i < r.coords.size(); ++i) r.coords[i] -= b.coords[i];
        return r;
    }
    RootVector operator-() const {
        RootVector r = *this;
        for (auto& c : r.coords) c = -c;
        return r;
    }

    friend bool operator==(const RootVector& a, const RootVector& b) { return a.coords == b.coords; }
    friend bool operator!=(const RootVector& a, const RootVector& b) { return !(a == b); }
    friend bool operator<(const RootVector& a, const RootVector& b) { return a.coords < b.coords; }

    friend std::ostream& operator<<(std::ostream& os, const RootVector& v) {
        os << "(";
        for (std::size_t i = 0; i < v.coords.size(); ++i) {
            if (i) os << ",";
            os << v.coords[i];
        }
        return os << ")";
    }
};

/// theta_s = e_s - e_{n-s+1}.
inline RootVector theta_root(int n, int s) {
    return RootVector::e_minus_e(static_cast<std::size_t>(n), s, n - s + 1);
}

/// Evaluates a linear form given in e-coordinates on a diagonal element:
/// sum_i coords_i * h_{ii}.
inline Rational root_eval(const RootVector& lambda, const LieElement& h) {
    if (!h.is_diagonal()) throw std::invalid_argument("root_eval: h is not diagonal");
    if (lambda.coords.size() != static_cast<std::size_t>(h.n()))
        throw std::invalid_argument("root_eval: length mismatch");
    Rational s(0);
    for (const auto& [ij, c] : h.entries())
        s += Rational(lambda.coords[static_cast<std::size_t>(ij.first - 1)]) * c;
    return s;
}

}  // namespace cybe

#endif
