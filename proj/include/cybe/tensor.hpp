#ifndef CYBE_TENSOR_HPP
#define CYBE_TENSOR_HPP

#include <array>
#include <cstddef>
#include <map>
#include <stdexcept>

#include "cybe/lie.hpp"
#include "cybe/rational.hpp"

namespace cybe {

/// Sparse element of gl(n) tensor gl(n) in the matrix-unit basis: the key
/// (i,j,k,l) stands for E_{ij} (x) E_{kl}. Canonical sparse form, keys sorted.
class BiTensor {
public:
    using Key = std::array<int, 4>;

    explicit BiTensor(int n) : n_(n) {
        if (n < 1) throw std::invalid_argument("BiTensor: n must be >= 1");
    }

    int n() const { return n_; }
    const std::map<Key, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    void add(int i, int j, int k, int l, const Rational& c) {
        if (c.is_zero()) return;
        check(i); check(j); check(k); check(l);
        Key key{i, j, k, l};
        auto [it, inserted] = terms_.try_emplace(key, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    BiTensor& operator+=(const BiTensor& o) {
        check_same_n(o);
        for (const auto& [k, c] : o.terms_) add(k[0], k[1], k[2], k[3], c);
        return *this;
    }
    BiTensor& operator-=(const BiTensor& o) {
        check_same_n(o);
        for (const auto& [k, c] : o.terms_) add(k[0], k[1], k[2], k[3], -c);
        return *this;
    }
    friend BiTensor operator+(BiTensor a, const BiTensor& b) { a += b; return a; }
    friend BiTensor operator-(BiTensor a, const BiTensor& b) { a -= b; return a; }
    friend BiTensor operator*(const Rational& c, const BiTensor& t) {
        BiTensor r(t.n_);
        if (c.is_zero()) return r;
        for (const auto& [k, v] : t.terms_) r.terms_[k] = c * v;
        return r;
    }

    BiTensor swap_legs() const {
        BiTensor r(n_);
        for (const auto& [k, c] : terms_) r.add(k[2], k[3], k[0], k[1], c);
        return r;
    }

    bool is_skew() const {
        for (const auto& [k, c] : terms_) {
            auto it = terms_.find(Key{k[2], k[3], k[0], k[1]});
            if (it == terms_.end() || it->second != -c) return false;
        }
        return true;
    }

    friend bool operator==(const BiTensor& a, const BiTensor& b) {
        return a.n_ == b.n_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const BiTensor& a, const BiTensor& b) { return !(a == b); }

private:
    void check(int i) const {
        if (i < 1 || i > n_) throw std::out_of_range("BiTensor: index out of range");
    }
    void check_same_n(const BiTensor& o) const {
        if (n_ != o.n_) throw std::invalid_argument("BiTensor: dimension mismatch");
    }

    int n_;
    std::map<Key, Rational> terms_;
};

/// Sparse element of gl(n)^(x3); key (i,j,k,l,p,q) = E_{ij} (x) E_{kl} (x) E_{pq}.
class TriTensor {
public:
    using Key = std::array<int, 6>;

    explicit TriTensor(int n) : n_(n) {}

    int n() const { return n_; }
    const std::map<Key, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    void add(const Key& key, const Rational& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(key, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    TriTensor& operator+=(const TriTensor& o) {
        if (n_ != o.n_) throw std::invalid_argument("TriTensor: dimension mismatch");
        for (const auto& [k, c] : o.terms_) add(k, c);
        return *this;
    }
    TriTensor& operator-=(const TriTensor& o) {
        if (n_ != o.n_) throw std::invalid_argument("TriTensor: dimension mismatch");
        for (const auto& [k, c] : o.terms_) add(k, -c);
        return *this;
    }
    friend TriTensor operator+(TriTensor a, const TriTensor& b) { a += b; return a; }
    friend TriTensor operator-(TriTensor a, const TriTensor& b) { a -= b; return a; }
    friend TriTensor operator*(const Rational& c, const TriTensor& t) {
        TriTensor r(t.n_);
        if (c.is_zero()) return r;
        for (const auto& [k, v] : t.terms_) r.terms_[k] = c * v;
        return r;
    }

    friend bool operator==(const TriTensor& a, const TriTensor& b) {
        return a.n_ == b.n_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const TriTensor& a, const TriTensor& b) { return !(a == b); }

private:
    int n_;
    std::map<Key, Rational> terms_;
};

/// a (x) b.
inline BiTensor tensor_product(const LieElement& a, const LieElement& b) {
    if (a.n() != b.n()) throw std::invalid_argument("tensor_product: dimension mismatch");
    BiTensor t(a.n());
    for (const auto& [ij, ca] : a.entries())
        for (const auto& [kl, cb] : b.entries())
            t.add(ij.first, ij.second, kl.first, kl.second, ca * cb);
    return t;
}

/// a ^ b := a (x) b - b (x) a.
inline BiTensor wedge(const LieElement& a, const LieElement& b) {
    if (a.n() != b.n()) throw std::invalid_argument("wedge: dimension mismatch");
    BiTensor t(a.n());
    for (const auto& [ij, ca] : a.entries())
        for (const auto& [kl, cb] : b.entries()) {
            const Rational c = ca * cb;
            t.add(ij.first, ij.second, kl.first, kl.second, c);
            t.add(kl.first, kl.second, ij.first, ij.second, -c);
        }
    return t;
}

namespace detail {

// [E_{ab}, E_{cd}] = delta_{bc} E_{ad} - delta_{da} E_{cb}, accumulated into a
// TriTensor slot with the two passive legs at fixed positions.
inline void add_commutator_leg(TriTensor& out, int slot, int a, int b, int c, int d,
                               const std::array<int, 4>& passive, const Rational& coeff) {
    auto put = [&](int x, int y, const Rational& cc) {
        TriTensor::Key key{};
        int pas = 0;
        for (int leg = 0; leg < 3; ++leg) {
            if (leg == slot) {
                key[static_cast<std::size_t>(2 * leg)] = x;
                key[static_cast<std::size_t>(2 * leg + 1)] = y;
            } else {
                key[static_cast<std::size_t>(2 * leg)] = passive[static_cast<std::size_t>(2 * pas)];
                key[static_cast<std::size_t>(2 * leg + 1)] = passive[static_cast<std::size_t>(2 * pas + 1)];
                ++pas;
            }
        }
        out.add(key, cc);
    };
    if (b == c) put(a, d, coeff);
    if (d == a) put(c, b, -coeff);
}

}  // namespace detail

/// Schouten bracket [[r, r]] = [r12, r13] + [r12, r23] + [r13, r23].
/// The input must be skew; the result is the CYBE residual.
inline TriTensor schouten(const BiTensor& r) {
    if (!r.is_skew()) throw std::invalid_argument("schouten: input is not skew");
    TriTensor out(r.n());
    for (const auto& [t1, c1] : r.terms())
        for (const auto& [t2, c2] : r.terms()) {
            const Rational c = c1 * c2;
            // [r12, r13]: [a, c'] (x) b (x) d
            detail::add_commutator_leg(out, 0, t1[0], t1[1], t2[0], t2[1],
                                       {t1[2], t1[3], t2[2], t2[3]}, c);
            // [r12, r23]: a (x) [b, c'] (x) d
            detail::add_commutator_leg(out, 1, t1[2], t1[3], t2[0], t2[1],
                                       {t1[0], t1[1], t2[2], t2[3]}, c);
            // [r13, r23]: a (x) c' (x) [b, d]
            detail::add_commutator_leg(out, 2, t1[2], t1[3], t2[2], t2[3],
                                       {t1[0], t1[1], t2[0], t2[1]}, c);
        }
    return out;
}

/// Polarization of the Schouten bracket:
/// mixed(r1, r2) = schouten(r1 + r2) - schouten(r1) - schouten(r2).
/// Bilinear and symmetric in its arguments.
inline TriTensor mixed_schouten(const BiTensor& r1, const BiTensor& r2) {
    if (r1.n() != r2.n()) throw std::invalid_argument("mixed_schouten: dimension mismatch");
    if (!r1.is_skew() || !r2.is_skew())
        throw std::invalid_argument("mixed_schouten: inputs must be skew");
    return schouten(r1 + r2) - schouten(r1) - schouten(r2);
}

struct CybeVerdict {
    bool holds;
    std::size_t residual_term_count;
};

/// holds iff [[r, r]] is exactly the zero tensor.
inline CybeVerdict is_cybe_solution(const BiTensor& r) {
    TriTensor s = schouten(r);
    return CybeVerdict{s.is_zero(), s.term_count()};
}

/// Cobracket delta_r(x) = [x (x) 1 + 1 (x) x, r], computed leg-wise.
/// Skew whenever r is skew.
inline BiTensor cobracket(const BiTensor& r, const LieElement& x) {
    if (r.n() != x.n()) throw std::invalid_argument("cobracket: dimension mismatch");
    BiTensor out(r.n());
    for (const auto& [t, c] : r.terms()) {
        for (const auto& [uv, cx] : x.entries()) {
            const int u = uv.first, v = uv.second;
            const Rational cc = cx * c;
            // [x, E_{t0,t1}] (x) E_{t2,t3}
            if (v == t[0]) out.add(u, t[1], t[2], t[3], cc);
            if (t[1] == u) out.add(t[0], v, t[2], t[3], -cc);
            // E_{t0,t1} (x) [x, E_{t2,t3}]
            if (v == t[2]) out.add(t[0], t[1], u, t[3], cc);
            if (t[3] == u) out.add(t[0], t[1], t[2], v, -cc);
        }
    }
    return out;
}

}  // namespace cybe

#endif
