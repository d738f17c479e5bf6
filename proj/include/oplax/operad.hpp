#pragma once

#include <array>
#include <cstddef>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "oplax/weyl.hpp"

namespace oplax {

/// A degree-n multilinear operation V^{(x)n} -> V on a dim-dimensional space.
///
/// Entries are structure constants mu^k_{i1...in}, stored flat with the
/// output index k fastest. Indices are zero-based here; rendering and check
/// ids use one-based labels. R is any ring with +, -, * and a zero obtained
/// from the prototype passed at construction (OperatorExpr needs one to fix
/// its mode).
template <class R>
class MultiOp {
public:
    MultiOp(std::size_t dim, std::size_t degree, R zero)
        : dim_(dim), degree_(degree), zero_(std::move(zero)) {
        if (dim == 0) throw std::invalid_argument("operation dimension must be positive");
        if (degree == 0) throw std::invalid_argument("operation degree must be positive");
        std::size_t n = dim;
        for (std::size_t k = 0; k < degree; ++k) n *= dim;
        entries_.assign(n, zero_);
    }

    [[nodiscard]] std::size_t dim() const { return dim_; }
    [[nodiscard]] std::size_t degree() const { return degree_; }
    /// |f| = degree - 1.
    [[nodiscard]] int reduced_degree() const { return static_cast<int>(degree_) - 1; }
    [[nodiscard]] const R& zero() const { return zero_; }
    [[nodiscard]] std::size_t size() const { return entries_.size(); }

    [[nodiscard]] const R& at(std::span<const std::size_t> inputs, std::size_t out) const {
        return entries_[flat(inputs, out)];
    }
    R& at(std::span<const std::size_t> inputs, std::size_t out) { return entries_[flat(inputs, out)]; }

    [[nodiscard]] const R& at(std::initializer_list<std::size_t> inputs, std::size_t out) const {
        return at(std::span<const std::size_t>(inputs.begin(), inputs.size()), out);
    }
    R& at(std::initializer_list<std::size_t> inputs, std::size_t out) {
        return at(std::span<const std::size_t>(inputs.begin(), inputs.size()), out);
    }

    /// Entry by flat position; the multi-index is recovered with unflatten().
    [[nodiscard]] const R& entry(std::size_t flat_index) const { return entries_[flat_index]; }
    R& entry(std::size_t flat_index) { return entries_[flat_index]; }

    /// Splits a flat position into (inputs, output).
    [[nodiscard]] std::pair<std::vector<std::size_t>, std::size_t> unflatten(std::size_t pos) const {
        std::size_t out = pos % dim_;
        pos /= dim_;
        std::vector<std::size_t> in(degree_);
        for (std::size_t k = degree_; k-- > 0;) {
            in[k] = pos % dim_;
            pos /= dim_;
        }
        return {std::move(in), out};
    }

    MultiOp operator+(const MultiOp& o) const { return zip(o, std::plus<>{}); }
    MultiOp operator-(const MultiOp& o) const { return zip(o, std::minus<>{}); }
    MultiOp operator-() const {
        MultiOp r = *this;
        for (auto& e : r.entries_) e = -e;
        return r;
    }
    /// Multiplies every entry by a sign.
    [[nodiscard]] MultiOp signed_by(int sign) const { return sign < 0 ? -*this : *this; }

    template <class F>
    [[nodiscard]] MultiOp transform(F&& f) const {
        MultiOp r(dim_, degree_, f(zero_));
        for (std::size_t k = 0; k < entries_.size(); ++k) r.entries_[k] = f(entries_[k]);
        return r;
    }

    [[nodiscard]] bool is_zero() const {
        for (const auto& e : entries_) {
            if (!(e == zero_)) return false;
        }
        return true;
    }

    bool operator==(const MultiOp& o) const {
        return dim_ == o.dim_ && degree_ == o.degree_ && entries_ == o.entries_;
    }

    void check_compatible(const MultiOp& o) const {
        if (dim_ != o.dim_) throw std::invalid_argument("operations on spaces of different dimension");
    }

private:
    std::size_t flat(std::span<const std::size_t> inputs, std::size_t out) const {
        if (inputs.size() != degree_) throw std::out_of_range("wrong number of operation indices");
        std::size_t pos = 0;
        for (std::size_t i : inputs) {
            if (i >= dim_) throw std::out_of_range("operation index out of range");
            pos = pos * dim_ + i;
        }
        if (out >= dim_) throw std::out_of_range("operation index out of range");
        return pos * dim_ + out;
    }

    template <class Op>
    MultiOp zip(const MultiOp& o, Op op) const {
        check_compatible(o);
        if (degree_ != o.degree_) throw std::invalid_argument("adding operations of different degree");
        MultiOp r = *this;
        for (std::size_t k = 0; k < entries_.size(); ++k) r.entries_[k] = op(entries_[k], o.entries_[k]);
        return r;
    }

    std::size_t dim_;
    std::size_t degree_;
    R zero_;
    std::vector<R> entries_;
};

namespace detail {
inline int sign_of_power(long e) { return (e % 2 == 0) ? 1 : -1; }
}  // namespace detail

/// f o_i g: g plugged into input slot i of f, scaled by (-1)^{i |g|}.
///
/// Entry products keep the f-entry on the left of the g-entry.
template <class R>
MultiOp<R> partial_compose(const MultiOp<R>& f, std::size_t i, const MultiOp<R>& g) {
    f.check_compatible(g);
    if (static_cast<int>(i) > f.reduced_degree()) throw std::out_of_range("partial composition slot out of range");
    const std::size_t d = f.dim();
    const std::size_t m = g.degree();
    MultiOp<R> r(d, f.degree() + m - 1, f.zero());
    const int sign = detail::sign_of_power(static_cast<long>(i) * g.reduced_degree());

    std::vector<std::size_t> f_in(f.degree());
    std::vector<std::size_t> g_in(m);
    for (std::size_t pos = 0; pos < r.size(); ++pos) {
        auto [in, out] = r.unflatten(pos);
        for (std::size_t k = 0; k < i; ++k) f_in[k] = in[k];
        for (std::size_t k = 0; k < m; ++k) g_in[k] = in[i + k];
        for (std::size_t k = i + 1; k < f.degree(); ++k) f_in[k] = in[k + m - 1];
        R acc = f.zero();
        for (std::size_t s = 0; s < d; ++s) {
            f_in[i] = s;
            acc = acc + f.at(f_in, out) * g.at(g_in, s);
        }
        r.entry(pos) = sign < 0 ? -acc : acc;
    }
    return r;
}

/// f o g = sum over i of f o_i g.
template <class R>
MultiOp<R> total_compose(const MultiOp<R>& f, const MultiOp<R>& g) {
    MultiOp<R> r = partial_compose(f, 0, g);
    for (std::size_t i = 1; i < f.degree(); ++i) r = r + partial_compose(f, i, g);
    return r;
}

/// Gerstenhaber bracket [f, g] = f o g - (-1)^{|f||g|} g o f.
template <class R>
MultiOp<R> gerstenhaber_bracket(const MultiOp<R>& f, const MultiOp<R>& g) {
    const int sign = detail::sign_of_power(static_cast<long>(f.reduced_degree()) * g.reduced_degree());
    return total_compose(f, g) - total_compose(g, f).signed_by(sign);
}

/// Signed cyclic sum of the graded Jacobi identity; zero for scalar entries.
template <class R>
MultiOp<R> graded_jacobi_defect(const MultiOp<R>& f, const MultiOp<R>& g, const MultiOp<R>& h) {
    const long df = f.reduced_degree();
    const long dg = g.reduced_degree();
    const long dh = h.reduced_degree();
    return gerstenhaber_bracket(f, gerstenhaber_bracket(g, h)).signed_by(detail::sign_of_power(df * dh)) +
           gerstenhaber_bracket(g, gerstenhaber_bracket(h, f)).signed_by(detail::sign_of_power(dg * df)) +
           gerstenhaber_bracket(h, gerstenhaber_bracket(f, g)).signed_by(detail::sign_of_power(dh * dg));
}

/// True when mu^k_{ij} = -mu^k_{ji} for all indices (degree 2 only).
template <class R>
bool is_antisymmetric(const MultiOp<R>& mu) {
    if (mu.degree() != 2) return false;
    for (std::size_t i = 0; i < mu.dim(); ++i) {
        for (std::size_t j = 0; j < mu.dim(); ++j) {
            for (std::size_t k = 0; k < mu.dim(); ++k) {
                if (!(mu.at({i, j}, k) + mu.at({j, i}, k) == mu.zero())) return false;
            }
        }
    }
    return true;
}

// ---------------------------------------------------------------------------
// 3D anticommutative binary operations
// ---------------------------------------------------------------------------

/// Independent constants of an anticommutative binary operation in 3D, in
/// the order mu_12^1, mu_12^2, mu_12^3, mu_23^1, mu_23^2, mu_23^3, mu_31^1,
/// mu_31^2, mu_31^3.
template <class R>
using Row9 = std::array<R, 9>;

/// Input pairs (zero-based) for the three column groups of a Row9.
inline constexpr std::array<std::array<std::size_t, 2>, 3> kRowPairs = {{{0, 1}, {1, 2}, {2, 0}}};

/// Label such as "mu_23^1" for slot k of a Row9.
inline std::string row9_label(std::size_t k) {
    const auto& pr = kRowPairs[k / 3];
    return "mu_" + std::to_string(pr[0] + 1) + std::to_string(pr[1] + 1) + "^" + std::to_string(k % 3 + 1);
}

/// Builds the antisymmetric degree-2 operation with the given constants.
template <class R>
MultiOp<R> antisymmetric_from_row(const Row9<R>& row, const R& zero) {
    MultiOp<R> mu(3, 2, zero);
    for (std::size_t k = 0; k < 9; ++k) {
        const auto& pr = kRowPairs[k / 3];
        mu.at({pr[0], pr[1]}, k % 3) = row[k];
        mu.at({pr[1], pr[0]}, k % 3) = -row[k];
    }
    return mu;
}

template <class R>
Row9<R> row_from_operation(const MultiOp<R>& mu) {
    if (mu.dim() != 3 || mu.degree() != 2) throw std::invalid_argument("expected a 3D binary operation");
    Row9<R> row;
    for (std::size_t k = 0; k < 9; ++k) {
        const auto& pr = kRowPairs[k / 3];
        row[k] = mu.at({pr[0], pr[1]}, k % 3);
    }
    return row;
}

}  // namespace oplax
