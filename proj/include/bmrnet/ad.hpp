#ifndef BMRNET_AD_HPP
#define BMRNET_AD_HPP

#include <cassert>
#include <cmath>
#include <cstdint>
#include <vector>

#include "bmrnet/num.hpp"

// Reverse-mode automatic differentiation over a scalar expression tape.
// A Var is a cheap handle (tape pointer + node index + cached value);
// constants stay off the tape. Each recorded node keeps at most two parent
// links with the local partials fixed at forward time, so the backward sweep
// is a single reverse pass over a flat array.

namespace bmrnet::ad {

class Tape;

struct Var {
    Tape* tape = nullptr;
    int32_t idx = -1;  // -1 marks a constant that never touched the tape
    double v = 0.0;

    Var() = default;
    Var(double constant) : v(constant) {}  // NOLINT: implicit by design
    double value() const { return v; }
};

class Tape {
public:
    Var leaf(double value) {
        nodes_.push_back(Node{0.0, 0.0, -1, -1});
        return Var{this, static_cast<int32_t>(nodes_.size() - 1), value};
    }

    Var record(double value, int32_t a, double da, int32_t b, double db) {
        nodes_.push_back(Node{da, db, a, b});
        return Var{this, static_cast<int32_t>(nodes_.size() - 1), value};
    }

    size_t size() const { return nodes_.size(); }
    void clear() { nodes_.clear(); }
    void reserve(size_t n) { nodes_.reserve(n); }

    // Adjoints of every node with d(out)/d(out) = 1. Leaves created first
    // read their gradients at adjoints[leaf.idx].
    std::vector<double> gradient(const Var& out) const {
        assert(out.tape == this && out.idx >= 0);
        std::vector<double> adj(nodes_.size(), 0.0);
        adj[static_cast<size_t>(out.idx)] = 1.0;
        for (int32_t i = static_cast<int32_t>(nodes_.size()) - 1; i >= 0; --i) {
            const double g = adj[static_cast<size_t>(i)];
            if (g == 0.0) continue;
            const Node& n = nodes_[static_cast<size_t>(i)];
            if (n.a >= 0) adj[static_cast<size_t>(n.a)] += g * n.da;
            if (n.b >= 0) adj[static_cast<size_t>(n.b)] += g * n.db;
        }
        return adj;
    }

private:
    struct Node {
        double da, db;
        int32_t a, b;
    };
    std::vector<Node> nodes_;
};

namespace detail {
inline Tape* tape_of(const Var& x, const Var& y) {
    Tape* t = x.tape ? x.tape : y.tape;
    assert(!(x.tape && y.tape && x.tape != y.tape));
    return t;
}
}  // namespace detail

inline Var operator+(const Var& x, const Var& y) {
    Tape* t = detail::tape_of(x, y);
    if (!t) return Var(x.v + y.v);
    return t->record(x.v + y.v, x.idx, 1.0, y.idx, 1.0);
}

inline Var operator-(const Var& x, const Var& y) {
    Tape* t = detail::tape_of(x, y);
    if (!t) return Var(x.v - y.v);
    return t->record(x.v - y.v, x.idx, 1.0, y.idx, -1.0);
}

inline Var operator-(const Var& x) {
    if (!x.tape) return Var(-x.v);
    return x.tape->record(-x.v, x.idx, -1.0, -1, 0.0);
}

inline Var operator*(const Var& x, const Var& y) {
    Tape* t = detail::tape_of(x, y);
    if (!t) return Var(x.v * y.v);
    return t->record(x.v * y.v, x.idx, y.v, y.idx, x.v);
}

inline Var operator/(const Var& x, const Var& y) {
    Tape* t = detail::tape_of(x, y);
    if (!t) return Var(x.v / y.v);
    const double inv = 1.0 / y.v;
    return t->record(x.v * inv, x.idx, inv, y.idx, -x.v * inv * inv);
}

inline Var& operator+=(Var& x, const Var& y) { return x = x + y; }
inline Var& operator-=(Var& x, const Var& y) { return x = x - y; }
inline Var& operator*=(Var& x, const Var& y) { return x = x * y; }
inline Var& operator/=(Var& x, const Var& y) { return x = x / y; }

inline Var exp(const Var& x) {
    const double e = std::exp(x.v);
    if (!x.tape) return Var(e);
    return x.tape->record(e, x.idx, e, -1, 0.0);
}

inline Var log(const Var& x) {
    if (!x.tape) return Var(std::log(x.v));
    return x.tape->record(std::log(x.v), x.idx, 1.0 / x.v, -1, 0.0);
}

inline Var sqrt(const Var& x) {
    const double s = std::sqrt(x.v);
    if (!x.tape) return Var(s);
    return x.tape->record(s, x.idx, 0.5 / s, -1, 0.0);
}

inline Var tanh(const Var& x) {
    const double th = std::tanh(x.v);
    if (!x.tape) return Var(th);
    return x.tape->record(th, x.idx, 1.0 - th * th, -1, 0.0);
}

inline Var sigmoid(const Var& x) {
    const double s = num::sigmoid(x.v);
    if (!x.tape) return Var(s);
    return x.tape->record(s, x.idx, s * (1.0 - s), -1, 0.0);
}

inline Var softplus(const Var& x) {
    const double sp = num::softplus(x.v);
    if (!x.tape) return Var(sp);
    return x.tape->record(sp, x.idx, num::sigmoid(x.v), -1, 0.0);
}

inline Var relu(const Var& x) {
    const double r = x.v > 0.0 ? x.v : 0.0;
    if (!x.tape) return Var(r);
    return x.tape->record(r, x.idx, x.v > 0.0 ? 1.0 : 0.0, -1, 0.0);
}

inline Var normal_cdf(const Var& x) {
    const double c = num::normal_cdf(x.v);
    if (!x.tape) return Var(c);
    return x.tape->record(c, x.idx, num::normal_pdf(x.v), -1, 0.0);
}

inline Var normal_pdf(const Var& x) {
    const double p = num::normal_pdf(x.v);
    if (!x.tape) return Var(p);
    return x.tape->record(p, x.idx, -x.v * p, -1, 0.0);
}

inline Var digamma(const Var& x) {
    const double d = num::digamma(x.v);
    if (!x.tape) return Var(d);
    return x.tape->record(d, x.idx, num::trigamma(x.v), -1, 0.0);
}

inline Var lgamma(const Var& x) {
    const double l = std::lgamma(x.v);
    if (!x.tape) return Var(l);
    return x.tape->record(l, x.idx, num::digamma(x.v), -1, 0.0);
}

// Shims so templated numeric code works for both double and Var.
inline double value_of(double x) { return x; }
inline double value_of(const Var& x) { return x.v; }

}  // namespace bmrnet::ad

// Unqualified math calls in templated bmrnet code resolve here for double
// (ordinary lookup) and to the ad:: overloads for Var (ADL).
namespace bmrnet {

using std::exp;
using std::log;
using std::sqrt;
using std::tanh;
using std::lgamma;
using num::sigmoid;
using num::softplus;
using num::normal_cdf;
using num::normal_pdf;
using num::digamma;
using ad::value_of;

inline double relu(double x) { return x > 0.0 ? x : 0.0; }

}  // namespace bmrnet

#endif  // BMRNET_AD_HPP
