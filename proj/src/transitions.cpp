#include "mollow/transitions.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <stdexcept>

namespace mollow {

std::string_view to_string(Mode a) { return a == Mode::plus ? "+" : "-"; }

std::string_view to_string(Operator op) {
    switch (op) {
        case Operator::x: return "x";
        case Operator::z: return "z";
        case Operator::plus: return "plus";
        case Operator::minus: return "minus";
    }
    return "?";
}

TransitionTable::TransitionTable(Operator op, int n_max)
    : op_(op), n_max_(n_max), data_(4 * static_cast<std::size_t>(2 * n_max + 1)) {
    if (n_max < 0) throw std::invalid_argument("table half-width must be nonnegative");
}

std::size_t TransitionTable::slot(Mode a, Mode b, int n) const {
    return static_cast<std::size_t>((2 * index(a) + index(b)) * (2 * n_max_ + 1) + (n + n_max_));
}

cplx TransitionTable::operator()(Mode a, Mode b, int n) const {
    if (n < -n_max_ || n > n_max_) return {0.0, 0.0};
    return data_[slot(a, b, n)];
}

cplx& TransitionTable::at(Mode a, Mode b, int n) {
    if (n < -n_max_ || n > n_max_) throw std::out_of_range("Fourier index outside table");
    return data_[slot(a, b, n)];
}

TransitionTable TransitionTable::shifted(Mode which, int k) const {
    TransitionTable out(op_, n_max_ + std::abs(k));
    const Mode w = which;
    for (Mode a : {Mode::minus, Mode::plus}) {
        for (Mode b : {Mode::minus, Mode::plus}) {
            // Row a=w picks up n+k, column b=w picks up n-k; diagonal unchanged.
            int offset = 0;
            if (a == w) offset += k;
            if (b == w) offset -= k;
            for (int n = -out.n_max_; n <= out.n_max_; ++n) out.at(a, b, n) = (*this)(a, b, n + offset);
        }
    }
    return out;
}

TransitionTable TransitionTable::swapped() const {
    TransitionTable out(op_, n_max_);
    for (Mode a : {Mode::minus, Mode::plus})
        for (Mode b : {Mode::minus, Mode::plus})
            for (int n = -n_max_; n <= n_max_; ++n) out.at(a, b, n) = (*this)(other(a), other(b), n);
    return out;
}

double TransitionTable::edge_magnitude() const {
    double m = 0.0;
    for (Mode a : {Mode::minus, Mode::plus})
        for (Mode b : {Mode::minus, Mode::plus})
            m = std::max({m, std::abs((*this)(a, b, n_max_)), std::abs((*this)(a, b, -n_max_))});
    return m;
}

TransitionTable lowering_from_raising(const TransitionTable& plus) {
    if (plus.op() != Operator::plus) throw std::invalid_argument("expected a sigma_+ table");
    TransitionTable out(Operator::minus, plus.n_max());
    for (Mode a : {Mode::minus, Mode::plus})
        for (Mode b : {Mode::minus, Mode::plus})
            for (int n = -plus.n_max(); n <= plus.n_max(); ++n) out.at(a, b, n) = std::conj(plus(b, a, -n));
    return out;
}

const TransitionTable& TransitionSet::table(Operator op) const {
    switch (op) {
        case Operator::x: return x;
        case Operator::z: return z;
        case Operator::plus: return plus;
        case Operator::minus: break;
    }
    throw std::invalid_argument("no stored table for sigma_-; derive it from sigma_+");
}

TransitionSet TransitionSet::shifted(Mode which, int k) const {
    TransitionSet out{omega_l, epsilon_plus, epsilon_minus, x.shifted(which, k), z.shifted(which, k),
                      plus.shifted(which, k)};
    (which == Mode::plus ? out.epsilon_plus : out.epsilon_minus) += k * omega_l;
    return out;
}

TransitionSet TransitionSet::swapped() const {
    return {omega_l, epsilon_minus, epsilon_plus, x.swapped(), z.swapped(), plus.swapped()};
}

namespace {

// 1 or 0 when every X^+_{+-,n} sits at odd or even n, -1 otherwise.
int mixed_parity(const TransitionTable& plus) {
    double w[2] = {0.0, 0.0};
    for (int n = -plus.n_max(); n <= plus.n_max(); ++n) w[n & 1] += std::norm(plus(Mode::plus, Mode::minus, n));
    const double total = w[0] + w[1];
    if (total == 0.0) return -1;
    if (w[0] <= 1e-20 * total) return 1;
    if (w[1] <= 1e-20 * total) return 0;
    return -1;
}

}  // namespace

TransitionSet emission_frame(const TransitionSet& t) {
    const double w = t.omega_l;
    const int parity = mixed_parity(t.plus);
    int k = 0;
    if (parity < 0) {
        // k such that gap + k*w lies in (-w/2, w/2].
        k = static_cast<int>(std::ceil(-t.gap() / w - 0.5));
        const double g = t.gap() + k * w;
        if (g <= -w / 2.0) ++k;
        else if (g > w / 2.0) --k;
    } else {
        // Odd k moves the mixed entries to odd n; gap + k*w in (-w, w].
        k = 2 * static_cast<int>(std::ceil((-t.gap() / w - 1.0 - (1 - parity)) / 2.0)) + (1 - parity);
        if (t.gap() + k * w <= -w) k += 2;
        else if (t.gap() + k * w > w) k -= 2;
    }
    TransitionSet out = k == 0 ? t : t.shifted(Mode::plus, k);
    if (out.gap() < 0.0) out = out.swapped();
    return out;
}

}  // namespace mollow
