#include "mollow/floquet.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>
#include <sstream>

#include <Eigen/Eigenvalues>

namespace mollow {

namespace {

constexpr double kEdgeWarning = 1e-9;

// Operators in the (-, +) level basis.
Eigen::Matrix2cd operator_matrix(Operator op) {
    Eigen::Matrix2cd m = Eigen::Matrix2cd::Zero();
    switch (op) {
        case Operator::x: m(0, 1) = m(1, 0) = 0.5; break;
        case Operator::z: m(0, 0) = -0.5; m(1, 1) = 0.5; break;
        case Operator::plus: m(1, 0) = 1.0; break;
        case Operator::minus: m(0, 1) = 1.0; break;
    }
    return m;
}

// Photon-number gauge chi that makes every coupling real, if one exists.
// Requires phi_m - m*chi to be a multiple of pi for all components.
std::optional<double> real_gauge(const DrivingSpec& spec) {
    const auto& comps = spec.components();
    if (comps.empty()) return 0.0;
    const int m1 = comps.front().harmonic;
    for (int j = 0; j < m1; ++j) {
        const double chi = (comps.front().phase + j * std::numbers::pi) / m1;
        bool ok = true;
        for (const auto& c : comps) {
            if (std::abs(std::sin(c.phase - c.harmonic * chi)) > 1e-12) {
                ok = false;
                break;
            }
        }
        if (ok) return chi;
    }
    return std::nullopt;
}

struct Eigenpairs {
    Eigen::VectorXd values;
    Eigen::MatrixXcd vectors;
};

Eigenpairs diagonalize(const DrivingSpec& spec, int n_max, Coupling coupling) {
    const Eigen::MatrixXcd H = build_floquet_matrix(spec, n_max, coupling);
    if (auto chi = real_gauge(spec)) {
        const int dim = static_cast<int>(H.rows());
        Eigen::VectorXcd phase(dim);
        for (int n = -n_max; n <= n_max; ++n) {
            const cplx p = std::polar(1.0, n * *chi);
            phase(sambe_index(Mode::minus, n, n_max)) = p;
            phase(sambe_index(Mode::plus, n, n_max)) = p;
        }
        const Eigen::MatrixXcd rotated = phase.conjugate().asDiagonal() * H * phase.asDiagonal();
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(rotated.real());
        if (es.info() != Eigen::Success) throw NumericalError("Floquet eigensolver failed");
        return {es.eigenvalues(), phase.asDiagonal() * es.eigenvectors().cast<cplx>()};
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(H);
    if (es.info() != Eigen::Success) throw NumericalError("Floquet eigensolver failed");
    return {es.eigenvalues(), es.eigenvectors()};
}

double central_weight(const Eigen::VectorXcd& v, int n_max) {
    double w = 0.0;
    for (int n = -1; n <= 1; ++n) {
        if (std::abs(n) > n_max) continue;
        w += std::norm(v(sambe_index(Mode::minus, n, n_max))) + std::norm(v(sambe_index(Mode::plus, n, n_max)));
    }
    return w;
}

double sigma_z_average(const Eigen::VectorXcd& v, int n_max) {
    double s = 0.0;
    for (int n = -n_max; n <= n_max; ++n)
        s += std::norm(v(sambe_index(Mode::plus, n, n_max))) - std::norm(v(sambe_index(Mode::minus, n, n_max)));
    return s;
}

double edge_weight(const Eigen::VectorXcd& v, int n_max) {
    double w = 0.0;
    for (int n : {-n_max, n_max})
        w += std::norm(v(sambe_index(Mode::minus, n, n_max))) + std::norm(v(sambe_index(Mode::plus, n, n_max)));
    return w;
}

void fix_phase(Eigen::VectorXcd& v) {
    Eigen::Index k = 0;
    v.cwiseAbs2().maxCoeff(&k);
    v *= std::conj(v(k)) / std::abs(v(k));
    v(k) = std::abs(v(k));
}

FloquetSolution solve_once(const DrivingSpec& spec, int n_max, Coupling coupling) {
    const double w = spec.omega_l();
    const Eigenpairs ep = diagonalize(spec, n_max, coupling);

    struct Candidate {
        double weight;
        double energy;
        Eigen::Index column;
    };
    std::vector<Candidate> cand;
    bool near_edge = false;
    for (Eigen::Index k = 0; k < ep.values.size(); ++k) {
        const double e = ep.values(k);
        if (e > -w / 2.0 && e <= w / 2.0) {
            cand.push_back({central_weight(ep.vectors.col(k), n_max), e, k});
        }
    }
    if (cand.size() < 2) throw NumericalError("fewer than two eigenpairs in the first quasienergy zone");
    std::stable_sort(cand.begin(), cand.end(), [](const Candidate& a, const Candidate& b) { return a.weight > b.weight; });

    FloquetSolution sol;
    sol.omega_l = w;
    sol.n_max = n_max;
    std::array<Eigen::VectorXcd, 2> v{ep.vectors.col(cand[0].column), ep.vectors.col(cand[1].column)};
    std::array<double, 2> e{cand[0].energy, cand[1].energy};
    std::array<double, 2> sz{sigma_z_average(v[0], n_max), sigma_z_average(v[1], n_max)};

    // Slot 1 holds the + mode.
    const bool first_is_plus = sz[0] > sz[1] || (sz[0] == sz[1] && e[0] >= e[1]);
    const int p = first_is_plus ? 0 : 1;
    const int m = 1 - p;
    sol.epsilon[index(Mode::plus)] = e[p];
    sol.epsilon[index(Mode::minus)] = e[m];
    sol.coeffs[index(Mode::plus)] = v[p];
    sol.coeffs[index(Mode::minus)] = v[m];
    sol.mean_sigma_z[index(Mode::plus)] = sz[p];
    sol.mean_sigma_z[index(Mode::minus)] = sz[m];
    for (auto& c : sol.coeffs) fix_phase(c);

    for (double x : e) near_edge = near_edge || std::abs(std::abs(x) - w / 2.0) < kEdgeWarning * w;
    if (near_edge) sol.warnings.emplace_back("quasienergy within 1e-9 of the zone edge");
    sol.boundary_weight = std::max(edge_weight(sol.coeffs[0], n_max), edge_weight(sol.coeffs[1], n_max));
    return sol;
}

}  // namespace

double fold_quasienergy(double e, double omega_l) {
    double x = e - omega_l * std::floor(e / omega_l + 0.5);
    if (x <= -omega_l / 2.0) x += omega_l;
    if (x > omega_l / 2.0) x -= omega_l;
    return x;
}

cplx FloquetSolution::coefficient(Mode mode, Mode level, int n) const {
    if (n < -n_max || n > n_max) return {0.0, 0.0};
    return coeffs[index(mode)](sambe_index(level, n, n_max));
}

double FloquetSolution::transition_frequency(Mode a, Mode b, int n) const {
    return epsilon[index(a)] - epsilon[index(b)] + n * omega_l;
}

int default_n_max(const DrivingSpec& spec) {
    const int m_max = std::max(spec.max_harmonic(), 1);
    const int m_core = std::min(m_max, 2);
    const double reach = m_core + 2.0 * spec.amplitude_sum() / spec.omega_l();
    return 4 * static_cast<int>(std::ceil(reach)) + 16 + (m_max - m_core);
}

Eigen::MatrixXcd build_floquet_matrix(const DrivingSpec& spec, int n_max, Coupling coupling) {
    if (n_max < spec.max_harmonic())
        throw std::invalid_argument("n_max " + std::to_string(n_max) + " is smaller than the highest harmonic " +
                                    std::to_string(spec.max_harmonic()));
    const int dim = 2 * (2 * n_max + 1);
    Eigen::MatrixXcd H = Eigen::MatrixXcd::Zero(dim, dim);
    const double half_split = spec.omega0() / 2.0;
    for (int n = -n_max; n <= n_max; ++n) {
        H(sambe_index(Mode::minus, n, n_max), sambe_index(Mode::minus, n, n_max)) = -half_split + n * spec.omega_l();
        H(sambe_index(Mode::plus, n, n_max), sambe_index(Mode::plus, n, n_max)) = half_split + n * spec.omega_l();
    }
    auto add = [&](int row, int col, cplx value) {
        H(row, col) += value;
        H(col, row) += std::conj(value);
    };
    for (const auto& c : spec.components()) {
        const cplx co = std::polar(c.amplitude / 2.0, c.phase);
        for (int n = -n_max; n <= n_max; ++n) {
            // <-, n+m| H |+, n> carries sigma_- e^{i m w t}; the n-m partner is counter-rotating.
            if (n + c.harmonic <= n_max)
                add(sambe_index(Mode::minus, n + c.harmonic, n_max), sambe_index(Mode::plus, n, n_max), co);
            if (coupling == Coupling::full && n - c.harmonic >= -n_max)
                add(sambe_index(Mode::minus, n - c.harmonic, n_max), sambe_index(Mode::plus, n, n_max), std::conj(co));
        }
    }
    return H;
}

FloquetSolution solve(const DrivingSpec& spec, int n_max) {
    SolveOptions opt;
    opt.n_max = n_max;
    return solve(spec, opt);
}

FloquetSolution solve(const DrivingSpec& spec, const SolveOptions& options) {
    int n_max = options.n_max > 0 ? options.n_max : default_n_max(spec);
    FloquetSolution sol = solve_once(spec, n_max, options.coupling);
    if (sol.boundary_weight > options.boundary_tolerance && options.escalate) {
        n_max *= 2;
        sol = solve_once(spec, n_max, options.coupling);
    }
    if (sol.boundary_weight > options.boundary_tolerance) {
        std::ostringstream os;
        os << "Floquet truncation not converged: boundary weight " << sol.boundary_weight << " at n_max " << n_max
           << " exceeds " << options.boundary_tolerance;
        throw NumericalError(os.str());
    }
    return sol;
}

TransitionTable transition_coefficients(const FloquetSolution& sol, Operator op) {
    const int N = sol.n_max;
    const int L = 2 * N + 1;
    const Eigen::Matrix2cd O = operator_matrix(op);
    // Columns are photon index, rows are levels (-, +).
    std::array<Eigen::Matrix2Xcd, 2> u;
    std::array<Eigen::Matrix2Xcd, 2> ou;
    for (Mode a : {Mode::minus, Mode::plus}) {
        u[index(a)] = Eigen::Map<const Eigen::Matrix2Xcd>(sol.coeffs[index(a)].data(), 2, L);
        ou[index(a)] = O * u[index(a)];
    }
    TransitionTable table(op, N);
    for (Mode a : {Mode::minus, Mode::plus}) {
        for (Mode b : {Mode::minus, Mode::plus}) {
            const auto& ua = u[index(a)];
            const auto& vb = ou[index(b)];
            for (int n = -N; n <= N; ++n) {
                // X_{ab,n} = sum_l u_a(l-n)^dagger O u_b(l)
                const int lo = std::max(-N, -N + n);
                const int hi = std::min(N, N + n);
                cplx s{0.0, 0.0};
                for (int l = lo; l <= hi; ++l) {
                    const int i = l - n + N;
                    const int j = l + N;
                    s += std::conj(ua(0, i)) * vb(0, j) + std::conj(ua(1, i)) * vb(1, j);
                }
                table.at(a, b, n) = s;
            }
        }
    }
    return table;
}

TransitionSet make_transition_set(const FloquetSolution& sol) {
    return {sol.omega_l,
            sol.epsilon_plus(),
            sol.epsilon_minus(),
            transition_coefficients(sol, Operator::x),
            transition_coefficients(sol, Operator::z),
            transition_coefficients(sol, Operator::plus)};
}

}  // namespace mollow
