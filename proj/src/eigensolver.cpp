#include "blochlab/eigensolver.hpp"

#include <Eigen/SparseLU>
#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace blochlab {

namespace {

// deterministic start vector
VectorXc seeded_vector(int n, std::uint64_t seed) {
    VectorXc v(n);
    std::uint64_t s = seed * 6364136223846793005ULL + 1442695040888963407ULL;
    auto next = [&s]() {
        s ^= s << 13;
        s ^= s >> 7;
        s ^= s << 17;
        return static_cast<double>(s >> 11) / 9007199254740992.0 - 0.5;
    };
    for (int i = 0; i < n; ++i) v(i) = Complex(next(), next());
    return v;
}

// canonical phase: the largest-magnitude entry becomes real positive
void canonicalize_phase(VectorXc& v) {
    int imax = 0;
    double best = 0;
    for (int i = 0; i < v.size(); ++i)
        if (std::abs(v(i)) > best) {
            best = std::abs(v(i));
            imax = i;
        }
    if (best > 0) v *= std::conj(v(imax)) / std::abs(v(imax));
}

bool lex_less(const VectorXc& a, const VectorXc& b) {
    for (int i = 0; i < a.size() && i < b.size(); ++i) {
        const double ar = std::round(a(i).real() * 1e8), br = std::round(b(i).real() * 1e8);
        if (ar != br) return ar < br;
        const double ai = std::round(a(i).imag() * 1e8), bi = std::round(b(i).imag() * 1e8);
        if (ai != bi) return ai < bi;
    }
    return false;
}

void order_pairs(std::vector<EigenPair>& pairs, double scale) {
    std::sort(pairs.begin(), pairs.end(), [scale](const EigenPair& a, const EigenPair& b) {
        if (std::abs(a.value - b.value) > 1e-12 * (1.0 + scale)) return a.value < b.value;
        return lex_less(a.vector, b.vector);
    });
}

std::vector<EigenPair> solve_dense(const SpMatC& K, const SpMatC& M,
                                   const EigenOptions& opts) {
    const MatrixXc Kd = MatrixXc(K), Md = MatrixXc(M);
    Eigen::GeneralizedSelfAdjointEigenSolver<MatrixXc> es(Kd, Md);
    if (es.info() != Eigen::Success)
        throw std::runtime_error("solve_eigenpairs: dense solver failed");
    const auto& vals = es.eigenvalues();
    const auto& vecs = es.eigenvectors();  // V^H M V = I
    const double scale = vals.size() ? std::abs(vals(vals.size() - 1)) : 1.0;

    std::vector<EigenPair> out;
    for (int i = 0; i < vals.size(); ++i) {
        const double lam = vals(i);
        if (opts.window && (lam < opts.window->first || lam > opts.window->second)) continue;
        EigenPair p;
        p.value = lam;
        p.vector = vecs.col(i);
        canonicalize_phase(p.vector);
        p.residual = (Kd * p.vector - lam * (Md * p.vector)).norm() / (1.0 + std::abs(lam));
        out.push_back(std::move(p));
        if (!opts.window && static_cast<int>(out.size()) >= opts.k) break;
    }
    order_pairs(out, scale);
    return out;
}

std::vector<EigenPair> solve_lanczos(const SpMatC& K, const SpMatC& M,
                                     const EigenOptions& opts) {
    const int n = static_cast<int>(K.rows());
    // shift slightly below the spectrum; K is PSD so 0 is a lower bound
    double diag_scale = 0.0;
    for (int i = 0; i < n; ++i) diag_scale += std::abs(K.coeff(i, i).real());
    double mass_scale = 0.0;
    for (int i = 0; i < n; ++i) mass_scale += std::abs(M.coeff(i, i).real());
    const double scale = (diag_scale / n) / std::max(mass_scale / n, 1e-300);
    const double sigma = -1e-3 * scale - 1e-12;

    SpMatC shifted = K - Complex(sigma) * M;
    shifted.makeCompressed();
    Eigen::SparseLU<SpMatC> lu;
    lu.compute(shifted);
    if (lu.info() != Eigen::Success)
        throw std::runtime_error("solve_eigenpairs: factorization of (K - sigma M) failed");

    const double upper = opts.window ? opts.window->second
                                     : std::numeric_limits<double>::infinity();
    int m = opts.max_subspace > 0 ? opts.max_subspace
                                  : std::min(n, std::max(2 * opts.k + 40, 80));

    std::vector<EigenPair> out;
    for (;;) {
        // Lanczos on Op = (K - sigma M)^-1 M, self-adjoint in the M inner
        // product; full reorthogonalization
        std::vector<VectorXc> basis;
        std::vector<VectorXc> mbasis;  // M * q_j
        std::vector<double> alpha, beta;

        VectorXc q = seeded_vector(n, opts.seed);
        VectorXc mq = M * q;
        q /= std::sqrt(std::abs(q.dot(mq).real()));
        mq = M * q;
        basis.push_back(q);
        mbasis.push_back(mq);

        for (int j = 0; j < m; ++j) {
            VectorXc w = lu.solve(mbasis[j]);
            const double a = w.dot(mbasis[j]).real();
            alpha.push_back(a);
            // w -= alpha q_j + beta q_{j-1}; then full reorth (twice)
            for (int pass = 0; pass < 2; ++pass)
                for (std::size_t i = 0; i < basis.size(); ++i) {
                    const Complex c = mbasis[i].dot(w);
                    w -= c * basis[i];
                }
            VectorXc mw = M * w;
            const double b = std::sqrt(std::max(0.0, w.dot(mw).real()));
            if (b < 1e-14) break;  // invariant subspace exhausted
            beta.push_back(b);
            w /= b;
            basis.push_back(w);
            mbasis.push_back(M * w);
        }

        const int steps = static_cast<int>(alpha.size());
        Eigen::MatrixXd T = Eigen::MatrixXd::Zero(steps, steps);
        for (int i = 0; i < steps; ++i) {
            T(i, i) = alpha[i];
            if (i + 1 < steps) T(i, i + 1) = T(i + 1, i) = beta[i];
        }
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> tes(T);

        // Ritz values of Op are nu; eigenvalues are sigma + 1/nu. Largest
        // nu correspond to eigenvalues nearest sigma (the smallest ones).
        struct Ritz {
            double lambda;
            int col;
        };
        std::vector<Ritz> ritz;
        for (int i = 0; i < steps; ++i) {
            const double nu = tes.eigenvalues()(i);
            if (nu <= 1e-300) continue;
            ritz.push_back({sigma + 1.0 / nu, i});
        }
        std::sort(ritz.begin(), ritz.end(),
                  [](const Ritz& a, const Ritz& b) { return a.lambda < b.lambda; });

        out.clear();
        bool converged_enough = true;
        const int want = opts.window ? steps : opts.k;
        for (const auto& rz : ritz) {
            if (static_cast<int>(out.size()) >= want) break;
            if (opts.window && rz.lambda > upper) break;
            VectorXc u = VectorXc::Zero(n);
            for (int j = 0; j < steps; ++j) u += tes.eigenvectors()(j, rz.col) * basis[j];
            VectorXc mu = M * u;
            const double nrm = std::sqrt(std::abs(u.dot(mu).real()));
            u /= nrm;
            const double res = (K * u - Complex(rz.lambda) * (M * u)).norm() /
                               (1.0 + std::abs(rz.lambda));
            if (res > opts.tol * 10) {
                converged_enough = false;
                break;
            }
            EigenPair p;
            p.value = rz.lambda;
            p.vector = std::move(u);
            canonicalize_phase(p.vector);
            p.residual = res;
            if (opts.window &&
                (rz.lambda < opts.window->first || rz.lambda > opts.window->second))
                continue;
            out.push_back(std::move(p));
        }
        const int needed = opts.window ? 1 : opts.k;
        if (converged_enough && static_cast<int>(out.size()) >= needed) break;
        if (m >= n)
            throw std::runtime_error(
                "solve_eigenpairs: Lanczos failed to converge at full subspace, residual > tol");
        m = std::min(n, 2 * m);
    }
    order_pairs(out, std::abs(out.empty() ? 1.0 : out.back().value));
    return out;
}

}  // namespace

std::vector<EigenPair> solve_eigenpairs(const SpMatC& K, const SpMatC& M,
                                        const EigenOptions& opts) {
    if (K.rows() != K.cols() || M.rows() != M.cols() || K.rows() != M.rows())
        throw std::invalid_argument("solve_eigenpairs: dimension mismatch");
    if (!opts.window && (opts.k < 1 || opts.k > K.rows()))
        throw std::invalid_argument("solve_eigenpairs: invalid pair count");
    if (K.rows() <= opts.dense_threshold) return solve_dense(K, M, opts);
    return solve_lanczos(K, M, opts);
}

}  // namespace blochlab
