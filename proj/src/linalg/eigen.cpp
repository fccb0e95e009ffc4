#include "strudyn/linalg/eigen.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "strudyn/linalg/factorization.hpp"

namespace strudyn {

namespace {

void require_finite(const DenseMatrix& a, const char* where)
{
    if (!a.is_finite()) throw DomainError(std::string(where) + ": non-finite entries");
}

// Lower Cholesky factor of a dense SPD matrix.
DenseMatrix dense_cholesky(const DenseMatrix& a)
{
    const std::size_t n = a.rows();
    DenseMatrix l(n, n);
    const double floor = 1e-14 * a.max_row_norm();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j <= i; ++j) {
            double s = a(i, j);
            for (std::size_t k = 0; k < j; ++k) s -= l(i, k) * l(j, k);
            if (i == j) {
                if (!(s > floor)) throw SingularMatrixError("sym_generalized_eigen: M is not positive definite");
                l(i, i) = std::sqrt(s);
            } else {
                l(i, j) = s / l(j, j);
            }
        }
    }
    return l;
}

std::vector<std::complex<double>> quadratic_roots(double b, double c)
{
    // roots of x^2 + b x + c
    const double disc = b * b - 4.0 * c;
    if (disc >= 0.0) {
        const double sq = std::sqrt(disc);
        const double q = -0.5 * (b + std::copysign(sq, b));
        if (q == 0.0) return {0.0, 0.0};
        return {q, c / q};
    }
    const double re = -0.5 * b;
    const double im = 0.5 * std::sqrt(-disc);
    return {{re, im}, {re, -im}};
}

void to_hessenberg(DenseMatrix& a)
{
    const std::size_t n = a.rows();
    for (std::size_t m = 1; m + 1 < n; ++m) {
        double x = 0.0;
        std::size_t piv = m;
        for (std::size_t j = m; j < n; ++j)
            if (std::abs(a(j, m - 1)) > std::abs(x)) {
                x = a(j, m - 1);
                piv = j;
            }
        if (piv != m) {
            for (std::size_t j = m - 1; j < n; ++j) std::swap(a(piv, j), a(m, j));
            for (std::size_t j = 0; j < n; ++j) std::swap(a(j, piv), a(j, m));
        }
        if (x != 0.0) {
            for (std::size_t i = m + 1; i < n; ++i) {
                double y = a(i, m - 1);
                if (y == 0.0) continue;
                y /= x;
                a(i, m - 1) = y;
                for (std::size_t j = m; j < n; ++j) a(i, j) -= y * a(m, j);
                for (std::size_t j = 0; j < n; ++j) a(j, m) += y * a(j, i);
            }
        }
    }
    for (std::size_t i = 2; i < n; ++i)
        for (std::size_t j = 0; j + 1 < i; ++j) a(i, j) = 0.0;
}

// Francis double-shift QR on an upper Hessenberg matrix (1-based indexing internally).
std::vector<std::complex<double>> hessenberg_qr(DenseMatrix h)
{
    const int n = static_cast<int>(h.rows());
    auto A = [&](int i, int j) -> double& { return h(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1)); };
    std::vector<double> wr(static_cast<std::size_t>(n) + 1, 0.0);
    std::vector<double> wi(static_cast<std::size_t>(n) + 1, 0.0);
    double anorm = 0.0;
    for (int i = 1; i <= n; ++i)
        for (int j = std::max(i - 1, 1); j <= n; ++j) anorm += std::abs(A(i, j));

    int nn = n;
    double t = 0.0;
    double p = 0.0, q = 0.0, r = 0.0, s = 0.0, w = 0.0, x = 0.0, y = 0.0, z = 0.0;
    while (nn >= 1) {
        int its = 0;
        int l = 0;
        do {
            for (l = nn; l >= 2; --l) {
                s = std::abs(A(l - 1, l - 1)) + std::abs(A(l, l));
                if (s == 0.0) s = anorm;
                if (std::abs(A(l, l - 1)) + s == s) {
                    A(l, l - 1) = 0.0;
                    break;
                }
            }
            x = A(nn, nn);
            if (l == nn) {
                wr[static_cast<std::size_t>(nn)] = x + t;
                wi[static_cast<std::size_t>(nn--)] = 0.0;
            } else {
                y = A(nn - 1, nn - 1);
                w = A(nn, nn - 1) * A(nn - 1, nn);
                if (l == nn - 1) {
                    p = 0.5 * (y - x);
                    q = p * p + w;
                    z = std::sqrt(std::abs(q));
                    x += t;
                    const auto un = static_cast<std::size_t>(nn);
                    if (q >= 0.0) {
                        z = p + std::copysign(z, p);
                        wr[un - 1] = wr[un] = x + z;
                        if (z != 0.0) wr[un] = x - w / z;
                        wi[un - 1] = wi[un] = 0.0;
                    } else {
                        wr[un - 1] = wr[un] = x + p;
                        wi[un - 1] = -(wi[un] = z);
                    }
                    nn -= 2;
                } else {
                    if (its == 60) throw Error("eigenvalues: QR iteration did not converge");
                    if (its == 10 || its == 20) {
                        t += x;
                        for (int i = 1; i <= nn; ++i) A(i, i) -= x;
                        s = std::abs(A(nn, nn - 1)) + std::abs(A(nn - 1, nn - 2));
                        y = x = 0.75 * s;
                        w = -0.4375 * s * s;
                    }
                    ++its;
                    int m = nn - 2;
                    for (; m >= l; --m) {
                        z = A(m, m);
                        r = x - z;
                        s = y - z;
                        p = (r * s - w) / A(m + 1, m) + A(m, m + 1);
                        q = A(m + 1, m + 1) - z - r - s;
                        r = A(m + 2, m + 1);
                        s = std::abs(p) + std::abs(q) + std::abs(r);
                        p /= s;
                        q /= s;
                        r /= s;
                        if (m == l) break;
                        const double u = std::abs(A(m, m - 1)) * (std::abs(q) + std::abs(r));
                        const double v = std::abs(p) * (std::abs(A(m - 1, m - 1)) + std::abs(z) + std::abs(A(m + 1, m + 1)));
                        if (u + v == v) break;
                    }
                    for (int i = m + 2; i <= nn; ++i) {
                        A(i, i - 2) = 0.0;
                        if (i != m + 2) A(i, i - 3) = 0.0;
                    }
                    for (int k = m; k <= nn - 1; ++k) {
                        if (k != m) {
                            p = A(k, k - 1);
                            q = A(k + 1, k - 1);
                            r = 0.0;
                            if (k != nn - 1) r = A(k + 2, k - 1);
                            if ((x = std::abs(p) + std::abs(q) + std::abs(r)) != 0.0) {
                                p /= x;
                                q /= x;
                                r /= x;
                            }
                        }
                        if ((s = std::copysign(std::sqrt(p * p + q * q + r * r), p)) != 0.0) {
                            if (k == m) {
                                if (l != m) A(k, k - 1) = -A(k, k - 1);
                            } else {
                                A(k, k - 1) = -s * x;
                            }
                            p += s;
                            x = p / s;
                            y = q / s;
                            z = r / s;
                            q /= p;
                            r /= p;
                            for (int j = k; j <= nn; ++j) {
                                p = A(k, j) + q * A(k + 1, j);
                                if (k != nn - 1) {
                                    p += r * A(k + 2, j);
                                    A(k + 2, j) -= p * z;
                                }
                                A(k + 1, j) -= p * y;
                                A(k, j) -= p * x;
                            }
                            const int mmin = nn < k + 3 ? nn : k + 3;
                            for (int i = l; i <= mmin; ++i) {
                                p = x * A(i, k) + y * A(i, k + 1);
                                if (k != nn - 1) {
                                    p += z * A(i, k + 2);
                                    A(i, k + 2) -= p * r;
                                }
                                A(i, k + 1) -= p * q;
                                A(i, k) -= p;
                            }
                        }
                    }
                }
            }
        } while (l < nn - 1);
    }
    std::vector<std::complex<double>> ev;
    for (int i = 1; i <= n; ++i) ev.emplace_back(wr[static_cast<std::size_t>(i)], wi[static_cast<std::size_t>(i)]);
    return ev;
}

} // namespace

SymmetricEigen symmetric_eigen(const DenseMatrix& input)
{
    if (!input.square()) throw DimensionError("symmetric_eigen: matrix not square");
    require_finite(input, "symmetric_eigen");
    const std::size_t n = input.rows();
    DenseMatrix a = input;
    // Symmetrize to remove round-off asymmetry from the caller.
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) a(i, j) = a(j, i) = 0.5 * (a(i, j) + a(j, i));
    DenseMatrix v = DenseMatrix::identity(n);

    double total = 0.0;
    for (double x : a.data()) total += x * x;
    const double stop = 1e-30 * total;

    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) off += a(i, j) * a(i, j);
        if (off <= stop) break;
        for (std::size_t p = 0; p < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const double apq = a(p, q);
                if (apq == 0.0) continue;
                const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
                const double t = std::copysign(1.0, theta) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                for (std::size_t k = 0; k < n; ++k) {
                    const double akp = a(k, p);
                    const double akq = a(k, q);
                    a(k, p) = c * akp - s * akq;
                    a(k, q) = s * akp + c * akq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const double apk = a(p, k);
                    const double aqk = a(q, k);
                    a(p, k) = c * apk - s * aqk;
                    a(q, k) = s * apk + c * aqk;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const double vkp = v(k, p);
                    const double vkq = v(k, q);
                    v(k, p) = c * vkp - s * vkq;
                    v(k, q) = s * vkp + c * vkq;
                }
            }
        }
    }

    std::vector<std::size_t> idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](std::size_t x, std::size_t y) { return a(x, x) < a(y, y); });
    SymmetricEigen out;
    out.values.resize(n);
    out.vectors = DenseMatrix(n, n);
    for (std::size_t k = 0; k < n; ++k) {
        out.values[k] = a(idx[k], idx[k]);
        for (std::size_t i = 0; i < n; ++i) out.vectors(i, k) = v(i, idx[k]);
    }
    return out;
}

SymmetricEigen sym_generalized_eigen(const SparseMatrix& K, const SparseMatrix& M)
{
    if (!K.square() || !M.square() || K.rows() != M.rows()) throw DimensionError("sym_generalized_eigen: shape mismatch");
    const std::size_t n = K.rows();
    const DenseMatrix l = dense_cholesky(M.to_dense());
    const DenseMatrix linv = inverse(l);
    const DenseMatrix c = linv * K.to_dense() * linv.transpose();
    SymmetricEigen e = symmetric_eigen(c);
    // Back-transform: V = L^{-T} Y, which is M-orthonormal.
    DenseMatrix v = linv.transpose() * e.vectors;
    for (std::size_t k = 0; k < n; ++k) {
        double nrm2 = 0.0;
        const Vector col = [&] {
            Vector x(n);
            for (std::size_t i = 0; i < n; ++i) x[i] = v(i, k);
            return x;
        }();
        const Vector mx = M.apply(col);
        nrm2 = dot(col, mx);
        const double inv = 1.0 / std::sqrt(nrm2);
        for (std::size_t i = 0; i < n; ++i) v(i, k) *= inv;
    }
    e.vectors = std::move(v);
    return e;
}

double smallest_generalized_eigenvalue(const SparseMatrix& K, const SparseMatrix& M, double rel_tol,
                                       int max_iterations)
{
    const std::size_t n = K.rows();
    const Factorization kf = factorize(K, FactorKind::Spd);
    Vector x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = 1.0 + 0.01 * static_cast<double>(i % 7);
    double lambda = 0.0;
    for (int it = 0; it < max_iterations; ++it) {
        Vector y = kf.solve(M.apply(x));
        const double num = dot(y, K.apply(y));
        const double den = dot(y, M.apply(y));
        const double next = num / den;
        const double scale = 1.0 / std::sqrt(den);
        for (std::size_t i = 0; i < n; ++i) x[i] = y[i] * scale;
        if (it > 0 && std::abs(next - lambda) <= rel_tol * std::abs(next)) return next;
        lambda = next;
    }
    return lambda;
}

std::vector<std::complex<double>> eigenvalues(const DenseMatrix& a)
{
    if (!a.square()) throw DimensionError("eigenvalues: matrix not square");
    require_finite(a, "eigenvalues");
    const std::size_t n = a.rows();
    if (n == 0) return {};
    if (n == 1) return {a(0, 0)};
    if (n == 2) {
        const double tr = a(0, 0) + a(1, 1);
        const double det = a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0);
        return quadratic_roots(-tr, det);
    }
    DenseMatrix h = a;
    to_hessenberg(h);
    return hessenberg_qr(std::move(h));
}

double spectral_norm(const DenseMatrix& a)
{
    require_finite(a, "spectral_norm");
    if (a.rows() == 0 || a.cols() == 0) return 0.0;
    const auto e = symmetric_eigen(a.transpose() * a);
    return std::sqrt(std::max(0.0, e.values.back()));
}

double spectral_radius(const DenseMatrix& a)
{
    double r = 0.0;
    for (const auto& z : eigenvalues(a)) r = std::max(r, std::abs(z));
    return r;
}

} // namespace strudyn
