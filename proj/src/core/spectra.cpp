#include "gnorm/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>

#include "gnorm/error.hpp"

namespace gnorm {

namespace {

inline double conj_of(double x) { return x; }
inline Complex conj_of(const Complex& z) { return std::conj(z); }
inline double sq_abs(double x) { return x * x; }
inline double sq_abs(const Complex& z) { return std::norm(z); }
inline double real_of(double x) { return x; }
inline double real_of(const Complex& z) { return z.real(); }

template <class T>
double off_diagonal_mass(const std::vector<T>& a, std::size_t n) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) s += sq_abs(a[i * n + j]);
  return std::sqrt(s);
}

// One rotation annihilating a(p,q). The off-diagonal entry is first rotated
// onto the positive real axis by a diagonal phase on index q, then a real
// Jacobi rotation is applied. Only eigenvalues are tracked.
template <class T>
void rotate(std::vector<T>& a, std::size_t n, std::size_t p, std::size_t q,
            bool late_sweep) {
  T& apq = a[p * n + q];
  const double r = std::sqrt(sq_abs(apq));
  if (r == 0.0) return;
  double app = real_of(a[p * n + p]);
  double aqq = real_of(a[q * n + q]);
  if (late_sweep && std::abs(app) + 100.0 * r == std::abs(app) &&
      std::abs(aqq) + 100.0 * r == std::abs(aqq)) {
    a[p * n + q] = T{};
    a[q * n + p] = T{};
    return;
  }
  const T phase = apq / r;  // |phase| = 1
  const double theta = (aqq - app) / (2.0 * r);
  double t = 1.0 / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
  if (theta < 0.0) t = -t;
  const double c = 1.0 / std::sqrt(t * t + 1.0);
  const double s = t * c;

  a[p * n + p] = app - t * r;
  a[q * n + q] = aqq + t * r;
  a[p * n + q] = T{};
  a[q * n + p] = T{};

  T* row_p = &a[p * n];
  T* row_q = &a[q * n];
  for (std::size_t k = 0; k < n; ++k) {
    if (k == p || k == q) continue;
    const T x = row_p[k];
    const T y = row_q[k] * phase;
    const T new_p = c * x - s * y;
    const T new_q = s * x + c * y;
    row_p[k] = new_p;
    row_q[k] = new_q;
    a[k * n + p] = conj_of(new_p);
    a[k * n + q] = conj_of(new_q);
  }
}

template <class T>
EigenSpectrum jacobi(std::vector<T> a, std::size_t n, double frobenius) {
  const double threshold = 1e-12 * (1.0 + frobenius);
  for (int sweep = 0;; ++sweep) {
    const double mass = off_diagonal_mass(a, n);
    if (mass < threshold) break;
    if (!std::isfinite(mass)) fail(ErrorCode::NoConvergence, "non-finite entries during Jacobi sweep");
    if (sweep == kMaxJacobiSweeps)
      fail(ErrorCode::NoConvergence,
           "Jacobi sweep limit reached at order " + std::to_string(n));
    for (std::size_t p = 0; p + 1 < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) rotate(a, n, p, q, sweep > 3);
  }
  EigenSpectrum out;
  out.values.resize(n);
  for (std::size_t i = 0; i < n; ++i) out.values[i] = real_of(a[i * n + i]);
  std::sort(out.values.begin(), out.values.end(), std::greater<>());
  return out;
}

double frobenius_of(std::span<const Complex> entries) {
  double s = 0.0;
  for (const Complex& z : entries) s += std::norm(z);
  return std::sqrt(s);
}

double max_modulus(std::span<const Complex> entries) {
  double s = 0.0;
  for (const Complex& z : entries) s = std::max(s, std::abs(z));
  return s;
}

bool hermitian_within_tolerance(const CMatrix& m) {
  return m.is_square() &&
         m.hermitian_defect() <= 1e-12 * (1.0 + max_modulus(m.entries()));
}

}  // namespace

EigenSpectrum hermitian_eigenvalues(const CMatrix& m) {
  if (!m.is_square())
    fail(ErrorCode::NotHermitian, "matrix is not square");
  if (!hermitian_within_tolerance(m))
    fail(ErrorCode::NotHermitian, "matrix is not Hermitian within tolerance");
  const std::size_t n = m.rows();
  const double frob = frobenius_of(m.entries());
  if (m.is_real()) {
    std::vector<double> a(n * n);
    for (std::size_t i = 0; i < n * n; ++i) a[i] = m.entries()[i].real();
    return jacobi(std::move(a), n, frob);
  }
  std::vector<Complex> a(m.entries().begin(), m.entries().end());
  for (std::size_t i = 0; i < n; ++i) a[i * n + i] = a[i * n + i].real();
  return jacobi(std::move(a), n, frob);
}

EigenSpectrum symmetric_eigenvalues(std::vector<double> a, std::size_t order) {
  if (a.size() != order * order)
    fail(ErrorCode::DimensionMismatch, "symmetric data size mismatch");
  double s = 0.0;
  for (double x : a) s += x * x;
  return jacobi(std::move(a), order, std::sqrt(s));
}

SingularSpectrum singular_values_from_eigen(const EigenSpectrum& eigen) {
  SingularSpectrum out;
  out.values.reserve(eigen.values.size());
  for (double v : eigen.values) out.values.push_back(std::abs(v));
  std::sort(out.values.begin(), out.values.end(), std::greater<>());
  return out;
}

SingularSpectrum singular_values(const CMatrix& a) {
  if (hermitian_within_tolerance(a))
    return singular_values_from_eigen(hermitian_eigenvalues(a));

  const CMatrix gram = a.rows() <= a.cols() ? gram_rows(a)
                                            : gram_rows(a.conjugate_transpose());
  double frob_sq = 0.0;
  for (const Complex& z : a.entries()) frob_sq += std::norm(z);

  EigenSpectrum eig = hermitian_eigenvalues(gram);
  SingularSpectrum out;
  out.values.reserve(eig.values.size());
  for (double v : eig.values) {
    if (v < 0.0) {
      if (v < -1e-9 * frob_sq)
        fail(ErrorCode::NoConvergence,
             "Gram matrix has a significantly negative eigenvalue");
      v = 0.0;
    }
    out.values.push_back(std::sqrt(v));
  }
  return out;
}

Complex allones_form(const CMatrix& a) {
  Complex sum{};
  for (const Complex& z : a.entries()) sum += z;
  return sum / std::sqrt(static_cast<double>(a.rows() * a.cols()));
}

double rayleigh_allones(const CMatrix& a) {
  const Complex v = allones_form(a);
  if (std::abs(v.imag()) > 1e-9 * (1.0 + std::abs(v)))
    fail(ErrorCode::NonRealRayleigh, "all-ones form has a nonzero imaginary part");
  return v.real();
}

}  // namespace gnorm
