// Matrix exponential by scaling and squaring with diagonal Pade approximants,
// degree chosen from the 1-norm (Higham's [3/5/7/9/13] ladder). This is the
// reference path used to cross-check network evaluation; nothing in the
// network fast path calls it.

#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <stdexcept>

namespace qcpu {
namespace detail {

template <typename Mat>
void expm_pade3(const Mat& a, const Mat& a2, Mat& u, Mat& v) {
  using Real = typename Eigen::NumTraits<typename Mat::Scalar>::Real;
  const Real b[] = {120, 60, 12, 1};
  const Mat ident = Mat::Identity(a.rows(), a.cols());
  u.noalias() = a * (b[3] * a2 + b[1] * ident);
  v = b[2] * a2 + b[0] * ident;
}

template <typename Mat>
void expm_pade5(const Mat& a, const Mat& a2, Mat& u, Mat& v) {
  using Real = typename Eigen::NumTraits<typename Mat::Scalar>::Real;
  const Real b[] = {30240, 15120, 3360, 420, 30, 1};
  const Mat a4 = a2 * a2;
  const Mat ident = Mat::Identity(a.rows(), a.cols());
  u.noalias() = a * (b[5] * a4 + b[3] * a2 + b[1] * ident);
  v = b[4] * a4 + b[2] * a2 + b[0] * ident;
}

template <typename Mat>
void expm_pade7(const Mat& a, const Mat& a2, Mat& u, Mat& v) {
  using Real = typename Eigen::NumTraits<typename Mat::Scalar>::Real;
  const Real b[] = {17297280, 8648640, 1995840, 277200, 25200, 1512, 56, 1};
  const Mat a4 = a2 * a2;
  const Mat a6 = a4 * a2;
  const Mat ident = Mat::Identity(a.rows(), a.cols());
  u.noalias() = a * (b[7] * a6 + b[5] * a4 + b[3] * a2 + b[1] * ident);
  v = b[6] * a6 + b[4] * a4 + b[2] * a2 + b[0] * ident;
}

template <typename Mat>
void expm_pade9(const Mat& a, const Mat& a2, Mat& u, Mat& v) {
  using Real = typename Eigen::NumTraits<typename Mat::Scalar>::Real;
  const Real b[] = {17643225600., 8821612800., 2075673600., 302702400., 30270240.,
                    2162160.,     110880.,     3960.,       90.,        1.};
  const Mat a4 = a2 * a2;
  const Mat a6 = a4 * a2;
  const Mat a8 = a6 * a2;
  const Mat ident = Mat::Identity(a.rows(), a.cols());
  u.noalias() = a * (b[9] * a8 + b[7] * a6 + b[5] * a4 + b[3] * a2 + b[1] * ident);
  v = b[8] * a8 + b[6] * a6 + b[4] * a4 + b[2] * a2 + b[0] * ident;
}

template <typename Mat>
void expm_pade13(const Mat& a, const Mat& a2, Mat& u, Mat& v) {
  using Real = typename Eigen::NumTraits<typename Mat::Scalar>::Real;
  const Real b[] = {64764752532480000., 32382376266240000., 7771770303897600.,
                    1187353796428800.,  129060195264000.,   10559470521600.,
                    670442572800.,      33522128640.,       1323241920.,
                    40840800.,          960960.,            16380.,
                    182.,               1.};
  const Mat a4 = a2 * a2;
  const Mat a6 = a4 * a2;
  const Mat ident = Mat::Identity(a.rows(), a.cols());
  Mat tmp = b[13] * a6 + b[11] * a4 + b[9] * a2;
  u.noalias() = a6 * tmp;
  u += b[7] * a6 + b[5] * a4 + b[3] * a2 + b[1] * ident;
  u = a * u;
  tmp.noalias() = a6 * (b[12] * a6 + b[10] * a4 + b[8] * a2);
  v = tmp + b[6] * a6 + b[4] * a4 + b[2] * a2 + b[0] * ident;
}

}  // namespace detail

/// exp(A) for a square matrix A, accurate to machine precision at the norms
/// seen here. Nilpotent input of order two (A*A = 0) comes out as I + A with
/// only solve-level rounding, which several identity tests rely on.
template <typename Derived>
typename Eigen::MatrixBase<Derived>::PlainObject expm(const Eigen::MatrixBase<Derived>& input) {
  using Mat = typename Eigen::MatrixBase<Derived>::PlainObject;
  if (input.rows() != input.cols()) throw std::invalid_argument("expm: matrix must be square");

  Mat a = input.derived();
  const double norm1 = a.cwiseAbs().colwise().sum().maxCoeff();

  int squarings = 0;
  if (norm1 > 5.371920351148152) {
    squarings = std::max(0, static_cast<int>(std::ceil(std::log2(norm1 / 5.371920351148152))));
    a /= typename Mat::Scalar(std::ldexp(1.0, squarings));
  }

  Mat u(a.rows(), a.cols()), v(a.rows(), a.cols());
  const Mat a2 = a * a;
  if (norm1 <= 1.495585217958292e-2 && squarings == 0)
    detail::expm_pade3(a, a2, u, v);
  else if (norm1 <= 2.539398330063230e-1 && squarings == 0)
    detail::expm_pade5(a, a2, u, v);
  else if (norm1 <= 9.504178996162932e-1 && squarings == 0)
    detail::expm_pade7(a, a2, u, v);
  else if (norm1 <= 2.097847961257068 && squarings == 0)
    detail::expm_pade9(a, a2, u, v);
  else
    detail::expm_pade13(a, a2, u, v);

  // (v - u) x = (v + u) is the Pade rational evaluation.
  Mat numer = v + u;
  Mat denom = v - u;
  Mat result = denom.partialPivLu().solve(numer);
  for (int i = 0; i < squarings; ++i) result = result * result;
  return result;
}

}  // namespace qcpu
