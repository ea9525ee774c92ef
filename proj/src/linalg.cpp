#include "qnk/linalg.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/SVD>

namespace qnk {

Mat kron(const Mat& a, const Mat& b) {
    Mat out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

Mat swap_op(int n) {
    Mat p = Mat::Zero(n * n, n * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            p(j * n + i, i * n + j) = 1.0;
    return p;
}

int numerical_rank(const Mat& a, double rel_cutoff) {
    Eigen::JacobiSVD<Mat> svd(a);
    const auto& s = svd.singularValues();
    if (s.size() == 0 || s(0) == 0.0) return 0;
    const double cut = rel_cutoff * s(0);
    int r = 0;
    while (r < s.size() && s(r) > cut) ++r;
    return r;
}

Mat orthonormal_image(const Mat& a, double rel_cutoff, int* rank_out) {
    Eigen::JacobiSVD<Mat> svd(a, Eigen::ComputeThinU);
    const auto& s = svd.singularValues();
    int r = 0;
    if (s.size() > 0 && s(0) > 0.0) {
        const double cut = rel_cutoff * s(0);
        while (r < s.size() && s(r) > cut) ++r;
    }
    if (rank_out) *rank_out = r;
    return svd.matrixU().leftCols(r);
}

double largest_principal_angle(const Mat& a, const Mat& b) {
    if (a.cols() == 0 && b.cols() == 0) return 0.0;
    if (a.cols() == 0 || b.cols() == 0) return 1.5707963267948966;
    const Mat c = b.adjoint() * a;                       // cosines
    Eigen::JacobiSVD<Mat> svd_c(c);
    const double cos_min = svd_c.singularValues().minCoeff();
    const Mat res = a - b * c;                           // sines
    Eigen::JacobiSVD<Mat> svd_s(res);
    const double sin_max = svd_s.singularValues().maxCoeff();
    if (sin_max < 0.7)
        return std::asin(std::min(1.0, sin_max));
    return std::acos(std::clamp(cos_min, -1.0, 1.0));
}

} // namespace qnk
