#include "qdisk/free_series.hpp"

namespace qdisk {

void MatrixTuple::validate() const {
  if (mats.empty()) throw error("empty matrix tuple");
  long d = mats[0].rows();
  for (auto& m : mats) {
    if (m.rows() != d || m.cols() != d) throw error("matrix tuple dimension mismatch");
    for (int k = 0; k < m.outerSize(); ++k)
      for (SparseMatrix::InnerIterator it(m, k); it; ++it)
        if (!std::isfinite(it.value().real()) || !std::isfinite(it.value().imag()))
          throw error("non-finite matrix entry");
  }
}

FockIndex::FockIndex(int n_, int depth_) : n(n_), depth(depth_) {
  if (n < 1 || depth < 1) throw error("fock: need n >= 1, depth >= 1");
  std::vector<Word> level{Word(n, {})};
  basis.push_back(level[0]);
  for (int d = 1; d <= depth; ++d) {
    std::vector<Word> next;
    for (auto& w : level)
      for (int l = 1; l <= n; ++l) {
        Word e = w;
        e.letters.push_back(static_cast<std::uint8_t>(l));
        next.push_back(e);
      }
    std::sort(next.begin(), next.end());
    for (auto& w : next) basis.push_back(w);
    level = std::move(next);
  }
  for (long i = 0; i < static_cast<long>(basis.size()); ++i) index[basis[i]] = i;
}

MatrixTuple fock_tuple(int n, double rho, int depth, long size_cap) {
  FockIndex fx(n, depth);
  long dim = fx.dimension();
  if (dim > size_cap)
    throw error("fock dimension " + std::to_string(dim) + " exceeds cap " +
                std::to_string(size_cap));
  MatrixTuple t;
  for (int i = 1; i <= n; ++i) {
    std::vector<Eigen::Triplet<std::complex<double>>> trip;
    for (long col = 0; col < dim; ++col) {
      const Word& w = fx.basis[col];
      if (w.length() >= depth) continue; // top degree maps to zero
      Word lifted(n, {});
      lifted.letters.push_back(static_cast<std::uint8_t>(i));
      lifted.letters.insert(lifted.letters.end(), w.letters.begin(), w.letters.end());
      trip.emplace_back(fx.index.at(lifted), col, std::complex<double>(rho, 0.0));
    }
    SparseMatrix m(dim, dim);
    m.setFromTriplets(trip.begin(), trip.end());
    t.mats.push_back(std::move(m));
  }
  return t;
}

double operator_norm_estimate(const SparseMatrix& m, int max_iters, double tol) {
  long dim = m.rows();
  if (dim == 0) return 0.0;
  Eigen::VectorXcd v = Eigen::VectorXcd::Ones(dim);
  v.normalize();
  double lambda = 0.0;
  SparseMatrix mh = SparseMatrix(m.adjoint());
  for (int it = 0; it < max_iters; ++it) {
    Eigen::VectorXcd w = mh * (m * v);
    double nw = w.norm();
    if (nw == 0.0) return 0.0;
    double next = nw; // Rayleigh quotient of M*M at unit v
    w /= nw;
    if (it > 0 && std::abs(next - lambda) <= tol * std::max(1.0, std::abs(next))) {
      lambda = next;
      break;
    }
    lambda = next;
    v = w;
  }
  return std::sqrt(lambda);
}

std::vector<double> sprad_profile(int n, const std::function<double(const Word&)>& norm_eval,
                                  int d_max) {
  std::vector<double> out;
  std::vector<Word> level{Word(n, {})};
  for (int d = 1; d <= d_max; ++d) {
    std::vector<Word> next;
    double sup = 0.0;
    for (auto& w : level)
      for (int l = 1; l <= n; ++l) {
        Word e = w;
        e.letters.push_back(static_cast<std::uint8_t>(l));
        sup = std::max(sup, norm_eval(e));
        next.push_back(std::move(e));
      }
    out.push_back(std::pow(sup, 1.0 / d));
    level = std::move(next);
  }
  return out;
}

} // namespace qdisk
