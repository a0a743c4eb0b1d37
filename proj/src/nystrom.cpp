#include "npspec/nystrom.hpp"

#include <cmath>
#include <ostream>
#include <stdexcept>

#include "npspec/kernel.hpp"
#include "npspec/parallel.hpp"

namespace npspec {

QuadratureGrid::QuadratureGrid(int n) : N(n) {
  if (n < 1) throw std::invalid_argument("quadrature grid needs N >= 1");
}

KernelTable::KernelTable(const DilationGraph& graph, int N, int M, int workers)
    : N_(N), M_(M), dim_(graph.two_sided_graph() ? 2 * N : N), side_(graph.side) {
  if (N < 1) throw std::invalid_argument("N must be positive");
  if (M < 2) throw std::invalid_argument("truncation M must be at least 2");
  const QuadratureGrid grid(N);
  const int J = 2 * M + 1;
  const double la = graph.plus.log_alpha();
  std::vector<double> aj(J);
  for (int i = 0; i < J; ++i) aj[i] = std::pow(graph.alpha(), i - M);

  auto samples = [&](const PeriodicProfile& g) {
    std::vector<NodeSample> s(N);
    for (int q = 0; q < N; ++q) s[q] = sample_node(g, grid.node(q));
    return s;
  };

  struct BlockSpec {
    const PeriodicProfile* row;
    const PeriodicProfile* col;
    bool diagonal;
    int row0, col0;
  };
  std::vector<BlockSpec> specs;
  if (graph.two_sided_graph()) {
    const PeriodicProfile* gm = &*graph.minus;
    const PeriodicProfile* gp = &graph.plus;
    specs = {{gm, gm, true, 0, 0}, {gm, gp, false, 0, N}, {gp, gm, false, N, 0},
             {gp, gp, true, N, N}};
  } else {
    specs = {{&graph.plus, &graph.plus, true, 0, 0}};
  }

  std::vector<double> bound_rows(dim_, 0.0);
  for (const BlockSpec& sp : specs) {
    const auto xs = samples(*sp.row);
    const auto ys = samples(*sp.col);
    Block blk{sp.row0, sp.col0, std::vector<double>(static_cast<std::size_t>(N) * N * J)};
    parallel_for(N, workers, [&](std::size_t p) {
      for (int q = 0; q < N; ++q) {
        double* c = &blk.coeff[(p * N + q) * J];
        for (int i = 0; i < J; ++i) {
          const double v = sp.diagonal ? term_one_sided(*sp.row, aj[i], la, xs[p], ys[q])
                                       : term_off(aj[i], la, xs[p], ys[q]);
          c[i] = v / N;
        }
      }
    });
    bool zero = true;
    for (double v : blk.coeff)
      if (v != 0.0) {
        zero = false;
        break;
      }
    if (zero) continue;
    for (int p = 0; p < N; ++p) {
      double s = 0.0;
      for (int q = 0; q < N; ++q) {
        const double* c = &blk.coeff[(static_cast<std::size_t>(p) * N + q) * J];
        for (int i = 0; i < J; ++i) s += std::abs(i - M) * std::abs(c[i]);
      }
      bound_rows[sp.row0 + p] += s;
    }
    blocks_.push_back(std::move(blk));
  }
  for (double r : bound_rows) derivative_bound_ = std::max(derivative_bound_, r);
}

NystromMatrix KernelTable::assemble(double t, int workers) const {
  NystromMatrix out;
  out.matrix = ComplexMatrix::Zero(dim_, dim_);
  out.t = t;
  out.N = N_;
  out.M = M_;
  out.side = side_;
  const int J = 2 * M_ + 1;
  const double zr = std::cos(t), zi = std::sin(t);
  const cplx shift = std::polar(1.0, -M_ * t);
  for (const Block& blk : blocks_) {
    parallel_for(N_, workers, [&](std::size_t p) {
      for (int q = 0; q < N_; ++q) {
        const double* c = &blk.coeff[(p * N_ + q) * J];
        double re = 0.0, im = 0.0;
        for (int i = J - 1; i >= 0; --i) {
          const double nr = re * zr - im * zi + c[i];
          im = re * zi + im * zr;
          re = nr;
        }
        out.matrix(blk.row0 + p, blk.col0 + q) = cplx(re, im) * shift;
      }
    });
  }
  return out;
}

NystromMatrix assemble(const DilationGraph& graph, double t, int N, int M) {
  return KernelTable(graph, N, M).assemble(t);
}

double assemble_derivative_bound(const DilationGraph& graph, int N, int M) {
  return KernelTable(graph, N, M).derivative_bound_norm();
}

void write_matrix_csv(const NystromMatrix& A, std::ostream& out) {
  out << "p,q,re,im\n";
  out.precision(17);
  for (Eigen::Index p = 0; p < A.matrix.rows(); ++p)
    for (Eigen::Index q = 0; q < A.matrix.cols(); ++q)
      out << p + 1 << "," << q + 1 << "," << A.matrix(p, q).real() << ","
          << A.matrix(p, q).imag() << "\n";
}

}  // namespace npspec
