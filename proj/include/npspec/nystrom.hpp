#pragma once

#include <iosfwd>
#include <vector>

#include "npspec/linalg.hpp"
#include "npspec/profile.hpp"

namespace npspec {

struct QuadratureGrid {
  int N;
  explicit QuadratureGrid(int n);
  double node(int q) const { return (q + 0.5) / N; }  // q = 0..N-1
  double weight() const { return 1.0 / N; }
};

struct NystromMatrix {
  ComplexMatrix matrix;
  double t = 0.0;
  int N = 0;
  int M = 0;
  Side side = Side::OneSided;
};

// Fourier coefficients in t of every matrix entry, reused across Bloch parameters.
class KernelTable {
public:
  KernelTable(const DilationGraph& graph, int N, int M, int workers = 1);

  NystromMatrix assemble(double t, int workers = 1) const;
  // ||B_N^M||_inf, the entrywise bound on the t-derivative.
  double derivative_bound_norm() const { return derivative_bound_; }

  int N() const { return N_; }
  int M() const { return M_; }
  int dim() const { return dim_; }
  Side side() const { return side_; }

private:
  struct Block {
    int row0 = 0;
    int col0 = 0;
    std::vector<double> coeff;  // ((p*N + q)*(2M+1) + j + M), already divided by N
  };

  int N_;
  int M_;
  int dim_;
  Side side_;
  std::vector<Block> blocks_;
  double derivative_bound_ = 0.0;
};

NystromMatrix assemble(const DilationGraph& graph, double t, int N, int M);
double assemble_derivative_bound(const DilationGraph& graph, int N, int M);

// Rows "p,q,re,im" with 1-based indices.
void write_matrix_csv(const NystromMatrix& A, std::ostream& out);

}  // namespace npspec
