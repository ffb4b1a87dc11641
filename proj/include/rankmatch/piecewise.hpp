#pragma once

#include <cmath>
#include <functional>
#include <vector>

namespace rankmatch {

// Real function on [0,1] assembled from pieces, each differentiable on its
// closed span.  Piece i covers (edges[i], edges[i+1]]; evaluation at 0 uses
// piece 0 (the left-open right-closed convention of the step embedding).
// Piece formulas extend continuously to their segment endpoints, which lets
// quadrature evaluate one-sided limits at jumps.
class PiecewiseFunction {
 public:
  struct Piece {
    std::function<double(double)> value;
    std::function<double(double)> deriv;
  };

  PiecewiseFunction(std::vector<double> edges, std::vector<Piece> pieces);

  static PiecewiseFunction constant(double c);

  // n equal-width constant pieces over [0,1]: value values[t] on
  // ((t)/n, (t+1)/n].
  static PiecewiseFunction step(const std::vector<double>& values);

  double operator()(double theta) const;
  double derivative(double theta) const;

  int piece_count() const { return static_cast<int>(pieces_.size()); }
  int piece_containing(double theta) const;
  double value_in_piece(int piece, double theta) const {
    return pieces_[piece].value(theta);
  }
  double derivative_in_piece(int piece, double theta) const {
    return pieces_[piece].deriv(theta);
  }

  const std::vector<double>& edges() const { return edges_; }
  std::vector<double> interior_breakpoints() const;

 private:
  std::vector<double> edges_;   // edges_[0] == 0, edges_.back() == 1
  std::vector<Piece> pieces_;
};

// Compensated (Neumaier) accumulator; keeps long quadrature sums accurate to
// a few ulps independent of length.
class KahanAccumulator {
 public:
  void add(double v) {
    const double t = sum_ + v;
    comp_ += std::abs(sum_) >= std::abs(v) ? (sum_ - t) + v : (v - t) + sum_;
    sum_ = t;
  }
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

}  // namespace rankmatch
