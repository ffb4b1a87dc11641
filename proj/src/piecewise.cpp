#include "rankmatch/piecewise.hpp"

#include <algorithm>
#include <stdexcept>

namespace rankmatch {

PiecewiseFunction::PiecewiseFunction(std::vector<double> edges,
                                     std::vector<Piece> pieces)
    : edges_(std::move(edges)), pieces_(std::move(pieces)) {
  if (edges_.size() != pieces_.size() + 1 || pieces_.empty())
    throw std::invalid_argument("PiecewiseFunction: edge/piece mismatch");
  if (edges_.front() != 0.0 || edges_.back() != 1.0)
    throw std::invalid_argument("PiecewiseFunction: domain must be [0,1]");
  for (std::size_t i = 1; i < edges_.size(); ++i)
    if (!(edges_[i - 1] < edges_[i]))
      throw std::invalid_argument("PiecewiseFunction: edges not increasing");
}

PiecewiseFunction PiecewiseFunction::constant(double c) {
  return PiecewiseFunction(
      {0.0, 1.0}, {{[c](double) { return c; }, [](double) { return 0.0; }}});
}

PiecewiseFunction PiecewiseFunction::step(const std::vector<double>& values) {
  const int n = static_cast<int>(values.size());
  if (n < 1) throw std::invalid_argument("step: empty value list");
  std::vector<double> edges(n + 1);
  std::vector<Piece> pieces(n);
  for (int t = 0; t <= n; ++t) edges[t] = static_cast<double>(t) / n;
  edges[n] = 1.0;
  for (int t = 0; t < n; ++t) {
    const double v = values[t];
    pieces[t] = {[v](double) { return v; }, [](double) { return 0.0; }};
  }
  return PiecewiseFunction(std::move(edges), std::move(pieces));
}

int PiecewiseFunction::piece_containing(double theta) const {
  // Piece i covers (edges_[i], edges_[i+1]]; theta == 0 maps to piece 0.
  const auto it = std::lower_bound(edges_.begin(), edges_.end(), theta);
  if (it == edges_.begin()) return 0;
  const int idx = static_cast<int>(it - edges_.begin()) - 1;
  return std::min(idx, piece_count() - 1);
}

double PiecewiseFunction::operator()(double theta) const {
  return pieces_[piece_containing(theta)].value(theta);
}

double PiecewiseFunction::derivative(double theta) const {
  return pieces_[piece_containing(theta)].deriv(theta);
}

std::vector<double> PiecewiseFunction::interior_breakpoints() const {
  return {edges_.begin() + 1, edges_.end() - 1};
}

}  // namespace rankmatch
