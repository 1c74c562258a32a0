#include "qec/random.h"

#include <cmath>

namespace qec {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

}  // namespace

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
  return splitmix64(splitmix64(master) ^ splitmix64(index + 0x632BE59BD9B4E019ULL));
}

Rng make_stream(std::uint64_t master, std::uint64_t index) { return Rng(derive_seed(master, index)); }

Amplitudes random_gaussian_vector(std::size_t dim, Rng& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Amplitudes v(static_cast<Eigen::Index>(dim));
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    const double re = gauss(rng);
    const double im = gauss(rng);
    v[i] = Complex(re, im);
  }
  return v;
}

StateVector random_state(int n, Rng& rng) {
  check_num_qubits(n);
  return StateVector::normalized(n, random_gaussian_vector(dimension_of(n), rng));
}

Matrix2 random_unitary(Rng& rng) {
  // QR of a Ginibre matrix with the phases of R's diagonal divided out.
  Matrix2 g;
  const Amplitudes entries = random_gaussian_vector(4, rng);
  g << entries[0], entries[1], entries[2], entries[3];
  Eigen::HouseholderQR<Matrix2> qr(g);
  Matrix2 q = qr.householderQ();
  const Matrix2 r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int i = 0; i < 2; ++i) {
    const Complex d = r(i, i);
    const double mag = std::abs(d);
    if (mag > 0) q.col(i) *= d / mag;
  }
  return q;
}

}  // namespace qec
