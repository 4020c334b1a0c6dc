// The quaternionic lattice in SL_4: periodicity, Gr+ and a divergence certificate.
#include <iostream>

#include "cuspwatch/cuspwatch.hpp"

using namespace cuspwatch;

namespace {

void show(const QVec& alpha) {
  GrPlus gp = gr_plus(alpha);
  VgReport vg = v_g_check(alpha);
  std::cout << "alpha = (" << alpha[0] << "," << alpha[1] << "," << alpha[2] << "," << alpha[3] << ")\n"
            << "  Gr+ component X(" << gp.max.first << "," << gp.max.second << "), dim " << gp.dim << "\n"
            << "  dim V_G = " << vg.dim_vg << " (stabilizer " << vg.stabilizer << ")\n";
  Sl4Demo d = sl4_divergence_demo(alpha, QMat::identity(4));
  std::cout << "  certificate: " << (d.certificate.certified ? "divergent" : "not certified") << ", "
            << d.certificate.fan.size() << " fan faces\n";
}

}  // namespace

int main() {
  PeriodicityReport p = verify_periodicity();
  std::cout << "periodicity identity: " << (p.ok ? "holds" : "fails") << "\n";
  for (std::size_t i = 0; i < 4; ++i) std::cout << "  " << p.conjugated(i, i).str() << "\n";

  std::cout << "iota(i) =\n";
  QuadMat m = iota(Quaternion::basis(1));
  for (std::size_t r = 0; r < 2; ++r) std::cout << "  " << m(r, 0).str() << "  " << m(r, 1).str() << "\n";

  show(QVec{Rational(-3), Rational(-1), Rational(1), Rational(3)});
  show(QVec{Rational(-3), Rational(-2), Rational(1), Rational(4)});
  return 0;
}
