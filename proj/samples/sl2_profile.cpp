// Cusp profile and trajectory cover of a diagonal orbit in SL_2(R)/SL_2(Z).
#include <iostream>

#include "cuspwatch/cuspwatch.hpp"

using namespace cuspwatch;

int main() {
  QMat g{{Rational(1), Rational(1, 3)}, {Rational(0), Rational(1)}};
  SubgroupSpec a = SubgroupSpec::full_torus(2);
  auto cands = enumerate_radicals(2, 6);

  std::cout << "t, min log||Ad(a g) p||, minimizing line\n";
  for (const auto& p : cusp_profile(g, a.basis, box_grid({Rational(-4)}, {Rational(4)}, Rational(1)), cands)) {
    const auto& r = cands[p.argmin];
    std::cout << p.t[0] << ", " << p.value.decimal(12) << ", span(" << r.basis[0][0] << "," << r.basis[0][1] << ")\n";
  }

  // elements meeting the box |t| <= 2, with C0 = 1
  auto local = enumerate_local(g, a, Rational(2), Rational(1), 6);
  auto cover = build_cover(g, a, local, Rational(1));
  std::cout << "\n" << cover.size() << " cover elements meet |t| <= 2\n";
  for (const auto& e : cover) {
    std::cout << "  line (" << e.witness.basis[0][0] << "," << e.witness.basis[0][1] << "):";
    for (std::size_t i = 0; i < e.psi.size(); ++i)
      std::cout << " " << e.functionals[i][0] << "*t >= " << e.d(i).symbolic() << " + f(|t|)";
    std::cout << "\n";
  }
  SubcoverReport rep = verify_subcover(cover, 1, Rational(2), Rational(1, 4),
                                       BorderedSet(1, {{Rational(1)}, {Rational(-1)}}, {Rational(1), Rational(1)}));
  std::cout << "grid points of [-2,2] in no element: " << rep.gaps.size() << " of " << rep.checked << "\n";

  DivergenceCertificate c = check_certificate(a, search_witnesses(g, a, 6));
  std::cout << "obviously divergent: " << (c.certified ? "yes" : "no") << "\n";
  return 0;
}
