#include <gtest/gtest.h>

#include <cmath>
#include <set>

#include "cuspwatch/radicals/radicals.hpp"
#include "oracles/minors.hpp"
#include "oracles/radical_oracle.hpp"
#include "oracles/random.hpp"

using namespace cuspwatch;

namespace {

QVec qv(std::initializer_list<long> xs) { return to_qvec(std::vector<long>(xs)); }

Character ad_weight(const RadicalWitness& r) {
  EXPECT_EQ(r.weights_ad.size(), 1u);
  return r.weights_ad.front();
}

bool same_span(const std::vector<QVec>& a, const std::vector<QVec>& b) {
  std::vector<QVec> all = a;
  all.insert(all.end(), b.begin(), b.end());
  return rank_of_vectors(a) == rank_of_vectors(b) && rank_of_vectors(all) == rank_of_vectors(a);
}

bool contained(const std::vector<QVec>& small, const std::vector<QVec>& big) {
  std::vector<QVec> all = big;
  all.insert(all.end(), small.begin(), small.end());
  return rank_of_vectors(all) == rank_of_vectors(big);
}

}  // namespace

TEST(Character, CanonicalModuloAllOnes) {
  EXPECT_EQ(Character({1, -1}), Character({2, 0}));
  EXPECT_EQ(Character({3, 3, 3}), Character::zero(3));
  Character c({2, 0, 1});
  EXPECT_EQ(c(qv({1, 1, -2})), 2 + 0 - 2);
  EXPECT_EQ((c + Character({1, 1, 1}))(qv({1, 1, -2})), c(qv({1, 1, -2})));
  EXPECT_EQ(Character::root(3, 0, 2).str(), "2s1+s2");
}

TEST(SlBasis, CoordinatesRoundTrip) {
  SlBasis sl(3);
  EXPECT_EQ(sl.dim(), 8u);
  QMat m = qmat({{1, 2, 3}, {4, 5, 6}, {7, 8, -6}});
  EXPECT_EQ(sl.matrix(sl.coords(m)), m);
  EXPECT_THROW(sl.coords(QMat::identity(3)), PreconditionError);
  EXPECT_EQ(sl.weight(sl.index(0, 1)), Character::root(3, 0, 1));
  EXPECT_TRUE(sl.weight(sl.index(1, 1)).is_zero());
}

TEST(Radicals, StandardSL2) {
  auto r = standard_radical(2, 1);
  EXPECT_EQ(r.dim_u(), 1u);
  SlBasis sl(2);
  EXPECT_EQ(r.p_ad, QWedge::basis(3, {sl.index(0, 1)}));
  // Ad(diag(e^s, e^-s)) E12 = e^{2s} E12
  EXPECT_EQ(ad_weight(r)(qv({1, -1})), 2);
  EXPECT_EQ(r.p_std, QWedge::basis(2, {0}));
}

TEST(Radicals, StandardSL4TypeTwo) {
  auto r = standard_radical(4, 2);
  EXPECT_EQ(r.dim_u(), 4u);
  EXPECT_EQ(ad_weight(r), 4 * std_weight(4, {0, 1}));
  // on g_s = diag(s, s, -s, -s) the eigenvalue is e^{8s}
  EXPECT_EQ(ad_weight(r)(qv({1, 1, -1, -1})), 8);
  SlBasis sl(4);
  std::vector<QVec> elems;
  for (std::size_t a = 0; a < 2; ++a)
    for (std::size_t b = 2; b < 4; ++b) elems.push_back(unit_vector<Rational>(sl.dim(), sl.index(a, b)));
  EXPECT_EQ(r.p_ad, primitive(wedge(elems, sl.dim())));
}

TEST(Radicals, StandardSL3TypeOne) {
  auto r = standard_radical(3, 1);
  // (s1 - s2) + (s1 - s3) as the oracle sum of roots
  Character oracle = Character::root(3, 0, 1) + Character::root(3, 0, 2);
  EXPECT_EQ(ad_weight(r), oracle);
  EXPECT_EQ(ad_weight(r), 3 * Character::unit(3, 0));
}

TEST(Radicals, AdjointWeightIsNTimesStandard) {
  for (std::size_t n = 2; n <= 6; ++n)
    for (std::size_t j = 1; j < n; ++j) {
      auto r = standard_radical(n, j);
      ASSERT_EQ(r.weights_std.size(), 1u);
      EXPECT_EQ(ad_weight(r), static_cast<std::int64_t>(n) * r.weights_std.front()) << n << "," << j;
    }
}

TEST(Radicals, RejectsBadTypes) {
  EXPECT_THROW(standard_radical(3, 0), PreconditionError);
  EXPECT_THROW(standard_radical(3, 3), PreconditionError);
  EXPECT_THROW(radical_from_subspace({qv({0, 0, 0})}), PreconditionError);
  EXPECT_THROW(radical_from_subspace({qv({1, 0}), qv({0, 1})}), PreconditionError);
}

TEST(Radicals, FromSubspaceMatchesStandard) {
  auto r = radical_from_subspace({qv({1, 0, 0, 0}), qv({0, 1, 0, 0})});
  auto s = standard_radical(4, 2);
  EXPECT_EQ(r.p_ad, s.p_ad);
  EXPECT_EQ(r.p_std, s.p_std);
}

TEST(Radicals, LineInPlaneIsLowerRadical) {
  auto r = radical_from_subspace({qv({0, 1})});
  SlBasis sl(2);
  EXPECT_EQ(r.p_ad, QWedge::basis(3, {sl.index(1, 0)}));
  EXPECT_TRUE(same_span(r.factors, oracle::radical_by_linear_conditions({qv({0, 1})})));
}

TEST(Radicals, DiagonalPlanePlucker) {
  auto r = radical_from_subspace({qv({1, 0, 1, 0}), qv({0, 1, 0, 1})});
  auto coords = oracle::direct_plucker_coords({qv({1, 0, 1, 0}), qv({0, 1, 0, 1})});
  EXPECT_EQ(r.p_std.dense(), to_qvec(primitive_integer_signed(coords)));
}

TEST(Radicals, RadicalMatchesLinearConditionsOracle) {
  oracle::Rng rng(12);
  for (int trial = 0; trial < 40; ++trial) {
    std::size_t n = 2 + static_cast<std::size_t>(trial % 3);
    std::size_t j = 1 + static_cast<std::size_t>(rng.integer(0, static_cast<long>(n) - 2));
    std::vector<QVec> vs;
    for (std::size_t i = 0; i < j; ++i) {
      QVec v;
      for (std::size_t k = 0; k < n; ++k) v.push_back(rng.rational(3));
      vs.push_back(v);
    }
    if (rank_of_vectors(vs) < j) continue;
    auto r = radical_from_subspace(vs);
    EXPECT_EQ(r.factors.size(), j * (n - j));
    EXPECT_TRUE(same_span(r.factors, oracle::radical_by_linear_conditions(vs)));
    EXPECT_EQ(r.p_std, plucker(vs, n));
    // integrality: factors are integer matrices
    for (const auto& f : r.factors)
      for (const auto& x : f) EXPECT_TRUE(is_integer(x));
  }
}

TEST(Radicals, EquivarianceUnderIntegralConjugation) {
  oracle::Rng rng(41);
  for (int trial = 0; trial < 20; ++trial) {
    QMat h = rng.sl_z(4, 8, 2);
    std::vector<QVec> vs{qv({1, 0, 2, -1}), qv({0, 1, 1, 3})};
    if (trial % 2) vs.pop_back();
    auto r = radical_from_subspace(vs);
    std::vector<QVec> hv;
    for (const auto& v : vs) hv.push_back(h * v);
    auto rh = radical_from_subspace(hv);
    EXPECT_EQ(rh.p_ad, primitive(ad_image(r, h)));
    // unimodular h keeps the lattice: the image is already primitive up to sign
    EXPECT_EQ(max_abs(ad_image(r, h)), max_abs(rh.p_ad));
  }
}

TEST(Radicals, GramDeterminantIdentity) {
  // the search prefilter rests on Gram_F(Ad(g) u_Z) = ||wedge^j(g) p_std||_2^{2n}
  oracle::Rng rng(6);
  for (int trial = 0; trial < 12; ++trial) {
    std::size_t n = 2 + static_cast<std::size_t>(trial % 3);
    QMat g = rng.sl(n, 3);
    std::size_t j = 1 + static_cast<std::size_t>(trial % (n - 1));
    std::vector<QVec> vs;
    for (std::size_t i = 0; i < j; ++i) {
      QVec v;
      for (std::size_t k = 0; k < n; ++k) v.push_back(rng.integer(-2, 2));
      vs.push_back(v);
    }
    if (rank_of_vectors(vs) < j) continue;
    auto r = radical_from_subspace(vs);
    SlBasis sl(n);
    QMat ginv = inverse(g);
    std::vector<QVec> imgs;
    for (const auto& f : r.factors) imgs.push_back(sl.coords(g * sl.matrix(f) * ginv));
    QMat gram(imgs.size(), imgs.size());
    for (std::size_t a = 0; a < imgs.size(); ++a)
      for (std::size_t b = 0; b < imgs.size(); ++b) gram(a, b) = oracle::frobenius(sl, imgs[a], imgs[b]);
    QVec img = wedge_power(g, j) * r.p_std.dense();
    EXPECT_EQ(det(gram), power(dot(img, img), static_cast<long>(n)));
  }
}

TEST(Enumeration, CountsPrimitiveLines) {
  std::size_t count = 0;
  for_each_subspace(2, 1, 3, [&](const QWedge&, const std::function<std::vector<QVec>()>&) { ++count; });
  // primitive (p,q), max(|p|,|q|) <= 3, up to sign: 2 + 2*#{coprime pairs in [1,3]^2}
  std::size_t oracle_count = 0;
  for (long p = -3; p <= 3; ++p)
    for (long q = -3; q <= 3; ++q)
      if (std::gcd(p, q) == 1 && (p > 0 || (p == 0 && q > 0))) ++oracle_count;
  EXPECT_EQ(count, oracle_count);
  EXPECT_EQ(count, 16u);
}

TEST(Enumeration, PlanesInQ4AreDecomposableAndDistinct) {
  std::set<QVec> seen;
  for_each_subspace(4, 2, 1, [&](const QWedge& p, const std::function<std::vector<QVec>()>& basis) {
    auto b = basis();
    EXPECT_EQ(plucker(b, 4), p);
    EXPECT_TRUE(seen.insert(p.dense()).second);
  });
  EXPECT_GT(seen.size(), 50u);
  // the generic path agrees with the Pluecker-relation fast path on Gr(3,5) duals
  std::size_t planes35 = 0;
  for_each_subspace(5, 2, 1, [&](const QWedge& p, const std::function<std::vector<QVec>()>& basis) {
    EXPECT_EQ(plucker(basis(), 5), p);
    ++planes35;
  });
  EXPECT_GT(planes35, 0u);
}

TEST(Enumeration, UniverseGuard) {
  EXPECT_THROW(for_each_subspace(5, 2, 10, [](const QWedge&, const std::function<std::vector<QVec>()>&) {}),
               PreconditionError);
}

TEST(ActiveRadicals, IdentityHasNone) {
  SearchOptions opt;
  opt.height = 2;
  for (std::size_t n = 2; n <= 4; ++n) EXPECT_TRUE(active_radicals(QMat::identity(n), Rational(1, 2), opt).empty());
  opt.mode = SearchMode::ReductionAssisted;
  EXPECT_TRUE(active_radicals(QMat::identity(3), Rational(1, 2), opt).empty());
  EXPECT_THROW(active_radicals(QMat::identity(2), Rational(0), opt), PreconditionError);
}

TEST(ActiveRadicals, DiagonalSL2) {
  QMat g = QMat::diagonal({Rational(1, 4), Rational(4)});
  SearchOptions opt;
  opt.height = 5;
  auto found = active_radicals(g, Rational(1, 10), opt);
  ASSERT_EQ(found.size(), 1u);
  EXPECT_EQ(found[0].witness.p_std, QWedge::basis(2, {0}));
  // oracle: g E12 g^-1 = (1/4)/4 E12
  QMat e12 = qmat({{0, 1}, {0, 0}});
  EXPECT_EQ((g * e12 * inverse(g))(0, 1), Rational(1, 16));
  EXPECT_EQ(found[0].norm, Rational(1, 16));
}

TEST(ActiveRadicals, BruteForceAndReductionAgreeSL3) {
  QMat g = QMat::diagonal({Rational(1, 4), Rational(1), Rational(4)});
  SearchOptions brute;
  brute.height = 5;
  SearchOptions red;
  red.mode = SearchMode::ReductionAssisted;
  auto a = active_radicals(g, Rational(1, 10), brute);
  auto b = active_radicals(g, Rational(1, 10), red);
  ASSERT_EQ(a.size(), b.size());
  ASSERT_FALSE(a.empty());
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].witness.p_std, b[i].witness.p_std);
    EXPECT_EQ(a[i].norm, b[i].norm);
  }
}

TEST(ActiveRadicals, PrefilterIsSound) {
  // brute force with the prefilter equals a filter-free scan of all candidates
  oracle::Rng rng(19);
  for (int trial = 0; trial < 6; ++trial) {
    QMat g = rng.sl(3, 3) * QMat::diagonal({Rational(1, 9), Rational(1), Rational(9)});
    SearchOptions opt;
    opt.height = 3;
    Rational eps(1, 5);
    auto fast = active_radicals(g, eps, opt);
    std::vector<QWedge> slow;
    for (const auto& w : enumerate_radicals(3, 3))
      if (ad_norm(w, g) < eps) slow.push_back(w.p_std);
    ASSERT_EQ(fast.size(), slow.size());
  }
}

TEST(ActiveRadicals, KroneckerCoordinateIdentity) {
  // coordinate at positions A x A^c of wedge Ad(g) p_ad is +-P_A^n
  oracle::Rng rng(4);
  for (int trial = 0; trial < 10; ++trial) {
    std::size_t n = 3 + static_cast<std::size_t>(trial % 2);
    std::size_t j = 1 + static_cast<std::size_t>(trial % (n - 1));
    QMat g = rng.sl(n, 3);
    std::vector<QVec> vs;
    for (std::size_t i = 0; i < j; ++i) {
      QVec v;
      for (std::size_t k = 0; k < n; ++k) v.push_back(rng.integer(-2, 2));
      vs.push_back(v);
    }
    if (rank_of_vectors(vs) < j) continue;
    auto r = radical_from_subspace(vs);
    QWedge img = ad_image(r, g);
    QVec p = wedge_power(g, j) * r.p_std.dense();
    SlBasis sl(n);
    auto tuples = combinations(n, j);
    for (std::size_t a = 0; a < tuples.size(); ++a) {
      Tuple pos;
      for (auto x : tuples[a])
        for (std::size_t y = 0; y < n; ++y)
          if (std::find(tuples[a].begin(), tuples[a].end(), y) == tuples[a].end()) pos.push_back(sl.index(x, y));
      std::sort(pos.begin(), pos.end());
      EXPECT_EQ(abs(img.coeff(pos)), abs(power(p[a], static_cast<long>(n))));
    }
  }
}

TEST(ActiveRadicals, NormProxyAllowsManyActiveLines) {
  // g = diag(1/3, 1/3, 3, 3): lines e1 and e2 both have norm 3^-4 < 1/10
  QMat g = QMat::diagonal({Rational(1, 3), Rational(1, 3), Rational(3), Rational(3)});
  SearchOptions opt;
  opt.height = 1;
  auto found = active_radicals(g, Rational(1, 10), opt);
  std::size_t lines = 0;
  for (const auto& f : found)
    if (f.witness.j == 1) ++lines;
  EXPECT_GE(lines, 2u);
  // but their integral radical lattices are not small: E12 is fixed by g
  EXPECT_FALSE(lattice_active(radical_from_subspace({qv({1, 0, 0, 0})}), g, Rational(1, 10)));
}

TEST(ActiveRadicals, LatticeActiveRadicalsFormFlags) {
  // lattice-active radicals span a unipotent subspace pairwise, so they are
  // nested, of distinct types, and at most n-1 of them exist
  oracle::Rng rng(23);
  std::size_t nonempty = 0;
  for (int trial = 0; trial < 30; ++trial) {
    std::size_t n = 2 + static_cast<std::size_t>(trial % 3);
    QVec d;
    Rational prod(1);
    for (std::size_t i = 0; i + 1 < n; ++i) {
      d.push_back(power(Rational(rng.integer(1, 8), rng.integer(1, 8)), 2));
      prod *= d.back();
    }
    d.push_back(1 / prod);
    QMat g = QMat::diagonal(d) * rng.sl_z(n, 3, 2);
    SearchOptions opt;
    opt.height = n == 4 ? 2 : 5;
    Rational delta(1, 2 * static_cast<long>(n) + 1);
    std::vector<RadicalWitness> act;
    for (auto& f : active_radicals(g, Rational(1, 10), opt))
      if (lattice_active(f.witness, g, delta)) act.push_back(f.witness);
    if (!act.empty()) ++nonempty;
    EXPECT_LE(act.size(), n - 1);
    for (std::size_t a = 0; a < act.size(); ++a)
      for (std::size_t b = a + 1; b < act.size(); ++b) {
        const auto& x = act[a];
        const auto& y = act[b];
        EXPECT_NE(x.j, y.j);
        EXPECT_NE(x.p_std, y.p_std);
        EXPECT_TRUE(x.j < y.j ? contained(x.basis, y.basis) : contained(y.basis, x.basis));
      }
  }
  EXPECT_GT(nonempty, 5u);
}

TEST(CuspProfile, SL2IdentityIsMinusTwiceAbs) {
  auto cands = enumerate_radicals(2, 3);
  std::vector<QVec> pts;
  for (long s = -2; s <= 2; ++s) pts.push_back(qv({s}));
  auto prof = cusp_profile(QMat::identity(2), {qv({1, -1})}, pts, cands);
  ASSERT_EQ(prof.size(), 5u);
  for (std::size_t i = 0; i < prof.size(); ++i) {
    long s = -2 + static_cast<long>(i);
    // oracle: Ad(a)E12 = e^{2s}E12, Ad(a)E21 = e^{-2s}E21
    EXPECT_EQ(prof[i].value, LogValue(-2 * std::abs(s)));
  }
  EXPECT_EQ(prof[2].value.decimal(), "0");
}

TEST(CuspProfile, Log2UnitsAreExact) {
  auto cands = enumerate_radicals(2, 2);
  auto prof = cusp_profile(QMat::identity(2), {qv({1, -1})}, {qv({3})}, cands, GridUnits::Log2);
  EXPECT_EQ(prof[0].value, LogValue::log_of(2, -6));
}

TEST(CuspProfile, RationalApproximationOfPi) {
  QMat g = QMat::identity(2);
  g(0, 1) = Rational(355, 113);
  auto cands = enumerate_radicals(2, 200);
  std::vector<QVec> pts;
  for (long s = 0; s <= 8; ++s) pts.push_back(qv({s}));
  auto prof = cusp_profile(g, {qv({1, -1})}, pts, cands);
  LogValue floor = LogValue::log_of(113, -2);
  for (std::size_t i = 0; i < prof.size(); ++i) {
    EXPECT_GE(prof[i].value, floor);
    // oracle: direct double evaluation over primitive (p,q) of height <= 200
    double s = static_cast<double>(i), best = 1e300;
    for (long p = -200; p <= 200; ++p)
      for (long q = 0; q <= 200; ++q) {
        if (std::gcd(p, q) != 1 || (q == 0 && p <= 0)) continue;
        double x1 = p + 355.0 / 113.0 * q, x2 = q;
        double v = std::max({2 * s + std::log(x1 * x1), std::log(std::abs(x1 * x2)), -2 * s + std::log(x2 * x2)});
        if (x1 == 0) v = std::max(std::log(std::abs(x1 * x2) + 0.0), -2 * s + std::log(x2 * x2));
        best = std::min(best, v);
      }
    EXPECT_NEAR(prof[i].value.approx(), best, 1e-9) << "s=" << i;
  }
}

TEST(CuspProfile, Errors) {
  auto cands = enumerate_radicals(2, 1);
  EXPECT_THROW(cusp_profile(QMat::identity(2), {qv({1, -1})}, {}, cands), PreconditionError);
  EXPECT_THROW(cusp_profile(QMat::identity(2), {qv({1, -1})}, {qv({0})}, {}), PreconditionError);
  EXPECT_THROW(cusp_profile(QMat::identity(2), {qv({1, 1})}, {qv({0})}, cands), PreconditionError);
}
