#pragma once

#include <array>
#include <optional>
#include <string>

#include "cuspwatch/ratlin/linalg.hpp"
#include "cuspwatch/ratlin/quadratic.hpp"

namespace cuspwatch {

/// x0 + x1 i + x2 j + x3 k in the rational quaternion algebra with
/// i^2 = -1, j^2 = 3, ij = -ji = k.
struct Quaternion {
  std::array<Rational, 4> x{Rational(0), Rational(0), Rational(0), Rational(0)};

  Quaternion() = default;
  Quaternion(Rational x0, Rational x1 = 0, Rational x2 = 0, Rational x3 = 0)  // NOLINT
      : x{std::move(x0), std::move(x1), std::move(x2), std::move(x3)} {}

  static Quaternion basis(std::size_t k) {
    Quaternion q;
    q.x[k] = 1;
    return q;
  }

  bool is_integral() const {
    for (const auto& c : x)
      if (!is_integer(c)) return false;
    return true;
  }

  Quaternion conjugate() const { return Quaternion(x[0], -x[1], -x[2], -x[3]); }

  /// Reduced norm q conj(q).
  Rational nrd() const { return Rational(x[0] * x[0] + x[1] * x[1] - 3 * x[2] * x[2] - 3 * x[3] * x[3]); }

  Quaternion& operator+=(const Quaternion& o) {
    for (std::size_t k = 0; k < 4; ++k) x[k] += o.x[k];
    return *this;
  }
  Quaternion& operator-=(const Quaternion& o) {
    for (std::size_t k = 0; k < 4; ++k) x[k] -= o.x[k];
    return *this;
  }
  friend Quaternion operator+(Quaternion a, const Quaternion& b) { return a += b; }
  friend Quaternion operator-(Quaternion a, const Quaternion& b) { return a -= b; }
  friend Quaternion operator-(const Quaternion& a) { return Quaternion(-a.x[0], -a.x[1], -a.x[2], -a.x[3]); }
  friend Quaternion operator*(const Quaternion& a, const Quaternion& b);
  friend bool operator==(const Quaternion& a, const Quaternion& b) { return a.x == b.x; }

  std::string str() const {
    static const char* names[] = {"", "i", "j", "k"};
    std::string s;
    for (std::size_t k = 0; k < 4; ++k) {
      if (sgn(x[k]) == 0) continue;
      std::string c = x[k].get_str();
      if (!s.empty() && sgn(x[k]) > 0) s += "+";
      if (k > 0 && x[k] == 1) c = "";
      if (k > 0 && x[k] == -1) c = "-";
      s += c + names[k];
    }
    return s.empty() ? "0" : s;
  }
};

namespace detail {

/// e_a e_b = sign * factor * e_{index}; basis order 1, i, j, k.
struct QuatProduct {
  std::size_t index;
  long coeff;
};

// Completed from i^2 = -1, j^2 = 3, ij = -ji = k and associativity:
// k^2 = 3, ik = -j, ki = j, jk = -3i, kj = 3i.
inline constexpr QuatProduct kQuatTable[4][4] = {
    {{0, 1}, {1, 1}, {2, 1}, {3, 1}},
    {{1, 1}, {0, -1}, {3, 1}, {2, -1}},
    {{2, 1}, {3, -1}, {0, 3}, {1, -3}},
    {{3, 1}, {2, 1}, {1, 3}, {0, 3}},
};

}  // namespace detail

inline Quaternion operator*(const Quaternion& a, const Quaternion& b) {
  Quaternion out;
  for (std::size_t p = 0; p < 4; ++p) {
    if (sgn(a.x[p]) == 0) continue;
    for (std::size_t q = 0; q < 4; ++q) {
      if (sgn(b.x[q]) == 0) continue;
      const auto& e = detail::kQuatTable[p][q];
      out.x[e.index] += Rational(e.coeff) * a.x[p] * b.x[q];
    }
  }
  return out;
}

/// 2x2 matrix over the quaternions.
struct QuatMat2 {
  std::array<std::array<Quaternion, 2>, 2> e;

  static QuatMat2 identity() {
    QuatMat2 m;
    m.e[0][0] = Quaternion(1);
    m.e[1][1] = Quaternion(1);
    return m;
  }
  static QuatMat2 diagonal(const Quaternion& a, const Quaternion& b) {
    QuatMat2 m;
    m.e[0][0] = a;
    m.e[1][1] = b;
    return m;
  }

  bool is_integral() const {
    for (const auto& row : e)
      for (const auto& q : row)
        if (!q.is_integral()) return false;
    return true;
  }

  friend QuatMat2 operator*(const QuatMat2& a, const QuatMat2& b) {
    QuatMat2 c;
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j)
        for (std::size_t k = 0; k < 2; ++k) c.e[i][j] += a.e[i][k] * b.e[k][j];
    return c;
  }
  friend bool operator==(const QuatMat2& a, const QuatMat2& b) { return a.e == b.e; }
};

using QuadMat = Mat<Quad3>;

/// iota(q) = x0 I + x1 [[0,-1],[1,0]] + x2 diag(r,-r) + x3 [[0,r],[r,0]], r = sqrt 3.
inline QuadMat iota(const Quaternion& q) {
  const auto& x = q.x;
  QuadMat m(2, 2);
  m(0, 0) = Quad3(x[0], x[2]);
  m(0, 1) = Quad3(-x[1], x[3]);
  m(1, 0) = Quad3(x[1], x[3]);
  m(1, 1) = Quad3(x[0], -x[2]);
  return m;
}

/// Preimage of a 2x2 block under iota, when it lies in the image.
inline std::optional<Quaternion> iota_inverse(const QuadMat& m) {
  require<DimensionMismatchError>(m.rows() == 2 && m.cols() == 2, "iota acts on 2x2 blocks");
  Quad3 s0 = (m(0, 0) + m(1, 1)) / Quad3(2), s2 = (m(0, 0) - m(1, 1)) / Quad3(2);
  Quad3 s1 = (m(1, 0) - m(0, 1)) / Quad3(2), s3 = (m(1, 0) + m(0, 1)) / Quad3(2);
  if (sgn(s0.b()) != 0 || sgn(s1.b()) != 0 || sgn(s2.a()) != 0 || sgn(s3.a()) != 0) return std::nullopt;
  return Quaternion(s0.a(), s1.a(), s2.b(), s3.b());
}

inline QuadMat iota2(const QuatMat2& m) {
  QuadMat out(4, 4);
  for (std::size_t bi = 0; bi < 2; ++bi)
    for (std::size_t bj = 0; bj < 2; ++bj) {
      QuadMat b = iota(m.e[bi][bj]);
      for (std::size_t r = 0; r < 2; ++r)
        for (std::size_t c = 0; c < 2; ++c) out(2 * bi + r, 2 * bj + c) = b(r, c);
    }
  return out;
}

inline std::optional<QuatMat2> iota2_inverse(const QuadMat& g) {
  require<DimensionMismatchError>(g.rows() == 4 && g.cols() == 4, "iota2 acts on 4x4 matrices");
  QuatMat2 out;
  for (std::size_t bi = 0; bi < 2; ++bi)
    for (std::size_t bj = 0; bj < 2; ++bj) {
      QuadMat b(2, 2);
      for (std::size_t r = 0; r < 2; ++r)
        for (std::size_t c = 0; c < 2; ++c) b(r, c) = g(2 * bi + r, 2 * bj + c);
      auto q = iota_inverse(b);
      if (!q) return std::nullopt;
      out.e[bi][bj] = *q;
    }
  return out;
}

/// Gamma = iota2 of the 2x2 matrices over Z[i,j,k] with determinant one.
inline bool in_gamma(const QuadMat& g) {
  auto pre = iota2_inverse(g);
  return pre && pre->is_integral() && det(g) == Quad3(1);
}

}  // namespace cuspwatch
