#pragma once

// Small fixed-size matrices over Z/m. The 2x2 type leaves the modulus to the
// caller (it always lives next to a SplittingData); the 4x4 type carries it.

#include <array>

#include "qv/numbers.hpp"

namespace qv {

struct Mat2Mod {
  std::array<Int, 4> a{Int(0), Int(0), Int(0), Int(0)};  // row major

  static Mat2Mod identity() { return Mat2Mod{{Int(1), Int(0), Int(0), Int(1)}}; }
  bool operator==(const Mat2Mod& o) const { return a == o.a; }
};

Mat2Mod mat2mod_mul(const Int& m, const Mat2Mod& x, const Mat2Mod& y);
Mat2Mod mat2mod_add(const Int& m, const Mat2Mod& x, const Mat2Mod& y);
Mat2Mod mat2mod_scale(const Int& m, const Int& s, const Mat2Mod& x);
Int mat2mod_det(const Int& m, const Mat2Mod& x);

struct Mat4Mod {
  Int modulus = 2;
  std::array<Int, 16> a{};  // row major

  static Mat4Mod identity(const Int& m);
  bool operator==(const Mat4Mod& o) const { return modulus == o.modulus && a == o.a; }
};

Mat4Mod mat4mod_mul(const Mat4Mod& x, const Mat4Mod& y);
Int mat4mod_det(const Mat4Mod& x);

}  // namespace qv
