#include <random>

#include "doctest.h"
#include "qv/splitting.hpp"

using namespace qv;

namespace {

std::array<Int, 4> random_coords(std::mt19937& rng) {
  std::uniform_int_distribution<int> d(-9, 9);
  return {Int(d(rng)), Int(d(rng)), Int(d(rng)), Int(d(rng))};
}

Quat from_coords(const Order& O, const std::array<Int, 4>& c) {
  Quat x;
  for (int t = 0; t < 4; ++t) x = qadd(x, qscale(Rat(c[t]), O.basis[t]));
  return x;
}

}  // namespace

TEST_CASE("splitting relations and determinant coherence") {
  for (int p : {3, 7}) {
    Order O = maximal_order(choose_algebra(Int(p)), Int(p));
    for (int l : {2, 3, 5, 11}) {
      if (l == p) continue;
      for (int k : {1, 3}) {
        INFO("p=", p, " l=", l, " k=", k);
        SplittingData S = split_mod(O, Int(l), k);
        const Int& m = S.modulus;
        CHECK(S.modulus == pow_int(Int(l), k));

        // Image of 1 is the identity.
        std::array<Rat, 4> one = lattice_coords(O.lat, Quat::one());
        CHECK(splitting_image(S, one) == Mat2Mod::identity());

        // Defining relations for the images of i and j.
        Mat2Mod Mi = S.unit_images[1], Mj = S.unit_images[2];
        CHECK(mat2mod_mul(m, Mi, Mi) ==
              mat2mod_scale(m, mod_reduce(O.A.a, m), Mat2Mod::identity()));
        CHECK(mat2mod_mul(m, Mj, Mj) ==
              mat2mod_scale(m, mod_reduce(O.A.b, m), Mat2Mod::identity()));

        // Multiplicativity and norm/trace coherence on random elements.
        std::mt19937 rng(1000 * p + 10 * l + k);
        for (int trial = 0; trial < 12; ++trial) {
          auto xc = random_coords(rng);
          auto yc = random_coords(rng);
          Quat x = from_coords(O, xc), y = from_coords(O, yc);
          Mat2Mod MX = splitting_image(S, xc), MY = splitting_image(S, yc);
          // Image of the product equals the product of images.
          std::array<Rat, 4> pc = lattice_coords(O.lat, qmul(O.A, x, y));
          CHECK(splitting_image(S, pc) == mat2mod_mul(m, MX, MY));
          // det = nrd, trace = trd.
          CHECK(mat2mod_det(m, MX) == mod_reduce(nrd(O.A, x), m));
          CHECK(mod_reduce(Int(MX.a[0] + MX.a[3]), m) == mod_reduce(trd(x), m));
          CHECK(mat2mod_det(m, MY) == mod_reduce(nrd(O.A, y), m));
        }
      }
    }
  }
}

TEST_CASE("splitting rejects the ramified prime") {
  Order O = maximal_order(choose_algebra(Int(3)), Int(3));
  CHECK_THROWS(split_mod(O, Int(3), 1));
}
