#include "doctest.h"
#include "qv/order.hpp"

using namespace qv;

namespace {
Quat qq(const Rat& a, const Rat& b, const Rat& c, const Rat& d) {
  return Quat{{a, b, c, d}};
}
}

TEST_CASE("span and membership") {
  // The standard lattice.
  QLattice std4 = lattice_span({Quat::unit(0), Quat::unit(1), Quat::unit(2), Quat::unit(3)});
  CHECK(std4.denom == 1);
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) CHECK(std4.mat[r][c] == (r == c ? 1 : 0));
  CHECK(lattice_contains(std4, qq(3, -2, 5, 7)));
  CHECK_FALSE(lattice_contains(std4, qq(Rat(1, 2), 0, 0, 0)));

  // Redundant and fractional generators normalize to one canonical basis.
  QLattice L1 = lattice_span({qq(Rat(1, 2), 0, Rat(1, 2), 0), Quat::unit(0), Quat::unit(1),
                              qq(0, Rat(1, 2), 0, Rat(1, 2)), Quat::unit(2)});
  QLattice L2 = lattice_span({Quat::unit(0), Quat::unit(1), Quat::unit(2),
                              qq(Rat(1, 2), 0, Rat(1, 2), 0), qq(0, Rat(1, 2), 0, Rat(1, 2)),
                              qq(17, 3, -2, 9)});
  CHECK(L1 == L2);
  CHECK(lattice_contains(L1, qq(0, 0, 1, 0)));  // j = 2*(1+j)/2 - 1
  CHECK(lattice_contains(L1, qq(0, 0, 0, 1)));
  CHECK_THROWS(lattice_span({Quat::unit(0), Quat::unit(1)}));  // rank 2 only
}

TEST_CASE("coordinates invert the basis") {
  QLattice L = lattice_span({Quat::unit(0), Quat::unit(1),
                             qq(Rat(1, 2), 0, Rat(1, 2), 0), qq(0, Rat(1, 2), 0, Rat(1, 2))});
  Quat x = qq(Rat(5, 2), -3, Rat(7, 2), 1);
  auto c = lattice_coords(L, x);
  Quat back;
  for (int r = 0; r < 4; ++r) back = qadd(back, qscale(c[r], L.basis_element(r)));
  CHECK(back == x);
}

TEST_CASE("trace form of the standard lattice") {
  QuaternionAlgebra A{Rat(-1), Rat(-1)};
  QLattice std4 = lattice_span({Quat::unit(0), Quat::unit(1), Quat::unit(2), Quat::unit(3)});
  // Gram = diag(2, 2a, 2b, -2ab), so |det| = 16|ab|^2 * ... = 16 here.
  CHECK(trace_form_det(A, std4) == Rat(-16));
  CHECK(reduced_discriminant(A, std4) == 4);
}

TEST_CASE("the half-unit lattice is a maximal order at 3") {
  QuaternionAlgebra A{Rat(-1), Rat(-3)};
  // Z<1, i, (1+j)/2, (i+k)/2>: multiplicatively closed, discriminant 3.
  QLattice L = lattice_span({Quat::unit(0), Quat::unit(1),
                             qq(Rat(1, 2), 0, Rat(1, 2), 0), qq(0, Rat(1, 2), 0, Rat(1, 2))});
  auto closed = multiplicative_closure(A, L);
  REQUIRE(closed.has_value());
  CHECK(*closed == L);
  CHECK(reduced_discriminant(A, L) == 3);
}

TEST_CASE("saturation reaches the target discriminant") {
  for (int p : {3, 5, 7, 11, 13}) {
    QuaternionAlgebra A = choose_algebra(Int(p));
    Order O = maximal_order(A, Int(p));
    INFO("p = ", p);
    CHECK(reduced_discriminant(O) == p);
    CHECK(lattice_contains(O.lat, Quat::one()));
    // Every basis element is integral: integer reduced trace and norm.
    for (const Quat& b : O.basis) {
      CHECK(den(trd(b)) == 1);
      CHECK(den(nrd(A, b)) == 1);
    }
    // Closed under multiplication, with integral structure constants.
    auto T = structure_constants(O);
    // Reconstruct b1*b2 from the table and compare.
    Quat prod = qmul(A, O.basis[1], O.basis[2]);
    Quat rebuilt;
    for (int t = 0; t < 4; ++t)
      rebuilt = qadd(rebuilt, qscale(Rat(T[1][2][t]), O.basis[t]));
    CHECK(rebuilt == prod);
  }
}

TEST_CASE("structure constants reject non-closed lattices") {
  QuaternionAlgebra A{Rat(-1), Rat(-1)};
  // Z<1, i/3, j, k> is not closed under multiplication.
  QLattice L = lattice_span({Quat::unit(0), qq(0, Rat(1, 3), 0, 0), Quat::unit(2), Quat::unit(3)});
  Order O = order_from_lattice(A, L);
  CHECK_THROWS(structure_constants(O));
}
