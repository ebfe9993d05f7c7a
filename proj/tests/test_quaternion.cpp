#include "doctest.h"
#include "oracles.hpp"
#include "qv/quaternion.hpp"

using namespace qv;

namespace {
Quat q(int a, int b, int c, int d) { return Quat{{Rat(a), Rat(b), Rat(c), Rat(d)}}; }
}

TEST_CASE("hamilton multiplication table") {
  QuaternionAlgebra H{Rat(-1), Rat(-1)};
  Quat i = Quat::unit(1), j = Quat::unit(2), k = Quat::unit(3);
  CHECK(qmul(H, i, j) == k);
  CHECK(qmul(H, j, i) == qneg(k));
  CHECK(qmul(H, i, i) == Quat::scalar(Rat(-1)));
  CHECK(qmul(H, k, k) == Quat::scalar(Rat(-1)));
  CHECK(qmul(H, j, k) == i);
  CHECK(qmul(H, k, j) == qneg(i));
  CHECK(nrd(H, q(1, 1, 1, 1)) == 4);
  CHECK(trd(q(3, 1, 2, 5)) == 6);
}

TEST_CASE("general relations: associativity, conjugation, norm") {
  QuaternionAlgebra A{Rat(-2), Rat(-5)};
  std::vector<Quat> sample = {q(1, 0, 0, 0), q(0, 1, 0, 0), q(0, 0, 1, 0), q(0, 0, 0, 1),
                              q(1, -2, 3, 4), q(-1, 1, 1, -1), q(2, 0, -3, 1)};
  for (const Quat& x : sample) {
    // x * conj(x) = nrd(x) * 1 and trd consistency.
    Quat xc = qmul(A, x, qconj(x));
    CHECK(xc == Quat::scalar(nrd(A, x)));
    CHECK(qadd(x, qconj(x)) == Quat::scalar(trd(x)));
    for (const Quat& y : sample) {
      CHECK(nrd(A, qmul(A, x, y)) == nrd(A, x) * nrd(A, y));
      CHECK(qconj(qmul(A, x, y)) == qmul(A, qconj(y), qconj(x)));
      for (const Quat& z : sample)
        CHECK(qmul(A, qmul(A, x, y), z) == qmul(A, x, qmul(A, y, z)));
    }
  }
}

TEST_CASE("inverse") {
  QuaternionAlgebra A{Rat(-1), Rat(-7)};
  Quat x = q(2, -1, 3, 1);
  CHECK(qmul(A, x, qinv(A, x)) == Quat::one());
  CHECK(qmul(A, qinv(A, x), x) == Quat::one());
  CHECK_THROWS_AS(qinv(A, Quat{}), DivisionByZero);
}

TEST_CASE("definite algebra selection per prime") {
  struct Expect {
    int p, a, b;
  };
  // Smallest |a| with (a|p) = -1, then b = -p.
  for (Expect e : {Expect{3, -1, -3}, Expect{5, -2, -5}, Expect{7, -1, -7},
                   Expect{11, -1, -11}, Expect{13, -2, -13}}) {
    QuaternionAlgebra A = choose_algebra(Int(e.p));
    CHECK(A.a == e.a);
    CHECK(A.b == e.b);
    // Certify the ramification set with the brute-force oracle as well.
    auto ram = oracle::ramified_places(A.a, A.b);
    REQUIRE(ram.size() == 2);
    CHECK(ram[0] == Place::at_prime(Int(e.p)));
    CHECK(ram[1] == Place::at_infinity());
  }
}
