#include "qv/fingerprint.hpp"

#include "doctest.h"
#include "qv/errors.hpp"
#include "qv/quaternion.hpp"

using namespace qv;

TEST_CASE("digest format and determinism") {
  Mat4Mod id = Mat4Mod::identity(Int(5));
  std::string d = digest_mat4(id);
  CHECK(d.size() == 16);
  CHECK(d.find_first_not_of("0123456789abcdef") == std::string::npos);
  CHECK(d == digest_mat4(Mat4Mod::identity(Int(5))));
  CHECK(d != digest_mat4(Mat4Mod::identity(Int(7))));
}

TEST_CASE("both reductions of the p = 3 pair fill SL(4, F_2)") {
  Int p(3);
  Order O = maximal_order(choose_algebra(p), p);
  FingerprintReport rep = fingerprint(O, p, Int(2));
  CHECK(rep.expected == Int(20160));
  CHECK(rep.delta.order == Int(20160));
  CHECK(rep.gamma.order == Int(20160));
  CHECK(rep.match());
  CHECK(rep.delta.images.size() == 24);
  CHECK(rep.gamma.images.size() == 9);
  CHECK(rep.delta.digests.size() == 24);
  CHECK(rep.gamma.digests.size() == 9);
}

TEST_CASE("p = 5 mod 3 matches as well") {
  Int p(5);
  Order O = maximal_order(choose_algebra(p), p);
  FingerprintReport rep = fingerprint(O, p, Int(3));
  CHECK(rep.expected == Int(12130560));
  CHECK(rep.match());
}

TEST_CASE("inadmissible levels are rejected") {
  Int p(3);
  Order O = maximal_order(choose_algebra(p), p);
  CHECK_THROWS_AS(fingerprint(O, p, Int(3)), ModulusNotCoprime);
  CHECK_THROWS_AS(fingerprint(O, p, Int(4)), Error);
}
