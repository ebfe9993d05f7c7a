#include "qv/fingerprint.hpp"

#include <cstdint>

#include "qv/errors.hpp"
#include "qv/splitting.hpp"

namespace qv {

std::string digest_mat4(const Mat4Mod& M) {
  std::uint64_t h = 1469598103934665603ull;
  auto eat = [&h](const std::string& s) {
    for (char ch : s) {
      h ^= static_cast<unsigned char>(ch);
      h *= 1099511628211ull;
    }
    h ^= 0xffu;  // separator
    h *= 1099511628211ull;
  };
  eat(M.modulus.str());
  for (const Int& e : M.a) eat(e.str());
  static const char* hex = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[i] = hex[h & 0xf];
    h >>= 4;
  }
  return out;
}

namespace {

FingerprintSide side_from_images(std::vector<Mat4Mod> images) {
  FingerprintSide side;
  side.order = matrix_group_order(images);
  side.digests.reserve(images.size());
  for (const Mat4Mod& m : images) side.digests.push_back(digest_mat4(m));
  side.images = std::move(images);
  return side;
}

}  // namespace

FingerprintReport fingerprint(const Order& O, const Int& p, const Int& l) {
  if (!is_prime(l)) throw Error("fingerprint level must be prime");
  if (l == p) throw ModulusNotCoprime("fingerprint level must differ from p");

  FingerprintReport rep;
  rep.p = p;
  rep.l = l;
  rep.expected = sl4_order(l);

  std::vector<Mat4Mod> delta_images;
  for (const SMatrix& g : delta_generators(p)) delta_images.push_back(reduce_mod(g, l));
  rep.delta = side_from_images(std::move(delta_images));

  SplittingData S = split_mod(O, l, 1);
  std::vector<Mat4Mod> gamma_images;
  for (const GammaElement& g : gamma_generators(O, p))
    gamma_images.push_back(reduce_gamma(O, p, S, g));
  rep.gamma = side_from_images(std::move(gamma_images));

  return rep;
}

}  // namespace qv
