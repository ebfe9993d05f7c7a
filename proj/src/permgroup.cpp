#include "qv/permgroup.hpp"

#include <algorithm>

#include "qv/errors.hpp"

namespace qv {

Perm Perm::identity(int n) {
  Perm p;
  p.img.resize(n);
  for (int i = 0; i < n; ++i) p.img[i] = i;
  return p;
}

bool Perm::is_identity() const {
  for (int i = 0; i < degree(); ++i)
    if (img[i] != i) return false;
  return true;
}

Perm p_mul(const Perm& x, const Perm& y) {
  if (x.degree() != y.degree()) throw Error("permutation degrees differ");
  Perm z;
  z.img.resize(x.degree());
  for (int i = 0; i < x.degree(); ++i) z.img[i] = y.img[x.img[i]];
  return z;
}

Perm p_inv(const Perm& x) {
  Perm z;
  z.img.resize(x.degree());
  for (int i = 0; i < x.degree(); ++i) z.img[x.img[i]] = i;
  return z;
}

int vector_point_count(const Int& l) {
  Int n = l * l * l * l - 1;
  return static_cast<int>(n);
}

Perm perm_from_mat4(const Mat4Mod& M) {
  long long l = static_cast<long long>(M.modulus);
  int n = vector_point_count(M.modulus);
  std::array<long long, 16> a{};
  for (int i = 0; i < 16; ++i) a[i] = static_cast<long long>(M.a[i]);
  Perm p;
  p.img.assign(n, -1);
  std::array<long long, 4> v{}, w{};
  for (int code = 1; code <= n; ++code) {
    long long rest = code;
    for (int i = 3; i >= 0; --i) {
      v[i] = rest % l;
      rest /= l;
    }
    for (int i = 0; i < 4; ++i) {
      long long acc = 0;
      for (int j = 0; j < 4; ++j) acc += a[4 * i + j] * v[j];
      w[i] = acc % l;
    }
    long long out = ((w[0] * l + w[1]) * l + w[2]) * l + w[3];
    if (out == 0) throw Error("matrix action is not invertible on nonzero vectors");
    p.img[code - 1] = static_cast<int>(out - 1);
  }
  return p;
}

namespace {

void rebuild_orbit(int n, ChainLevel& lev) {
  lev.schreier.assign(n, {-2, -2});
  lev.orbit.clear();
  lev.orbit.push_back(lev.base);
  lev.schreier[lev.base] = {-1, -1};
  for (std::size_t qi = 0; qi < lev.orbit.size(); ++qi) {
    int x = lev.orbit[qi];
    for (std::size_t gi = 0; gi < lev.gens.size(); ++gi) {
      int y = lev.gens[gi].img[x];
      if (lev.schreier[y].first == -2) {
        lev.schreier[y] = {x, static_cast<int>(gi)};
        lev.orbit.push_back(y);
      }
    }
  }
}

// Transversal element carrying the base point to x, composed along the
// Schreier vector.
Perm transversal(int n, const ChainLevel& lev, int x) {
  Perm u = Perm::identity(n);
  while (x != lev.base) {
    auto [prev, gi] = lev.schreier[x];
    u = p_mul(u, p_inv(lev.gens[gi]));  // walk backwards: undo the last edge
    x = prev;
  }
  return p_inv(u);
}

int pick_base(const std::vector<Perm>& gens, const std::vector<int>& preferred, int n) {
  for (int cand : preferred)
    for (const Perm& g : gens)
      if (g.img[cand] != cand) return cand;
  for (int x = 0; x < n; ++x)
    for (const Perm& g : gens)
      if (g.img[x] != x) return x;
  return -1;
}

struct Builder {
  int n;
  const std::vector<int>& preferred;
  StabilizerChain chain;

  // Sift g through levels i, i+1, ...; returns the residue.
  Perm sift(std::size_t i, Perm g) const {
    for (std::size_t lev = i; lev < chain.levels.size(); ++lev) {
      if (g.is_identity()) return g;
      const ChainLevel& L = chain.levels[lev];
      int x = g.img[L.base];
      if (L.schreier[x].first == -2) return g;  // base image leaves the orbit
      g = p_mul(g, p_inv(transversal(n, L, x)));
    }
    return g;
  }

  void add_level(const Perm& gen) {
    ChainLevel lev;
    lev.gens.push_back(gen);
    lev.base = pick_base(lev.gens, preferred, n);
    if (lev.base < 0) throw Error("attempted to open a chain level on the identity");
    rebuild_orbit(n, lev);
    chain.levels.push_back(std::move(lev));
  }

  // Note: add_level may reallocate chain.levels, so the level is re-indexed
  // on every access instead of held by reference. Neither the level-i orbit
  // nor its generator list changes while this call runs.
  void schreier_sims(std::size_t i) {
    for (std::size_t qi = 0; qi < chain.levels[i].orbit.size(); ++qi) {
      int x = chain.levels[i].orbit[qi];
      Perm ux = transversal(n, chain.levels[i], x);
      for (std::size_t gi = 0; gi < chain.levels[i].gens.size(); ++gi) {
        int y = chain.levels[i].gens[gi].img[x];
        if (chain.levels[i].schreier[y] == std::make_pair(x, static_cast<int>(gi)))
          continue;  // tree edge: the Schreier generator is trivial by construction
        Perm sg = p_mul(p_mul(ux, chain.levels[i].gens[gi]),
                        p_inv(transversal(n, chain.levels[i], y)));
        Perm residue = sift(i + 1, sg);
        if (residue.is_identity()) continue;
        if (i + 1 == chain.levels.size()) {
          add_level(residue);
        } else {
          chain.levels[i + 1].gens.push_back(residue);
          rebuild_orbit(n, chain.levels[i + 1]);
        }
        schreier_sims(i + 1);
      }
    }
  }
};

}  // namespace

StabilizerChain build_chain(int n, const std::vector<Perm>& gens,
                            const std::vector<int>& preferred) {
  Builder b{n, preferred, {}};
  b.chain.n = n;
  std::vector<Perm> nontrivial;
  for (const Perm& g : gens) {
    if (g.degree() != n) throw Error("generator degree differs from the point count");
    if (!g.is_identity()) nontrivial.push_back(g);
  }
  if (nontrivial.empty()) return b.chain;
  ChainLevel lev0;
  lev0.gens = nontrivial;
  lev0.base = pick_base(lev0.gens, preferred, n);
  rebuild_orbit(n, lev0);
  b.chain.levels.push_back(std::move(lev0));
  b.schreier_sims(0);
  return b.chain;
}

Int chain_order(const StabilizerChain& chain) {
  Int order(1);
  for (const ChainLevel& lev : chain.levels) order *= Int(lev.orbit.size());
  return order;
}

Int matrix_group_order(const std::vector<Mat4Mod>& gens) {
  if (gens.empty()) return Int(1);
  const Int& l = gens[0].modulus;
  int n = vector_point_count(l);
  long long ll = static_cast<long long>(l);
  std::vector<int> preferred;
  for (int i = 0; i < 4; ++i) {
    long long code = 1;
    for (int t = 0; t < 3 - i; ++t) code *= ll;
    preferred.push_back(static_cast<int>(code - 1));  // standard basis vector e_{i+1}
  }
  std::vector<Perm> perms;
  perms.reserve(gens.size());
  for (const Mat4Mod& g : gens) {
    if (g.modulus != l) throw Error("mixed moduli in one generator list");
    perms.push_back(perm_from_mat4(g));
  }
  return chain_order(build_chain(n, perms, preferred));
}

}  // namespace qv
