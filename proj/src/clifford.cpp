#include "so7/clifford.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

#include <algorithm>
#include <numeric>

#include "so7/classes.hpp"
#include "so7/error.hpp"
#include "so7/quotient.hpp"

namespace so7 {

Rational char_norm(const Group& g) {
  long long sum = 0;
#ifdef _OPENMP
#pragma omp parallel for schedule(static) reduction(+ : sum)
#endif
  for (long i = 0; i < long(g.order()); ++i) {
    long long t = g.elements()[size_t(i)].trace();
    sum += t * t;
  }
  long long n = (long long)g.order();
  long long d = std::gcd(sum, n);
  return Rational{sum / d, n / d};
}

bool is_irreducible(const Group& g) { return char_norm(g) == Rational{1, 1}; }

bool is_transitive_on_axes(const Group& g) {
  unsigned orbit = 1u;  // axis 0
  bool grew = true;
  std::vector<SignedPerm> gens = effective_generators(g);
  while (grew) {
    grew = false;
    for (const SignedPerm& x : gens)
      for (int i = 0; i < kDegree; ++i)
        if ((orbit >> i) & 1u) {
          unsigned bit = 1u << x.image(i);
          if (!(orbit & bit)) {
            orbit |= bit;
            grew = true;
          }
        }
  }
  return orbit == 0x7fu;
}

Functional canonical_functional(const Gf2Code& code, Gf2Vec u) {
  return Functional{code.annihilator().reduce(u)};
}

std::vector<Functional> functionals(const Gf2Code& code) {
  Gf2Code ann = code.annihilator();
  std::vector<Functional> out;
  for (unsigned u = 1; u < (1u << kDegree); ++u) {
    Gf2Vec r = ann.reduce(Gf2Vec(u));
    if (r.bits) out.push_back(Functional{r});
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  assert(out.size() + 1 == code.size());
  return out;
}

Functional act(const Gf2Code& code, const SignedPerm& g, Functional eta) {
  return canonical_functional(code, eta.rep.permuted(g.perm()));
}

std::vector<std::vector<Functional>> functional_orbits(const Group& g,
                                                       const Gf2Code& code) {
  std::vector<Functional> fns = functionals(code);
  std::vector<SignedPerm> gens = effective_generators(g);
  auto index_of = [&](Functional f) {
    auto it = std::lower_bound(fns.begin(), fns.end(), f);
    assert(it != fns.end() && *it == f);
    return size_t(it - fns.begin());
  };
  std::vector<char> visited(fns.size(), 0);
  std::vector<std::vector<Functional>> orbits;
  for (size_t start = 0; start < fns.size(); ++start) {
    if (visited[start]) continue;
    std::vector<size_t> stack{start}, members{start};
    visited[start] = 1;
    while (!stack.empty()) {
      Functional f = fns[stack.back()];
      stack.pop_back();
      for (const SignedPerm& x : gens) {
        size_t yi = index_of(act(code, x, f));
        if (!visited[yi]) {
          visited[yi] = 1;
          stack.push_back(yi);
          members.push_back(yi);
        }
      }
    }
    std::sort(members.begin(), members.end());
    std::vector<Functional> orbit;
    for (size_t i : members) orbit.push_back(fns[i]);
    orbits.push_back(std::move(orbit));
  }
  return orbits;
}

Group inertia_group(const Group& g, const Gf2Code& code, Functional eta) {
  Gf2Code ann = code.annihilator();
  const auto& elems = g.elements();
  std::vector<char> keep(elems.size(), 0);
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
  for (long i = 0; i < long(elems.size()); ++i) {
    Gf2Vec moved = eta.rep.permuted(elems[size_t(i)].perm());
    keep[size_t(i)] = ann.reduce(moved) == eta.rep;
  }
  std::vector<SignedPerm> stab;
  for (size_t i = 0; i < elems.size(); ++i)
    if (keep[i]) stab.push_back(elems[i]);
  std::vector<SignedPerm> seed;
  for (Gf2Vec b : code.basis()) seed.push_back(SignedPerm::diag(b.bits));
  std::vector<SignedPerm> gens = greedy_generators(stab, std::move(seed));
  return Group::from_elements(std::move(stab), std::move(gens));
}

Gf2Code kernel_code(const Gf2Code& code, Functional eta) {
  std::vector<Gf2Vec> basis = code.basis();
  int pivot = -1;
  for (size_t i = 0; i < basis.size(); ++i)
    if (eta.rep.dot(basis[i])) {
      pivot = int(i);
      break;
    }
  if (pivot < 0) throw Error("functional is trivial on the code");
  std::vector<Gf2Vec> kgens;
  for (size_t i = 0; i < basis.size(); ++i) {
    if (int(i) == pivot) continue;
    kgens.push_back(eta.rep.dot(basis[i]) ? basis[i] + basis[size_t(pivot)]
                                          : basis[i]);
  }
  return Gf2Code::span(kgens);
}

size_t gamma_count(const Group& inertia, const Gf2Code& code, Functional eta) {
  Gf2Code kc = kernel_code(code, eta);
  std::vector<SignedPerm> kgens, agens;
  for (Gf2Vec b : kc.basis()) kgens.push_back(SignedPerm::diag(b.bits));
  for (Gf2Vec b : code.basis()) agens.push_back(SignedPerm::diag(b.bits));
  Group k = Group::from_elements(diag_group(kc), std::move(kgens));
  Group a = Group::from_elements(diag_group(code), std::move(agens));
  return quotient_class_count(inertia, k) - quotient_class_count(inertia, a);
}

CliffordCount clifford_count(const Group& g, const Gf2Code& code) {
  if (code.dim() == 0) throw Error("clifford counting needs a nontrivial code");
  std::vector<SignedPerm> agens;
  for (Gf2Vec b : code.basis()) agens.push_back(SignedPerm::diag(b.bits));
  Group a = Group::from_elements(diag_group(code), std::move(agens));
  if (!is_normal(g, a))
    throw Error("diagonal group of the code is not normal in the group");

  CliffordCount out;
  out.nfc = QuotientGroup(g, a).class_count();
  out.direct = g.classes().count();

  std::vector<Functional> fns = functionals(code);
  auto index_of = [&](Functional f) {
    auto it = std::lower_bound(fns.begin(), fns.end(), f);
    assert(it != fns.end() && *it == f);
    return size_t(it - fns.begin());
  };

  std::vector<size_t> orbit_gamma_by_fn(fns.size(), 0);
  for (const std::vector<Functional>& orbit : functional_orbits(g, code)) {
    Group inertia = inertia_group(g, code, orbit.front());
    OrbitRecord rec;
    rec.size = orbit.size();
    rec.inertia_index = g.order() / inertia.order();
    if (rec.inertia_index != rec.size)
      throw InternalError("inertia index disagrees with the functional orbit");
    rec.gamma = gamma_count(inertia, code, orbit.front());
    out.fc_orbit += rec.gamma;
    out.orbits.push_back(rec);
    for (const Functional& f : orbit) orbit_gamma_by_fn[index_of(f)] = rec.gamma;
  }

  // One-representative shortcut: gamma of the first-axis functional times
  // the number of orbits of a single order-7 element on all functionals.
  SignedPerm seven = SignedPerm::identity();
  for (const SignedPerm& e : g.elements())
    if (e.order() == 7) {
      seven = e;
      break;
    }
  if (seven.order() == 7) {
    std::vector<char> seen(fns.size(), 0);
    size_t norbits = 0;
    for (size_t start = 0; start < fns.size(); ++start) {
      if (seen[start]) continue;
      ++norbits;
      Functional f = fns[start];
      do {
        seen[index_of(f)] = 1;
        f = act(code, seven, f);
      } while (!(f == fns[start]));
    }
    Functional e0 = canonical_functional(code, Gf2Vec(1u));
    out.fc_paper = orbit_gamma_by_fn[index_of(e0)] * norbits;
  }

  return out;
}

std::vector<int> natural_character(const Group& g) {
  std::vector<int> chi;
  for (const std::vector<SignedPerm>& cls : g.classes().classes) {
    int t = cls.front().trace();
    for (const SignedPerm& e : cls)
      if (e.trace() != t)
        throw InternalError("trace is not constant on a conjugacy class");
    chi.push_back(t);
  }
  return chi;
}

Group adjoin_neg_identity(const Group& g) {
  std::vector<SignedPerm> gens = effective_generators(g);
  gens.push_back(SignedPerm::neg_identity());
  return Group::generate(std::move(gens));
}

}  // namespace so7
