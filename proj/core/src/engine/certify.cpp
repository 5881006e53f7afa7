#include "toposbench/certify.hpp"

#include "toposbench/enumerate.hpp"

namespace toposbench {

namespace {

CertificationFailure failure(std::string property, std::string detail) {
  return {std::move(property), std::move(detail)};
}

std::string describe(const NatTrans& f) {
  const FinCategory& cat = *f.source()->base();
  std::string out = "{";
  for (ObjectId c = 0; c < cat.object_count(); ++c) {
    if (c > 0) out += "; ";
    out += cat.object_name(c) + ":";
    for (Elem x = 0; x < f.source()->size(c); ++x) {
      out += " " + f.source()->element_name(c, x) + "->" + f.target()->element_name(c, f(c, x));
    }
  }
  return out + "}";
}

std::string test_name(std::size_t i) { return "test object #" + std::to_string(i); }

}  // namespace

Certification certify_terminal(const CategoryRef& base, const std::vector<PresheafRef>& tests) {
  const PresheafRef one = terminal(base);
  for (std::size_t i = 0; i < tests.size(); ++i) {
    const std::size_t n = count_nat_trans(tests[i], one);
    if (n != 1) {
      return failure("terminal", test_name(i) + " has " + std::to_string(n) + " maps to 1");
    }
  }
  return std::nullopt;
}

Certification certify_initial(const CategoryRef& base, const std::vector<PresheafRef>& tests) {
  const PresheafRef zero = initial(base);
  for (std::size_t i = 0; i < tests.size(); ++i) {
    const std::size_t n = count_nat_trans(zero, tests[i]);
    if (n != 1) {
      return failure("initial", test_name(i) + " receives " + std::to_string(n) + " maps from 0");
    }
  }
  return std::nullopt;
}

Certification certify_product(const ProductCone& cone, const std::vector<PresheafRef>& tests) {
  for (std::size_t i = 0; i < tests.size(); ++i) {
    const auto& x = tests[i];
    const auto left = enumerate_nat_trans(x, cone.factors.at(0));
    const auto right = enumerate_nat_trans(x, cone.factors.at(1));
    for (const auto& f : left) {
      for (const auto& g : right) {
        const NatTrans h = pairing(cone, {f, g});
        if (!(compose(cone.projections[0], h) == f) || !(compose(cone.projections[1], h) == g)) {
          return failure("product", test_name(i) + ": pairing does not commute for " +
                                        describe(f) + ", " + describe(g));
        }
      }
    }
    const auto mediators = enumerate_nat_trans(x, cone.object);
    if (mediators.size() != left.size() * right.size()) {
      return failure("product", test_name(i) + ": " + std::to_string(mediators.size()) +
                                    " maps into the product, expected " +
                                    std::to_string(left.size() * right.size()));
    }
    for (const auto& h : mediators) {
      const NatTrans again =
          pairing(cone, {compose(cone.projections[0], h), compose(cone.projections[1], h)});
      if (!(again == h)) {
        return failure("product", test_name(i) + ": mediator not unique at " + describe(h));
      }
    }
  }
  return std::nullopt;
}

Certification certify_coproduct(const CoproductCocone& cocone,
                                const std::vector<PresheafRef>& tests) {
  for (std::size_t i = 0; i < tests.size(); ++i) {
    const auto& y = tests[i];
    const auto left = enumerate_nat_trans(cocone.summands.at(0), y);
    const auto right = enumerate_nat_trans(cocone.summands.at(1), y);
    const auto mediators = enumerate_nat_trans(cocone.object, y);
    if (mediators.size() != left.size() * right.size()) {
      return failure("coproduct", test_name(i) + ": " + std::to_string(mediators.size()) +
                                      " maps out of the coproduct, expected " +
                                      std::to_string(left.size() * right.size()));
    }
    for (const auto& f : left) {
      for (const auto& g : right) {
        const NatTrans h = copairing(cocone, {f, g});
        if (!(compose(h, cocone.injections[0]) == f) || !(compose(h, cocone.injections[1]) == g)) {
          return failure("coproduct", test_name(i) + ": copairing does not commute for " +
                                          describe(f) + ", " + describe(g));
        }
      }
    }
  }
  return std::nullopt;
}

Certification certify_equalizer(const NatTrans& f, const NatTrans& g, const EqualizerCone& cone,
                                const std::vector<PresheafRef>& tests) {
  if (!(compose(f, cone.inclusion) == compose(g, cone.inclusion))) {
    return failure("equalizer", "inclusion does not equalize");
  }
  for (std::size_t i = 0; i < tests.size(); ++i) {
    const auto& x = tests[i];
    const auto through = enumerate_nat_trans(x, cone.object);
    std::size_t equalized = 0;
    for (const auto& h : enumerate_nat_trans(x, f.source())) {
      if (!(compose(f, h) == compose(g, h))) continue;
      ++equalized;
      std::size_t factorizations = 0;
      for (const auto& k : through) {
        if (compose(cone.inclusion, k) == h) ++factorizations;
      }
      if (factorizations != 1) {
        return failure("equalizer", test_name(i) + ": " + std::to_string(factorizations) +
                                        " factorizations of " + describe(h));
      }
    }
    if (through.size() != equalized) {
      return failure("equalizer", test_name(i) + ": factorization count mismatch");
    }
  }
  return std::nullopt;
}

Certification certify_pullback(const NatTrans& f, const NatTrans& g, const PullbackCone& cone,
                               const std::vector<PresheafRef>& tests) {
  if (!(compose(f, cone.first) == compose(g, cone.second))) {
    return failure("pullback", "square does not commute");
  }
  for (std::size_t i = 0; i < tests.size(); ++i) {
    const auto& x = tests[i];
    const auto into = enumerate_nat_trans(x, cone.object);
    const auto us = enumerate_nat_trans(x, f.source());
    const auto vs = enumerate_nat_trans(x, g.source());
    std::size_t commuting = 0;
    for (const auto& u : us) {
      for (const auto& v : vs) {
        if (!(compose(f, u) == compose(g, v))) continue;
        ++commuting;
        std::size_t factorizations = 0;
        for (const auto& k : into) {
          if (compose(cone.first, k) == u && compose(cone.second, k) == v) ++factorizations;
        }
        if (factorizations != 1) {
          return failure("pullback", test_name(i) + ": " + std::to_string(factorizations) +
                                         " mediators for " + describe(u) + ", " + describe(v));
        }
      }
    }
    if (into.size() != commuting) {
      return failure("pullback", test_name(i) + ": mediator count mismatch");
    }
  }
  return std::nullopt;
}

Certification certify_exponential(const Exponential& exp, const std::vector<PresheafRef>& tests) {
  for (std::size_t i = 0; i < tests.size(); ++i) {
    const auto& x = tests[i];
    const ProductCone domain = product(x, exp.exponent());
    const auto curried = enumerate_nat_trans(x, exp.object());
    const auto uncurried = enumerate_nat_trans(domain.object, exp.codomain());
    if (curried.size() != uncurried.size()) {
      return failure("exponential", test_name(i) + ": |Hom(X,B^A)| = " +
                                        std::to_string(curried.size()) + " but |Hom(XxA,B)| = " +
                                        std::to_string(uncurried.size()));
    }
    for (const auto& phi : uncurried) {
      if (!(exp.untranspose(exp.transpose(phi, domain), domain) == phi)) {
        return failure("exponential",
                       test_name(i) + ": untranspose(transpose(phi)) != phi for " + describe(phi));
      }
    }
    for (const auto& psi : curried) {
      if (!(exp.transpose(exp.untranspose(psi, domain), domain) == psi)) {
        return failure("exponential",
                       test_name(i) + ": transpose(untranspose(psi)) != psi for " + describe(psi));
      }
    }
  }
  return std::nullopt;
}

Certification certify_omega(const OmegaStructure& omega, const PresheafRef& host) {
  const auto subs = enumerate_subfunctors(host);
  for (const auto& s : subs) {
    if (!(omega.pullback_of_top(omega.classify(s)) == s)) {
      return failure("omega", "pullback of top along classify(S) differs from S");
    }
  }
  const auto maps = enumerate_nat_trans(host, omega.object());
  if (maps.size() != subs.size()) {
    return failure("omega", std::to_string(maps.size()) + " maps to Omega but " +
                                std::to_string(subs.size()) + " subobjects");
  }
  for (const auto& chi : maps) {
    if (!(omega.classify(omega.pullback_of_top(chi)) == chi)) {
      return failure("omega", "classifying map not unique: " + describe(chi));
    }
  }
  return std::nullopt;
}

HeytingTables heyting_tables(const SubobjectLattice& lattice) {
  HeytingTables t;
  const auto& elements = lattice.elements();
  t.size = elements.size();
  t.bottom = 0;
  t.top = t.size - 1;
  t.meet.resize(t.size * t.size);
  t.join.resize(t.size * t.size);
  t.implies.resize(t.size * t.size);
  t.leq.resize(t.size * t.size);
  t.negate.resize(t.size);
  for (std::size_t a = 0; a < t.size; ++a) {
    t.negate[a] = lattice.index_of(negate(elements[a]));
    for (std::size_t b = 0; b < t.size; ++b) {
      t.meet[a * t.size + b] = lattice.index_of(meet(elements[a], elements[b]));
      t.join[a * t.size + b] = lattice.index_of(join(elements[a], elements[b]));
      t.implies[a * t.size + b] = lattice.index_of(implies(elements[a], elements[b]));
      t.leq[a * t.size + b] = elements[a] <= elements[b];
    }
  }
  return t;
}

Certification certify_heyting(const HeytingTables& t) {
  const std::size_t n = t.size;
  auto triple = [](std::size_t a, std::size_t b, std::size_t c) {
    return "(" + std::to_string(a) + ", " + std::to_string(b) + ", " + std::to_string(c) + ")";
  };
  for (std::size_t a = 0; a < n; ++a) {
    if (t.negate[a] != t.at(t.implies, a, t.bottom)) {
      return failure("heyting", "negation differs from a=>bottom at " + triple(a, t.bottom, 0));
    }
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t c = 0; c < n; ++c) {
        const std::size_t lhs = t.at(t.meet, a, t.at(t.join, b, c));
        const std::size_t rhs = t.at(t.join, t.at(t.meet, a, b), t.at(t.meet, a, c));
        if (lhs != rhs) return failure("heyting", "distributivity fails at " + triple(a, b, c));
        const bool left = t.leq[t.at(t.meet, a, b) * n + c];
        const bool right = t.leq[a * n + t.at(t.implies, b, c)];
        if (left != right) return failure("heyting", "adjunction fails at " + triple(a, b, c));
      }
    }
  }
  return std::nullopt;
}

}  // namespace toposbench
