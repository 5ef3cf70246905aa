#include "gqs/ring.hpp"

#include "gqs/error.hpp"

namespace gqs {

namespace {

std::string triple(const GradedAbelianGroup& g, Elem a, Elem b, Elem c) {
  return "a=" + g.label(a) + " b=" + g.label(b) + " c=" + g.label(c);
}

std::string pair(const GradedAbelianGroup& g, Elem a, Elem b) { return "a=" + g.label(a) + " b=" + g.label(b); }

}  // namespace

RingPtr FiniteGradedRing::create(GradedAbelianGroup additive, std::vector<Elem> mul, Elem one, std::string name) {
  return RingPtr(new FiniteGradedRing(std::move(additive), std::move(mul), one, std::move(name)));
}

FiniteGradedRing::FiniteGradedRing(GradedAbelianGroup additive, std::vector<Elem> table, Elem one, std::string name)
    : additive_(std::move(additive)), mul_(std::move(table)), one_(one), name_(std::move(name)) {
  const std::uint32_t n = additive_.order();
  const auto& A = additive_;
  if (mul_.size() != static_cast<std::size_t>(n) * n) {
    throw Error(ErrorKind::InvalidArgument, "multiplication table has wrong size");
  }
  if (one_ >= n) throw Error(ErrorKind::InvalidArgument, "one index out of range");
  for (Elem v : mul_) {
    if (v >= n) throw Error(ErrorKind::InvalidArgument, "multiplication table entry out of range", std::to_string(v));
  }
  if (name_.empty()) name_ = "R" + std::to_string(n);

  for (Elem a = 0; a < n; ++a) {
    if (mul(one_, a) != a) throw Error(ErrorKind::AxiomViolation, "one is not a multiplicative identity", "a=" + A.label(a));
    for (Elem b = 0; b < n; ++b) {
      if (mul(a, b) != mul(b, a)) throw Error(ErrorKind::AxiomViolation, "multiplication is not commutative", pair(A, a, b));
      for (Elem c = 0; c < n; ++c) {
        if (mul(mul(a, b), c) != mul(a, mul(b, c))) {
          throw Error(ErrorKind::AxiomViolation, "multiplication is not associative", triple(A, a, b, c));
        }
        if (mul(a, A.add(b, c)) != A.add(mul(a, b), mul(a, c))) {
          throw Error(ErrorKind::AxiomViolation, "multiplication does not distribute over addition", triple(A, a, b, c));
        }
      }
    }
  }

  const auto& G = A.group();
  if (!A.component(G.identity()).contains(one_)) {
    throw Error(ErrorKind::GradingInconsistent, "1 is not in the identity component");
  }
  for (GroupElem g = 0; g < G.order(); ++g) {
    for (GroupElem h = 0; h < G.order(); ++h) {
      const ElementSet& target = A.component(G.compose(g, h));
      for (Elem a : A.component(g)) {
        for (Elem b : A.component(h)) {
          if (!target.contains(mul(a, b))) {
            throw Error(ErrorKind::GradingInconsistent, "R_g R_h is not contained in R_gh",
                        "g=" + std::to_string(g) + " h=" + std::to_string(h) + " " + pair(A, a, b));
          }
        }
      }
    }
  }

  std::vector<std::uint32_t> integerOf(n, n);
  Elem acc = A.zero();
  bool cyclic = true;
  for (std::uint32_t k = 0; k < n; ++k) {
    if (integerOf[acc] != n) {
      cyclic = false;
      break;
    }
    integerOf[acc] = k;
    acc = A.add(acc, one_);
  }
  if (cyclic) integerOf_ = std::move(integerOf);
}

Elem FiniteGradedRing::pow(Elem r, std::uint64_t n) const {
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "exponent must be positive");
  Elem acc = r;
  for (std::uint64_t i = 1; i < n; ++i) acc = mul(acc, r);
  return acc;
}

std::optional<std::uint32_t> FiniteGradedRing::integerValue(Elem r) const {
  if (integerOf_.empty()) return std::nullopt;
  return integerOf_[r];
}

RingPtr makeCyclicRing(std::uint32_t n, const GradingGroup& group) {
  if (n < 2) throw Error(ErrorKind::InvalidArgument, "cyclic ring needs n >= 2", "n=" + std::to_string(n));
  std::vector<Elem> add(static_cast<std::size_t>(n) * n), mul(static_cast<std::size_t>(n) * n);
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) {
      add[a * n + b] = (a + b) % n;
      mul[a * n + b] = static_cast<Elem>((static_cast<std::uint64_t>(a) * b) % n);
    }
  }
  std::vector<ElementSet> components;
  for (GroupElem g = 0; g < group.order(); ++g) {
    components.push_back(g == group.identity() ? ElementSet::all(n) : ElementSet::fromElements(n, std::vector<Elem>{0}));
  }
  GradedAbelianGroup additive(group, n, std::move(add), 0, std::move(components), indexPresentation(n));
  return FiniteGradedRing::create(std::move(additive), std::move(mul), 1, "Z" + std::to_string(n));
}

RingPtr makeQuotientPolyRing(std::uint32_t n, std::int64_t c, GroupElem xdeg, const GradingGroup& group) {
  if (n < 2) throw Error(ErrorKind::InvalidArgument, "coefficient ring needs n >= 2", "n=" + std::to_string(n));
  if (!group.contains(xdeg)) {
    throw Error(ErrorKind::InvalidArgument, "degree of x is not a group element", "xdeg=" + std::to_string(xdeg));
  }
  if (group.compose(xdeg, xdeg) != group.identity()) {
    throw Error(ErrorKind::GradingInconsistent, "x*x must have identity degree", "xdeg=" + std::to_string(xdeg));
  }
  const std::uint32_t order = n * n;
  const std::uint64_t cr = static_cast<std::uint64_t>(((c % n) + n) % n);
  // Element a + b x has index a + n b.
  auto idx = [n](std::uint64_t a, std::uint64_t b) { return static_cast<Elem>((a % n) + n * (b % n)); };
  std::vector<Elem> add(static_cast<std::size_t>(order) * order), mul(static_cast<std::size_t>(order) * order);
  for (Elem u = 0; u < order; ++u) {
    const std::uint64_t a = u % n, b = u / n;
    for (Elem v = 0; v < order; ++v) {
      const std::uint64_t a2 = v % n, b2 = v / n;
      add[static_cast<std::size_t>(u) * order + v] = idx(a + a2, b + b2);
      mul[static_cast<std::size_t>(u) * order + v] = idx(a * a2 + b * b2 % n * cr, a * b2 + a2 * b);
    }
  }
  std::vector<ElementSet> components(group.order(), ElementSet::fromElements(order, std::vector<Elem>{0}));
  if (xdeg == group.identity()) {
    components[group.identity()] = ElementSet::all(order);
  } else {
    std::vector<Elem> scalars, linear;
    for (Elem t = 0; t < n; ++t) {
      scalars.push_back(idx(t, 0));
      linear.push_back(idx(0, t));
    }
    components[group.identity()] = ElementSet::fromElements(order, scalars);
    components[xdeg] = ElementSet::fromElements(order, linear);
  }

  Presentation p;
  p.moduli = {static_cast<std::int64_t>(n), static_cast<std::int64_t>(n)};
  p.fromRadix.resize(order);
  p.labels.resize(order);
  for (Elem u = 0; u < order; ++u) {
    p.fromRadix[u] = u;
    const std::uint32_t a = u % n, b = u / n;
    std::string xs = b == 0 ? "" : (b == 1 ? "x" : std::to_string(b) + "x");
    if (a == 0) {
      p.labels[u] = b == 0 ? "0" : xs;
    } else {
      p.labels[u] = b == 0 ? std::to_string(a) : std::to_string(a) + "+" + xs;
    }
  }

  std::string name = "Z" + std::to_string(n) + "[x]/(x^2" + (cr == 0 ? std::string{} : "-" + std::to_string(cr)) + ")";
  if (xdeg == group.identity()) name += "{trivial}";
  GradedAbelianGroup additive(group, order, std::move(add), 0, std::move(components), std::move(p));
  return FiniteGradedRing::create(std::move(additive), std::move(mul), idx(1, 0), std::move(name));
}

std::vector<HomogeneousElement> homogeneousElements(const FiniteGradedRing& ring) {
  std::vector<HomogeneousElement> out;
  for (Elem x : ring.homogeneous()) out.push_back({x, *ring.degreeOf(x)});
  return out;
}

std::uint64_t exponentBound(const FiniteGradedRing& ring) { return ring.order(); }

}  // namespace gqs
