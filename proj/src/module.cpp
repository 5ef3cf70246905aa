#include "gqs/module.hpp"

#include <algorithm>
#include <map>

#include "gqs/detail/closure.hpp"
#include "gqs/error.hpp"

namespace gqs {

namespace {

std::vector<bool> submoduleMask(const GradedModule& M, std::span<const Elem> gens) {
  return detail::closeUnder(
      M.order(), M.zero(), gens, M.ring()->order(), [&](Elem a, Elem b) { return M.add(a, b); },
      [&](Elem r, Elem x) { return M.act(r, x); });
}

constexpr std::size_t kMaxProductOrder = 1U << 16U;

}  // namespace

std::shared_ptr<const GradedModule> GradedModule::create(RingPtr ring, GradedAbelianGroup additive,
                                                         std::vector<Elem> action, std::string name) {
  return std::shared_ptr<const GradedModule>(
      new GradedModule(std::move(ring), std::move(additive), std::move(action), std::move(name)));
}

GradedModule::GradedModule(RingPtr ring, GradedAbelianGroup additive, std::vector<Elem> action, std::string name)
    : ring_(std::move(ring)), additive_(std::move(additive)), action_(std::move(action)), name_(std::move(name)) {
  if (!ring_) throw Error(ErrorKind::InvalidArgument, "null ring");
  const auto& R = *ring_;
  const auto& A = additive_;
  const std::uint32_t m = A.order();
  if (!(A.group() == R.group())) throw Error(ErrorKind::InvalidArgument, "module and ring are graded by different groups");
  if (action_.size() != static_cast<std::size_t>(R.order()) * m) {
    throw Error(ErrorKind::InvalidArgument, "action table has wrong size");
  }
  for (Elem v : action_) {
    if (v >= m) throw Error(ErrorKind::InvalidArgument, "action table entry out of range", std::to_string(v));
  }
  if (name_.empty()) name_ = "M" + std::to_string(m);

  auto rx = [&](Elem r, Elem x) { return "r=" + R.label(r) + " x=" + A.label(x); };
  for (Elem x = 0; x < m; ++x) {
    if (act(R.one(), x) != x) throw Error(ErrorKind::AxiomViolation, "1 does not act as identity", "x=" + A.label(x));
  }
  for (Elem r = 0; r < R.order(); ++r) {
    for (Elem x = 0; x < m; ++x) {
      for (Elem s = 0; s < R.order(); ++s) {
        if (act(R.add(r, s), x) != A.add(act(r, x), act(s, x))) {
          throw Error(ErrorKind::AxiomViolation, "(r+s)x != rx+sx", rx(r, x) + " s=" + R.label(s));
        }
        if (act(R.mul(r, s), x) != act(r, act(s, x))) {
          throw Error(ErrorKind::AxiomViolation, "(rs)x != r(sx)", rx(r, x) + " s=" + R.label(s));
        }
      }
      for (Elem y = 0; y < m; ++y) {
        if (act(r, A.add(x, y)) != A.add(act(r, x), act(r, y))) {
          throw Error(ErrorKind::AxiomViolation, "r(x+y) != rx+ry", rx(r, x) + " y=" + A.label(y));
        }
      }
    }
  }

  const auto& G = A.group();
  for (GroupElem g = 0; g < G.order(); ++g) {
    for (GroupElem h = 0; h < G.order(); ++h) {
      const ElementSet& target = A.component(G.compose(g, h));
      for (Elem r : R.component(g)) {
        for (Elem x : A.component(h)) {
          if (!target.contains(act(r, x))) {
            throw Error(ErrorKind::GradingInconsistent, "R_g M_h is not contained in M_gh",
                        "g=" + std::to_string(g) + " h=" + std::to_string(h) + " " + rx(r, x));
          }
        }
      }
    }
  }
}

GradedSubmodule GradedSubmodule::fromElements(ModulePtr module, ElementSet elements) {
  if (!module) throw Error(ErrorKind::InvalidArgument, "null module");
  const auto& M = *module;
  if (elements.universe() != M.order()) throw Error(ErrorKind::InvalidArgument, "submodule universe does not match module");
  if (!elements.contains(M.zero())) throw Error(ErrorKind::AxiomViolation, "submodule must contain zero");
  for (Elem a : elements) {
    for (Elem b : elements) {
      if (!elements.contains(M.add(a, b))) {
        throw Error(ErrorKind::AxiomViolation, "not closed under addition", "a=" + M.label(a) + " b=" + M.label(b));
      }
    }
    for (Elem r = 0; r < M.ring()->order(); ++r) {
      if (!elements.contains(M.act(r, a))) {
        throw Error(ErrorKind::AxiomViolation, "not closed under the action",
                    "r=" + M.ring()->label(r) + " x=" + M.label(a));
      }
    }
  }
  if (auto w = detail::gradedWitness(M.additive(), elements)) {
    throw Error(ErrorKind::NotGraded, "submodule is not graded", M.label(*w));
  }
  return GradedSubmodule(std::move(module), std::move(elements), {});
}

ModulePtr ringAsModule(const RingPtr& ring) {
  if (!ring) throw Error(ErrorKind::InvalidArgument, "null ring");
  const auto n = ring->order();
  std::vector<Elem> action(static_cast<std::size_t>(n) * n);
  for (Elem r = 0; r < n; ++r) {
    for (Elem x = 0; x < n; ++x) action[static_cast<std::size_t>(r) * n + x] = ring->mul(r, x);
  }
  return GradedModule::create(ring, ring->additive(), std::move(action), ring->name());
}

ModulePtr productModule(std::span<const CyclicFactor> factors, const RingPtr& ring) {
  if (!ring) throw Error(ErrorKind::InvalidArgument, "null ring");
  if (factors.empty()) throw Error(ErrorKind::InvalidArgument, "product module needs at least one factor");
  if (!ring->isCyclic()) {
    throw Error(ErrorKind::InvalidArgument, "product modules need a ring whose additive group is generated by 1",
                ring->name());
  }
  const auto& G = ring->group();
  std::size_t order = 1;
  for (const auto& f : factors) {
    if (f.order < 2) throw Error(ErrorKind::InvalidArgument, "factor order must be >= 2", std::to_string(f.order));
    if (!G.contains(f.degree)) {
      throw Error(ErrorKind::InvalidArgument, "factor degree is not a group element", std::to_string(f.degree));
    }
    order *= f.order;
    if (order > kMaxProductOrder) throw Error(ErrorKind::InvalidArgument, "product module too large");
  }
  const auto m = static_cast<std::uint32_t>(order);
  const std::size_t k = factors.size();

  std::vector<std::vector<std::uint32_t>> coords(m, std::vector<std::uint32_t>(k));
  for (Elem x = 0; x < m; ++x) {
    std::uint32_t rest = x;
    for (std::size_t i = 0; i < k; ++i) {
      coords[x][i] = rest % factors[i].order;
      rest /= factors[i].order;
    }
  }
  auto index = [&](const std::vector<std::uint64_t>& c) {
    Elem x = 0, stride = 1;
    for (std::size_t i = 0; i < k; ++i) {
      x += static_cast<Elem>(c[i] % factors[i].order) * stride;
      stride *= factors[i].order;
    }
    return x;
  };

  std::vector<Elem> add(static_cast<std::size_t>(m) * m);
  std::vector<std::uint64_t> tmp(k);
  for (Elem x = 0; x < m; ++x) {
    for (Elem y = 0; y < m; ++y) {
      for (std::size_t i = 0; i < k; ++i) tmp[i] = coords[x][i] + coords[y][i];
      add[static_cast<std::size_t>(x) * m + y] = index(tmp);
    }
  }
  std::vector<Elem> action(static_cast<std::size_t>(ring->order()) * m);
  for (Elem r = 0; r < ring->order(); ++r) {
    const std::uint64_t kr = *ring->integerValue(r);
    for (Elem x = 0; x < m; ++x) {
      for (std::size_t i = 0; i < k; ++i) tmp[i] = kr * coords[x][i];
      action[static_cast<std::size_t>(r) * m + x] = index(tmp);
    }
  }
  std::vector<ElementSet> components;
  for (GroupElem g = 0; g < G.order(); ++g) {
    std::vector<bool> mask(m, false);
    for (Elem x = 0; x < m; ++x) {
      bool inside = true;
      for (std::size_t i = 0; i < k; ++i) {
        if (coords[x][i] != 0 && factors[i].degree != g) inside = false;
      }
      mask[x] = inside;
    }
    components.push_back(ElementSet::fromMask(std::move(mask)));
  }

  Presentation p;
  for (const auto& f : factors) p.moduli.push_back(f.order);
  p.fromRadix.resize(m);
  p.labels.resize(m);
  for (Elem x = 0; x < m; ++x) {
    p.fromRadix[x] = x;
    std::string label;
    for (std::size_t i = 0; i < k; ++i) {
      if (i > 0) label += ",";
      label += std::to_string(coords[x][i]);
    }
    p.labels[x] = k == 1 ? label : "(" + label + ")";
  }

  std::string name = ring->name() + " | ";
  for (std::size_t i = 0; i < k; ++i) {
    if (i > 0) name += "x";
    name += "Z" + std::to_string(factors[i].order) + "[" + std::to_string(factors[i].degree) + "]";
  }
  GradedAbelianGroup additive(G, m, std::move(add), 0, std::move(components), std::move(p));
  return GradedModule::create(ring, std::move(additive), std::move(action), std::move(name));
}

GradedSubmodule submoduleClosure(const ModulePtr& module, std::span<const Elem> gens) {
  if (!module) throw Error(ErrorKind::InvalidArgument, "null module");
  for (Elem g : gens) {
    if (g >= module->order()) throw Error(ErrorKind::InvalidArgument, "generator out of range", std::to_string(g));
  }
  ElementSet set = ElementSet::fromMask(submoduleMask(*module, gens));
  if (auto w = detail::gradedWitness(module->additive(), set)) {
    throw Error(ErrorKind::NotGraded, "generated submodule is not graded", module->label(*w));
  }
  return GradedSubmodule(module, std::move(set), std::vector<Elem>(gens.begin(), gens.end()));
}

std::vector<GradedSubmodule> enumerateGradedSubmodules(const ModulePtr& module) {
  std::map<std::vector<Elem>, GradedSubmodule> found;
  std::vector<GradedSubmodule> frontier{submoduleClosure(module, {})};
  found.emplace(frontier.front().elements().elements(), frontier.front());
  while (!frontier.empty()) {
    std::vector<GradedSubmodule> next;
    for (const auto& sub : frontier) {
      for (Elem h : module->homogeneous()) {
        if (sub.contains(h)) continue;
        std::vector<Elem> gens = sub.elements().elements();
        gens.push_back(h);
        GradedSubmodule bigger = GradedSubmodule::fromElements(module, ElementSet::fromMask(submoduleMask(*module, gens)));
        if (found.emplace(bigger.elements().elements(), bigger).second) next.push_back(std::move(bigger));
      }
    }
    frontier = std::move(next);
  }
  std::vector<GradedSubmodule> out;
  out.reserve(found.size());
  for (auto& [key, sub] : found) out.push_back(std::move(sub));
  std::sort(out.begin(), out.end(), [](const GradedSubmodule& a, const GradedSubmodule& b) {
    return canonicalLess(a.elements(), b.elements());
  });
  return out;
}

GradedIdeal colonIdeal(const GradedSubmodule& submodule) {
  const auto& M = *submodule.module();
  const auto& R = *M.ring();
  std::vector<bool> mask(R.order(), false);
  for (Elem r = 0; r < R.order(); ++r) {
    bool inside = true;
    for (Elem x = 0; x < M.order() && inside; ++x) inside = submodule.contains(M.act(r, x));
    mask[r] = inside;
  }
  try {
    return GradedIdeal::fromElements(M.ring(), ElementSet::fromMask(std::move(mask)));
  } catch (const Error& e) {
    throw std::logic_error(std::string("colon ideal of a graded submodule violated the graded-ideal invariant: ") +
                           e.what());
  }
}

GradedIdeal annihilator(const GradedSubmodule& submodule) {
  const auto& M = *submodule.module();
  const auto& R = *M.ring();
  std::vector<bool> mask(R.order(), false);
  for (Elem r = 0; r < R.order(); ++r) {
    bool kills = true;
    for (Elem x : submodule.elements()) {
      if (M.act(r, x) != M.zero()) {
        kills = false;
        break;
      }
    }
    mask[r] = kills;
  }
  try {
    return GradedIdeal::fromElements(M.ring(), ElementSet::fromMask(std::move(mask)));
  } catch (const Error& e) {
    throw std::logic_error(std::string("annihilator violated the graded-ideal invariant: ") + e.what());
  }
}

GradedSubmodule idealTimesModule(const GradedIdeal& ideal, const ModulePtr& module) {
  if (ideal.ring() != module->ring()) throw Error(ErrorKind::InvalidArgument, "ideal and module over different rings");
  std::vector<bool> products(module->order(), false);
  for (Elem r : ideal.elements()) {
    for (Elem x = 0; x < module->order(); ++x) products[module->act(r, x)] = true;
  }
  std::vector<Elem> gens = ElementSet::fromMask(std::move(products)).elements();
  return submoduleClosure(module, gens);
}

GradedSubmodule intersect(const GradedSubmodule& a, const GradedSubmodule& b) {
  if (a.module() != b.module()) throw Error(ErrorKind::InvalidArgument, "submodules of different modules");
  return GradedSubmodule::fromElements(a.module(), a.elements().intersect(b.elements()));
}

GradedSubmodule submoduleSum(const GradedSubmodule& a, const GradedSubmodule& b) {
  if (a.module() != b.module()) throw Error(ErrorKind::InvalidArgument, "submodules of different modules");
  std::vector<Elem> gens = a.elements().elements();
  gens.insert(gens.end(), b.elements().begin(), b.elements().end());
  return submoduleClosure(a.module(), gens);
}

GradedSubmodule wholeModule(const ModulePtr& module) {
  return GradedSubmodule::fromElements(module, ElementSet::all(module->order()));
}

GradedSubmodule zeroSubmodule(const ModulePtr& module) { return submoduleClosure(module, {}); }

QuotientModule quotientModule(const ModulePtr& module, const GradedSubmodule& kernel) {
  if (kernel.module() != module) throw Error(ErrorKind::InvalidArgument, "kernel is not a submodule of this module");
  const auto& M = *module;
  const auto& R = *M.ring();
  const std::uint32_t m = M.order();

  std::vector<Elem> rep(m);
  for (Elem x = 0; x < m; ++x) {
    Elem best = x;
    for (Elem k : kernel.elements()) best = std::min(best, M.add(x, k));
    rep[x] = best;
  }
  std::vector<Elem> cosetOfRep(m, m);
  std::vector<Elem> reps;
  for (Elem x = 0; x < m; ++x) {
    if (rep[x] == x) {
      cosetOfRep[x] = static_cast<Elem>(reps.size());
      reps.push_back(x);
    }
  }
  const auto q = static_cast<std::uint32_t>(reps.size());
  std::vector<Elem> projection(m);
  for (Elem x = 0; x < m; ++x) projection[x] = cosetOfRep[rep[x]];

  std::vector<Elem> add(static_cast<std::size_t>(q) * q);
  for (Elem a = 0; a < q; ++a) {
    for (Elem b = 0; b < q; ++b) add[static_cast<std::size_t>(a) * q + b] = projection[M.add(reps[a], reps[b])];
  }
  std::vector<Elem> action(static_cast<std::size_t>(R.order()) * q);
  for (Elem r = 0; r < R.order(); ++r) {
    for (Elem a = 0; a < q; ++a) action[static_cast<std::size_t>(r) * q + a] = projection[M.act(r, reps[a])];
  }
  std::vector<ElementSet> components;
  for (GroupElem g = 0; g < M.group().order(); ++g) {
    std::vector<bool> mask(q, false);
    for (Elem x : M.component(g)) mask[projection[x]] = true;
    components.push_back(ElementSet::fromMask(std::move(mask)));
  }

  const auto& base = M.additive().presentation();
  Presentation p;
  p.moduli = base.moduli;
  p.fromRadix.reserve(base.fromRadix.size());
  for (Elem x : base.fromRadix) p.fromRadix.push_back(projection[x]);
  for (Elem a = 0; a < q; ++a) p.labels.push_back("[" + M.label(reps[a]) + "]");

  GradedAbelianGroup additive(M.group(), q, std::move(add), projection[M.zero()], std::move(components), std::move(p));
  auto quotient = GradedModule::create(M.ring(), std::move(additive), std::move(action),
                                       M.name() + " / " + kernel.toString());
  return {std::move(quotient), std::move(projection)};
}

}  // namespace gqs
