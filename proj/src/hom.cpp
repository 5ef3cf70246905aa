#include "gqs/hom.hpp"

#include <deque>

#include "gqs/error.hpp"

namespace gqs {

GradedHomomorphism GradedHomomorphism::make(ModulePtr source, ModulePtr target, std::vector<Elem> table) {
  if (!source || !target) throw Error(ErrorKind::InvalidArgument, "null module");
  if (source->ring() != target->ring()) throw Error(ErrorKind::InvalidArgument, "modules over different rings");
  const auto& M = *source;
  const auto& N = *target;
  const auto& R = *M.ring();
  if (table.size() != M.order()) throw Error(ErrorKind::InvalidArgument, "map table has wrong size");
  for (Elem v : table) {
    if (v >= N.order()) throw Error(ErrorKind::InvalidArgument, "map value out of range", std::to_string(v));
  }
  for (Elem x = 0; x < M.order(); ++x) {
    for (Elem y = 0; y < M.order(); ++y) {
      if (table[M.add(x, y)] != N.add(table[x], table[y])) {
        throw Error(ErrorKind::NotAdditive, "f(x+y) != f(x)+f(y)", "x=" + M.label(x) + " y=" + M.label(y));
      }
    }
  }
  for (Elem r = 0; r < R.order(); ++r) {
    for (Elem x = 0; x < M.order(); ++x) {
      if (table[M.act(r, x)] != N.act(r, table[x])) {
        throw Error(ErrorKind::NotLinear, "f(rx) != r f(x)", "r=" + R.label(r) + " x=" + M.label(x));
      }
    }
  }
  for (GroupElem g = 0; g < M.group().order(); ++g) {
    for (Elem x : M.component(g)) {
      if (!N.component(g).contains(table[x])) {
        throw Error(ErrorKind::NotGradedHom, "f(M_g) is not contained in M'_g",
                    "g=" + std::to_string(g) + " x=" + M.label(x) + " f(x)=" + N.label(table[x]));
      }
    }
  }
  return GradedHomomorphism(std::move(source), std::move(target), std::move(table));
}

GradedSubmodule kernel(const GradedHomomorphism& f) {
  std::vector<bool> mask(f.source()->order(), false);
  for (Elem x = 0; x < f.source()->order(); ++x) mask[x] = f(x) == f.target()->zero();
  return GradedSubmodule::fromElements(f.source(), ElementSet::fromMask(std::move(mask)));
}

GradedSubmodule image(const GradedHomomorphism& f, const GradedSubmodule& submodule) {
  if (submodule.module() != f.source()) throw Error(ErrorKind::InvalidArgument, "submodule is not in the source");
  std::vector<bool> mask(f.target()->order(), false);
  for (Elem x : submodule.elements()) mask[f(x)] = true;
  return GradedSubmodule::fromElements(f.target(), ElementSet::fromMask(std::move(mask)));
}

GradedSubmodule preimage(const GradedHomomorphism& f, const GradedSubmodule& submodule) {
  if (submodule.module() != f.target()) throw Error(ErrorKind::InvalidArgument, "submodule is not in the target");
  std::vector<bool> mask(f.source()->order(), false);
  for (Elem x = 0; x < f.source()->order(); ++x) mask[x] = submodule.contains(f(x));
  return GradedSubmodule::fromElements(f.source(), ElementSet::fromMask(std::move(mask)));
}

bool isEpimorphism(const GradedHomomorphism& f) {
  std::vector<bool> hit(f.target()->order(), false);
  for (Elem v : f.table()) hit[v] = true;
  for (bool b : hit) {
    if (!b) return false;
  }
  return true;
}

GradedHomomorphism quotientProjection(const GradedSubmodule& kernel) {
  auto q = quotientModule(kernel.module(), kernel);
  return GradedHomomorphism::make(kernel.module(), std::move(q.module), std::move(q.projection));
}

namespace {

// Extends a partial assignment on generators to the whole module, or
// reports a conflict. Linear and additive propagation from a generating set
// reaches every element.
bool extendLinearly(const GradedModule& M, const GradedModule& N, const std::vector<Elem>& gens,
                    const std::vector<Elem>& images, std::vector<Elem>& table) {
  const Elem unset = M.order();
  table.assign(M.order(), unset);
  std::vector<Elem> assigned;
  std::deque<Elem> queue;
  auto set = [&](Elem x, Elem v) {
    if (table[x] == unset) {
      table[x] = v;
      queue.push_back(x);
      return true;
    }
    return table[x] == v;
  };
  if (!set(M.zero(), N.zero())) return false;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (!set(gens[i], images[i])) return false;
  }
  const auto& R = *M.ring();
  while (!queue.empty()) {
    const Elem x = queue.front();
    queue.pop_front();
    assigned.push_back(x);
    for (Elem r = 0; r < R.order(); ++r) {
      if (!set(M.act(r, x), N.act(r, table[x]))) return false;
    }
    for (Elem y : assigned) {
      if (!set(M.add(x, y), N.add(table[x], table[y]))) return false;
    }
  }
  return assigned.size() == M.order();
}

}  // namespace

GradedHomomorphism linearExtension(const ModulePtr& source, const ModulePtr& target, const std::vector<Elem>& gens,
                                   const std::vector<Elem>& images) {
  if (!source || !target) throw Error(ErrorKind::InvalidArgument, "null module");
  if (gens.size() != images.size()) throw Error(ErrorKind::InvalidArgument, "one image per generator required");
  for (Elem g : gens) {
    if (g >= source->order()) throw Error(ErrorKind::InvalidArgument, "generator out of range");
  }
  for (Elem v : images) {
    if (v >= target->order()) throw Error(ErrorKind::InvalidArgument, "image out of range");
  }
  std::vector<Elem> table;
  if (!extendLinearly(*source, *target, gens, images, table)) {
    throw Error(ErrorKind::NotLinear, "generator images do not extend to a linear map");
  }
  return GradedHomomorphism::make(source, target, std::move(table));
}

std::vector<GradedHomomorphism> gradedEndomorphisms(const ModulePtr& module) {
  const auto& M = *module;
  std::vector<Elem> gens;
  GradedSubmodule span = zeroSubmodule(module);
  for (Elem h : M.homogeneous()) {
    if (span.contains(h)) continue;
    gens.push_back(h);
    span = submoduleClosure(module, gens);
  }

  std::vector<const std::vector<Elem>*> choices;
  for (Elem g : gens) choices.push_back(&M.component(*M.degreeOf(g)).elements());

  std::vector<GradedHomomorphism> out;
  std::vector<std::size_t> digit(gens.size(), 0);
  std::vector<Elem> images(gens.size());
  std::vector<Elem> table;
  while (true) {
    for (std::size_t i = 0; i < gens.size(); ++i) images[i] = (*choices[i])[digit[i]];
    if (extendLinearly(M, M, gens, images, table)) {
      out.push_back(GradedHomomorphism::make(module, module, table));
    }
    std::size_t i = 0;
    for (; i < gens.size(); ++i) {
      if (++digit[i] < choices[i]->size()) break;
      digit[i] = 0;
    }
    if (i == gens.size()) break;
  }
  return out;
}

}  // namespace gqs
