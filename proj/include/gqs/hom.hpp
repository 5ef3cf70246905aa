#pragma once

#include <vector>

#include "gqs/module.hpp"

namespace gqs {

/// R-linear map between graded modules over the same ring with
/// f(M_g) contained in M'_g for every g.
class GradedHomomorphism {
 public:
  /// Rejects with NotAdditive, NotLinear or NotGradedHom, each carrying the
  /// first offending element(s) in index order.
  static GradedHomomorphism make(ModulePtr source, ModulePtr target, std::vector<Elem> table);

  const ModulePtr& source() const { return source_; }
  const ModulePtr& target() const { return target_; }
  Elem operator()(Elem x) const { return table_[x]; }
  const std::vector<Elem>& table() const { return table_; }

 private:
  GradedHomomorphism(ModulePtr source, ModulePtr target, std::vector<Elem> table)
      : source_(std::move(source)), target_(std::move(target)), table_(std::move(table)) {}

  ModulePtr source_;
  ModulePtr target_;
  std::vector<Elem> table_;
};

GradedSubmodule kernel(const GradedHomomorphism& f);
/// f(N) for a graded submodule N of the source.
GradedSubmodule image(const GradedHomomorphism& f, const GradedSubmodule& submodule);
/// f^{-1}(N') for a graded submodule N' of the target.
GradedSubmodule preimage(const GradedHomomorphism& f, const GradedSubmodule& submodule);
bool isEpimorphism(const GradedHomomorphism& f);

/// Canonical projection M -> M/K as a validated graded epimorphism.
GradedHomomorphism quotientProjection(const GradedSubmodule& kernel);

/// All graded endomorphisms of M, found by assigning each homogeneous
/// generator an image of the same degree and propagating linearly.
/// The unique R-linear map sending gens[i] to images[i]; the generators must
/// generate the source. Throws NotLinear on conflicting images and the usual
/// hom errors otherwise.
GradedHomomorphism linearExtension(const ModulePtr& source, const ModulePtr& target, const std::vector<Elem>& gens,
                                   const std::vector<Elem>& images);
std::vector<GradedHomomorphism> gradedEndomorphisms(const ModulePtr& module);

}  // namespace gqs
