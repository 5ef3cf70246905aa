#include <sstream>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "gqs/cli.hpp"
#include "gqs/document.hpp"
#include "gqs/error.hpp"
#include "gqs/harness.hpp"
#include "gqs/hom.hpp"
#include "gqs/predicates.hpp"

namespace py = pybind11;
using namespace gqs;

// The library hands out shared_ptr<const T>; pybind11 holders must be
// non-const, so these casters route through shared_ptr<T>.
namespace pybind11::detail {

template <typename T>
struct ConstSharedCaster {
  using Mutable = make_caster<std::shared_ptr<T>>;
  PYBIND11_TYPE_CASTER(std::shared_ptr<const T>, Mutable::name);

  bool load(handle src, bool convert) {
    Mutable inner;
    if (!inner.load(src, convert)) return false;
    value = cast_op<std::shared_ptr<T>>(inner);
    return true;
  }
  static handle cast(const std::shared_ptr<const T>& src, return_value_policy policy, handle parent) {
    return Mutable::cast(std::const_pointer_cast<T>(src), policy, parent);
  }
};

template <>
struct type_caster<std::shared_ptr<const gqs::FiniteGradedRing>> : ConstSharedCaster<gqs::FiniteGradedRing> {};
template <>
struct type_caster<std::shared_ptr<const gqs::GradedModule>> : ConstSharedCaster<gqs::GradedModule> {};
template <>
struct type_caster<std::shared_ptr<const gqs::ZModuleInstance>> : ConstSharedCaster<gqs::ZModuleInstance> {};

}  // namespace pybind11::detail

namespace {

py::object fromJson(const nlohmann::json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

py::object powerWitness(const std::optional<PowerWitness>& w) {
  if (!w) return py::none();
  return py::make_tuple(w->r, w->x, w->n);
}

GradingGroup group(std::uint32_t order) { return GradingGroup::cyclic(order); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Graded semiprime and quasi-semiprime submodules over finite rings and the integers";

  static py::handle gqsError = py::exception<Error>(m, "GqsError", PyExc_RuntimeError).release();
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object err = gqsError(e.what());
      err.attr("kind") = toString(e.kind());
      err.attr("witness") = e.witness();
      PyErr_SetObject(gqsError.ptr(), err.ptr());
    }
  });

  py::class_<FiniteGradedRing, std::shared_ptr<FiniteGradedRing>>(m, "Ring")
      .def_property_readonly("order", &FiniteGradedRing::order)
      .def_property_readonly("name", &FiniteGradedRing::name)
      .def_property_readonly("homogeneous", &FiniteGradedRing::homogeneous)
      .def("degree_of", &FiniteGradedRing::degreeOf)
      .def("label", py::overload_cast<Elem>(&FiniteGradedRing::label, py::const_))
      .def("mul", &FiniteGradedRing::mul)
      .def("add", &FiniteGradedRing::add)
      .def("__repr__", [](const FiniteGradedRing& r) { return "<Ring " + r.name() + ">"; });

  py::class_<GradedModule, std::shared_ptr<GradedModule>>(m, "Module")
      .def_property_readonly("order", &GradedModule::order)
      .def_property_readonly("name", &GradedModule::name)
      .def_property_readonly("ring", &GradedModule::ring)
      .def("degree_of", &GradedModule::degreeOf)
      .def("act", &GradedModule::act)
      .def("label", py::overload_cast<Elem>(&GradedModule::label, py::const_))
      .def("__repr__", [](const GradedModule& mod) { return "<Module " + mod.name() + ">"; });

  py::class_<GradedIdeal>(m, "Ideal")
      .def_property_readonly("elements", [](const GradedIdeal& i) { return i.elements().elements(); })
      .def_property_readonly("ring", &GradedIdeal::ring)
      .def("is_proper", &GradedIdeal::isProper)
      .def("__len__", &GradedIdeal::size)
      .def("__contains__", &GradedIdeal::contains)
      .def("__eq__", [](const GradedIdeal& a, const GradedIdeal& b) { return a == b; })
      .def("__str__", &GradedIdeal::toString)
      .def("__repr__", [](const GradedIdeal& i) { return "<Ideal " + i.toString() + ">"; });

  py::class_<GradedSubmodule>(m, "Submodule")
      .def_property_readonly("elements", [](const GradedSubmodule& n) { return n.elements().elements(); })
      .def_property_readonly("module", &GradedSubmodule::module)
      .def("is_proper", &GradedSubmodule::isProper)
      .def("__len__", &GradedSubmodule::size)
      .def("__contains__", &GradedSubmodule::contains)
      .def("__eq__", [](const GradedSubmodule& a, const GradedSubmodule& b) { return a == b; })
      .def("__str__", &GradedSubmodule::toString)
      .def("__repr__", [](const GradedSubmodule& n) { return "<Submodule " + n.toString() + ">"; });

  m.def("cyclic_ring", [](std::uint32_t n, std::uint32_t groupOrder) { return makeCyclicRing(n, group(groupOrder)); },
        py::arg("n"), py::arg("group_order") = 2);
  m.def(
      "quotient_poly_ring",
      [](std::uint32_t n, std::uint32_t c, GroupElem xdeg, std::uint32_t groupOrder) {
        return makeQuotientPolyRing(n, c, xdeg, group(groupOrder));
      },
      py::arg("n"), py::arg("c"), py::arg("xdeg") = 1, py::arg("group_order") = 2,
      "Z_n[x]/(x^2 - c) with x in degree xdeg.");
  m.def("ring_as_module", &ringAsModule);
  m.def(
      "product_module",
      [](const std::vector<std::pair<std::uint32_t, GroupElem>>& factors, const RingPtr& ring) {
        std::vector<CyclicFactor> f;
        for (const auto& [n, d] : factors) f.push_back({n, d});
        return productModule(f, ring);
      },
      py::arg("factors"), py::arg("ring"), "Product of cyclic factors given as (order, degree) pairs.");
  m.def("quotient_module", [](const ModulePtr& mod, const GradedSubmodule& k) { return quotientModule(mod, k).module; });

  m.def("ideal", [](const RingPtr& r, const std::vector<Elem>& gens) { return idealClosure(r, gens); });
  m.def("submodule", [](const ModulePtr& mod, const std::vector<Elem>& gens) { return submoduleClosure(mod, gens); });
  m.def("enumerate_ideals", &enumerateGradedIdeals);
  m.def("enumerate_submodules", &enumerateGradedSubmodules);
  m.def("colon_ideal", &colonIdeal);
  m.def("annihilator", &annihilator);

  m.def("is_semiprime_ideal", &isGradedSemiprimeIdeal, py::arg("ideal"), py::arg("bound") = 0);
  m.def("is_prime_ideal", &isGradedPrimeIdeal);
  m.def("is_primary_ideal", &isGradedPrimaryIdeal, py::arg("ideal"), py::arg("bound") = 0);
  m.def("is_maximal_ideal", &isGradedMaximalIdeal);
  m.def("radical", &gradedRadical, py::arg("ideal"), py::arg("bound") = 0);

  m.def("is_semiprime_submodule", &isGradedSemiprimeSubmodule, py::arg("submodule"), py::arg("bound") = 0);
  m.def(
      "check_semiprime_submodule",
      [](const GradedSubmodule& n) {
        const auto v = checkGradedSemiprimeSubmodule(n);
        return py::make_tuple(v.holds, powerWitness(v.witness));
      },
      "(holds, (r, m, n) or None)");
  m.def("is_quasi_semiprime_submodule", &isGradedQuasiSemiprimeSubmodule);
  m.def("is_multiplication_module", &isGradedMultiplicationModule);
  m.def("ideal_power_criterion", &idealPowerCriterion);
  m.def("envelope", [](const GradedSubmodule& n) { return gradedEnvelope(n).submodule; });
  m.def("is_semiprime_module", &isGradedSemiprimeModule);
  m.def("is_quasi_semiprime_module", &isGradedQuasiSemiprimeModule);

  py::class_<GradedHomomorphism>(m, "Hom")
      .def("__call__", &GradedHomomorphism::operator())
      .def_property_readonly("table", &GradedHomomorphism::table);
  m.def("quotient_projection", &quotientProjection);
  m.def("kernel", &kernel);
  m.def("image", &image);
  m.def("preimage", &preimage);
  m.def("is_epimorphism", &isEpimorphism);

  py::class_<ZModuleInstance, std::shared_ptr<ZModuleInstance>>(m, "ZModule")
      .def_property_readonly("free_rank", &ZModuleInstance::freeRank)
      .def_property_readonly("torsion", &ZModuleInstance::torsionOrders)
      .def("__repr__", [](const ZModuleInstance& z) { return "<ZModule " + z.describe() + ">"; });
  py::class_<ZSubmodule>(m, "ZSubmodule")
      .def("__contains__", [](const ZSubmodule& n, const ZVector& v) { return zMembership(n, v); })
      .def("__str__", &ZSubmodule::toString);

  m.def(
      "z_module",
      [](std::uint32_t freeRank, const std::vector<std::int64_t>& torsion, const std::vector<GroupElem>& degrees,
         std::uint32_t groupOrder) { return ZModuleInstance::create(group(groupOrder), freeRank, torsion, degrees); },
      py::arg("free"), py::arg("torsion"), py::arg("degrees"), py::arg("group_order") = 2);
  m.def("z_submodule", &ZSubmodule::create);
  m.def("z_colon_ideal", [](const ZSubmodule& n) { return zColonIdeal(n).generator; },
        "Nonnegative generator c of (N : M) = cZ.");
  m.def("z_is_semiprime_ideal", [](std::int64_t c) { return zIsSemiprimeIdeal({c}); });
  m.def("z_is_quasi_semiprime", [](const ZSubmodule& n) { return zIsProper(n) && zIsSemiprimeIdeal(zColonIdeal(n)); });
  m.def("z_witness_not_semiprime", &zWitnessNotSemiprime);
  m.def(
      "z_check_semiprime_torsion",
      [](const ZSubmodule& n) {
        const auto v = zCheckSemiprimeSubmoduleTorsion(n);
        py::object w = py::none();
        if (v.witness) w = py::make_tuple(v.witness->r, v.witness->m, v.witness->n);
        return py::make_tuple(v.holds, w);
      },
      "(holds, (r, m, n) or None); torsion modules only.");

  py::class_<ResolvedStructure>(m, "Structure")
      .def_property_readonly("is_integer", &ResolvedStructure::isInteger)
      .def_readonly("ring", &ResolvedStructure::ring)
      .def_readonly("module", &ResolvedStructure::module)
      .def_readonly("submodules", &ResolvedStructure::submodules)
      .def_readonly("ideals", &ResolvedStructure::ideals)
      .def_readonly("zmodule", &ResolvedStructure::zmodule)
      .def_readonly("zsubmodules", &ResolvedStructure::zsubmodules);
  m.def("load_structure", [](const std::string& path) { return resolve(loadStructure(path)); });
  m.def("parse_structure", [](const std::string& text) { return resolve(parseStructure(text)); });
  m.def("canonical_document", [](const std::string& text) { return serialize(parseStructure(text)); });

  m.def("theorems", [] {
    std::vector<std::string> out;
    for (TheoremId id : allTheorems()) out.push_back(toString(id));
    return out;
  });
  m.def(
      "verify",
      [](const std::string& theorem, const std::string& profile) {
        const auto id = parseTheoremId(theorem);
        if (!id) throw Error(ErrorKind::InvalidArgument, "unknown theorem id", theorem);
        return fromJson(toJson(verifyTheorem(*id, buildStandardCatalog(profile)), false));
      },
      py::arg("theorem"), py::arg("catalog") = "default");
  m.def("verify_all", [](const std::string& profile) { return fromJson(verifyAllJson(buildStandardCatalog(profile), false)); },
        py::arg("catalog") = "default");
  m.def("search", [](const std::string& profile) { return fromJson(toJson(searchQuasiNotSemiprime(buildStandardCatalog(profile)))); },
        py::arg("catalog") = "default");

  m.def(
      "run",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        const int status = runCommand(args, out, err);
        return py::make_tuple(status, out.str(), err.str());
      },
      "Runs one command-line invocation in process; returns (status, stdout, stderr).");
}
