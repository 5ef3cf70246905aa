#include "gqs/document.hpp"

#include <fstream>
#include <initializer_list>
#include <numeric>
#include <sstream>

#include "gqs/error.hpp"
#include "gqs/ring.hpp"

namespace gqs {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& message) {
  throw Error(ErrorKind::Parse, message, path.empty() ? "/" : path);
}

std::string lineColumn(std::string_view text, std::size_t byte) {
  std::size_t line = 1, column = 1;
  for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(column);
}

std::string child(const std::string& path, std::string_view key) { return path + "/" + std::string(key); }
std::string child(const std::string& path, std::size_t index) { return path + "/" + std::to_string(index); }

void expectObject(const json& node, const std::string& path) {
  if (!node.is_object()) fail(path, "expected an object");
}

void allowOnly(const json& node, std::initializer_list<std::string_view> keys, const std::string& path) {
  expectObject(node, path);
  for (const auto& [key, value] : node.items()) {
    bool known = false;
    for (auto k : keys) known = known || k == key;
    if (!known) fail(child(path, key), "unknown field '" + key + "'");
  }
}

const json& require(const json& node, std::string_view key, const std::string& path) {
  auto it = node.find(std::string(key));
  if (it == node.end()) fail(child(path, key), "missing field '" + std::string(key) + "'");
  return *it;
}

std::int64_t readInt(const json& node, const std::string& path) {
  if (!node.is_number_integer()) fail(path, "expected an integer");
  return node.get<std::int64_t>();
}

std::uint32_t readCount(const json& node, const std::string& path) {
  const auto v = readInt(node, path);
  if (v < 0 || v > 0xFFFFFF) fail(path, "expected a non-negative integer below 2^24");
  return static_cast<std::uint32_t>(v);
}

std::string readString(const json& node, const std::string& path) {
  if (!node.is_string()) fail(path, "expected a string");
  return node.get<std::string>();
}

ZVector readVector(const json& node, const std::string& path) {
  if (!node.is_array()) fail(path, "expected an array of integers");
  ZVector out;
  for (std::size_t i = 0; i < node.size(); ++i) out.push_back(readInt(node[i], child(path, i)));
  return out;
}

std::vector<ZVector> readVectorList(const json& node, const std::string& path) {
  if (!node.is_array()) fail(path, "expected an array of coordinate vectors");
  std::vector<ZVector> out;
  for (std::size_t i = 0; i < node.size(); ++i) out.push_back(readVector(node[i], child(path, i)));
  return out;
}

std::map<std::string, std::vector<ZVector>> readNamedGenerators(const json& node, const std::string& path) {
  expectObject(node, path);
  std::map<std::string, std::vector<ZVector>> out;
  for (const auto& [name, value] : node.items()) out[name] = readVectorList(value, child(path, name));
  return out;
}

ModuleSpec readModule(const json& node, const std::string& path) {
  expectObject(node, path);
  ModuleSpec spec;
  spec.kind = readString(require(node, "kind", path), child(path, "kind"));
  if (spec.kind == "ring_as_module") {
    allowOnly(node, {"kind"}, path);
  } else if (spec.kind == "product") {
    allowOnly(node, {"kind", "factors"}, path);
    const auto factorsPath = child(path, "factors");
    const json& factors = require(node, "factors", path);
    if (!factors.is_array() || factors.empty()) fail(factorsPath, "expected a non-empty array of [order, degree]");
    for (std::size_t i = 0; i < factors.size(); ++i) {
      const auto v = readVector(factors[i], child(factorsPath, i));
      if (v.size() != 2 || v[0] < 0 || v[1] < 0) fail(child(factorsPath, i), "expected [order, degree]");
      spec.factors.push_back({static_cast<std::uint32_t>(v[0]), static_cast<GroupElem>(v[1])});
    }
  } else if (spec.kind == "quotient") {
    allowOnly(node, {"kind", "base", "by"}, path);
    spec.base = std::make_shared<ModuleSpec>(readModule(require(node, "base", path), child(path, "base")));
    spec.by = readVectorList(require(node, "by", path), child(path, "by"));
  } else if (spec.kind == "z_module") {
    allowOnly(node, {"kind", "free", "torsion", "degrees"}, path);
    spec.freeRank = readCount(require(node, "free", path), child(path, "free"));
    spec.torsion = readVector(require(node, "torsion", path), child(path, "torsion"));
    for (std::int64_t d : readVector(require(node, "degrees", path), child(path, "degrees"))) {
      if (d < 0) fail(child(path, "degrees"), "degrees must be non-negative");
      spec.degrees.push_back(static_cast<GroupElem>(d));
    }
  } else {
    fail(child(path, "kind"), "unknown module kind '" + spec.kind + "'");
  }
  return spec;
}

StructureDocument fromJson(const json& root) {
  const std::string top;
  allowOnly(root, {"schema", "group", "ring", "module", "submodules", "ideals", "homs", "witnesses"}, top);
  const auto schema = readString(require(root, "schema", top), "/schema");
  if (schema != kStructureSchema) fail("/schema", "unsupported schema '" + schema + "'");

  StructureDocument doc;
  const json& group = require(root, "group", top);
  allowOnly(group, {"kind", "order"}, "/group");
  const auto groupKind = readString(require(group, "kind", "/group"), "/group/kind");
  if (groupKind != "cyclic") fail("/group/kind", "unknown group kind '" + groupKind + "'");
  doc.group.order = readCount(require(group, "order", "/group"), "/group/order");

  const json& ring = require(root, "ring", top);
  expectObject(ring, "/ring");
  doc.ring.kind = readString(require(ring, "kind", "/ring"), "/ring/kind");
  if (doc.ring.kind == "cyclic") {
    allowOnly(ring, {"kind", "n"}, "/ring");
    doc.ring.n = readCount(require(ring, "n", "/ring"), "/ring/n");
  } else if (doc.ring.kind == "quotient_poly") {
    allowOnly(ring, {"kind", "n", "c", "xdeg"}, "/ring");
    doc.ring.n = readCount(require(ring, "n", "/ring"), "/ring/n");
    doc.ring.c = readInt(require(ring, "c", "/ring"), "/ring/c");
    doc.ring.xdeg = readCount(require(ring, "xdeg", "/ring"), "/ring/xdeg");
  } else if (doc.ring.kind == "z") {
    allowOnly(ring, {"kind"}, "/ring");
  } else {
    fail("/ring/kind", "unknown ring kind '" + doc.ring.kind + "'");
  }

  doc.module = readModule(require(root, "module", top), "/module");
  if (root.contains("submodules")) doc.submodules = readNamedGenerators(root["submodules"], "/submodules");
  if (root.contains("ideals")) doc.ideals = readNamedGenerators(root["ideals"], "/ideals");
  if (root.contains("homs")) {
    expectObject(root["homs"], "/homs");
    for (const auto& [name, node] : root["homs"].items()) {
      const auto path = "/homs/" + name;
      HomSpec hom;
      expectObject(node, path);
      hom.kind = readString(require(node, "kind", path), path + "/kind");
      if (hom.kind == "projection") {
        allowOnly(node, {"kind", "kernel"}, path);
        hom.kernel = readString(require(node, "kernel", path), path + "/kernel");
      } else if (hom.kind == "table") {
        allowOnly(node, {"kind", "map"}, path);
        const json& map = require(node, "map", path);
        if (!map.is_array()) fail(path + "/map", "expected an array of [source, image] pairs");
        for (std::size_t i = 0; i < map.size(); ++i) {
          const auto entry = child(path + "/map", i);
          if (!map[i].is_array() || map[i].size() != 2) fail(entry, "expected [source, image]");
          hom.map.emplace_back(readVector(map[i][0], entry + "/0"), readVector(map[i][1], entry + "/1"));
        }
      } else {
        fail(path + "/kind", "unknown hom kind '" + hom.kind + "'");
      }
      doc.homs[name] = std::move(hom);
    }
  }
  if (root.contains("witnesses")) {
    expectObject(root["witnesses"], "/witnesses");
    for (const auto& [name, node] : root["witnesses"].items()) {
      const auto path = "/witnesses/" + name;
      allowOnly(node, {"r", "m", "n"}, path);
      WitnessSpec w;
      w.r = readInt(require(node, "r", path), path + "/r");
      w.m = readVector(require(node, "m", path), path + "/m");
      const auto n = readInt(require(node, "n", path), path + "/n");
      if (n < 1) fail(path + "/n", "exponent must be positive");
      w.n = static_cast<std::uint64_t>(n);
      doc.witnesses[name] = std::move(w);
    }
  }
  return doc;
}

json moduleJson(const ModuleSpec& spec) {
  json j{{"kind", spec.kind}};
  if (spec.kind == "product") {
    json factors = json::array();
    for (const auto& f : spec.factors) factors.push_back({f.order, f.degree});
    j["factors"] = std::move(factors);
  } else if (spec.kind == "quotient") {
    j["base"] = moduleJson(*spec.base);
    j["by"] = spec.by;
  } else if (spec.kind == "z_module") {
    j["free"] = spec.freeRank;
    j["torsion"] = spec.torsion;
    j["degrees"] = spec.degrees;
  }
  return j;
}

// Runs a domain constructor, prefixing failures with the document location.
template <class F>
auto at(const std::string& path, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const Error& e) {
    throw Error(e.kind(), path + ": " + e.message(), e.witness());
  }
}

ModulePtr buildModule(const ModuleSpec& spec, const RingPtr& ring, const std::string& path) {
  if (spec.kind == "ring_as_module") return ringAsModule(ring);
  if (spec.kind == "product") return at(path, [&] { return productModule(spec.factors, ring); });
  if (spec.kind == "quotient") {
    ModulePtr base = buildModule(*spec.base, ring, path + "/base");
    std::vector<Elem> gens;
    for (std::size_t i = 0; i < spec.by.size(); ++i) {
      auto e = base->additive().fromCoordinates(spec.by[i]);
      if (!e) throw Error(ErrorKind::InvalidArgument, child(path + "/by", i) + ": coordinate arity mismatch");
      gens.push_back(*e);
    }
    return at(path, [&] { return quotientModule(base, submoduleClosure(base, gens)).module; });
  }
  throw Error(ErrorKind::InvalidArgument, path + ": module kind '" + spec.kind + "' needs the integer ring");
}

std::vector<Elem> elementsOf(const GradedAbelianGroup& A, const std::vector<ZVector>& coords, const std::string& path) {
  std::vector<Elem> out;
  for (std::size_t i = 0; i < coords.size(); ++i) {
    auto e = A.fromCoordinates(coords[i]);
    if (!e) throw Error(ErrorKind::InvalidArgument, child(path, i) + ": coordinate arity mismatch");
    out.push_back(*e);
  }
  return out;
}

void resolveFinite(const StructureDocument& doc, ResolvedStructure& out) {
  out.ring = at("/ring", [&] {
    return doc.ring.kind == "cyclic" ? makeCyclicRing(doc.ring.n, out.group)
                                     : makeQuotientPolyRing(doc.ring.n, doc.ring.c, doc.ring.xdeg, out.group);
  });
  out.module = buildModule(doc.module, out.ring, "/module");
  for (const auto& [name, gens] : doc.submodules) {
    const auto path = "/submodules/" + name;
    const auto elems = elementsOf(out.module->additive(), gens, path);
    out.submodules.emplace(name, at(path, [&] { return submoduleClosure(out.module, elems); }));
  }
  for (const auto& [name, gens] : doc.ideals) {
    const auto path = "/ideals/" + name;
    const auto elems = elementsOf(out.ring->additive(), gens, path);
    out.ideals.emplace(name, at(path, [&] { return idealClosure(out.ring, elems); }));
  }
  for (const auto& [name, hom] : doc.homs) {
    const auto path = "/homs/" + name;
    if (hom.kind == "projection") {
      auto it = out.submodules.find(hom.kernel);
      if (it == out.submodules.end()) {
        throw Error(ErrorKind::InvalidArgument, path + "/kernel: unknown submodule '" + hom.kernel + "'");
      }
      out.homs.emplace(name, quotientProjection(it->second));
    } else {
      std::vector<ZVector> src, dst;
      for (const auto& [a, b] : hom.map) {
        src.push_back(a);
        dst.push_back(b);
      }
      const auto gens = elementsOf(out.module->additive(), src, path + "/map");
      const auto images = elementsOf(out.module->additive(), dst, path + "/map");
      out.homs.emplace(name, at(path, [&] { return linearExtension(out.module, out.module, gens, images); }));
    }
  }
  if (!doc.witnesses.empty()) {
    throw Error(ErrorKind::InvalidArgument, "/witnesses: witness hints apply to integer modules only");
  }
}

void resolveInteger(const StructureDocument& doc, ResolvedStructure& out) {
  const auto& m = doc.module;
  out.zmodule = at("/module", [&] { return ZModuleInstance::create(out.group, m.freeRank, m.torsion, m.degrees); });
  for (const auto& [name, gens] : doc.submodules) {
    const auto path = "/submodules/" + name;
    out.zsubmodules.emplace(name, at(path, [&] { return ZSubmodule::create(out.zmodule, gens); }));
  }
  for (const auto& [name, gens] : doc.ideals) {
    std::int64_t g = 0;
    for (std::size_t i = 0; i < gens.size(); ++i) {
      if (gens[i].size() != 1) {
        throw Error(ErrorKind::InvalidArgument, child("/ideals/" + name, i) + ": integers have one coordinate");
      }
      g = std::gcd(g, gens[i][0]);
    }
    out.zideals.emplace(name, ZIdeal{g < 0 ? -g : g});
  }
  if (!doc.homs.empty()) throw Error(ErrorKind::Unsupported, "/homs: homomorphisms of integer modules");
  for (const auto& [name, w] : doc.witnesses) {
    const auto path = "/witnesses/" + name;
    if (!out.zsubmodules.count(name)) {
      throw Error(ErrorKind::InvalidArgument, path + ": no submodule named '" + name + "'");
    }
    const ZVector mv = at(path, [&] { return out.zmodule->normalize(w.m); });
    out.zwitnesses.emplace(name, ZPowerWitness{w.r, mv, w.n});
  }
}

}  // namespace

StructureDocument parseStructure(std::string_view text) {
  json root;
  try {
    root = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    const std::string what = e.what();
    const auto column = what.find("column");
    const auto detail = column == std::string::npos ? std::string::npos : what.find(": ", column);
    throw Error(ErrorKind::Parse,
                lineColumn(text, e.byte) + (detail == std::string::npos ? std::string{} : what.substr(detail)));
  }
  StructureDocument doc = fromJson(root);
  resolve(doc);
  return doc;
}

StructureDocument loadStructure(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::InvalidArgument, "cannot read structure document", path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parseStructure(buffer.str());
}

json toJson(const StructureDocument& doc) {
  json ring{{"kind", doc.ring.kind}};
  if (doc.ring.kind != "z") ring["n"] = doc.ring.n;
  if (doc.ring.kind == "quotient_poly") {
    ring["c"] = doc.ring.c;
    ring["xdeg"] = doc.ring.xdeg;
  }
  json j{{"schema", kStructureSchema},
         {"group", {{"kind", "cyclic"}, {"order", doc.group.order}}},
         {"ring", std::move(ring)},
         {"module", moduleJson(doc.module)}};
  if (!doc.submodules.empty()) j["submodules"] = doc.submodules;
  if (!doc.ideals.empty()) j["ideals"] = doc.ideals;
  if (!doc.homs.empty()) {
    json homs = json::object();
    for (const auto& [name, h] : doc.homs) {
      json hj{{"kind", h.kind}};
      if (h.kind == "projection") {
        hj["kernel"] = h.kernel;
      } else {
        json map = json::array();
        for (const auto& [a, b] : h.map) map.push_back({a, b});
        hj["map"] = std::move(map);
      }
      homs[name] = std::move(hj);
    }
    j["homs"] = std::move(homs);
  }
  if (!doc.witnesses.empty()) {
    json ws = json::object();
    for (const auto& [name, w] : doc.witnesses) ws[name] = {{"r", w.r}, {"m", w.m}, {"n", w.n}};
    j["witnesses"] = std::move(ws);
  }
  return j;
}

std::string serialize(const StructureDocument& doc) { return toJson(doc).dump(2) + "\n"; }

ResolvedStructure resolve(const StructureDocument& doc) {
  ResolvedStructure out;
  out.group = at("/group", [&] { return GradingGroup::cyclic(doc.group.order); });
  const bool integerRing = doc.ring.kind == "z";
  const bool integerModule = doc.module.kind == "z_module";
  if (integerRing != integerModule) {
    throw Error(ErrorKind::InvalidArgument, "/module: z_module requires ring kind 'z' and vice versa");
  }
  if (integerRing) {
    resolveInteger(doc, out);
  } else {
    resolveFinite(doc, out);
  }
  return out;
}

}  // namespace gqs
