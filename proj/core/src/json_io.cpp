#include "ualg/json_io.hpp"

#include <algorithm>
#include <cctype>
#include <filesystem>
#include <fstream>

namespace ualg {

json algebra_to_json(const FiniteAlgebra& alg) {
  json ops = json::array();
  const Signature& sig = alg.signature();
  for (int op = 0; op < sig.size(); ++op) {
    ops.push_back({{"symbol", sig.at(op).name},
                   {"arity", sig.at(op).arity},
                   {"table", alg.table(op)}});
  }
  return {{"name", alg.name()}, {"size", alg.size()}, {"operations", ops}};
}

FiniteAlgebra algebra_from_json(const json& j) {
  if (!j.is_object() || !j.contains("size") || !j.contains("operations"))
    throw validation_error("algebra json: expected object with size and operations");
  std::string name = j.value("name", "");
  int size = j.at("size").get<int>();
  std::vector<OpSymbol> symbols;
  std::vector<std::vector<int>> tables;
  for (const auto& op : j.at("operations")) {
    symbols.push_back({op.at("symbol").get<std::string>(), op.at("arity").get<int>()});
    tables.push_back(op.at("table").get<std::vector<int>>());
  }
  return FiniteAlgebra(std::move(name), size, Signature(std::move(symbols)),
                       std::move(tables));
}

json partition_to_json(const Partition& p) { return json(p.labels()); }

Partition partition_from_json(const json& j, int expected_size) {
  if (!j.is_array()) throw validation_error("partition json: expected label array");
  std::vector<int> labels = j.get<std::vector<int>>();
  if (static_cast<int>(labels.size()) != expected_size)
    throw validation_error("partition json: wrong length");
  return Partition(std::move(labels));
}

json constructed_sidecar_to_json(const ConstructedAlgebra& c) {
  return {{"sorts", c.sort_elements}, {"base", c.base.name()}, {"chi", c.chi}};
}

json smp_instance_to_json(const SMPInstance& inst) {
  json names = json::array();
  for (const auto& a : inst.components) names.push_back(a.name());
  return {{"algebras", names}, {"generators", inst.generators}, {"target", inst.target}};
}

SMPInstance smp_instance_from_json(const json& j,
                                   const std::map<std::string, FiniteAlgebra>& catalog) {
  if (!j.is_object() || !j.contains("algebras") || !j.contains("generators") ||
      !j.contains("target"))
    throw validation_error("smp json: expected algebras, generators, target");
  SMPInstance inst;
  for (const auto& name : j.at("algebras")) {
    auto it = catalog.find(name.get<std::string>());
    if (it == catalog.end())
      throw validation_error("smp json: unknown algebra '" + name.get<std::string>() + "'");
    inst.components.push_back(it->second);
  }
  inst.generators = j.at("generators").get<std::vector<std::vector<int>>>();
  inst.target = j.at("target").get<std::vector<int>>();
  inst.validate();
  return inst;
}

Catalog::Catalog(const std::string& directory) {
  namespace fs = std::filesystem;
  if (!fs::is_directory(directory))
    throw validation_error("catalog: not a directory: " + directory);
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(directory))
    if (entry.path().extension() == ".json") files.push_back(entry.path());
  std::sort(files.begin(), files.end());
  for (const auto& path : files) {
    std::ifstream in(path);
    if (!in) throw validation_error("catalog: cannot read " + path.string());
    json j;
    try {
      in >> j;
    } catch (const json::parse_error& e) {
      throw validation_error("catalog: " + path.string() + ": " + e.what());
    }
    add(algebra_from_json(j));
  }
}

void Catalog::add(FiniteAlgebra alg) {
  if (alg.name().empty()) throw validation_error("catalog: algebra without a name");
  if (!algebras_.emplace(alg.name(), alg).second)
    throw validation_error("catalog: duplicate name '" + alg.name() + "'");
}

const FiniteAlgebra& Catalog::get(const std::string& name) const {
  auto it = algebras_.find(name);
  if (it == algebras_.end()) throw validation_error("catalog: unknown algebra '" + name + "'");
  return it->second;
}

Partition parse_partition_arg(const std::string& text, int n) {
  if (text == "identity" || text == "0") return Partition::identity(n);
  if (text == "total" || text == "1") return Partition::total(n);
  if (!text.empty() && text.front() == '[') {
    json j = json::parse(text);
    return partition_from_json(j, n);
  }
  // Bar-separated digit blocks, e.g. "02|13"; valid for n <= 10.
  if (n > 10)
    throw validation_error("partition arg: block syntax needs n <= 10; use JSON labels");
  std::vector<int> labels(n, -1);
  int block_least = -1;
  for (size_t pos = 0; pos <= text.size(); ++pos) {
    if (pos == text.size() || text[pos] == '|') {
      block_least = -1;
      continue;
    }
    char ch = text[pos];
    if (!std::isdigit(static_cast<unsigned char>(ch)))
      throw validation_error("partition arg: unexpected character '" + std::string(1, ch) + "'");
    int e = ch - '0';
    if (e >= n) throw validation_error("partition arg: element out of range");
    if (labels[e] != -1) throw validation_error("partition arg: element listed twice");
    if (block_least < 0) block_least = e;
    labels[e] = block_least;
  }
  for (int e = 0; e < n; ++e)
    if (labels[e] == -1) throw validation_error("partition arg: element missing");
  return Partition(std::move(labels));
}

}  // namespace ualg
