#ifndef UALG_JSON_IO_HPP_
#define UALG_JSON_IO_HPP_

#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "ualg/algebra.hpp"
#include "ualg/construct.hpp"
#include "ualg/partition.hpp"
#include "ualg/smp.hpp"

namespace ualg {

using json = nlohmann::json;

// Algebra JSON:
// {"name": str, "size": n,
//  "operations": [{"symbol": s, "arity": k, "table": [ints len n^k]}]}
json algebra_to_json(const FiniteAlgebra& alg);
FiniteAlgebra algebra_from_json(const json& j);

// Partition JSON: array of class labels (canonical form; normalized on input).
json partition_to_json(const Partition& p);
Partition partition_from_json(const json& j, int expected_size);

// ConstructedAlgebra sidecar:
// {"sorts": [[...],...], "base": name, "chi": [labels]}
json constructed_sidecar_to_json(const ConstructedAlgebra& c);

// SMPInstance JSON: {"algebras": [names], "generators": [[ints]],
//                    "target": [ints]} resolved against a catalog.
json smp_instance_to_json(const SMPInstance& inst);
SMPInstance smp_instance_from_json(
    const json& j, const std::map<std::string, FiniteAlgebra>& catalog);

/// Name -> algebra index over a directory of algebra JSON files.
class Catalog {
public:
  Catalog() = default;
  /// Loads every *.json in the directory.
  explicit Catalog(const std::string& directory);

  void add(FiniteAlgebra alg);
  bool has(const std::string& name) const { return algebras_.count(name) > 0; }
  const FiniteAlgebra& get(const std::string& name) const;
  const std::map<std::string, FiniteAlgebra>& all() const { return algebras_; }

private:
  std::map<std::string, FiniteAlgebra> algebras_;
};

/// Parses "02|13", "identity"/"0", "total"/"1", or a JSON label array.
Partition parse_partition_arg(const std::string& text, int n);

}  // namespace ualg

#endif  // UALG_JSON_IO_HPP_
