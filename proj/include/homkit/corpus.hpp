#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "homkit/json_io.hpp"

namespace homkit {

enum class CorpusShape { AcyclicQuiver, NilpotentCyclic, TriangularPair };
std::string to_string(CorpusShape s);
CorpusShape parse_shape(std::string_view text);

/// Which properties each instance is checked against.
///  default:  per shape (Eilenberg for acyclic quivers, stratification
///            trees for cyclic ones, the determinant identity for
///            triangular pairs) plus the structural checks;
///  transfer: Gorenstein and smoothness transfer (triangular pairs only).
enum class CorpusSuite { Default, Transfer };
std::string to_string(CorpusSuite s);
CorpusSuite parse_suite(std::string_view text);

struct CorpusSpec {
  std::uint64_t seed = 42;
  std::size_t count = 50;
  CorpusShape shape = CorpusShape::AcyclicQuiver;
  CorpusSuite suite = CorpusSuite::Default;
  FieldSpec field = FieldSpec::prime(kDefaultPrime);
  std::size_t max_vertices = 6;
  std::size_t max_arrows = 10;
  std::size_t max_relations = 8;
  std::size_t max_dim = 60;
  std::size_t cutoff = 12;

  /// Throws on bounds outside 1..6 vertices, 10 arrows, 8 relations, 60 dims.
  void check() const;
};

/// SplitMix64 step applied to seed + (index + 1) * golden gamma.
std::uint64_t instance_seed(std::uint64_t seed, std::size_t index);

/// Acyclic quiver (arrows go from lower to higher vertex) with random
/// relations: monomials and combinations of parallel paths of length 2 or 3.
AlgebraSpec random_acyclic_spec(std::mt19937_64& rng, const CorpusSpec& spec);

/// Oriented cycle with up to two tail vertices and a few extra arrows on
/// the cycle, modulo all paths of length L in {2, 3}.
AlgebraSpec random_cyclic_spec(std::mt19937_64& rng, const CorpusSpec& spec);

template <class K>
struct TriangularInstance {
  AlgebraPtr<K> b, c;
  Module<K> m;  // over tensor(opposite(c), b)
  AlgebraPtr<K> a;
};

/// B and C are small random algebras; M is a direct sum of projective,
/// simple, injective and radical modules over C^op (x) B.
template <class K>
TriangularInstance<K> random_triangular(std::mt19937_64& rng, const CorpusSpec& spec);

/// Re-checks a pd result against a fresh resolution: Finite(d) needs
/// Omega^{d+1} = 0 and Omega^d != 0; InfiniteCertified needs an invertible
/// matrix intertwining every basis action of the two syzygies. Unknown
/// results are vacuously fine.
template <class K>
bool verify_pd_certificate(const Module<K>& m, const PdResult& p);

struct InstanceResult {
  enum class Status { Pass, Fail, Undetermined };
  std::size_t index = 0;
  std::uint64_t seed = 0;
  std::string name;
  std::size_t dim = 0;
  std::size_t r = 0;
  Status status = Status::Pass;
  /// A certified counterexample to a theorem (exit code 3).
  bool tripwire = false;
  /// A failed internal consistency check (exit code 2).
  bool violation = false;
  /// Check name -> "pass" / "FAIL" / "undetermined" / "inapplicable".
  Json checks = Json::object();
  /// Computed values worth reporting.
  Json values = Json::object();
  /// Counters summed into the run's tallies.
  std::map<std::string, std::size_t> tallies;
};

std::string to_string(InstanceResult::Status s);

struct RunReport {
  CorpusSpec spec;
  std::vector<InstanceResult> instances;
  std::size_t passed = 0, failed = 0, undetermined = 0;
  /// Named counters (e.g. det = +1 occurrences, certificates re-verified).
  std::map<std::string, std::size_t> tallies;
  double seconds = 0;

  bool tripwire() const;
  bool violation() const;
  /// Byte-identical for identical specs unless `with_timing`.
  Json to_json(bool with_timing = false) const;
};

/// Instances are generated and checked in parallel; the report is ordered
/// by instance index.
RunReport run_corpus(const CorpusSpec& spec);

}  // namespace homkit
