#ifndef EXSUM_CIRCUIT_HPP
#define EXSUM_CIRCUIT_HPP

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "exsum/rat.hpp"
#include "exsum/sets.hpp"

namespace exsum {

enum class GateKind { Input, Constant, Add, Sub, Mul, Div };

struct Gate {
  GateKind kind;
  std::string name;  // Input only
  Rat value;         // Constant only
  std::size_t lhs = 0, rhs = 0;
};

/// Straight-line program over ℚ. Gates are topologically ordered: operands
/// always precede the gate that reads them. Immutable once built.
class Circuit {
 public:
  Circuit() = default;
  /// Validates the DAG order, operand ids, output ids and name uniqueness;
  /// throws ContractError otherwise.
  Circuit(std::vector<Gate> gates, std::vector<std::pair<std::string, std::size_t>> outputs);

  const std::vector<Gate>& gates() const { return gates_; }
  const std::vector<std::pair<std::string, std::size_t>>& outputs() const { return outputs_; }
  std::vector<std::string> input_names() const;
  /// Gate id of a named output; throws ContractError when absent.
  std::size_t output(const std::string& name) const;

  /// Gates plus edges (two per binary gate).
  std::size_t size() const;

  /// One line per gate, `id: kind(args)`, then the outputs.
  std::string dump() const;

 private:
  std::vector<Gate> gates_;
  std::vector<std::pair<std::string, std::size_t>> outputs_;
};

/// Appends gates with construction-time constant folding: operations on two
/// constants become a constant, and x+0, x-0, x·1, 1·x collapse to x.
class CircuitBuilder {
 public:
  CircuitBuilder() = default;
  /// Starts from a copy of c's gates and outputs.
  explicit CircuitBuilder(const Circuit& c);

  std::size_t input(const std::string& name);
  std::size_t constant(const Rat& value);
  std::size_t add(std::size_t a, std::size_t b);
  std::size_t sub(std::size_t a, std::size_t b);
  std::size_t mul(std::size_t a, std::size_t b);
  std::size_t div(std::size_t a, std::size_t b);
  /// Sum of the ids as a chain of additions; the constant 0 when empty.
  std::size_t sum(const std::vector<std::size_t>& ids);
  void output(const std::string& name, std::size_t id);

  Circuit build() &&;

 private:
  std::size_t op(GateKind kind, std::size_t a, std::size_t b);
  bool is_constant(std::size_t id, int v) const;

  std::vector<Gate> gates_;
  std::vector<std::pair<std::string, std::size_t>> outputs_;
  std::map<Rat, std::size_t> constants_;
};

using Assignment = std::map<std::string, Rat>;

/// Value of every gate. Throws ContractError on a missing input or a
/// division by zero.
std::vector<Rat> eval_gates(const Circuit& c, const Assignment& inputs);

/// Named outputs, evaluated exactly.
std::map<std::string, Rat> eval_circuit(const Circuit& c, const Assignment& inputs);

/// Implementation constant for the reverse-mode size bound.
inline constexpr std::size_t kBaurStrassenFactor = 6;

/// Reverse accumulation on the cone of `output`. The result keeps every
/// original gate, has `output` under its own name, and one output
/// `d/<input>` per input of c (the constant 0 for inputs outside the cone).
/// Asserts size <= kBaurStrassenFactor·size(c). Throws ContractError for an
/// unknown output or a ÷ gate in the cone.
Circuit baur_strassen(const Circuit& c, const std::string& output);

/// Input names used by build_shift_count_circuit.
std::string x_name(const Rat& a);
std::string y_name(const Rat& s);
std::string z_name(const Rat& b);

/// Inputs x_a (a in A) and y_s (s in S); outputs z_b = Σ_{a+s=b} x_a·y_s for
/// every b in A+S, and z = Σ z_b over b in (A+S) ∩ B. Built from the
/// power-sum evaluation, the power-sum convolution (through the constants
/// 1/i!) and the transposed-Vandermonde interpolation with build-time
/// weights, so the circuit has no ÷ gates. Throws ContractError when A or S
/// is empty.
Circuit build_shift_count_circuit(const RealSet& a, const RealSet& s, const RealSet& b);

/// Same, with A+S supplied by the caller.
Circuit build_shift_count_circuit(const RealSet& a, const RealSet& s, const RealSet& b,
                                  const RealSet& support);

}  // namespace exsum

#endif  // EXSUM_CIRCUIT_HPP
