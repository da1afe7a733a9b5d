#include "exsum/circuit.hpp"

#include <optional>
#include <set>
#include <sstream>

#include "exsum/errors.hpp"
#include "exsum/prony.hpp"
#include "exsum/rng.hpp"
#include "exsum/sumset.hpp"

namespace exsum {

namespace {

bool binary(GateKind k) { return k != GateKind::Input && k != GateKind::Constant; }

const char* kind_name(GateKind k) {
  switch (k) {
    case GateKind::Input: return "input";
    case GateKind::Constant: return "const";
    case GateKind::Add: return "add";
    case GateKind::Sub: return "sub";
    case GateKind::Mul: return "mul";
    case GateKind::Div: return "div";
  }
  return "?";
}

}  // namespace

Circuit::Circuit(std::vector<Gate> gates, std::vector<std::pair<std::string, std::size_t>> outputs)
    : gates_(std::move(gates)), outputs_(std::move(outputs)) {
  std::set<std::string> names;
  for (std::size_t i = 0; i < gates_.size(); ++i) {
    const Gate& g = gates_[i];
    if (g.kind == GateKind::Input && !names.insert(g.name).second) {
      throw ContractError("circuit: duplicate input " + g.name);
    }
    if (binary(g.kind) && (g.lhs >= i || g.rhs >= i)) {
      throw ContractError("circuit: gate " + std::to_string(i) + " reads a later gate");
    }
  }
  std::set<std::string> out_names;
  for (const auto& [name, id] : outputs_) {
    if (id >= gates_.size()) throw ContractError("circuit: output " + name + " has no gate");
    if (!out_names.insert(name).second) throw ContractError("circuit: duplicate output " + name);
  }
}

std::vector<std::string> Circuit::input_names() const {
  std::vector<std::string> out;
  for (const Gate& g : gates_) {
    if (g.kind == GateKind::Input) out.push_back(g.name);
  }
  return out;
}

std::size_t Circuit::output(const std::string& name) const {
  for (const auto& [n, id] : outputs_) {
    if (n == name) return id;
  }
  throw ContractError("circuit: no output named " + name);
}

std::size_t Circuit::size() const {
  std::size_t edges = 0;
  for (const Gate& g : gates_) {
    if (binary(g.kind)) edges += 2;
  }
  return gates_.size() + edges;
}

std::string Circuit::dump() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < gates_.size(); ++i) {
    const Gate& g = gates_[i];
    os << i << ": " << kind_name(g.kind) << '(';
    if (g.kind == GateKind::Input) os << g.name;
    else if (g.kind == GateKind::Constant) os << to_string(g.value);
    else os << g.lhs << ", " << g.rhs;
    os << ")\n";
  }
  for (const auto& [name, id] : outputs_) os << "out " << name << " = " << id << '\n';
  return os.str();
}

CircuitBuilder::CircuitBuilder(const Circuit& c) : gates_(c.gates()), outputs_(c.outputs()) {
  for (std::size_t i = 0; i < gates_.size(); ++i) {
    if (gates_[i].kind == GateKind::Constant) constants_.emplace(gates_[i].value, i);
  }
}

std::size_t CircuitBuilder::input(const std::string& name) {
  gates_.push_back({GateKind::Input, name, 0, 0, 0});
  return gates_.size() - 1;
}

std::size_t CircuitBuilder::constant(const Rat& value) {
  auto it = constants_.find(value);
  if (it != constants_.end()) return it->second;
  gates_.push_back({GateKind::Constant, {}, value, 0, 0});
  constants_.emplace(value, gates_.size() - 1);
  return gates_.size() - 1;
}

bool CircuitBuilder::is_constant(std::size_t id, int v) const {
  return gates_[id].kind == GateKind::Constant && gates_[id].value == v;
}

std::size_t CircuitBuilder::op(GateKind kind, std::size_t a, std::size_t b) {
  if (a >= gates_.size() || b >= gates_.size()) throw ContractError("circuit: unknown operand");
  if (gates_[a].kind == GateKind::Constant && gates_[b].kind == GateKind::Constant) {
    const Rat& x = gates_[a].value;
    const Rat& y = gates_[b].value;
    switch (kind) {
      case GateKind::Add: return constant(x + y);
      case GateKind::Sub: return constant(x - y);
      case GateKind::Mul: return constant(x * y);
      case GateKind::Div:
        if (y == 0) break;
        return constant(x / y);
      default: break;
    }
  }
  gates_.push_back({kind, {}, 0, a, b});
  return gates_.size() - 1;
}

std::size_t CircuitBuilder::add(std::size_t a, std::size_t b) {
  if (is_constant(b, 0)) return a;
  if (is_constant(a, 0)) return b;
  return op(GateKind::Add, a, b);
}

std::size_t CircuitBuilder::sub(std::size_t a, std::size_t b) {
  if (is_constant(b, 0)) return a;
  return op(GateKind::Sub, a, b);
}

std::size_t CircuitBuilder::mul(std::size_t a, std::size_t b) {
  if (is_constant(b, 1)) return a;
  if (is_constant(a, 1)) return b;
  if (is_constant(a, 0) || is_constant(b, 0)) return constant(0);
  return op(GateKind::Mul, a, b);
}

std::size_t CircuitBuilder::div(std::size_t a, std::size_t b) {
  if (is_constant(b, 1)) return a;
  return op(GateKind::Div, a, b);
}

std::size_t CircuitBuilder::sum(const std::vector<std::size_t>& ids) {
  if (ids.empty()) return constant(0);
  std::size_t acc = ids.front();
  for (std::size_t i = 1; i < ids.size(); ++i) acc = add(acc, ids[i]);
  return acc;
}

void CircuitBuilder::output(const std::string& name, std::size_t id) {
  outputs_.emplace_back(name, id);
}

Circuit CircuitBuilder::build() && {
  return Circuit(std::move(gates_), std::move(outputs_));
}

std::vector<Rat> eval_gates(const Circuit& c, const Assignment& inputs) {
  const auto& gates = c.gates();
  std::vector<Rat> val(gates.size());
  for (std::size_t i = 0; i < gates.size(); ++i) {
    const Gate& g = gates[i];
    switch (g.kind) {
      case GateKind::Input: {
        auto it = inputs.find(g.name);
        if (it == inputs.end()) throw ContractError("eval_circuit: input " + g.name + " not assigned");
        val[i] = it->second;
        break;
      }
      case GateKind::Constant: val[i] = g.value; break;
      case GateKind::Add: val[i] = val[g.lhs] + val[g.rhs]; break;
      case GateKind::Sub: val[i] = val[g.lhs] - val[g.rhs]; break;
      case GateKind::Mul: val[i] = val[g.lhs] * val[g.rhs]; break;
      case GateKind::Div:
        if (val[g.rhs] == 0) throw ContractError("eval_circuit: division by zero at gate " + std::to_string(i));
        val[i] = val[g.lhs] / val[g.rhs];
        break;
    }
  }
  return val;
}

std::map<std::string, Rat> eval_circuit(const Circuit& c, const Assignment& inputs) {
  const std::vector<Rat> val = eval_gates(c, inputs);
  std::map<std::string, Rat> out;
  for (const auto& [name, id] : c.outputs()) out[name] = val[id];
  return out;
}

Circuit baur_strassen(const Circuit& c, const std::string& output) {
  const std::size_t root = c.output(output);
  const auto& gates = c.gates();
  std::vector<bool> live(gates.size(), false);
  live[root] = true;
  for (std::size_t i = root + 1; i-- > 0;) {
    if (!live[i] || !binary(gates[i].kind)) continue;
    if (gates[i].kind == GateKind::Div) {
      throw ContractError("baur_strassen: unsupported ÷ gate " + std::to_string(i));
    }
    live[gates[i].lhs] = live[gates[i].rhs] = true;
  }

  CircuitBuilder b(c);
  std::vector<std::optional<std::size_t>> adj(gates.size());
  auto accumulate = [&](std::size_t target, std::size_t term, bool negate) {
    if (adj[target]) {
      adj[target] = negate ? b.sub(*adj[target], term) : b.add(*adj[target], term);
    } else {
      adj[target] = negate ? b.sub(b.constant(0), term) : term;
    }
  };
  adj[root] = b.constant(1);
  for (std::size_t i = root + 1; i-- > 0;) {
    if (!live[i] || !adj[i] || !binary(gates[i].kind)) continue;
    const Gate& g = gates[i];
    const std::size_t a = *adj[i];
    switch (g.kind) {
      case GateKind::Add:
        accumulate(g.lhs, a, false);
        accumulate(g.rhs, a, false);
        break;
      case GateKind::Sub:
        accumulate(g.lhs, a, false);
        accumulate(g.rhs, a, true);
        break;
      case GateKind::Mul:
        accumulate(g.lhs, b.mul(a, g.rhs), false);
        accumulate(g.rhs, b.mul(a, g.lhs), false);
        break;
      default: break;
    }
  }
  for (std::size_t i = 0; i < gates.size(); ++i) {
    if (gates[i].kind != GateKind::Input) continue;
    b.output("d/" + gates[i].name, adj[i] ? *adj[i] : b.constant(0));
  }
  Circuit out = std::move(b).build();
  if (out.size() > kBaurStrassenFactor * c.size()) {
    throw std::logic_error("baur_strassen: size bound exceeded");
  }
  return out;
}

std::string x_name(const Rat& a) { return "x" + to_string(a); }
std::string y_name(const Rat& s) { return "y" + to_string(s); }
std::string z_name(const Rat& b) { return "z" + to_string(b); }

Circuit build_shift_count_circuit(const RealSet& a, const RealSet& s, const RealSet& b) {
  if (a.empty() || s.empty()) throw ContractError("build_shift_count_circuit: empty A or S");
  Rng rng(0);
  return build_shift_count_circuit(a, s, b, compute_sumset(a, s, rng));
}

Circuit build_shift_count_circuit(const RealSet& a, const RealSet& s, const RealSet& b,
                                  const RealSet& support) {
  if (a.empty() || s.empty()) throw ContractError("build_shift_count_circuit: empty A or S");
  // The gates only see the points through constants, so they are computed
  // on the integer images under the shared affine map.
  const AffineForm form = normalize_pair(a, s);
  const Rat base = form.a0 + form.b0;
  std::vector<Rat> c_norm;
  c_norm.reserve(support.size());
  for (const Rat& c : support) c_norm.push_back((c - base) / form.g);
  const std::size_t t = support.size();

  CircuitBuilder cb;
  std::vector<std::size_t> xs, ys;
  for (const Rat& x : a) xs.push_back(cb.input(x_name(x)));
  for (const Rat& y : s) ys.push_back(cb.input(y_name(y)));

  std::vector<Rat> inv_fact(t, 1);
  for (std::size_t i = 1; i < t; ++i) inv_fact[i] = inv_fact[i - 1] / static_cast<unsigned long>(i);

  // EGF coefficients p_k/k! of the weighted power sums.
  auto egf = [&](const RealSet& pts, const std::vector<std::size_t>& ids) {
    std::vector<std::size_t> out(t);
    std::vector<Rat> powk(pts.size(), 1);
    for (std::size_t k = 0; k < t; ++k) {
      std::vector<std::size_t> terms;
      for (std::size_t j = 0; j < pts.size(); ++j) {
        if (powk[j] != 0) terms.push_back(cb.mul(cb.constant(powk[j] * inv_fact[k]), ids[j]));
        powk[j] *= pts[j];
      }
      out[k] = cb.sum(terms);
    }
    return out;
  };
  const std::vector<std::size_t> pe = egf(form.a, xs);
  const std::vector<std::size_t> qe = egf(form.b, ys);

  // r_m/m! = Σ_{i+j=m} (p_i/i!)·(q_j/j!).
  std::vector<std::size_t> r(t);
  for (std::size_t m = 0; m < t; ++m) {
    std::vector<std::size_t> terms;
    for (std::size_t i = 0; i <= m; ++i) terms.push_back(cb.mul(pe[i], qe[m - i]));
    r[m] = cb.sum(terms);
  }

  // z_b = Σ_m W_{b,m}·r_m with W_{b,m} = m!·[X^m](M/(X-b)) / M'(b).
  const Poly master = Poly::from_roots(c_norm);
  const auto& mc = master.coeffs();
  std::vector<std::size_t> selected;
  for (std::size_t idx = 0; idx < t; ++idx) {
    const Rat& c = c_norm[idx];
    std::vector<Rat> q(t);
    Rat carry = 0;
    for (std::size_t j = t; j-- > 0;) {
      carry = mc[j + 1] + carry * c;
      q[j] = carry;
    }
    Rat deriv = 0;
    for (std::size_t j = t; j-- > 0;) deriv = deriv * c + q[j];
    std::vector<std::size_t> terms;
    for (std::size_t m = 0; m < t; ++m) {
      if (q[m] == 0) continue;
      terms.push_back(cb.mul(cb.constant(q[m] / (deriv * inv_fact[m])), r[m]));
    }
    const std::size_t zb = cb.sum(terms);
    cb.output(z_name(support[idx]), zb);
    if (b.contains(support[idx])) selected.push_back(zb);
  }
  cb.output("z", cb.sum(selected));
  return std::move(cb).build();
}

}  // namespace exsum
