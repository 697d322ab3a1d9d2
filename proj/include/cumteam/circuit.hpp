#pragma once

// Boolean circuits over AND/OR/NOT/XOR/CONST gates and their line-oriented netlist format:
//
//   # comment
//   inputs 2
//   g2 = AND i0 i1
//   g3 = NOT g2
//   outputs g2 g3
//
// Operands are inputs iJ or previously defined gates gM, so every circuit is acyclic.

#include <cctype>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "cumteam/errors.hpp"

namespace cumteam {

enum class GateOp { and_, or_, not_, xor_, const0, const1 };

inline std::string_view to_string(GateOp op) {
  switch (op) {
    case GateOp::and_: return "AND";
    case GateOp::or_: return "OR";
    case GateOp::not_: return "NOT";
    case GateOp::xor_: return "XOR";
    case GateOp::const0: return "CONST0";
    case GateOp::const1: return "CONST1";
  }
  return "?";
}

inline std::size_t arity(GateOp op) {
  switch (op) {
    case GateOp::and_:
    case GateOp::or_:
    case GateOp::xor_: return 2;
    case GateOp::not_: return 1;
    default: return 0;
  }
}

// Reference to a circuit input or to a gate by its position in the gate list.
struct Signal {
  bool is_input = true;
  std::size_t index = 0;

  static Signal input(std::size_t i) { return {true, i}; }
  static Signal gate(std::size_t position) { return {false, position}; }

  friend bool operator==(const Signal&, const Signal&) = default;
};

class Circuit {
 public:
  struct Gate {
    std::size_t id;  // netlist name is "g<id>"
    GateOp op;
    std::vector<Signal> operands;
  };

  explicit Circuit(std::size_t input_count) : input_count_(input_count) {}

  // Appends a gate; its id defaults to input_count + position.
  Signal add(GateOp op, std::vector<Signal> operands = {}) {
    return add_with_id(input_count_ + gates_.size(), op, std::move(operands));
  }

  Signal add_with_id(std::size_t id, GateOp op, std::vector<Signal> operands) {
    if (operands.size() != arity(op))
      throw CircuitError(std::string(to_string(op)) + " takes " + std::to_string(arity(op)) + " operand(s), got " +
                         std::to_string(operands.size()));
    for (const auto& s : operands) check(s);
    if (!ids_.emplace(id, gates_.size()).second) throw CircuitError("gate g" + std::to_string(id) + " redefined");
    gates_.push_back({id, op, std::move(operands)});
    return Signal::gate(gates_.size() - 1);
  }

  void set_outputs(std::vector<Signal> outputs) {
    for (const auto& s : outputs) check(s);
    outputs_ = std::move(outputs);
  }

  std::size_t input_count() const noexcept { return input_count_; }
  const std::vector<Gate>& gates() const noexcept { return gates_; }
  const std::vector<Signal>& outputs() const noexcept { return outputs_; }

  // Position of gate g<id>, if defined.
  const std::size_t* find_gate(std::size_t id) const {
    auto it = ids_.find(id);
    return it == ids_.end() ? nullptr : &it->second;
  }

  std::string signal_name(const Signal& s) const {
    return s.is_input ? "i" + std::to_string(s.index) : "g" + std::to_string(gates_[s.index].id);
  }

 private:
  void check(const Signal& s) const {
    if (s.is_input ? s.index >= input_count_ : s.index >= gates_.size())
      throw CircuitError(s.is_input ? "input i" + std::to_string(s.index) + " out of range"
                                    : "reference to an undefined gate");
  }

  std::size_t input_count_;
  std::vector<Gate> gates_;
  std::vector<Signal> outputs_;
  std::map<std::size_t, std::size_t> ids_;
};

// Evaluates 64 input assignments at once: bit l of inputs[j] is input j in assignment l.
inline std::vector<std::uint64_t> eval_circuit_lanes(const Circuit& c, const std::vector<std::uint64_t>& inputs) {
  if (inputs.size() != c.input_count())
    throw CircuitError("circuit expects " + std::to_string(c.input_count()) + " inputs, got " +
                       std::to_string(inputs.size()));
  std::vector<std::uint64_t> values(c.gates().size());
  auto get = [&](const Signal& s) { return s.is_input ? inputs[s.index] : values[s.index]; };
  for (std::size_t g = 0; g < values.size(); ++g) {
    const auto& gate = c.gates()[g];
    switch (gate.op) {
      case GateOp::and_: values[g] = get(gate.operands[0]) & get(gate.operands[1]); break;
      case GateOp::or_: values[g] = get(gate.operands[0]) | get(gate.operands[1]); break;
      case GateOp::xor_: values[g] = get(gate.operands[0]) ^ get(gate.operands[1]); break;
      case GateOp::not_: values[g] = ~get(gate.operands[0]); break;
      case GateOp::const0: values[g] = 0; break;
      case GateOp::const1: values[g] = ~std::uint64_t{0}; break;
    }
  }
  std::vector<std::uint64_t> out;
  out.reserve(c.outputs().size());
  for (const auto& s : c.outputs()) out.push_back(get(s));
  return out;
}

inline std::vector<bool> eval_circuit(const Circuit& c, const std::vector<bool>& inputs) {
  std::vector<std::uint64_t> lanes(inputs.size());
  for (std::size_t i = 0; i < inputs.size(); ++i) lanes[i] = inputs[i] ? 1 : 0;
  std::vector<bool> out;
  for (auto v : eval_circuit_lanes(c, lanes)) out.push_back((v & 1) != 0);
  return out;
}

namespace detail {

inline std::vector<std::string> split_words(std::string_view line) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i > start) out.emplace_back(line.substr(start, i - start));
  }
  return out;
}

inline bool parse_index(std::string_view digits, std::size_t& out) {
  if (digits.empty() || digits.size() > 9) return false;
  out = 0;
  for (char c : digits) {
    if (c < '0' || c > '9') return false;
    out = out * 10 + static_cast<std::size_t>(c - '0');
  }
  return true;
}

inline bool parse_op(std::string_view s, GateOp& op) {
  for (GateOp o : {GateOp::and_, GateOp::or_, GateOp::not_, GateOp::xor_, GateOp::const0, GateOp::const1})
    if (s == to_string(o)) {
      op = o;
      return true;
    }
  return false;
}

}  // namespace detail

inline Circuit parse_circuit(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t lineno = 0;
  std::optional<Circuit> c;
  bool done = false;

  auto signal = [&](const std::string& word, std::size_t line) {
    std::size_t idx = 0;
    if (word.size() < 2 || (word[0] != 'i' && word[0] != 'g') || !detail::parse_index(word.substr(1), idx))
      throw CircuitError("bad operand '" + word + "'", line);
    if (word[0] == 'i') {
      if (idx >= c->input_count()) throw CircuitError("input " + word + " out of range", line);
      return Signal::input(idx);
    }
    const std::size_t* pos = c->find_gate(idx);
    if (!pos) throw CircuitError("undefined operand " + word, line);
    return Signal::gate(*pos);
  };

  while (std::getline(in, raw)) {
    ++lineno;
    std::string_view line = raw;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    auto words = detail::split_words(line);
    if (words.empty()) continue;
    if (done) throw CircuitError("content after the outputs line", lineno);
    if (!c) {
      std::size_t k = 0;
      if (words.size() != 2 || words[0] != "inputs" || !detail::parse_index(words[1], k))
        throw CircuitError("expected header 'inputs K'", lineno);
      c.emplace(k);
      continue;
    }
    if (words[0] == "outputs") {
      std::vector<Signal> outs;
      for (std::size_t i = 1; i < words.size(); ++i) outs.push_back(signal(words[i], lineno));
      if (outs.empty()) throw CircuitError("outputs line lists no signals", lineno);
      c->set_outputs(std::move(outs));
      done = true;
      continue;
    }
    std::size_t id = 0;
    if (words.size() < 3 || words[1] != "=" || words[0].size() < 2 || words[0][0] != 'g' ||
        !detail::parse_index(std::string_view(words[0]).substr(1), id))
      throw CircuitError("expected 'gN = OP operand...'", lineno);
    GateOp op;
    if (!detail::parse_op(words[2], op)) throw CircuitError("unknown gate type '" + words[2] + "'", lineno);
    std::vector<Signal> operands;
    for (std::size_t i = 3; i < words.size(); ++i) operands.push_back(signal(words[i], lineno));
    if (operands.size() != arity(op))
      throw CircuitError(words[2] + " takes " + std::to_string(arity(op)) + " operand(s), got " +
                             std::to_string(operands.size()),
                         lineno);
    if (c->find_gate(id)) throw CircuitError("gate " + words[0] + " redefined", lineno);
    c->add_with_id(id, op, std::move(operands));
  }
  if (!c) throw CircuitError("empty netlist");
  if (!done) throw CircuitError("missing outputs line");
  return std::move(*c);
}

inline std::string render_circuit(const Circuit& c) {
  std::string out = "inputs " + std::to_string(c.input_count()) + "\n";
  for (const auto& g : c.gates()) {
    out += "g" + std::to_string(g.id) + " = " + std::string(to_string(g.op));
    for (const auto& s : g.operands) out += " " + c.signal_name(s);
    out += "\n";
  }
  out += "outputs";
  for (const auto& s : c.outputs()) out += " " + c.signal_name(s);
  return out + "\n";
}

}  // namespace cumteam
