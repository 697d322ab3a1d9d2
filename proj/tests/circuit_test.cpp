#include <gtest/gtest.h>

#include "support/generators.hpp"

using namespace cumteam;
using gen::Rng;

namespace {

std::size_t error_line(const std::string& text) {
  try {
    parse_circuit(text);
  } catch (const CircuitError& e) {
    return e.line() == 0 ? 999 : e.line();
  }
  return 0;
}

// Truth-table reference: recursive, one assignment at a time.
bool reference_signal(const Circuit& c, const Signal& s, const std::vector<bool>& in) {
  if (s.is_input) return in[s.index];
  const auto& g = c.gates()[s.index];
  auto arg = [&](std::size_t k) { return reference_signal(c, g.operands[k], in); };
  switch (g.op) {
    case GateOp::and_: return arg(0) && arg(1);
    case GateOp::or_: return arg(0) || arg(1);
    case GateOp::xor_: return arg(0) != arg(1);
    case GateOp::not_: return !arg(0);
    case GateOp::const0: return false;
    case GateOp::const1: return true;
  }
  return false;
}

std::vector<bool> bits_of(std::uint64_t x, std::size_t n) {
  std::vector<bool> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = (x >> i) & 1;
  return out;
}

}  // namespace

TEST(Circuit, AndExample) {
  const Circuit c = parse_circuit("inputs 2\ng2 = AND i0 i1\noutputs g2\n");
  EXPECT_EQ(eval_circuit(c, {true, true}), std::vector<bool>{true});
  EXPECT_EQ(eval_circuit(c, {true, false}), std::vector<bool>{false});
}

TEST(Circuit, ConstOne) {
  const Circuit c = parse_circuit("inputs 3  # comment\n\ng0 = CONST1\noutputs g0 g0\n");
  for (std::uint64_t x = 0; x < 8; ++x) EXPECT_EQ(eval_circuit(c, bits_of(x, 3)), (std::vector<bool>{true, true}));
}

TEST(Circuit, InputsAsOutputs) {
  const Circuit c = parse_circuit("inputs 2\noutputs i1 i0\n");
  EXPECT_EQ(eval_circuit(c, {true, false}), (std::vector<bool>{false, true}));
}

TEST(Circuit, ParseErrorsNameTheLine) {
  EXPECT_EQ(error_line("inputs 2\ng2 = AND i0 g7\noutputs g2\n"), 2u);  // undefined operand
  EXPECT_EQ(error_line("inputs 2\ng2 = AND i0\noutputs g2\n"), 2u);     // arity
  EXPECT_EQ(error_line("inputs 2\ng2 = NOT i0 i1\noutputs g2\n"), 2u);
  EXPECT_EQ(error_line("inputs 2\ng2 = NAND i0 i1\noutputs g2\n"), 2u);
  EXPECT_EQ(error_line("inputs 2\ng2 = AND i0 i5\noutputs g2\n"), 2u);  // input range
  EXPECT_EQ(error_line("inputs 2\ng2 = CONST0\ng2 = CONST1\noutputs g2\n"), 3u);
  EXPECT_EQ(error_line("inputs 2\ng2 = AND i0 i1\noutputs g2\ng3 = CONST0\n"), 4u);
  EXPECT_EQ(error_line("input 2\n"), 1u);
  EXPECT_EQ(error_line("inputs 2\ng2 AND i0 i1\noutputs g2\n"), 2u);
  EXPECT_EQ(error_line("inputs 2\noutputs\n"), 2u);
  EXPECT_EQ(error_line("inputs 2\ng2 = AND i0 i1\n"), 999u);  // missing outputs
  EXPECT_EQ(error_line(""), 999u);
}

TEST(Circuit, WrongInputLength) {
  const Circuit c = parse_circuit("inputs 2\ng2 = AND i0 i1\noutputs g2\n");
  EXPECT_THROW(eval_circuit(c, {true}), CircuitError);
}

TEST(Circuit, BuilderRejectsBadOperands) {
  Circuit c(1);
  EXPECT_THROW(c.add(GateOp::and_, {Signal::input(0)}), CircuitError);
  EXPECT_THROW(c.add(GateOp::not_, {Signal::input(3)}), CircuitError);
  EXPECT_THROW(c.add(GateOp::not_, {Signal::gate(0)}), CircuitError);
}

TEST(Circuit, RandomCircuitsMatchTruthTable) {
  Rng rng(51);
  for (int i = 0; i < 300; ++i) {
    const std::size_t inputs = 1 + gen::pick(rng, 8);
    const Circuit c = gen::random_circuit(rng, inputs, 1 + gen::pick(rng, 20), 1 + gen::pick(rng, 3));
    for (std::uint64_t x = 0; x < (std::uint64_t{1} << inputs); ++x) {
      const auto in = bits_of(x, inputs);
      const auto got = eval_circuit(c, in);
      for (std::size_t o = 0; o < c.outputs().size(); ++o) ASSERT_EQ(got[o], reference_signal(c, c.outputs()[o], in));
    }
  }
}

TEST(Circuit, LanesMatchScalarEvaluation) {
  Rng rng(52);
  for (int i = 0; i < 100; ++i) {
    const std::size_t inputs = 1 + gen::pick(rng, 6);
    const Circuit c = gen::random_circuit(rng, inputs, 1 + gen::pick(rng, 15), 2);
    std::vector<std::uint64_t> lanes(inputs);
    for (auto& l : lanes) l = rng();
    const auto out = eval_circuit_lanes(c, lanes);
    for (std::size_t lane = 0; lane < 64; ++lane) {
      std::vector<bool> in(inputs);
      for (std::size_t k = 0; k < inputs; ++k) in[k] = (lanes[k] >> lane) & 1;
      const auto scalar = eval_circuit(c, in);
      for (std::size_t o = 0; o < 2; ++o) ASSERT_EQ(((out[o] >> lane) & 1) != 0, scalar[o]);
    }
  }
}

TEST(Circuit, RenderParseRoundTrip) {
  Rng rng(53);
  for (int i = 0; i < 100; ++i) {
    const std::size_t inputs = 1 + gen::pick(rng, 5);
    const Circuit c = gen::random_circuit(rng, inputs, 1 + gen::pick(rng, 10), 2);
    const Circuit back = parse_circuit(render_circuit(c));
    ASSERT_EQ(render_circuit(back), render_circuit(c));
    for (std::uint64_t x = 0; x < (std::uint64_t{1} << inputs); ++x)
      ASSERT_EQ(eval_circuit(back, bits_of(x, inputs)), eval_circuit(c, bits_of(x, inputs)));
  }
}
