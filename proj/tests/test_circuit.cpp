#include <gtest/gtest.h>

#include <map>

#include "exsum/circuit.hpp"
#include "exsum/errors.hpp"
#include "exsum/oracle.hpp"
#include "circuit_support.hpp"
#include "support.hpp"

namespace exsum {
namespace {

using testing::differentiate;
using testing::evaluate;
using testing::MPoly;
using testing::random_circuit;
using testing::RandomCircuit;

TEST(Circuit, Validation) {
  std::vector<Gate> bad{{GateKind::Add, "", Rat(0), 0, 0}};
  EXPECT_THROW(Circuit(bad, {}), ContractError);
  std::vector<Gate> dup{{GateKind::Input, "x", Rat(0), 0, 0}, {GateKind::Input, "x", Rat(0), 0, 0}};
  EXPECT_THROW(Circuit(dup, {}), ContractError);
  std::vector<Gate> one{{GateKind::Input, "x", Rat(0), 0, 0}};
  EXPECT_THROW(Circuit(one, {{"o", 3}}), ContractError);
  EXPECT_THROW(Circuit(one, {{"o", 0}, {"o", 0}}), ContractError);
  EXPECT_THROW(Circuit(one, {{"o", 0}}).output("p"), ContractError);
}

TEST(Circuit, BuilderFoldsAndDumps) {
  CircuitBuilder b;
  const std::size_t x = b.input("x");
  const std::size_t two = b.constant(Rat(2));
  EXPECT_EQ(b.constant(Rat(2)), two);
  EXPECT_EQ(b.add(x, b.constant(Rat(0))), x);
  EXPECT_EQ(b.mul(b.constant(Rat(1)), x), x);
  const std::size_t six = b.mul(two, b.constant(Rat(3)));
  const std::size_t y = b.div(b.mul(x, x), six);
  b.output("y", y);
  b.output("zero", b.sum({}));
  const Circuit c = std::move(b).build();
  EXPECT_EQ(c.dump(),
            "0: input(x)\n1: const(2)\n2: const(0)\n3: const(1)\n4: const(3)\n5: const(6)\n"
            "6: mul(0, 0)\n7: div(6, 5)\nout y = 7\nout zero = 2\n");
  EXPECT_EQ(c.size(), 8u + 4u);
  EXPECT_EQ(c.input_names(), std::vector<std::string>{"x"});
  const auto out = eval_circuit(c, {{"x", Rat(3)}});
  EXPECT_EQ(out.at("y"), Rat(3, 2));
  EXPECT_EQ(out.at("zero"), 0);
  EXPECT_THROW(eval_circuit(c, {}), ContractError);
}

TEST(Circuit, DivisionByZeroIsReported) {
  CircuitBuilder b;
  const std::size_t x = b.input("x");
  b.output("q", b.div(b.constant(Rat(1)), x));
  const Circuit c = std::move(b).build();
  EXPECT_THROW(eval_circuit(c, {{"x", Rat(0)}}), ContractError);
  EXPECT_THROW(baur_strassen(c, "q"), ContractError);
  EXPECT_THROW(baur_strassen(c, "nope"), ContractError);
}

TEST(BaurStrassen, SmallExample) {
  CircuitBuilder b;
  const std::size_t x = b.input("x"), y = b.input("y"), z = b.input("unused");
  (void)z;
  b.output("f", b.sub(b.mul(b.mul(x, x), y), y));
  const Circuit d = baur_strassen(std::move(b).build(), "f");
  const auto out = eval_circuit(d, {{"x", Rat(2)}, {"y", Rat(5)}, {"unused", Rat(1)}});
  EXPECT_EQ(out.at("f"), 15);
  EXPECT_EQ(out.at("d/x"), 20);
  EXPECT_EQ(out.at("d/y"), 3);
  EXPECT_EQ(out.at("d/unused"), 0);
}

TEST(BaurStrassen, MatchesSymbolicDerivatives) {
  Rng rng(40);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t inputs = 1 + rng.uniform(4);
    const std::size_t gates = inputs + 1 + rng.uniform(200 - inputs);
    const RandomCircuit rc = random_circuit(rng, inputs, gates);
    const Circuit d = baur_strassen(rc.circuit, "out");
    EXPECT_LE(d.size(), kBaurStrassenFactor * rc.circuit.size());
    const MPoly& f = rc.symbolic.back();
    for (int point = 0; point < 2; ++point) {
      std::vector<Rat> xs;
      Assignment in;
      for (std::size_t i = 0; i < inputs; ++i) {
        xs.push_back(testing::random_rat(rng, 7, 5));
        in["v" + std::to_string(i)] = xs.back();
      }
      const auto got = eval_circuit(d, in);
      EXPECT_EQ(got.at("out"), evaluate(f, xs));
      for (std::size_t i = 0; i < inputs; ++i)
        EXPECT_EQ(got.at("d/v" + std::to_string(i)), evaluate(differentiate(f, i), xs));
    }
  }
}

TEST(ShiftCountCircuit, Examples) {
  auto at_ones = [](const Circuit& c) {
    Assignment in;
    for (const std::string& name : c.input_names()) in[name] = 1;
    return eval_circuit(c, in).at("z");
  };
  const RealSet zero{Rat(0)}, zo{Rat(0), Rat(1)};
  EXPECT_EQ(at_ones(build_shift_count_circuit(zero, zero, zero)), 1);
  EXPECT_EQ(at_ones(build_shift_count_circuit(zo, zero, zo)), 2);
  EXPECT_EQ(at_ones(build_shift_count_circuit(zo, zero, RealSet{Rat(5)})), 0);
  EXPECT_THROW(build_shift_count_circuit(RealSet{}, zero, zero), ContractError);

  const Circuit one = build_shift_count_circuit(zero, zero, zero);
  const auto out = eval_circuit(one, {{x_name(Rat(0)), Rat(3)}, {y_name(Rat(0)), Rat(-2)}});
  EXPECT_EQ(out.at("z"), -6);
}

TEST(ShiftCountCircuit, CountsRepresentations) {
  Rng rng(41);
  for (int trial = 0; trial < 12; ++trial) {
    const RealSet a = testing::random_set(rng, 1 + rng.uniform(7), 12, 2);
    const RealSet s = testing::random_set(rng, 1 + rng.uniform(7), 12, 2);
    const RealSet b = testing::random_set(rng, 1 + rng.uniform(10), 24, 2);
    const Circuit c = build_shift_count_circuit(a, s, b);
    const RealSet sup = oracle::brute_sumset(a, s);

    Assignment ones, rand;
    std::map<Rat, Rat> xv, yv;
    for (const Rat& x : a) {
      ones[x_name(x)] = 1;
      xv[x] = rand[x_name(x)] = testing::random_rat(rng, 9, 4);
    }
    for (const Rat& y : s) {
      ones[y_name(y)] = 1;
      yv[y] = rand[y_name(y)] = testing::random_rat(rng, 9, 4);
    }
    const auto at_ones = eval_circuit(c, ones);
    const auto at_rand = eval_circuit(c, rand);
    Rat z_ones = 0, z_rand = 0;
    for (const Rat& target : sup) {
      Rat count = 0, weighted = 0;
      for (const Rat& x : a)
        for (const Rat& y : s)
          if (x + y == target) {
            count += 1;
            weighted += xv[x] * yv[y];
          }
      EXPECT_EQ(at_ones.at(z_name(target)), count);
      EXPECT_EQ(at_rand.at(z_name(target)), weighted);
      if (b.contains(target)) {
        z_ones += count;
        z_rand += weighted;
      }
    }
    EXPECT_EQ(at_ones.at("z"), z_ones);
    EXPECT_EQ(at_rand.at("z"), z_rand);
    for (const auto& g : c.gates()) EXPECT_NE(g.kind, GateKind::Div);
  }
}

}  // namespace
}  // namespace exsum
