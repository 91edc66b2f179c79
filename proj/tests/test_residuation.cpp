#include "doctest.h"
#include "lures/builtins.hpp"
#include "lures/props.hpp"
#include "lures/residuation.hpp"
#include "lures/search.hpp"
#include "oracles.hpp"

using namespace lures;

TEST_SUITE("residuation") {
  TEST_CASE("Boolean cube term operations") {
    const auto cube = builtin_complemented("boolean8");
    const TermResiduation t(cube);
    const LatticeTables& l = t.lattice();
    for (Element x = 0; x < cube.size(); ++x)
      for (Element y = 0; y < cube.size(); ++y) {
        CHECK(t.odot(x, y) == l.meet(x, y));
        CHECK(t.arrow(x, y) == l.join(cube.comp(x), y));
      }
  }

  TEST_CASE("fig1 is a divisible left residuated lattice") {
    const auto fig1 = builtin_complemented("fig1");
    const TermResiduation t(fig1);
    CHECK(check_unit_laws(t).holds);
    CHECK(check_adjointness(t, Direction::forward).holds);
    CHECK(check_adjointness(t, Direction::backward).holds);
    CHECK(check_divisibility(t).holds);
    CHECK(verify_left_residuated_lattice(fig1).holds);
    CHECK(verify_left_residuated_lattice(builtin_complemented("chain2")).holds);
  }

  TEST_CASE("term residuation needs a lattice") {
    CHECK_THROWS_AS(TermResiduation(builtin_complemented("fig2")), Error);
  }

  TEST_CASE("some complementation of N5 breaks adjointness") {
    const Poset n5 = builtin("n5").poset;
    bool broken = false;
    for (const auto& cp : enumerate_complementations(n5))
      if (!check_adjointness(TermResiduation(cp)).holds) broken = true;
    CHECK(broken);
  }

  TEST_CASE("adjointness on every complemented modular lattice up to seven elements") {
    std::size_t structures = 0;
    for (std::size_t n = 1; n <= 7; ++n)
      for (const Poset& p : enumerate_posets(n, true)) {
        if (!is_lattice(p).holds || !is_modular_lattice(p).holds) continue;
        for (const auto& cp : enumerate_complementations(p)) {
          ++structures;
          const TermResiduation t(cp);
          CHECK(check_adjointness(t).holds);
          CHECK(check_divisibility(t).holds);
        }
      }
    CHECK(structures > 0);
  }

  TEST_CASE("operator residuation examples") {
    CHECK(verify_operator_left_residuated(builtin_complemented("fig1")).holds);
    CHECK(verify_operator_left_residuated(builtin_complemented("fig1xfig2")).holds);
    CHECK(verify_operator_left_residuated(builtin_complemented("chain2")).holds);
    bool n5_fails = false;
    for (const auto& cp : enumerate_complementations(builtin("n5").poset))
      if (!verify_operator_left_residuated(cp).holds) n5_fails = true;
    CHECK(n5_fails);
  }

  TEST_CASE("operator sets agree with the cone definitions") {
    const auto fig2 = builtin_complemented("fig2");
    const Poset& p = fig2.poset();
    const OperatorResiduation o(fig2);
    for (Element x = 0; x < p.size(); ++x)
      for (Element y = 0; y < p.size(); ++y) {
        const auto u = oracle::upper(p, oracle::pair(p, x, fig2.comp(y)));
        const auto m = oracle::lower(p, oracle::unite(u, oracle::single(p, y)));
        CHECK(o.m(x, y) == oracle::to_bits(m));
        const auto lxy = oracle::lower(p, oracle::pair(p, x, y));
        const auto r = oracle::lower(p, oracle::upper(p, oracle::unite(lxy, oracle::single(p, fig2.comp(x)))));
        CHECK(o.r(x, y) == oracle::to_bits(r));
      }
  }

  TEST_CASE("residuum order") {
    CHECK(residuum_order_test(builtin_complemented("fig1")).holds);
    CHECK(residuum_order_test(builtin_complemented("fig1xfig2")).holds);
    const auto chain = builtin_complemented("chain2");
    const OperatorResiduation o(chain);
    for (Element x = 0; x < chain.size(); ++x) CHECK(o.r(x, x).is_full());
  }

  TEST_CASE("lattice and operator residuation agree on lattices") {
    CHECK(lattice_operator_agreement(builtin_complemented("fig1")).holds);
    CHECK(lattice_operator_agreement(builtin_complemented("boolean8")).holds);
    CHECK(lattice_operator_agreement(builtin_complemented("chain2")).holds);
  }

  TEST_CASE("complements swap the bounds") {
    for (const auto& name : builtin_names()) {
      const auto doc = builtin(name);
      if (!doc.complemented) continue;
      const auto& cp = *doc.complemented;
      CHECK(cp.comp(*cp.poset().bottom()) == *cp.poset().top());
      CHECK(cp.comp(*cp.poset().top()) == *cp.poset().bottom());
    }
  }

  TEST_CASE("adjointness witnesses do not depend on the thread count") {
    for (const auto& cp : enumerate_complementations(builtin("n5").poset)) {
      const TermResiduation t(cp);
      CHECK(check_adjointness(t, Direction::both, 1) == check_adjointness(t, Direction::both, 3));
      const OperatorResiduation o(cp);
      CHECK(check_operator_adjointness(o, Direction::both, 1) == check_operator_adjointness(o, Direction::both, 3));
    }
  }
}
