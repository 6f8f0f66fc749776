import pytest
from sympy import primitive_root

from service.exceptions import InconsistentOrderError, NoSolutionError, ParameterError
from service.numtheory import DLogFactory, DLogStrategy, FactoredInteger, dlog, gen_prime_with_factor, mod_pow
from service.numtheory.dlog import BabyStepTable

STRATEGIES = [strategy.value for strategy in DLogStrategy]
R15 = FactoredInteger.from_factors([(3, 1), (5, 1)])


@pytest.fixture(scope="module")
def order15_base():
    g = int(primitive_root(241))
    return mod_pow(g, 240 // 15, 241)


@pytest.fixture(scope="module")
def smooth_group():
    """위수 3^3 * 5^2 * 7 인 부분군"""
    import random

    order = FactoredInteger.from_factors([(3, 3), (5, 2), (7, 1)])
    p = gen_prime_with_factor(order, 24, random.Random(11))
    base = mod_pow(int(primitive_root(p)), (p - 1) // order.value, p)
    return base, p, order


@pytest.mark.parametrize("strategy", STRATEGIES)
def test_identity_and_base(order15_base, strategy):
    assert dlog(order15_base, 1, 241, R15, strategy) == 0
    assert dlog(order15_base, order15_base, 241, R15, strategy) == 1


@pytest.mark.parametrize("strategy", STRATEGIES)
def test_every_exponent_full_order(order15_base, strategy):
    for e in range(15):
        assert dlog(order15_base, mod_pow(order15_base, e, 241), 241, R15, strategy) == e


def test_strategies_agree_on_smooth_group(smooth_group):
    base, p, order = smooth_group
    solvers = {s: DLogFactory.create_solver(base, p, order, s) for s in STRATEGIES}
    for e in range(0, order.value, 37):
        target = mod_pow(base, e, p)
        assert {s: solver.solve(target) for s, solver in solvers.items()} == {s: e for s in STRATEGIES}


@pytest.mark.parametrize("strategy", STRATEGIES)
def test_smallest_exponent_for_small_order_base(strategy):
    # 27^16 mod 241 의 위수는 5 이므로 답은 5 보다 작아야 한다
    base = mod_pow(27, 16, 241)
    target = mod_pow(base, 7, 241)
    assert dlog(base, target, 241, R15, strategy) == 2


@pytest.mark.parametrize("strategy", STRATEGIES)
def test_target_outside_subgroup(strategy):
    base = mod_pow(27, 16, 241)
    with pytest.raises(NoSolutionError):
        dlog(base, int(primitive_root(241)), 241, R15, strategy)


@pytest.mark.parametrize("strategy", STRATEGIES)
def test_inconsistent_order(strategy):
    with pytest.raises(InconsistentOrderError):
        dlog(int(primitive_root(241)), 1, 241, R15, strategy)


def test_unknown_strategy():
    with pytest.raises(ParameterError):
        DLogFactory.create_solver(1, 241, R15, "index_calculus")


def test_available_strategies():
    assert set(DLogFactory.get_available_strategies()) == set(STRATEGIES)


def test_baby_step_table_reuse(order15_base):
    table = BabyStepTable(order15_base, 241, 15)
    assert table.step == 4
    for e in range(15):
        assert table.lookup(mod_pow(order15_base, e, 241)) == e
    assert table.lookup(int(primitive_root(241))) is None


def test_solver_info(order15_base):
    info = DLogFactory.create_solver(order15_base, 241, R15, DLogStrategy.BSGS).get_strategy_info()
    assert info == {"strategy": "bsgs", "modulus_bits": 8, "order": 15}
