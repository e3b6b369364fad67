import random
from fractions import Fraction

import pytest

from flexmarket.flexibility import StartUpTime, hyperbolic_measure
from flexmarket.plants import PlantFlexibility, PowerPlant, flexibilities_for, flexibility_of


def plant(pid="p", hours="1", mc=10, cap=5):
    sut = StartUpTime.unbounded() if hours is None else StartUpTime.of(hours)
    return PowerPlant(pid, sut, Fraction(mc), Fraction(cap))


class TestPowerPlant:
    def test_negative_marginal_cost_rejected(self):
        with pytest.raises(ValueError):
            plant(mc=-1)

    def test_zero_capacity_rejected(self):
        with pytest.raises(ValueError):
            plant(cap=0)


class TestFlexibilityOf:
    def test_ccgt(self):
        f = flexibility_of(plant("ccgt", 5), hyperbolic_measure())
        assert f.phi == Fraction(1, 6)
        assert abs(f.phi - Fraction("0.1667")) < Fraction("0.0001")

    def test_lignite(self):
        assert flexibility_of(plant("lignite", 9), hyperbolic_measure()).phi == Fraction(1, 10)

    def test_wind_unbounded(self):
        assert flexibility_of(plant("wind", None), hyperbolic_measure()).phi == 0

    def test_phi_range_enforced(self):
        with pytest.raises(ValueError):
            PlantFlexibility("p", Fraction(3, 2))

    def test_order_independent(self):
        plants = [plant(f"p{i}", i) for i in range(8)]
        shuffled = plants[:]
        random.Random(7).shuffle(shuffled)
        assert flexibilities_for(plants, hyperbolic_measure()) == flexibilities_for(
            shuffled, hyperbolic_measure()
        )

    def test_half_threshold_equals_one_hour(self):
        # For the hyperbolic measure only: phi > 1/2 iff start-up < 1 h.
        m = hyperbolic_measure()
        for h in ("0", "0.5", "0.999"):
            assert m(StartUpTime.of(h)) > Fraction(1, 2)
        for h in ("1", "1.001", "50"):
            assert not m(StartUpTime.of(h)) > Fraction(1, 2)
