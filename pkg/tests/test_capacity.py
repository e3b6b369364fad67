from fractions import Fraction

import pytest

from flexmarket.analysis import clear_scenario
from flexmarket.capacity import (
    CapacityPool,
    UnallocatableFeeError,
    build_pool,
    eligible_plants,
    settle,
)
from flexmarket.scenario import toy_grid


@pytest.fixture
def phis(toy):
    return toy.flexibilities()


def pool_of(toy, phis, ids):
    return build_pool(toy.plants, phis, participants=ids, allow_overlap=True)


class TestEligibility:
    def test_toy_grid_default_threshold(self, toy, phis):
        assert set(eligible_plants(toy.plants, phis)) == {"hydro", "gas", "chp"}

    def test_ordered_by_descending_phi(self, toy, phis):
        assert eligible_plants(toy.plants, phis) == ["hydro", "gas", "chp"]

    def test_high_threshold_empties_pool(self, toy, phis):
        # max phi on the toy grid is hydro's 50/51 = 0.98039 < 0.99
        assert eligible_plants(toy.plants, phis, Fraction("0.99")) == []

    def test_threshold_is_strict(self, toy, phis):
        hydro_phi = phis["hydro"]
        assert "hydro" not in eligible_plants(toy.plants, phis, hydro_phi)

    def test_threshold_must_be_interior(self, toy, phis):
        with pytest.raises(ValueError):
            eligible_plants(toy.plants, phis, Fraction(1))


class TestBuildPool:
    def test_auto_rule_excludes_dispatched(self, toy, phis):
        dispatched = clear_scenario(toy).dispatch
        pool = build_pool(toy.plants, phis, dispatched=dispatched)
        assert [pid for pid, _, _ in pool.participants] == ["gas"]

    def test_explicit_overlap_rejected_without_override(self, toy, phis):
        with pytest.raises(ValueError, match="dispatched"):
            build_pool(
                toy.plants, phis,
                participants=["hydro", "gas", "chp"],
                dispatched={"hydro", "chp"},
            )

    def test_override_allows_overlap(self, toy, phis):
        pool = build_pool(
            toy.plants, phis,
            participants=["hydro", "gas", "chp"],
            dispatched={"hydro", "chp"},
            allow_overlap=True,
        )
        assert len(pool.participants) == 3

    def test_ineligible_participant_rejected(self, toy, phis):
        with pytest.raises(ValueError):
            pool_of(toy, phis, ["nuclear"])

    def test_p_flex(self, toy, phis):
        pool = pool_of(toy, phis, ["hydro", "gas", "chp"])
        assert pool.p_flex == 5 * (phis["hydro"] + phis["gas"] + phis["chp"])


class TestSettle:
    def test_three_plant_pool_cf_205(self, toy, phis):
        st = settle(pool_of(toy, phis, ["hydro", "gas", "chp"]), Fraction(205))
        rounded = {pid: round(float(v)) for pid, v in st.payments.items()}
        assert rounded == {"hydro": 74, "gas": 67, "chp": 64}

    def test_two_plant_pool_cf_205(self, toy, phis):
        st = settle(pool_of(toy, phis, ["gas", "chp"]), Fraction(205))
        rounded = {pid: round(float(v)) for pid, v in st.payments.items()}
        assert rounded == {"gas": 105, "chp": 100}

    def test_three_plant_pool_cf_790(self, toy, phis):
        st = settle(pool_of(toy, phis, ["hydro", "gas", "chp"]), Fraction(790))
        assert abs(st.payments["hydro"] - 284) < 1
        assert abs(st.payments["gas"] - 259) < 1
        # printed as 247; exact is 247.52
        assert abs(st.payments["chp"] - 247) <= 1

    def test_two_plant_pool_cf_790(self, toy, phis):
        st = settle(pool_of(toy, phis, ["gas", "chp"]), Fraction(790))
        assert abs(st.payments["gas"] - 404) < 1
        assert abs(st.payments["chp"] - 386) < 1

    def test_single_participant_gets_everything(self, toy, phis):
        st = settle(pool_of(toy, phis, ["gas"]), Fraction("123.45"))
        assert st.payments == {"gas": Fraction("123.45")}

    def test_zero_fee(self, toy, phis):
        st = settle(pool_of(toy, phis, ["hydro", "gas"]), Fraction(0))
        assert all(v == 0 for v in st.payments.values())

    def test_conservation_exact(self, toy, phis):
        st = settle(pool_of(toy, phis, ["hydro", "gas", "chp"]), Fraction(790))
        assert sum(st.payments.values()) == 790

    def test_empty_pool_with_positive_fee_raises(self):
        with pytest.raises(UnallocatableFeeError):
            settle(CapacityPool(()), Fraction(100))

    def test_empty_pool_with_zero_fee_is_benign(self):
        assert settle(CapacityPool(()), Fraction(0)).payments == {}

    def test_negative_fee_rejected(self, toy, phis):
        with pytest.raises(ValueError):
            settle(pool_of(toy, phis, ["gas"]), Fraction(-1))

    def test_pool_rejects_ineligible_member(self):
        with pytest.raises(ValueError):
            CapacityPool((("slow", Fraction(1, 4), Fraction(5)),))
