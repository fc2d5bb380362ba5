"""Equilibrium enumeration, the brute-force oracle, IESDS and the theorem check.

Expected values marked as oracle-frozen were computed with
brute_force_equilibria (the exhaustive row-deviation scan) and then fixed
here; the decomposed enumerator must keep agreeing with them.
"""

import random
from fractions import Fraction
from itertools import product

import pytest

from goalgames import (
    CapExceeded,
    GroupSpec,
    brute_force_equilibria,
    equilibria,
    iesds,
    is_equilibrium,
    profile_from_values,
    random_applicable_game,
    single_goal_equilibria,
    standard_game,
    verify_importance_of_being_different,
)
from goalgames.core import CostSet, Game, profile_values

from helpers import QUARTER, abo_game, random_game

F = Fraction


def column_values(game, columns):
    return [tuple(game.costs[k] for k in col) for col in columns]


class TestSingleGoal:
    def test_ab_goal_columns_are_unique(self):
        game = abo_game("AB")
        assert column_values(game, single_goal_equilibria(game, 0)) == [(F(1), F(0))]
        assert column_values(game, single_goal_equilibria(game, 1)) == [(F(0), F(1))]

    def test_oo_goal_has_two_columns(self):
        # Oracle-frozen: the all-defect and all-cooperate columns.
        game = abo_game("OO")
        assert column_values(game, single_goal_equilibria(game, 0)) == [
            (F(0), F(0)),
            (F(1, 2), F(1, 2)),
        ]

    def test_aaa_goal_one_has_eight_columns(self):
        # Oracle-frozen: six spreads of (1, 1/2, 0), all-cooperate, all-defect.
        game = abo_game("AAA")
        columns = column_values(game, single_goal_equilibria(game, 0))
        assert len(columns) == 8
        spreads = {c for c in columns if sorted(c) == [F(0), F(1, 2), F(1)]}
        assert len(spreads) == 6
        assert (F(0), F(0), F(0)) in columns
        assert (F(1, 2), F(1, 2), F(1, 2)) in columns

    def test_columns_are_lexicographic(self):
        game = abo_game("OO")
        columns = single_goal_equilibria(game, 0)
        assert columns == sorted(columns)

    def test_goal_index_checked(self):
        with pytest.raises(IndexError):
            single_goal_equilibria(abo_game("AB"), 2)


class TestEquilibria:
    def test_ab_unique(self):
        found = equilibria(abo_game("AB"))
        assert found.counts == (1, 1)
        assert found.total_count == 1
        assert found.achieved_fractions == (F(1), F(1))

    def test_oo_four_equilibria(self):
        found = equilibria(abo_game("OO"))
        assert found.counts == (2, 2)
        assert found.total_count == 4
        assert found.achieved_fractions == (F(1, 2), F(1, 2))

    def test_aaaa_counts(self):
        found = equilibria(abo_game("AAAA"))
        assert found.counts == (20, 1)
        assert found.achieved_fractions == (F(19, 20), F(0))

    def test_count_never_exceeds_profile_space(self):
        for codes in ("AB", "OO", "AAA"):
            game = abo_game(codes)
            bound = game.n_choices ** (game.n_agents * game.n_goals)
            assert equilibria(game).total_count <= bound

    def test_column_cap(self):
        with pytest.raises(CapExceeded):
            equilibria(abo_game("AAAA"), column_cap=10)


class TestIsEquilibrium:
    def test_ab_diagonal_yes(self):
        game = abo_game("AB")
        assert is_equilibrium(game, profile_from_values(game, [[1, 0], [0, 1]]))

    def test_ab_zeros_no(self):
        game = abo_game("AB")
        assert not is_equilibrium(game, profile_from_values(game, [[0, 0], [0, 0]]))

    def test_oo_zeros_yes(self):
        game = abo_game("OO")
        assert is_equilibrium(game, profile_from_values(game, [[0, 0], [0, 0]]))

    def test_oo_diagonal_no(self):
        game = abo_game("OO")
        assert not is_equilibrium(game, profile_from_values(game, [[1, 0], [0, 1]]))

    def test_shape_mismatch(self):
        game = abo_game("AB")
        with pytest.raises(ValueError):
            is_equilibrium(game, ((0, 0),))


class TestBruteForce:
    def test_ab_finds_only_the_diagonal(self):
        game = abo_game("AB")
        found = brute_force_equilibria(game)
        assert [profile_values(game, p) for p in found] == [
            ((F(1), F(0)), (F(0), F(1)))
        ]

    def test_oo_finds_four(self):
        found = brute_force_equilibria(abo_game("OO"))
        assert len(found) == 4

    def test_lone_agent_contributes_its_threshold(self):
        game = Game(1, 1, CostSet((F(0), F(2))), (F(2),), ((F(3),),))
        found = brute_force_equilibria(game)
        assert [profile_values(game, p) for p in found] == [((F(2),),)]

    def test_profiles_come_back_lexicographic(self):
        found = brute_force_equilibria(abo_game("OO"))
        assert found == sorted(found)

    def test_cap(self):
        with pytest.raises(CapExceeded):
            brute_force_equilibria(abo_game("AB"), profile_cap=10)


def assembled(game):
    return sorted(equilibria(game).profiles())


class TestProductDecomposition:
    @pytest.mark.parametrize("n_agents", [1, 2, 3])
    def test_all_abo_games(self, n_agents):
        from itertools import combinations_with_replacement

        for combo in combinations_with_replacement("AOB", n_agents):
            game = abo_game("".join(combo))
            assert assembled(game) == sorted(brute_force_equilibria(game))

    @pytest.mark.parametrize("n_agents", [1, 2, 3])
    def test_single_goal_type_grid(self, n_agents):
        from itertools import combinations_with_replacement

        for combo in combinations_with_replacement("210", n_agents):
            game = standard_game(
                n_agents, 1, GroupSpec.parse(list(combo), 1, QUARTER)
            )
            assert assembled(game) == sorted(brute_force_equilibria(game))

    def test_random_games(self):
        rng = random.Random(1729)
        for _ in range(40):
            game = random_game(rng)
            assert assembled(game) == sorted(brute_force_equilibria(game))


class TestDeviationEquivalence:
    def test_single_entry_check_agrees_with_row_scan_everywhere(self):
        rng = random.Random(99)
        checked = 0
        while checked < 5:
            game = random_game(rng, max_agents=2, max_goals=2)
            space = game.n_choices ** (game.n_agents * game.n_goals)
            if space > 729:
                continue
            checked += 1
            oracle = set(brute_force_equilibria(game))
            strategies = list(product(range(game.n_choices), repeat=game.n_goals))
            for assignment in product(strategies, repeat=game.n_agents):
                assert is_equilibrium(game, assignment) == (assignment in oracle)


class TestIesds:
    def test_lone_agent_keeps_exact_cover_contribution(self):
        # C = {0, 1, 2}, threshold 1, reward 9/4: paying 2 is dominated by
        # paying 1, and paying 0 loses to both.
        game = Game(1, 1, CostSet((F(0), F(1), F(2))), (F(1),), ((F(9, 4),),))
        assert iesds(game).per_agent == (((1,),),)

    def test_ab_reduces_to_single_strategies(self):
        survivors = iesds(abo_game("AB")).per_agent
        assert survivors == (((2, 0),), ((0, 2),))

    def test_oo_keeps_multiple_strategies(self):
        survivors = iesds(abo_game("OO")).per_agent
        assert all(len(s) >= 2 for s in survivors)

    def test_survivor_sets_never_empty(self):
        rng = random.Random(5)
        for _ in range(20):
            game = random_game(rng, max_agents=2, max_goals=2)
            assert all(s for s in iesds(game).per_agent)

    def test_order_independence(self):
        rng = random.Random(7)
        games = [abo_game(c) for c in ("AB", "OO", "AA", "AOB")]
        games += [random_game(rng, max_agents=2, max_goals=2) for _ in range(10)]
        for game in games:
            assert iesds(game, order="batch") == iesds(game, order="immediate")

    def test_equilibria_use_only_survivors(self):
        rng = random.Random(11)
        games = [abo_game(c) for c in ("AB", "OO", "AAA")]
        games += [random_game(rng, max_agents=2, max_goals=2) for _ in range(10)]
        for game in games:
            survivors = iesds(game).per_agent
            for profile in equilibria(game).profiles():
                for agent, row in enumerate(profile):
                    assert row in survivors[agent]

    def test_over_threshold_contributions_die(self):
        # Lemma-style check: with a cheaper achieving choice available, no
        # survivor ever pays the dearer one toward that goal.
        game = Game(
            2, 1, CostSet((F(0), F(1), F(2))), (F(1),),
            ((F(9, 4),), (F(3, 2),)),
        )
        for survivors in iesds(game).per_agent:
            assert all(strategy[0] != 2 for strategy in survivors)

    def test_pair_cap(self):
        with pytest.raises(CapExceeded):
            iesds(abo_game("AAA"), pair_cap=3)


class TestTheorem:
    def test_ab_satisfies_every_flag(self):
        report = verify_importance_of_being_different(abo_game("AB"))
        assert report.applicable
        assert report.unique_equilibrium
        assert report.equilibrium_is_diagonal
        assert report.all_goals_achieved

    def test_three_goal_specialists(self):
        group = GroupSpec.parse(["200", "020", "002"], 3, QUARTER)
        game = standard_game(3, 3, group)
        report = verify_importance_of_being_different(game)
        assert report.applicable
        assert report.unique_equilibrium and report.equilibrium_is_diagonal
        assert report.all_goals_achieved
        values = profile_values(game, report.equilibrium)
        for i in range(3):
            for j in range(3):
                assert values[i][j] == (F(1) if i == j else F(0))

    def test_oo_not_applicable(self):
        report = verify_importance_of_being_different(abo_game("OO"))
        assert not report.applicable

    def test_random_applicable_games_always_verify(self):
        rng = random.Random(2024)
        for _ in range(15):
            game = random_applicable_game(rng.randint(2, 4), rng)
            report = verify_importance_of_being_different(game)
            assert report.applicable
            assert report.unique_equilibrium
            assert report.equilibrium_is_diagonal
            assert report.all_goals_achieved
