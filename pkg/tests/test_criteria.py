from edgedepth import criteria
from edgedepth.engine import depth_zero, h1_nonzero


def test_thm_2_1_fig1(fig1):
    check = criteria.check_thm_2_1(fig1)
    assert check.hypothesis_holds
    pairs = check.witness["pairs"]
    by_v = {p["v"]: p for p in pairs}
    assert by_v[7]["case"] == 2 and by_v[7]["threshold"] == 3
    assert frozenset(by_v[7]["cycle"]) == {1, 2, 3}
    assert check.consistent
    # sharpness: the first t with nonzero H1 sits below the best threshold
    assert min(p["threshold"] for p in pairs) == 2
    assert h1_nonzero(fig1, 2)[0]


def test_thm_2_1_hypothesis_failures(fig3, c5):
    assert not criteria.check_thm_2_1(fig3).hypothesis_holds
    assert not criteria.check_thm_2_1(c5).hypothesis_holds


def test_thm_2_4_and_2_6(c5, k2):
    checks = {c.theorem_id: c for c in criteria.check_thm_2_4_and_2_6(c5)}
    assert checks["thm-2.4"].hypothesis_holds
    assert sorted(map(len, (checks["thm-2.4"].witness["F"], checks["thm-2.4"].witness["G"]))) == [2, 2]
    assert checks["thm-2.4"].consistent
    assert checks["thm-2.6"].hypothesis_holds and checks["thm-2.6"].consistent
    checks = {c.theorem_id: c for c in criteria.check_thm_2_4_and_2_6(k2)}
    assert checks["thm-2.4"].witness == {"F": (1,), "G": (2,)}
    assert checks["thm-2.4"].consistent


def test_prop_4_1(triangle, fig2, c5):
    check = criteria.check_prop_4_1(triangle)
    assert check.hypothesis_holds and check.consistent
    assert len(check.witness["A"]) + len(check.witness["B"]) == 3
    check = criteria.check_prop_4_1(fig2)
    assert check.hypothesis_holds and check.consistent
    check = criteria.check_prop_4_1(c5)
    assert not check.hypothesis_holds and check.consistent


def test_thm_4_3(fig1, c5, triangle):
    check = criteria.check_thm_4_3(fig1)
    assert check.hypothesis_holds and check.consistent
    assert check.witness["triangle_condition"]["rest"] == (5, 6, 7)
    check = criteria.check_thm_4_3(c5)
    assert not check.hypothesis_holds and check.consistent
    check = criteria.check_thm_4_3(triangle)
    assert check.hypothesis_holds and check.consistent


def test_decrease_theorems(triangle, fig1):
    checks = {c.theorem_id: c for c in criteria.check_decrease_theorems(triangle)}
    assert checks["thm-4.2"].hypothesis_holds and checks["thm-4.2"].consistent
    checks = {c.theorem_id: c for c in criteria.check_decrease_theorems(fig1)}
    assert checks["thm-4.4"].hypothesis_holds and checks["thm-4.4"].consistent
    # t = 5 is sharp for the drop from depth one at t = 2
    assert depth_zero(fig1, 5)[0] and not depth_zero(fig1, 4)[0]
    assert checks["thm-4.8"].hypothesis_holds
    assert (7, 3) in checks["thm-4.8"].witness["instances"]
    assert checks["thm-4.8"].consistent
    assert checks["lemma-1.5"].hypothesis_holds
    assert checks["lemma-1.5"].witness["s"] == 3  # shortest dominating path


def test_persistence_props(c5, fig1, k2):
    checks = {c.theorem_id: c for c in criteria.check_persistence_props(c5, 4)}
    assert checks["thm-3.4"].hypothesis_holds and checks["thm-3.4"].consistent
    assert checks["prop-3.2"].hypothesis_holds and checks["prop-3.2"].consistent
    checks = {c.theorem_id: c for c in criteria.check_persistence_props(fig1, 4)}
    assert checks["prop-3.1"].hypothesis_holds and checks["prop-3.1"].consistent
    checks = {c.theorem_id: c for c in criteria.check_persistence_props(k2, 4)}
    assert checks["thm-3.5"].hypothesis_holds and checks["thm-3.5"].consistent
