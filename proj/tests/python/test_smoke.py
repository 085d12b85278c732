import pytest

import goldilocks as gl


def test_truth_table_round_trip():
    f = gl.BooleanFunction("00010111")
    assert f.arity == 3
    assert str(f) == "00010111"
    assert f.to_hex() == "0x17"
    assert gl.BooleanFunction("0x17") == f


def test_operators():
    and2 = gl.BooleanFunction("0001")
    maj3 = gl.BooleanFunction("00010111")
    assert gl.dual(and2) == gl.BooleanFunction("0111")
    assert gl.self_dualize(and2) == maj3
    assert gl.anti_self_dualize(maj3) == and2
    assert gl.reduce(maj3, 1, False) == and2
    assert gl.is_self_dual(maj3)
    assert gl.permute(maj3, [2, 3, 1]) == maj3


def test_chow_and_degree():
    maj3 = gl.BooleanFunction("00010111")
    m, a = gl.chow(maj3)
    assert (m, a) == (4, [6, 6, 6])
    assert gl.degree(maj3) == 3
    assert gl.weak_variables(gl.BooleanFunction("0101")) == [2]
    assert gl.orbit_size(gl.BooleanFunction("0101")) == 2


def test_classification():
    report = gl.classify(gl.BooleanFunction("00010111"))
    assert report["goldilocks"] is True
    assert report["realization"]["positive"] is True

    xor2 = gl.BooleanFunction("0110")
    report = gl.classify(xor2)
    assert report["is_ltf"] is False
    assert report["certificate"]["kind"] == "not_separable"
    assert not gl.is_threshold(xor2)


def test_realization():
    result = gl.find_realization(gl.BooleanFunction("0001"), positive=True, small=True)
    assert result["feasible"] is True
    assert result["realization"]["small"] is True


def test_counts():
    assert gl.count_chambers(3, genus="positive", engine="both") == (9, 5)
    assert gl.count_chambers(4, genus="0", engine="both") == (27, 5)
    with pytest.raises(gl.BudgetError):
        gl.count_chambers(9, genus="positive")


def test_chambers():
    maj3 = gl.BooleanFunction("00010111")
    assert gl.phi_map(["3/4", "3/4", "3/4"], genus="0") == maj3
    weights = gl.chamber_representative(maj3, genus="0")
    assert gl.phi_map(weights, genus="0") == maj3
    assert gl.same_chamber(["1/3", "1/3"], ["2/5", "2/5"])


def test_identities():
    lhs, rhs, ok = gl.identity_check(3)
    assert ok and lhs == rhs == 104
    assert gl.irmatov_estimate(4) == 3882
    report = gl.ratio_report(4)
    assert report["genus_ratio"] == "9/32"
