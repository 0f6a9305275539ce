import pytest

import multirec


def test_thue_morse_prefix():
    assert [multirec.thue_morse(n) for n in range(16)] == [0, 1, 1, 0, 1, 0, 0, 1, 1, 0, 0, 1, 0, 1, 1, 0]


def test_fibonacci_prefix():
    assert [multirec.fibonacci(n) for n in range(9)] == [0, 1, 0, 0, 1, 0, 1, 0, 0]


def test_presets_listed():
    names = multirec.morphism_presets()
    for n in ("preimage-3x2", "sierpinski", "ssurdo-3x3", "surd-not-ssurdo-2x2", "suffnotnec-3x3", "power-3x3"):
        assert n in names
    assert "thue-morse-gcd" in multirec.word_presets()


def test_sierpinski_prefix_bottom_row_first():
    assert multirec.prefix("sierpinski", [2, 2]) == [[1, 1], [1, 0]]
    assert multirec.letter("sierpinski", [3, 4]) == int((3 & 4) == 0)


def test_diagonal_blocks():
    blocks = multirec.directional("surd-not-ssurdo-2x2", [1, 1], [1, 2], 4)
    assert blocks == [[[1], [0]], [[0], [1]], [[1], [1]], [[1], [0]]]


def test_gaps_and_surd():
    r = multirec.measure_gaps("suffnotnec-3x3", [1, 3], [1, 1], [0, 0], 2000)
    assert r["occurrences"] == [0]
    assert r["verdict"] == "NO_RECURRENCE_IN_HORIZON"
    for s in multirec.check_surd("thue-morse-gcd", horizon=1000, max_dir=3, max_size=2, workers=1):
        assert s["verdict"] == "BOUNDED_WITNESSED"


def test_ur_window():
    assert multirec.ur_window_bound("fib-rows", [2, 2], 64) is None
    assert multirec.ur_window_bound("toeplitz-rows", [1, 1], 64) <= 4


def test_classification():
    assert multirec.classify_2x2("surd-not-ssurdo-2x2") == "SURD"
    assert multirec.classify_2x2("sierpinski") == "NOT_SURD"
    all_2x2 = multirec.enumerate_2x2()
    verdicts = [multirec.classify_2x2(m) for m in all_2x2]
    assert len(all_2x2) == 128
    assert verdicts.count("SURD") == 72
    w = multirec.non_surd_witness({"k": 2, "dims": [2, 2], "images": {"0": [[0, 1], [1, 0]], "1": [[1, 1], [0, 1]]}})
    assert w["case"] == "Case 3.2"
    assert w["direction"] == [2, 1]
    with pytest.raises(multirec.MultirecError):
        multirec.non_surd_witness("surd-not-ssurdo-2x2")


def test_conditions():
    assert multirec.check_condition("power-3x3", "power", power=2)["holds"]
    assert not multirec.check_condition("power-3x3", "main-morphic")["holds"]
    assert multirec.check_condition("cor1-example", "cor1")["holds"]
    with pytest.raises(multirec.MultirecError):
        multirec.check_condition("sierpinski", "unknown")


def test_subgroups():
    assert len(multirec.subgroups(5)) == 6
    assert len(multirec.subgroups(6)) == 12
    assert len(multirec.subgroups(5, 3)) == 31


def test_derivative():
    grid, table = multirec.derivative("surd-not-ssurdo-2x2", [1, 2], [10, 10])
    assert [grid[i][i] for i in range(10)] == [0, 1, 2, 3, 4, 0, 1, 0, 1, 2]
    ugrid, utable = multirec.derivative("surd-not-ssurdo-2x2", [1, 2], [27, 8], "uniform")
    assert ugrid[0][0] == -1
    assert len(utable) == 17


def test_render_pbm():
    assert multirec.render("sierpinski", [2, 2], "pbm") == "P1\n2 2\n1 0\n1 1\n"


def test_figures():
    results = multirec.verify_figures()
    assert len(results) == 10
    assert all(passed for _, passed, _, _ in results)


def test_errors():
    with pytest.raises(multirec.MultirecError):
        multirec.prefix("no-such-word", [2, 2])
