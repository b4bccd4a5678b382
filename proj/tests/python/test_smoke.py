import pytest

import flatpark


def test_published_table1_row():
    row = flatpark.table1(6)[-1]
    assert row["total"] == 2937
    assert row["by_k"][:3] == [132, 1656, 1149]


def test_enumerate_and_count_agree():
    words = flatpark.enumerate("flat-s-insertion", 3, S="2")
    assert words == ["1223", "1232", "1322"]
    assert flatpark.count("flat-s-insertion", 3, S="2") == 3
    assert flatpark.histogram("flat-pf", 5) == [0, 42, 245, 49]


def test_sequences_are_python_ints():
    assert flatpark.catalan(8) == 1430
    assert flatpark.bell(30) == 846749014511809332450147
    assert flatpark.count_T(4, 1) == 11
    assert flatpark.count_Bkr(4, 4, 2) == 391


def test_recursions_match_brute_force():
    for n in range(1, 8):
        for k in range(1, n):
            assert flatpark.f_flat(n, k, "flat_perm_two_term") == flatpark.f_flat(n, k)
    assert flatpark.f_ones(1, 5, 2) == 2**5 - 5 - 1
    assert flatpark.hook_sum(5) == flatpark.flat2_single_insert(7) == 88


def test_partition_round_trip():
    word = flatpark.partition_to_flat("13/24")
    assert word == "13142"
    assert flatpark.flat_to_partition(word) == "13/24"
    assert flatpark.is_flattened(word)
    assert flatpark.run_count(word) == 3


def test_reports_are_dicts():
    report = flatpark.verify_bijection("shift_down", 4, S="2,3")
    assert report["passed"] is True
    assert report["domain_size"] == report["codomain_size"]
    bad = flatpark.verify("r_ones_eq2", size_max=6)
    assert bad["status"] == "fail"
    assert "gf_closed_form" in flatpark.verifiable_ids()


def test_errors_map_to_python_exceptions():
    with pytest.raises(ValueError):
        flatpark.f_flat(4, 2, "no_such_method")
    with pytest.raises(ValueError):
        flatpark.enumerate("no-such-family", 3)
    with pytest.raises(flatpark.ResourceError):
        flatpark.count("parking-functions", 40)
