import detlab


def test_field_arithmetic():
    F = detlab.FiniteField(3)
    assert F.q == 3
    assert F.mul(2, 2) == 1
    F9 = detlab.FiniteField(3, 2)
    assert F9.q == 9
    assert F9.mul(3, 3) == 2  # x * x = -1
    assert F9.modulus == [1, 0, 1]


def test_entry_set():
    F = detlab.FiniteField(7)
    members, descriptor = detlab.entry_set(F, "interval:2")
    assert members == [0, 1, 2, 5, 6]
    assert "interval" in descriptor


def test_count_distribution():
    F = detlab.FiniteField(3)
    assert detlab.count_distribution(F, [0, 1], 2) == [10, 3, 3]
    assert detlab.count_distribution(F, "list:0,1", 2, method="brute") == [10, 3, 3]


def test_pair_statistic():
    F = detlab.FiniteField(3)
    assert detlab.pair_statistic(F, [0, 1], 2) == "18"


def test_recursion_report():
    F = detlab.FiniteField(3)
    reports = detlab.recursion_report(F, [0, 1], 2)
    assert len(reports) >= 4
    assert all(rep["pass"] for rep in reports)


def test_find_3ap():
    F5 = detlab.FiniteField(5)
    w = detlab.find_3ap(F5, [1, 2], [1, 2])
    assert w is not None
    assert w["terms"] == [1, 4, 2]
    F7 = detlab.FiniteField(7)
    assert detlab.find_3ap(F7, [1], [1]) is None


def test_verify_all():
    F = detlab.FiniteField(3)
    ok, data = detlab.verify_all(F, [0, 1], 2, seed=5)
    assert ok is True
    assert data["pass"] is True


def test_budget_error():
    F = detlab.FiniteField(7)
    try:
        detlab.count_distribution(F, "full", 3, method="brute", budget=1000)
    except detlab.BudgetError:
        pass
    else:
        raise AssertionError("expected BudgetError")
