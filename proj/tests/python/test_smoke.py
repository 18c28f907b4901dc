from fractions import Fraction

import lynperm


def test_blocks():
    assert lynperm.blocks("2143") == ["21", "21"]
    assert lynperm.block_word("132") == "1|21"


def test_lyndon_enum():
    assert lynperm.lyndon_permutations(3) == ["321", "312", "231", "21", "132"]
    assert lynperm.is_lyndon("132")
    assert not lynperm.is_lyndon("12")


def test_lyndon_counts():
    assert lynperm.lyndon_counts(6) == [1, 1, 4, 17, 92, 572]


def test_cfl():
    assert lynperm.cfl("21|1|21|1") == ["21", "1|21", "1"]
    assert lynperm.lyndon_factors("1324") == ["132", "1"]


def test_shuffle():
    assert lynperm.shuffle(["21", "1"]) == {"21|1": 1, "1|21": 1}


def test_flag_product():
    prod = lynperm.flag_product(["12", "1"])
    assert prod["132"] == Fraction(2, 3)
    assert prod["231"] == Fraction(1, 3)
    assert sum(prod.values()) == 3


def test_pattern_density():
    assert lynperm.pattern_density("12", "2413") == Fraction(1, 2)


def test_blowup_density():
    assert lynperm.blowup_density("12", "21", ["1/2", "1/2"]) == Fraction(1, 2)
    assert lynperm.blowup_density("231", "231", [Fraction(1, 3)] * 3) == Fraction(4, 9)


def test_sample_and_estimate():
    word = lynperm.sample("21", ["1/2", "1/2"], 8, seed=3)
    assert sorted(word) == list(range(1, 9))
    assert word == lynperm.sample("21", ["1/2", "1/2"], 8, seed=3)
    est = lynperm.estimate_density("21", "21", ["1/2", "1/2"], trials=2000, seed=1)
    assert est["trials"] == 2000
    assert abs(est["mean"] - 0.5) <= 5 * est["standard_error"]


def test_reduce():
    assert lynperm.reduce("12") == "1 - x[21]"
    table = lynperm.reduction_table(3)
    assert table["21"] == "x[21]"
    assert len(table) == 9


def test_witness():
    cert = lynperm.find_witness(2, seed=0)
    assert cert["k"] == 2
    assert Fraction(cert["determinant"]) != 0
    assert cert["lyndon_list"] == ["21", "1"]


def test_lemma():
    assert lynperm.lemma_unique(["321", "21"])
