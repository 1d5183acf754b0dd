import bagdet

SCHEMA = "R/2\n"

EDGE_Q = "Q() :- R(x, y).\n"
TRIANGLE_VIEW = "V1() :- R(x, y), R(y, z), R(z, x).\n"


def test_decide_determined():
    views = "V1() :- R(x, y).\nV2() :- R(x, y), R(y, z).\n"
    query = "Q() :- R(x, y), R(y, z).\n"
    out = bagdet.decide(SCHEMA, query, views)
    assert out["determined"] is True
    assert out["relevant_views"] == ["V1", "V2"]
    assert out["coefficients"] is not None


def test_decide_witness_roundtrip():
    out = bagdet.decide(SCHEMA, EDGE_Q, TRIANGLE_VIEW, synthesize=True)
    assert out["determined"] is False
    w = out["witness"]
    assert w["report"]["passed"] is True
    assert w["mult"] == ["2"]
    assert w["mult_prime"] == ["3"]
    # the two databases ship as parseable text and disagree on Q
    counts_d = bagdet.eval_queries(SCHEMA, EDGE_Q, w["d"])
    counts_dp = bagdet.eval_queries(SCHEMA, EDGE_Q, w["d_prime"])
    assert counts_d[0]["count"] * 3 == counts_dp[0]["count"] * 2


def test_eval_big_counts():
    # K4 has 4^3 = 64 maps from a 3-vertex pattern with no constraints met;
    # the 2-path count on K4 is 4 * 3 * 3 = 36.
    facts = "\n".join(
        f"R(a{i}, a{j})" for i in range(4) for j in range(4) if i != j
    )
    out = bagdet.eval_queries(SCHEMA, "Q() :- R(x, y), R(y, z).\n", facts)
    assert out[0]["count"] == 36


def test_hom_count():
    assert bagdet.hom_count(SCHEMA, "R(a, b)", "R(u, v)\nR(v, w)\nR(w, u)") == 3


def test_path_decide():
    out = bagdet.decide_path("ABCD", ["ABC", "BC", "BCD"])
    assert out["determined"] is True
    assert out["walk"].split() == ["A", "B", "C", "C^-1", "B^-1", "B", "C", "D"]


def test_path_witness():
    out = bagdet.path_witness("AB", ["A"])
    assert out["verified"] is True
    assert out["side"] == [0, 0, 1]
    assert "B(c1_1, c2_2)" in out["d_prime"]


def test_h10_roundtrip():
    enc = bagdet.h10_encode("1 x1\n-2\n")
    assert "VEQ" in enc["views"]
    w = bagdet.h10_witness("1 x1\n-2\n", ["2"])
    assert w["verified"] is True
    assert "H()" in w["d"]
    assert "C()" in w["d_prime"]
