import json
import random

import pytest
from hypothesis import given

from pmatch.graph import Graph, complement, generate
from pmatch.properties import PropertyId
from pmatch.solvers import EngineConfig, SetSystem, compute_beta_p
from pmatch.theorems import (
    NordhausGaddumRecord,
    all_graphs,
    applicable_checks,
    check_block_class_identity,
    check_connected_theorem,
    check_frobenius,
    check_gallai,
    check_hall,
    check_konig,
    check_proposition_chains,
    check_ur_characterization,
    graph_id,
    nordhaus_gaddum_scan,
    random_graphs,
    random_odd_block_graph,
    random_set_system,
    run_check,
)

from conftest import graphs


def test_gallai_examples(p8, k4):
    v = check_gallai(p8)
    assert v.holds and v.details["alpha1"] == 4 and v.details["beta1"] == 4
    v = check_gallai(k4)
    assert v.holds and v.details["alpha0"] == 3 and v.details["beta0"] == 1
    lone = Graph(3, ((0, 1),))
    assert check_gallai(lone).holds  # identity (i) only
    assert "alpha1" not in check_gallai(lone).details
    with pytest.raises(ValueError):
        check_gallai(lone, identity="ii")


def test_gallai_random_isolate_free():
    rng = random.Random(13)
    done = 0
    for G in random_graphs(7, 60, seed=99):
        if any(G.degree(v) == 0 for v in range(G.n)):
            continue
        done += 1
        assert check_gallai(G).holds
        if done >= 25:
            break
    assert done >= 10


def test_konig_examples(c4):
    assert check_konig(c4).holds
    k33 = generate("complete_bipartite", a=3, b=3)
    v = check_konig(k33)
    assert v.holds and v.details["beta1"] == 3
    with pytest.raises(ValueError):
        check_konig(generate("cycle", n=5))


def test_frobenius_examples():
    k33 = generate("complete_bipartite", a=3, b=3)
    v = check_frobenius(k33)
    assert v.holds and v.details["perfect_matching_exists"]
    k13 = generate("complete_bipartite", a=1, b=3)
    v = check_frobenius(k13)
    assert v.holds and not v.details["perfect_matching_exists"]
    p6 = generate("path", n=6)  # a 6-cycle minus one edge
    assert check_frobenius(p6).holds
    with pytest.raises(ValueError):
        check_frobenius(generate("cycle", n=5))


def test_frobenius_deficiency_route():
    k13 = generate("complete_bipartite", a=1, b=3)
    v = check_frobenius(k13, exhaustive_limit=0)
    assert v.holds


@given(graphs(max_n=7))
def test_frobenius_random_bipartite(G):
    from pmatch.graph import is_bipartite

    if is_bipartite(G) is None:
        return
    assert check_frobenius(G).holds


def test_hall_examples():
    v = check_hall(SetSystem((1,), ({1}, {1})))
    assert v.holds and v.details["sdr"] is None
    v = check_hall(SetSystem((1, 2, 3), ({1}, {2}, {3})))
    assert v.holds and v.details["sdr"] is not None
    rng = random.Random(5)
    for _ in range(150):
        assert check_hall(random_set_system(rng, 8, 8), exhaustive_limit=8).holds


def test_chain_examples(p8, k4):
    assert check_proposition_chains(p8).holds
    assert check_proposition_chains(k4).holds


def test_connected_theorem_examples(p8, k4):
    assert check_connected_theorem(p8).holds
    assert check_connected_theorem(k4).holds
    with pytest.raises(ValueError):
        check_connected_theorem(Graph(4, ((0, 1), (2, 3))))


def test_ur_characterization_examples(c4):
    assert check_ur_characterization(c4).holds
    fig2r = generate("fig2r")
    assert check_ur_characterization(fig2r).holds


def test_block_class_examples(c5):
    assert check_block_class_identity(c5).holds
    for seed in range(8):
        T = generate("random_tree", n=10, seed=seed)
        assert check_block_class_identity(T).holds
    c7p = Graph(8, tuple((i, (i + 1) % 7) for i in range(7)) + ((0, 7),))
    assert check_block_class_identity(c7p).holds
    with pytest.raises(ValueError):
        check_block_class_identity(generate("cycle", n=4))


def test_random_odd_block_graphs_have_good_blocks():
    from pmatch.graph import block_decomposition

    rng = random.Random(31)
    for _ in range(40):
        G = random_odd_block_graph(rng, rng.randint(1, 3))
        assert all(b.kind in ("edge", "odd_cycle") for b in block_decomposition(G).blocks)
        assert check_block_class_identity(G).holds


def test_verdict_reproducible(p8):
    a = check_gallai(p8)
    b = check_gallai(p8)
    assert a == b
    assert json.dumps(a.to_json_dict(), sort_keys=True) == json.dumps(b.to_json_dict(), sort_keys=True)


def test_applicable_checks(p8, c5):
    names = applicable_checks(p8)
    assert "gallai" in names and "konig" in names and "connected" in names
    assert "konig" not in applicable_checks(c5)
    for name in names:
        assert run_check(name, p8).holds


def test_scan_self_complementary(c5):
    records, summary = nordhaus_gaddum_scan([c5], PropertyId.PLAIN)
    assert len(records) == 1
    rec = records[0]
    beta1_c5 = compute_beta_p(c5, PropertyId.PLAIN).value
    assert rec.value_graph == rec.value_complement == beta1_c5
    assert rec.total == 2 * beta1_c5
    assert summary["count"] == 1 and summary["skipped"] == 0
    assert summary["max_sum"][0] == rec.total
    json.dumps(rec.to_json_dict())


def test_scan_small_corpus():
    records, summary = nordhaus_gaddum_scan(all_graphs(4), PropertyId.INDUCED)
    assert summary["count"] == 64
    # verify one record independently
    for rec in records:
        assert rec.total == rec.value_graph + rec.value_complement
    # edgeless graph on 4 vertices: value 0, complement K4 has induced max 1
    assert summary["min_sum"][0] == min(r.total for r in records)
    assert summary["max_sum"][0] == max(r.total for r in records)


def test_scan_records_budget_blowups():
    k6 = generate("complete", n=6)
    records, summary = nordhaus_gaddum_scan(
        [k6], PropertyId.INDUCED, EngineConfig(node_budget=2)
    )
    assert summary["skipped"] == 1 and summary["count"] == 0
    assert records[0].error is not None


def test_graph_id_deterministic(p8):
    assert graph_id(p8) == graph_id(generate("path", n=8))
    assert graph_id(p8) != graph_id(generate("path", n=7))
