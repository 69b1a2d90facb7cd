import pytest

from lensurf import fundamentality as fu, haken, qcoords
from lensurf.construction import compressed_vectors, h0
from lensurf.errors import NotNormal
from lensurf.haken import HakenVector, vertex_link_vector
from lensurf.qcoords import t_vector
from lensurf.triangulation import POLE_VERTEX, LensParams, build_triangulation


@pytest.fixture(scope="module")
def t83():
    return build_triangulation(LensParams(8, 3))


@pytest.fixture(scope="module")
def h1_haken(t83):
    return qcoords.reconstruct_tdisks(t83, compressed_vectors(2)[-1])


def test_criterion_applies_to_compressed_surfaces(t83, h1_haken):
    params = LensParams(8, 3)
    h0_haken = qcoords.reconstruct_tdisks(t83, h0(params))
    assert fu.haken_fund_criterion(t83, h0_haken)
    assert fu.haken_fund_criterion(t83, h1_haken)


def test_criterion_false_on_links(t83):
    link = vertex_link_vector(t83, POLE_VERTEX)
    assert not fu.haken_fund_criterion(t83, link)


def test_criterion_rejects_non_normal(t83):
    counts = [0] * 56
    counts[4] = 1
    with pytest.raises(NotNormal):
        fu.haken_fund_criterion(t83, HakenVector(8, 3, tuple(counts)))


def test_oracle_confirms_h1_fundamental(t83, h1_haken):
    verdict = fu.minimality_oracle(t83, h1_haken)
    assert verdict.status == fu.FUNDAMENTAL
    assert verdict.witness is None


def test_oracle_finds_decomposition_of_double_link(t83):
    link = vertex_link_vector(t83, POLE_VERTEX)
    verdict = fu.minimality_oracle(t83, link + link)
    assert verdict.status == fu.DECOMPOSABLE
    assert fu.verify_haken_witness(t83, link + link, verdict.witness)


def test_oracle_is_deterministic(t83, h1_haken):
    a = fu.minimality_oracle(t83, h1_haken)
    b = fu.minimality_oracle(t83, h1_haken)
    assert (a.status, a.nodes_explored) == (b.status, b.nodes_explored)


def test_oracle_budget_exhaustion(t83):
    link = vertex_link_vector(t83, POLE_VERTEX)
    verdict = fu.minimality_oracle(t83, link + link, budget=3)
    assert verdict.status == fu.INCONCLUSIVE


def test_q_oracle_decomposes_h0(t83):
    params = LensParams(8, 3)
    verdict = fu.q_minimality_oracle(params, h0(params), triangulation=t83)
    assert verdict.status == fu.DECOMPOSABLE
    assert verdict.witness.entries == t_vector(params, 1).entries
    assert fu.verify_q_witness(t83, h0(params), verdict.witness)


def test_q_oracle_h1_fundamental(t83):
    params = LensParams(8, 3)
    verdict = fu.q_minimality_oracle(params, compressed_vectors(2)[-1], triangulation=t83)
    assert verdict.status == fu.FUNDAMENTAL


def test_q_oracle_deterministic(t83):
    params = LensParams(8, 3)
    a = fu.q_minimality_oracle(params, h0(params), triangulation=t83)
    b = fu.q_minimality_oracle(params, h0(params), triangulation=t83)
    assert (a.status, a.nodes_explored) == (b.status, b.nodes_explored)
    assert a.witness.entries == b.witness.entries


def test_verdict_serialization(t83):
    link = vertex_link_vector(t83, POLE_VERTEX)
    verdict = fu.minimality_oracle(t83, link + link)
    d = verdict.to_json_dict()
    assert d["status"] == "decomposable"
    assert "witness" in d and d["nodes_explored"] > 0
