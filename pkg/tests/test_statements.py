import json
import math

import pytest

from qcong.congruence import Status
from qcong.cyclotomic import CycloModulus
from qcong.statements import (
    REGISTRY,
    HypothesisViolation,
    IntCongruence,
    QCongruence,
    RationalIdentity,
    VerdictRecord,
    _fk,
    evaluate_built,
    m_star,
    pan_statements,
    run_cell,
    verify,
    verify_corollary,
)

ALL_TAGS = [
    "t1", "t2", "cor1a", "cor1b", "pan1", "pan2", "guozeng_01", "guguo",
    "gsz_03", "lemma_a1", "lemma_a2", "step_a3", "step_a4", "step_a5",
    "step_a6", "step_a7", "step_a8", "step_a9_0", "step_a9", "step_a10",
    "step_a11_a12", "step_b1", "step_b2", "step_b3", "step_b4", "step_b5",
    "step_b6", "step_b7", "identity_t0", "cong_t0a",
]


def test_registry_tags():
    assert sorted(REGISTRY) == sorted(ALL_TAGS)
    assert len(REGISTRY) == 30


def test_registry_variant_consistency():
    for stmt in REGISTRY.values():
        assert stmt.canonical_variant in stmt.variants
        assert "as_printed" in stmt.variants


def test_default_grids_satisfy_hypotheses():
    for stmt in REGISTRY.values():
        for params in stmt.default_grid():
            stmt.hypotheses(params)  # must not raise
            assert set(params) == set(stmt.params)


def _status(tag, params, variant=None):
    stmt = REGISTRY[tag]
    if variant is None:
        variant = stmt.canonical_variant
    return run_cell(tag, variant, params).verdict.status


def test_theorem_cells_hold():
    assert _status("t1", {"n": 3, "alpha": 2}) is Status.HOLDS
    assert _status("t1", {"n": 7, "alpha": 6}) is Status.HOLDS
    assert _status("t2", {"n": 5, "alpha": 4}) is Status.HOLDS


def test_corollary_variants():
    # printed constant (2^p-1)/p misses the usual Fermat quotient by 2^p
    assert _status("cor1a", {"p": 3, "alpha": 2}, "as_printed") is Status.FAILS
    assert (
        _status("cor1a", {"p": 3, "alpha": 2}, "standard_fermat_quotient")
        is Status.HOLDS
    )
    assert _status("cor1b", {"p": 5, "alpha": 4}, "as_printed") is Status.FAILS
    assert (
        _status("cor1b", {"p": 5, "alpha": 4}, "standard_fermat_quotient")
        is Status.HOLDS
    )


def test_verify_corollary_accepts_corrected_alias():
    va, vb = verify_corollary(5, 2, "corrected")
    assert va.status is Status.HOLDS and vb.status is Status.HOLDS
    va, vb = verify_corollary(5, 2, "as_printed")
    assert va.status is Status.FAILS and vb.status is Status.FAILS


def test_pan_variants():
    assert _status("pan1", {"p": 5}) is Status.HOLDS
    assert _status("pan2", {"p": 5}, "as_printed") is Status.FAILS
    assert _status("pan2", {"p": 5}, "corrected") is Status.HOLDS


def test_pan_statements_returns_triples():
    (l1, r1, m1), (l2, r2, m2) = pan_statements(7)
    assert m1 == CycloModulus.phi(7, 2) == m2
    assert l1 != r1  # congruent mod Phi_7^2 but not equal


def test_step_a4_domain_boundary():
    # holds strictly below k = n - alpha, fails with margin 1 above it
    assert _status("step_a4", {"n": 7, "alpha": 2, "k": 3}) is Status.HOLDS
    assert _status("step_a4", {"n": 7, "alpha": 2, "k": 0}) is Status.HOLDS
    rec = run_cell("step_a4", "as_printed", {"n": 7, "alpha": 2, "k": 6})
    assert rec.verdict.status is Status.FAILS
    assert rec.verdict.factors[0].margin == 1
    rec = run_cell("step_a4", "as_printed", {"n": 9, "alpha": 4, "k": 7})
    assert rec.verdict.status is Status.FAILS


def test_step_a7_variants():
    assert _status("step_a7", {"n": 5, "alpha": 2}, "as_printed") is Status.FAILS
    assert _status("step_a7", {"n": 5, "alpha": 2}, "corrected") is Status.HOLDS
    assert _status("step_a7", {"n": 9, "alpha": 6}, "corrected") is Status.HOLDS


def test_step_b1_variants():
    assert _status("step_b1", {"n": 5, "alpha": 2}, "as_printed") is Status.FAILS
    assert _status("step_b1", {"n": 5, "alpha": 2}, "corrected") is Status.HOLDS


def test_step_b6_printed_holds_only_on_diagonal():
    # the printed bracket agrees with the corrected one iff alpha=(n+1)/2
    assert _status("step_b6", {"n": 7, "alpha": 4}, "as_printed") is Status.HOLDS
    assert _status("step_b6", {"n": 7, "alpha": 2}, "as_printed") is Status.FAILS
    assert _status("step_b6", {"n": 5, "alpha": 2}, "as_printed") is Status.FAILS
    for params in ({"n": 7, "alpha": 2}, {"n": 7, "alpha": 4},
                   {"n": 9, "alpha": 6}):
        assert _status("step_b6", params, "corrected") is Status.HOLDS


def test_guozeng_modulus_one_is_trivial():
    rec = run_cell("guozeng_01", "as_printed", {"n": 1})
    assert rec.verdict.status is Status.HOLDS
    assert "trivial" in rec.verdict.note


def test_identity_t0_false_at_m_zero():
    # sum_{k<=n} (-1)^k k^0 is -1 or 0, but the Euler-polynomial side
    # evaluates to 0 or 1; the identity genuinely needs m >= 1
    assert _status("identity_t0", {"m": 0, "n": 1}) is Status.FAILS
    assert _status("identity_t0", {"m": 0, "n": 2}) is Status.FAILS
    assert _status("identity_t0", {"m": 3, "n": 17}) is Status.HOLDS
    grid = REGISTRY["identity_t0"].default_grid()
    assert all(c["m"] >= 1 for c in grid)


def test_fk_zero_term_is_single_q_binomial():
    from qcong.qcombinatorics import q_binomial

    assert _fk(7, 4, 0) == q_binomial(10, 6)


def test_m_star_examples_and_q1_bridge():
    assert m_star(1, 2) == 5
    assert m_star(0, 3) == 1
    # q=1 specialization of the t1 summand matches the integer sum
    for n, alpha in ((3, 2), (5, 2), (5, 4)):
        total = sum(_fk(n, alpha, k)(1) for k in range(n))
        assert total == m_star(n - 1, alpha)
    with pytest.raises(ValueError):
        m_star(2, 0)


def test_run_cell_hypothesis_violation_is_ill_posed():
    rec = run_cell("t1", "as_printed", {"n": 4, "alpha": 2})
    assert rec.verdict.status is Status.ILL_POSED
    assert "odd" in rec.hypothesis_error
    rec = run_cell("cong_t0a", "as_printed", {"p": 9, "alpha": 2})
    assert rec.verdict.status is Status.ILL_POSED


def test_run_cell_rejects_unknown_variant():
    with pytest.raises(ValueError):
        run_cell("t1", "corrected", {"n": 3, "alpha": 2})


def test_verify_deterministic_and_parallel_agree():
    grid = [{"t": t, "n": n} for t in (0, 1, 2) for n in (2, 3)]
    seq = verify("step_a9_0", grid=grid, jobs=1)
    par = verify("step_a9_0", grid=list(reversed(grid)), jobs=2)
    strip = lambda rs: [(r.statement, r.variant, r.params, r.verdict) for r in rs]
    assert strip(seq) == strip(par)
    assert [r.params for r in seq] == sorted(r.params for r in seq)


def test_verdict_record_json_round_trip():
    records = verify("pan2", variant="as_printed")
    payload = json.dumps([r.to_dict() for r in records])
    parsed = [VerdictRecord.from_dict(d) for d in json.loads(payload)]
    assert parsed == records


def test_builders_return_expected_kinds():
    kinds = {
        "t1": QCongruence,
        "guozeng_01": IntCongruence,
        "identity_t0": RationalIdentity,
        "cong_t0a": IntCongruence,
    }
    for tag, kind in kinds.items():
        stmt = REGISTRY[tag]
        built = stmt.build(stmt.default_grid()[0], stmt.canonical_variant)
        assert isinstance(built, kind)


def test_evaluate_built_rejects_foreign_types():
    with pytest.raises(TypeError):
        evaluate_built(object())


def test_int_congruence_ill_posed_when_denominator_shares_factor():
    from fractions import Fraction

    built = IntCongruence(Fraction(1, 3), Fraction(0), 9)
    assert evaluate_built(built).status is Status.ILL_POSED
