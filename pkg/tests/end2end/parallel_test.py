import pytest

from fplus_lda import constant
from fplus_lda.models import CountModel
from fplus_lda.nomad import run_parallel
from fplus_lda.trainers import train
from tests.end2end.common_fixtures_test import planted  # noqa: F401
from tests.end2end.common_fixtures_test import planted_config

EPOCHS = 20


@pytest.fixture(scope="module")
def serial_run(planted):
    corpus, _, _ = planted
    return train(corpus, planted_config(corpus, EPOCHS))


def test_one_worker_is_bitwise_serial(planted):
    corpus, _, _ = planted
    config = planted_config(corpus, 3, seed=17)
    z_serial, model_serial, trace_serial = train(corpus, config)
    z_nomad, model_nomad, trace_nomad = run_parallel(corpus, config, 1, 3, constant.ROUTING_RING)
    assert z_nomad == z_serial
    assert model_nomad.same_counts(model_serial)
    assert [r.loglik for r in trace_nomad] == [r.loglik for r in trace_serial]


@pytest.mark.parametrize("p", [2, 4])
def test_parallel_likelihood_parity(planted, serial_run, p):
    corpus, _, _ = planted
    _, _, serial_trace = serial_run
    z, model, trace = run_parallel(corpus, planted_config(corpus, EPOCHS), p, EPOCHS)
    assert len(trace) == EPOCHS
    recount = CountModel.from_assignments(corpus, z, model.hyper)
    assert recount.same_counts(model)
    model.check_invariants()
    serial_final = serial_trace.final_loglik
    assert abs(trace.final_loglik - serial_final) <= 0.01 * abs(serial_final)


def test_random_routing_over_the_wire_keeps_counts_exact(planted):
    corpus, _, _ = planted
    z, model, trace = run_parallel(
        corpus, planted_config(corpus, 2), 3, 2, constant.ROUTING_UNIFORM, wire=True,
    )
    assert CountModel.from_assignments(corpus, z, model.hyper).same_counts(model)
    assert trace.final_loglik > trace.initial_loglik
