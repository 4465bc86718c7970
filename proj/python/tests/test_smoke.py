import csv
import io

import pytest

import neurobench


@pytest.fixture(scope="module")
def reg():
    return neurobench.Registry.load()


def test_technology_counts(reg):
    assert len(reg.technologies()) == 56
    assert len(reg.technologies("ONN")) == 7
    assert "TrueNorth" in reg.chips()
    assert "mnist_mlp" in reg.workloads()


def test_element_and_ratios(reg):
    onn = reg.bench_element("OscMOSring")
    ann = reg.bench_element("ANNAnCAnC")
    assert onn["synapse"]["area"] / ann["synapse"]["area"] == pytest.approx(10.0)
    assert onn["neuron"]["area"] / ann["neuron"]["area"] == pytest.approx(30.0)
    sram = reg.bench_element("ANNDCSRAM")
    assert sram["synapse"]["area"] == pytest.approx(2.765e6, rel=1e-3)


def test_workload_and_chip(reg):
    w = reg.bench_workload("mnist_mlp", "ANNDCSRAM")
    assert w["schedule"] == "parallel"
    assert w["delay"] > 0 and w["energy"] > 0
    tm = reg.bench_workload("mnist_mlp", "ANNDCSRAM", "tmux")
    assert tm["area"] <= w["area"]
    assert reg.bench_chip("SpiDCSRAM")["power"] > 0


def test_topsdown(reg):
    tn = reg.topsdown("TrueNorth")
    assert tn["a_syn"] == pytest.approx(0.95 * 430e12 / (4096 * 256 * 256))
    assert tn["e_neu"] / tn["e_syn"] == pytest.approx(0.5 * 256)
    assert reg.backfill("TrueNorth")["fills"] == {}
    assert reg.workload_on_chip("Loihi", "speech_mlp")["inferences_per_s"] > 0
    with pytest.raises(neurobench.IncomputableError):
        reg.topsdown("DYNAPSEL")


def test_errors(reg):
    with pytest.raises(neurobench.UnknownNameError):
        reg.bench_element("ANNNoSuch")
    with pytest.raises(neurobench.NeurobenchError):
        neurobench.Registry.load("/nonexistent")
    with pytest.raises(neurobench.DomainError):
        neurobench.cascade(1, 10)


def test_matrix_csv(reg):
    rows = list(csv.reader(io.StringIO(reg.matrix_csv())))
    assert rows[0][0] == "label"
    assert len(rows) == 57


def test_helpers():
    assert neurobench.cascade(2, 256) == (8, 255)
    front = neurobench.pareto_front([("a", 1, 2), ("b", 2, 1), ("c", 2, 2)])
    assert sorted(p[0] for p in front) == ["a", "b"]
