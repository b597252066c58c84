import math

import numpy as np
import pytest

from planehomeo import (
    Cell2,
    CellBump,
    Compose,
    Conjugation,
    ConvergenceError,
    DomainError,
    FixedPointFree,
    Identity,
    Rotation,
    Scaling,
    Translation,
    avoid_fixed_points_on_grid,
    certify_fixed_point_free,
    circle_net,
    conjugacy_witness,
    dist,
    lemma3_experiment,
    lemma4_experiment,
    min_displacement,
    nowhere_dense_escape,
    singleton,
    square_grid,
)
from planehomeo.genericity import FAMILIES, PAIRS, Family, nonincreasing
from planehomeo.homeo import Disk, evaluate

GRID = square_grid(-5, 5, 100)


@pytest.mark.parametrize("eps", [1e-2, 1e-3])
@pytest.mark.parametrize(
    "h",
    [Identity(), Conjugation(), Rotation(math.pi / 2), CellBump(Cell2.standard(), 0.1)],
    ids=["id", "conj", "rot", "bump"],
)
def test_avoid_fixed_points(h, eps, small_cfg):
    rep = avoid_fixed_points_on_grid(h, GRID, eps, small_cfg)
    assert 0 < abs(rep.translation)
    assert rep.dist_achieved < eps
    assert rep.grid_min_displacement > 0
    m, _ = min_displacement(rep.perturbed, GRID)
    assert m == rep.grid_min_displacement
    bad = GRID.points - evaluate(h, GRID.points)
    assert np.abs(bad - rep.translation).min() >= abs(rep.translation) / 2


def test_avoid_fixed_points_rotation_brute(small_cfg):
    h = Rotation(math.pi / 2)
    K = square_grid(-1, 1, 11)
    rep = avoid_fixed_points_on_grid(h, K, 1e-2, small_cfg)
    for c in K.points.tolist():
        assert evaluate(rep.perturbed, c) != c


def test_conjugation_perturbation_globally_free(small_cfg):
    rep = avoid_fixed_points_on_grid(Conjugation(), GRID, 1e-3, small_cfg)
    # conj(z) + a = z forces a = 2i Im z, impossible once Re a != 0
    assert rep.translation.real != 0
    cert = certify_fixed_point_free(rep.perturbed, Disk(0, 5), 0.1)
    assert isinstance(cert.verdict, FixedPointFree)


def test_avoid_rejects_bad_eps():
    with pytest.raises(DomainError):
        avoid_fixed_points_on_grid(Identity(), GRID, 0)


def test_escape_identity(cell, small_cfg):
    rep = nowhere_dense_escape(Identity(), cell, 1e-2, small_cfg)
    assert rep.dist_to_original < 1e-2
    z = rep.escape_witness
    assert cell.rho < abs(z) < cell.rho + 2 * rep.delta
    w = evaluate(rep.composite, z)
    assert abs(w) > abs(z)
    assert abs(w / abs(w) - z / abs(z)) < 1e-12
    assert rep.witness_displacement > 0


def test_escape_delta_monotone(cell, small_cfg):
    deltas = [nowhere_dense_escape(Identity(), cell, e, small_cfg).delta for e in (1e-2, 1e-3, 1e-4)]
    assert deltas[0] > deltas[1] > deltas[2]


def test_escape_with_supported_h(cell, small_cfg):
    inner = CellBump(Cell2(Identity(), 0, 0.15, 0.05), 0.05)
    rep = nowhere_dense_escape(inner, cell, 1e-2, small_cfg)
    assert not cell.in_cell(rep.escape_witness, cell.rho)


def test_escape_rejects_unsupported(cell, small_cfg):
    with pytest.raises(DomainError):
        nowhere_dense_escape(Translation(0.1), cell, 1e-2, small_cfg)


def test_bump_decays_linearly(cell, small_cfg):
    for delta in (0.08, 0.04, 0.02, 0.01):
        assert dist(CellBump(cell, delta), Identity(), small_cfg) <= 2 * delta + 1e-12


def test_composite_equals_h_outside(cell):
    h = Scaling(1.0)
    comp = Compose(CellBump(cell, 0.05), h)
    z = circle_net(0, 0.45, 200).points
    assert np.array_equal(evaluate(comp, z), evaluate(h, z))


def test_lemma3_examples(small_cfg):
    rows = lemma3_experiment(FAMILIES["translate"], singleton(0), 20, small_cfg)
    assert all(abs(r.hausdorff - 1 / r.n) <= 1e-12 for r in rows)
    rows = lemma3_experiment(FAMILIES["translate-scale"], circle_net(), 20, small_cfg)
    assert all(r.hausdorff <= 1 / r.n + 1e-12 for r in rows)
    assert nonincreasing([r.dist for r in rows]) and nonincreasing([r.hausdorff for r in rows])
    rows = lemma3_experiment(FAMILIES["constant"], circle_net(), 5, small_cfg)
    assert all(r.dist == 0 and r.hausdorff == 0 for r in rows)


def test_lemma4_examples(small_cfg):
    rows = lemma4_experiment(*PAIRS["translations"], 20, small_cfg)
    for r in rows:
        assert r.dist_composite <= 2 * math.sqrt(2) / r.n + 1e-12
    assert nonincreasing([r.dist_composite for r in rows])
    rows = lemma4_experiment(*PAIRS["constant"], 5, small_cfg)
    assert all(r.dist_g == r.dist_h == r.dist_composite == 0 for r in rows)


def test_conjugacy_witness(small_cfg):
    rep = avoid_fixed_points_on_grid(Conjugation(), GRID, 1e-3, small_cfg)
    for phi in (Translation(1), Scaling(2)):
        m, _ = conjugacy_witness(rep.perturbed, phi, GRID)
        assert m > 0


def test_nonincreasing():
    assert nonincreasing([3, 2, 2, 1])
    assert nonincreasing([1, 1 + 1e-10])
    assert not nonincreasing([1, 1.1])


def test_family_type():
    f = Family("t", lambda n: Translation(1 / n), Identity())
    assert f.member(4) == Translation(0.25)


def test_convergence_cap(small_cfg):
    with pytest.raises(ConvergenceError):
        avoid_fixed_points_on_grid(Identity(), GRID, 1e-3, small_cfg, max_halvings=1)
