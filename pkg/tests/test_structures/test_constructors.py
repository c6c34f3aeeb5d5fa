import numpy as np
import pytest

from polygrpd.polyspace import PolyForm
from polygrpd.structures import (
    Chart,
    FoliationVariant,
    LieAlgebraData,
    TrivialVariant,
    build,
    check_axioms,
    make_constant,
    make_covelocity,
    make_foliation_family,
    make_linear_direct_sum,
    make_linear_product,
    make_opposite,
    make_polysymplectic,
    make_product,
    make_r3_bisymplectic,
    make_symplectic_plane,
    make_trivial,
    standard_symplectic,
)
from polygrpd.structures.registry import algebra_from_params
from polygrpd.utils import exceptions


class TestTrivial:

    @pytest.mark.parametrize('variant', [TrivialVariant.S1, TrivialVariant.S2, TrivialVariant.S3])
    def test_variants_pass(self, variant, rng):
        structure = make_trivial(variant, Chart.cube(2), 2)
        assert check_axioms(structure, 5, rng).passed

    def test_sizes(self):
        chart = Chart.cube(3)
        assert make_trivial(TrivialVariant.S1, chart, 2).size == 6
        assert make_trivial(TrivialVariant.S2, chart, 2).size == 2
        assert make_trivial(TrivialVariant.S3, chart, 2).size == 3
        assert make_trivial(TrivialVariant.S4, chart, 2).size == 3

    def test_first_slot_only(self, rng):
        report = check_axioms(make_trivial(TrivialVariant.S4, Chart.cube(2), 3), 5, rng)
        assert not report.passed
        assert report['empty_slots'].passed is False
        assert report['empty_slots'].detail['slots'] == [1, 2]
        assert report['cond_ii'].passed

    def test_dropped_frame_element(self, rng):
        diagonal = make_trivial(TrivialVariant.S3, Chart.cube(2), 2)
        report = check_axioms(diagonal.restrict_frame([0]), 5, rng)
        assert report['cond_ii'].passed is False
        assert report['cond_ii'].detail['polar_dim'] == 1

    def test_vanishing_forms(self):
        with pytest.raises(ValueError):
            make_trivial(TrivialVariant.S2, Chart.cube(2), 2, forms=np.array([[1.0, 0.0], [0.0, 0.0]]))

    def test_unknown_variant(self):
        with pytest.raises(ValueError):
            make_trivial('S9', Chart.cube(2), 2)


class TestPolysymplectic:

    def test_covelocity(self, rng):
        structure = make_covelocity(1, 2)
        assert (structure.dim, structure.order, structure.size) == (3, 2, 3)
        assert check_axioms(structure, 5, rng).passed

    def test_r3_bisymplectic(self, rng):
        assert check_axioms(make_r3_bisymplectic(), 5, rng).passed

    def test_degenerate(self):
        with pytest.raises(exceptions.DegenerateForm):
            make_polysymplectic(PolyForm.from_wedges(3, [[(0, 1, 1.0)]]))

    def test_not_closed(self):
        def form(x):
            components = np.zeros((2, 3, 3))
            components[0, 0, 1], components[0, 1, 0] = 1.0 + x[2], -1.0 - x[2]
            components[1, 1, 2], components[1, 2, 1] = 1.0, -1.0
            return components

        with pytest.raises(exceptions.NotClosed) as error:
            make_polysymplectic(form, Chart.cube(3, -0.5, 0.5))
        assert error.value.residual == pytest.approx(1.0, rel=1e-4)

    def test_point_dependent_form_needs_chart(self):
        with pytest.raises(ValueError):
            make_polysymplectic(lambda x: np.zeros((1, 2, 2)))


class TestCombinations:

    def test_product(self, rng):
        plane = make_symplectic_plane()
        product = make_product([plane, plane])
        assert (product.dim, product.order, product.size) == (4, 2, 4)
        assert product.factors == (plane, plane)
        assert check_axioms(product, 5, rng).passed

    def test_empty_product(self):
        with pytest.raises(ValueError):
            make_product([])

    def test_opposite(self, rng):
        opposite = make_opposite(make_symplectic_plane())
        assert opposite.anchor_at(np.zeros(2)) == pytest.approx(-np.eye(2))
        assert check_axioms(opposite, 5, rng).passed

    def test_constant(self, rng):
        structure = make_constant(1, standard_symplectic(2, 2))
        assert (structure.dim, structure.order, structure.size) == (3, 2, 4)
        assert check_axioms(structure, 5, rng).passed

    def test_standard_symplectic_needs_even_dimension(self):
        with pytest.raises(ValueError):
            standard_symplectic(3, 1)

    @pytest.mark.parametrize('variant, size', [
        (FoliationVariant.S1, 4),
        (FoliationVariant.S2, 3),
        (FoliationVariant.S3, 3),
    ])
    def test_foliation_family(self, variant, size, rng):
        structure = make_foliation_family(standard_symplectic(2, 2), variant)
        assert structure.size == size
        assert structure.dim == 3
        assert check_axioms(structure, 5, rng).passed


class TestFullSuite:

    @pytest.mark.slow
    @pytest.mark.parametrize('make', [
        lambda: make_covelocity(1, 2),
        lambda: make_covelocity(2, 3),
        lambda: make_trivial(TrivialVariant.S1, Chart.cube(2), 2),
        lambda: make_trivial(TrivialVariant.S2, Chart.cube(2), 2),
        lambda: make_trivial(TrivialVariant.S3, Chart.cube(2), 2),
        lambda: make_constant(1, standard_symplectic(2, 2)),
        lambda: make_product([make_symplectic_plane(), make_symplectic_plane()]),
        lambda: make_r3_bisymplectic(),
        lambda: make_linear_direct_sum(LieAlgebraData.so3(), 2),
        lambda: make_linear_direct_sum(LieAlgebraData.aff1(), 2),
        lambda: make_linear_product(LieAlgebraData.aff1(), 2),
        lambda: make_linear_product(LieAlgebraData.so3(), 2),
        lambda: make_foliation_family(standard_symplectic(2, 2), FoliationVariant.S1),
    ], ids=[
        'covelocity-1-2', 'covelocity-2-3', 'trivial-s1', 'trivial-s2', 'trivial-s3', 'constant',
        'plane-x-plane', 'r3-bisymplectic', 'direct-sum-so3', 'direct-sum-aff1', 'product-aff1',
        'product-so3', 'foliation-s1',
    ])
    def test_hundred_points(self, make, rng):
        report = check_axioms(make(), 100, rng)
        assert report.passed
        assert report.samples == 100
        for check in report.checks:
            if check.worst_residual is not None and check.name != 'cond_ii':
                assert check.worst_residual < 1e-6, check.name


class TestRegistry:

    def test_build(self):
        structure = build('linear-direct-sum', {'algebra': 'so3', 'r': 2})
        assert (structure.dim, structure.order, structure.size) == (6, 2, 3)

    def test_build_product(self):
        structure = build('product', {'factors': [
            {'constructor': 'symplectic-plane'},
            {'constructor': 'linear-direct-sum', 'params': {'algebra': 'aff1', 'r': 1}},
        ]})
        assert (structure.dim, structure.order) == (4, 2)

    def test_box(self):
        structure = build('symplectic-plane', {'box': [[0.0, 2.0], [-1.0, 1.0]]})
        assert structure.chart.center == pytest.approx([1.0, 0.0])
        with pytest.raises(exceptions.ConfigError):
            build('symplectic-plane', {'box': [[0.0, 2.0]]})

    @pytest.mark.parametrize('name, params', [
        ('unknown', {}),
        ('product', {}),
        ('trivial', {'variant': 'S9'}),
        ('linear-product', {'algebra': 'sl2'}),
    ])
    def test_bad_parameters(self, name, params):
        with pytest.raises(exceptions.ConfigError):
            build(name, params)

    def test_algebras(self):
        assert algebra_from_params({}).name == 'so3'
        assert algebra_from_params({'algebra': 'abelian', 'd': 3}).dim == 3
