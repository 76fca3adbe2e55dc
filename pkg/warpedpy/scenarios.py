# -*- coding: utf-8 -*-
# -----------------------------------------------------------------------------
# Copyright 2026 by WarpedPy Authors, see AUTHORS for more details.
#
# Distributed under the terms of the BSD 3-Clause license.
#
# The full license is in the file LICENCE, distributed with this software.
# -----------------------------------------------------------------------------
"""Catalog of built-in verification scenarios.

A scenario is a recipe building the geometric objects to verify, a box in
which points are sampled and the list of check suites to run on them.

"""
import logging

import numpy as np
from atom.api import Atom, Bool, Callable, Float, List, Str, Typed

from .errors import ConfigurationError, UnknownScenarioError
from .geometry import (ChartManifold, ConformalWarpedSubmersion, DiffEngine,
                       ScalarField,
                       SmoothMap, SubmersionContext, WarpedProduct,
                       build_product_submersion, build_warped_product,
                       check_product_submersion, check_warp, projection)

logger = logging.getLogger(__name__)

#: Largest number of seeded points at which a scenario is checked while it
#: is built.
BUILD_SAMPLES = 4

#: Every identity verified by the package and the checks exercising it.
COVERAGE = {
    'warped metric': ['metric-cross-blocks', 'metric-restrictions'],
    'warped product connection': ['lemma-item1', 'lemma-item2',
                                  'lemma-item3', 'lemma-item4'],
    'leaves and fibres of warped products': ['leaf-totally-geodesic',
                                             'fiber-totally-umbilical',
                                             'fiber-mean-curvature'],
    'vertical/horizontal decomposition': ['splitting-sum',
                                          'splitting-orthogonal',
                                          'splitting-kernel'],
    'conformal submersion': ['conformality', 'dilation-oracle'],
    "O'Neill tensors": ['oneill-conformal-a', 'oneill-extension',
                        'oneill-antisymmetry', 'oneill-umbilic'],
    'product of conformal submersions': ['product-structure',
                                         'compatibility-ratio',
                                         'compatibility-equivalence',
                                         'compatibility-dilation'],
    'A on the first factor': ['theorem-item1',
                              'theorem-item1-ambient-gradient'],
    'A on the second factor': ['theorem-item2-adjudication',
                               'theorem-item2-discrimination'],
    'Riemannian warped product submersion': ['riemannian-dilation',
                                             'riemannian-horizontal-lengths'],
    'conformal rescaling': ['rescaling-dilation', 'rescaling-perturbation',
                            'rescaling-uniqueness'],
    'fibre geometry': ['fiber-H1', 'fiber-H2', 'fiber-mixed'],
}


class MapCase(Atom):
    """A map of a scenario and what is known about it.

    """
    #: Identifier used in the check ids.
    name = Str()

    #: Splitting machinery of the map.
    context = Typed(SubmersionContext)

    #: Analytic dilation, if known.
    dilation = Typed(ScalarField)

    #: Coordinates of the map source for a sampled point of the scenario.
    restrict = Callable(lambda x: x)

    #: Whether the map is expected to be conformal.
    conformal = Bool(True)

    #: Whether the map is a Riemannian submersion.
    riemannian = Bool()

    #: Whether the fibres of the map are totally umbilical.
    umbilic_fibers = Bool()

    @property
    def analytic(self):
        return self.context.map.jacobian_fn is not None


class ScenarioSetup(Atom):
    """Objects built by a scenario.

    """
    #: Manifold in which the points are sampled.
    manifold = Typed(ChartManifold)

    #: Warped product, for the scenarios that have one.
    warped = Typed(WarpedProduct)

    #: Conformal warped product submersion, for the scenarios that have one.
    cws = Typed(ConformalWarpedSubmersion)

    #: Maps whose splitting and O'Neill tensors are checked.
    maps = List(Typed(MapCase))

    def check(self, samples):
        """Check the construction invariants at sampled points.

        Warps and dilations must be positive, every map must be a submersion
        and the product map must split as the product of its factors.

        """
        if self.cws is not None:
            check_product_submersion(self.cws, samples)
        elif self.warped is not None:
            W = self.warped
            check_warp(W.first, W.warp, [W.split(p)[0] for p in samples])
        for case in self.maps:
            for p in samples:
                case.context.split_at(case.restrict(p))


class Scenario(Atom):
    """Entry of the catalog.

    """
    #: Identifier used on the command line.
    id = Str()

    #: One line description.
    description = Str()

    #: Callable taking a VerificationConfig and returning a ScenarioSetup.
    builder = Callable()

    #: Lower corner of the sample box.
    lower = List(Float())

    #: Upper corner of the sample box.
    upper = List(Float())

    #: Ids of the check suites to run.
    suites = List(Str())

    #: Checks expected to fail on (almost) every sample.
    expected_fail = List(Str())

    #: Variants of the second factor identity expected to hold.
    expected_variants = List(Str())

    #: Whether the two variants of the second factor identity must differ.
    discriminating = Bool()

    def box(self, config):
        """Sample box, with the overrides of the configuration applied.

        """
        params = config.scenario_params.get(self.id, {})
        lower = np.array(params.get('lower', self.lower), dtype=float)
        upper = np.array(params.get('upper', self.upper), dtype=float)
        return lower, upper

    def n_samples(self, config):
        return int(config.scenario_params.get(self.id, {}).get(
            'samples', config.samples))

    def build(self, config):
        """Build the objects, check the sample box against the domain and
        the construction invariants on a seeded sample of the box.

        """
        setup = self.builder(config)
        lower, upper = self.box(config)
        M = setup.manifold
        if (lower.shape != (M.dim,) or upper.shape != (M.dim,) or
                np.any(lower < M.lower) or np.any(upper > M.upper)):
            raise ConfigurationError(
                f'Sample box {lower.tolist()} - {upper.tolist()} of '
                f'{self.id} does not fit in the domain of {M.name}')
        n = min(self.n_samples(config), BUILD_SAMPLES)
        setup.check(sample_points((lower, upper), n, config.seed))
        logger.debug('Built scenario %s', self.id)
        return setup


def sample_points(box, n, seed, margin=0.0):
    """Draw n points uniformly in the box, at least margin from its faces.

    """
    lower, upper = (np.asarray(b, dtype=float) for b in box)
    if n < 1:
        raise ConfigurationError(f'At least one sample is needed, not {n}')
    if (lower.shape != upper.shape or
            not np.all(np.isfinite(lower) & np.isfinite(upper)) or
            np.any(upper - lower <= 2 * margin)):
        raise ConfigurationError(f'Degenerate sample box {lower.tolist()} - '
                                 f'{upper.tolist()} (margin {margin})')
    rng = np.random.default_rng(seed)
    return rng.uniform(lower + margin, upper - margin, size=(n, len(lower)))


def list_scenarios(pattern=None):
    """The catalog, in its documented order.

    A non empty pattern keeps the scenarios whose id starts with it or which
    run the check suite of that name.

    """
    if not pattern:
        return list(_CATALOG)
    return [s for s in _CATALOG
            if s.id.startswith(pattern) or pattern in s.suites]


def get_scenario(scenario_id):
    for scenario in _CATALOG:
        if scenario.id == scenario_id:
            return scenario
    raise UnknownScenarioError(scenario_id, [s.id for s in _CATALOG])


# --- Private API -------------------------------------------------------------

def _euclidean(config, dim, lower=None, upper=None, name=''):
    M = ChartManifold.euclidean(dim, lower, upper, name)
    M.spd_floor = config.spd_floor
    return M


def _constant(value, dim, name=''):
    zeros = np.zeros(dim)
    return ScalarField(evaluator=lambda x: value, partials=lambda x: zeros,
                       name=name or repr(value))


def _linear_map(config, source, target, matrix, name):
    matrix = np.array(matrix, dtype=float)
    return SmoothMap(source=source, target=target,
                     mapping=lambda x: matrix @ x,
                     jacobian_fn=lambda x: matrix,
                     engine=config.make_engine(), name=name)


def _context(config, smooth_map):
    return SubmersionContext(map=smooth_map, rank_tol=config.rank_tol,
                             conf_tol=config.conf_tol)


def _r4_map(config, source, target, analytic=True):
    """(x1, x2, x3, x4) -> (e^x3 sin x4, e^x3 cos x4), conformal with
    dilation e^x3.

    """
    def mapping(x):
        e = np.exp(x[2])
        return np.array([e * np.sin(x[3]), e * np.cos(x[3])])

    def jacobian(x):
        e, s, c = np.exp(x[2]), np.sin(x[3]), np.cos(x[3])
        return np.array([[0.0, 0.0, e * s, e * c],
                         [0.0, 0.0, e * c, -e * s]])

    if analytic:
        return SmoothMap(source=source, target=target, mapping=mapping,
                         jacobian_fn=jacobian, engine=config.make_engine(),
                         name='r4-map')
    # The Jacobian gets differentiated again inside the O'Neill tensors, a
    # smooth high order estimate keeps the rounding noise out of that second
    # derivative.
    engine = DiffEngine(scheme='central4', step=1e-3,
                        fd_check_tol=config.fd_check_tol)
    return SmoothMap(source=source, target=target, mapping=mapping,
                     engine=engine, name='r4-map')


def _r4_dilation():
    return ScalarField(evaluator=lambda x: np.exp(x[2]),
                       partials=lambda x: np.array([0, 0, np.exp(x[2]), 0]),
                       name='exp(x3)')


def _build_r4_example(analytic):
    def builder(config):
        M = _euclidean(config, 4, name='R4')
        F = _r4_map(config, M, _euclidean(config, 2, name='R2'), analytic)
        # the fibres are affine planes, totally geodesic
        case = MapCase(name='r4-map', context=_context(config, F),
                       dilation=_r4_dilation(), umbilic_fibers=True)
        return ScenarioSetup(manifold=M, maps=[case])
    return builder


def _warped_setup(config, W):
    """Setup of a bare warped product, with both projections.

    """
    W.ambient.spd_floor = config.spd_floor
    m1 = W.first.dim
    warp = W.warp
    inverse = ScalarField(evaluator=lambda x: 1.0 / warp(x[:m1]),
                          name=f'1/{warp.name}')
    pi1 = MapCase(name='pi1', context=_context(config, projection(W, 'first')),
                  dilation=_constant(1.0, W.ambient.dim), riemannian=True,
                  umbilic_fibers=True)
    # the fibres of pi2 are the leaves, totally geodesic
    pi2 = MapCase(name='pi2',
                  context=_context(config, projection(W, 'second')),
                  dilation=inverse, umbilic_fibers=True)
    return ScenarioSetup(manifold=W.ambient, warped=W, maps=[pi1, pi2])


def _build_warped_line(config):
    """R x_{e^t} R.

    """
    warp = ScalarField(evaluator=lambda x: np.exp(x[0]),
                       partials=lambda x: np.exp(x),
                       name='exp(t)')
    W = build_warped_product(_euclidean(config, 1, name='R_t'),
                             _euclidean(config, 1, name='R_x'), warp,
                             name='R x_exp R')
    return _warped_setup(config, W)


def _build_sphere(config):
    """Round sphere chart (0, pi) x_{sin} (0, 2 pi).

    """
    warp = ScalarField(evaluator=lambda x: np.sin(x[0]),
                       partials=lambda x: np.cos(x),
                       name='sin(theta)')
    W = build_warped_product(
        _euclidean(config, 1, [0.0], [np.pi], name='theta'),
        _euclidean(config, 1, [0.0], [2 * np.pi], name='phi'), warp,
        name='S2')
    return _warped_setup(config, W)


def _cws_setup(config, cws, product=True, riemannian=False):
    """Setup of a conformal warped product submersion.

    """
    W = cws.source
    W.ambient.spd_floor = config.spd_floor
    m1 = W.first.dim
    # the fibres of every factor map of the catalog are totally geodesic or
    # one dimensional
    maps = [
        MapCase(name='phi1', context=cws.phi1, dilation=cws.lambda1,
                restrict=lambda x: x[:m1], riemannian=riemannian,
                umbilic_fibers=True),
        MapCase(name='phi2', context=cws.phi2, dilation=cws.lambda2,
                restrict=lambda x: x[m1:], riemannian=riemannian,
                umbilic_fibers=True),
    ]
    if product:
        maps.append(MapCase(name='product', context=cws.context,
                            dilation=cws.lifted_lambda,
                            riemannian=riemannian))
    return ScenarioSetup(manifold=W.ambient, warped=W, cws=cws, maps=maps)


def _doubling_factors(config):
    """(x, y) -> 2x and (u, v) -> 2u, both of dilation 2.

    """
    R2, R = _euclidean(config, 2, name='R2'), _euclidean(config, 1, name='R')
    phi1 = _linear_map(config, R2, R, [[2.0, 0.0]], 'phi1')
    phi2 = _linear_map(config, _euclidean(config, 2, name='R2'),
                       _euclidean(config, 1, name='R'), [[2.0, 0.0]], 'phi2')
    return phi1, phi2


def _exp2x():
    return ScalarField(evaluator=lambda x: np.exp(2 * x[0]),
                       partials=lambda x: np.array([2 * np.exp(2 * x[0]),
                                                    0.0]),
                       name='exp(2x)')


def _build_constant_dilation(config):
    phi1, phi2 = _doubling_factors(config)
    rho = ScalarField(evaluator=lambda s: np.exp(s[0]),
                      partials=lambda s: np.exp(s), name='exp(s)')
    cws = build_product_submersion(
        phi1, _constant(2.0, 2), phi2, _constant(2.0, 2), _exp2x(), rho,
        rank_tol=config.rank_tol, conf_tol=config.conf_tol,
        name='cws-constant-dilation')
    return _cws_setup(config, cws)


def _build_incompatible(config):
    phi1, phi2 = _doubling_factors(config)
    cws = build_product_submersion(
        phi1, _constant(2.0, 2), phi2, _constant(2.0, 2), _exp2x(),
        _constant(1.0, 1), rank_tol=config.rank_tol,
        conf_tol=config.conf_tol, name='cws-incompatible')
    return _cws_setup(config, cws, product=False)


def _build_riemannian(config):
    R2, R = _euclidean(config, 2, name='R2'), _euclidean(config, 1, name='R')
    phi1 = _linear_map(config, R2, R, [[1.0, 0.0]], 'phi1')
    phi2 = _linear_map(config, _euclidean(config, 2, name='R2'),
                       _euclidean(config, 1, name='R'), [[1.0, 0.0]], 'phi2')
    f = ScalarField(evaluator=lambda x: np.exp(x[0]),
                    partials=lambda x: np.array([np.exp(x[0]), 0.0]),
                    name='exp(x)')
    rho = ScalarField(evaluator=lambda s: np.exp(s[0]),
                      partials=lambda s: np.exp(s), name='exp(s)')
    cws = build_product_submersion(
        phi1, _constant(1.0, 2), phi2, _constant(1.0, 2), f, rho,
        rank_tol=config.rank_tol, conf_tol=config.conf_tol,
        name='cws-riemannian')
    return _cws_setup(config, cws, riemannian=True)


def _build_varying_dilation(config):
    """phi1(x, y) = x + y^2 / 2 whose dilation sqrt(1 + y^2) varies along
    its fibres, f = 1 / sqrt(1 + y^2) and phi2(u, v) = u.

    """
    R2, R = _euclidean(config, 2, name='R2'), _euclidean(config, 1, name='R')
    phi1 = SmoothMap(source=R2, target=R,
                     mapping=lambda x: np.array([x[0] + 0.5 * x[1]**2]),
                     jacobian_fn=lambda x: np.array([[1.0, x[1]]]),
                     engine=config.make_engine(), name='phi1')
    phi2 = _linear_map(config, _euclidean(config, 2, name='R2'),
                       _euclidean(config, 1, name='R'), [[1.0, 0.0]], 'phi2')
    lambda1 = ScalarField(
        evaluator=lambda x: np.sqrt(1 + x[1]**2),
        partials=lambda x: np.array([0.0, x[1] / np.sqrt(1 + x[1]**2)]),
        name='sqrt(1+y^2)')
    f = ScalarField(
        evaluator=lambda x: 1 / np.sqrt(1 + x[1]**2),
        partials=lambda x: np.array([0.0, -x[1] * (1 + x[1]**2)**-1.5]),
        name='1/sqrt(1+y^2)')
    cws = build_product_submersion(
        phi1, lambda1, phi2, _constant(1.0, 2), f, _constant(1.0, 1),
        rank_tol=config.rank_tol, conf_tol=config.conf_tol,
        name='cws-varying-dilation')
    return _cws_setup(config, cws)


def _build_r4_lift(config):
    """The R4 -> R2 map on the first factor, identity of R on the second one.

    rho(s) = |s| on R x (0, inf) lifts the dilation e^x3 of the first factor.

    """
    M1 = _euclidean(config, 4, [-np.inf] * 3 + [-np.pi / 2],
                    [np.inf] * 3 + [np.pi / 2], name='R3 x (-pi/2, pi/2)')
    N1 = _euclidean(config, 2, [-np.inf, 0.0], [np.inf, np.inf],
                    name='R x (0, inf)')
    phi1 = _r4_map(config, M1, N1)
    phi2 = _linear_map(config, _euclidean(config, 1, name='R'),
                       _euclidean(config, 1, name='R'), [[1.0]], 'id')
    rho = ScalarField(evaluator=lambda s: np.linalg.norm(s),
                      partials=lambda s: s / np.linalg.norm(s), name='|s|')
    cws = build_product_submersion(
        phi1, _r4_dilation(), phi2, _constant(1.0, 1), _constant(1.0, 4),
        rho, rank_tol=config.rank_tol, conf_tol=config.conf_tol,
        name='cws-r4-lift')
    return _cws_setup(config, cws)


_WARPED_SUITES = ['engine-health', 'warped-metric', 'warped-lemma',
                  'warped-corollary', 'dilation', 'oneill']

_CWS_SUITES = _WARPED_SUITES + ['compatibility', 'theorem-item1',
                                'theorem-item2', 'rescaling',
                                'fiber-geometry']

_CATALOG = (
    Scenario(id='paper-example-r4',
             description='Conformal submersion R4 -> R2 of dilation e^x3, '
                         'analytic Jacobian',
             builder=_build_r4_example(True),
             lower=[-1.0] * 4, upper=[1.0] * 4,
             suites=['engine-health', 'dilation', 'oneill']),
    Scenario(id='paper-example-r4-fd',
             description='Conformal submersion R4 -> R2 of dilation e^x3, '
                         'finite difference Jacobian',
             builder=_build_r4_example(False),
             lower=[-1.0] * 4, upper=[1.0] * 4,
             suites=['dilation', 'oneill']),
    Scenario(id='warped-line',
             description='R x_f R with f(t) = e^t and its two projections',
             builder=_build_warped_line,
             lower=[-1.0, -1.0], upper=[1.0, 1.0],
             suites=_WARPED_SUITES),
    Scenario(id='sphere-warped',
             description='Round sphere chart (0, pi) x_sin (0, 2 pi)',
             builder=_build_sphere,
             lower=[0.3, 0.5], upper=[np.pi - 0.3, 5.5],
             suites=_WARPED_SUITES),
    Scenario(id='cws-constant-dilation',
             description='(x, y) -> 2x times (u, v) -> 2u, f = e^2x, '
                         'rho = e^s: conformal of dilation 2',
             builder=_build_constant_dilation,
             lower=[-0.5] * 4, upper=[0.5] * 4,
             suites=_CWS_SUITES),
    Scenario(id='cws-incompatible',
             description='As cws-constant-dilation with rho = 1: the product '
                         'is not conformal',
             builder=_build_incompatible,
             lower=[0.1, -0.5, -0.5, -0.5], upper=[0.6, 0.5, 0.5, 0.5],
             suites=['engine-health', 'warped-metric', 'dilation',
                     'compatibility'],
             expected_fail=['compatibility-ratio']),
    Scenario(id='cws-riemannian',
             description='Projections with unit dilations and '
                         'rho o phi1 = f: Riemannian warped product '
                         'submersion',
             builder=_build_riemannian,
             lower=[-0.5] * 4, upper=[0.5] * 4,
             suites=_CWS_SUITES + ['riemannian-reduction']),
    Scenario(id='cws-varying-dilation',
             description='phi1(x, y) = x + y^2/2 whose dilation varies along '
                         'its fibres, f = 1/sqrt(1 + y^2), phi2(u, v) = u',
             builder=_build_varying_dilation,
             lower=[-0.5, 0.2, -0.5, -0.5], upper=[0.5, 0.6, 0.5, 0.5],
             suites=_CWS_SUITES,
             expected_variants=['lambda2'], discriminating=True),
    Scenario(id='cws-r4-lift',
             description='R4 -> R2 example on the first factor, identity on '
                         'the second, rho(s) = |s|',
             builder=_build_r4_lift,
             lower=[-1.0, -1.0, -0.5, -1.0, -1.0],
             upper=[1.0, 1.0, 0.5, 1.0, 1.0],
             suites=_CWS_SUITES),
)
