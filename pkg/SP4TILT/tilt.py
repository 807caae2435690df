"""
============
SP4TILT.tilt
============

Overview
========
Displacement (tilting) operators of every realization, the closed-form similarity transformations, Perelomov
coherent and number coherent states and the generic su(1,1) / su(2) eigenvalue reductions.

Displacement factors: a parameter name selects the generator pair of its exponent `p·R − p*·L`:

   ======  ==========  ===========================
   name    (R, L)      realization
   ======  ==========  ===========================
   xi      K+ab, K-ab  two-mode su(1,1)
   chi     J+, J-      su(2)
   xi_a    K+a, K-a    single-mode su(1,1) on a
   xi_b    K+b, K-b    single-mode su(1,1) on b
   ======  ==========  ===========================

Every complex parameter is `p = −(θ/2)·e^{−iφ}` with `θ ≥ 0`.

Closed forms come in two modes:

   - `verified` (default): exact coefficients of `D†·X·D` from :mod:`SP4TILT.quadratic`
   - `printed`: the printed formulas evaluated literally. The transform sets printed with the product, two-mode and
     su(2) displacements follow the `D·X·D†` convention, so they agree with `verified` only after `p → −p`; the
     :py:func:`discrepancy_ledger` lists both deviations.

Classes
=======
.. autoclass:: TiltParameters
   :members: factors, exponent, theta_phi, hyperbolic_scalars, trigonometric_scalars, symplectic_matrix, negated,
      magnitude, from_theta_phi

.. autoclass:: NormalForm

.. autoclass:: DiscrepancyEntry

.. autoclass:: Reduction

Functions
=========
.. autofunction:: normal_form
.. autofunction:: normal_form_operator
.. autofunction:: displacement
.. autofunction:: conjugate_numeric
.. autofunction:: conjugate_closed_form
.. autofunction:: printed_pairs
.. autofunction:: grid_parameters
.. autofunction:: discrepancy_ledger
.. autofunction:: conjugation_margin
.. autofunction:: displaced_columns
.. autofunction:: conjugate_numeric_columns
.. autofunction:: perelomov_state
.. autofunction:: sp4r_coherent_state
.. autofunction:: reduce_su11_form
.. autofunction:: reduce_su2_form

"""
from cmath import (
   atan as cmath_atan,
   atanh as cmath_atanh,
   exp as cmath_exp,
   log as cmath_log,
   phase as cmath_phase,
   sqrt as cmath_sqrt,
   tan as cmath_tan,
   tanh as cmath_tanh,
)
from logging import getLogger
from math import (
   atan as math_atan,
   atanh as math_atanh,
   ceil as math_ceil,
   cos as math_cos,
   cosh as math_cosh,
   exp as math_exp,
   log as math_log,
   pi as math_pi,
   sin as math_sin,
   sinh as math_sinh,
   tan as math_tan,
   tanh as math_tanh,
)

import numpy
from scipy.special import gammaln

from SP4TILT.algebra import combine
from SP4TILT.fock import OperatorMatrix
from SP4TILT.linalg import (
   expm,
   expm_apply,
   identity,
)
from SP4TILT.quadratic import (
   GENERATOR_IDS,
   IDENTITY_ID,
   QuadraticForm,
   expand_aliases,
   symplectic_matrix,
)
from SP4TILT.utils import (
   Err,
   _deactivated,
   as_fraction,
   snap_coefficients,
)


LOG = getLogger(__name__)

TILT_KINDS = ('su11_two_mode', 'su11_mode_a', 'su11_mode_b', 'su2', 'product_ab', 'sp4r_product')
PARAMETER_NAMES = ('xi', 'chi', 'xi_a', 'xi_b')

FACTOR_GENERATORS = {
   'xi': ('K+ab', 'K-ab'),
   'chi': ('J+', 'J-'),
   'xi_a': ('K+a', 'K-a'),
   'xi_b': ('K+b', 'K-b'),
}

# printed product order per kind
KIND_FACTORS = {
   'su11_two_mode': ('xi',),
   'su11_mode_a': ('xi_a',),
   'su11_mode_b': ('xi_b',),
   'su2': ('chi',),
   'product_ab': ('xi_a', 'xi_b'),
   'sp4r_product': ('xi_a', 'xi_b', 'xi', 'chi'),
}

# order in which the diagonalizing pipeline applies its stages: D(ξ)·D(χ)·D(ξa)·D(ξb)
PIPELINE_ORDER = ('xi', 'chi', 'xi_a', 'xi_b')

DEFAULT_PHASES = tuple(2.0 * math_pi * index / 8.0 for index in range(8))
DEFAULT_MAGNITUDES = (0.1, 0.3, 0.5)
LEDGER_THRESHOLD = 1e-8

_ZERO = 1e-15


def _unit(value):
   """ Return value/|value| and 1 for zero: every use multiplies it by a factor that vanishes with |value|
   """
   magnitude = abs(value)
   if magnitude < _ZERO:
      return 1.0 + 0.0j
   return complex(value) / magnitude


# ===========================================================================================================================
# parameters
# ===========================================================================================================================
class TiltParameters(object):
   """ Displacement parameters of one tilt kind

   **Has attributes**: :attr:`kind`, :attr:`xi`, :attr:`chi`, :attr:`xi_a`, :attr:`xi_b` (complex), :attr:`order`

   :param kind: (str) one of :py:data:`TILT_KINDS`
   :param xi: (complex) two-mode su(1,1)
   :param chi: (complex) su(2)
   :param xi_a: (complex) single-mode su(1,1) on a
   :param xi_b: (complex) single-mode su(1,1) on b
   :param order: (str) `printed` or `pipeline`: factor order of `sp4r_product`
      (`D(ξa)D(ξb)D(ξ)D(χ)` or `D(ξ)D(χ)D(ξa)D(ξb)`); other kinds ignore it
   :raise Err: unknown kind or order, or a nonzero parameter the kind does not use
   """

   def __init__(self, kind, xi=0.0, chi=0.0, xi_a=0.0, xi_b=0.0, order='printed'):
      """ Constructor
      """
      if kind not in TILT_KINDS:
         raise Err('TiltParameters.__init__()', [
            'kind must be any of: <{}>.  We got: <{}>'.format(', '.join(TILT_KINDS), kind)
         ])
      if order not in ('printed', 'pipeline'):
         raise Err('TiltParameters.__init__()', ['order must be <printed> or <pipeline>.  We got: <{}>'.format(order)])
      values = {'xi': complex(xi), 'chi': complex(chi), 'xi_a': complex(xi_a), 'xi_b': complex(xi_b)}
      for name, value in values.items():
         if value != 0 and name not in KIND_FACTORS[kind]:
            raise Err('TiltParameters.__init__()', [
               'kind <{}> does not use parameter <{}>.  We got: <{}>'.format(kind, name, value)
            ])
      self.__dict__['kind'] = kind
      self.__dict__['order'] = order
      for name in PARAMETER_NAMES:
         self.__dict__[name] = values[name]

   @classmethod
   def from_theta_phi(cls, kind, theta, phi, name=None):
      """ Return parameters with `p = −(θ/2)·e^{−iφ}` for `name` (default: the first factor of `kind`)

      A negative θ is canonicalized to `(−θ, φ + π)`.
      """
      if name is None:
         name = KIND_FACTORS.get(kind, ('xi',))[0]
      if theta < 0:
         theta, phi = -theta, phi + math_pi
      return cls(kind, **{name: -0.5 * theta * cmath_exp(-1j * phi)})

   def factors(self):
      """ Return the list of (name, value) in product order: `D = D_1·D_2·…`
      """
      names = KIND_FACTORS[self.kind]
      if self.kind == 'sp4r_product' and self.order == 'pipeline':
         names = PIPELINE_ORDER
      return [(name, getattr(self, name)) for name in names]

   def exponent(self, name):
      """ Return the coefficient map of the anti-Hermitian exponent `p·R − p*·L` of factor `name`
      """
      raising, lowering = FACTOR_GENERATORS[name]
      value = getattr(self, name)
      return {raising: value, lowering: -value.conjugate()}

   def theta_phi(self, name=None):
      """ Return (θ, φ) of parameter `name` with `p = −(θ/2)·e^{−iφ}`, φ ∈ [0, 2π): (0, 0) for p = 0
      """
      value = getattr(self, name or KIND_FACTORS[self.kind][0])
      if abs(value) < _ZERO:
         return 0.0, 0.0
      return 2.0 * abs(value), (-cmath_phase(-value)) % (2.0 * math_pi)

   def hyperbolic_scalars(self, name=None):
      """ Return (α, β) = (sinh 2|p|, (cosh 2|p| − 1)/2)
      """
      magnitude = abs(getattr(self, name or KIND_FACTORS[self.kind][0]))
      return math_sinh(2.0 * magnitude), 0.5 * (math_cosh(2.0 * magnitude) - 1.0)

   def trigonometric_scalars(self):
      """ Return (δ, ε) = (sin 2|χ|, (cos 2|χ| − 1)/2)
      """
      magnitude = abs(self.chi)
      return math_sin(2.0 * magnitude), 0.5 * (math_cos(2.0 * magnitude) - 1.0)

   def symplectic_matrix(self):
      """ Return the 4×4 ladder matrix `M` of the whole product: `D†·v·D = M·v`
      """
      result = identity(4)
      for name, _ in self.factors():
         result = result @ symplectic_matrix(self.exponent(name))
      return result

   def negated(self):
      """ Return the parameters with every value negated
      """
      return TiltParameters(self.kind, -self.xi, -self.chi, -self.xi_a, -self.xi_b, self.order)

   def magnitude(self):
      """ Return the largest parameter magnitude
      """
      return max(abs(getattr(self, name)) for name in PARAMETER_NAMES)

   def __eq__(self, other):
      return isinstance(other, TiltParameters) and \
         (self.kind, self.order, self.xi, self.chi, self.xi_a, self.xi_b) == \
         (other.kind, other.order, other.xi, other.chi, other.xi_a, other.xi_b)

   def __ne__(self, other):
      return not self.__eq__(other)

   def __hash__(self):
      return hash((self.kind, self.order, self.xi, self.chi, self.xi_a, self.xi_b))

   def __repr__(self):
      used = ', '.join('{}={}'.format(name, value) for name, value in self.factors())
      return 'TiltParameters({}, {})'.format(self.kind, used)

   # DEACTIVATED
   __setattr__ = _deactivated
   __delattr__ = _deactivated


class NormalForm(object):
   """ Factored displacement `exp(ζK+)·exp(ηK0)·exp(−ζ*K−)`

   **Has attributes**: :attr:`zeta` (complex), :attr:`eta` (float), :attr:`group` (str)
   """

   def __init__(self, zeta, eta, group):
      self.__dict__['zeta'] = complex(zeta)
      self.__dict__['eta'] = float(eta)
      self.__dict__['group'] = group

   def __repr__(self):
      return 'NormalForm({}, zeta={}, eta={})'.format(self.group, self.zeta, self.eta)

   # DEACTIVATED
   __setattr__ = _deactivated
   __delattr__ = _deactivated


def normal_form(xi, group='su11'):
   """ Return the :class:`NormalForm` of `exp(ξK+ − ξ*K−)`

   - su11: `ζ = (ξ/|ξ|)·tanh|ξ|`, `η = ln(1 − |ζ|²)`
   - su2: `ζ = (ξ/|ξ|)·tan|ξ|`, `η = ln(1 + |ζ|²)`

   :param xi: (complex)
   :param group: (str) `su11` or `su2`
   :return: (NormalForm)
   :raise Err: unknown group or |ξ| ≥ π/2 for su2
   """
   xi = complex(xi)
   if group == 'su11':
      zeta = _unit(xi) * math_tanh(abs(xi))
      return NormalForm(zeta, math_log(1.0 - abs(zeta) ** 2), group)
   if group == 'su2':
      if abs(xi) >= 0.5 * math_pi:
         raise Err('normal_form', ['su2 normal form needs |ξ| < π/2.  We got: <{}>'.format(abs(xi))])
      zeta = _unit(xi) * math_tan(abs(xi))
      return NormalForm(zeta, math_log(1.0 + abs(zeta) ** 2), group)
   raise Err('normal_form', ['group must be <su11> or <su2>.  We got: <{}>'.format(group)])


def normal_form_operator(xi, k0, k_plus, k_minus, group='su11'):
   """ Return `exp(ζ·K+)·exp(η·K0)·exp(−ζ*·K−)` on the truncated basis

   :param xi: (complex)
   :param k0: (OperatorMatrix)
   :param k_plus: (OperatorMatrix)
   :param k_minus: (OperatorMatrix)
   :param group: (str) `su11` or `su2`
   :return: (OperatorMatrix)
   """
   form = normal_form(xi, group)
   matrix = expm(form.zeta * k_plus.matrix) @ expm(form.eta * k0.matrix) @ expm(-form.zeta.conjugate() * k_minus.matrix)
   return OperatorMatrix(matrix, k0.basis, label='normal_form({})'.format(group))


# ===========================================================================================================================
# displacements
# ===========================================================================================================================
def displacement(params, gens):
   """ Return the unitary displacement of `params`: the ordered product of its factors

   :param params: (TiltParameters)
   :param gens: (GeneratorSet)
   :return: (OperatorMatrix)
   """
   matrix = identity(gens.basis.dimension)
   for name, value in params.factors():
      if abs(value) < _ZERO:
         continue
      matrix = matrix @ expm(combine(params.exponent(name), gens).matrix)
   return OperatorMatrix(matrix, gens.basis, label='D({})'.format(params.kind))


def conjugate_numeric(d, x, projector=None):
   """ Return `P·D†·X·D·P` (no projection when `projector` is None)

   :param d: (OperatorMatrix)
   :param x: (OperatorMatrix)
   :param projector: (OperatorMatrix)
   :return: (OperatorMatrix)
   """
   result = d.dagger() @ x @ d
   if projector is not None:
      result = projector @ result @ projector
   return result.with_label('D†·{}·D'.format(x.label))


def conjugation_margin(magnitude):
   """ Return the interior margin used after a displacement of size `magnitude`: max(8, ⌈10·|ξ|⌉)
   """
   return max(8, int(math_ceil(10.0 * abs(magnitude))))


def displaced_columns(params, gens, indices):
   """ Return `D·e_i` for the basis columns `indices` without forming `D`

   :param params: (TiltParameters)
   :param gens: (GeneratorSet)
   :param indices: (list) of basis indices
   :return: (numpy.ndarray) dimension × len(indices)
   """
   block = numpy.zeros((gens.basis.dimension, len(indices)), dtype=numpy.complex128)
   for column, index in enumerate(indices):
      block[index, column] = 1.0
   for name, value in reversed(params.factors()):
      if abs(value) < _ZERO:
         continue
      block = expm_apply(combine(params.exponent(name), gens).matrix, block)
   return block


def conjugate_numeric_columns(params, gens, x, indices):
   """ Return the columns `indices` of `D†·X·D` without forming `D`

   :param params: (TiltParameters)
   :param gens: (GeneratorSet)
   :param x: (OperatorMatrix)
   :param indices: (list)
   :return: (numpy.ndarray) dimension × len(indices)
   """
   block = x.apply(displaced_columns(params, gens, indices))
   for name, value in params.factors():
      if abs(value) < _ZERO:
         continue
      block = expm_apply(-combine(params.exponent(name), gens).matrix, block)
   return block


# ===========================================================================================================================
# closed forms
# ===========================================================================================================================
def _hyperbolic(value):
   magnitude = abs(value)
   return (
      _unit(value), math_cosh(2.0 * magnitude), math_sinh(2.0 * magnitude), math_cosh(magnitude), math_sinh(magnitude)
   )


def _trigonometric(value):
   magnitude = abs(value)
   return _unit(value), math_cos(2.0 * magnitude), math_sin(2.0 * magnitude)


def _printed_product_ab(generator_id, params):
   u_a, c2_a, s2_a, ch_a, sh_a = _hyperbolic(params.xi_a)
   u_b, c2_b, s2_b, ch_b, sh_b = _hyperbolic(params.xi_b)
   uc_a, uc_b = u_a.conjugate(), u_b.conjugate()
   if generator_id == 'J0':
      return {
         'J0': c2_a + c2_b, 'K0ab': c2_a - c2_b,
         'K+a': -s2_a * u_a, 'K-a': -s2_a * uc_a, 'K+b': s2_b * u_b, 'K-b': s2_b * uc_b,
      }
   if generator_id == 'K0ab':
      return {
         'J0': c2_a - c2_b, 'K0ab': c2_a + c2_b,
         'K+a': -s2_a * u_a, 'K-a': -s2_a * uc_a, 'K+b': -s2_b * u_b, 'K-b': -s2_b * uc_b,
         IDENTITY_ID: -1.0,
      }
   if generator_id == 'J+':
      return {
         'J+': ch_a * ch_b, 'K-ab': -uc_a * ch_b * sh_a, 'K+ab': -u_b * ch_a * sh_b, 'J-': uc_a * u_b * sh_a * sh_b,
      }
   if generator_id == 'J-':
      return {
         'J-': ch_a * ch_b, 'K+ab': -u_a * ch_b * sh_a, 'K-ab': -uc_b * ch_a * sh_b, 'J+': u_a * uc_b * sh_a * sh_b,
      }
   if generator_id == 'K-ab':
      return {
         'K-ab': ch_a * ch_b, 'J+': -u_a * ch_b * sh_a, 'J-': -u_b * ch_a * sh_b, 'K+ab': u_a * u_b * sh_a * sh_b,
      }
   # K+ab
   return {
      'K+ab': ch_a * ch_b, 'J-': -uc_a * ch_b * sh_a, 'J+': -uc_b * ch_a * sh_b, 'K-ab': uc_a * uc_b * sh_a * sh_b,
   }


def _printed_two_mode(generator_id, params):
   u, c2, s2, _, _ = _hyperbolic(params.xi)
   uc = u.conjugate()
   table = {
      'K-a': {'K-a': 0.5 * (c2 + 1.0), 'K+b': 0.5 * u * u * (c2 - 1.0), 'J-': -0.5 * u * s2},
      'K+a': {'K+a': 0.5 * (c2 + 1.0), 'K-b': 0.5 * uc * uc * (c2 - 1.0), 'J+': -0.5 * uc * s2},
      'K-b': {'K-b': 0.5 * (c2 + 1.0), 'K+a': 0.5 * u * u * (c2 - 1.0), 'J+': -0.5 * u * s2},
      'K+b': {'K+b': 0.5 * (c2 + 1.0), 'K-a': 0.5 * uc * uc * (c2 - 1.0), 'J-': -0.5 * uc * s2},
      'J+': {'J+': c2, 'K+a': -u * s2, 'K-b': -uc * s2},
      'J-': {'J-': c2, 'K-a': -uc * s2, 'K+b': -u * s2},
      'J0': {'J0': 1.0},
   }
   return table[generator_id]


def _printed_su2(generator_id, params):
   v, c2, s2 = _trigonometric(params.chi)
   vc = v.conjugate()
   table = {
      'K-a': {'K-a': 0.5 * (c2 + 1.0), 'K-b': -0.5 * v * v * (c2 - 1.0), 'K-ab': -0.5 * v * s2},
      'K+a': {'K+a': 0.5 * (c2 + 1.0), 'K+b': -0.5 * vc * vc * (c2 - 1.0), 'K+ab': -0.5 * vc * s2},
      'K-b': {'K-b': 0.5 * (c2 + 1.0), 'K-a': -0.5 * vc * vc * (c2 - 1.0), 'K-ab': 0.5 * vc * s2},
      'K+b': {'K+b': 0.5 * (c2 + 1.0), 'K+a': -0.5 * v * v * (c2 - 1.0), 'K+ab': 0.5 * v * s2},
      'K+ab': {'K+a': v * s2, 'K+b': -vc * s2, 'K+ab': c2},
      'K-ab': {'K-a': vc * s2, 'K-b': -v * s2, 'K-ab': c2},
      'K0ab': {'K0ab': 1.0},
   }
   return table[generator_id]


def _generic_su11(raising, lowering, weight, value, generator_id):
   """ DK+, DK−, DK0 of a generic su(1,1) triple
   """
   u = _unit(value)
   uc = u.conjugate()
   alpha = math_sinh(2.0 * abs(value))
   beta = 0.5 * (math_cosh(2.0 * abs(value)) - 1.0)
   if generator_id == raising:
      return {weight: uc * alpha, raising: beta + 1.0, lowering: beta * uc * uc}
   if generator_id == lowering:
      return {weight: u * alpha, lowering: beta + 1.0, raising: beta * u * u}
   return {weight: 2.0 * beta + 1.0, raising: 0.5 * alpha * u, lowering: 0.5 * alpha * uc}


def _generic_su2(value, generator_id):
   """ DJ+, DJ−, DJ0
   """
   v = _unit(value)
   vc = v.conjugate()
   delta = math_sin(2.0 * abs(value))
   epsilon = 0.5 * (math_cos(2.0 * abs(value)) - 1.0)
   if generator_id == 'J+':
      return {'J0': -vc * delta, 'J+': epsilon + 1.0, 'J-': epsilon * vc * vc}
   if generator_id == 'J-':
      return {'J0': -v * delta, 'J-': epsilon + 1.0, 'J+': epsilon * v * v}
   return {'J0': 2.0 * epsilon + 1.0, 'J+': 0.5 * delta * v, 'J-': 0.5 * delta * vc}


def _printed_single_a(generator_id, params):
   return _generic_su11('K+a', 'K-a', 'K0a', params.xi_a, generator_id)


def _printed_single_b(generator_id, params):
   return _generic_su11('K+b', 'K-b', 'K0b', params.xi_b, generator_id)


def _printed_two_mode_generic(generator_id, params):
   return _generic_su11('K+ab', 'K-ab', 'K0ab', params.xi, generator_id)


def _printed_su2_generic(generator_id, params):
   return _generic_su2(params.chi, generator_id)


# (kind, generator id) -> (printed formula, source)
PRINTED_FORMULAS = {}
for _generator_id in ('J0', 'J+', 'J-', 'K0ab', 'K+ab', 'K-ab'):
   PRINTED_FORMULAS[('product_ab', _generator_id)] = (_printed_product_ab, 'product set')
for _generator_id in ('K-a', 'K+a', 'K-b', 'K+b', 'J+', 'J-', 'J0'):
   PRINTED_FORMULAS[('su11_two_mode', _generator_id)] = (_printed_two_mode, 'two-mode set')
for _generator_id in ('K+ab', 'K-ab', 'K0ab'):
   PRINTED_FORMULAS[('su11_two_mode', _generator_id)] = (_printed_two_mode_generic, 'generic su(1,1)')
for _generator_id in ('K-a', 'K+a', 'K-b', 'K+b', 'K+ab', 'K-ab', 'K0ab'):
   PRINTED_FORMULAS[('su2', _generator_id)] = (_printed_su2, 'su(2) set')
for _generator_id in ('J+', 'J-', 'J0'):
   PRINTED_FORMULAS[('su2', _generator_id)] = (_printed_su2_generic, 'generic su(2)')
for _generator_id in ('K+a', 'K-a', 'K0a'):
   PRINTED_FORMULAS[('su11_mode_a', _generator_id)] = (_printed_single_a, 'generic su(1,1)')
for _generator_id in ('K+b', 'K-b', 'K0b'):
   PRINTED_FORMULAS[('su11_mode_b', _generator_id)] = (_printed_single_b, 'generic su(1,1)')
del _generator_id


def printed_pairs():
   """ Return the (kind, generator id) pairs that have a printed formula, in a fixed order
   """
   return list(PRINTED_FORMULAS)


def conjugate_closed_form(generator_id, params, mode='verified'):
   """ Return the coefficient map of `D†·X·D` over the generator ids and `'1'`

   :param generator_id: (str) a generator id, `K0a` or `K0b`
   :param params: (TiltParameters)
   :param mode: (str) `verified` or `printed`
   :return: (dict) id -> complex, entries below 1e−14 dropped
   :raise Err: unknown mode, or a pair without printed formula in printed mode
   """
   if mode == 'verified':
      form = QuadraticForm.from_coefficients({generator_id: 1.0}).conjugate(params.symplectic_matrix())
      return snap_coefficients(form.coefficients(), zero_tol=1e-14, half_tol=0.0)
   if mode == 'printed':
      if (params.kind, generator_id) not in PRINTED_FORMULAS:
         raise Err('conjugate_closed_form', [
            'no printed formula for generator <{}> under kind <{}>'.format(generator_id, params.kind)
         ])
      formula = PRINTED_FORMULAS[(params.kind, generator_id)][0]
      return snap_coefficients(expand_aliases(formula(generator_id, params)), zero_tol=1e-14, half_tol=0.0)
   raise Err('conjugate_closed_form', ['mode must be <verified> or <printed>.  We got: <{}>'.format(mode)])


def coefficient_distance(first, second):
   """ Return max |first_k − second_k| over the union of ids
   """
   keys = set(first) | set(second)
   if not keys:
      return 0.0
   return max(abs(complex(first.get(key, 0.0)) - complex(second.get(key, 0.0))) for key in keys)


def grid_parameters(kind, magnitude, phase):
   """ Return the TiltParameters of one grid point: `p = magnitude·e^{i·phase}`

   Product kinds use `ξb = 0.6·p*` and (sp4r_product) `ξ = 0.8·p·e^{iπ/3}`, `χ = 0.7·p*·e^{−iπ/4}` so that no two
   factors coincide.
   """
   value = magnitude * cmath_exp(1j * phase)
   if kind == 'product_ab':
      return TiltParameters(kind, xi_a=value, xi_b=0.6 * value.conjugate())
   if kind == 'sp4r_product':
      return TiltParameters(
         kind, xi=0.8 * value * cmath_exp(1j * math_pi / 3.0), chi=0.7 * value.conjugate() * cmath_exp(-1j * math_pi / 4.0),
         xi_a=value, xi_b=0.6 * value.conjugate()
      )
   return TiltParameters(kind, **{KIND_FACTORS[kind][0]: value})


class DiscrepancyEntry(object):
   """ One printed transform formula checked over a parameter grid

   **Has attributes**:

      - :attr:`kind`, :attr:`generator_id`, :attr:`source` (str)
      - :attr:`literal` (float) max relative deviation of the printed formula from the verified coefficients
      - :attr:`flipped` (float) the same with the printed formula evaluated at `−p`
      - :attr:`worst` (tuple) (magnitude, phase) of the largest literal deviation
      - :attr:`printed`, :attr:`verified` (dict) coefficient maps at the worst point
   """

   def __init__(self, kind, generator_id, source, literal, flipped, worst, printed, verified):
      self.__dict__['kind'] = kind
      self.__dict__['generator_id'] = generator_id
      self.__dict__['source'] = source
      self.__dict__['literal'] = literal
      self.__dict__['flipped'] = flipped
      self.__dict__['worst'] = worst
      self.__dict__['printed'] = printed
      self.__dict__['verified'] = verified

   @property
   def needs_correction(self):
      return self.literal > LEDGER_THRESHOLD

   def __repr__(self):
      return 'DiscrepancyEntry({}, {}, literal={:.3e}, flipped={:.3e})'.format(
         self.kind, self.generator_id, self.literal, self.flipped
      )

   # DEACTIVATED
   __setattr__ = _deactivated
   __delattr__ = _deactivated


def discrepancy_ledger(magnitudes=DEFAULT_MAGNITUDES, phases=DEFAULT_PHASES):
   """ Return one :class:`DiscrepancyEntry` per printed formula: printed against verified over the grid

   The deviation at a grid point is `max_k |printed_k − verified_k| / max(max_k |verified_k|, 1)`.

   :param magnitudes: (sequence) of |p|
   :param phases: (sequence) of arg p
   :return: (list) of DiscrepancyEntry in :py:func:`printed_pairs` order
   """
   entries = []
   for kind, generator_id in printed_pairs():
      literal = 0.0
      flipped = 0.0
      worst = (0.0, 0.0)
      worst_maps = ({}, {})
      for magnitude in magnitudes:
         for phase in phases:
            params = grid_parameters(kind, magnitude, phase)
            verified = conjugate_closed_form(generator_id, params)
            scale = max([abs(value) for value in verified.values()] + [1.0])
            printed = conjugate_closed_form(generator_id, params, mode='printed')
            deviation = coefficient_distance(printed, verified) / scale
            flipped_deviation = coefficient_distance(
               conjugate_closed_form(generator_id, params.negated(), mode='printed'), verified
            ) / scale
            flipped = max(flipped, flipped_deviation)
            if deviation >= literal:
               literal = deviation
               worst = (magnitude, phase)
               worst_maps = (printed, verified)
      entries.append(DiscrepancyEntry(
         kind, generator_id, PRINTED_FORMULAS[(kind, generator_id)][1], literal, flipped, worst, *worst_maps
      ))
   LOG.info('discrepancy ledger: %d of %d printed formulas need correction',
      len([entry for entry in entries if entry.needs_correction]), len(entries))
   return entries


# ===========================================================================================================================
# coherent states
# ===========================================================================================================================
def _su11_number_coherent(k, offset, form, length):
   zeta = form.zeta
   minus_zeta_conj = -zeta.conjugate()
   two_k = 2.0 * k
   coefficients = numpy.zeros(length, dtype=numpy.complex128)
   for target in range(length):
      total = 0.0 + 0.0j
      for lowered in range(max(0, offset - target), offset + 1):
         raised = target - offset + lowered
         log_magnitude = (
            -gammaln(lowered + 1) - gammaln(raised + 1) + form.eta * (k + offset - lowered)
            + 0.5 * (gammaln(two_k + offset) + gammaln(two_k + offset - lowered + raised))
            - gammaln(two_k + offset - lowered)
            + 0.5 * (gammaln(offset + 1) + gammaln(offset - lowered + raised + 1))
            - gammaln(offset - lowered + 1)
         )
         total += minus_zeta_conj ** lowered * zeta ** raised * math_exp(log_magnitude)
      coefficients[target] = total
   return coefficients


def _su2_number_coherent(j, mu, form):
   zeta = form.zeta
   minus_zeta_conj = -zeta.conjugate()
   size = int(2 * j) + 1
   coefficients = numpy.zeros(size, dtype=numpy.complex128)
   j = float(j)
   mu = float(mu)
   for lowered in range(int(round(j + mu)) + 1):
      for raised in range(int(round(j - mu)) + lowered + 1):
         log_magnitude = (
            -gammaln(lowered + 1) - gammaln(raised + 1) + form.eta * (mu - lowered)
            + gammaln(j - mu + lowered + 1) - gammaln(j + mu - lowered + 1)
            + 0.5 * (gammaln(j + mu + 1) + gammaln(j + mu - lowered + raised + 1)
                     - gammaln(j - mu + 1) - gammaln(j - mu + lowered - raised + 1))
         )
         target = int(round(j + mu)) - lowered + raised
         coefficients[target] += minus_zeta_conj ** lowered * zeta ** raised * math_exp(log_magnitude)
   return coefficients


def perelomov_state(kind, k_or_j, offset, xi, length=60):
   """ Return the expansion coefficients of a Perelomov (number) coherent state

   - su11: `D(ξ)|k, offset⟩` over |k, s⟩ for s < length
   - su2: `D(ξ)|j, −j+offset⟩` over |j, μ⟩ for μ = −j … j (`length` is ignored)

   Both series use the normal form parameters `ζ, η` of :py:func:`normal_form`.

   :param kind: (str) `su11` or `su2`
   :param k_or_j: (Fraction, str, float) Bargmann index k ≥ 1/4 or spin j
   :param offset: (int) excitation above the lowest weight
   :param xi: (complex)
   :param length: (int) su11 series length
   :return: (numpy.ndarray)
   :raise Err: invalid index or offset
   """
   label = as_fraction(k_or_j)
   if not isinstance(offset, int) or offset < 0:
      raise Err('perelomov_state', ['offset must be an integer ≥ 0.  We got: <{}>'.format(offset)])
   if kind == 'su11':
      if label < as_fraction('1/4'):
         raise Err('perelomov_state', ['k must be ≥ 1/4.  We got: <{}>'.format(label)])
      if length <= offset:
         raise Err('perelomov_state', ['length must exceed offset.  We got: <{}> <{}>'.format(length, offset)])
      return _su11_number_coherent(float(label), offset, normal_form(xi, 'su11'), length)
   if kind == 'su2':
      if label < 0 or (2 * label).denominator != 1:
         raise Err('perelomov_state', ['j must be a non-negative multiple of 1/2.  We got: <{}>'.format(label)])
      if offset > 2 * label:
         raise Err('perelomov_state', ['offset must lie in [0, 2j].  We got: <{}> with j: <{}>'.format(offset, label)])
      return _su2_number_coherent(label, -label + offset, normal_form(xi, 'su2'))
   raise Err('perelomov_state', ['kind must be <su11> or <su2>.  We got: <{}>'.format(kind)])


def sp4r_coherent_state(params, gens, lowest):
   """ Return `D·|lowest⟩` for the displacement of `params`

   :param params: (TiltParameters)
   :param gens: (GeneratorSet)
   :param lowest: (numpy.ndarray) a basis vector
   :return: (numpy.ndarray)
   """
   index = int(numpy.argmax(numpy.abs(lowest)))
   return displaced_columns(params, gens, [index])[:, 0] * lowest[index]


# ===========================================================================================================================
# reductions
# ===========================================================================================================================
class Reduction(object):
   """ Result of an su(1,1) or su(2) eigenvalue reduction `a0·K0 + a1·K+ + a2·K− → slope·K0`

   **Has attributes**:

      - :attr:`theta`, :attr:`phi` (float) of the applied parameter `p = −(θ/2)·e^{−iφ}`
      - :attr:`slope` (complex) coefficient of the diagonal generator after the tilt
      - :attr:`tilt` (TiltParameters)
      - :attr:`value` (complex) the parameter `p`
      - :attr:`printed_theta`, :attr:`printed_phi` (complex) the printed closed forms: nan when undefined
   """

   def __init__(self, theta, phi, slope, tilt, value, printed_theta, printed_phi):
      self.__dict__['theta'] = theta
      self.__dict__['phi'] = phi
      self.__dict__['slope'] = slope
      self.__dict__['tilt'] = tilt
      self.__dict__['value'] = value
      self.__dict__['printed_theta'] = printed_theta
      self.__dict__['printed_phi'] = printed_phi

   def __repr__(self):
      return 'Reduction(slope={}, theta={}, phi={})'.format(self.slope, self.theta, self.phi)

   # DEACTIVATED
   __setattr__ = _deactivated
   __delattr__ = _deactivated


def _real_weight(a0, func_name):
   a0 = complex(a0)
   if abs(a0.imag) > 1e-12 * max(abs(a0), 1.0):
      raise Err(func_name, ['a0 must be real.  We got: <{}>'.format(a0)])
   return a0.real


def _sign(value):
   return -1.0 if value < 0 else 1.0


def _printed_phase(numerator, a2):
   if abs(a2) < _ZERO or abs(numerator) < _ZERO:
      return complex('nan')
   return 1j * cmath_log(numerator / a2)


def reduce_su11_form(a0, a1, a2, kind='su11_two_mode', tol=1e-12):
   """ Return the :class:`Reduction` of `a0·K0 + a1·K+ + a2·K−` by an su(1,1) tilt

   The parameter solves `a2·z² + a0·z + a1 = 0` for `z = tanh|p|·p/|p|` (the root with |z| < 1), so the slope is
   `sgn(a0)·√(a0² − 4·a1·a2)`.

   :param a0: (float) real
   :param a1: (complex)
   :param a2: (complex)
   :param kind: (str) su(1,1) kind that carries the tilt: `su11_two_mode`, `su11_mode_a` or `su11_mode_b`
   :param tol: (float) zero threshold for a1, a2
   :return: (Reduction)
   :raise Err: `degenerate-reduction` when a0² = 4·a1·a2, `hyperbolic-out-of-domain` when |2√(a1a2)/a0| ≥ 1
   """
   a0 = _real_weight(a0, 'reduce_su11_form')
   a1 = complex(a1)
   a2 = complex(a2)
   if abs(a1) <= tol and abs(a2) <= tol:
      return Reduction(0.0, 0.0, complex(a0), TiltParameters(kind), 0j, 0j, complex('nan'))
   discriminant = a0 * a0 - 4.0 * a1 * a2
   if abs(discriminant) <= tol * max(a0 * a0, 1.0):
      raise Err('reduce_su11_form', [
         'a0² = 4·a1·a2: no discrete reduction',
         '  a0: <{}> a1: <{}> a2: <{}>'.format(a0, a1, a2)
      ], kind='degenerate-reduction')
   if a0 == 0.0 or abs(2.0 * cmath_sqrt(a1 * a2) / a0) >= 1.0:
      raise Err('reduce_su11_form', [
         '|2·√(a1·a2)/a0| ≥ 1: continuous-spectrum regime',
         '  a0: <{}> a1: <{}> a2: <{}>'.format(a0, a1, a2)
      ], kind='hyperbolic-out-of-domain')
   root = _sign(a0) * cmath_sqrt(discriminant)
   z = -2.0 * a1 / (a0 + root)
   if abs(z) >= 1.0:
      raise Err('reduce_su11_form', [
         'no tilt with tanh|ξ| < 1 for this form: |z|: <{}>'.format(abs(z))
      ], kind='hyperbolic-out-of-domain')
   magnitude = math_atanh(abs(z))
   value = magnitude * _unit(z)
   tilt = TiltParameters(kind, **{KIND_FACTORS[kind][0]: value})
   theta, phi = tilt.theta_phi()
   printed_theta = cmath_atanh(2.0 * cmath_sqrt(a1 * a2) / a0)
   printed_phi = _printed_phase(a0 * cmath_tanh(printed_theta) / 2.0, a2)
   LOG.debug('reduce_su11_form(%s, %s, %s): slope %s xi %s', a0, a1, a2, root, value)
   return Reduction(theta, phi, root, tilt, value, printed_theta, printed_phi)


def reduce_su2_form(a0, a1, a2, kind='su2', tol=1e-12):
   """ Return the :class:`Reduction` of `a0·J0 + a1·J+ + a2·J−` by an su(2) tilt

   The parameter solves `a2·z² − a0·z − a1 = 0` for `z = tan|χ|·χ/|χ|` (the smaller root), so the slope is
   `sgn(a0)·√(a0² + 4·a1·a2)` with sgn(0) = +1.

   :param a0: (float) real
   :param a1: (complex)
   :param a2: (complex)
   :param kind: (str) kind that carries the tilt: `su2`
   :param tol: (float)
   :return: (Reduction)
   :raise Err: `degenerate-reduction` when a0 = 0 and a1·a2 = 0 (or a0² = −4·a1·a2)
   """
   a0 = _real_weight(a0, 'reduce_su2_form')
   a1 = complex(a1)
   a2 = complex(a2)
   if abs(a1) <= tol and abs(a2) <= tol:
      if abs(a0) <= tol:
         raise Err('reduce_su2_form', ['a0 = 0 and a1·a2 = 0: nothing to reduce'], kind='degenerate-reduction')
      return Reduction(0.0, 0.0, complex(a0), TiltParameters(kind), 0j, 0j, complex('nan'))
   discriminant = a0 * a0 + 4.0 * a1 * a2
   if abs(discriminant) <= tol * max(a0 * a0, 1.0):
      raise Err('reduce_su2_form', [
         'a0² = −4·a1·a2: no reduction',
         '  a0: <{}> a1: <{}> a2: <{}>'.format(a0, a1, a2)
      ], kind='degenerate-reduction')
   root = _sign(a0) * cmath_sqrt(discriminant)
   z = -2.0 * a1 / (a0 + root)
   magnitude = math_atan(abs(z))
   value = magnitude * _unit(z)
   tilt = TiltParameters(kind, **{KIND_FACTORS[kind][0]: value})
   theta, phi = tilt.theta_phi()
   if a0 == 0.0:
      printed_theta = complex(0.5 * math_pi)
   else:
      printed_theta = cmath_atan(2.0 * cmath_sqrt(a1 * a2) / a0)
   printed_phi = _printed_phase(a0 * cmath_tan(printed_theta) / 2.0, a2)
   LOG.debug('reduce_su2_form(%s, %s, %s): slope %s chi %s', a0, a1, a2, root, value)
   return Reduction(theta, phi, root, tilt, value, printed_theta, printed_phi)
