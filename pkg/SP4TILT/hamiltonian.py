"""
===================
SP4TILT.hamiltonian
===================

Overview
========
The general two-level two-mode Hamiltonian, its uncoupled (squared) spinor equations and the three stage tilting
pipeline that diagonalizes them.

Layout: operators on spin ⊗ Fock use the spin-major block layout of :mod:`SP4TILT.fock`:

   `H = H0 + H_I`

   `H0 = ħω1·(a†a + σ0/2) + ħω2·(b†b + σ0/2)`

   `H_I = ħΔω·σ0 + (κ·)·σ+ + (γ·)·σ−` with `(κ·) = κ1·a + κ2·a† + κ3·b + κ4·b†` and `Δω = (ω0 − ω1 − ω2)/2`

Eliminating the lower spinor component gives the uncoupled equation `(κ·)(γ·)|φ1⟩ = (E² − (ħΔω)²)|φ1⟩`. Its left side
is a combination of the ten sp(4,R) generators weighted by the α coefficients.

Pipeline: `D(ξ)·D(χ)·D(ξa)·D(ξb)`:

   #. two-mode su(1,1) tilt removing `J±`
   #. su(2) tilt removing `K±ab`
   #. single-mode su(1,1) tilts removing `K±a` and `K±b`

Stage parameters are solved in closed form and every stage is checked on the exact 4×4 engine. Uncoupled forms that
are already pure su(2) or pure two-mode su(1,1) route straight to the generic reductions.

Classes
=======
.. autoclass:: ModelParams
   :members: hermitian, delta_omega, detuning_energy, is_mode_a_coupled, is_mode_b_coupled

.. autoclass:: AlphaCoefficients
   :members: unc1_coefficients, as_tuple

.. autoclass:: BetaCoefficients

.. autoclass:: TiltedCoefficients

.. autoclass:: PipelineLedger
   :members: uncoupled_eigenvalue, printed_uncoupled_eigenvalue, displacement_params, spectrum_indices

.. autoclass:: SpectrumEntry

.. autoclass:: SpectrumTable

.. autoclass:: WavefunctionSample

Functions
=========
.. autofunction:: linear_operator
.. autofunction:: build_hamiltonian
.. autofunction:: uncoupled_operator
.. autofunction:: alpha_coefficients
.. autofunction:: unc1_operator
.. autofunction:: printed_beta_coefficients
.. autofunction:: printed_tilted_coefficients
.. autofunction:: tilt_pipeline
.. autofunction:: closed_form_spectrum
.. autofunction:: component_spectra_report
.. autofunction:: assoc_laguerre
.. autofunction:: assoc_laguerre_sum
.. autofunction:: wavefunction

"""
from cmath import (
   atan as cmath_atan,
   atanh as cmath_atanh,
   log as cmath_log,
   sqrt as cmath_sqrt,
)
from logging import getLogger
from math import (
   atan2 as math_atan2,
   atanh as math_atanh,
   cos as math_cos,
   cosh as math_cosh,
   exp as math_exp,
   isnan as math_isnan,
   log as math_log,
   pi as math_pi,
   sin as math_sin,
   sinh as math_sinh,
   sqrt as math_sqrt,
)

import numpy
from scipy.special import (
   comb,
   factorial,
   gammaln,
)

from SP4TILT.algebra import combine
from SP4TILT.fock import (
   boson_operators,
   number_operators,
   pauli_matrices,
   sector_indices,
   spin_lift,
   spin_operator,
)
from SP4TILT.linalg import hermitian_eigensolve
from SP4TILT.quadratic import (
   IDENTITY_ID,
   QuadraticForm,
)
from SP4TILT.report import VerificationReport
from SP4TILT.tilt import (
   TiltParameters,
   reduce_su11_form,
   reduce_su2_form,
)
from SP4TILT.utils import (
   Err,
   _deactivated,
)


LOG = getLogger(__name__)

PIPELINE_PATHS = ('diagonal', 'su2', 'su11_two_mode', 'single_mode', 'general')
LADDER_IDS = ('K+a', 'K-a', 'K+b', 'K-b', 'K+ab', 'K-ab', 'J+', 'J-')
SPECTRUM_FLAGS = ('ok', 'non-real', 'unmatched')

# relative threshold below which a target coefficient counts as already eliminated
STAGE_TOLERANCE = 1e-12
# relative residual accepted after each engine-checked stage
STAGE_RESIDUAL = 1e-9


# ===========================================================================================================================
# model parameters and operators
# ===========================================================================================================================
def _real(value, name, func_name):
   value = complex(value)
   if abs(value.imag) > 0.0:
      raise Err(func_name, ['{} must be real.  We got: <{}>'.format(name, value)])
   return value.real


class ModelParams(object):
   """ Parameters of the general Hamiltonian

   **Has attributes**: :attr:`omega0`, :attr:`omega1`, :attr:`omega2`, :attr:`hbar` (float),
   :attr:`kappa`, :attr:`gamma` (tuple of four complex)

   :param omega0: (float) two-level frequency
   :param omega1: (float) mode a frequency
   :param omega2: (float) mode b frequency
   :param kappa: (sequence) κ1..κ4: energies
   :param gamma: (sequence) γ1..γ4: energies
   :param hbar: (float) > 0
   :raise Err: complex frequency, ħ ≤ 0 or not four couplings
   """

   def __init__(self, omega0, omega1, omega2, kappa, gamma, hbar=1.0):
      """ Constructor
      """
      hbar = _real(hbar, 'hbar', 'ModelParams.__init__()')
      if hbar <= 0:
         raise Err('ModelParams.__init__()', ['hbar must be > 0.  We got: <{}>'.format(hbar)])
      kappa = tuple(complex(value) for value in kappa)
      gamma = tuple(complex(value) for value in gamma)
      if len(kappa) != 4 or len(gamma) != 4:
         raise Err('ModelParams.__init__()', [
            'kappa and gamma need four entries each.  We got: <{}> <{}>'.format(len(kappa), len(gamma))
         ])
      self.__dict__['omega0'] = _real(omega0, 'omega0', 'ModelParams.__init__()')
      self.__dict__['omega1'] = _real(omega1, 'omega1', 'ModelParams.__init__()')
      self.__dict__['omega2'] = _real(omega2, 'omega2', 'ModelParams.__init__()')
      self.__dict__['kappa'] = kappa
      self.__dict__['gamma'] = gamma
      self.__dict__['hbar'] = hbar

   @property
   def hermitian(self):
      """ True iff γ1 = κ2*, γ2 = κ1*, γ3 = κ4*, γ4 = κ3*
      """
      k1, k2, k3, k4 = self.kappa
      return self.gamma == (k2.conjugate(), k1.conjugate(), k4.conjugate(), k3.conjugate())

   @property
   def delta_omega(self):
      """ Δω = (ω0 − ω1 − ω2)/2
      """
      return 0.5 * (self.omega0 - self.omega1 - self.omega2)

   @property
   def detuning_energy(self):
      """ ħΔω
      """
      return self.hbar * self.delta_omega

   def is_mode_a_coupled(self):
      return any(value != 0 for value in (self.kappa[0], self.kappa[1], self.gamma[0], self.gamma[1]))

   def is_mode_b_coupled(self):
      return any(value != 0 for value in (self.kappa[2], self.kappa[3], self.gamma[2], self.gamma[3]))

   def __eq__(self, other):
      return isinstance(other, ModelParams) and \
         (self.omega0, self.omega1, self.omega2, self.kappa, self.gamma, self.hbar) == \
         (other.omega0, other.omega1, other.omega2, other.kappa, other.gamma, other.hbar)

   def __ne__(self, other):
      return not self.__eq__(other)

   def __hash__(self):
      return hash((self.omega0, self.omega1, self.omega2, self.kappa, self.gamma, self.hbar))

   def __repr__(self):
      return 'ModelParams(omega=({}, {}, {}), kappa={}, gamma={}, hbar={})'.format(
         self.omega0, self.omega1, self.omega2, self.kappa, self.gamma, self.hbar
      )

   # DEACTIVATED
   __setattr__ = _deactivated
   __delattr__ = _deactivated


def linear_operator(coefficients, basis, label=''):
   """ Return `c1·a + c2·a† + c3·b + c4·b†` on the Fock basis
   """
   a, a_dag, b, b_dag = boson_operators(basis)
   c1, c2, c3, c4 = coefficients
   return (a * c1 + a_dag * c2 + b * c3 + b_dag * c4).with_label(label)


def build_hamiltonian(params, basis):
   """ Return (H, H0, H_I) on spin ⊗ Fock

   :param params: (ModelParams)
   :param basis: (FockBasis)
   :return: (tuple) of OperatorMatrix
   """
   sigma_0, sigma_plus, sigma_minus = pauli_matrices()
   n_a, n_b = number_operators(basis)
   hbar = params.hbar
   half_sigma_0 = spin_operator(sigma_0, basis) * 0.5
   h0 = (
      (spin_lift(n_a) + half_sigma_0) * (hbar * params.omega1) +
      (spin_lift(n_b) + half_sigma_0) * (hbar * params.omega2)
   ).with_label('H0')
   kappa_dot = linear_operator(params.kappa, basis, '(κ·)')
   gamma_dot = linear_operator(params.gamma, basis, '(γ·)')
   h_i = (
      spin_operator(sigma_0, basis) * params.detuning_energy +
      spin_lift(kappa_dot, sigma_plus) + spin_lift(gamma_dot, sigma_minus)
   ).with_label('H_I')
   return (h0 + h_i).with_label('H'), h0, h_i


def uncoupled_operator(params, basis, component=1):
   """ Return `(κ·)(γ·)` (component 1) or `(γ·)(κ·)` (component 2) on the Fock factor

   Its spectrum is `E² − (ħΔω)²`.

   :raise Err: component not 1 or 2
   """
   kappa_dot = linear_operator(params.kappa, basis, '(κ·)')
   gamma_dot = linear_operator(params.gamma, basis, '(γ·)')
   if component == 1:
      return (kappa_dot @ gamma_dot).with_label('(κ·)(γ·)')
   if component == 2:
      return (gamma_dot @ kappa_dot).with_label('(γ·)(κ·)')
   raise Err('uncoupled_operator', ['component must be 1 or 2.  We got: <{}>'.format(component)])


# ===========================================================================================================================
# coefficients
# ===========================================================================================================================
class AlphaCoefficients(object):
   """ The eleven bilinears `α1..α11` of κ and γ plus Δω

   **Has attributes**: :attr:`alpha1` … :attr:`alpha11` (complex), :attr:`delta_omega` (float),
   :attr:`constant` (complex) `α11 − (α5 + α6)/2`
   """

   def __init__(self, values, delta_omega):
      values = tuple(complex(value) for value in values)
      if len(values) != 11:
         raise Err('AlphaCoefficients.__init__()', ['need eleven values.  We got: <{}>'.format(len(values))])
      for index, value in enumerate(values):
         self.__dict__['alpha{}'.format(index + 1)] = value
      self.__dict__['delta_omega'] = float(delta_omega)
      self.__dict__['constant'] = values[10] - 0.5 * (values[4] + values[5])

   def as_tuple(self):
      return tuple(getattr(self, 'alpha{}'.format(index)) for index in range(1, 12))

   def unc1_coefficients(self):
      """ Return the generator coefficient map of the uncoupled operator (identity under `'1'`)
      """
      return {
         'K-a': 2.0 * self.alpha1,
         'K+a': 2.0 * self.alpha2,
         'K-b': 2.0 * self.alpha3,
         'K+b': 2.0 * self.alpha4,
         'K0ab': self.alpha5 + self.alpha6,
         'K-ab': self.alpha7,
         'K+ab': self.alpha10,
         'J0': self.alpha5 - self.alpha6,
         'J-': self.alpha8,
         'J+': self.alpha9,
         IDENTITY_ID: self.constant,
      }

   def scale(self):
      return max([abs(value) for value in self.as_tuple()] + [1.0])

   def __repr__(self):
      return 'AlphaCoefficients({})'.format(', '.join('{:.6g}'.format(value) for value in self.as_tuple()))

   # DEACTIVATED
   __setattr__ = _deactivated
   __delattr__ = _deactivated


def alpha_coefficients(params):
   """ Return the :class:`AlphaCoefficients` of `params`
   """
   k1, k2, k3, k4 = params.kappa
   g1, g2, g3, g4 = params.gamma
   return AlphaCoefficients((
      k1 * g1,
      k2 * g2,
      k3 * g3,
      k4 * g4,
      k1 * g2 + k2 * g1,
      k4 * g3 + k3 * g4,
      k1 * g3 + k3 * g1,
      k1 * g4 + k4 * g1,
      k2 * g3 + k3 * g2,
      k2 * g4 + k4 * g2,
      k1 * g2 + k3 * g4,
   ), params.delta_omega)


def unc1_operator(alphas, gens):
   """ Return the uncoupled operator assembled from the α combination of generators
   """
   return combine(alphas.unc1_coefficients(), gens, label='unc1')


_BETA_FIELDS = (
   ('minus_a', 'K-a'), ('plus_a', 'K+a'), ('minus_b', 'K-b'), ('plus_b', 'K+b'),
   ('zero_ab', 'K0ab'), ('minus_ab', 'K-ab'), ('plus_ab', 'K+ab'), ('minus', 'J-'), ('plus', 'J+'),
)


class BetaCoefficients(object):
   """ Coefficients after the two-mode su(1,1) stage

   **Has attributes**: :attr:`minus_a`, :attr:`plus_a`, :attr:`minus_b`, :attr:`plus_b`, :attr:`zero_ab`,
   :attr:`minus_ab`, :attr:`plus_ab`, :attr:`minus`, :attr:`plus` (complex)
   """
   fields = _BETA_FIELDS

   def __init__(self, coefficients):
      for name, generator_id in self.fields:
         self.__dict__[name] = complex(coefficients.get(generator_id, 0.0))

   def as_dict(self):
      return {name: getattr(self, name) for name, _ in self.fields}

   def distance(self, other):
      return max(abs(getattr(self, name) - getattr(other, name)) for name, _ in self.fields)

   def __repr__(self):
      return '{}({})'.format(
         self.__class__.__name__, ', '.join('{}={:.6g}'.format(name, getattr(self, name)) for name, _ in self.fields)
      )

   # DEACTIVATED
   __setattr__ = _deactivated
   __delattr__ = _deactivated


class TiltedCoefficients(BetaCoefficients):
   """ Ladder coefficients after the su(2) stage

   **Has attributes**: :attr:`minus_a`, :attr:`plus_a`, :attr:`minus_b`, :attr:`plus_b`, :attr:`minus_ab`,
   :attr:`plus_ab` (complex)
   """
   fields = (
      ('minus_a', 'K-a'), ('plus_a', 'K+a'), ('minus_b', 'K-b'), ('plus_b', 'K+b'),
      ('minus_ab', 'K-ab'), ('plus_ab', 'K+ab'),
   )


def _unit(value):
   magnitude = abs(value)
   if magnitude == 0.0:
      return 1.0 + 0.0j
   return complex(value) / magnitude


def printed_beta_coefficients(alphas, xi):
   """ Return the printed β list evaluated literally at `xi`

   The printed list equals the exact coefficients of the stage at `−ξ`.

   :param alphas: (AlphaCoefficients)
   :param xi: (complex)
   :return: (BetaCoefficients)
   """
   a1, a2, a3, a4, a5, a6, a7, a8, a9, a10, _ = alphas.as_tuple()
   u = _unit(xi)
   uc = u.conjugate()
   ch = math_cosh(2.0 * abs(xi))
   sh = math_sinh(2.0 * abs(xi))
   return BetaCoefficients({
      'K-a': a1 * (ch + 1.0) + a4 * uc * uc * (ch - 1.0) - a8 * uc * sh,
      'K+a': a2 * (ch + 1.0) + a3 * u * u * (ch - 1.0) - a9 * u * sh,
      'K-b': a3 * (ch + 1.0) + a2 * uc * uc * (ch - 1.0) - a9 * uc * sh,
      'K+b': a4 * (ch + 1.0) + a1 * u * u * (ch - 1.0) - a8 * u * sh,
      'K0ab': (a5 + a6) * ch + a7 * u * sh + a10 * uc * sh,
      'K+ab': 0.5 * (a5 + a6) * u * sh + 0.5 * a7 * u * u * (ch - 1.0) + 0.5 * a10 * (ch + 1.0),
      'K-ab': 0.5 * (a5 + a6) * uc * sh + 0.5 * a7 * (ch + 1.0) + 0.5 * a10 * uc * uc * (ch - 1.0),
      'J+': a9 * ch - a3 * u * sh - a2 * uc * sh,
      'J-': a8 * ch - a4 * uc * sh - a1 * u * sh,
   })


def printed_tilted_coefficients(beta, chi):
   """ Return the printed α′ list evaluated literally at `chi`: it equals the exact su(2) stage at `−χ`

   :param beta: (BetaCoefficients)
   :param chi: (complex)
   :return: (TiltedCoefficients)
   """
   v = _unit(chi)
   vc = v.conjugate()
   c = math_cos(2.0 * abs(chi))
   s = math_sin(2.0 * abs(chi))
   return TiltedCoefficients({
      'K-a': 0.5 * beta.minus_a * (c + 1.0) - 0.5 * beta.minus_b * vc * vc * (c - 1.0) + beta.minus_ab * vc * s,
      'K+a': 0.5 * beta.plus_a * (c + 1.0) - 0.5 * beta.plus_b * v * v * (c - 1.0) + beta.plus_ab * v * s,
      'K-b': 0.5 * beta.minus_b * (c + 1.0) - 0.5 * beta.minus_a * v * v * (c - 1.0) - beta.minus_ab * v * s,
      'K+b': 0.5 * beta.plus_b * (c + 1.0) - 0.5 * beta.plus_a * vc * vc * (c - 1.0) - beta.plus_ab * vc * s,
      'K+ab': beta.plus_ab * c - 0.5 * beta.plus_a * vc * s + 0.5 * beta.plus_b * v * s,
      'K-ab': beta.minus_ab * c - 0.5 * beta.minus_a * v * s + 0.5 * beta.minus_b * vc * s,
   })


# ===========================================================================================================================
# pipeline
# ===========================================================================================================================
class PipelineLedger(object):
   """ Record of one pipeline run

   **Has attributes**:

      - :attr:`path` (str) one of :py:data:`PIPELINE_PATHS`
      - :attr:`alphas` (AlphaCoefficients)
      - :attr:`xi`, :attr:`chi`, :attr:`xi_a`, :attr:`xi_b` (complex) stage parameters: 0 for skipped stages
      - :attr:`beta` (BetaCoefficients) exact, after the two-mode stage
      - :attr:`tilted` (TiltedCoefficients) exact, after the su(2) stage
      - :attr:`printed_beta`, :attr:`printed_tilted` printed lists evaluated at `−ξ` and `−χ`
      - :attr:`printed_angles` (dict) stage name -> (θ, φ) of the printed closed forms: complex, nan when undefined
      - :attr:`slopes` (dict) diagonal generator -> slope of the reduction(s) taken
      - :attr:`final_form` (QuadraticForm) the uncoupled form after all stages
      - :attr:`residual` (float) largest ladder coefficient left in `final_form`
      - :attr:`detuning_energy` (float) ħΔω
      - :attr:`spectator` (str) `b` or `a` when that mode is uncoupled, else empty
   """

   def __init__(self, path, alphas, stages, beta, tilted, printed_beta, printed_tilted, printed_angles, slopes,
                final_form, residual, detuning_energy, spectator):
      self.__dict__['path'] = path
      self.__dict__['alphas'] = alphas
      for name in ('xi', 'chi', 'xi_a', 'xi_b'):
         self.__dict__[name] = complex(stages.get(name, 0.0))
      self.__dict__['beta'] = beta
      self.__dict__['tilted'] = tilted
      self.__dict__['printed_beta'] = printed_beta
      self.__dict__['printed_tilted'] = printed_tilted
      self.__dict__['printed_angles'] = printed_angles
      self.__dict__['slopes'] = slopes
      self.__dict__['final_form'] = final_form
      self.__dict__['residual'] = residual
      self.__dict__['detuning_energy'] = detuning_energy
      self.__dict__['spectator'] = spectator

   def displacement_params(self):
      """ Return the `sp4r_product` TiltParameters of the whole pipeline in applied order
      """
      return TiltParameters('sp4r_product', self.xi, self.chi, self.xi_a, self.xi_b, order='pipeline')

   def uncoupled_eigenvalue(self, n, m):
      """ Return the eigenvalue `E² − (ħΔω)²` of the uncoupled operator on the tilted state |n, m⟩

      `K0ab` has eigenvalue `(n+1)/2` and `J0` has `m/2`.
      """
      coefficients = self.final_form.coefficients()
      return coefficients['K0ab'] * 0.5 * (n + 1) + coefficients['J0'] * 0.5 * m + coefficients[IDENTITY_ID]

   def printed_uncoupled_eigenvalue(self, n, m):
      """ Return `E² − (ħΔω)²` on |n, m⟩ from the reduction slopes and the constant `α11 − (α5 + α6)/2`

      On the single-mode and general paths `K0a` has eigenvalue `(n_a + ½)/2` with `n_a = (n + m)/2`.
      """
      if 'K0a' in self.slopes:
         n_a = 0.5 * (n + m)
         n_b = 0.5 * (n - m)
         return (self.slopes['K0a'] * 0.5 * (n_a + 0.5) + self.slopes['K0b'] * 0.5 * (n_b + 0.5) +
            self.alphas.constant)
      return self.slopes['K0ab'] * 0.5 * (n + 1) + self.slopes['J0'] * 0.5 * m + self.alphas.constant

   def spectrum_indices(self, n_max):
      """ Return the (n, m) labels for n ≤ n_max: one label per n when a mode is uncoupled
      """
      indices = []
      for n in range(n_max + 1):
         if self.spectator == 'b':
            indices.append((n, n))
         elif self.spectator == 'a':
            indices.append((n, -n))
         else:
            indices.extend((n, m) for m in range(-n, n + 1, 2))
      return indices

   def __repr__(self):
      return 'PipelineLedger(path={}, xi={}, chi={}, xi_a={}, xi_b={}, residual={:.3e})'.format(
         self.path, self.xi, self.chi, self.xi_a, self.xi_b, self.residual
      )

   # DEACTIVATED
   __setattr__ = _deactivated
   __delattr__ = _deactivated


def _is_small(value, scale):
   return abs(value) <= STAGE_TOLERANCE * scale


def _checked_stage(form, params, eliminated, scale, stage):
   """ Return the conjugated form and raise when the stage left the `eliminated` coefficients behind
   """
   tilted = form.conjugate(params.symplectic_matrix())
   coefficients = tilted.coefficients()
   left = max(abs(coefficients[generator_id]) for generator_id in eliminated)
   if left > STAGE_RESIDUAL * scale:
      raise Err('tilt_pipeline', [
         'stage <{}> did not remove its target coefficients'.format(stage),
         '  largest left: <{}>  scale: <{}>'.format(left, scale),
         '  parameters: <{}>'.format(params)
      ], kind='pipeline-indeterminate')
   LOG.debug('tilt_pipeline: stage %s done: %s', stage, params)
   return tilted


def _safe(func):
   try:
      return func()
   except (ZeroDivisionError, ValueError):
      return complex('nan')


def _two_mode_stage(alphas, scale):
   """ Return (ξ, printed (θ, φ)) making the J± coefficients vanish
   """
   a1, a2, a3, a4, _, _, _, a8, a9, _, _ = alphas.as_tuple()
   printed = (
      _safe(lambda: cmath_atanh(cmath_sqrt((a3 * a8 - a1 * a9) * (a4 * a9 - a2 * a8)) / (a1 * a2 - a3 * a4))),
      _safe(lambda: 0.5j * cmath_log((a4 * a9 - a2 * a8) / (a3 * a8 - a1 * a9))),
   )
   if _is_small(a8, scale) and _is_small(a9, scale):
      LOG.info('tilt_pipeline: two-mode stage skipped')
      return 0j, printed
   determinant = a3 * a4 - a1 * a2
   numerator = a2 * a8 - a4 * a9
   partner = a1 * a9 - a3 * a8
   root = cmath_sqrt(numerator * partner)
   if _is_small(root, scale * scale) or _is_small(determinant, scale * scale):
      raise Err('tilt_pipeline', [
         'two-mode stage is 0/0: J± present but the stage equations are degenerate',
         '  α3α4 − α1α2: <{}>  (α2α8 − α4α9)(α1α9 − α3α8): <{}>'.format(determinant, numerator * partner)
      ], kind='pipeline-indeterminate')
   ratio = root / determinant
   sign = 1.0
   if ratio.real < 0:
      ratio, sign = -ratio, -1.0
   if abs(ratio.imag) > 1e-9 * abs(ratio):
      raise Err('tilt_pipeline', [
         'two-mode stage needs a real tanh(2|ξ|).  We got: <{}>'.format(ratio)
      ], kind='pipeline-indeterminate')
   if ratio.real >= 1.0:
      raise Err('tilt_pipeline', [
         'two-mode stage: tanh(2|ξ|) = <{}> is outside (−1, 1)'.format(ratio.real)
      ], kind='hyperbolic-out-of-domain')
   unit = sign * numerator / root
   if abs(abs(unit) - 1.0) > 1e-9:
      raise Err('tilt_pipeline', [
         'two-mode stage has no unimodular phase: |ξ/|ξ||: <{}>'.format(abs(unit))
      ], kind='pipeline-indeterminate')
   return 0.5 * math_atanh(ratio.real) * unit / abs(unit), printed


def _su2_stage(beta, scale):
   """ Return (χ, printed (θ, φ)) making the K±ab coefficients vanish
   """
   numerator = beta.plus_ab * beta.minus_b + beta.plus_a * beta.minus_ab
   partner = beta.plus_b * beta.minus_ab + beta.plus_ab * beta.minus_a
   determinant = beta.plus_b * beta.minus_b - beta.plus_a * beta.minus_a
   printed = (
      _safe(lambda: cmath_atan(2.0 * cmath_sqrt(partner * numerator) / determinant)),
      _safe(lambda: 1j * cmath_log(cmath_sqrt(
         (beta.minus_ab * beta.plus_ab + beta.plus_a * beta.minus_ab) /
         (beta.minus_a + beta.plus_ab + beta.plus_b * beta.minus_ab)
      ))),
   )
   if _is_small(beta.plus_ab, scale) and _is_small(beta.minus_ab, scale):
      LOG.info('tilt_pipeline: su(2) stage skipped')
      return 0j, printed
   root = cmath_sqrt(numerator * partner)
   if _is_small(root, scale * scale):
      raise Err('tilt_pipeline', [
         'su(2) stage is 0/0: K±ab present but (β+ab·β−b + β+a·β−ab)(β+b·β−ab + β+ab·β−a) = 0'
      ], kind='pipeline-indeterminate')
   if abs(root.imag) > 1e-9 * abs(root):
      raise Err('tilt_pipeline', [
         'su(2) stage needs a real tan(2|χ|).  We got: <{}>'.format(root)
      ], kind='pipeline-indeterminate')
   width = root.real
   unit = numerator / width
   if width < 0:
      width, unit = -width, -unit
   if abs(abs(unit) - 1.0) > 1e-9 or abs(determinant.imag) > 1e-9 * max(abs(determinant), scale * scale):
      raise Err('tilt_pipeline', [
         'su(2) stage has no unimodular phase: |χ/|χ||: <{}>'.format(abs(unit))
      ], kind='pipeline-indeterminate')
   angle = 0.5 * math_atan2(2.0 * width, determinant.real)
   return angle * unit / abs(unit), printed


def _spectator(alphas, params):
   if params is None:
      return ''
   if not params.is_mode_b_coupled():
      return 'b'
   if not params.is_mode_a_coupled():
      return 'a'
   return ''


def _route(coefficients, scale):
   present = [generator_id for generator_id in LADDER_IDS if not _is_small(coefficients[generator_id], scale)]
   if not present:
      return 'diagonal'
   if set(present) <= {'J+', 'J-'}:
      return 'su2'
   if set(present) <= {'K+ab', 'K-ab'}:
      return 'su11_two_mode'
   if set(present) <= {'K+a', 'K-a', 'K+b', 'K-b'}:
      return 'single_mode'
   return 'general'


def tilt_pipeline(alphas, params=None):
   """ Return the :class:`PipelineLedger` that diagonalizes the uncoupled operator of `alphas`

   :param alphas: (AlphaCoefficients)
   :param params: (ModelParams) optional: supplies ħΔω and the spectator mode for the spectrum labels
   :return: (PipelineLedger)
   :raise Err:

      - `hyperbolic-out-of-domain` when a stage needs |tanh| ≥ 1
      - `pipeline-indeterminate` for degenerate or inconsistent stage equations
      - `condition-violated` on the general path with α5 ≠ α6
      - reduction errors of the routed paths
   """
   scale = alphas.scale()
   form = QuadraticForm.from_coefficients(alphas.unc1_coefficients())
   coefficients = form.coefficients()
   path = _route(coefficients, scale)
   LOG.debug('tilt_pipeline: path %s for %r', path, alphas)

   stages = {}
   slopes = {}
   printed_angles = {}
   beta = BetaCoefficients(coefficients)
   tilted = TiltedCoefficients(coefficients)
   printed_beta = beta
   printed_tilted = tilted
   j0 = coefficients['J0']
   k0ab = coefficients['K0ab']

   if path == 'diagonal':
      slopes = {'K0ab': k0ab, 'J0': j0}
   elif path == 'su2':
      reduction = reduce_su2_form(j0, coefficients['J+'], coefficients['J-'])
      stages['chi'] = reduction.value
      slopes = {'K0ab': k0ab, 'J0': reduction.slope}
      printed_angles['chi'] = (reduction.printed_theta, reduction.printed_phi)
   elif path == 'su11_two_mode':
      reduction = reduce_su11_form(k0ab, coefficients['K+ab'], coefficients['K-ab'])
      stages['xi'] = reduction.value
      slopes = {'K0ab': reduction.slope, 'J0': j0}
      printed_angles['xi'] = (reduction.printed_theta, reduction.printed_phi)
   else:
      if path == 'general':
         if abs(j0) > 1e-10 * max(abs(alphas.alpha5), abs(alphas.alpha6), 1e-300):
            raise Err('tilt_pipeline', [
               'the general path needs α5 = α6',
               '  α5: <{}>  α6: <{}>'.format(alphas.alpha5, alphas.alpha6)
            ], kind='condition-violated')
         xi, printed_angles['xi'] = _two_mode_stage(alphas, scale)
         stages['xi'] = xi
         form = _checked_stage(form, TiltParameters('su11_two_mode', xi=xi), ('J+', 'J-'), scale, 'xi')
         beta = BetaCoefficients(form.coefficients())
         printed_beta = printed_beta_coefficients(alphas, -xi)
         chi, printed_angles['chi'] = _su2_stage(beta, scale)
         stages['chi'] = chi
         form = _checked_stage(form, TiltParameters('su2', chi=chi), ('K+ab', 'K-ab', 'J+', 'J-'), scale, 'chi')
         tilted = TiltedCoefficients(form.coefficients())
         printed_tilted = printed_tilted_coefficients(beta, -chi)
      coefficients = form.coefficients()
      weight_a = coefficients['K0ab'] + coefficients['J0']
      weight_b = coefficients['K0ab'] - coefficients['J0']
      reduction_a = reduce_su11_form(weight_a, coefficients['K+a'], coefficients['K-a'], kind='su11_mode_a')
      reduction_b = reduce_su11_form(weight_b, coefficients['K+b'], coefficients['K-b'], kind='su11_mode_b')
      stages['xi_a'] = reduction_a.value
      stages['xi_b'] = reduction_b.value
      printed_angles['xi_a'] = (reduction_a.printed_theta, reduction_a.printed_phi)
      printed_angles['xi_b'] = (reduction_b.printed_theta, reduction_b.printed_phi)
      slopes = {'K0a': reduction_a.slope, 'K0b': reduction_b.slope}

   ledger_params = TiltParameters(
      'sp4r_product', stages.get('xi', 0.0), stages.get('chi', 0.0), stages.get('xi_a', 0.0), stages.get('xi_b', 0.0),
      order='pipeline'
   )
   final_form = QuadraticForm.from_coefficients(alphas.unc1_coefficients()).conjugate(ledger_params.symplectic_matrix())
   final = final_form.coefficients()
   residual = max(abs(final[generator_id]) for generator_id in LADDER_IDS)
   if residual > STAGE_RESIDUAL * scale:
      raise Err('tilt_pipeline', [
         'pipeline did not reach a diagonal form on path <{}>'.format(path),
         '  largest ladder coefficient left: <{}>  scale: <{}>'.format(residual, scale)
      ], kind='pipeline-indeterminate')
   detuning = params.detuning_energy if params is not None else alphas.delta_omega
   LOG.debug('tilt_pipeline: %s stages %s slopes %s residual %.3e', path, stages, slopes, residual)
   return PipelineLedger(
      path, alphas, stages, beta, tilted, printed_beta, printed_tilted, printed_angles, slopes, final_form, residual,
      detuning, _spectator(alphas, params)
   )


# ===========================================================================================================================
# spectrum
# ===========================================================================================================================
class SpectrumEntry(object):
   """ One closed-form level pair

   **Has attributes**: :attr:`n`, :attr:`m_n` (int), :attr:`e_plus`, :attr:`e_minus` (float), :attr:`flag` (str),
   :attr:`residual` (float, nan before matching), :attr:`oracle_match` (bool or None before matching)
   """

   def __init__(self, n, m_n, e_plus, e_minus, flag='ok', residual=float('nan'), oracle_match=None):
      if flag not in SPECTRUM_FLAGS:
         raise Err('SpectrumEntry.__init__()', [
            'flag must be any of: <{}>.  We got: <{}>'.format(', '.join(SPECTRUM_FLAGS), flag)
         ])
      self.__dict__['n'] = n
      self.__dict__['m_n'] = m_n
      self.__dict__['e_plus'] = float(e_plus)
      self.__dict__['e_minus'] = float(e_minus)
      self.__dict__['flag'] = flag
      self.__dict__['residual'] = float(residual)
      self.__dict__['oracle_match'] = oracle_match

   @property
   def is_real(self):
      return self.flag != 'non-real'

   def matched(self, residual, passed):
      """ Return a copy carrying the oracle comparison
      """
      flag = self.flag if self.flag == 'non-real' or passed else 'unmatched'
      return SpectrumEntry(self.n, self.m_n, self.e_plus, self.e_minus, flag, residual, passed)

   def __repr__(self):
      return 'SpectrumEntry(n={}, m={}, E=±{}, flag={})'.format(self.n, self.m_n, self.e_plus, self.flag)

   # DEACTIVATED
   __setattr__ = _deactivated
   __delattr__ = _deactivated


class SpectrumTable(object):
   """ Closed-form spectrum

   **Has attributes**: :attr:`entries` (tuple of SpectrumEntry), :attr:`params` (ModelParams),
   :attr:`ledger` (PipelineLedger), :attr:`n_max` (int), :attr:`oracle_eigenvalues` (tuple, empty before matching),
   :attr:`metadata` (dict)
   """

   def __init__(self, entries, params, ledger, n_max, oracle_eigenvalues=(), metadata=None):
      self.__dict__['entries'] = tuple(entries)
      self.__dict__['params'] = params
      self.__dict__['ledger'] = ledger
      self.__dict__['n_max'] = n_max
      self.__dict__['oracle_eigenvalues'] = tuple(float(value) for value in oracle_eigenvalues)
      self.__dict__['metadata'] = dict(metadata or {})

   def energies(self):
      """ Return every real closed-form energy (both signs) in entry order
      """
      values = []
      for entry in self.entries:
         if entry.is_real:
            values.extend((entry.e_plus, entry.e_minus))
      return values

   def replaced(self, entries, oracle_eigenvalues, **metadata):
      merged = dict(self.metadata)
      merged.update(metadata)
      return SpectrumTable(entries, self.params, self.ledger, self.n_max, oracle_eigenvalues, merged)

   def __len__(self):
      return len(self.entries)

   def __iter__(self):
      return iter(self.entries)

   # DEACTIVATED
   __setattr__ = _deactivated
   __delattr__ = _deactivated


def _energy_entry(n, m, squared, tol):
   squared = complex(squared)
   root = cmath_sqrt(squared)
   if squared.real < 0 or abs(squared.imag) > tol * max(abs(squared), 1.0):
      magnitude = abs(root.imag) if squared.real < 0 else abs(root)
      return SpectrumEntry(n, m, magnitude, -magnitude, 'non-real')
   value = math_sqrt(max(squared.real, 0.0))
   return SpectrumEntry(n, m, value, -value)


def closed_form_spectrum(params, n_max, tol=1e-10):
   """ Return the :class:`SpectrumTable` `E = ±√((ħΔω)² + λ(n, m))` for n ≤ n_max

   `λ` is read off the exactly conjugated final form (:py:meth:`PipelineLedger.uncoupled_eigenvalue`), not the printed
   bracket. The printed bracket built from the reduction slopes
   (:py:meth:`PipelineLedger.printed_uncoupled_eigenvalue`) is compared against it: the largest deviation is stored as
   `metadata['bracket_deviation']`.

   :param params: (ModelParams)
   :param n_max: (int) ≥ 0
   :param tol: (float) relative imaginary part accepted in `E²`
   :return: (SpectrumTable)
   :raise Err: negative n_max and pipeline errors
   """
   if not isinstance(n_max, int) or n_max < 0:
      raise Err('closed_form_spectrum', ['n_max must be an integer ≥ 0.  We got: <{}>'.format(n_max)])
   ledger = tilt_pipeline(alpha_coefficients(params), params)
   detuning_squared = params.detuning_energy ** 2
   entries = [
      _energy_entry(n, m, detuning_squared + ledger.uncoupled_eigenvalue(n, m), tol)
      for n, m in ledger.spectrum_indices(n_max)
   ]
   LOG.info('closed_form_spectrum: %d entries on path %s (%d non-real)',
      len(entries), ledger.path, len([entry for entry in entries if not entry.is_real]))
   bracket = max(
      abs(ledger.printed_uncoupled_eigenvalue(n, m) - ledger.uncoupled_eigenvalue(n, m))
      for n, m in ledger.spectrum_indices(n_max)
   )
   return SpectrumTable(entries, params, ledger, n_max, metadata={'path': ledger.path, 'bracket_deviation': bracket})


def _coupled_indices(params, basis, margin):
   max_a = basis.cutoff_a - margin if params.is_mode_a_coupled() else 0
   max_b = basis.cutoff_b - margin if params.is_mode_b_coupled() else 0
   if max_a < 0 or max_b < 0:
      raise Err('component_spectra_report', [
         'margin <{}> leaves no interior states in <{}>'.format(margin, basis)
      ], kind='cutoff-overflow')
   return sector_indices(basis, lambda n_a, n_b: n_a <= max_a and n_b <= max_b)


def component_spectra_report(params, basis, margin, count=12, tol=1e-8):
   """ Return a report comparing the interior spectra of both uncoupled components

   `(κ·)(γ·)` and `(γ·)(κ·)` share their nonzero eigenvalues, so the components differ by a re-indexing only.
   The report checks the lowest `count` nonzero eigenvalues and records the index shift that aligns the full lists.

   :param params: (ModelParams) Hermitian component operators required
   :param basis: (FockBasis)
   :param margin: (int) interior margin of the coupled modes: an uncoupled mode is pinned to its vacuum
   :param count: (int)
   :param tol: (float)
   :return: (VerificationReport) data: `component1`, `component2`, `shift`, `mismatch`
   """
   report = VerificationReport('components')
   indices = _coupled_indices(params, basis, margin)
   spectra = []
   for component in (1, 2):
      values, _ = hermitian_eigensolve(uncoupled_operator(params, basis, component).restrict(indices))
      spectra.append(values)
   first, second = spectra
   scale = max(float(numpy.max(numpy.abs(first))) if first.size else 0.0, 1.0)

   nonzero_first = [value for value in first if abs(value) > 1e-9 * scale][:count]
   nonzero_second = [value for value in second if abs(value) > 1e-9 * scale][:count]
   shared = min(len(nonzero_first), len(nonzero_second))
   mismatch = max([abs(x - y) for x, y in zip(nonzero_first[:shared], nonzero_second[:shared])] + [0.0])
   report.add('shared nonzero eigenvalues', mismatch / scale, tol, note='{} compared'.format(shared))

   best_shift = 0
   best_mismatch = float('inf')
   window = min(count, len(first), len(second))
   for shift in range(-(window // 2), window // 2 + 1):
      pairs = [(first[index], second[index + shift]) for index in range(window) if 0 <= index + shift < window]
      if not pairs:
         continue
      value = max(abs(x - y) for x, y in pairs)
      if value < best_mismatch - 1e-15:
         best_shift, best_mismatch = shift, value
   report.add_info('index shift', best_mismatch / scale, tol, note='shift={}'.format(best_shift))
   report.data['component1'] = list(first)
   report.data['component2'] = list(second)
   report.data['shift'] = best_shift
   report.data['mismatch'] = best_mismatch
   return report


# ===========================================================================================================================
# wavefunction
# ===========================================================================================================================
def _check_indices(n, m, func_name):
   if not isinstance(n, int) or not isinstance(m, int) or n < 0 or m < 0:
      raise Err(func_name, ['indices must be integers ≥ 0.  We got: <{}> <{}>'.format(n, m)])


def assoc_laguerre(n, m, x):
   """ Return `L^m_n(x)` by the three-term recurrence

   >>> assoc_laguerre(2, 0, 1.0)
   -0.5

   :raise Err: negative indices
   """
   _check_indices(n, m, 'assoc_laguerre')
   previous = 1.0
   if n == 0:
      return previous
   current = 1.0 + m - x
   for k in range(1, n):
      previous, current = current, ((2 * k + 1 + m - x) * current - (k + m) * previous) / (k + 1)
   return current


def assoc_laguerre_sum(n, m, x):
   """ Return `L^m_n(x) = Σ_i (−1)^i·C(n+m, n−i)·x^i/i!`
   """
   _check_indices(n, m, 'assoc_laguerre_sum')
   return float(sum(
      (-1) ** index * comb(n + m, n - index, exact=True) * x ** index / factorial(index, exact=True)
      for index in range(n + 1)
   ))


class WavefunctionSample(object):
   """ One evaluation of the oscillator eigenfunction

   **Has attributes**: :attr:`n_l`, :attr:`m_n` (int), :attr:`rho`, :attr:`phi` (float), :attr:`value` (complex)
   """

   def __init__(self, n_l, m_n, rho, phi, value):
      self.__dict__['n_l'] = n_l
      self.__dict__['m_n'] = m_n
      self.__dict__['rho'] = rho
      self.__dict__['phi'] = phi
      self.__dict__['value'] = value

   def __repr__(self):
      return 'WavefunctionSample(n_l={}, m_n={}, rho={}, phi={}, value={})'.format(
         self.n_l, self.m_n, self.rho, self.phi, self.value
      )

   # DEACTIVATED
   __setattr__ = _deactivated
   __delattr__ = _deactivated


def wavefunction(n_l, m_n, rho, phi, normalized=False):
   """ Return the :class:`WavefunctionSample` of
   `(1/√π)·e^{i·m·φ}·(−1)^n·√(2·n!/(n+m)!)·ρ^m·L^m_n(ρ²)·e^{−ρ²/2}`

   The printed prefactor has norm² 2 under `ρ dρ dφ`: `normalized=True` divides by √2.

   :param n_l: (int) ≥ 0
   :param m_n: (int) ≥ 0
   :param rho: (float) ≥ 0
   :param phi: (float)
   :param normalized: (bool)
   :return: (WavefunctionSample)
   :raise Err: negative index or radius
   """
   _check_indices(n_l, m_n, 'wavefunction')
   rho = float(rho)
   if rho < 0 or math_isnan(rho):
      raise Err('wavefunction', ['rho must be ≥ 0.  We got: <{}>'.format(rho)])
   log_prefactor = 0.5 * (math_log(2.0) + gammaln(n_l + 1) - gammaln(n_l + m_n + 1))
   radial = (-1) ** n_l * math_exp(log_prefactor) * rho ** m_n * assoc_laguerre(n_l, m_n, rho * rho) * \
      math_exp(-0.5 * rho * rho)
   value = complex(math_cos(m_n * phi), math_sin(m_n * phi)) * radial / math_sqrt(math_pi)
   if normalized:
      value /= math_sqrt(2.0)
   return WavefunctionSample(n_l, m_n, rho, float(phi), value)
