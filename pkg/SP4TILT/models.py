"""
==============
SP4TILT.models
==============

Overview
========
Presets for five solvable special cases of the general Hamiltonian and their printed spectra.

   ==============  ====================================  ===========================================
   name            couplings                             printed interaction spectrum
   ==============  ====================================  ===========================================
   jc              κ1 = γ2 = κ                           ±½√((ħ(ω0−ω1))² + 4κ²(n+1))
   dirac           κ1 = γ2 = 2ic√(mωħ)                   ±√(m²c⁴ − 4ħωmc²(n+1))
   generalized_jc  κ1 = ħf*, γ1 = ħg*, κ2 = ħg, γ2 = ħf  ±√(ħ²(|g|²−|f|²)n + m²c⁴)
   mjc             κ1 = γ2 = λ1, κ3 = γ4 = λ2            ±½√((ħΔ)² + 4(λ1²+λ2²)(n/2+m/2+1))
   jc_ajc          κ1 = γ2 = λ1, κ4 = γ3 = λ2            ±½√((ħΔ′)² + 4(λ1²−λ2²)(n/2+m/2+1))
   ==============  ====================================  ===========================================

with `Δ = ω0 − ω1 − ω2` and `Δ′ = ω0 + ω2 − ω1`.

The two relativistic presets set `ω1 = ω2 = 0` and `ω0 = 2mc²/ħ`, so the two-level splitting of `H_I` is `±mc²` as
the printed spectra need.

Constants
=========

.. py:data:: PRESET_NAMES

.. py:data:: PRESET_KEYS

    (dict) preset name -> tuple of (free parameter key, default)

Classes
=======
.. autoclass:: ModelPreset

Functions
=========
.. autofunction:: preset
.. autofunction:: model_spectrum
.. autofunction:: interaction_spectrum

"""
from logging import getLogger
from math import sqrt as math_sqrt

from cmath import sqrt as cmath_sqrt

from SP4TILT.hamiltonian import ModelParams
from SP4TILT.utils import (
   Err,
   _deactivated,
)


LOG = getLogger(__name__)

PRESET_NAMES = ('jc', 'dirac', 'generalized_jc', 'mjc', 'jc_ajc')

PRESET_KEYS = {
   'jc': (('kappa', 1.0), ('omega0', 1.0), ('omega1', 1.0), ('hbar', 1.0)),
   'dirac': (('m', 1.0), ('c', 1.0), ('omega', 0.1), ('hbar', 1.0)),
   'generalized_jc': (('f', 0.3), ('g', 0.7), ('mc2', 1.0), ('hbar', 1.0)),
   'mjc': (('lambda1', 1.0), ('lambda2', 1.0), ('omega0', 2.0), ('omega1', 1.0), ('omega2', 1.0), ('hbar', 1.0)),
   'jc_ajc': (('lambda1', 2.0), ('lambda2', 0.5), ('omega0', 0.0), ('omega1', 1.0), ('omega2', 1.0), ('hbar', 1.0)),
}

SINGLE_MODE_PRESETS = ('jc', 'dirac', 'generalized_jc')


class ModelPreset(object):
   """ A named special case

   **Has attributes**:

      - :attr:`name` (str)
      - :attr:`free` (dict) free parameter values after defaults
      - :attr:`params` (ModelParams)
      - :attr:`spectrum_formula` (callable) (n, m) -> (E₊, E₋) of the printed full line
      - :attr:`interaction_formula` (callable) (n, m) -> (E₊, E₋) of the interaction part
      - :attr:`includes_h0` (bool) True when the printed full line adds H0 terms
      - :attr:`valid_index` (callable) (n, m) -> bool
      - :attr:`single_mode` (bool)
   """

   def __init__(self, name, free, params, spectrum_formula, interaction_formula, includes_h0, valid_index):
      self.__dict__['name'] = name
      self.__dict__['free'] = dict(free)
      self.__dict__['params'] = params
      self.__dict__['spectrum_formula'] = spectrum_formula
      self.__dict__['interaction_formula'] = interaction_formula
      self.__dict__['includes_h0'] = includes_h0
      self.__dict__['valid_index'] = valid_index
      self.__dict__['single_mode'] = name in SINGLE_MODE_PRESETS

   def __repr__(self):
      return 'ModelPreset({}, {})'.format(self.name, self.free)

   # DEACTIVATED
   __setattr__ = _deactivated
   __delattr__ = _deactivated


def _pair(squared):
   """ ±√squared: a negative argument gives the imaginary pair
   """
   root = cmath_sqrt(complex(squared))
   return root, -root


def _single_index(n, m):
   return isinstance(n, int) and n >= 0


def _two_mode_index(n, m):
   return isinstance(n, int) and isinstance(m, int) and n >= 0 and -n <= m <= n and (n - m) % 2 == 0


def _resolve_free(name, free):
   keys = PRESET_KEYS[name]
   known = [key for key, _ in keys]
   unknown = sorted(set(free) - set(known))
   if unknown:
      raise Err('preset', [
         'unknown free parameters for <{}>: <{}>'.format(name, ', '.join(unknown)),
         '  known: <{}>'.format(', '.join(known))
      ])
   resolved = dict(keys)
   resolved.update(free)
   return resolved


def _jc(free):
   kappa = free['kappa']
   hbar = free['hbar']
   params = ModelParams(free['omega0'], free['omega1'], 0.0, (kappa, 0, 0, 0), (0, kappa, 0, 0), hbar)
   detuning = hbar * (free['omega0'] - free['omega1'])

   def interaction(n, m):
      return tuple(0.5 * value for value in _pair(detuning ** 2 + 4.0 * abs(kappa) ** 2 * (n + 1)))

   def full(n, m):
      shift = hbar * free['omega1'] * (n + 0.5)
      return tuple(shift + value for value in interaction(n, m))

   return params, full, interaction, True, _single_index


def _dirac(free):
   m, c, omega, hbar = free['m'], free['c'], free['omega'], free['hbar']
   coupling = 2j * c * math_sqrt(m * omega * hbar)
   mc2 = m * c * c
   params = ModelParams(2.0 * mc2 / hbar, 0.0, 0.0, (coupling, 0, 0, 0), (0, coupling, 0, 0), hbar)

   def interaction(n, index):
      return _pair(mc2 ** 2 - 4.0 * hbar * omega * mc2 * (n + 1))

   return params, interaction, interaction, False, _single_index


def _generalized_jc(free):
   f, g, mc2, hbar = complex(free['f']), complex(free['g']), free['mc2'], free['hbar']
   params = ModelParams(
      2.0 * mc2 / hbar, 0.0, 0.0, (hbar * f.conjugate(), hbar * g, 0, 0), (hbar * g.conjugate(), hbar * f, 0, 0), hbar
   )

   def interaction(n, index):
      return _pair(hbar ** 2 * (abs(g) ** 2 - abs(f) ** 2) * n + mc2 ** 2)

   return params, interaction, interaction, False, _single_index


def _mjc(free):
   l1, l2, hbar = free['lambda1'], free['lambda2'], free['hbar']
   omega0, omega1, omega2 = free['omega0'], free['omega1'], free['omega2']
   params = ModelParams(omega0, omega1, omega2, (l1, 0, l2, 0), (0, l1, 0, l2), hbar)
   detuning = hbar * (omega0 - omega1 - omega2)

   def interaction(n, m):
      weight = abs(l1) ** 2 + abs(l2) ** 2
      return tuple(0.5 * value for value in _pair(detuning ** 2 + 4.0 * weight * (0.5 * n + 0.5 * m + 1.0)))

   def full(n, m):
      shift = hbar * 0.5 * (omega1 + omega2) * (n + 1) + hbar * 0.5 * (omega1 - omega2) * m
      return tuple(shift + value for value in interaction(n, m))

   return params, full, interaction, True, _two_mode_index


def _jc_ajc(free):
   l1, l2, hbar = free['lambda1'], free['lambda2'], free['hbar']
   omega0, omega1, omega2 = free['omega0'], free['omega1'], free['omega2']
   params = ModelParams(omega0, omega1, omega2, (l1, 0, 0, l2), (0, l1, l2, 0), hbar)
   printed_detuning = hbar * (omega0 + omega2 - omega1)

   def printed_interaction(n, m):
      weight = abs(l1) ** 2 - abs(l2) ** 2
      return tuple(
         0.5 * value for value in _pair(printed_detuning ** 2 + 4.0 * weight * (0.5 * n + 0.5 * m + 1.0))
      )

   def full(n, m):
      shift = hbar * 0.5 * (omega1 + omega2) * n + hbar * 0.5 * (omega1 - omega2) * (m + 1)
      return tuple(shift + value for value in printed_interaction(n, m))

   # H_I of the general form carries ħ(ω0 − ω1 − ω2)/2: the printed bracket is kept, the splitting is not
   def interaction(n, m):
      weight = abs(l1) ** 2 - abs(l2) ** 2
      return _pair(params.detuning_energy ** 2 + weight * (0.5 * n + 0.5 * m + 1.0))

   return params, full, interaction, True, _two_mode_index


_BUILDERS = {
   'jc': _jc,
   'dirac': _dirac,
   'generalized_jc': _generalized_jc,
   'mjc': _mjc,
   'jc_ajc': _jc_ajc,
}


def preset(name, **free):
   """ Return the :class:`ModelPreset` `name` with free parameters overriding :py:data:`PRESET_KEYS` defaults

   :param name: (str) one of :py:data:`PRESET_NAMES`
   :param free: free parameters
   :return: (ModelPreset)
   :raise Err: unknown name or free parameter, unphysical values
   """
   if name not in _BUILDERS:
      raise Err('preset', [
         'name must be any of: <{}>.  We got: <{}>'.format(', '.join(PRESET_NAMES), name)
      ])
   resolved = _resolve_free(name, free)
   for key in ('m', 'c', 'omega', 'hbar'):
      if key in resolved and resolved[key] < 0:
         raise Err('preset', ['<{}> must be ≥ 0.  We got: <{}>'.format(key, resolved[key])])
   params, full, interaction, includes_h0, valid_index = _BUILDERS[name](resolved)
   LOG.debug('preset %s: %r', name, params)
   return ModelPreset(name, resolved, params, full, interaction, includes_h0, valid_index)


def _evaluate(preset_value, n, m, formula, func_name):
   if m is None:
      m = n
   if not preset_value.valid_index(n, m):
      raise Err(func_name, [
         'index (n, m) = <({}, {})> is outside the index set of <{}>'.format(n, m, preset_value.name)
      ])
   e_plus, e_minus = formula(n, m)
   if abs(complex(e_plus).imag) == 0.0 and abs(complex(e_minus).imag) == 0.0:
      return complex(e_plus).real, complex(e_minus).real
   return complex(e_plus), complex(e_minus)


def model_spectrum(preset_value, n, m=None):
   """ Return the printed (E₊, E₋) including H0 terms where the printed full line adds them

   Single-mode presets ignore `m`. Values are complex when the printed root has a negative argument.

   :raise Err: index outside the preset's index set
   """
   return _evaluate(preset_value, n, m, preset_value.spectrum_formula, 'model_spectrum')


def interaction_spectrum(preset_value, n, m=None):
   """ Return the (E₊, E₋) of the interaction Hamiltonian alone
   """
   return _evaluate(preset_value, n, m, preset_value.interaction_formula, 'interaction_spectrum')
