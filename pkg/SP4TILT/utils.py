"""
=============
SP4TILT.utils
=============

Overview
========
This module defines the project errors and a couple of helpers shared by the value classes.

Constants
=========

.. py:data:: ERROR_KINDS

    (tuple) every `kind` an :class:`Err` may carry

Classes
=======
.. autoclass:: Err
   :members: one_line

.. autoclass:: MethodDeactivatedErr


Functions
=========
.. autofunction:: snap_value
.. autofunction:: snap_coefficients
.. autofunction:: as_fraction

"""
from fractions import Fraction

from SP4TILT import TESTED_HOST_OS


ERROR_KINDS = (
   'dimension',
   'hermiticity',
   'invalid-argument',
   'cutoff-overflow',
   'hyperbolic-out-of-domain',
   'degenerate-reduction',
   'pipeline-indeterminate',
   'condition-violated',
   'config',
)


class Err(Exception):
   """ Prints an own raised Project Error

   :param error_type: (str) to specify mostly from which part the error comes: e.g. the raising function name
   :param info: (list) list of strings (text info) to print as message: each list item starts at a new line
   :param kind: (str) one of :py:data:`ERROR_KINDS`
   """
   print_banner = True

   def __init__(self, error_type, info, kind='invalid-argument'):
      """ Constructor.
      """
      Exception.__init__(self, error_type, info)
      if kind not in ERROR_KINDS:
         kind = 'invalid-argument'
      self.kind = kind
      self.error_type = error_type
      self.info = info
      self.__txt = '''

========================================================================
SP4TILT-{} ERROR ({}):


  {}

This `SP4TILT` was tested with:
  HOST OS: {}
========================================================================

'''.format(error_type, kind, '\n'.join(info), TESTED_HOST_OS)
      if Err.print_banner:
         print(self.__txt)

   def one_line(self):
      """ Return a single diagnostic line: `kind: error_type: first info line`

      :return: (str)
      """
      first = self.info[0].strip() if self.info else ''
      return '{}: {}: {}'.format(self.kind, self.error_type, first)


class MethodDeactivatedErr(Exception):
   """ Prints an own raised Deactivated Err
   """

   def __init__(self):
      """ Constructor.
      """
      Exception.__init__(self, 'Method is deactivated.')
      self.__txt = '''

========================================================================
SP4TILT-MethodDeactivated ERROR:


  Method is deactivated.

========================================================================

'''
      if Err.print_banner:
         print(self.__txt)


# noinspection PyUnusedLocal
def _deactivated(*args, **kwargs):
   """ Helper: used to raise MethodDeactivatedErr

   :param args:
   :param kwargs:
   :raise MethodDeactivatedErr:
   """
   raise MethodDeactivatedErr()


# ===========================================================================================================================
# public helpers
# ===========================================================================================================================
def snap_value(value, zero_tol=1e-12, half_tol=1e-9):
   """ Return `value` with tiny parts set to 0 and near half-integers snapped onto the half-integer grid

   Real and imaginary parts are snapped independently.

   :param value: (complex or float)
   :param zero_tol: (float) parts with magnitude below this become 0
   :param half_tol: (float) parts within this of a multiple of 1/2 are snapped
   :return: (complex)
   """
   def _snap(x):
      if abs(x) < zero_tol:
         return 0.0
      nearest = round(2.0 * x) / 2.0
      if abs(x - nearest) <= half_tol:
         return nearest
      return x

   value = complex(value)
   return complex(_snap(value.real), _snap(value.imag))


def snap_coefficients(coefficients, zero_tol=1e-12, half_tol=1e-9):
   """ Return a new coefficient map with every value snapped and zero entries dropped

   :param coefficients: (dict) id -> complex
   :param zero_tol: (float) see :py:func:`snap_value`
   :param half_tol: (float) see :py:func:`snap_value`
   :return: (dict) id -> complex: only nonzero entries
   """
   result = {}
   for key, value in coefficients.items():
      snapped = snap_value(value, zero_tol, half_tol)
      if snapped != 0:
         result[key] = snapped
   return result


def as_fraction(value):
   """ Return `value` as an exact Fraction: accepts int, Fraction, str like '3/2' or a float on the half-integer grid

   :param value: (int, Fraction, str, float)
   :return: (Fraction)
   :raise Err: float values off the quarter-integer grid
   """
   if isinstance(value, Fraction):
      return value
   if isinstance(value, (int, str)):
      return Fraction(value)
   fraction_value = Fraction(value).limit_denominator(4)
   if (4 * fraction_value).denominator != 1 or abs(float(fraction_value) - value) > 1e-12:
      raise Err('as_fraction', [
         'value must be a multiple of 1/4.  We got: <{}>'.format(value)
      ])
   return fraction_value
