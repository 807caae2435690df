"""
=================
SP4TILT.quadratic
=================

Overview
========
Exact 4×4 engine for quadratic boson forms.

Every element of the sp(4,R) span plus a constant is written as `vᵀ·S·v + c` with the ladder vector
`v = (a, b, a†, b†)` and `S` a complex symmetric 4×4 matrix. With `[v_i, v_j] = Ω_ij` a displacement
`D = exp(vᵀ·S_A·v)` acts linearly on the ladder vector:

   `D†·v·D = M·v` with `M = expm(2·Ω·S_A)`

so `D†·(vᵀSv)·D = vᵀ·(MᵀSM)·v` and the constant is untouched. Products of displacements multiply their `M`.

Nothing here is truncated: :mod:`SP4TILT.tilt` uses this engine for the closed-form tilting coefficients and the
Fock-space conjugation oracle checks it.

Constants
=========

.. py:data:: GENERATOR_IDS

    (tuple) the ten sp(4,R) generator ids in canonical order

.. py:data:: IDENTITY_ID

    (str) key of the identity in coefficient maps

.. py:data:: ALIAS_IDS

    (dict) derived ids accepted on input: `K0a`, `K0b` as combinations of `K0ab` and `J0`

Classes
=======
.. autoclass:: QuadraticForm
   :members: from_coefficients, coefficients, conjugate, commutator, distance, magnitude

Functions
=========
.. autofunction:: expand_aliases
.. autofunction:: symplectic_matrix
.. autofunction:: from_linear_pair

"""
from numbers import Number

import numpy

from SP4TILT.linalg import expm
from SP4TILT.utils import (
   Err,
   _deactivated,
)


GENERATOR_IDS = ('K+a', 'K-a', 'K+b', 'K-b', 'K+ab', 'K-ab', 'K0ab', 'J+', 'J-', 'J0')
IDENTITY_ID = '1'

ALIAS_IDS = {
   'K0a': {'K0ab': 0.5, 'J0': 0.5},
   'K0b': {'K0ab': 0.5, 'J0': -0.5},
}

# [v_i, v_j] for v = (a, b, a†, b†)
OMEGA = numpy.array([
   [0, 0, 1, 0],
   [0, 0, 0, 1],
   [-1, 0, 0, 0],
   [0, -1, 0, 0],
], dtype=numpy.complex128)

# generator id -> (i, j) slot of S; the coefficient is 2·S_ij
_LADDER_SLOTS = {
   'K-a': (0, 0),
   'K+a': (2, 2),
   'K-b': (1, 1),
   'K+b': (3, 3),
   'K-ab': (0, 1),
   'K+ab': (2, 3),
   'J+': (1, 2),
   'J-': (0, 3),
}


def expand_aliases(coefficients):
   """ Return a coefficient map over :py:data:`GENERATOR_IDS` and :py:data:`IDENTITY_ID` only

   :param coefficients: (dict) id -> number: ids may include :py:data:`ALIAS_IDS`
   :return: (dict) new map
   :raise Err: unknown id
   """
   result = {}
   for key, value in coefficients.items():
      if key in ALIAS_IDS:
         for target, weight in ALIAS_IDS[key].items():
            result[target] = result.get(target, 0.0) + weight * complex(value)
      elif key in GENERATOR_IDS or key == IDENTITY_ID:
         result[key] = result.get(key, 0.0) + complex(value)
      else:
         raise Err('expand_aliases', [
            'unknown generator id: <{}>'.format(key),
            '  known: <{}>'.format(', '.join(GENERATOR_IDS + (IDENTITY_ID,) + tuple(ALIAS_IDS)))
         ])
   return result


class QuadraticForm(object):
   """ The operator `vᵀ·S·v + constant`

   **Has attributes**:

      - :attr:`matrix` (numpy.ndarray) symmetric 4×4, read-only
      - :attr:`constant` (complex)

   :param matrix: (array like) 4×4: symmetrized on input
   :param constant: (number)
   :raise Err: wrong shape
   """

   def __init__(self, matrix, constant=0.0):
      """ Constructor
      """
      matrix = numpy.array(matrix, dtype=numpy.complex128)
      if matrix.shape != (4, 4):
         raise Err('QuadraticForm.__init__()', [
            'matrix must be 4×4.  We got shape: <{}>'.format(matrix.shape)
         ], kind='dimension')
      matrix = 0.5 * (matrix + matrix.T)
      matrix.flags.writeable = False
      self.__dict__['matrix'] = matrix
      self.__dict__['constant'] = complex(constant)

   @classmethod
   def from_coefficients(cls, coefficients):
      """ Return the form of a coefficient map

      :param coefficients: (dict) id -> number over generator ids, aliases and the identity
      :return: (QuadraticForm)
      """
      coefficients = expand_aliases(coefficients)
      matrix = numpy.zeros((4, 4), dtype=numpy.complex128)
      for generator_id, (i, j) in _LADDER_SLOTS.items():
         value = coefficients.get(generator_id, 0.0)
         matrix[i, j] = 0.5 * value
         matrix[j, i] = 0.5 * value
      k0 = coefficients.get('K0ab', 0.0)
      j0 = coefficients.get('J0', 0.0)
      matrix[0, 2] = matrix[2, 0] = 0.25 * (k0 + j0)
      matrix[1, 3] = matrix[3, 1] = 0.25 * (k0 - j0)
      return cls(matrix, coefficients.get(IDENTITY_ID, 0.0))

   def coefficients(self):
      """ Return the full coefficient map: every generator id plus the identity

      :return: (dict) id -> complex
      """
      matrix = self.matrix
      result = {}
      for generator_id, (i, j) in _LADDER_SLOTS.items():
         result[generator_id] = complex(2.0 * matrix[i, j])
      result['K0ab'] = complex(2.0 * (matrix[0, 2] + matrix[1, 3]))
      result['J0'] = complex(2.0 * (matrix[0, 2] - matrix[1, 3]))
      result[IDENTITY_ID] = self.constant
      return {key: result[key] for key in GENERATOR_IDS + (IDENTITY_ID,)}

   def conjugate(self, symplectic):
      """ Return `D†·self·D` for the displacement with ladder matrix `symplectic`

      :param symplectic: (numpy.ndarray) 4×4 `M` of :py:func:`symplectic_matrix`
      :return: (QuadraticForm)
      """
      return QuadraticForm(symplectic.T @ self.matrix @ symplectic, self.constant)

   def commutator(self, other):
      """ Return `[self, other]`: `vᵀ·2(SΩT − TΩS)·v` with no constant
      """
      s, t = self.matrix, other.matrix
      return QuadraticForm(2.0 * (s @ OMEGA @ t - t @ OMEGA @ s), 0.0)

   def distance(self, other):
      """ Return the max-abs difference of the two coefficient maps
      """
      mine = self.coefficients()
      theirs = other.coefficients()
      return max(abs(mine[key] - theirs[key]) for key in mine)

   def magnitude(self):
      """ Return the max-abs coefficient
      """
      return max(abs(value) for value in self.coefficients().values())

   def __add__(self, other):
      return QuadraticForm(self.matrix + other.matrix, self.constant + other.constant)

   def __sub__(self, other):
      return QuadraticForm(self.matrix - other.matrix, self.constant - other.constant)

   def __mul__(self, scalar):
      if not isinstance(scalar, Number):
         return NotImplemented
      return QuadraticForm(complex(scalar) * self.matrix, complex(scalar) * self.constant)

   __rmul__ = __mul__

   def __repr__(self):
      terms = ['{}·{}'.format(value, key) for key, value in self.coefficients().items() if abs(value) > 1e-14]
      return 'QuadraticForm({})'.format(' + '.join(terms) if terms else '0')

   # DEACTIVATED
   __setattr__ = _deactivated
   __delattr__ = _deactivated


def symplectic_matrix(exponent):
   """ Return `M = expm(2·Ω·S_A)` so that `exp(A)†·v·exp(A) = M·v`

   :param exponent: (QuadraticForm or dict) the exponent `A`: a coefficient map is converted first
   :return: (numpy.ndarray) 4×4
   """
   if isinstance(exponent, dict):
      exponent = QuadraticForm.from_coefficients(exponent)
   return expm(2.0 * OMEGA @ exponent.matrix)


def from_linear_pair(kappa, gamma):
   """ Return the product `(κ1·a + κ2·a† + κ3·b + κ4·b†)(γ1·a + γ2·a† + γ3·b + γ4·b†)` as a form

   The ordering constant `½·kᵀΩg` comes from symmetrizing the product.

   :param kappa: (sequence) κ1..κ4
   :param gamma: (sequence) γ1..γ4
   :return: (QuadraticForm)
   """
   if len(kappa) != 4 or len(gamma) != 4:
      raise Err('from_linear_pair', [
         'kappa and gamma need four entries each.  We got: <{}> <{}>'.format(len(kappa), len(gamma))
      ], kind='dimension')
   # ladder vector order (a, b, a†, b†)
   k = numpy.array([kappa[0], kappa[2], kappa[1], kappa[3]], dtype=numpy.complex128)
   g = numpy.array([gamma[0], gamma[2], gamma[1], gamma[3]], dtype=numpy.complex128)
   matrix = 0.5 * (numpy.outer(k, g) + numpy.outer(g, k))
   constant = 0.5 * complex(k @ OMEGA @ g)
   return QuadraticForm(matrix, constant)
