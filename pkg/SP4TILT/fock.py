"""
============
SP4TILT.fock
============

Overview
========
The truncated two-mode Fock basis and the bosonic creation/annihilation operator matrices.

The basis is rectangular: `n_a ∈ [0, cutoff_a]`, `n_b ∈ [0, cutoff_b]`, ordered `n_a` major and `n_b` minor.
Operators acting on spin ⊗ Fock use the spin-major block layout: the upper block is spinor component 1.

.. note:: after the initialization :class:`FockBasis` and :class:`OperatorMatrix` are unchangeable

Classes
=======
.. autoclass:: FockBasis
   :members: index, state

.. autoclass:: OperatorMatrix
   :members: dagger, apply, restrict, is_hermitian, with_label, commutator

Functions
=========
.. autofunction:: build_basis
.. autofunction:: lowering_matrix
.. autofunction:: boson_operators
.. autofunction:: number_operators
.. autofunction:: pauli_matrices
.. autofunction:: spin_operator
.. autofunction:: spin_lift
.. autofunction:: basis_vector
.. autofunction:: interior_indices
.. autofunction:: interior_projector
.. autofunction:: sector_indices
.. autofunction:: projector_from_indices

"""
from math import sqrt as math_sqrt
from numbers import Number

import numpy

from SP4TILT.linalg import (
   as_matrix,
   identity,
   kron,
)
from SP4TILT.utils import (
   Err,
   _deactivated,
)


class FockBasis(object):
   """ Two-mode occupation basis under a rectangular cutoff

   **Has attributes**:

      - :attr:`cutoff_a` (int) max occupation of mode a
      - :attr:`cutoff_b` (int) max occupation of mode b
      - :attr:`states` (tuple) of (n_a, n_b) in index order
      - :attr:`dimension` (int) (cutoff_a+1)·(cutoff_b+1)

   :param cutoff_a: (int) ≥ 1
   :param cutoff_b: (int) ≥ 1
   :raise Err:
   """

   def __init__(self, cutoff_a, cutoff_b):
      """ Constructor
      """
      for name, cutoff in (('cutoff_a', cutoff_a), ('cutoff_b', cutoff_b)):
         if not isinstance(cutoff, int) or isinstance(cutoff, bool) or cutoff < 1:
            raise Err('FockBasis.__init__()', [
               '{} must be an integer ≥ 1.  We got: <{}>'.format(name, cutoff)
            ])
      self.__dict__['cutoff_a'] = cutoff_a
      self.__dict__['cutoff_b'] = cutoff_b
      self.__dict__['states'] = tuple(
         (n_a, n_b) for n_a in range(cutoff_a + 1) for n_b in range(cutoff_b + 1)
      )
      self.__dict__['dimension'] = (cutoff_a + 1) * (cutoff_b + 1)

   def index(self, n_a, n_b):
      """ Return the index of |n_a, n_b⟩

      :raise Err: occupation outside the cutoff (`cutoff-overflow`)
      """
      if not (0 <= n_a <= self.cutoff_a and 0 <= n_b <= self.cutoff_b):
         raise Err('FockBasis.index()', [
            'occupation outside the basis: (n_a, n_b): <({}, {})>'.format(n_a, n_b),
            '  cutoffs: <({}, {})>'.format(self.cutoff_a, self.cutoff_b)
         ], kind='cutoff-overflow')
      return n_a * (self.cutoff_b + 1) + n_b

   def state(self, index):
      """ Return (n_a, n_b) of a basis index
      """
      return self.states[index]

   def __eq__(self, other):
      return isinstance(other, FockBasis) and (self.cutoff_a, self.cutoff_b) == (other.cutoff_a, other.cutoff_b)

   def __ne__(self, other):
      return not self.__eq__(other)

   def __hash__(self):
      return hash((self.cutoff_a, self.cutoff_b))

   def __repr__(self):
      return 'FockBasis({}, {})'.format(self.cutoff_a, self.cutoff_b)

   # DEACTIVATED
   __setattr__ = _deactivated
   __delattr__ = _deactivated


class OperatorMatrix(object):
   """ Dense complex matrix tagged with its basis

   **Has attributes**:

      - :attr:`matrix` (numpy.ndarray) read-only complex128 matrix
      - :attr:`basis` (FockBasis)
      - :attr:`spin_factor` (bool) True when acting on spin ⊗ Fock
      - :attr:`label` (str)

   :param matrix: (array like) dimension must equal the basis dimension (×2 with spin_factor)
   :param basis: (FockBasis)
   :param spin_factor: (bool)
   :param label: (str)
   :raise Err:
   """

   def __init__(self, matrix, basis, spin_factor=False, label=''):
      """ Constructor
      """
      matrix = numpy.array(as_matrix(matrix, label), copy=True)
      expected = basis.dimension * (2 if spin_factor else 1)
      if matrix.shape != (expected, expected):
         raise Err('OperatorMatrix.__init__()', [
            'matrix shape does not match the basis: label: <{}>'.format(label),
            '  shape: <{}> expected: <({}, {})>'.format(matrix.shape, expected, expected)
         ], kind='dimension')
      matrix.flags.writeable = False
      self.__dict__['matrix'] = matrix
      self.__dict__['basis'] = basis
      self.__dict__['spin_factor'] = bool(spin_factor)
      self.__dict__['label'] = label

   @property
   def dimension(self):
      return self.matrix.shape[0]

   def _check_compatible(self, other, func_name):
      if self.basis != other.basis or self.spin_factor != other.spin_factor:
         raise Err(func_name, [
            'operators live on different spaces: <{}> vs <{}>'.format(self.label, other.label),
            '  bases: <{}> vs <{}>  spin: <{}> vs <{}>'.format(
               self.basis, other.basis, self.spin_factor, other.spin_factor
            )
         ], kind='dimension')

   def _new(self, matrix, label):
      return OperatorMatrix(matrix, self.basis, self.spin_factor, label)

   def __matmul__(self, other):
      if isinstance(other, OperatorMatrix):
         self._check_compatible(other, 'OperatorMatrix.__matmul__()')
         return self._new(self.matrix @ other.matrix, '({})({})'.format(self.label, other.label))
      return self.apply(other)

   def __add__(self, other):
      self._check_compatible(other, 'OperatorMatrix.__add__()')
      return self._new(self.matrix + other.matrix, '{} + {}'.format(self.label, other.label))

   def __sub__(self, other):
      self._check_compatible(other, 'OperatorMatrix.__sub__()')
      return self._new(self.matrix - other.matrix, '{} - {}'.format(self.label, other.label))

   def __neg__(self):
      return self._new(-self.matrix, '-({})'.format(self.label))

   def __mul__(self, scalar):
      if not isinstance(scalar, Number):
         return NotImplemented
      return self._new(complex(scalar) * self.matrix, '{}·({})'.format(scalar, self.label))

   __rmul__ = __mul__

   def dagger(self):
      """ Return the adjoint operator
      """
      return self._new(self.matrix.conj().T, '({})†'.format(self.label))

   def commutator(self, other):
      """ Return [self, other]
      """
      self._check_compatible(other, 'OperatorMatrix.commutator()')
      return self._new(
         self.matrix @ other.matrix - other.matrix @ self.matrix, '[{}, {}]'.format(self.label, other.label)
      )

   def apply(self, vector):
      """ Return `matrix·vector` (vector or block of column vectors)

      :raise Err: length mismatch
      """
      vector = numpy.asarray(vector, dtype=numpy.complex128)
      if vector.shape[0] != self.dimension:
         raise Err('OperatorMatrix.apply()', [
            'vector length <{}> differs from operator dimension <{}>: <{}>'.format(
               vector.shape[0], self.dimension, self.label
            )
         ], kind='dimension')
      return self.matrix @ vector

   def restrict(self, indices):
      """ Return the sub-block `matrix[indices][:, indices]` as plain array
      """
      indices = list(indices)
      return self.matrix[numpy.ix_(indices, indices)]

   def is_hermitian(self, tol=1e-10):
      """ Return True if ‖A − A†‖_max ≤ tol·max(‖A‖_max, 1)
      """
      scale = max(float(numpy.max(numpy.abs(self.matrix))) if self.matrix.size else 0.0, 1.0)
      return float(numpy.max(numpy.abs(self.matrix - self.matrix.conj().T))) <= tol * scale

   def with_label(self, label):
      """ Return the same operator with a new label
      """
      return self._new(self.matrix, label)

   def __repr__(self):
      return 'OperatorMatrix(<{}>, {}, spin={})'.format(self.label, self.basis, self.spin_factor)

   # DEACTIVATED
   __setattr__ = _deactivated
   __delattr__ = _deactivated


# ===========================================================================================================================
# construction
# ===========================================================================================================================
def build_basis(cutoff_a, cutoff_b):
   """ Return the two-mode basis with rectangular cutoff

   :param cutoff_a: (int) ≥ 1
   :param cutoff_b: (int) ≥ 1
   :return: (FockBasis)
   :raise Err: zero or negative cutoff
   """
   return FockBasis(cutoff_a, cutoff_b)


def lowering_matrix(cutoff):
   """ Return the single-mode annihilation matrix with ⟨n−1|a|n⟩ = √n

   :param cutoff: (int) max occupation
   :return: (numpy.ndarray) (cutoff+1)×(cutoff+1)
   """
   matrix = numpy.zeros((cutoff + 1, cutoff + 1), dtype=numpy.complex128)
   for n in range(1, cutoff + 1):
      matrix[n - 1, n] = math_sqrt(n)
   return matrix


def boson_operators(basis):
   """ Return (a, a†, b, b†) on the basis

   :param basis: (FockBasis)
   :return: (tuple) of OperatorMatrix
   """
   eye_a = identity(basis.cutoff_a + 1)
   eye_b = identity(basis.cutoff_b + 1)
   a = kron(lowering_matrix(basis.cutoff_a), eye_b)
   b = kron(eye_a, lowering_matrix(basis.cutoff_b))
   return (
      OperatorMatrix(a, basis, label='a'),
      OperatorMatrix(a.conj().T, basis, label='a†'),
      OperatorMatrix(b, basis, label='b'),
      OperatorMatrix(b.conj().T, basis, label='b†'),
   )


def number_operators(basis):
   """ Return (a†a, b†b) as exact integer diagonals

   `a† @ a` carries `√n·√n` rounding; commutators with the number operators need the exact occupations.

   :param basis: (FockBasis)
   :return: (tuple) of OperatorMatrix
   """
   occupations = numpy.array(basis.states, dtype=numpy.float64).reshape(-1, 2)
   return (
      OperatorMatrix(numpy.diag(occupations[:, 0]), basis, label='a†a'),
      OperatorMatrix(numpy.diag(occupations[:, 1]), basis, label='b†b'),
   )


def pauli_matrices():
   """ Return (σ0, σ+, σ−) with σ0 = diag(1, −1)

   :return: (tuple) of 2×2 numpy.ndarray
   """
   sigma_0 = numpy.array([[1, 0], [0, -1]], dtype=numpy.complex128)
   sigma_plus = numpy.array([[0, 1], [0, 0]], dtype=numpy.complex128)
   sigma_minus = numpy.array([[0, 0], [1, 0]], dtype=numpy.complex128)
   return sigma_0, sigma_plus, sigma_minus


def spin_operator(sigma, basis, label=''):
   """ Return σ ⊗ I on spin ⊗ Fock
   """
   return OperatorMatrix(kron(sigma, identity(basis.dimension)), basis, spin_factor=True, label=label)


def spin_lift(operator, sigma=None):
   """ Return σ ⊗ operator (σ defaults to I₂) on spin ⊗ Fock

   :param operator: (OperatorMatrix) Fock-only operator
   :param sigma: (numpy.ndarray) 2×2 or None
   :return: (OperatorMatrix)
   """
   if operator.spin_factor:
      raise Err('spin_lift', [
         'operator already acts on spin ⊗ Fock: <{}>'.format(operator.label)
      ], kind='dimension')
   if sigma is None:
      sigma = identity(2)
   return OperatorMatrix(kron(sigma, operator.matrix), operator.basis, spin_factor=True, label=operator.label)


def basis_vector(basis, n_a, n_b):
   """ Return the column vector of |n_a, n_b⟩

   :raise Err: occupation outside the cutoff
   """
   vector = numpy.zeros(basis.dimension, dtype=numpy.complex128)
   vector[basis.index(n_a, n_b)] = 1.0
   return vector


def interior_indices(basis, margin, margin_b=None):
   """ Return indices of states with n_a ≤ cutoff_a − margin and n_b ≤ cutoff_b − margin_b

   :param basis: (FockBasis)
   :param margin: (int) margin of mode a (and of mode b when `margin_b` is None)
   :param margin_b: (int) optional own margin of mode b
   :return: (list) of int
   :raise Err: margin negative or not below the cutoff
   """
   if margin_b is None:
      margin_b = margin
   for name, value, cutoff in (('margin', margin, basis.cutoff_a), ('margin_b', margin_b, basis.cutoff_b)):
      if not isinstance(value, int) or value < 0 or value >= cutoff:
         raise Err('interior_indices', [
            '{} must be an integer in [0, cutoff).  We got: <{}> cutoff: <{}>'.format(name, value, cutoff)
         ])
   max_a = basis.cutoff_a - margin
   max_b = basis.cutoff_b - margin_b
   return [index for index, (n_a, n_b) in enumerate(basis.states) if n_a <= max_a and n_b <= max_b]


def projector_from_indices(basis, indices, label='P'):
   """ Return the diagonal orthogonal projector onto the given basis indices
   """
   diagonal = numpy.zeros(basis.dimension, dtype=numpy.complex128)
   diagonal[list(indices)] = 1.0
   return OperatorMatrix(numpy.diag(diagonal), basis, label=label)


def interior_projector(basis, margin, margin_b=None):
   """ Return the orthogonal projector onto the interior subspace

   :param basis: (FockBasis)
   :param margin: (int) see :py:func:`interior_indices`
   :param margin_b: (int) see :py:func:`interior_indices`
   :return: (OperatorMatrix)
   :raise Err: margin too large
   """
   return projector_from_indices(
      basis, interior_indices(basis, margin, margin_b), label='P(margin={})'.format(margin)
   )


def sector_indices(basis, predicate):
   """ Return indices of states with `predicate(n_a, n_b)` True: e.g. a fixed N_d or N_s sector

   :param basis: (FockBasis)
   :param predicate: (callable) (n_a, n_b) -> bool
   :return: (list) of int
   """
   return [index for index, (n_a, n_b) in enumerate(basis.states) if predicate(n_a, n_b)]
