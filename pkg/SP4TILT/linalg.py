"""
==============
SP4TILT.linalg
==============

Overview
========
Dense complex-matrix kernels: everything downstream is built on these.

A `ComplexMatrix` is a 2-D `numpy.ndarray` of dtype complex128 with finite entries. All functions are pure: inputs are
never modified.

Functions
=========
.. autofunction:: as_matrix
.. autofunction:: identity
.. autofunction:: mat_mul
.. autofunction:: mat_add
.. autofunction:: mat_scale
.. autofunction:: adjoint
.. autofunction:: kron
.. autofunction:: commutator
.. autofunction:: norm_fro
.. autofunction:: norm_max
.. autofunction:: expm
.. autofunction:: expm_apply
.. autofunction:: hermitian_eigensolve
.. autofunction:: jacobi_eigensolve

"""
from logging import getLogger
from math import (
   ceil as math_ceil,
   log2 as math_log2,
   sqrt as math_sqrt,
)

import numpy

from SP4TILT.utils import Err


LOG = getLogger(__name__)

TAYLOR_ORDER = 18
SCALING_THRESHOLD = 0.5
JACOBI_MAX_DIMENSION = 64


def as_matrix(data, label=''):
   """ Return `data` as a 2-D complex128 array

   :param data: (array like)
   :param label: (str) used in error messages
   :return: (numpy.ndarray) complex128, 2-D
   :raise Err: not 2-D or non-finite entries
   """
   matrix = numpy.asarray(data, dtype=numpy.complex128)
   if matrix.ndim != 2:
      raise Err('as_matrix', [
         'a matrix must be 2-D: label: <{}>'.format(label),
         '  shape: <{}>'.format(matrix.shape)
      ], kind='dimension')
   if not numpy.all(numpy.isfinite(matrix)):
      raise Err('as_matrix', [
         'matrix entries must be finite (no NaN/Inf): label: <{}>'.format(label)
      ])
   return matrix


def _check_square(matrix, func_name):
   if matrix.shape[0] != matrix.shape[1]:
      raise Err(func_name, [
         'square matrix required.  We got shape: <{}>'.format(matrix.shape)
      ], kind='dimension')


def _check_same_shape(a, b, func_name):
   if a.shape != b.shape:
      raise Err(func_name, [
         'shape mismatch: <{}> vs <{}>'.format(a.shape, b.shape)
      ], kind='dimension')


def identity(dimension):
   """ Return the complex identity matrix

   :param dimension: (int)
   :return: (numpy.ndarray)
   """
   return numpy.eye(dimension, dtype=numpy.complex128)


def mat_mul(a, b):
   """ Return the matrix product `a·b`

   :param a: (numpy.ndarray)
   :param b: (numpy.ndarray)
   :return: (numpy.ndarray)
   :raise Err: inner dimensions differ
   """
   if a.shape[1] != b.shape[0]:
      raise Err('mat_mul', [
         'inner dimensions differ: <{}> · <{}>'.format(a.shape, b.shape)
      ], kind='dimension')
   return a @ b


def mat_add(a, b):
   """ Return `a + b`

   :raise Err: shapes differ
   """
   _check_same_shape(a, b, 'mat_add')
   return a + b


def mat_scale(a, scalar):
   """ Return `scalar·a`
   """
   return complex(scalar) * a


def adjoint(a):
   """ Return the conjugate transpose
   """
   return a.conj().T.copy()


def kron(a, b):
   """ Return the Kronecker product `a ⊗ b`: `a` indexes the major (outer) factor
   """
   return numpy.kron(a, b)


def commutator(a, b):
   """ Return `a·b − b·a`

   :raise Err: not square or shapes differ
   """
   _check_same_shape(a, b, 'commutator')
   _check_square(a, 'commutator')
   return a @ b - b @ a


def norm_fro(a):
   """ Return the Frobenius norm
   """
   return float(numpy.linalg.norm(a))


def norm_max(a):
   """ Return the max-entry norm `max |a_ij|`: 0.0 for empty input
   """
   if a.size == 0:
      return 0.0
   return float(numpy.max(numpy.abs(a)))


def _norm_bound(a):
   """ Return √(‖a‖₁·‖a‖∞): an upper bound of the spectral norm
   """
   if a.size == 0:
      return 0.0
   abs_a = numpy.abs(a)
   return math_sqrt(float(abs_a.sum(axis=0).max()) * float(abs_a.sum(axis=1).max()))


# ===========================================================================================================================
# exponentials
# ===========================================================================================================================
def expm(a):
   """ Return the matrix exponential by scaling and squaring

   The Taylor polynomial of order :py:data:`TAYLOR_ORDER` is evaluated by Horner's rule on `a/2^s` with
   `s` the smallest integer so that the scaled norm bound is ≤ :py:data:`SCALING_THRESHOLD`; the result is then squared
   `s` times.

   :param a: (numpy.ndarray) square
   :return: (numpy.ndarray)
   :raise Err: non-square input
   """
   a = as_matrix(a, 'expm')
   _check_square(a, 'expm')
   dimension = a.shape[0]
   norm = _norm_bound(a)
   squarings = 0
   if norm > SCALING_THRESHOLD:
      squarings = int(math_ceil(math_log2(norm / SCALING_THRESHOLD)))
   scaled = a / 2.0 ** squarings

   coefficients = [1.0]
   for index in range(TAYLOR_ORDER):
      coefficients.append(coefficients[-1] / (index + 1))

   eye = identity(dimension)
   result = eye * coefficients[TAYLOR_ORDER]
   for index in range(TAYLOR_ORDER - 1, -1, -1):
      result = scaled @ result
      result += eye * coefficients[index]

   for _ in range(squarings):
      result = result @ result
   return result


def expm_apply(a, vectors):
   """ Return `expm(a)·vectors` without forming `expm(a)`

   Taylor time stepping: the exponent is split into equal steps with norm bound ≤ :py:data:`SCALING_THRESHOLD` and
   each step applies the order :py:data:`TAYLOR_ORDER` polynomial to the block of vectors.

   :param a: (numpy.ndarray) square
   :param vectors: (numpy.ndarray) 1-D vector or 2-D block of column vectors
   :return: (numpy.ndarray) same shape as `vectors`
   :raise Err: shape mismatch
   """
   a = as_matrix(a, 'expm_apply')
   _check_square(a, 'expm_apply')
   block = numpy.array(vectors, dtype=numpy.complex128)
   if block.shape[0] != a.shape[0]:
      raise Err('expm_apply', [
         'vector length differs from the matrix dimension: <{}> vs <{}>'.format(block.shape, a.shape)
      ], kind='dimension')
   steps = max(1, int(math_ceil(_norm_bound(a) / SCALING_THRESHOLD)))
   step = a / steps
   for _ in range(steps):
      term = block
      total = block.copy()
      for order in range(1, TAYLOR_ORDER + 1):
         term = (step @ term) / order
         total += term
      block = total
   return block


# ===========================================================================================================================
# Hermitian eigensolver
# ===========================================================================================================================
def jacobi_eigensolve(a, tol=1e-14, max_sweeps=60):
   """ Return unsorted (eigenvalues, eigenvectors) of a Hermitian matrix by cyclic complex Jacobi rotations

   Each pivot `a_pq = r·e^{iφ}` is removed with the unitary `[[c, s], [−s·e^{−iφ}, c·e^{−iφ}]]` acting on
   columns/rows p, q: the phase factor turns the 2×2 block real symmetric and the real rotation zeroes it.

   :param a: (numpy.ndarray) Hermitian
   :param tol: (float) stop when the off-diagonal Frobenius mass ≤ tol·‖a‖_F
   :param max_sweeps: (int)
   :return: (tuple) eigenvalues (numpy.ndarray real), eigenvectors (columns)
   """
   work = numpy.array(a, dtype=numpy.complex128)
   dimension = work.shape[0]
   vectors = identity(dimension)
   scale = norm_fro(work) or 1.0

   for _ in range(max_sweeps):
      off_diagonal = work - numpy.diag(numpy.diag(work))
      if norm_fro(off_diagonal) <= tol * scale:
         break
      for p in range(dimension - 1):
         for q in range(p + 1, dimension):
            pivot = work[p, q]
            radius = abs(pivot)
            if radius <= tol * scale * 1e-3:
               continue
            phase = pivot / radius
            theta = (work[q, q].real - work[p, p].real) / (2.0 * radius)
            sign = 1.0 if theta >= 0.0 else -1.0
            t = sign / (abs(theta) + math_sqrt(theta * theta + 1.0))
            c = 1.0 / math_sqrt(t * t + 1.0)
            s = t * c
            rotation = numpy.array([[c, s], [-s * phase.conjugate(), c * phase.conjugate()]], dtype=numpy.complex128)
            pair = [p, q]
            work[:, pair] = work[:, pair] @ rotation
            work[pair, :] = rotation.conj().T @ work[pair, :]
            vectors[:, pair] = vectors[:, pair] @ rotation
   else:
      LOG.warning('jacobi_eigensolve: no convergence after %d sweeps (dimension %d)', max_sweeps, dimension)

   return numpy.real(numpy.diag(work)).copy(), vectors


def hermitian_eigensolve(a, method='auto'):
   """ Return (eigenvalues ascending, eigenvectors as columns) of a Hermitian matrix

   :param a: (numpy.ndarray) must satisfy ‖a − a†‖_max ≤ 1e−10·‖a‖_max
   :param method: (str) `jacobi`, `lapack` or `auto` (Jacobi up to :py:data:`JACOBI_MAX_DIMENSION`, LAPACK above)
   :return: (tuple) eigenvalues (numpy.ndarray float), eigenvectors (numpy.ndarray)
   :raise Err: non-square, non-Hermitian or unknown method
   """
   a = as_matrix(a, 'hermitian_eigensolve')
   _check_square(a, 'hermitian_eigensolve')
   deviation = norm_max(a - a.conj().T)
   if deviation > 1e-10 * norm_max(a):
      raise Err('hermitian_eigensolve', [
         'matrix is not Hermitian within tolerance',
         '  ‖A − A†‖_max: <{}>  ‖A‖_max: <{}>'.format(deviation, norm_max(a))
      ], kind='hermiticity')
   if a.shape[0] == 0:
      return numpy.zeros(0), identity(0)

   hermitian = 0.5 * (a + a.conj().T)
   if method == 'auto':
      method = 'jacobi' if a.shape[0] <= JACOBI_MAX_DIMENSION else 'lapack'

   if method == 'jacobi':
      eigenvalues, eigenvectors = jacobi_eigensolve(hermitian)
   elif method == 'lapack':
      eigenvalues, eigenvectors = numpy.linalg.eigh(hermitian)
   else:
      raise Err('hermitian_eigensolve', [
         'method must be any of: auto, jacobi, lapack.  We got: <{}>'.format(method)
      ])

   order = numpy.argsort(eigenvalues, kind='stable')
   return eigenvalues[order], eigenvectors[:, order]
