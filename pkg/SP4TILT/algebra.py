"""
===============
SP4TILT.algebra
===============

Overview
========
The ten sp(4,R) generators in the two-mode boson realization, their Casimirs and number operators, the printed
4×4 matrix representation and the checks of the commutation table, ladder shifts and state constructions.

Generator ids (see :py:data:`SP4TILT.quadratic.GENERATOR_IDS`)::

   K+a  = a†²/2         K-a  = a²/2
   K+b  = b†²/2         K-b  = b²/2
   K+ab = a†b†          K-ab = ab            K0ab = (a†a + b†b + 1)/2
   J+   = a†b           J-   = b†a           J0   = (a†a − b†b)/2

Coefficient maps (dict: id -> number) use the same ids plus `'1'` for the identity.

.. note:: the printed commutation table is a claim under test: entries that disagree with the boson expansion are
   listed as deviations, the derived values are used everywhere downstream.

Classes
=======
.. autoclass:: GeneratorSet
   :members: ids

.. autoclass:: Sp4rLabels
   :members: exponents

Functions
=========
.. autofunction:: build_generators
.. autofunction:: combine
.. autofunction:: format_coefficients
.. autofunction:: su11_casimir
.. autofunction:: su2_casimir
.. autofunction:: projector_indices
.. autofunction:: expand_in_span
.. autofunction:: derived_commutator
.. autofunction:: printed_commutator
.. autofunction:: verify_commutation_table
.. autofunction:: matrix_rep_4x4
.. autofunction:: matrix_rep_4x4_report
.. autofunction:: ladder_shift_report
.. autofunction:: discrete_representation_report
.. autofunction:: ladder_power_norm_report
.. autofunction:: lowest_state
.. autofunction:: sp4r_state
.. autofunction:: quantum_number_map

"""
from fractions import Fraction
from logging import getLogger
from math import (
   exp as math_exp,
   sqrt as math_sqrt,
)

import numpy
from scipy.special import gammaln

from SP4TILT.fock import (
   OperatorMatrix,
   basis_vector,
   boson_operators,
   interior_indices,
   number_operators,
   pauli_matrices,
   sector_indices,
)
from SP4TILT.linalg import (
   identity,
   norm_fro,
)
from SP4TILT.quadratic import (
   ALIAS_IDS,
   GENERATOR_IDS,
   IDENTITY_ID,
   QuadraticForm,
   expand_aliases,
)
from SP4TILT.report import VerificationReport
from SP4TILT.utils import (
   Err,
   _deactivated,
   as_fraction,
   snap_coefficients,
)


LOG = getLogger(__name__)

# (Δn, Δm) with n = n_a + n_b and m = n_a − n_b
LADDER_SHIFTS = {
   'K+a': (2, 2),
   'K-a': (-2, -2),
   'K+b': (2, -2),
   'K-b': (-2, 2),
   'K+ab': (2, 0),
   'K-ab': (-2, 0),
   'K0ab': (0, 0),
   'J+': (0, 2),
   'J-': (0, -2),
   'J0': (0, 0),
}

LOWERING_IDS = ('K-a', 'K-b', 'K-ab', 'J-')

# [row, column] entries as printed: row operator first
PRINTED_TABLE = {
   ('K+a', 'K-a'): {'K0ab': -0.5, 'J0': -0.5},
   ('K+a', 'K-b'): {},
   ('K+a', 'K-ab'): {'J+': -1.0},
   ('K+a', 'J+'): {},
   ('K+a', 'J0'): {'K+a': -1.0},
   ('K+a', 'J-'): {'K+ab': -1.0},

   ('K+b', 'K-a'): {},
   ('K+b', 'K-b'): {'K0ab': -0.5, 'J0': 0.5},
   ('K+b', 'K-ab'): {'J-': -1.0},
   ('K+b', 'J+'): {'K+ab': -1.0},
   ('K+b', 'J0'): {'K+b': -1.0},
   ('K+b', 'J-'): {},

   ('K+ab', 'K-a'): {'J-': -1.0},
   ('K+ab', 'K-b'): {'J+': -1.0},
   ('K+ab', 'K-ab'): {'K0ab': -2.0},
   ('K+ab', 'J+'): {'K+a': -2.0},
   ('K+ab', 'J0'): {},
   ('K+ab', 'J-'): {'K+b': -2.0},

   ('J+', 'K-a'): {'K-ab': -1.0},
   ('J+', 'K-b'): {},
   ('J+', 'K-ab'): {'K-b': -2.0},
   ('J+', 'J0'): {'J+': -1.0},
   ('J+', 'J-'): {'J0': 2.0},

   ('J0', 'K-a'): {'K-a': -1.0},
   ('J0', 'K-b'): {'K-b': 1.0},
   ('J0', 'K-ab'): {},
   ('J0', 'J+'): {'J+': 1.0},
   ('J0', 'J-'): {'J-': -1.0},

   ('J-', 'K-a'): {},
   ('J-', 'K-b'): {'K-ab': -1.0},
   ('J-', 'K-ab'): {'K-a': -2.0},
   ('J-', 'J+'): {'J0': -2.0},
   ('J-', 'J0'): {'J-': 1.0},
}

# the relations stated for K0ab in prose
K0AB_RELATIONS = {
   'K+a': {'K+a': 1.0},
   'K-a': {'K-a': -1.0},
   'K+b': {'K+b': 1.0},
   'K-b': {'K-b': -1.0},
   'K+ab': {'K+ab': 1.0},
   'K-ab': {'K-ab': -1.0},
   'J+': {},
   'J-': {},
   'J0': {},
}

WORKED_ENTRY = (('K+ab', 'K-a'), {'J-': -1.0})


def format_coefficients(coefficients, digits=12):
   """ Return a deterministic one-line rendering of a coefficient map: ids in canonical order

   >>> format_coefficients({'J0': 1.0, 'K0ab': -0.5})
   '-0.5·K0ab + 1·J0'
   >>> format_coefficients({})
   '0'

   :param coefficients: (dict)
   :param digits: (int) significant digits
   :return: (str)
   """
   template = '{:.' + str(digits) + 'g}'
   terms = []
   for key in GENERATOR_IDS + (IDENTITY_ID,) + tuple(ALIAS_IDS):
      if key not in coefficients:
         continue
      value = complex(coefficients[key])
      if value == 0:
         continue
      if value.imag == 0:
         text = template.format(value.real)
      elif value.real == 0:
         text = (template + 'j').format(value.imag)
      else:
         text = '(' + template.format(value.real) + ('+' if value.imag > 0 else '-') + \
                template.format(abs(value.imag)) + 'j)'
      terms.append('{}·{}'.format(text, key))
   return ' + '.join(terms) if terms else '0'


class GeneratorSet(object):
   """ The sp(4,R) generators and auxiliary operators on one Fock basis

   **Has attributes**:

      - :attr:`basis` (FockBasis)
      - :attr:`operators` (dict) generator id -> OperatorMatrix for the ten :py:data:`GENERATOR_IDS`
      - :attr:`identity`, :attr:`K0a`, :attr:`K0b`, :attr:`N`, :attr:`N_s`, :attr:`N_d` (OperatorMatrix)
      - Casimirs :attr:`K2_a`, :attr:`K2_b`, :attr:`K2_ab`, :attr:`J2`, :attr:`K2` (OperatorMatrix)

   Item access accepts generator ids, `K0a`, `K0b` and `'1'`.

   .. note:: `K2_a` and `K2_b` use the normal ordered generic form `K0² − K0 − K+K−` which is exact on the whole
      truncated space: the symmetric form loses `K−K+` at the top two occupations.

   :param basis: (FockBasis)
   """

   def __init__(self, basis):
      """ Constructor
      """
      a, a_dag, b, b_dag = boson_operators(basis)
      eye = OperatorMatrix(identity(basis.dimension), basis, label='1')
      n_a, n_b = number_operators(basis)

      operators = {
         'K+a': (a_dag @ a_dag) * 0.5,
         'K-a': (a @ a) * 0.5,
         'K+b': (b_dag @ b_dag) * 0.5,
         'K-b': (b @ b) * 0.5,
         'K+ab': a_dag @ b_dag,
         'K-ab': a @ b,
         'K0ab': (n_a + n_b + eye) * 0.5,
         'J+': a_dag @ b,
         'J-': b_dag @ a,
         'J0': (n_a - n_b) * 0.5,
      }
      operators = {key: operators[key].with_label(key) for key in GENERATOR_IDS}

      k0a = ((n_a + eye * 0.5) * 0.5).with_label('K0a')
      k0b = ((n_b + eye * 0.5) * 0.5).with_label('K0b')
      total = (n_a + n_b).with_label('N')
      difference = (n_b - n_a).with_label('N_d')

      self.__dict__['basis'] = basis
      self.__dict__['operators'] = operators
      self.__dict__['identity'] = eye
      self.__dict__['K0a'] = k0a
      self.__dict__['K0b'] = k0b
      self.__dict__['N'] = total
      self.__dict__['N_s'] = total.with_label('N_s')
      self.__dict__['N_d'] = difference
      self.__dict__['K2_a'] = (k0a @ k0a - k0a - operators['K+a'] @ operators['K-a']).with_label('K2_a')
      self.__dict__['K2_b'] = (k0b @ k0b - k0b - operators['K+b'] @ operators['K-b']).with_label('K2_b')
      # number-operator Casimirs are diagonal: built from the occupations, not from products
      occupation_a = n_a.matrix.diagonal().real
      occupation_b = n_b.matrix.diagonal().real
      total_values = occupation_a + occupation_b
      self.__dict__['K2_ab'] = OperatorMatrix(
         numpy.diag(0.25 * (occupation_a - occupation_b) ** 2 - 0.25), basis, label='K2_ab'
      )
      self.__dict__['J2'] = OperatorMatrix(numpy.diag(0.25 * total_values * (total_values + 2.0)), basis, label='J2')
      self.__dict__['K2'] = OperatorMatrix(
         numpy.diag(0.25 * (occupation_b - occupation_a) ** 2 - 0.25), basis, label='K2'
      )

   def __getitem__(self, key):
      if key in self.operators:
         return self.operators[key]
      if key == 'K0a':
         return self.K0a
      if key == 'K0b':
         return self.K0b
      if key == IDENTITY_ID:
         return self.identity
      raise Err('GeneratorSet.__getitem__()', [
         'unknown generator id: <{}>'.format(key),
         '  known: <{}>'.format(', '.join(GENERATOR_IDS + ('K0a', 'K0b', IDENTITY_ID)))
      ])

   @staticmethod
   def ids():
      """ Return :py:data:`GENERATOR_IDS`
      """
      return GENERATOR_IDS

   def __repr__(self):
      return 'GeneratorSet({})'.format(self.basis)

   # DEACTIVATED
   __setattr__ = _deactivated
   __delattr__ = _deactivated


def build_generators(basis):
   """ Return the :class:`GeneratorSet` of `basis`

   :param basis: (FockBasis)
   :return: (GeneratorSet)
   """
   return GeneratorSet(basis)


def combine(coefficients, gens, label=''):
   """ Return `Σ c_k·G_k` (ids may include `K0a`, `K0b` and `'1'`)

   :param coefficients: (dict) id -> number
   :param gens: (GeneratorSet)
   :param label: (str)
   :return: (OperatorMatrix)
   """
   matrix = numpy.zeros((gens.basis.dimension, gens.basis.dimension), dtype=numpy.complex128)
   for key, value in expand_aliases(coefficients).items():
      if value != 0:
         matrix += value * gens[key].matrix
   return OperatorMatrix(matrix, gens.basis, label=label or format_coefficients(coefficients))


def su11_casimir(k0, k_plus, k_minus):
   """ Return `K0² − ½(K+K− + K−K+)`
   """
   return (k0 @ k0 - (k_plus @ k_minus + k_minus @ k_plus) * 0.5).with_label('K2')


def su2_casimir(j0, j_plus, j_minus):
   """ Return `J0² + ½(J+J− + J−J+)`
   """
   return (j0 @ j0 + (j_plus @ j_minus + j_minus @ j_plus) * 0.5).with_label('J2')


# ===========================================================================================================================
# commutation table
# ===========================================================================================================================
def projector_indices(projector):
   """ Return the basis indices kept by a diagonal projector
   """
   diagonal = numpy.real(numpy.diag(projector.matrix))
   return [int(index) for index in numpy.nonzero(diagonal > 0.5)[0]]


def expand_in_span(target, span, indices):
   """ Return (coefficients, residual) of the least squares expansion of `target` in `span` on a sub-block

   :param target: (OperatorMatrix)
   :param span: (dict) id -> OperatorMatrix
   :param indices: (list) basis indices of the block
   :return: (tuple) dict id -> complex, Frobenius residual (float)
   """
   keys = list(span)
   columns = numpy.column_stack([span[key].restrict(indices).ravel() for key in keys])
   rhs = target.restrict(indices).ravel()
   solution = numpy.linalg.lstsq(columns, rhs, rcond=None)[0]
   residual = float(numpy.linalg.norm(columns @ solution - rhs))
   return {key: complex(value) for key, value in zip(keys, solution)}, residual


def derived_commutator(x_id, y_id):
   """ Return the exact coefficient map of `[X, Y]` from the quadratic engine (snapped, zeros dropped)
   """
   x_form = QuadraticForm.from_coefficients({x_id: 1.0})
   y_form = QuadraticForm.from_coefficients({y_id: 1.0})
   return snap_coefficients(x_form.commutator(y_form).coefficients())


def printed_commutator(x_id, y_id):
   """ Return the printed coefficient map of `[X, Y]` or None when the table has no such entry

   A transposed entry is used with flipped sign.
   """
   if (x_id, y_id) in PRINTED_TABLE:
      return dict(PRINTED_TABLE[(x_id, y_id)])
   if (y_id, x_id) in PRINTED_TABLE:
      return {key: -value for key, value in PRINTED_TABLE[(y_id, x_id)].items()}
   return None


def _map_distance(first, second):
   keys = set(first) | set(second)
   if not keys:
      return 0.0
   return max(abs(complex(first.get(key, 0.0)) - complex(second.get(key, 0.0))) for key in keys)


def verify_commutation_table(gens, projector, tol=1e-10):
   """ Return the closure report of all 45 generator pairs on the projected subspace

   Per unordered pair `(X, Y)` in canonical order:

      - `closure:[X,Y]` least squares residual of `P·[X,Y]·P` in the span of the projected generators and identity
      - `engine:[X,Y]` expanded coefficients against the exact quadratic engine
      - `table:[X,Y]` (informational) deviation from the printed table where it has an entry

   plus the asserted prose relations `[K0ab, ·]` and the worked entry `[K+ab, K-a] = −J-`.

   `report.data['deviations']` lists (pair, printed map, derived map) of every printed entry off by more than `tol`.

   :param gens: (GeneratorSet)
   :param projector: (OperatorMatrix) interior projector with margin ≥ 2
   :param tol: (float)
   :return: (VerificationReport)
   """
   indices = projector_indices(projector)
   span = dict(gens.operators)
   span[IDENTITY_ID] = gens.identity
   report = VerificationReport('commutation-table')
   deviations = []
   derived_table = {}

   for first in range(len(GENERATOR_IDS)):
      for second in range(first + 1, len(GENERATOR_IDS)):
         x_id, y_id = GENERATOR_IDS[first], GENERATOR_IDS[second]
         pair = '[{},{}]'.format(x_id, y_id)
         commutator = gens[x_id].commutator(gens[y_id])
         raw, residual = expand_in_span(commutator, span, indices)
         expanded = snap_coefficients(raw)
         derived = derived_commutator(x_id, y_id)
         derived_table[(x_id, y_id)] = expanded
         report.add('closure:' + pair, residual, tol, format_coefficients(expanded))
         report.add('engine:' + pair, _map_distance(expanded, derived), 1e-9)

         printed = printed_commutator(x_id, y_id)
         if printed is not None:
            deviation = _map_distance(printed, expanded)
            note = 'printed {}'.format(format_coefficients(printed))
            if deviation > tol:
               note += ' derived {}'.format(format_coefficients(expanded))
               deviations.append(((x_id, y_id), printed, expanded))
            report.add_info('table:' + pair, deviation, tol, note)

   k0 = gens['K0ab']
   for other_id, expected in K0AB_RELATIONS.items():
      raw, _ = expand_in_span(k0.commutator(gens[other_id]), span, indices)
      report.add('relation:[K0ab,{}]'.format(other_id), _map_distance(snap_coefficients(raw), expected), tol)

   (x_id, y_id), expected = WORKED_ENTRY
   raw, _ = expand_in_span(gens[x_id].commutator(gens[y_id]), span, indices)
   report.add('worked:[{},{}]'.format(x_id, y_id), _map_distance(snap_coefficients(raw), expected), tol,
      format_coefficients(expected))

   report.data['deviations'] = deviations
   report.data['derived_table'] = derived_table
   LOG.info('commutation table: %d printed entries deviate from the boson expansion', len(deviations))
   return report


# ===========================================================================================================================
# 4×4 representation
# ===========================================================================================================================
def _block(upper_left=None, upper_right=None, lower_left=None, lower_right=None):
   zero = numpy.zeros((2, 2), dtype=numpy.complex128)
   return numpy.block([
      [upper_left if upper_left is not None else zero, upper_right if upper_right is not None else zero],
      [lower_left if lower_left is not None else zero, lower_right if lower_right is not None else zero],
   ])


def matrix_rep_4x4():
   """ Return the printed 4×4 matrices of the ten generators

   :return: (dict) generator id -> numpy.ndarray 4×4
   """
   sigma_0, sigma_plus, sigma_minus = pauli_matrices()
   eye = identity(2)
   square = sigma_0 @ sigma_0
   return {
      'K+a': _block(lower_left=1j * sigma_plus @ sigma_0),
      'K-a': _block(upper_right=-1j * sigma_0 @ sigma_minus),
      'K+b': _block(lower_left=1j * sigma_0 @ sigma_minus),
      'K-b': _block(upper_right=-1j * sigma_plus @ sigma_0),
      'K+ab': _block(lower_left=1j * square),
      'K-ab': _block(upper_right=-1j * square),
      'K0ab': 0.5 * _block(upper_left=eye, lower_right=-eye),
      'J+': _block(upper_left=sigma_plus, lower_right=-sigma_plus),
      'J-': _block(upper_left=sigma_minus, lower_right=-sigma_minus),
      'J0': _block(upper_left=sigma_0, lower_right=sigma_0),
   }


def matrix_rep_4x4_report(tol=1e-10):
   """ Return the (informational only) comparison of the 4×4 representation against the printed table

   Every pair gets `closure4:[X,Y]` (span residual) and, where printed, `table4:[X,Y]` (coefficient deviation).

   :param tol: (float)
   :return: (VerificationReport) every check informational; `data['deviations']` lists the mismatching pairs
   """
   matrices = matrix_rep_4x4()
   keys = list(GENERATOR_IDS) + [IDENTITY_ID]
   span = dict(matrices)
   span[IDENTITY_ID] = identity(4)
   columns = numpy.column_stack([span[key].ravel() for key in keys])
   report = VerificationReport('matrix-rep-4x4')
   deviations = []

   sigma_0 = pauli_matrices()[0]
   expected_j0 = numpy.kron(identity(2), sigma_0)
   report.add_info('J0=diag(σ0,σ0)', float(numpy.max(numpy.abs(matrices['J0'] - expected_j0))), 0.0)

   for first in range(len(GENERATOR_IDS)):
      for second in range(first + 1, len(GENERATOR_IDS)):
         x_id, y_id = GENERATOR_IDS[first], GENERATOR_IDS[second]
         pair = '[{},{}]'.format(x_id, y_id)
         commutator = matrices[x_id] @ matrices[y_id] - matrices[y_id] @ matrices[x_id]
         solution = numpy.linalg.lstsq(columns, commutator.ravel(), rcond=None)[0]
         residual = float(numpy.linalg.norm(columns @ solution - commutator.ravel()))
         expanded = snap_coefficients({key: value for key, value in zip(keys, solution)})
         report.add_info('closure4:' + pair, residual, tol, format_coefficients(expanded))
         printed = printed_commutator(x_id, y_id)
         if printed is not None:
            deviation = _map_distance(printed, expanded)
            if deviation > tol:
               deviations.append(((x_id, y_id), printed, expanded))
            report.add_info('table4:' + pair, deviation, tol, 'printed {} got {}'.format(
               format_coefficients(printed), format_coefficients(expanded)
            ))

   report.data['deviations'] = deviations
   LOG.info('4×4 representation: %d of the printed entries deviate', len(deviations))
   return report


# ===========================================================================================================================
# ladders and representations
# ===========================================================================================================================
def ladder_shift_report(gens, margin=2, tol=1e-12):
   """ Return the report of the (n, m) ladder shifts of every generator and the annihilation of the lowest states

   With `n = n_a + n_b` and `m = n_a − n_b` each generator must map |n, m⟩ into the span of the single state
   :py:data:`LADDER_SHIFTS` away. The lowering generators must annihilate |0,0⟩ and |0,1⟩ (occupations).

   :param gens: (GeneratorSet)
   :param margin: (int) interior margin: ≥ 2
   :param tol: (float)
   :return: (VerificationReport)
   """
   basis = gens.basis
   indices = interior_indices(basis, margin)
   report = VerificationReport('ladder-shifts')
   for generator_id in GENERATOR_IDS:
      delta_n, delta_m = LADDER_SHIFTS[generator_id]
      worst = 0.0
      for index in indices:
         n_a, n_b = basis.state(index)
         image = gens[generator_id].matrix[:, index].copy()
         target_a = n_a + (delta_n + delta_m) // 2
         target_b = n_b + (delta_n - delta_m) // 2
         if 0 <= target_a <= basis.cutoff_a and 0 <= target_b <= basis.cutoff_b:
            image[basis.index(target_a, target_b)] = 0.0
         worst = max(worst, float(numpy.linalg.norm(image)))
      report.add('shift:{}'.format(generator_id), worst, tol, '(Δn, Δm) = ({}, {})'.format(delta_n, delta_m))

   for occupation in ((0, 0), (0, 1)):
      state = basis_vector(basis, *occupation)
      for generator_id in LOWERING_IDS:
         residual = float(numpy.linalg.norm(gens[generator_id].apply(state)))
         report.add('lowest:{}|{},{}>'.format(generator_id, *occupation), residual, tol)

   image = gens['K+ab'].apply(basis_vector(basis, 1, 0))
   report.add('K+ab|1,0>=√2|2,1>', abs(image[basis.index(2, 1)] - math_sqrt(2.0)), tol)
   return report


def _element(operator, basis, source, target):
   return operator.matrix[basis.index(*target), basis.index(*source)]


def discrete_representation_report(gens, margin=2, tol=1e-10):
   """ Return the report of the discrete representation matrix elements and Casimir eigenvalues

   - su(1,1) `ab`: in each sector of fixed `N_d = n_b − n_a` with `k = (|N_d|+1)/2` and `n = min(n_a, n_b)`:
     `⟨k,n+1|K+ab|k,n⟩ = √((n+1)(2k+n))` and `K2_ab = k(k−1)`
   - su(1,1) `a`: `|¼,n⟩ = |2n⟩_a`, `|¾,n⟩ = |2n+1⟩_a`, `K+a` elements as above and `K2_a = −3/16`
   - su(2): sectors of fixed `N_s = 2j`, `μ = (n_a − n_b)/2`, `J±` elements `√((j∓μ)(j±μ+1))` and `J2 = j(j+1)`
   - the generic Casimir forms agree with the stored ones on the interior and `J2` commutes with `J±, J0`

   :param gens: (GeneratorSet)
   :param margin: (int) ≥ 2
   :param tol: (float)
   :return: (VerificationReport)
   """
   basis = gens.basis
   indices = interior_indices(basis, margin)
   interior = set(indices)
   report = VerificationReport('discrete-representation')

   worst_k = 0.0
   worst_casimir = 0.0
   worst_a = 0.0
   worst_j = 0.0
   worst_j2 = 0.0
   for index in indices:
      n_a, n_b = basis.state(index)
      # su(1,1) ab
      n_d = n_b - n_a
      k = (abs(n_d) + 1) / 2.0
      n = min(n_a, n_b)
      worst_k = max(worst_k, abs(
         _element(gens['K+ab'], basis, (n_a, n_b), (n_a + 1, n_b + 1)) - math_sqrt((n + 1) * (2 * k + n))
      ))
      worst_casimir = max(worst_casimir, abs(_element(gens.K2_ab, basis, (n_a, n_b), (n_a, n_b)) - k * (k - 1)))
      worst_casimir = max(worst_casimir, abs(_element(gens.K2_a, basis, (n_a, n_b), (n_a, n_b)) + 3.0 / 16.0))
      worst_casimir = max(worst_casimir, abs(_element(gens.K2_b, basis, (n_a, n_b), (n_a, n_b)) + 3.0 / 16.0))
      # su(1,1) a
      k_a = 0.25 if n_a % 2 == 0 else 0.75
      n_k = n_a // 2
      worst_a = max(worst_a, abs(
         _element(gens['K+a'], basis, (n_a, n_b), (n_a + 2, n_b)) - math_sqrt((n_k + 1) * (2 * k_a + n_k))
      ))
      # su(2)
      j = (n_a + n_b) / 2.0
      mu = (n_a - n_b) / 2.0
      if n_b >= 1:
         worst_j = max(worst_j, abs(
            _element(gens['J+'], basis, (n_a, n_b), (n_a + 1, n_b - 1)) - math_sqrt((j - mu) * (j + mu + 1))
         ))
      if n_a >= 1:
         worst_j = max(worst_j, abs(
            _element(gens['J-'], basis, (n_a, n_b), (n_a - 1, n_b + 1)) - math_sqrt((j + mu) * (j - mu + 1))
         ))
      worst_j2 = max(worst_j2, abs(_element(gens.J2, basis, (n_a, n_b), (n_a, n_b)) - j * (j + 1)))

   report.add('su11ab:K+ab elements', worst_k, tol, 'k = (|N_d|+1)/2')
   report.add('su11:Casimir eigenvalues', worst_casimir, tol, 'k(k−1)')
   report.add('su11a:K+a elements', worst_a, tol, 'k = 1/4, 3/4')
   report.add('su2:J± elements', worst_j, tol)
   report.add('su2:Casimir eigenvalues', worst_j2, tol, 'j(j+1)')

   generic_su2 = su2_casimir(gens['J0'], gens['J+'], gens['J-'])
   generic_ab = su11_casimir(gens['K0ab'], gens['K+ab'], gens['K-ab'])
   report.add('su2:generic Casimir', norm_fro(generic_su2.restrict(indices) - gens.J2.restrict(indices)), tol)
   report.add('su11ab:generic Casimir', norm_fro(generic_ab.restrict(indices) - gens.K2_ab.restrict(indices)), tol)
   for generator_id in ('J+', 'J-', 'J0'):
      commutator = gens.J2.commutator(gens[generator_id])
      report.add('su2:[J2,{}]'.format(generator_id), norm_fro(commutator.restrict(indices)), 1e-12)
   for generator_id in ('K+ab', 'K-ab', 'K0ab'):
      commutator = gens.K2_ab.commutator(gens[generator_id])
      report.add('su11ab:[K2_ab,{}]'.format(generator_id), norm_fro(commutator.restrict(indices)), 1e-12)
   report.data['interior_size'] = len(interior)
   return report


def ladder_power_norm_report(gens, k, n_max, tol=1e-9):
   """ Return the report of `‖K+ⁿ|k,0⟩‖² = n!·Γ(2k+n)/Γ(2k)` for n = 0 … n_max

   Integer or half-integer `k ≥ ½` uses `K+ab` on |0, 2k−1⟩; `k = ¼, ¾` uses `K+a` on |0⟩ or |1⟩ of mode a.

   :param gens: (GeneratorSet)
   :param k: (Fraction, str, float) Bargmann index
   :param n_max: (int)
   :param tol: (float) relative tolerance
   :return: (VerificationReport)
   :raise Err: unsupported `k` (invalid-argument) or cutoff too small (cutoff-overflow)
   """
   k = as_fraction(k)
   basis = gens.basis
   if k in (Fraction(1, 4), Fraction(3, 4)):
      raising = gens['K+a']
      start = (int(2 * k - Fraction(1, 2)), 0)
      needed = (start[0] + 2 * n_max, 0)
   elif (2 * k).denominator == 1 and k >= Fraction(1, 2):
      raising = gens['K+ab']
      start = (0, int(2 * k - 1))
      needed = (n_max, start[1] + n_max)
   else:
      raise Err('ladder_power_norm_report', [
         'k must be 1/4, 3/4 or a positive multiple of 1/2.  We got: <{}>'.format(k)
      ])
   if needed[0] > basis.cutoff_a or needed[1] > basis.cutoff_b:
      raise Err('ladder_power_norm_report', [
         'basis too small for n_max: <{}>  needs occupations: <{}>'.format(n_max, needed),
         '  basis: <{}>'.format(basis)
      ], kind='cutoff-overflow')

   report = VerificationReport('ladder-power-norm(k={})'.format(k))
   state = basis_vector(basis, *start)
   two_k = float(2 * k)
   for n in range(n_max + 1):
      expected = math_exp(gammaln(n + 1) + gammaln(two_k + n) - gammaln(two_k))
      norm_sq = float(numpy.vdot(state, state).real)
      report.add('n={}'.format(n), abs(norm_sq - expected) / expected, tol)
      state = raising.apply(state)
   return report


# ===========================================================================================================================
# states
# ===========================================================================================================================
class Sp4rLabels(object):
   """ Group numbers of a general Sp(4,R) state

   **Has attributes**: :attr:`N`, :attr:`M`, :attr:`mu`, :attr:`sigma` (Fraction)

   :param N: (int, Fraction, str)
   :param M: (int, Fraction, str) half-integer
   :param mu: (int, Fraction, str)
   :param sigma: (int, Fraction, str) half-integer
   """

   def __init__(self, N, M, mu, sigma):
      """ Constructor
      """
      self.__dict__['N'] = as_fraction(N)
      self.__dict__['M'] = as_fraction(M)
      self.__dict__['mu'] = as_fraction(mu)
      self.__dict__['sigma'] = as_fraction(sigma)

   def exponents(self, j):
      """ Return the raising powers (J+, K+b, K+ab, K+a) for the lowest state of spin `j`

      :param j: (Fraction) 0 or 1/2
      :return: (tuple) of int
      :raise Err: a power that is negative or not an integer
      """
      powers = (
         ('J+', j + self.sigma),
         ('K+b', (self.N - self.M - self.mu + self.sigma) / 2),
         ('K+ab', self.mu),
         ('K+a', (self.N + self.M - self.mu - self.sigma) / 2),
      )
      for name, value in powers:
         if value.denominator != 1 or value < 0:
            raise Err('Sp4rLabels.exponents()', [
               'the power of {} must be a non-negative integer.  We got: <{}>'.format(name, value),
               '  labels: <{}>'.format(self)
            ])
      if powers[0][1] > 2 * j:
         raise Err('Sp4rLabels.exponents()', [
            'j + σ must lie in [0, 2j].  We got: <{}> with j: <{}>'.format(powers[0][1], j)
         ])
      return tuple(int(value) for _, value in powers)

   def __repr__(self):
      return 'Sp4rLabels(N={}, M={}, mu={}, sigma={})'.format(self.N, self.M, self.mu, self.sigma)

   # DEACTIVATED
   __setattr__ = _deactivated
   __delattr__ = _deactivated


def lowest_state(basis, sigma):
   """ Return the lowest state: |0,0⟩ for integer `sigma`, |0,1⟩ (occupations) for half-integer `sigma`

   :param basis: (FockBasis)
   :param sigma: (int, Fraction, str)
   :return: (numpy.ndarray)
   :raise Err: `sigma` not a multiple of ½
   """
   sigma = as_fraction(sigma)
   if (2 * sigma).denominator != 1:
      raise Err('lowest_state', ['sigma must be a multiple of 1/2.  We got: <{}>'.format(sigma)])
   if (2 * sigma) % 2 == 0:
      return basis_vector(basis, 0, 0)
   return basis_vector(basis, 0, 1)


def sp4r_state(labels, gens, lowest):
   """ Return the unnormalized state `K+a^p·K+ab^μ·K+b^q·J+^(j+σ)·|lowest⟩`

   with `p = (N+M−μ−σ)/2` and `q = (N−M−μ+σ)/2`. The J0 eigenvalue of the result is checked against `M`.

   :param labels: (Sp4rLabels)
   :param gens: (GeneratorSet)
   :param lowest: (numpy.ndarray) |0,0⟩ or |0,1⟩ of :py:func:`lowest_state`
   :return: (numpy.ndarray)
   :raise Err: bad powers (invalid-argument), occupations beyond the cutoff (cutoff-overflow)
   """
   basis = gens.basis
   support = numpy.nonzero(numpy.abs(lowest) > 0.5)[0]
   if len(support) != 1 or basis.state(int(support[0])) not in ((0, 0), (0, 1)):
      raise Err('sp4r_state', ['lowest must be |0,0⟩ or |0,1⟩ (see lowest_state)'])
   start_a, start_b = basis.state(int(support[0]))
   j = Fraction(start_a + start_b, 2)
   power_j, power_b, power_ab, power_a = labels.exponents(j)

   final_a = start_a + power_j + power_ab + 2 * power_a
   final_b = start_b - power_j + power_ab + 2 * power_b
   if final_a > basis.cutoff_a or final_b > basis.cutoff_b:
      raise Err('sp4r_state', [
         'state does not fit the basis: occupations: <({}, {})>'.format(final_a, final_b),
         '  basis: <{}>  labels: <{}>'.format(basis, labels)
      ], kind='cutoff-overflow')

   state = numpy.array(lowest, dtype=numpy.complex128)
   for generator_id, power in (('J+', power_j), ('K+b', power_b), ('K+ab', power_ab), ('K+a', power_a)):
      for _ in range(power):
         state = gens[generator_id].apply(state)

   deviation = float(numpy.linalg.norm(gens['J0'].apply(state) - float(labels.M) * state))
   if deviation > 1e-9 * max(float(numpy.linalg.norm(state)), 1.0):
      raise Err('sp4r_state', [
         'J0 eigenvalue differs from M: <{}>  deviation: <{}>'.format(labels.M, deviation)
      ], kind='condition-violated')
   LOG.debug('sp4r_state %s: occupations (%d, %d)', labels, final_a, final_b)
   return state


def quantum_number_map(n, m):
   """ Return (k, m0, j, μ) = ((m+1)/2, (n−m)/2, n/2, m/2) as Fractions

   >>> quantum_number_map(2, 2)
   (Fraction(3, 2), Fraction(0, 1), Fraction(1, 1), Fraction(1, 1))

   :param n: (int) ≥ 0
   :param m: (int) with |m| ≤ n and n − m even
   :return: (tuple) of Fraction
   :raise Err: parity or range violation
   """
   if not isinstance(n, int) or not isinstance(m, int) or n < 0 or abs(m) > n or (n - m) % 2 != 0:
      raise Err('quantum_number_map', [
         'need integers with |m| ≤ n and n − m even.  We got: n: <{}> m: <{}>'.format(n, m)
      ])
   return Fraction(m + 1, 2), Fraction(n - m, 2), Fraction(n, 2), Fraction(m, 2)
