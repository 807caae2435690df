"""
==============
SP4TILT.verify
==============

Overview
========
The numerical oracle: direct diagonalization on the truncated Fock space, greedy spectrum matching, cutoff
convergence scans and the scenario runners used by the command line and the tests.

Every runner returns a :class:`SP4TILT.report.VerificationReport`. Comparisons that document known deviations of the
printed material (or that truncation cannot settle) are informational checks: they are listed, never counted.

Oracle rules:

   - Hermitian parameter sets diagonalize `H_I` restricted to the interior subspace of both spin blocks
   - non-Hermitian sets (the relativistic preset) diagonalize the uncoupled operator `(κ·)(γ·)` and map its eigenvalues
     `λ` to `±√((ħΔω)² + λ)`
   - a mode without coupling is pinned to its vacuum: the spectrum of `H_I` repeats for every occupation of that mode

Constants
=========

.. py:data:: DEFAULT_MARGIN

.. py:data:: MODEL_DEFAULTS

    (dict) preset name -> (cutoff, n_max, tolerance)

Functions
=========
.. autofunction:: oracle_spectrum
.. autofunction:: uncoupled_oracle_spectrum
.. autofunction:: compare_spectra
.. autofunction:: matched_spectrum
.. autofunction:: convergence_scan
.. autofunction:: verify_ccr
.. autofunction:: verify_algebra
.. autofunction:: verify_tilting_grid
.. autofunction:: verify_model
.. autofunction:: verify_coherent_states
.. autofunction:: verify_reductions
.. autofunction:: random_general_alphas
.. autofunction:: verify_pipeline_random
.. autofunction:: verify_wavefunctions

"""
from cmath import exp as cmath_exp
from fractions import Fraction
from logging import getLogger
from math import (
   pi as math_pi,
   sqrt as math_sqrt,
)

import numpy
from numpy.polynomial.laguerre import laggauss

from SP4TILT.algebra import (
   build_generators,
   combine,
   discrete_representation_report,
   ladder_power_norm_report,
   ladder_shift_report,
   matrix_rep_4x4_report,
   projector_indices,
   verify_commutation_table,
)
from SP4TILT.fock import (
   boson_operators,
   build_basis,
   interior_indices,
   interior_projector,
   projector_from_indices,
   sector_indices,
)
from SP4TILT.hamiltonian import (
   AlphaCoefficients,
   ModelParams,
   SpectrumEntry,
   SpectrumTable,
   alpha_coefficients,
   assoc_laguerre,
   assoc_laguerre_sum,
   build_hamiltonian,
   closed_form_spectrum,
   component_spectra_report,
   tilt_pipeline,
   uncoupled_operator,
   wavefunction,
)
from SP4TILT.linalg import (
   expm,
   expm_apply,
   hermitian_eigensolve,
)
from SP4TILT.models import (
   interaction_spectrum,
   model_spectrum,
   preset,
)
from SP4TILT.quadratic import (
   GENERATOR_IDS,
   QuadraticForm,
)
from SP4TILT.report import VerificationReport
from SP4TILT.tilt import (
   DEFAULT_MAGNITUDES,
   DEFAULT_PHASES,
   TILT_KINDS,
   TiltParameters,
   conjugate_closed_form,
   conjugation_margin,
   discrepancy_ledger,
   displaced_columns,
   grid_parameters,
   normal_form,
   perelomov_state,
   reduce_su11_form,
   reduce_su2_form,
   sp4r_coherent_state,
)
from SP4TILT.utils import (
   Err,
   as_fraction,
)


LOG = getLogger(__name__)

DEFAULT_MARGIN = 4

MODEL_DEFAULTS = {
   'jc': (60, 15, 1e-8),
   'dirac': (60, 15, 1e-10),
   'generalized_jc': (120, 15, 1e-6),
   'mjc': (25, 10, 1e-6),
   'jc_ajc': (25, 8, 1e-6),
}

# kinds -> error kinds that mean "this random draw is outside the pipeline's domain"
_DOMAIN_KINDS = ('hyperbolic-out-of-domain', 'pipeline-indeterminate', 'degenerate-reduction', 'condition-violated')


# ===========================================================================================================================
# oracle
# ===========================================================================================================================
def _spin_indices(operator, indices):
   if operator.spin_factor:
      return list(indices) + [index + operator.basis.dimension for index in indices]
   return list(indices)


def oracle_spectrum(h, projector):
   """ Return the ascending eigenvalues of `P·H·P` restricted to the interior subspace

   A Fock-only projector applied to a spin ⊗ Fock operator keeps the same occupations in both spin blocks.

   :param h: (OperatorMatrix) Hermitian to 1e−10
   :param projector: (OperatorMatrix) diagonal projector
   :return: (list) of float
   :raise Err: hermiticity error of the eigensolver
   """
   indices = _spin_indices(h, projector_indices(projector))
   values, _ = hermitian_eigensolve(h.restrict(indices))
   return [float(value) for value in values]


def uncoupled_oracle_spectrum(params, basis, projector):
   """ Return the ascending real energies `±√((ħΔω)² + λ)` from the interior eigenvalues `λ` of `(κ·)(γ·)`

   Eigenvalues with a negative bracket have no real energy and are left out.

   :param params: (ModelParams) the uncoupled operator must be Hermitian
   :param basis: (FockBasis)
   :param projector: (OperatorMatrix)
   :return: (list) of float
   """
   operator = uncoupled_operator(params, basis, 1)
   values, _ = hermitian_eigensolve(operator.restrict(projector_indices(projector)))
   energies = []
   detuning_squared = params.detuning_energy ** 2
   for value in values:
      bracket = detuning_squared + float(value)
      if bracket >= 0.0:
         root = math_sqrt(bracket)
         energies.extend((root, -root))
   return sorted(energies)


def compare_spectra(closed, oracle, tol):
   """ Return the report of the greedy nearest neighbour matching of `closed` into `oracle`

   Entries are matched in table order, `E₊` before `E₋`, each to the nearest unused oracle eigenvalue (ties go to the
   smaller oracle index). Non-real entries are skipped.

   `report.data`:

      - `table` (SpectrumTable) `closed` with residuals, `oracle_match` and flags filled in
      - `unmatched` (list) oracle eigenvalues no entry claimed: dark states and truncation artifacts

   :param closed: (SpectrumTable)
   :param oracle: (sequence) of float
   :param tol: (float)
   :return: (VerificationReport)
   """
   report = VerificationReport('compare')
   remaining = numpy.array(sorted(float(value) for value in oracle), dtype=float)
   used = numpy.zeros(len(remaining), dtype=bool)
   entries = []
   skipped = 0
   for entry in closed.entries:
      name = 'n={} m={}'.format(entry.n, entry.m_n)
      if not entry.is_real:
         skipped += 1
         report.add_info(name, float('nan'), tol, note='non-real: skipped')
         entries.append(entry)
         continue
      residual = 0.0
      for value in (entry.e_plus, entry.e_minus):
         if used.all():
            residual = float('inf')
            break
         distances = numpy.where(used, numpy.inf, numpy.abs(remaining - value))
         index = int(numpy.argmin(distances))
         used[index] = True
         residual = max(residual, float(distances[index]))
      check = report.add(name, residual, tol, note='E=±{:.12g}'.format(entry.e_plus))
      entries.append(entry.matched(residual, check.passed))
   unmatched = [float(value) for value, taken in zip(remaining, used) if not taken]
   report.add_info('unmatched oracle eigenvalues', float(len(unmatched)), float(len(remaining)),
      note=', '.join('{:.6g}'.format(value) for value in unmatched[:6]) + (' …' if len(unmatched) > 6 else ''))
   report.data['table'] = closed.replaced(entries, remaining, matched=True)
   report.data['unmatched'] = unmatched
   LOG.info('compare_spectra: %d entries, %d skipped, %d failed, %d oracle values unmatched',
      len(entries), skipped, len(report.failed_checks()), len(unmatched))
   return report


def _oracle_space(params, cutoff_a, cutoff_b, margin):
   """ Return (basis, projector) of the oracle: a mode without coupling is pinned to its vacuum
   """
   if not params.is_mode_b_coupled():
      basis = build_basis(cutoff_a, 1)
      indices = sector_indices(basis, lambda n_a, n_b: n_b == 0 and n_a <= cutoff_a - margin)
   elif not params.is_mode_a_coupled():
      basis = build_basis(1, cutoff_b)
      indices = sector_indices(basis, lambda n_a, n_b: n_a == 0 and n_b <= cutoff_b - margin)
   else:
      basis = build_basis(cutoff_a, cutoff_b)
      indices = interior_indices(basis, margin)
   return basis, projector_from_indices(basis, indices, label='P(margin={})'.format(margin))


def _interaction_oracle(params, basis, projector):
   if params.hermitian:
      _, _, h_i = build_hamiltonian(params, basis)
      return oracle_spectrum(h_i, projector)
   return uncoupled_oracle_spectrum(params, basis, projector)


def matched_spectrum(params, cutoff_a, cutoff_b, margin=DEFAULT_MARGIN, n_max=10, tol=1e-8):
   """ Return the :class:`VerificationReport` of the closed-form spectrum against the interaction oracle

   `report.data['table']` is the matched :class:`SpectrumTable` carrying the cutoffs in its metadata.

   :param params: (ModelParams)
   :param cutoff_a: (int)
   :param cutoff_b: (int)
   :param margin: (int)
   :param n_max: (int)
   :param tol: (float)
   :return: (VerificationReport)
   :raise Err: pipeline errors of :py:func:`SP4TILT.hamiltonian.closed_form_spectrum`
   """
   closed = closed_form_spectrum(params, n_max)
   basis, projector = _oracle_space(params, cutoff_a, cutoff_b, margin)
   oracle = _interaction_oracle(params, basis, projector)
   report = compare_spectra(closed, oracle, tol)
   report.data['table'] = report.data['table'].replaced(
      report.data['table'].entries, report.data['table'].oracle_eigenvalues,
      cutoff_a=cutoff_a, cutoff_b=cutoff_b, margin=margin, oracle='H_I' if params.hermitian else 'uncoupled'
   )
   return report


def _tracked(values, count):
   lowest = sorted(values, key=lambda value: (abs(value), value))[:count]
   return sorted(lowest)


def convergence_scan(params, cutoffs, margin=DEFAULT_MARGIN, count=10, tol=1e-8):
   """ Return the report of the lowest `count` oracle eigenvalues (by magnitude) across ascending cutoffs

   Each tracked eigenvalue gets one check: its last successive difference against `tol`. A single cutoff converges
   trivially. `report.data['differences']` holds the difference rows, one per cutoff step.

   :param params: (ModelParams)
   :param cutoffs: (sequence) of int, ascending
   :param margin: (int)
   :param count: (int)
   :param tol: (float)
   :return: (VerificationReport)
   :raise Err: cutoffs not ascending
   """
   cutoffs = list(cutoffs)
   report = VerificationReport('convergence')
   if any(second <= first for first, second in zip(cutoffs, cutoffs[1:])):
      raise Err('convergence_scan', ['cutoffs must be strictly ascending.  We got: <{}>'.format(cutoffs)])
   if not cutoffs:
      return report
   tracked = []
   for cutoff in cutoffs:
      basis, projector = _oracle_space(params, cutoff, cutoff, margin)
      tracked.append(_tracked(_interaction_oracle(params, basis, projector), count))
      LOG.info('convergence_scan: cutoff %d done', cutoff)
   size = min(len(values) for values in tracked)
   differences = [
      [abs(current[index] - previous[index]) for index in range(size)]
      for previous, current in zip(tracked, tracked[1:])
   ]
   for index in range(size):
      last = differences[-1][index] if differences else 0.0
      history = ' '.join('{:.2e}'.format(row[index]) for row in differences) or 'single cutoff'
      report.add('eigenvalue[{}]={:.10g}'.format(index, tracked[-1][index]), last, tol, note=history)
   report.data['cutoffs'] = cutoffs
   report.data['tracked'] = tracked
   report.data['differences'] = differences
   return report


# ===========================================================================================================================
# scenario runners
# ===========================================================================================================================
def verify_ccr(cutoff=20, margin=2, tol=1e-12):
   """ Return the report of the boson commutation relations on the interior
   """
   basis = build_basis(cutoff, cutoff)
   a, a_dag, b, b_dag = boson_operators(basis)
   indices = interior_indices(basis, margin)
   eye = numpy.eye(len(indices))
   report = VerificationReport('ccr')
   cases = (
      ('[a,a†]', a, a_dag, eye), ('[b,b†]', b, b_dag, eye),
      ('[a,b]', a, b, 0.0), ('[a,b†]', a, b_dag, 0.0), ('[a†,b]', a_dag, b, 0.0), ('[a†,b†]', a_dag, b_dag, 0.0),
   )
   for name, first, second, expected in cases:
      residual = numpy.max(numpy.abs(first.commutator(second).restrict(indices) - expected))
      report.add(name, float(residual), tol)
   return report


def verify_algebra(cutoff=12, margin=2, tol=1e-10):
   """ Return the merged report of the commutation table, the 4×4 representation, ladder shifts, discrete
   representations and ladder power norms

   `report.data['commutation-table/deviations']` lists the printed table entries that differ from the boson expansion.
   """
   basis = build_basis(cutoff, cutoff)
   gens = build_generators(basis)
   report = VerificationReport('algebra')
   report.merge(verify_commutation_table(gens, interior_projector(basis, margin), tol))
   report.merge(matrix_rep_4x4_report(tol))
   report.merge(ladder_shift_report(gens, margin))
   report.merge(discrete_representation_report(gens, margin, tol))
   n_max = max(1, (cutoff - 1) // 2)
   for k in ('1/4', '3/4', '1/2', '1'):
      report.merge(ladder_power_norm_report(gens, k, n_max))
   LOG.info('verify_algebra: %s', report.summary())
   return report


def _undisplace(params, gens, block):
   """ Return `D†·block` factor by factor
   """
   for name, value in params.factors():
      if value == 0:
         continue
      block = expm_apply(-combine(params.exponent(name), gens).matrix, block)
   return block


def verify_tilting_grid(magnitudes=DEFAULT_MAGNITUDES, phases=DEFAULT_PHASES, cutoff=24, tol=1e-8, kinds=TILT_KINDS,
                        generator_ids=GENERATOR_IDS):
   """ Return the report of closed-form conjugation against numeric `D†·X·D` over a parameter grid

   Rows are compared on the interior (margin :py:func:`SP4TILT.tilt.conjugation_margin`) and columns one margin deeper,
   so the displaced probe states stay inside the truncated space. One asserted check per (kind, generator) holds the
   largest relative Frobenius error over the grid. Informational checks list:

      - `leakage:<kind>` the largest probe weight the truncated displacement pushes past the interior
      - `ledger:<kind>,<id>` the deviation of each printed formula (see :py:func:`SP4TILT.tilt.discrepancy_ledger`)

   :param magnitudes: (sequence) of |p|
   :param phases: (sequence)
   :param cutoff: (int)
   :param tol: (float)
   :param kinds: (sequence) of tilt kinds
   :param generator_ids: (sequence)
   :return: (VerificationReport) `data['ledger']`: list of DiscrepancyEntry
   :raise Err: cutoff too small for the margins
   """
   basis = build_basis(cutoff, cutoff)
   gens = build_generators(basis)
   margin = conjugation_margin(max(magnitudes) if magnitudes else 0.0)
   if 2 * margin >= cutoff:
      raise Err('verify_tilting_grid', [
         'cutoff <{}> leaves no probe states inside two margins of <{}>'.format(cutoff, margin)
      ], kind='cutoff-overflow')
   rows = interior_indices(basis, margin)
   probes = interior_indices(basis, 2 * margin)
   width = len(probes)
   report = VerificationReport('tilting')

   for kind in kinds:
      worst = dict.fromkeys(generator_ids, 0.0)
      leakage = 0.0
      for magnitude in magnitudes:
         for phase in phases:
            params = grid_parameters(kind, magnitude, phase)
            columns = displaced_columns(params, gens, probes)
            kept = numpy.sum(numpy.abs(columns[rows, :]) ** 2, axis=0)
            leakage = max(leakage, float(numpy.max(1.0 - kept)))
            # one stacked block: D†·X_g·D·e_p for every generator g
            block = numpy.hstack([gens[generator_id].apply(columns) for generator_id in generator_ids])
            block = _undisplace(params, gens, block)
            for position, generator_id in enumerate(generator_ids):
               numeric = block[rows, position * width:(position + 1) * width]
               closed = combine(conjugate_closed_form(generator_id, params), gens).matrix[numpy.ix_(rows, probes)]
               error = numpy.linalg.norm(numeric - closed) / max(numpy.linalg.norm(closed), 1e-300)
               worst[generator_id] = max(worst[generator_id], float(error))
      for generator_id in generator_ids:
         report.add('{}:{}'.format(kind, generator_id), worst[generator_id], tol)
      report.add_info('leakage:{}'.format(kind), leakage, tol)
      LOG.info('verify_tilting_grid: %s done', kind)

   ledger = discrepancy_ledger(magnitudes, phases)
   for entry in ledger:
      note = '{}; at -p: {:.2e}'.format(entry.source, entry.flipped)
      report.add_info('ledger:{},{}'.format(entry.kind, entry.generator_id), entry.literal, tol, note=note)
   report.data['ledger'] = ledger
   return report


def _full_line_table(preset_value, closed):
   entries = []
   for entry in closed.entries:
      if not entry.is_real:
         continue
      e_plus, e_minus = model_spectrum(preset_value, entry.n, entry.m_n)
      entries.append(SpectrumEntry(entry.n, entry.m_n, e_plus, e_minus))
   return SpectrumTable(entries, closed.params, closed.ledger, closed.n_max)


def verify_model(name, cutoff=None, n_max=None, tol=None, margin=DEFAULT_MARGIN, **free):
   """ Return the report of one preset against its printed spectrum and the oracle

   Checks:

      - `printed[n,m]` closed-form interaction spectrum against the printed interaction formula (1e−9)
      - `oracle/...` closed form against the interaction oracle (see :py:func:`matched_spectrum`)
      - `full/...` the printed full line against the oracle of `H`: asserted when `[H0, H_I]` vanishes on the interior,
        informational otherwise
      - `components/...` for single-mode Hermitian presets

   Cutoff, n_max and tolerance default to :py:data:`MODEL_DEFAULTS`.

   :param name: (str) preset name
   :param free: free parameters of the preset
   :return: (VerificationReport) `data['table']` is the matched SpectrumTable
   """
   model = preset(name, **free)
   default_cutoff, default_n_max, default_tol = MODEL_DEFAULTS[name]
   cutoff = cutoff or default_cutoff
   n_max = default_n_max if n_max is None else n_max
   tol = tol or default_tol
   params = model.params
   report = VerificationReport('model:{}'.format(name))

   closed = closed_form_spectrum(params, n_max)
   for entry in closed.entries:
      printed = complex(interaction_spectrum(model, entry.n, entry.m_n)[0])
      value = entry.e_plus if entry.is_real else 1j * entry.e_plus
      report.add('printed[{},{}]'.format(entry.n, entry.m_n), abs(value - printed), 1e-9)

   oracle_report = matched_spectrum(params, cutoff, cutoff, margin, n_max, tol)
   report.merge(_retitled(oracle_report, 'oracle'))
   report.data['table'] = oracle_report.data['table']

   if params.hermitian:
      basis, projector = _oracle_space(params, cutoff, cutoff, margin)
      h, h0, h_i = build_hamiltonian(params, basis)
      indices = _spin_indices(h, projector_indices(projector))
      commutator = float(numpy.max(numpy.abs(h0.commutator(h_i).restrict(indices))))
      full = compare_spectra(_full_line_table(model, closed), oracle_spectrum(h, projector), tol)
      if model.includes_h0 and commutator > tol:
         informational = VerificationReport('full')
         for check in full.checks:
            informational.add_info(check.name, check.residual, check.tolerance, note='[H0,H_I] ≠ 0')
         report.merge(informational)
      else:
         report.merge(_retitled(full, 'full'))
      if model.single_mode:
         report.merge(component_spectra_report(params, basis, margin))
   LOG.info('verify_model %s: %s', name, report.summary())
   return report


def _retitled(report, title):
   renamed = VerificationReport(title)
   renamed.checks.extend(report.checks)
   renamed.data.update(report.data)
   return renamed


def _discrete_series(k, length):
   """ Return (K0, K+, K−) of the su(1,1) discrete series `k` truncated to `length` states
   """
   k = float(k)
   k0 = numpy.diag([k + s for s in range(length)]).astype(numpy.complex128)
   k_plus = numpy.zeros((length, length), dtype=numpy.complex128)
   for s in range(length - 1):
      k_plus[s + 1, s] = math_sqrt((s + 1) * (2.0 * k + s))
   return k0, k_plus, k_plus.conj().T


def verify_coherent_states(ks=('1/4', '1/2', '3/4', '1'), js=('1/2', '1', '3/2'), magnitudes=(0.1, 0.3, 0.5),
                           phase=0.7, length=60, tol=1e-8):
   """ Return the report of the Perelomov series against expm-applied states

   - su(1,1): the discrete series matrices for every k, and the single-mode boson realization (`K±a` on even or odd
     occupations) for k = ¼, ¾
   - su(2): the `N_s = 2j` sector of the Schwinger realization
   - normalization of every series and the normal-form identity on the lowest weight
   - (informational) the norm of an `sp4r_product` coherent state on a small basis

   :return: (VerificationReport)
   """
   report = VerificationReport('coherent')
   compared = min(30, length)
   for k_text in ks:
      k = as_fraction(k_text)
      k0, k_plus, k_minus = _discrete_series(k, length + 60)
      single_mode = k in (Fraction(1, 4), Fraction(3, 4))
      if single_mode:
         basis = build_basis(2 * length + 1, 1)
         gens = build_generators(basis)
         parity = int(2 * k - Fraction(1, 2))
      for magnitude in magnitudes:
         xi = magnitude * cmath_exp(1j * phase)
         exponent = xi * k_plus - xi.conjugate() * k_minus
         displaced = expm(exponent)
         for offset in (0, 1):
            series = perelomov_state('su11', k, offset, xi, length)
            tag = 'su11 k={} |xi|={} offset={}'.format(k, magnitude, offset)
            report.add('norm:' + tag, abs(float(numpy.vdot(series, series).real) - 1.0), 1e-10)
            oracle = displaced[:compared, offset]
            report.add('series:' + tag, float(numpy.max(numpy.abs(series[:compared] - oracle))), tol)
            if single_mode:
               start = basis.index(2 * offset + parity, 0)
               column = displaced_columns(TiltParameters('su11_mode_a', xi_a=xi), gens, [start])[:, 0]
               boson = numpy.array([column[basis.index(2 * s + parity, 0)] for s in range(compared)])
               report.add('boson:' + tag, float(numpy.max(numpy.abs(series[:compared] - boson))), tol)
         ground = numpy.zeros(length + 60, dtype=numpy.complex128)
         ground[0] = 1.0
         form = normal_form(xi, 'su11')
         factored = expm(form.zeta * k_plus) @ (expm(form.eta * k0) @ ground)
         report.add('normal-form:su11 k={} |xi|={}'.format(k, magnitude),
            float(numpy.max(numpy.abs(factored[:compared] - displaced[:compared, 0]))), tol)

   for j_text in js:
      j = as_fraction(j_text)
      two_j = int(2 * j)
      basis = build_basis(max(two_j, 1), max(two_j, 1))
      gens = build_generators(basis)
      for magnitude in magnitudes:
         chi = magnitude * cmath_exp(1j * phase)
         for offset in range(two_j + 1):
            series = perelomov_state('su2', j, offset, chi)
            tag = 'su2 j={} |chi|={} offset={}'.format(j, magnitude, offset)
            report.add('norm:' + tag, abs(float(numpy.vdot(series, series).real) - 1.0), 1e-10)
            start = basis.index(offset, two_j - offset)
            column = displaced_columns(TiltParameters('su2', chi=chi), gens, [start])[:, 0]
            oracle = numpy.array([column[basis.index(n_a, two_j - n_a)] for n_a in range(two_j + 1)])
            report.add('series:' + tag, float(numpy.max(numpy.abs(series - oracle))), tol)

   basis = build_basis(12, 12)
   gens = build_generators(basis)
   params = grid_parameters('sp4r_product', 0.1, phase)
   lowest = numpy.zeros(basis.dimension, dtype=numpy.complex128)
   lowest[basis.index(0, 0)] = 1.0
   state = sp4r_coherent_state(params, gens, lowest)
   report.add_info('norm:sp4r_product', abs(float(numpy.vdot(state, state).real) - 1.0), 1e-10)
   return report


def _expect_error(report, name, func, kind):
   try:
      func()
   except Err as err:
      report.add(name, 0.0 if err.kind == kind else 1.0, 0.0, note='raised {}'.format(err.kind))
      return
   report.add(name, 1.0, 0.0, note='nothing raised')


def verify_reductions(tol=1e-8, cutoff=32):
   """ Return the report of the su(1,1) / su(2) eigenvalue reductions

   - slopes of the worked forms (`5K0 + 2K+ + 2K−` → 3, `3J0 + 2J+ + 2J−` → 5) and the two-mode identities
   - the tilt of each reduction conjugates the form to `slope·K0` on the exact engine
   - level spacing of `5K0ab + 2K+ab + 2K−ab` in the `N_d = 0` sector and of `3J0 + 2J+ + 2J−` in `N_s = 3`
   - domain errors exactly when `|2√(a1a2)/a0| ≥ 1`
   """
   report = VerificationReport('reductions')
   su11 = reduce_su11_form(5.0, 2.0, 2.0)
   report.add('su11 slope', abs(su11.slope - 3.0), 1e-12)
   su2 = reduce_su2_form(3.0, 2.0, 2.0)
   report.add('su2 slope', abs(su2.slope - 5.0), 1e-12)
   for l1, l2 in ((1.0, 0.5), (2.0, 1.0), (0.7, 1.3)):
      mjc = reduce_su2_form(l1 * l1 - l2 * l2, l1 * l2, l1 * l2)
      report.add('su2 slope λ=({}, {})'.format(l1, l2), abs(abs(mjc.slope) - (l1 * l1 + l2 * l2)), 1e-12)
      if l1 > l2:
         jc_ajc = reduce_su11_form(l1 * l1 + l2 * l2, l1 * l2, l1 * l2)
         report.add('su11 slope λ=({}, {})'.format(l1, l2), abs(jc_ajc.slope - (l1 * l1 - l2 * l2)), 1e-12)

   for name, reduction, weight, raising, lowering, a0, a1 in (
      ('su11', su11, 'K0ab', 'K+ab', 'K-ab', 5.0, 2.0),
      ('su2', su2, 'J0', 'J+', 'J-', 3.0, 2.0),
   ):
      form = QuadraticForm.from_coefficients({weight: a0, raising: a1, lowering: a1})
      tilted = form.conjugate(reduction.tilt.symplectic_matrix()).coefficients()
      report.add('engine:{} ladders'.format(name), max(abs(tilted[raising]), abs(tilted[lowering])), tol)
      report.add('engine:{} slope'.format(name), abs(tilted[weight] - reduction.slope), tol)

   basis = build_basis(cutoff, cutoff)
   gens = build_generators(basis)
   sector = sector_indices(basis, lambda n_a, n_b: n_a == n_b)
   values, _ = hermitian_eigensolve(combine({'K0ab': 5.0, 'K+ab': 2.0, 'K-ab': 2.0}, gens).restrict(sector))
   for index in range(2):
      report.add('su11 spacing[{}]'.format(index), abs(values[index + 1] - values[index] - 3.0), tol)
   report.add('su11 lowest', abs(values[0] - 1.5), tol, note='slope·k with k = 1/2')
   sector = sector_indices(basis, lambda n_a, n_b: n_a + n_b == 3)
   values, _ = hermitian_eigensolve(combine({'J0': 3.0, 'J+': 2.0, 'J-': 2.0}, gens).restrict(sector))
   expected = [5.0 * mu for mu in (-1.5, -0.5, 0.5, 1.5)]
   report.add('su2 spectrum j=3/2', float(numpy.max(numpy.abs(values - expected))), tol)

   _expect_error(report, 'domain:su11 (2, 1.2, 1.2)', lambda: reduce_su11_form(2.0, 1.2, 1.2),
      'hyperbolic-out-of-domain')
   _expect_error(report, 'domain:su11 (1, 1, 1)', lambda: reduce_su11_form(1.0, 1.0, 1.0), 'hyperbolic-out-of-domain')
   _expect_error(report, 'domain:su11 (2, 1, 1)', lambda: reduce_su11_form(2.0, 1.0, 1.0), 'degenerate-reduction')
   _expect_error(report, 'domain:su2 (0, 0, 0)', lambda: reduce_su2_form(0.0, 0.0, 0.0), 'degenerate-reduction')
   return report


def _random_hermitian_params(rng):
   kappa = rng.normal(size=4) + 1j * rng.normal(size=4)
   weight_a = abs(kappa[0]) ** 2 + abs(kappa[1]) ** 2
   weight_b = abs(kappa[2]) ** 2 + abs(kappa[3]) ** 2
   kappa[2:] *= math_sqrt(weight_a / weight_b)
   k1, k2, k3, k4 = (complex(value) for value in kappa)
   gamma = (k2.conjugate(), k1.conjugate(), k4.conjugate(), k3.conjugate())
   omega1, omega2 = rng.uniform(0.5, 1.5, size=2)
   omega0 = omega1 + omega2 + rng.uniform(-1.0, 1.0)
   return ModelParams(float(omega0), float(omega1), float(omega2), (k1, k2, k3, k4), gamma)


def random_general_alphas(rng):
   """ Return real symmetric AlphaCoefficients on the general path: `α1 = α2`, `α3 = α4`, `α8 = α9`, `α7 = α10`

   `α5 = α6 = 1`. The uncoupled operator is Hermitian and the two-mode ratio `|α8|/(α1 + α3)` stays below 0.1.

   :param rng: (numpy.random.Generator)
   :return: (AlphaCoefficients)
   """
   a1, a3, a7 = (float(value) for value in rng.uniform(0.01, 0.03, size=3))
   a8 = float(rng.choice((-1.0, 1.0)) * rng.uniform(0.02, 0.1) * (a1 + a3))
   a11 = float(rng.uniform(0.5, 1.5))
   return AlphaCoefficients((a1, a1, a3, a3, 1.0, 1.0, a7, a8, a8, a7, a11), float(rng.uniform(-0.5, 0.5)))


def _general_path_checks(report, tag, alphas, gens, rows, column_indices, levels, tol):
   ledger = tilt_pipeline(alphas)
   if ledger.path != 'general':
      raise Err('verify_pipeline_random', ['expected the general path.  We got: <{}>'.format(ledger.path)])
   report.add('engine' + tag, ledger.residual / alphas.scale(), 1e-9,
      note='|xi|={:.3g} |chi|={:.3g}'.format(abs(ledger.xi), abs(ledger.chi)))

   params = ledger.displacement_params()
   unc1 = combine(alphas.unc1_coefficients(), gens)
   numeric = _undisplace(params, gens, unc1.apply(displaced_columns(params, gens, column_indices)))[rows, :]
   scale = max(numpy.linalg.norm(numeric), 1e-300)
   on_diagonal = numpy.equal.outer(rows, column_indices)
   report.add('diagonal' + tag, float(numpy.linalg.norm(numeric[~on_diagonal]) / scale), tol)
   closed = combine(ledger.final_form.coefficients(), gens).matrix[numpy.ix_(rows, column_indices)]
   report.add('tilted' + tag, float(numpy.linalg.norm(numeric - closed) / scale), tol)

   values, _ = hermitian_eigensolve(unc1.restrict(interior_indices(gens.basis, DEFAULT_MARGIN)))
   expected = sorted(
      ledger.uncoupled_eigenvalue(n, m).real for n in range(2 * levels) for m in range(-n, n + 1, 2)
   )[:levels]
   report.add('oracle' + tag, float(numpy.max(numpy.abs(numpy.sort(values)[:levels] - expected))), tol)
   bracket = max(
      abs(ledger.printed_uncoupled_eigenvalue(n, m) - ledger.uncoupled_eigenvalue(n, m))
      for n, m in ledger.spectrum_indices(levels)
   )
   report.add('bracket' + tag, bracket, tol, note='slopes K0a={:.6g} K0b={:.6g}'.format(
      ledger.slopes['K0a'].real, ledger.slopes['K0b'].real))


def verify_pipeline_random(count=20, seed=7, cutoff=24, tol=1e-6, levels=6):
   """ Return the report of the pipeline on random parameter sets

   - `obstructed[i]` random Hermitian sets with `α5 = α6` and J± present: the two-mode stage needs
     `tanh(2|ξ|) ≥ 1`, so every draw must raise `hyperbolic-out-of-domain`
   - random real symmetric general-path sets (see :py:func:`random_general_alphas`), per set:

      - `engine[i]` the ladder residual of the exact final form
      - `diagonal[i]` relative off-diagonal mass of the numeric `D†·U·D` (rows one margin inside the cutoff, basis
        columns two margins inside)
      - `tilted[i]` numeric `D†·U·D` against the closed final form on the same block
      - `oracle[i]` the lowest `levels` eigenvalues of the truncated `U` against the closed-form `λ(n, m)`
      - `bracket[i]` `λ(n, m)` from the reduction slopes against the exact final form

   - `mjc[i]` modified JC sets `κ1 = γ2 = λ1`, `κ3 = γ4 = λ2` (su(2) path) matched against the `H_I` oracle

   :param count: (int) number of sets per family
   :param seed: (int)
   :param cutoff: (int) per-mode cutoff of the general-path checks
   :param tol: (float)
   :param levels: (int) oracle levels per set
   :return: (VerificationReport) `data['obstructed']`, `data['accepted']`: general-path sets checked,
      `data['skipped']`: general-path sets the pipeline refused
   """
   rng = numpy.random.default_rng(seed)
   report = VerificationReport('pipeline')
   for index in range(count):
      params = _random_hermitian_params(rng)
      _expect_error(report, 'obstructed[{}]'.format(index),
         lambda: tilt_pipeline(alpha_coefficients(params), params), 'hyperbolic-out-of-domain')
   report.data['obstructed'] = len([check for check in report.checks if check.passed])

   basis = build_basis(cutoff, cutoff)
   gens = build_generators(basis)
   margin = conjugation_margin(0.0)
   if 2 * margin >= cutoff:
      raise Err('verify_pipeline_random', [
         'cutoff <{}> leaves no column states inside two margins of <{}>'.format(cutoff, margin)
      ], kind='cutoff-overflow')
   rows = interior_indices(basis, margin)
   column_indices = interior_indices(basis, 2 * margin)
   accepted = 0
   skipped = 0
   for index in range(count):
      alphas = random_general_alphas(rng)
      try:
         _general_path_checks(report, '[{}]'.format(index), alphas, gens, rows, column_indices, levels, tol)
      except Err as err:
         if err.kind not in _DOMAIN_KINDS:
            raise
         report.add('engine[{}]'.format(index), float('inf'), tol, note=err.one_line())
         skipped += 1
         continue
      accepted += 1

   for index in range(max(1, count // 4)):
      l1, l2 = rng.uniform(0.5, 1.5, size=2)
      detuning = rng.uniform(-0.5, 0.5)
      params = ModelParams(2.0 + detuning, 1.0, 1.0, (l1, 0, l2, 0), (0, l1, 0, l2))
      matched = matched_spectrum(params, 25, 25, DEFAULT_MARGIN, 6, tol)
      worst = max([check.residual for check in matched.checks if not check.informational] + [0.0])
      report.add('mjc[{}]'.format(index), worst, tol, note='λ=({:.3f}, {:.3f})'.format(l1, l2))
   report.data['accepted'] = accepted
   report.data['skipped'] = skipped
   LOG.info('verify_pipeline_random: %d obstructed, %d accepted, %d skipped',
      report.data['obstructed'], accepted, skipped)
   return report


def verify_wavefunctions(n_max=4, tol=1e-6, points=80):
   """ Return the report of the oscillator eigenfunctions

   - value `√(2/π)` at the origin for `n_l = m_n = 0`
   - Gram matrix by Gauss-Laguerre quadrature in `x = ρ²`: the printed prefactor gives `2·δ`, `normalized=True`
     gives `δ`; the deviation of the printed norm from 1 is listed as informational
   - states with different `m_n` are orthogonal through the angular integral
   - the Laguerre recurrence against the explicit sum for n ≤ 10
   """
   report = VerificationReport('wavefunctions')
   report.add('origin', abs(wavefunction(0, 0, 0.0, 0.0).value - math_sqrt(2.0 / math_pi)), 1e-15)
   nodes, weights = laggauss(points)
   radii = numpy.sqrt(nodes)
   # ∫ρdρdφ = π·∫dx for φ-independent |ψ|², and laggauss carries e^{−x}
   scaled = math_pi * weights * numpy.exp(nodes)

   eye = numpy.eye(n_max + 1)
   printed_deviation = 0.0
   worst_normalized = 0.0
   for m in range(n_max + 1):
      grams = []
      for normalized in (False, True):
         samples = numpy.array([
            [wavefunction(n, m, float(rho), 0.0, normalized).value for rho in radii] for n in range(n_max + 1)
         ])
         grams.append((samples.conj() * scaled) @ samples.T)
      printed, unit = grams
      report.add('gram m={}'.format(m), float(numpy.max(numpy.abs(printed - 2.0 * eye))), tol, note='printed: 2·δ')
      printed_deviation = max(printed_deviation, float(numpy.max(numpy.abs(numpy.diag(printed) - 1.0))))
      worst_normalized = max(worst_normalized, float(numpy.max(numpy.abs(unit - eye))))
   report.add('normalized gram', worst_normalized, tol)
   report.add_info('printed norm', printed_deviation, tol, note='∫|ψ|²ρdρdφ = 2 with the printed prefactor')

   angles = [2.0 * math_pi * index / 16 for index in range(16)]
   worst_angle = 0.0
   for m in range(n_max + 1):
      for other in range(m + 1, n_max + 1):
         overlap = sum(
            wavefunction(0, m, 1.0, phi).value.conjugate() * wavefunction(0, other, 1.0, phi).value for phi in angles
         )
         worst_angle = max(worst_angle, abs(overlap) / len(angles))
   report.add('angular orthogonality', worst_angle, tol)

   worst_laguerre = 0.0
   for n in range(11):
      for m in range(5):
         for x in (0.0, 0.5, 1.7, 4.0, 9.5):
            exact = assoc_laguerre_sum(n, m, x)
            worst_laguerre = max(worst_laguerre, abs(assoc_laguerre(n, m, x) - exact) / max(abs(exact), 1.0))
   report.add('laguerre recurrence', worst_laguerre, 1e-10)
   return report
