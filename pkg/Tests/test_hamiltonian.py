""" tests SP4TILT hamiltonian: model parameters, uncoupled operators, the tilting pipeline and closed-form spectra
"""
from inspect import (
   getfile as inspect_getfile,
   currentframe as inspect_currentframe,
)
from math import (
   pi as math_pi,
   sqrt as math_sqrt,
)
from os.path import (
   abspath as path_abspath,
   dirname as path_dirname,
   join as path_join,
)
from sys import path as sys_path

import numpy
from nose.tools import (
   eq_,
   ok_,
   raises as nose_raises,
)


SCRIPT_PATH = path_dirname(path_abspath(inspect_getfile(inspect_currentframe())))
PROJECT_ROOT = path_dirname(SCRIPT_PATH)

ROOT_PACKAGE_NAME = 'SP4TILT'
ROOT_PACKAGE_PATH = path_join(PROJECT_ROOT, ROOT_PACKAGE_NAME)

sys_path.insert(0, PROJECT_ROOT)

from SP4TILT.algebra import build_generators
from SP4TILT.fock import (
   build_basis,
   interior_indices,
)
from SP4TILT.hamiltonian import (
   AlphaCoefficients,
   ModelParams,
   SpectrumEntry,
   alpha_coefficients,
   assoc_laguerre,
   assoc_laguerre_sum,
   build_hamiltonian,
   closed_form_spectrum,
   component_spectra_report,
   tilt_pipeline,
   uncoupled_operator,
   unc1_operator,
   wavefunction,
)
from SP4TILT.utils import (
   Err,
   MethodDeactivatedErr,
)

from base_examples import (
   get_model_params__jc,
   get_model_params__mjc,
)


def test_hamiltonian_model_params():
   """ Tests: test_hamiltonian_model_params
   """
   print('::: TEST: test_hamiltonian_model_params()')
   params = get_model_params__jc()
   ok_(params.hermitian, msg=None)
   eq_(params.delta_omega, 0.0, msg=None)
   ok_(params.is_mode_a_coupled(), msg=None)
   ok_(not params.is_mode_b_coupled(), msg=None)

   params = ModelParams(3.0, 1.0, 0.5, (1, 0, 0, 0), (0, 2, 0, 0), hbar=2.0)
   ok_(not params.hermitian, msg=None)
   eq_(params.delta_omega, 0.75, msg=None)
   eq_(params.detuning_energy, 1.5, msg=None)
   eq_(params, ModelParams(3.0, 1.0, 0.5, (1, 0, 0, 0), (0, 2, 0, 0), hbar=2.0), msg=None)


def test_hamiltonian_model_params_errors():
   """ Tests: test_hamiltonian_model_params_errors
   """
   print('::: TEST: test_hamiltonian_model_params_errors()')
   for args, kwargs in (
      ((1.0, 1.0, 0.0, (1, 0, 0, 0), (0, 1, 0, 0)), {'hbar': 0.0}),
      ((1.0 + 1j, 1.0, 0.0, (1, 0, 0, 0), (0, 1, 0, 0)), {}),
      ((1.0, 1.0, 0.0, (1, 0, 0), (0, 1, 0, 0)), {}),
   ):
      try:
         ModelParams(*args, **kwargs)
      except Err:
         pass
      else:
         ok_(False, msg='ModelParams{} must raise'.format(args))


@nose_raises(MethodDeactivatedErr)
def test_hamiltonian_model_params_immutable_expect_failure():
   """ Tests: test_hamiltonian_model_params_immutable_expect_failure
   """
   print('::: TEST: test_hamiltonian_model_params_immutable_expect_failure()')
   get_model_params__jc().omega0 = 2.0


def test_hamiltonian_build():
   """ Tests: test_hamiltonian_build
   """
   print('::: TEST: test_hamiltonian_build()')
   basis = build_basis(8, 1)
   h, h0, h_i = build_hamiltonian(get_model_params__jc(), basis)
   eq_(h.dimension, 2 * basis.dimension, msg=None)
   ok_(h.is_hermitian(), msg=None)
   ok_(numpy.allclose(h.matrix, (h0 + h_i).matrix), msg=None)
   # on resonance the excitation number a†a + σ0/2 is conserved
   ok_(numpy.max(numpy.abs(h0.commutator(h_i).matrix)) < 1e-12, msg=None)
   eq_(h.label, 'H', msg=None)


def test_hamiltonian_uncoupled_operator():
   """ Tests: test_hamiltonian_uncoupled_operator
   """
   print('::: TEST: test_hamiltonian_uncoupled_operator()')
   params = get_model_params__mjc()
   basis = build_basis(8, 8)
   gens = build_generators(basis)
   indices = interior_indices(basis, 2)
   direct = uncoupled_operator(params, basis)
   assembled = unc1_operator(alpha_coefficients(params), gens)
   ok_(numpy.max(numpy.abs(direct.restrict(indices) - assembled.restrict(indices))) < 1e-12, msg=None)
   ok_(uncoupled_operator(params, basis, component=2).is_hermitian(), msg=None)


@nose_raises(Err)
def test_hamiltonian_uncoupled_operator_expect_failure():
   """ Tests: test_hamiltonian_uncoupled_operator_expect_failure
   """
   print('::: TEST: test_hamiltonian_uncoupled_operator_expect_failure()')
   uncoupled_operator(get_model_params__jc(), build_basis(2, 2), component=3)


def test_hamiltonian_alpha_coefficients():
   """ Tests: test_hamiltonian_alpha_coefficients
   """
   print('::: TEST: test_hamiltonian_alpha_coefficients()')
   alphas = alpha_coefficients(get_model_params__mjc())
   eq_(alphas.as_tuple(), (0j, 0j, 0j, 0j, 1 + 0j, 0.25 + 0j, 0j, 0.5 + 0j, 0.5 + 0j, 0j, 1.25 + 0j), msg=None)
   eq_(alphas.constant, 0.625 + 0j, msg=None)
   coefficients = alphas.unc1_coefficients()
   eq_(coefficients['K0ab'], 1.25 + 0j, msg=None)
   eq_(coefficients['J0'], 0.75 + 0j, msg=None)
   eq_(coefficients['J+'], 0.5 + 0j, msg=None)


@nose_raises(Err)
def test_hamiltonian_alpha_coefficients_expect_failure():
   """ Tests: test_hamiltonian_alpha_coefficients_expect_failure
   """
   print('::: TEST: test_hamiltonian_alpha_coefficients_expect_failure()')
   AlphaCoefficients((1.0, 2.0), 0.0)


def test_hamiltonian_pipeline_diagonal():
   """ Tests: test_hamiltonian_pipeline_diagonal
   """
   print('::: TEST: test_hamiltonian_pipeline_diagonal()')
   params = get_model_params__jc()
   ledger = tilt_pipeline(alpha_coefficients(params), params)
   eq_(ledger.path, 'diagonal', msg=None)
   eq_(ledger.spectator, 'b', msg=None)
   eq_(ledger.spectrum_indices(2), [(0, 0), (1, 1), (2, 2)], msg=None)
   for n in range(4):
      ok_(abs(ledger.uncoupled_eigenvalue(n, n) - (n + 1)) < 1e-14, msg=n)
   ok_(ledger.residual < 1e-15, msg=None)
   eq_(ledger.displacement_params().order, 'pipeline', msg=None)


def test_hamiltonian_pipeline_su2():
   """ Tests: test_hamiltonian_pipeline_su2
   """
   print('::: TEST: test_hamiltonian_pipeline_su2()')
   params = get_model_params__mjc()
   ledger = tilt_pipeline(alpha_coefficients(params), params)
   eq_(ledger.path, 'su2', msg=None)
   eq_(ledger.spectator, '', msg=None)
   ok_(abs(ledger.slopes['J0'] - 1.25) < 1e-12, msg=None)
   ok_(abs(ledger.chi) > 0.0, msg=None)
   eq_(ledger.xi, 0j, msg=None)
   eq_(ledger.spectrum_indices(1), [(0, 0), (1, -1), (1, 1)], msg=None)
   ok_(ledger.residual < 1e-9, msg=None)


def test_hamiltonian_pipeline_routes():
   """ Tests: test_hamiltonian_pipeline_routes
   """
   print('::: TEST: test_hamiltonian_pipeline_routes()')
   ledger = tilt_pipeline(AlphaCoefficients((0, 0, 0, 0, 1, 1, 0.4, 0, 0, 0.4, 0), 0.0))
   eq_(ledger.path, 'su11_two_mode', msg=None)
   ok_(abs(ledger.slopes['K0ab'] - math_sqrt(3.36)) < 1e-12, msg=None)

   ledger = tilt_pipeline(AlphaCoefficients((0.2, 0.2, 0, 0, 1, 1, 0, 0, 0, 0, 0), 0.0))
   eq_(ledger.path, 'single_mode', msg=None)
   ok_(abs(ledger.slopes['K0a'] - math_sqrt(3.36)) < 1e-12, msg=None)
   ok_(abs(ledger.slopes['K0b'] - 2.0) < 1e-12, msg=None)
   ok_(ledger.residual < 1e-9, msg=None)


def test_hamiltonian_pipeline_condition_violated():
   """ Tests: test_hamiltonian_pipeline_condition_violated
   """
   print('::: TEST: test_hamiltonian_pipeline_condition_violated()')
   try:
      tilt_pipeline(AlphaCoefficients((0.1, 0, 0, 0, 1, 0, 0, 0.1, 0, 0, 0), 0.0))
   except Err as err:
      eq_(err.kind, 'condition-violated', msg=None)
   else:
      ok_(False, msg='the general path with α5 ≠ α6 must raise')


def test_hamiltonian_printed_uncoupled_eigenvalue():
   """ Tests: test_hamiltonian_printed_uncoupled_eigenvalue
   """
   print('::: TEST: test_hamiltonian_printed_uncoupled_eigenvalue()')
   for alphas in (
      AlphaCoefficients((0, 0, 0, 0, 1, 1, 0.4, 0, 0, 0.4, 0.3), 0.0),
      AlphaCoefficients((0.2, 0.2, 0, 0, 1, 1, 0, 0, 0, 0, 0.3), 0.0),
      AlphaCoefficients((0.02, 0.02, 0.01, 0.01, 1, 1, 0.015, 0.002, 0.002, 0.015, 0.3), 0.0),
   ):
      ledger = tilt_pipeline(alphas)
      for n, m in ledger.spectrum_indices(4):
         printed = ledger.printed_uncoupled_eigenvalue(n, m)
         ok_(abs(printed - ledger.uncoupled_eigenvalue(n, m)) < 1e-9, msg=(ledger.path, n, m))
   eq_(ledger.path, 'general', msg=None)

   # single mode: K0a slope on n_a, K0b slope on n_b
   ledger = tilt_pipeline(AlphaCoefficients((0.2, 0.2, 0, 0, 1, 1, 0, 0, 0, 0, 0), 0.0))
   expected = math_sqrt(3.36) * 0.5 * 2.5 + 2.0 * 0.5 * 1.5 - 1.0
   ok_(abs(ledger.printed_uncoupled_eigenvalue(3, 1) - expected) < 1e-12, msg=None)


def test_hamiltonian_spectrum_entry():
   """ Tests: test_hamiltonian_spectrum_entry
   """
   print('::: TEST: test_hamiltonian_spectrum_entry()')
   entry = SpectrumEntry(1, 1, 2.0, -2.0)
   ok_(entry.is_real, msg=None)
   eq_(entry.matched(1e-3, False).flag, 'unmatched', msg=None)
   eq_(entry.matched(1e-12, True).oracle_match, True, msg=None)
   non_real = SpectrumEntry(2, 2, 0.5, -0.5, 'non-real')
   eq_(non_real.matched(1.0, False).flag, 'non-real', msg=None)


@nose_raises(Err)
def test_hamiltonian_spectrum_entry_expect_failure():
   """ Tests: test_hamiltonian_spectrum_entry_expect_failure
   """
   print('::: TEST: test_hamiltonian_spectrum_entry_expect_failure()')
   SpectrumEntry(0, 0, 1.0, -1.0, 'imaginary')


def test_hamiltonian_closed_form_spectrum():
   """ Tests: test_hamiltonian_closed_form_spectrum
   """
   print('::: TEST: test_hamiltonian_closed_form_spectrum()')
   table = closed_form_spectrum(get_model_params__jc(), 2)
   eq_(len(table), 3, msg=None)
   eq_(table.metadata['path'], 'diagonal', msg=None)
   expected = [1.0, -1.0, math_sqrt(2.0), -math_sqrt(2.0), math_sqrt(3.0), -math_sqrt(3.0)]
   ok_(numpy.allclose(table.energies(), expected, atol=1e-14), msg=None)
   ok_(table.metadata['bracket_deviation'] < 1e-12, msg=None)

   table = closed_form_spectrum(get_model_params__mjc(), 1)
   for entry in table:
      expected = math_sqrt(1.25 * (0.5 * (entry.n + entry.m_n) + 1.0))
      ok_(abs(entry.e_plus - expected) < 1e-12, msg=entry)
   ok_(table.metadata['bracket_deviation'] < 1e-12, msg=None)


@nose_raises(Err)
def test_hamiltonian_closed_form_spectrum_expect_failure():
   """ Tests: test_hamiltonian_closed_form_spectrum_expect_failure
   """
   print('::: TEST: test_hamiltonian_closed_form_spectrum_expect_failure()')
   closed_form_spectrum(get_model_params__jc(), -1)


def test_hamiltonian_component_spectra():
   """ Tests: test_hamiltonian_component_spectra
   """
   print('::: TEST: test_hamiltonian_component_spectra()')
   report = component_spectra_report(get_model_params__jc(), build_basis(12, 2), 2)
   ok_(report.passed(), msg=[check for check in report.failed_checks()])
   # a·a† = a†a + 1: the components differ by one level
   eq_(report.data['shift'], 1, msg=None)
   eq_(len(report.data['component1']), 11, msg=None)


def test_hamiltonian_assoc_laguerre():
   """ Tests: test_hamiltonian_assoc_laguerre
   """
   print('::: TEST: test_hamiltonian_assoc_laguerre()')
   eq_(assoc_laguerre(0, 3, 2.0), 1.0, msg=None)
   ok_(abs(assoc_laguerre(1, 1, 0.5) - 1.5) < 1e-15, msg=None)
   for n in range(6):
      for m in range(4):
         for x in (0.0, 0.7, 2.5):
            ok_(abs(assoc_laguerre(n, m, x) - assoc_laguerre_sum(n, m, x)) < 1e-10, msg=(n, m, x))


@nose_raises(Err)
def test_hamiltonian_assoc_laguerre_expect_failure():
   """ Tests: test_hamiltonian_assoc_laguerre_expect_failure
   """
   print('::: TEST: test_hamiltonian_assoc_laguerre_expect_failure()')
   assoc_laguerre(-1, 0, 1.0)


def test_hamiltonian_wavefunction():
   """ Tests: test_hamiltonian_wavefunction
   """
   print('::: TEST: test_hamiltonian_wavefunction()')
   sample = wavefunction(0, 0, 0.0, 0.0)
   ok_(abs(sample.value - math_sqrt(2.0 / math_pi)) < 1e-15, msg=None)
   sample = wavefunction(0, 0, 0.0, 0.0, normalized=True)
   ok_(abs(sample.value - 1.0 / math_sqrt(math_pi)) < 1e-15, msg=None)
   # e^{i·m·φ}: a quarter turn multiplies m = 2 by −1
   first = wavefunction(1, 2, 1.0, 0.0).value
   turned = wavefunction(1, 2, 1.0, 0.5 * math_pi).value
   ok_(abs(turned + first) < 1e-14, msg=None)
   eq_(wavefunction(1, 2, 1.0, 0.0).m_n, 2, msg=None)


def test_hamiltonian_wavefunction_errors():
   """ Tests: test_hamiltonian_wavefunction_errors
   """
   print('::: TEST: test_hamiltonian_wavefunction_errors()')
   for args in ((0, 0, -1.0, 0.0), (-1, 0, 1.0, 0.0), (0, 1.5, 1.0, 0.0)):
      try:
         wavefunction(*args)
      except Err:
         pass
      else:
         ok_(False, msg='wavefunction{} must raise'.format(args))


# ++++++++++++++++++++++++++++++++++++++++++++++++++++++++++++++++++++++#
if __name__ == '__main__':
   pass
   test_hamiltonian_model_params()
   test_hamiltonian_model_params_errors()
   test_hamiltonian_model_params_immutable_expect_failure()
   test_hamiltonian_build()
   test_hamiltonian_uncoupled_operator()
   test_hamiltonian_uncoupled_operator_expect_failure()
   test_hamiltonian_alpha_coefficients()
   test_hamiltonian_alpha_coefficients_expect_failure()
   test_hamiltonian_pipeline_diagonal()
   test_hamiltonian_pipeline_su2()
   test_hamiltonian_pipeline_routes()
   test_hamiltonian_pipeline_condition_violated()
   test_hamiltonian_printed_uncoupled_eigenvalue()
   test_hamiltonian_spectrum_entry()
   test_hamiltonian_spectrum_entry_expect_failure()
   test_hamiltonian_closed_form_spectrum()
   test_hamiltonian_closed_form_spectrum_expect_failure()
   test_hamiltonian_component_spectra()
   test_hamiltonian_assoc_laguerre()
   test_hamiltonian_assoc_laguerre_expect_failure()
   test_hamiltonian_wavefunction()
   test_hamiltonian_wavefunction_errors()
