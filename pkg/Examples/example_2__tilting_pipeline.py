""" SP4TILT: EXAMPLE 2: TILTING PIPELINE, EIGENVALUE REDUCTIONS AND COHERENT STATES
"""
from cmath import exp as cmath_exp
from fractions import Fraction
from inspect import (
   getfile as inspect_getfile,
   currentframe as inspect_currentframe,
)
from os.path import (
   abspath as path_abspath,
   dirname as path_dirname,
   join as path_join,
)
from sys import path as sys_path

import numpy

SCRIPT_PATH = path_dirname(path_abspath(inspect_getfile(inspect_currentframe())))
PROJECT_ROOT = path_dirname(SCRIPT_PATH)

ROOT_PACKAGE_NAME = 'SP4TILT'
ROOT_PACKAGE_PATH = path_join(PROJECT_ROOT, ROOT_PACKAGE_NAME)

sys_path.insert(0, PROJECT_ROOT)

from SP4TILT.algebra import format_coefficients
from SP4TILT.hamiltonian import (
   alpha_coefficients,
   closed_form_spectrum,
   tilt_pipeline,
)
from SP4TILT.models import (
   PRESET_NAMES,
   preset,
)
from SP4TILT.tilt import (
   perelomov_state,
   reduce_su11_form,
   reduce_su2_form,
)


def main():
   # EXAMPLE: which reduction path each preset takes
   print('\n\n============== EXAMPLE: PIPELINE PATH PER PRESET ==============\n')
   for name in PRESET_NAMES:
      params = preset(name).params
      ledger = tilt_pipeline(alpha_coefficients(params), params)
      print('   {:15s} {}'.format(name, ledger))

   # EXAMPLE: the modified Jaynes-Cummings model with unequal couplings runs the su(2) stage
   print('\n\n============== EXAMPLE: MODIFIED JAYNES-CUMMINGS λ = (1, 0.5) ==============\n')
   params = preset('mjc', lambda1=1.0, lambda2=0.5).params
   ledger = tilt_pipeline(alpha_coefficients(params), params)
   print('   path:       {}'.format(ledger.path))
   print('   chi:        {}'.format(ledger.chi))
   print('   final form: {}'.format(format_coefficients(ledger.final_form.coefficients())))
   for entry in closed_form_spectrum(params, 2):
      print('   {}'.format(entry))

   # EXAMPLE: the two worked reductions
   print('\n\n============== EXAMPLE: REDUCTIONS ==============\n')
   print('   5K0 + 2K+ + 2K-  ->  {}'.format(reduce_su11_form(5.0, 2.0, 2.0)))
   print('   3J0 + 2J+ + 2J-  ->  {}'.format(reduce_su2_form(3.0, 2.0, 2.0)))

   # EXAMPLE: Perelomov coherent states: probabilities over the lowest states
   print('\n\n============== EXAMPLE: COHERENT STATES ==============\n')
   xi = 0.4 * cmath_exp(0.7j)
   for k in (Fraction(1, 4), Fraction(1, 2), Fraction(1)):
      coefficients = perelomov_state('su11', k, 0, xi, 40)
      print('   su11 k={:>3}: {}'.format(str(k), numpy.round(numpy.abs(coefficients[:6]) ** 2, 6)))
   coefficients = perelomov_state('su2', Fraction(3, 2), 0, xi)
   print('   su2  j=3/2: {}'.format(numpy.round(numpy.abs(coefficients) ** 2, 6)))


# ++++++++++++++++++++++++++++++++++++++++++++++++++++++++++++++++++++++ #
if __name__ == '__main__':
   pass
   main()
