""" SP4TILT: EXAMPLE 1: JAYNES-CUMMINGS SPECTRUM FROM A RUN CONFIGURATION
"""
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

SCRIPT_PATH = path_dirname(path_abspath(inspect_getfile(inspect_currentframe())))
PROJECT_ROOT = path_dirname(SCRIPT_PATH)

ROOT_PACKAGE_NAME = 'SP4TILT'
ROOT_PACKAGE_PATH = path_join(PROJECT_ROOT, ROOT_PACKAGE_NAME)

sys_path.insert(0, PROJECT_ROOT)

from SP4TILT.cli import spectrum_csv
from SP4TILT.config import (
   config_dump,
   config_emit_default_obj,
   config_parse,
   config_parse_file,
)
from SP4TILT.models import model_spectrum
from SP4TILT.report import render_text
from SP4TILT.verify import (
   convergence_scan,
   matched_spectrum,
)


# detuned Jaynes-Cummings: only the free parameters and the numerics differ from the defaults
jc_detuned_source = '''
# Jaynes-Cummings model: omega0 - omega1 = 0.5
model = jc
kappa = 0.8
omega0 = 1.5
omega1 = 1

cutoff_a = 40
cutoff_b = 40
n_max = 6
'''


def main():
   print('\n\n============== EXAMPLE: DEFAULT RUN CONFIGURATION ==============\n')
   print(config_emit_default_obj())

   # EXAMPLE: the sample file and the closed form against the truncated Fock space
   run_config = config_parse_file(path_join(SCRIPT_PATH, 'jc.cfg'))
   cutoff_a, cutoff_b, margin, n_max = run_config.counts()
   report = matched_spectrum(run_config.model_params(), cutoff_a, cutoff_b, margin, n_max, run_config['tol_match'])

   print('\n\n============== EXAMPLE: SPECTRUM CSV: jc.cfg ==============\n')
   print(spectrum_csv(report.data['table']))
   print(render_text(report))

   # EXAMPLE: the printed full line adds H0 to the interaction energies
   print('\n\n============== EXAMPLE: FULL LINE E(n) = ħω1(n + 1/2) ± ... ==============\n')
   jc_preset = run_config.preset()
   for n in range(n_max + 1):
      e_plus, e_minus = model_spectrum(jc_preset, n)
      print('   n = {}:  E+ = {:.12f}  E- = {:.12f}'.format(n, e_plus, e_minus))

   # EXAMPLE: a config from a string, dumped back in template order
   run_config = config_parse(jc_detuned_source, source_name='jc_detuned_source')
   print('\n\n============== EXAMPLE: DUMP OF A PARSED CONFIGURATION ==============\n')
   print(config_dump(run_config))

   # EXAMPLE: the lowest oracle eigenvalues settle as the cutoff grows
   report = convergence_scan(run_config.model_params(), (20, 30, 40), run_config['margin'], count=6)
   print('\n\n============== EXAMPLE: CONVERGENCE SCAN ==============\n')
   print(render_text(report))


# ++++++++++++++++++++++++++++++++++++++++++++++++++++++++++++++++++++++ #
if __name__ == '__main__':
   pass
   main()
