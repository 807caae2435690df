"""
===========
SP4TILT.cli
===========

Overview
========
This module is used by the **script** `sp4tilt`: closed-form spectra, verification runs, coherent state coefficients and
oscillator eigenfunctions from the command line.

.. shell-example::

   .. code-block:: sh

      $ sp4tilt spectrum --config Examples/jc.cfg --out jc.csv
      $ sp4tilt verify algebra --cutoff 12 --margin 2
      $ sp4tilt wavefunction --nl 0 --mn 0 --rho 0 --phi 0

Exit codes:

   - 0: every counted check passed
   - 1: a verification failed
   - 2: invalid input, config or domain error: one diagnostic line on stderr

Output goes to stdout (or `--out`), log records and diagnostics to stderr.

Constants
=========

.. py:data:: SPECTRUM_CSV_HEADER

Functions
=========
.. autofunction:: parse_commandline
.. autofunction:: spectrum_csv
.. autofunction:: main

"""
import argparse
import logging
from argparse import RawDescriptionHelpFormatter
from csv import writer as csv_writer
from io import StringIO
from sys import (
   exit as sys_exit,
   stderr as sys_stderr,
)

from SP4TILT import __version__
from SP4TILT.config import (
   config_dump,
   config_parse_file,
   config_prepare_default_obj,
)
from SP4TILT.hamiltonian import wavefunction
from SP4TILT.models import PRESET_NAMES
from SP4TILT.report import (
   format_float,
   render_csv,
   render_text,
)
from SP4TILT.tilt import (
   DEFAULT_PHASES,
   perelomov_state,
)
from SP4TILT.transform import (
   cfg_to_complex,
   cfg_to_float,
)
from SP4TILT.utils import (
   Err,
   as_fraction,
)
from SP4TILT.verify import (
   convergence_scan,
   matched_spectrum,
   verify_algebra,
   verify_ccr,
   verify_coherent_states,
   verify_model,
   verify_pipeline_random,
   verify_reductions,
   verify_tilting_grid,
   verify_wavefunctions,
)


LOG = logging.getLogger(__name__)

SPECTRUM_CSV_HEADER = ('n', 'm_n', 'E_plus', 'E_minus', 'oracle_match', 'abs_err', 'flag')

VERIFY_TARGETS = ('algebra', 'ccr', 'tilting', 'model', 'coherent', 'reductions', 'pipeline', 'wavefunctions',
   'convergence')

# fraction of --max-xi per grid magnitude
_MAGNITUDE_STEPS = (0.2, 0.6, 1.0)


class _ArgumentParser(argparse.ArgumentParser):
   """ ArgumentParser raising Err instead of exiting: usage errors share exit code 2 and the one-line diagnostic
   """

   def error(self, message):
      raise Err(self.prog, [message], kind='invalid-argument')


def parse_commandline(argv=None):
   """ Return the parsed commandline arguments

   :param argv: (list) arguments without the program name: defaults to `sys.argv[1:]`
   :return: (obj) argparse.Namespace
   :raise Err: usage errors
   """
   main_parser = _ArgumentParser(
      prog='sp4tilt',
      description='sp(4,R) tilting transformations: closed-form spectra checked against a truncated Fock space oracle',
      formatter_class=RawDescriptionHelpFormatter,
      epilog='''EXAMPLES:
   sp4tilt spectrum --config Examples/jc.cfg
   sp4tilt --dump-config default.cfg
   sp4tilt verify algebra --cutoff 12 --margin 2
   sp4tilt verify tilting --max-xi 0.5
   sp4tilt verify model jc_ajc --param lambda2=1
   sp4tilt coherent --kind su11 --k 1/2 --xi 0.3,0.1 --n 10
   sp4tilt wavefunction --nl 0 --mn 0 --rho 0 --phi 0
   '''
   )
   main_parser.add_argument('--version', action='version', version='%(prog)s {}'.format(__version__))
   main_parser.add_argument('-v', '--verbose', action='count', default=0, help='-v: INFO, -vv: DEBUG log records')
   main_parser.add_argument('--dump-config', metavar='FILE', help='write the (loaded or default) config to FILE')

   sub_parsers = main_parser.add_subparsers(dest='command', parser_class=_ArgumentParser)

   spectrum_parser = sub_parsers.add_parser('spectrum', help='closed-form spectrum with oracle residual columns')
   spectrum_parser.add_argument('--config', metavar='FILE', help='run configuration: defaults when missing')
   spectrum_parser.add_argument('--cutoff', type=int, help='override cutoff_a and cutoff_b')
   spectrum_parser.add_argument('--n-max', type=int, help='override n_max')
   spectrum_parser.add_argument('--out', metavar='FILE', help='CSV output file: overrides the config `out`')

   verify_parser = sub_parsers.add_parser('verify', help='run one verification scenario')
   verify_parser.add_argument('target', choices=VERIFY_TARGETS)
   verify_parser.add_argument('name', nargs='?', choices=PRESET_NAMES, help='preset name of `verify model`')
   verify_parser.add_argument('--cutoff', type=int, help='Fock cutoff per mode')
   verify_parser.add_argument('--margin', type=int, help='interior margin')
   verify_parser.add_argument('--n-max', type=int, help='largest n compared (`model`)')
   verify_parser.add_argument('--max-xi', type=float, default=0.5, help='largest tilt magnitude (`tilting`)')
   verify_parser.add_argument('--count', type=int, default=20, help='random parameter sets (`pipeline`)')
   verify_parser.add_argument('--seed', type=int, default=7, help='random seed (`pipeline`)')
   verify_parser.add_argument('--cutoffs', default='20,30,40', help='ascending cutoffs (`convergence`)')
   verify_parser.add_argument('--config', metavar='FILE', help='run configuration (`convergence`)')
   verify_parser.add_argument('--param', action='append', default=[], metavar='KEY=VALUE',
      help='preset free parameter (`model`): repeatable')
   verify_parser.add_argument('--csv', action='store_true', help='CSV report instead of text')
   verify_parser.add_argument('--out', metavar='FILE', help='report output file')

   coherent_parser = sub_parsers.add_parser('coherent', help='Perelomov coherent state coefficients')
   coherent_parser.add_argument('--kind', choices=('su11', 'su2'), required=True)
   coherent_parser.add_argument('--k', help='Bargmann index (su11): e.g. 1/4')
   coherent_parser.add_argument('--j', help='spin (su2): e.g. 3/2')
   coherent_parser.add_argument('--xi', required=True, help='tilt parameter written RE,IM')
   coherent_parser.add_argument('--n', type=int, default=20, help='series length (su11)')
   coherent_parser.add_argument('--offset', type=int, default=0, help='excitation above the lowest weight')
   coherent_parser.add_argument('--out', metavar='FILE')

   wavefunction_parser = sub_parsers.add_parser('wavefunction', help='oscillator eigenfunction at one point')
   wavefunction_parser.add_argument('--nl', type=int, required=True)
   wavefunction_parser.add_argument('--mn', type=int, required=True)
   wavefunction_parser.add_argument('--rho', type=float, required=True)
   wavefunction_parser.add_argument('--phi', type=float, required=True)
   wavefunction_parser.add_argument('--normalized', action='store_true', help='divide the printed prefactor by √2')

   args = main_parser.parse_args(argv)
   if args.command is None and not args.dump_config:
      main_parser.print_help()
      sys_exit(2)
   if args.command == 'verify' and args.target == 'model' and args.name is None:
      raise Err('sp4tilt verify', ['target <model> needs a preset name: <{}>'.format(', '.join(PRESET_NAMES))])
   if args.command == 'coherent' and (args.k if args.kind == 'su11' else args.j) is None:
      raise Err('sp4tilt coherent', ['kind <{}> needs {}'.format(args.kind, '--k' if args.kind == 'su11' else '--j')])
   return args


# ===========================================================================================================================
# output
# ===========================================================================================================================
def spectrum_csv(table):
   """ Return the CSV text of a matched SpectrumTable: header :py:data:`SPECTRUM_CSV_HEADER`, 17 significant digits

   `oracle_match` is `true`/`false`, empty for non-real entries; non-real entries carry the magnitude of the imaginary
   root in `E_plus`/`E_minus`.
   """
   buffer = StringIO()
   out = csv_writer(buffer, lineterminator='\n')
   out.writerow(SPECTRUM_CSV_HEADER)
   for entry in table.entries:
      if entry.oracle_match is None:
         match = ''
      else:
         match = 'true' if entry.oracle_match else 'false'
      out.writerow([
         entry.n, entry.m_n, format_float(entry.e_plus), format_float(entry.e_minus), match,
         format_float(entry.residual), entry.flag,
      ])
   return buffer.getvalue()


def _write(text, path):
   if path:
      with open(path, 'w', encoding='utf-8') as file_:
         file_.write(text)
      LOG.info('wrote %s', path)
   else:
      print(text, end='')


def _free_params(pairs):
   """ Return {key: value} of `KEY=VALUE` strings: values are floats or `re,im` complex
   """
   free = {}
   for pair in pairs:
      key, separator, value = pair.partition('=')
      if not separator:
         raise Err('sp4tilt verify', ['--param must be KEY=VALUE.  We got: <{}>'.format(pair)])
      extra_err_info = '--param {}'.format(pair)
      free[key.strip()] = cfg_to_complex(value, extra_err_info) if ',' in value else cfg_to_float(value, extra_err_info)
   return free


def _load_config(path):
   return config_parse_file(path) if path else config_prepare_default_obj()


# ===========================================================================================================================
# commands
# ===========================================================================================================================
def _run_spectrum(args, run_config):
   cutoff_a, cutoff_b, margin, n_max = run_config.counts()
   if args.cutoff:
      cutoff_a = cutoff_b = args.cutoff
   if args.n_max is not None:
      n_max = args.n_max
   report = matched_spectrum(run_config.model_params(), cutoff_a, cutoff_b, margin, n_max, run_config['tol_match'])
   _write(spectrum_csv(report.data['table']), args.out or run_config['out'])
   LOG.info('spectrum: %s', report.summary())
   return report.passed()


def _run_verify(args, run_config):
   target = args.target
   if target == 'algebra':
      report = verify_algebra(args.cutoff or 12, 2 if args.margin is None else args.margin)
   elif target == 'ccr':
      report = verify_ccr(args.cutoff or 20, 2 if args.margin is None else args.margin)
   elif target == 'tilting':
      magnitudes = tuple(step * args.max_xi for step in _MAGNITUDE_STEPS)
      report = verify_tilting_grid(magnitudes, DEFAULT_PHASES, cutoff=args.cutoff or 24)
   elif target == 'model':
      report = verify_model(args.name, cutoff=args.cutoff, n_max=args.n_max,
         margin=4 if args.margin is None else args.margin, **_free_params(args.param))
   elif target == 'coherent':
      report = verify_coherent_states()
   elif target == 'reductions':
      report = verify_reductions()
   elif target == 'pipeline':
      report = verify_pipeline_random(args.count, args.seed, cutoff=args.cutoff or 24)
   elif target == 'wavefunctions':
      report = verify_wavefunctions()
   else:
      cutoffs = [int(value) for value in args.cutoffs.split(',') if value.strip()]
      margin = run_config['margin'] if args.margin is None else args.margin
      report = convergence_scan(run_config.model_params(), cutoffs, margin, tol=run_config['tol_match'])
   _write(render_csv(report) if args.csv else render_text(report), args.out)
   return report.passed()


def _run_coherent(args):
   label = args.k if args.kind == 'su11' else args.j
   xi = cfg_to_complex(args.xi, '--xi')
   coefficients = perelomov_state(args.kind, as_fraction(label), args.offset, xi, args.n)
   buffer = StringIO()
   out = csv_writer(buffer, lineterminator='\n')
   out.writerow(('index', 're', 'im', 'abs2'))
   for index, value in enumerate(coefficients):
      out.writerow((index, format_float(value.real), format_float(value.imag), format_float(abs(value) ** 2)))
   _write(buffer.getvalue(), args.out)
   return True


def _run_wavefunction(args):
   sample = wavefunction(args.nl, args.mn, args.rho, args.phi, args.normalized)
   buffer = StringIO()
   out = csv_writer(buffer, lineterminator='\n')
   out.writerow(('n_l', 'm_n', 'rho', 'phi', 're', 'im'))
   out.writerow((args.nl, args.mn, format_float(args.rho), format_float(args.phi), format_float(sample.value.real),
      format_float(sample.value.imag)))
   _write(buffer.getvalue(), None)
   return True


def _configure_logging(verbose):
   level = logging.WARNING
   if verbose == 1:
      level = logging.INFO
   elif verbose > 1:
      level = logging.DEBUG
   logging.basicConfig(level=level, stream=sys_stderr, format='%(levelname)s %(name)s: %(message)s')


def main(argv=None):
   """ main sp4tilt entry point

   :param argv: (list) arguments without the program name
   :return: (int) exit code 0, 1 or 2
   """
   Err.print_banner = False
   try:
      args = parse_commandline(argv)
      _configure_logging(args.verbose)
      run_config = None
      if args.command == 'spectrum' or (args.command == 'verify' and args.target == 'convergence'):
         run_config = _load_config(args.config)
      if args.dump_config:
         _write(config_dump(run_config or config_prepare_default_obj()), args.dump_config)

      if args.command is None:
         passed = True
      elif args.command == 'spectrum':
         passed = _run_spectrum(args, run_config)
      elif args.command == 'verify':
         passed = _run_verify(args, run_config)
      elif args.command == 'coherent':
         passed = _run_coherent(args)
      else:
         passed = _run_wavefunction(args)
   except Err as err:
      sys_stderr.write('sp4tilt: {}\n'.format(err.one_line()))
      return 2
   except (IOError, OSError) as err:
      sys_stderr.write('sp4tilt: io: {}\n'.format(err))
      return 2
   except SystemExit as exc:
      # --help, --version and the bare command
      return exc.code if isinstance(exc.code, int) else 0
   finally:
      Err.print_banner = True
   return 0 if passed else 1


# ++++++++++++++++++++++++++++++++++++++++++++++++++++++++++++++++++++++ #
if __name__ == '__main__':
   sys_exit(main())
