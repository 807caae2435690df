""" tests SP4TILT config: parse, validate, emit and dump of run configurations
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

from SP4TILT.config import (
   RUN_TEMPLATE,
   config_dump,
   config_emit_default_obj,
   config_parse,
   config_parse_file,
   config_prepare_default_obj,
   config_validate,
   format_config_value,
)
from SP4TILT.utils import Err

from base_examples import (
   JC_CONFIG_PATH,
   get_run_config_source__custom,
   get_run_config_source__jc,
)


def expect_config_error(source, msg):
   try:
      config_parse(source)
   except Err as err:
      eq_(err.kind, 'config', msg=msg)
   else:
      ok_(False, msg=msg)


def test_config_parse():
   """ Tests: test_config_parse
   """
   print('::: TEST: test_config_parse()')
   run_config = config_parse(get_run_config_source__jc())
   eq_(run_config['model'], 'jc', msg=None)
   eq_(run_config['kappa'], complex(1.0, 0.0), msg=None)
   eq_(run_config['omega0'], 1.0, msg=None)
   eq_(run_config['hbar'], None, msg=None)
   eq_(run_config['cutoff_a'], 30, msg=None)
   eq_(run_config['tol_match'], 1e-8, msg=None)
   eq_(run_config['out'], None, msg=None)
   eq_(run_config.source_name, 'string', msg=None)
   ok_(run_config.is_parsed, msg=None)


def test_config_parse_empty_values():
   """ Tests: test_config_parse_empty_values
   """
   print('::: TEST: test_config_parse_empty_values()')
   run_config = config_parse('model = mjc\nlambda2 = \ncutoff_a =\ncutoff_b = 20\nmargin=2\n')
   eq_(run_config['lambda2'], None, msg=None)
   eq_(run_config['cutoff_a'], 60, msg=None)
   eq_(run_config.counts(), (60, 20, 2, 10), msg=None)


def test_config_parse_file():
   """ Tests: test_config_parse_file
   """
   print('::: TEST: test_config_parse_file()')
   run_config = config_parse_file(JC_CONFIG_PATH)
   eq_(run_config.source_name, JC_CONFIG_PATH, msg=None)
   eq_(run_config.counts(), (40, 40, 4, 5), msg=None)
   eq_(run_config.preset().name, 'jc', msg=None)


@nose_raises(Err)
def test_config_parse_file_expect_failure():
   """ Tests: test_config_parse_file_expect_failure
   """
   print('::: TEST: test_config_parse_file_expect_failure()')
   config_parse_file(path_join(SCRIPT_PATH, 'no_such.cfg'))


def test_config_parse_errors():
   """ Tests: test_config_parse_errors
   """
   print('::: TEST: test_config_parse_errors()')
   expect_config_error('model = jc\ncutoff = 30\n', 'unknown key')
   expect_config_error('model = jc\nn_max = 3\nn_max = 4\n', 'duplicate key')
   expect_config_error('model jc\n', 'malformed line')
   expect_config_error('= jc\n', 'missing key')
   expect_config_error('model =\n', 'model needs a value')
   expect_config_error('model = rabi\n', 'unknown model')
   expect_config_error('cutoff_a = 3.5\n', 'bad int')
   expect_config_error('kappa = 1,2,3\n', 'bad complex')


def test_config_validate_errors():
   """ Tests: test_config_validate_errors
   """
   print('::: TEST: test_config_validate_errors()')
   expect_config_error('n_max = 0\n', 'count not positive')
   expect_config_error('cutoff_a = 30\nmargin = 30\n', 'margin >= cutoff')
   expect_config_error('tol_match = -1e-8\n', 'tolerance not positive')
   expect_config_error('model = jc\nkappa1 = 1\n', 'custom keys with a preset')
   expect_config_error('model = jc\nlambda1 = 1\n', 'free key of another preset')
   expect_config_error('model = dirac\nm = -1\n', 'invalid preset value')


def test_config_validate():
   """ Tests: test_config_validate
   """
   print('::: TEST: test_config_validate()')
   ok_(config_validate(config_prepare_default_obj()), msg=None)
   run_config = config_parse('model = jc\nkappa1 = 1\n', validate=False)
   eq_(run_config['kappa1'], complex(1.0, 0.0), msg=None)


def test_config_format_value():
   """ Tests: test_config_format_value
   """
   print('::: TEST: test_config_format_value()')
   eq_(format_config_value(None), '', msg=None)
   eq_(format_config_value(True), 'true', msg=None)
   eq_(format_config_value(60), '60', msg=None)
   eq_(format_config_value(1e-8), '1e-08', msg=None)
   eq_(format_config_value(0.1), '0.10000000000000001', msg=None)
   eq_(format_config_value(complex(0.0, 0.5)), '0,0.5', msg=None)


def test_config_emit_default_obj():
   """ Tests: test_config_emit_default_obj
   """
   print('::: TEST: test_config_emit_default_obj()')
   emitted = config_emit_default_obj()
   lines = emitted.splitlines()
   eq_(lines[0], RUN_TEMPLATE.default('#1'), msg=None)
   ok_('model = jc' in lines, msg=None)
   ok_('hbar =' in lines, msg=None)
   ok_('cutoff_a = 60' in lines, msg=None)
   eq_(dict(config_parse(emitted)), dict(config_prepare_default_obj()), msg=None)

   bare = config_emit_default_obj(with_comments=False)
   ok_(all(line[0] != '#' for line in bare.splitlines()), msg=None)
   eq_(len(bare.splitlines()), len(RUN_TEMPLATE.key_order_no_comments), msg=None)


def test_config_dump():
   """ Tests: test_config_dump
   """
   print('::: TEST: test_config_dump()')
   for source in (get_run_config_source__jc(), get_run_config_source__custom()):
      run_config = config_parse(source)
      dumped = config_dump(run_config)
      eq_(dict(config_parse(dumped)), dict(run_config), msg=None)
      eq_(dumped.splitlines()[0], 'model = {}'.format(run_config['model']), msg=None)
   ok_('kappa = 1,0' in config_dump(config_parse(get_run_config_source__jc())).splitlines(), msg=None)


# ++++++++++++++++++++++++++++++++++++++++++++++++++++++++++++++++++++++#
if __name__ == '__main__':
   pass
   test_config_parse()
   test_config_parse_empty_values()
   test_config_parse_file()
   test_config_parse_file_expect_failure()
   test_config_parse_errors()
   test_config_validate_errors()
   test_config_validate()
   test_config_format_value()
   test_config_emit_default_obj()
   test_config_dump()
