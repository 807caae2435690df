""" tests SP4TILT utils
"""
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

# noinspection PyProtectedMember
from SP4TILT.utils import (
   ERROR_KINDS,
   Err,
   MethodDeactivatedErr,
   _deactivated,
   as_fraction,
   snap_coefficients,
   snap_value,
)


@nose_raises(MethodDeactivatedErr)
def test_utils_deactivated_expect_failure():
   """ Tests: test_utils_deactivated_expect_failure
   """
   print('::: TEST: test_utils_deactivated_expect_failure()')
   _deactivated()


def test_utils_err_kind():
   """ Tests: test_utils_err_kind
   """
   print('::: TEST: test_utils_err_kind()')
   err = Err('my_function', ['  first line  ', 'second line'], kind='cutoff-overflow')
   eq_(err.kind, 'cutoff-overflow', msg=None)
   eq_(err.error_type, 'my_function', msg=None)
   eq_(err.one_line(), 'cutoff-overflow: my_function: first line', msg=None)

   unknown = Err('my_function', ['text'], kind='no-such-kind')
   eq_(unknown.kind, 'invalid-argument', msg=None)
   ok_('config' in ERROR_KINDS, msg=None)


def test_utils_err_no_info():
   """ Tests: test_utils_err_no_info
   """
   print('::: TEST: test_utils_err_no_info()')
   eq_(Err('f', [], kind='dimension').one_line(), 'dimension: f: ', msg=None)


def test_utils_snap_value():
   """ Tests: test_utils_snap_value
   """
   print('::: TEST: test_utils_snap_value()')
   eq_(snap_value(1e-14), 0j, msg=None)
   eq_(snap_value(0.5 + 1e-11), 0.5 + 0j, msg=None)
   eq_(snap_value(complex(-1.5 - 1e-10, 2.0 + 1e-13)), complex(-1.5, 2.0), msg=None)
   eq_(snap_value(0.3), 0.3 + 0j, msg=None)


def test_utils_snap_coefficients():
   """ Tests: test_utils_snap_coefficients
   """
   print('::: TEST: test_utils_snap_coefficients()')
   snapped = snap_coefficients({'K0ab': 1.0 + 1e-12, 'J0': 1e-15, 'J+': -0.25})
   eq_(snapped, {'K0ab': 1.0 + 0j, 'J+': -0.25 + 0j}, msg=None)


def test_utils_as_fraction():
   """ Tests: test_utils_as_fraction
   """
   print('::: TEST: test_utils_as_fraction()')
   eq_(as_fraction('3/2'), Fraction(3, 2), msg=None)
   eq_(as_fraction(2), Fraction(2), msg=None)
   eq_(as_fraction(0.75), Fraction(3, 4), msg=None)
   value = Fraction(1, 4)
   ok_(as_fraction(value) is value, msg=None)


@nose_raises(Err)
def test_utils_as_fraction_expect_failure():
   """ Tests: test_utils_as_fraction_expect_failure
   """
   print('::: TEST: test_utils_as_fraction_expect_failure()')
   as_fraction(0.3)


# ++++++++++++++++++++++++++++++++++++++++++++++++++++++++++++++++++++++#
if __name__ == '__main__':
   pass
   test_utils_deactivated_expect_failure()
   test_utils_err_kind()
   test_utils_err_no_info()
   test_utils_snap_value()
   test_utils_snap_coefficients()
   test_utils_as_fraction()
   test_utils_as_fraction_expect_failure()
