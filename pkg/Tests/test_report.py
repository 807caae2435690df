""" tests SP4TILT report: checks, reports and their text / CSV rendering
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

from SP4TILT.report import (
   CSV_REPORT_HEADER,
   Check,
   VerificationReport,
   format_float,
   render_csv,
   render_text,
)
from SP4TILT.utils import MethodDeactivatedErr


def get_report():
   """ Return a small report: one pass, one failure, one informational miss
   """
   report = VerificationReport('demo')
   report.add('close', 1e-9, 1e-8)
   report.add('far', 0.5, 1e-8, note='expected')
   report.add_info('loose', 1.0, 1e-3)
   return report


def test_report_format_float():
   """ Tests: test_report_format_float
   """
   print('::: TEST: test_report_format_float()')
   eq_(format_float(0.5), '0.5', msg=None)
   eq_(format_float(1), '1', msg=None)
   eq_(format_float(0.1), '0.10000000000000001', msg=None)


def test_report_check():
   """ Tests: test_report_check
   """
   print('::: TEST: test_report_check()')
   ok_(Check('a', 1e-9, 1e-8).passed, msg=None)
   ok_(Check('a', 1e-8, 1e-8).passed, msg=None)
   ok_(not Check('a', 2e-8, 1e-8).passed, msg=None)
   ok_(not Check('a', float('nan'), 1.0).passed, msg=None)
   ok_(Check('a', 5.0, 1.0, informational=True).informational, msg=None)


@nose_raises(MethodDeactivatedErr)
def test_report_check_immutable_expect_failure():
   """ Tests: test_report_check_immutable_expect_failure
   """
   print('::: TEST: test_report_check_immutable_expect_failure()')
   Check('a', 1.0, 1.0).passed = False


def test_report_summary():
   """ Tests: test_report_summary
   """
   print('::: TEST: test_report_summary()')
   report = get_report()
   eq_(len(report), 3, msg=None)
   ok_(not report.passed(), msg=None)
   eq_([check.name for check in report.failed_checks()], ['far'], msg=None)
   eq_(report.summary(), {'total': 2, 'passed': 1, 'failed': 1, 'informational': 1}, msg=None)

   informational_only = VerificationReport('info')
   informational_only.add_info('loose', 1.0, 1e-3)
   ok_(informational_only.passed(), msg=None)


def test_report_merge():
   """ Tests: test_report_merge
   """
   print('::: TEST: test_report_merge()')
   inner = get_report()
   inner.data['table'] = [1, 2]
   outer = VerificationReport('all')
   outer.add('own', 0.0, 1.0)
   outer.merge(inner)
   eq_([check.name for check in outer.checks], ['own', 'demo/close', 'demo/far', 'demo/loose'], msg=None)
   ok_(outer.checks[-1].informational, msg=None)
   eq_(outer.data['demo/table'], [1, 2], msg=None)
   ok_(not outer.passed(), msg=None)


def test_report_render_text():
   """ Tests: test_report_render_text
   """
   print('::: TEST: test_report_render_text()')
   lines = render_text(get_report()).splitlines()
   eq_(lines[0], '=== demo ===', msg=None)
   ok_(lines[1].startswith('[  ok] close'), msg=None)
   ok_(lines[2].startswith('[FAIL] far'), msg=None)
   ok_(lines[2].endswith('(expected)'), msg=None)
   ok_(lines[3].startswith('[INFO] loose'), msg=None)
   eq_(lines[4], '--- total: 2  passed: 1  failed: 1  informational: 1', msg=None)


def test_report_render_csv():
   """ Tests: test_report_render_csv
   """
   print('::: TEST: test_report_render_csv()')
   lines = render_csv(get_report()).splitlines()
   eq_(lines[0], ','.join(CSV_REPORT_HEADER), msg=None)
   eq_(lines[2], 'far,0.5,1e-08,false,false,expected', msg=None)
   eq_(lines[3], 'loose,1,0.001,false,true,', msg=None)
   eq_(len(lines), 4, msg=None)


# ++++++++++++++++++++++++++++++++++++++++++++++++++++++++++++++++++++++#
if __name__ == '__main__':
   pass
   test_report_format_float()
   test_report_check()
   test_report_check_immutable_expect_failure()
   test_report_summary()
   test_report_merge()
   test_report_render_text()
   test_report_render_csv()
