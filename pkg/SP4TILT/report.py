"""
==============
SP4TILT.report
==============

Overview
========
Verification reports: a flat list of named checks, each with a residual and a tolerance.

A check passes exactly when `residual ≤ tolerance`. Informational checks (report-only comparisons such as the printed
4×4 representation against the derived one) are listed but never make a report fail.

Classes
=======
.. autoclass:: Check

.. autoclass:: VerificationReport
   :members: add, add_info, merge, passed, failed_checks, summary

Functions
=========
.. autofunction:: format_float
.. autofunction:: render_text
.. autofunction:: render_csv

"""
from csv import writer as csv_writer
from io import StringIO
from math import isnan as math_isnan

from SP4TILT.utils import _deactivated


CSV_REPORT_HEADER = ('name', 'residual', 'tolerance', 'passed', 'informational', 'note')


def format_float(value):
   """ Return the fixed 17 significant digit representation used by every CSV output

   :param value: (float)
   :return: (str)
   """
   return '{:.17g}'.format(float(value))


class Check(object):
   """ One named comparison

   :param name: (str)
   :param residual: (float)
   :param tolerance: (float)
   :param note: (str)
   :param informational: (bool) listed only: never counted as failure
   """

   def __init__(self, name, residual, tolerance, note='', informational=False):
      """ Constructor
      """
      residual = float(residual)
      tolerance = float(tolerance)
      self.__dict__['name'] = name
      self.__dict__['residual'] = residual
      self.__dict__['tolerance'] = tolerance
      self.__dict__['passed'] = (not math_isnan(residual)) and residual <= tolerance
      self.__dict__['note'] = note
      self.__dict__['informational'] = bool(informational)

   def __repr__(self):
      return 'Check({!r}, residual={:.3e}, tolerance={:.3e}, passed={})'.format(
         self.name, self.residual, self.tolerance, self.passed
      )

   # DEACTIVATED
   __setattr__ = _deactivated
   __delattr__ = _deactivated


class VerificationReport(object):
   """ Ordered collection of :class:`Check`

   **Has attributes**:

      - :attr:`title` (str)
      - :attr:`checks` (list) of Check in insertion order
      - :attr:`data` (dict) optional payloads attached by the producer: e.g. derived coefficient maps

   :param title: (str)
   """

   def __init__(self, title):
      """ Constructor
      """
      self.__dict__['title'] = title
      self.__dict__['checks'] = []
      self.__dict__['data'] = {}

   def add(self, name, residual, tolerance, note=''):
      """ Append a check and return it
      """
      check = Check(name, residual, tolerance, note)
      self.checks.append(check)
      return check

   def add_info(self, name, residual, tolerance, note=''):
      """ Append an informational check and return it
      """
      check = Check(name, residual, tolerance, note, informational=True)
      self.checks.append(check)
      return check

   def merge(self, other):
      """ Append all checks of `other` prefixed with its title and merge its data
      """
      for check in other.checks:
         self.checks.append(Check(
            '{}/{}'.format(other.title, check.name), check.residual, check.tolerance, check.note, check.informational
         ))
      for key, value in other.data.items():
         self.data['{}/{}'.format(other.title, key)] = value
      return self

   def passed(self):
      """ Return True if no non-informational check failed
      """
      return not self.failed_checks()

   def failed_checks(self):
      """ Return the failed non-informational checks
      """
      return [check for check in self.checks if not check.passed and not check.informational]

   def summary(self):
      """ Return a dict: total, passed, failed, informational
      """
      counted = [check for check in self.checks if not check.informational]
      failed = len([check for check in counted if not check.passed])
      return {
         'total': len(counted),
         'passed': len(counted) - failed,
         'failed': failed,
         'informational': len(self.checks) - len(counted),
      }

   def __len__(self):
      return len(self.checks)

   # DEACTIVATED
   __setattr__ = _deactivated
   __delattr__ = _deactivated


# ===========================================================================================================================
# rendering
# ===========================================================================================================================
def render_text(report):
   """ Return a human readable listing of `report`
   """
   lines = ['=== {} ==='.format(report.title)]
   for check in report.checks:
      if check.informational:
         status = 'INFO'
      else:
         status = 'ok' if check.passed else 'FAIL'
      line = '[{:>4}] {}  residual={:.3e}  tol={:.1e}'.format(status, check.name, check.residual, check.tolerance)
      if check.note:
         line += '  ({})'.format(check.note)
      lines.append(line)
   summary = report.summary()
   lines.append('--- total: {total}  passed: {passed}  failed: {failed}  informational: {informational}'.format(**summary))
   return '\n'.join(lines) + '\n'


def render_csv(report):
   """ Return the report as CSV text with header :py:data:`CSV_REPORT_HEADER`
   """
   buffer = StringIO()
   out = csv_writer(buffer, lineterminator='\n')
   out.writerow(CSV_REPORT_HEADER)
   for check in report.checks:
      out.writerow([
         check.name,
         format_float(check.residual),
         format_float(check.tolerance),
         'true' if check.passed else 'false',
         'true' if check.informational else 'false',
         check.note,
      ])
   return buffer.getvalue()
