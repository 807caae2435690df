"""
================
SP4TILT._version
================

Overview
========
Static version information: releases edit `VERSION` and tag the same number.

Functions
=========
.. autofunction:: get_versions

"""
VERSION = '1.0.0'
FULL_REVISION = ''


def get_versions(default=None, verbose=False):
   """ Return the version info

   :param default: (dict) returned instead if `VERSION` is empty
   :param verbose: (bool) print the resolved version
   :return: (dict) keys: `version`, `full`
   """
   if not VERSION:
      return default or {'version': 'unknown', 'full': ''}
   if verbose:
      print('SP4TILT version: <{}>'.format(VERSION))
   return {'version': VERSION, 'full': FULL_REVISION}
