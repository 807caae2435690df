"""
=================
SP4TILT.transform
=================

Overview
========
Transform functions used by the run configuration template: each casts one raw `key = value` string.

Every function takes `(value_str, extra_err_info)` and raises :class:`SP4TILT.utils.Err` with kind `config`.

Functions
=========
.. autofunction:: cfg_to_bool
.. autofunction:: cfg_to_int
.. autofunction:: cfg_to_float
.. autofunction:: cfg_to_complex
.. autofunction:: cfg_to_str
.. autofunction:: cfg_to_model

"""
from SP4TILT.models import PRESET_NAMES
from SP4TILT.utils import Err


MODEL_NAMES = PRESET_NAMES + ('custom',)


def cfg_to_bool(bool_str, extra_err_info):
   """ Return `python True or False` for the input bool_str

   :param bool_str: (str) must be any of: True, true, False, false
   :param extra_err_info: (str) any additional info which will be printed if an error is raised: e.g line number,
      original line ect..
   :return: (bool) conversion of the input bool_str
   :raise Err:
   """
   if bool_str == 'True' or bool_str == 'true':
      return True
   elif bool_str == 'False' or bool_str == 'false':
      return False
   raise Err('cfg_to_bool', [
      'bool_str must be any of: True, true, False, false.  We got: <{}>'.format(bool_str),
      '    extra_err_info: {}'.format(extra_err_info)
   ], kind='config')


def cfg_to_int(int_str, extra_err_info):
   """ Return an integer of the input int_str

   >>> cfg_to_int('-12', 'doctest')
   -12

   :param int_str: (str) string of a number must contain only digits plus optional a leading - (minus sign)
   :param extra_err_info: (str) see :py:func:`cfg_to_bool`
   :return: (int) conversion of the input int_str
   :raise Err:
   """
   # check leading -
   if int_str[:1] == '-':
      if int_str[1:].isdigit():
         return int(int_str)
   elif int_str.isdigit():
      return int(int_str)
   raise Err('cfg_to_int', [
      'int_str must contain only digits plus optional a leading - (minus sign).  We got: <{}>'.format(int_str),
      '    extra_err_info: {}'.format(extra_err_info)
   ], kind='config')


def cfg_to_float(number_str, extra_err_info):
   """ Return a float of the input number_str

   :param number_str: (str) must contain a valid number to be cast to python float(): e.g. `1e-3`, `-0.5`
   :param extra_err_info: (str) see :py:func:`cfg_to_bool`
   :return: (float) conversion of the input number_str
   :raise Err:
   """
   try:
      return float(number_str)
   except ValueError as err:
      raise Err('cfg_to_float', [
         'number_str must contain a valid number to be cast to python float().  We got: <{}>'.format(number_str),
         '    extra_err_info: {}'.format(extra_err_info),
         '    ValueError: {}'.format(err)
      ], kind='config')


def cfg_to_complex(complex_str, extra_err_info):
   """ Return a complex of the input complex_str written `re,im` (a lone real part is accepted)

   >>> cfg_to_complex('0.5,-2', 'doctest')
   (0.5-2j)
   >>> cfg_to_complex('3', 'doctest')
   (3+0j)

   :param complex_str: (str)
   :param extra_err_info: (str) see :py:func:`cfg_to_bool`
   :return: (complex)
   :raise Err:
   """
   parts = complex_str.split(',')
   if len(parts) > 2:
      raise Err('cfg_to_complex', [
         'complex_str must be written <re,im> or <re>.  We got: <{}>'.format(complex_str),
         '    extra_err_info: {}'.format(extra_err_info)
      ], kind='config')
   real = cfg_to_float(parts[0].strip(), extra_err_info)
   imag = cfg_to_float(parts[1].strip(), extra_err_info) if len(parts) == 2 else 0.0
   return complex(real, imag)


def cfg_to_str(value_str, extra_err_info):
   """ Return value_str unchanged: it must not contain a comment sign

   :raise Err:
   """
   if '#' in value_str:
      raise Err('cfg_to_str', [
         'value_str must not contain <#>.  We got: <{}>'.format(value_str),
         '    extra_err_info: {}'.format(extra_err_info)
      ], kind='config')
   return value_str


def cfg_to_model(name_str, extra_err_info):
   """ Return name_str if it names a preset or `custom`

   :raise Err:
   """
   if name_str in MODEL_NAMES:
      return name_str
   raise Err('cfg_to_model', [
      'model must be any of: <{}>.  We got: <{}>'.format(', '.join(MODEL_NAMES), name_str),
      '    extra_err_info: {}'.format(extra_err_info)
   ], kind='config')
