"""
==============
SP4TILT.config
==============

Overview
========
The run configuration: parse, emit and dump `key = value` sources against the template :py:data:`RUN_TEMPLATE`.

Source format:

   - UTF-8 lines `key = value`; a line whose first non blank char is `#` is a comment, empty lines are skipped
   - complex values are written `re,im`
   - an empty value takes the template's `Empty-Value-Replacement`
   - unknown keys, duplicate keys and lines without ` = ` raise :class:`SP4TILT.utils.Err` with kind `config`

.. code-block:: text

   # Jaynes-Cummings resonance
   model = jc
   kappa = 1
   n_max = 5

Constants
=========

.. py:data:: RUN_TEMPLATE

    (Root) keys in emit order

Functions
=========
.. autofunction:: config_prepare_default_obj
.. autofunction:: config_parse
.. autofunction:: config_parse_file
.. autofunction:: config_validate
.. autofunction:: config_emit_default_obj
.. autofunction:: config_dump
.. autofunction:: format_config_value

"""
from logging import getLogger
from os.path import isfile as path_isfile

from SP4TILT.config_classes import (
   COUNT_KEYS,
   Root,
   RunConfig,
)
from SP4TILT.transform import (
   cfg_to_complex,
   cfg_to_float,
   cfg_to_int,
   cfg_to_model,
   cfg_to_str,
)
from SP4TILT.utils import Err


LOG = getLogger(__name__)

RUN_TEMPLATE = Root([
   ('#1', '# model: jc, dirac, generalized_jc, mjc, jc_ajc or custom'),
   ('model', 'jc', cfg_to_model),
   ('#2', '# constants: empty values take the preset defaults (custom: hbar 1, frequencies 0)'),
   ('hbar', None, cfg_to_float, None),
   ('omega0', None, cfg_to_float, None),
   ('omega1', None, cfg_to_float, None),
   ('omega2', None, cfg_to_float, None),
   ('#3', '# preset free parameters: complex values are written re,im'),
   ('kappa', None, cfg_to_complex, None),
   ('m', None, cfg_to_float, None),
   ('c', None, cfg_to_float, None),
   ('omega', None, cfg_to_float, None),
   ('f', None, cfg_to_complex, None),
   ('g', None, cfg_to_complex, None),
   ('mc2', None, cfg_to_float, None),
   ('lambda1', None, cfg_to_float, None),
   ('lambda2', None, cfg_to_float, None),
   ('#4', '# custom couplings of (k.) = k1 a + k2 a+ + k3 b + k4 b+ and (g.)'),
   ('kappa1', None, cfg_to_complex, None),
   ('kappa2', None, cfg_to_complex, None),
   ('kappa3', None, cfg_to_complex, None),
   ('kappa4', None, cfg_to_complex, None),
   ('gamma1', None, cfg_to_complex, None),
   ('gamma2', None, cfg_to_complex, None),
   ('gamma3', None, cfg_to_complex, None),
   ('gamma4', None, cfg_to_complex, None),
   ('#5', '# numerics'),
   ('cutoff_a', 60, cfg_to_int, 60),
   ('cutoff_b', 60, cfg_to_int, 60),
   ('margin', 4, cfg_to_int, 4),
   ('n_max', 10, cfg_to_int, 10),
   ('#6', '# tolerances'),
   ('tol_match', 1e-8, cfg_to_float, 1e-8),
   ('tol_closure', 1e-10, cfg_to_float, 1e-10),
   ('tol_tilt', 1e-8, cfg_to_float, 1e-8),
   ('#7', '# output: empty writes to stdout'),
   ('out', None, cfg_to_str, None),
])


def config_prepare_default_obj(template=RUN_TEMPLATE):
   """ Return a :class:`RunConfig` holding the template defaults

   :param template: (Root)
   :return: (RunConfig)
   """
   return RunConfig({key: template.default(key) for key in template.key_order_no_comments}, template.key_order_no_comments)


def config_parse(source, template=RUN_TEMPLATE, source_name='string', validate=True):
   """ Return the :class:`RunConfig` of a `key = value` source

   :param source: (str)
   :param template: (Root)
   :param source_name: (str) used in error messages
   :param validate: (bool) run :py:func:`config_validate` on the result
   :return: (RunConfig)
   :raise Err: kind `config`
   """
   run_config = config_prepare_default_obj(template)
   seen = {}
   for line_number, orig_line in enumerate(source.splitlines(), 1):
      line = orig_line.strip()
      if not line or line[0] == '#':
         continue
      extra_err_info = '{} line {}: <{}>'.format(source_name, line_number, orig_line)
      key, separator, value_str = line.partition('=')
      key = key.strip()
      value_str = value_str.strip()
      if not separator or not key:
         raise Err('config_parse', ['malformed line: expected <key = value>', '  {}'.format(extra_err_info)], kind='config')
      if key not in template.key_order_no_comments:
         raise Err('config_parse', [
            'unknown key: <{}>'.format(key),
            '  {}'.format(extra_err_info),
            '  known keys: <{}>'.format(', '.join(template.key_order_no_comments))
         ], kind='config')
      if key in seen:
         raise Err('config_parse', [
            'duplicate key: <{}> first set on line <{}>'.format(key, seen[key]),
            '  {}'.format(extra_err_info)
         ], kind='config')
      seen[key] = line_number

      if not value_str:
         if key not in template.key_empty_replacementvalue:
            raise Err('config_parse', ['key <{}> needs a value'.format(key), '  {}'.format(extra_err_info)],
               kind='config')
         value = template.key_empty_replacementvalue[key]
      else:
         transform_function = template.transform_function(key)
         value = transform_function(value_str, extra_err_info) if transform_function else value_str
      run_config.set_parsed_item(key, value)

   run_config.set_class__dict__item('source_name', source_name)
   run_config.set_class__dict__item('is_parsed', True)
   LOG.debug('config_parse: %s keys set from %s', len(seen), source_name)
   if validate:
      config_validate(run_config)
   return run_config


def config_parse_file(path_to_config_file, template=RUN_TEMPLATE):
   """ Return the :class:`RunConfig` of a UTF-8 config file

   :raise Err: not a file and parse errors
   """
   if not path_isfile(path_to_config_file):
      raise Err('config_parse_file', [
         'Input path seems not to be a file:',
         '   <{}>'.format(path_to_config_file)
      ], kind='config')
   with open(path_to_config_file, 'r', encoding='utf-8') as file_:
      return config_parse(file_.read(), template, source_name=path_to_config_file)


def config_validate(run_config):
   """ Return True if counts are positive and the model keys build a ModelParams

   :param run_config: (RunConfig)
   :return: (bool)
   :raise Err: kind `config` (model errors are re-raised with that kind)
   """
   for key in COUNT_KEYS:
      if run_config[key] <= 0:
         raise Err('config_validate', ['<{}> must be > 0.  We got: <{}>'.format(key, run_config[key])], kind='config')
   for key in ('cutoff_a', 'cutoff_b'):
      if run_config['margin'] >= run_config[key]:
         raise Err('config_validate', [
            'margin must be below <{}>.  We got: margin <{}> {} <{}>'.format(key, run_config['margin'], key, run_config[key])
         ], kind='config')
   for key in ('tol_match', 'tol_closure', 'tol_tilt'):
      if not run_config[key] > 0:
         raise Err('config_validate', ['<{}> must be > 0.  We got: <{}>'.format(key, run_config[key])], kind='config')
   try:
      run_config.model_params()
   except Err as err:
      if err.kind == 'config':
         raise
      raise Err('config_validate', ['model keys do not build a parameter set', '  ' + err.one_line()], kind='config')
   return True


def format_config_value(value):
   """ Return the source text of a value: floats `{:.17g}`, complex `re,im`, None empty

   >>> format_config_value(complex(0.5, -2.0))
   '0.5,-2'
   >>> format_config_value(None)
   ''
   """
   if value is None:
      return ''
   if value is True or value is False:
      return 'true' if value else 'false'
   if isinstance(value, complex):
      return '{:.17g},{:.17g}'.format(value.real, value.imag)
   if isinstance(value, float):
      return '{:.17g}'.format(value)
   return str(value)


def config_emit_default_obj(template=RUN_TEMPLATE, with_comments=True):
   """ Return the source text of the template defaults

   :param template: (Root)
   :param with_comments: (bool) emit the `Default-Comment Lines`
   :return: (str)
   """
   lines = []
   for key in template.key_order:
      if key[0] == '#':
         if with_comments:
            lines.append(template.default(key))
         continue
      value = format_config_value(template.default(key))
      lines.append('{} = {}'.format(key, value) if value else '{} ='.format(key))
   return '\n'.join(lines) + '\n'


def config_dump(run_config):
   """ Return the source text of every key of `run_config` in template order: `config_parse(config_dump(c)) == c`

   :param run_config: (RunConfig)
   :return: (str)
   """
   lines = []
   for key in run_config.key_order:
      value = format_config_value(run_config[key])
      lines.append('{} = {}'.format(key, value) if value else '{} ='.format(key))
   return '\n'.join(lines) + '\n'
