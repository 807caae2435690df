"""
======================
SP4TILT.config_classes
======================

Overview
========
Classes of the run configuration: the template `Root` holds the ordered defaults and transform functions, a parsed or
prepared `RunConfig` holds the values.

.. python-example:: Example template

   .. code-block:: python3

      example_template = Root([
         ('#1', '# Comment-Line: model'),
         ('model', 'jc', cfg_to_model),
         ('#2', '# Comment: key with transform_function and `Empty-Value-Replacement`'),
         ('cutoff_a', 60, cfg_to_int, 60),
      ])

Template tuple FORMAT: `(key, default_value, transform_function, empty_replacement_value)`; the last two are optional.
Keys starting with `#` are default comment lines: they are emitted with the defaults and never parsed.

Classes
=======
.. autoclass:: Root
   :members: frompickle

.. autoclass:: RunConfig
   :members: model_params, free_params, preset, counts

"""
from pickle import loads as ploads

from SP4TILT.hamiltonian import ModelParams
from SP4TILT.models import (
   PRESET_KEYS,
   preset,
)
from SP4TILT.utils import (
   Err,
   _deactivated,
)


COUNT_KEYS = ('cutoff_a', 'cutoff_b', 'margin', 'n_max')
CUSTOM_KEYS = ('kappa1', 'kappa2', 'kappa3', 'kappa4', 'gamma1', 'gamma2', 'gamma3', 'gamma4')
CONSTANT_KEYS = ('hbar', 'omega0', 'omega1', 'omega2')


class Root(dict):
   """ Template Main/Root obj class

   **Has additional attributes**:

      - :attr:`key_order` (list) the keys in order as initialized inclusive `Default-Comment Lines`
      - :attr:`key_order_no_comments` (list) the keys in order as initialized exclusive `Default-Comment Lines`
      - :attr:`key_empty_replacementvalue` (dict) all keys which have an `Empty-Value-Replacement`

   Each value is the tuple `(default_value[, transform_function[, empty_replacement_value]])`.

   :param key_value_list: (list) of tuples: FORMAT: (key, default_value, ...)
   :raise Err:
   """

   # noinspection PyTypeChecker
   def __init__(self, key_value_list):
      """ Constructor
      """
      if key_value_list.__class__ is list:
         dict.__init__(self, {key_value_tuple[0]: key_value_tuple[1:] for key_value_tuple in key_value_list})
         _temp_key_order = [item[0] for item in key_value_list]
         if len(set(_temp_key_order)) != len(_temp_key_order):
            raise Err('Root.__init__()', ['template keys must be unique: <{}>'.format(_temp_key_order)])
         self.__dict__['key_order'] = _temp_key_order
         self.__dict__['key_order_no_comments'] = [key for key in _temp_key_order if key[0] != '#']
         self.__dict__['key_empty_replacementvalue'] = {key_value_tuple[0]: key_value_tuple[3] for key_value_tuple in
            key_value_list if len(key_value_tuple) > 3}
      else:
         raise Err('Root.__init__()', [
            'key_value_list must be a list of key/value pairs: We got type: <{}>'.format(type(key_value_list)),
            '   <{}>'.format(key_value_list)
         ])

   def default(self, key):
      return self[key][0]

   def transform_function(self, key):
      """ Return the transform function of `key` or None
      """
      value = self[key]
      return value[1] if len(value) > 1 else None

   # noinspection PyRedundantParentheses
   def __reduce__(self):
      """ Return state information for pickling
      """
      return (self.__class__, ([(key,) + self[key] for key in self.key_order],))

   @staticmethod
   def frompickle(in_pickle_dumps):
      """ Create a new `Root` from a pickled dumps.

      :param in_pickle_dumps: (bytes) a pickled `Root` dumps
      :return: (obj) a new Root object
      :raise Err:
      """
      new_obj = ploads(in_pickle_dumps)
      if new_obj.__class__ is Root:
         return new_obj
      else:
         raise Err('Root.frompickle()', [
            'Error: `in_pickle_dumps` does not seem to be a `Root` object: Got type: <{}>'.format(type(new_obj))
         ])

   # DEACTIVATED
   clear = _deactivated
   copy = _deactivated
   __delattr__ = _deactivated
   __delitem__ = _deactivated
   __setitem__ = _deactivated
   __setattr__ = _deactivated
   setdefault = _deactivated
   pop = _deactivated
   popitem = _deactivated
   update = _deactivated
   fromkeys = _deactivated


class RunConfig(dict):
   """ Parsed run configuration: one value per template key, in template order

   **Has additional attributes**:

      - :attr:`key_order` (list) the keys exclusive `Default-Comment Lines`
      - :attr:`source_name` (str) file name or `default`
      - :attr:`is_parsed` (bool) True once a source updated the defaults

   Values may be set only by the config module while parsing: see :py:meth:`set_parsed_item`.

   :param data: (dict)
   :param key_order_list: (list)
   """

   # noinspection PyTypeChecker
   def __init__(self, data, key_order_list):
      """ Constructor
      """
      dict.__init__(self, data)
      self.__dict__['key_order'] = list(key_order_list)
      self.__dict__['source_name'] = 'default'
      self.__dict__['is_parsed'] = False

   def set_class__dict__item(self, key, value):
      """ Sets the class __dict__: key to value: if key did not exist it is added

      :param key: (str)
      :param value: (any)
      """
      self.__dict__[key] = value

   def set_parsed_item(self, key, value):
      """ Set one parsed value

      :raise Err: key not in the template
      """
      if key not in self:
         raise Err('RunConfig.set_parsed_item()', ['unknown key: <{}>'.format(key)], kind='config')
      dict.__setitem__(self, key, value)

   def counts(self):
      """ Return (cutoff_a, cutoff_b, margin, n_max)
      """
      return tuple(self[key] for key in COUNT_KEYS)

   def free_params(self):
      """ Return the preset free parameters that are set: key -> value

      :raise Err: a preset free key that the chosen preset does not use is set
      """
      model = self['model']
      if model == 'custom':
         return {}
      used = [key for key, _ in PRESET_KEYS[model]]
      free = {}
      for keys in PRESET_KEYS.values():
         for key, _ in keys:
            if self.get(key) is None:
               continue
            if key not in used:
               raise Err('RunConfig.free_params()', [
                  'key <{}> is not a free parameter of model <{}>'.format(key, model),
                  '  free parameters: <{}>'.format(', '.join(used))
               ], kind='config')
            free[key] = self[key]
      return free

   def preset(self):
      """ Return the ModelPreset of a preset model, None for `custom`
      """
      if self['model'] == 'custom':
         return None
      return preset(self['model'], **self.free_params())

   def model_params(self):
      """ Return the ModelParams: through the preset, or from the `custom` keys (unset values: ħ = 1, others 0)

      :return: (ModelParams)
      :raise Err: invalid free parameters or custom keys set for a preset
      """
      if self['model'] != 'custom':
         for key in CUSTOM_KEYS:
            if self.get(key) is not None:
               raise Err('RunConfig.model_params()', [
                  'key <{}> is used only with model <custom>.  We got model: <{}>'.format(key, self['model'])
               ], kind='config')
         return self.preset().params

      def value(key, unset):
         return unset if self.get(key) is None else self[key]

      return ModelParams(
         value('omega0', 0.0), value('omega1', 0.0), value('omega2', 0.0),
         tuple(value(key, 0.0) for key in CUSTOM_KEYS[:4]),
         tuple(value(key, 0.0) for key in CUSTOM_KEYS[4:]),
         value('hbar', 1.0)
      )

   # noinspection PyRedundantParentheses
   def __reduce__(self):
      """ Return state information for pickling
      """
      return (self.__class__, (dict(self), list(self.key_order)), self.__dict__.copy())

   # DEACTIVATED
   clear = _deactivated
   copy = _deactivated
   __delattr__ = _deactivated
   __delitem__ = _deactivated
   __setitem__ = _deactivated
   __setattr__ = _deactivated
   setdefault = _deactivated
   pop = _deactivated
   popitem = _deactivated
   update = _deactivated
   fromkeys = _deactivated
