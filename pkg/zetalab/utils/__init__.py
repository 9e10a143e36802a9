from .config import ZetaLabConfig, DEFAULT_CONFIG, load_config
from .validation import to_complex, to_real, parse_complex, parse_int_list, is_integer_value

__all__ = ['ZetaLabConfig', 'DEFAULT_CONFIG', 'load_config', 'to_complex', 'to_real',
           'parse_complex', 'parse_int_list', 'is_integer_value']
