import re

# integer
RE_INT = re.compile(r'^[-+]?\d+$')
# numeral, optionally in scientific notation
RE_NUMBER = re.compile(r'^[-+]?(\d+(\.\d*)?|\.\d+)([eE][-+]?\d+)?$')
# fraction such as 1/80
RE_FRACTION = re.compile(r'^[-+]?\d+\s*/\s*\d+$')
# key=value assignment
RE_ASSIGNMENT = re.compile(r'^\s*([A-Za-z_][A-Za-z0-9_]*)\s*=(.*)$')


def is_bool(value):
    if value is None:
        return False
    if isinstance(value, bool):
        return True
    if not isinstance(value, str):
        return False
    return value.strip().lower() in ['true', 'false', '1', '0', 'yes', 'no']


def is_number(value):
    if value is None:
        return False
    if isinstance(value, bool):
        return False
    if isinstance(value, float) or isinstance(value, int):
        return True
    if not isinstance(value, str):
        return False
    if RE_NUMBER.findall(value.strip()):
        return True
    return False


def is_fraction(value):
    if value is None:
        return False
    if not isinstance(value, str):
        return False
    if RE_FRACTION.findall(value.strip()):
        return True
    return False


def is_int(value):
    if value is None:
        return False
    if isinstance(value, bool):
        return False
    if isinstance(value, int):
        return True
    if not isinstance(value, str):
        return False
    if RE_INT.findall(value.strip()):
        return True
    return False


def is_assignment(value):
    if value is None:
        return False
    if not isinstance(value, str):
        return False
    if RE_ASSIGNMENT.findall(value):
        return True
    return False
