"""
Named constants for scenarios, commands and constructors.

Example:
    >>> from polygrpd.utils.helper import OrderedHelper, HelperMode, Item
    >>> class Command(OrderedHelper):
    ...     mode = HelperMode.kebab_case
    ...     CHECK_STRUCTURE = Item()
    ...     GAUGE_DEMO = Item()
    ...
    >>> print(Command.all())
    <<<  ['check-structure', 'gauge-demo']
"""
from typing import List

PROPS_KEYS_ATTR_NAME = '_props_keys'


class Helper:
    mode = ''

    @classmethod
    def all(cls) -> List[str]:
        """
        Get all consts, sorted by attribute name
        """
        return [getattr(cls, name) for name in sorted(dir(cls)) if name.isupper()]


class HelperMode(Helper):
    mode = 'original'

    SCREAMING_SNAKE_CASE = 'SCREAMING_SNAKE_CASE'
    snake_case = 'snake_case'
    kebab_case = 'kebab-case'

    @classmethod
    def all(cls):
        return [
            cls.SCREAMING_SNAKE_CASE,
            cls.snake_case,
            cls.kebab_case,
        ]

    @classmethod
    def apply(cls, text, mode):
        """
        Apply mode for an uppercase attribute name

        :param text: attribute name, SCREAMING_SNAKE_CASE
        :param mode: one of :meth:`all` or a callable
        :return: str
        """
        if mode == cls.SCREAMING_SNAKE_CASE:
            return text
        if mode == cls.snake_case:
            return text.lower()
        if mode == cls.kebab_case:
            return text.lower().replace('_', '-')
        if callable(mode):
            return mode(text)
        return text


class Item:
    """
    Helper item

    If a value is not provided,
    it will be automatically generated based on a variable's name
    """

    def __init__(self, value=None):
        self._value = value

    def __get__(self, instance, owner):
        return self._value

    def __set_name__(self, owner, name):
        if not name.isupper():
            raise NameError('Name for helper item must be in uppercase!')
        if not self._value:
            self._value = HelperMode.apply(name, getattr(owner, 'mode', ''))


class OrderedHelperMeta(type):

    def __new__(mcs, name, bases, namespace, **kwargs):
        cls = super().__new__(mcs, name, bases, namespace)

        props_keys = [
            prop_name
            for prop_name, prop in namespace.items()
            if isinstance(prop, Item)
        ]

        setattr(cls, PROPS_KEYS_ATTR_NAME, props_keys)

        return cls


class OrderedHelper(metaclass=OrderedHelperMeta):
    """
    Helper that keeps declaration order in :meth:`all`
    """
    mode = ''

    @classmethod
    def all(cls) -> List[str]:
        return [getattr(cls, name) for name in getattr(cls, PROPS_KEYS_ATTR_NAME, [])]

    @classmethod
    def check(cls, value: str) -> bool:
        return value in cls.all()
