import pytest

from polygrpd.utils.helper import Helper, HelperMode, Item, OrderedHelper


class TestOrderedHelper:

    def test_items_are_ordered(self):
        class Scenario(OrderedHelper):
            A = Item()
            D = Item()
            C = Item()
            B = Item()

        assert Scenario.all() == ['A', 'D', 'C', 'B']

    def test_kebab_case_values(self):
        class Command(OrderedHelper):
            mode = HelperMode.kebab_case

            CHECK_STRUCTURE = Item()
            GAUGE_DEMO = Item()

        assert Command.CHECK_STRUCTURE == 'check-structure'
        assert Command.all() == ['check-structure', 'gauge-demo']
        assert Command.check('gauge-demo')
        assert not Command.check('GAUGE_DEMO')

    def test_explicit_value_is_kept(self):
        class Variant(OrderedHelper):
            mode = HelperMode.snake_case

            FIRST = Item('one')
            SECOND = Item()

        assert Variant.all() == ['one', 'second']

    def test_lowercase_name_is_rejected(self):
        with pytest.raises((NameError, RuntimeError)):
            class Broken(OrderedHelper):
                lower = Item()


class TestHelper:

    def test_all_is_sorted(self):
        class Names(Helper):
            B = 'b'
            A = 'a'

        assert Names.all() == ['a', 'b']

    def test_apply(self):
        assert HelperMode.apply('GAUGE_DEMO', HelperMode.SCREAMING_SNAKE_CASE) == 'GAUGE_DEMO'
        assert HelperMode.apply('GAUGE_DEMO', HelperMode.snake_case) == 'gauge_demo'
        assert HelperMode.apply('GAUGE_DEMO', HelperMode.kebab_case) == 'gauge-demo'
        assert HelperMode.apply('GAUGE_DEMO', str.title) == 'Gauge_Demo'
