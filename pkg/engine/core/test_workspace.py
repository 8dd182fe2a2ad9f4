import pytest

from . import GLOBAL_CONFIG, register, create, lookup
from ..models import LinRep, CyclicMod, SplitEx
from ..misc.errors import SchemaError


registry = dict()


@register(dct=registry, name='with-dashes')
class Rule(object):
    def __init__(self, strength: int=1) -> None:
        self.strength = strength


def test_create_with_defaults():
    model = create('CyclicMod')
    assert isinstance(model, CyclicMod)
    assert (model.p, model.k) == (2, 2)


def test_create_with_overrides():
    model = create('LinRep', p=3, n=2)
    assert model.params() == {'p': 3, 'n': 2}


def test_create_from_type_dict():
    model = create({'type': 'SplitEx', 'inner': {'type': 'LinRep', 'p': 5, 'n': 2}})
    assert isinstance(model, SplitEx)
    assert isinstance(model.inner, LinRep) and model.inner.p == 5


def test_injected_instance_passes_through(z4):
    assert create('SplitEx', inner=z4).inner is z4


def test_yaml_values_override_defaults():
    cfg = {k: (dict(v) if isinstance(v, dict) else v) for k, v in GLOBAL_CONFIG.items()}
    cfg['CyclicMod'] = {**cfg['CyclicMod'], 'p': 3, 'k': 1}
    model = create('CyclicMod', cfg)
    assert model.params() == {'p': 3, 'k': 1}
    assert create('CyclicMod').params() == {'p': 2, 'k': 2}


def test_unknown_names_and_arguments():
    with pytest.raises(SchemaError):
        create('HyperbolicMod')
    with pytest.raises(SchemaError):
        create('LinRep', q=7)
    with pytest.raises(SchemaError):
        create({'p': 2})
    with pytest.raises(SchemaError):
        lookup('HyperbolicMod')
    assert lookup('LinRep') is LinRep


def test_register_into_dict():
    assert registry['with-dashes']['_name'] == 'Rule'
    assert registry['with-dashes']['_kwargs'] == {'strength': 1}
    assert create('with-dashes', registry, strength=3).strength == 3

    with pytest.raises(AssertionError):
        register(dct=registry, name='with-dashes')(Rule)


def test_register_accepts_classes_only():
    def rule(strength: int=1):
        return strength

    with pytest.raises(ValueError):
        register(dct=registry, name='function-rule')(rule)
    assert 'function-rule' not in registry
    assert '_share' not in registry['with-dashes']


def test_config_values_are_not_creatable():
    cfg = {**GLOBAL_CONFIG, 'budget': 8}
    with pytest.raises(SchemaError):
        create('budget', cfg)
