# -*- coding: utf-8 -*-
from pathlib import Path

import pytest

from ..config import RunConfig, YAMLConfigurationFile


def test_defaults():
    config = RunConfig('con')
    assert config.output_format == 'text'
    assert config.seed == 0
    assert config.eon_mode == 'auto'
    assert config.input is None


def test_path_conversion():
    config = RunConfig('verify', 'reduce', 'context.qv', 'laws.txt')
    assert config.input == Path('context.qv')
    assert config.extra == Path('laws.txt')


@pytest.mark.parametrize('kwargs', [
    {'closure_bound': 0}, {'model_size': -1}, {'schema_bound': 0},
    {'eon_exhaustive_bound': 0}, {'instances': 0},
    {'output_format': 'svg'}, {'eon_mode': 'fast'}])
def test_invalid(kwargs):
    with pytest.raises(ValueError):
        RunConfig('con', **kwargs)


def test_configuration_file():
    configuration = YAMLConfigurationFile()
    config = RunConfig('sweep', seed=3, suites=['lemma1'], instances=2)
    text = configuration.dumps(config)
    assert text.startswith('!qlattice.config.RunConfig')

    loaded = configuration.load(text)
    assert loaded.command == 'sweep'
    assert loaded.suites == ['lemma1']
    assert loaded.instances == 2

    with pytest.raises(ValueError, match="not a RunConfig"):
        configuration.load("seed: 3\n")
