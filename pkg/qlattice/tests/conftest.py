# -*- coding: utf-8 -*-
import pytest

from ..base import Base, Property


@pytest.fixture(scope='session')
def component():
    class _Block(Base):
        size = Property(int)
        label = Property(str)
        bound = Property(int, default=8)
    return _Block
