# -*- coding: utf-8 -*-
from .base import Reader
from .presentation import LawReader, PresentationReader
from .semilattice import SemilatticeReader

__all__ = ['Reader', 'SemilatticeReader', 'PresentationReader', 'LawReader']
