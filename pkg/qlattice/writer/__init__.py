# -*- coding: utf-8 -*-
from .base import Writer
from .dot import DotWriter
from .text import LatticeWriter, PresentationWriter, ReportWriter

__all__ = ['Writer', 'DotWriter', 'LatticeWriter', 'PresentationWriter',
           'ReportWriter']
