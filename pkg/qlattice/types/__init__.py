# -*- coding: utf-8 -*-
from .base import Type

__all__ = ['Type']
