# -*- coding: utf-8 -*-
from ..base import Base


class Type(Base):
    """Base type"""
