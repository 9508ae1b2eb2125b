# -*- coding: utf-8 -*-
"""Readers of line-oriented text input files."""
from pathlib import Path

from .base import Reader
from ..base import Property


class TextFileReader(Reader):
    """Base class for text file readers.

    The file is read whole on first use and closed straight away; the reader
    still works as a context manager so callers can scope it. :meth:`lines`
    yields 1-based line numbers with the text before any ``#`` comment."""
    path = Property(Path, doc="Input file. Str is converted to path.")
    encoding = Property(str, default="utf-8", doc="File encoding.")

    def __init__(self, path, *args, **kwargs):
        super().__init__(Path(path), *args, **kwargs)
        self._text = None

    def __enter__(self):
        return self

    def __exit__(self, *args):
        self._text = None

    def text(self):
        if self._text is None:
            self._text = self.path.read_text(encoding=self.encoding)
        return self._text

    def lines(self):
        for number, line in enumerate(self.text().splitlines(), 1):
            yield number, line.split('#', 1)[0].strip()
