# -*- coding: utf-8 -*-
"""Sphinx hook listing declared properties of qlattice components."""
from qlattice.base import Base, Property


def _section(heading, lines):
    """Index just below `heading`, appending the heading if absent."""
    try:
        return lines.index(heading) + 2
    except ValueError:
        if lines and lines[-1] != "":
            lines.append("")
        lines.extend([heading, "-" * len(heading)])
        return len(lines)


def _type_name(property_):
    cls = property_.cls
    name = "{}.{}".format(cls.__module__, cls.__name__)
    short = "~" if name.split(".")[0] in ("qlattice", "builtins") else ""
    notes = []
    if property_.default is not Property.empty:
        notes.append("optional")
    if property_.readonly:
        notes.append("read-only")
    return ":class:`{}{}`{}".format(
        short, name, "".join(", " + note for note in notes))


def declarative_class(app, what, name, obj, options, lines):
    """Add declared properties to the numpydoc Parameters and Attributes"""
    if what != "class" or not issubclass(obj, Base):
        return
    parameters = _section("Parameters", lines)
    attributes = _section("Attributes", lines)
    for name, property_ in obj.properties.items():
        entry = "{} : {}\n    {}".format(
            name, _type_name(property_), property_.doc or "").split("\n")
        lines[parameters:parameters] = entry
        parameters += len(entry)
        attributes += len(entry)
        lines.insert(attributes, name)
        attributes += 1


def setup(app):
    app.connect('autodoc-process-docstring', declarative_class)
