# coding: utf-8
"""
Description:
    Reads and writes the line-oriented text formats of instances and matchings.
    Instance format:
        men <id> <id> ...
        women <id> ...
        critical <id> ...          (optional)
        pref <id>: <id> <id> ...   (one per vertex, most-preferred first)
    Matching format:
        <man> <woman>              (one pair per line)
    In both formats, '#' starts a comment when it opens a line or follows a blank,
    so that reduced ids such as 'm1#0' are kept intact.
Functions:
    parse_instance: Builds a MarriageInstance from its text
    parse_matching: Builds a Matching from its text, validated against an instance
    serialize_instance: Returns the canonical text of an instance
    serialize_matching: Returns the canonical text of a matching
"""


# --------------------------------------------------------------------------------
# > Imports
# --------------------------------------------------------------------------------
# Built-in
import re

# Third-party

# Local
from .exceptions import ParseError, UnknownVertexError
from .models import MarriageInstance, Matching


# --------------------------------------------------------------------------------
# > Constants
# --------------------------------------------------------------------------------
COMMENT = re.compile(r"(^|\s)#.*$")
SECTIONS = ("men", "women", "critical")


# --------------------------------------------------------------------------------
# > Functions
# --------------------------------------------------------------------------------
def parse_instance(text, reduced=False):
    """
    Description:
        Builds a MarriageInstance from the instance text format.
        Syntax problems raise ParseError with the line number, the other checks are
        performed by MarriageInstance itself.
    Args:
        text (str): The instance text
        reduced (bool, optional): Allows the reserved characters of reduced instances. Defaults to False.
    Returns:
        MarriageInstance: The validated instance
    """
    sections = {}
    pref = {}
    for number, line in _meaningful_lines(text):
        keyword, _, rest = line.replace("\t", " ").partition(" ")
        if keyword in SECTIONS:
            if keyword in sections:
                raise ParseError(f"'{keyword}' is declared twice", line=number)
            sections[keyword] = rest.split()
        elif keyword == "pref":
            vertex, entries = _parse_pref(line, number)
            if vertex in pref:
                raise ParseError(f"preferences of {vertex!r} are given twice", line=number)
            pref[vertex] = entries
        else:
            raise ParseError(f"unknown keyword {keyword!r}", line=number)
    for required in ("men", "women"):
        if required not in sections:
            raise ParseError(f"missing '{required}' line")
    return MarriageInstance(
        men=sections["men"],
        women=sections["women"],
        pref=pref,
        critical=sections.get("critical", ()),
        reduced=reduced,
    )


def serialize_instance(inst):
    """
    Description:
        Returns the canonical text of an instance: men, women, critical (only when non-empty),
        then the lists of the men and of the women, each in declared order
    Args:
        inst (MarriageInstance): The instance to write
    Returns:
        str: The instance text, ending with a newline
    """
    lines = [
        _join("men", inst.men),
        _join("women", inst.women),
    ]
    if inst.critical:
        lines.append(_join("critical", [u for u in inst.vertices if u in inst.critical]))
    for vertex in inst.vertices:
        lines.append(_join(f"pref {vertex}:", inst.pref(vertex)))
    return "\n".join(lines) + "\n"


def parse_matching(text, inst):
    """
    Description:
        Builds a Matching from '<man> <woman>' lines and validates it against the instance
    Args:
        text (str): The matching text
        inst (MarriageInstance): The instance the matching belongs to
    Returns:
        Matching: The validated matching
    """
    edges = []
    for number, line in _meaningful_lines(text):
        tokens = line.split()
        if len(tokens) != 2:
            raise ParseError("expected '<man> <woman>'", line=number)
        man, woman = tokens
        if not inst.is_man(man) or not inst.is_woman(woman):
            raise UnknownVertexError(f"line {number}: ({man}, {woman}) is not a (man, woman) pair of the instance")
        edges.append((man, woman))
    return Matching(edges).validate(inst)


def serialize_matching(matching):
    """Returns one '<man> <woman>' line per edge, in lexicographic order"""
    return "".join(f"{man} {woman}\n" for man, woman in matching)


# --------------------------------------------------------------------------------
# > Helpers
# --------------------------------------------------------------------------------
def _meaningful_lines(text):
    """Yields (line number, content) for every line that is not blank once comments are removed"""
    for number, raw in enumerate(text.splitlines(), start=1):
        line = COMMENT.sub("", raw).strip()
        if line:
            yield number, line


def _parse_pref(line, number):
    head, separator, tail = line.partition(":")
    if not separator:
        raise ParseError("a 'pref' line needs a ':' after the vertex id", line=number)
    tokens = head.split()
    if len(tokens) != 2 or tokens[0] != "pref":
        raise ParseError("expected 'pref <id>: <id> ...'", line=number)
    return tokens[1], tail.split()


def _join(head, items):
    return " ".join([head, *items])
