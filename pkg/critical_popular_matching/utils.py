# coding: utf-8
"""
Description:
    Contains helper functions turning the package's objects into plain, canonically ordered
    structures, ready to be dumped as JSON by the CLI
Functions:
    dump_json: Dumps a structure as canonical JSON text
    edge_as_list: Returns an edge as a [man, woman] list
    instance_as_dict: Returns an instance as a dict of plain lists
    levels_as_dict: Returns a level mapping as a dict sorted by vertex
    matching_as_list: Returns a matching as a sorted list of [man, woman] lists
"""


# --------------------------------------------------------------------------------
# > Imports
# --------------------------------------------------------------------------------
# Built-in
import json

# Third-party

# Local


# --------------------------------------------------------------------------------
# > Functions
# --------------------------------------------------------------------------------
def dump_json(data):
    """
    Description:
        Dumps a structure as canonical JSON: sorted keys, 2-space indentation, trailing newline.
        Identical inputs always give byte-identical outputs.
    Args:
        data (dict|list): The structure to dump
    Returns:
        str: The JSON text
    """
    return json.dumps(data, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def edge_as_list(edge):
    """Returns an edge as a [man, woman] list"""
    man, woman = edge
    return [man, woman]


def instance_as_dict(inst):
    """
    Description:
        Returns an instance as a dict of plain lists
    Args:
        inst (MarriageInstance): The instance to convert
    Returns:
        dict: Contains the "men", "women", "critical" and "pref" keys
    """
    return {
        "men": list(inst.men),
        "women": list(inst.women),
        "critical": [u for u in inst.vertices if u in inst.critical],
        "pref": {u: list(inst.pref(u)) for u in inst.vertices},
    }


def levels_as_dict(levels):
    """Returns a level mapping as a dict sorted by vertex"""
    return {vertex: levels[vertex] for vertex in sorted(levels)}


def matching_as_list(matching):
    """Returns a matching as a sorted list of [man, woman] lists"""
    return [edge_as_list(edge) for edge in sorted(matching)]
