###################################################################################################
# Copyright (c) 2024 Enclustra GmbH, Switzerland (info@enclustra.com)
# 
# Permission is hereby granted, free of charge, to any person obtaining a copy of this software
# and associated documentation files (the "Software"), to deal in the Software without
# restriction, including without limitation the rights to use, copy, modify, merge, publish,
# distribute, sublicense, and/or sell copies of the Software, and to permit persons to whom the
# Software is furnished to do so, subject to the following conditions:
# 
# The above copyright notice and this permission notice shall be included in all copies or
# substantial portions of the Software.
# 
# THE SOFTWARE IS PROVIDED "AS IS", WITHOUT WARRANTY OF ANY KIND, EXPRESS OR IMPLIED, INCLUDING
# BUT NOT LIMITED TO THE WARRANTIES OF MERCHANTABILITY, FITNESS FOR A PARTICULAR PURPOSE AND
# NONINFRINGEMENT. IN NO EVENT SHALL THE AUTHORS OR COPYRIGHT HOLDERS BE LIABLE FOR ANY CLAIM,
# DAMAGES OR OTHER LIABILITY, WHETHER IN AN ACTION OF CONTRACT, TORT OR OTHERWISE, ARISING FROM,
# OUT OF OR IN CONNECTION WITH THE SOFTWARE OR THE USE OR OTHER DEALINGS IN THE SOFTWARE.

###################################################################################################
# Description:
#
# JSON readers and writers: presentations, resolution dumps, chain complex data for Toda brackets
# and the reports of the command-line front end. JSON is the canonical format; tables are rendered
# from the same dicts.
###################################################################################################

import json

from .en_obstruct_types import *
from .rational_matrix import *
from .graded_lie import *
from .chain_complex import *
from .simplicial_cw import *

###################################################################################################
# Generic
###################################################################################################

def dumps_report(data) -> str:
    """
    Deterministic serialization (sorted keys, fixed indentation).
    """
    return json.dumps(data, sort_keys=True, indent=2)

def write_json(path : str, data):
    with open(path, "w") as f:
        f.write(dumps_report(data) + "\n")

def read_json(path : str):
    try:
        with open(path, "r") as f:
            return json.load(f)
    except json.JSONDecodeError as e:
        raise PresentationError(f"{path}: invalid JSON at line {e.lineno}, column {e.colno}: {e.msg}")

def _key(q : int, e : int) -> str:
    return f"{q},{e}"

def _parse_key(text : str):
    try:
        q, e = text.split(",")
        return int(q), int(e)
    except ValueError:
        raise PresentationError(f"Expected a 'q,e' key, got '{text}'")

###################################################################################################
# Presentations
###################################################################################################

def presentation_to_dict(algebra : PresentedLieAlgebra):
    return {"generators": [{"name": g.name, "degree": g.degree} for g in algebra.generators],
            "relations": [to_expression(r) for r in algebra.relations],
            "degree_cutoff": algebra.degree_cutoff}

def presentation_from_dict(data, D=None, pivot_order : PivotOrder = PivotOrder.Ascending_s) -> PresentedLieAlgebra:
    """
    {"generators": [{"name", "degree"}], "relations": [expr], "degree_cutoff": int}. The cutoff
    defaults to D; an explicit D overrides a smaller stored cutoff.
    """
    if "generators" not in data:
        raise PresentationError("Presentation has no 'generators' entry")
    gens = []
    for g in data["generators"]:
        if "name" not in g or "degree" not in g:
            raise PresentationError(f"Generator entry {g} needs 'name' and 'degree'")
        gens.append(GradedGenerator(g["name"], g["degree"]))
    cutoff = data.get("degree_cutoff", D)
    if cutoff is None:
        raise PresentationError("No degree cutoff given")
    if D is not None:
        cutoff = max(int(cutoff), int(D))
    return PresentedLieAlgebra(gens, list(data.get("relations", [])), int(cutoff), pivot_order)

def read_presentation(path : str, D=None, pivot_order : PivotOrder = PivotOrder.Ascending_s) -> PresentedLieAlgebra:
    return presentation_from_dict(read_json(path), D, pivot_order)

###################################################################################################
# Resolutions
###################################################################################################

def resolution_to_dict(X : TruncatedCWObject, homotopy=None):
    """
    Dump of a truncated CW object: per level the basis generators with their degrees and attaching
    expressions in the alphabet of the level below. homotopy ({n: [dims]}) is added as a table when
    given; it is derived data and ignored when reading.
    """
    levels = []
    for n, gens in enumerate(X.basis):
        entries = []
        for g in gens:
            entry = {"name": g.name, "degree": g.degree}
            if n > 0:
                entry["attach"] = to_expression(X.attach_value(g))
            entries.append(entry)
        levels.append(entries)
    data = {"N": X.N, "D": X.D, "pivot_order": X.pivot_order.name, "levels": levels}
    if X.presentation is not None:
        data["presentation"] = presentation_to_dict(X.presentation)
    if homotopy is not None:
        data["homotopy"] = {str(n): dims for n, dims in sorted(homotopy.items())}
    return data

def resolution_from_dict(data) -> TruncatedCWObject:
    D = int(data["D"])
    try:
        pivot_order = PivotOrder[data.get("pivot_order", PivotOrder.Ascending_s.name)]
    except KeyError:
        raise PresentationError(f"Unknown pivot order '{data['pivot_order']}'")
    presentation = None
    if "presentation" in data:
        presentation = presentation_from_dict(data["presentation"], pivot_order=pivot_order)
    levels = data["levels"]
    gens0 = [CWGenerator(g["name"], g["degree"], 0) for g in levels[0]]
    X = TruncatedCWObject([gens0] + [[] for _ in levels[1:]], D, pivot_order, presentation)
    for n in range(1, len(levels)):
        gens = []
        for g in levels[n]:
            value = X.parse(g["attach"], n - 1, int(g["degree"]))
            gens.append(CWGenerator(g["name"], g["degree"], n, value))
        X.add_generators(n, gens)
    return X

def read_resolution(path : str) -> TruncatedCWObject:
    return resolution_from_dict(read_json(path))

def attach_from_dict(X : TruncatedCWObject, level : int, data):
    """
    {name: expression} on basis generators of `level`, parsed in the alphabet of level-1.
    Generators missing from data keep their own attaching value.
    """
    result = {}
    for g in X.basis[level]:
        if g.name in data:
            result[g.name] = X.parse(data[g.name], level - 1, g.degree)
        else:
            result[g.name] = X.attach_value(g)
    unknown = set(data) - set(result)
    if unknown:
        raise PresentationError(f"Unknown level-{level} generators: {sorted(unknown)}")
    return result

###################################################################################################
# Chain complexes and maps
###################################################################################################

def chain_complex_to_dict(c : ChainComplexQ):
    return {"dims": {_key(q, e): n for (q, e), n in sorted(c.dims.items())},
            "differentials": {_key(q, e): matrix_to_lists(m) for (q, e), m in sorted(c.differentials.items())}}

def chain_complex_from_dict(data) -> ChainComplexQ:
    dims = {_parse_key(k): int(v) for k, v in data.get("dims", {}).items()}
    c = ChainComplexQ(dims)
    diffs = {}
    for k, rows in data.get("differentials", {}).items():
        q, e = _parse_key(k)
        diffs[(q, e)] = matrix_from_lists(rows, (c.dim(q - 1, e), c.dim(q, e)))
    result = ChainComplexQ(dims, diffs)
    if not result.check_square_zero():
        raise PresentationError("Differentials do not square to zero")
    return result

def chain_map_from_dict(data, source : ChainComplexQ, target : ChainComplexQ) -> ChainMap:
    p = int(data.get("p", 0))
    comps = {}
    for k, rows in data.get("components", {}).items():
        q, e = _parse_key(k)
        comps[(q, e)] = matrix_from_lists(rows, (target.dim(q + p, e), source.dim(q, e)))
    return ChainMap(source, target, p, comps)

def toda_input_from_dict(data):
    """
    {"complexes": [A_0, ..., A_k], "maps": [f_1, ..., f_k]} with f_j: A_{j-1} -> A_j.
    """
    complexes = [chain_complex_from_dict(c) for c in data["complexes"]]
    maps = data["maps"]
    if len(maps) != len(complexes) - 1:
        raise PresentationError(f"{len(complexes)} complexes need {len(complexes) - 1} maps, got {len(maps)}")
    return [chain_map_from_dict(m, complexes[j], complexes[j + 1]) for j, m in enumerate(maps)]

def read_toda_input(path : str):
    return toda_input_from_dict(read_json(path))

###################################################################################################
# Reports
###################################################################################################

def cohomology_report(n : int, dims):
    """
    [{"n", "degree", "dim"}] for degrees 1..len(dims).
    """
    return [{"n": n, "degree": d, "dim": dim} for d, dim in enumerate(dims, start=1)]

def homotopy_table(homotopy):
    return [{"level": n, "degree": d, "dim": dim}
            for n, dims in sorted(homotopy.items()) for d, dim in enumerate(dims, start=1)]

def _cell(x) -> str:
    if isinstance(x, (dict, list)):
        return json.dumps(x, sort_keys=True)
    return str(x)

def render_table(data) -> str:
    """
    Human-readable rendering of a JSON report. Lists of flat dicts become column tables; nested
    dicts become indented sections.
    """
    lines = []
    _render(data, lines, "")
    return "\n".join(lines)

def _render(data, lines, indent):
    if isinstance(data, list) and data and all(isinstance(r, dict) for r in data) \
            and all(not isinstance(v, (dict, list)) for r in data for v in r.values()):
        cols = sorted({k for r in data for k in r})
        width = {c: max(len(c), *(len(_cell(r.get(c, ""))) for r in data)) for c in cols}
        lines.append(indent + " | ".join(c.ljust(width[c]) for c in cols))
        lines.append(indent + "-+-".join("-" * width[c] for c in cols))
        for r in data:
            lines.append(indent + " | ".join(_cell(r.get(c, "")).ljust(width[c]) for c in cols))
    elif isinstance(data, dict):
        for k in sorted(data):
            v = data[k]
            if isinstance(v, dict) or (isinstance(v, list) and v and isinstance(v[0], dict)):
                lines.append(f"{indent}{k}:")
                _render(v, lines, indent + "  ")
            else:
                lines.append(f"{indent}{k}: {_cell(v)}")
    else:
        lines.append(indent + _cell(data))
