"""Problem file decoder

A problem file is a JSON document with the sections

    meta          {"name": ...}
    scale         builtin scale name, or an inline {label: [zl, zu, nl, nu]} table
    alternatives  ordered alternative names
    criteria      ordered names, or {"name": ..., "kind": "benefit" | "cost"}
    dms           ordered {"name": ..., "lambda": ...}
    matrices      {dm name: rows = criteria, cells = labels or 4-number lists}
    strict_labels optional, default true
    reference     optional published results to compare runs against

Matrices are written criteria-as-rows and transposed on load.  See
docs/formats.md for the full schema.
"""

import json
import logging
from pathlib import Path

from .base import (DataError, ProblemSyntaxError, ShapeMismatch, UnknownLabel)
from .number import make_ivffn
from .scale import BUILTIN_SCALE_NAME, LinguisticScale, builtin_scale
from .deviation import DecisionMatrix
from .pipeline import CRITERION_KINDS, Criterion, DecisionMaker, DecisionProblem

log = logging.getLogger('problem')

REQUIRED_SECTIONS = ('alternatives', 'criteria', 'dms', 'matrices')
BUILTIN_SCALES = {
    BUILTIN_SCALE_NAME: builtin_scale,
}

def _require(condition, message, section):
    if not condition:
        raise ProblemSyntaxError(message, section)

def _load_text(text):
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise ProblemSyntaxError(e.msg, 'document', e.lineno) from e

def _grades(values, section):
    _require(isinstance(values, (list, tuple)) and len(values) == 4 and
        all(isinstance(v, (int, float)) and not isinstance(v, bool) for v in values),
        f'expected 4 numbers (zl, zu, nl, nu), got {values!r}', section)
    return make_ivffn(*(float(v) for v in values))

def parse_scale(section):
    """Builtin scale by name, or an inline label table"""
    if section is None:
        return builtin_scale()
    if isinstance(section, str):
        factory = BUILTIN_SCALES.get(section)
        _require(factory is not None, f'unknown builtin scale {section!r}', 'scale')
        return factory()
    _require(isinstance(section, dict), 'scale must be a name or a label table', 'scale')
    name = section.get('name', 'inline')
    if 'entries' in section:
        entries = section['entries']
    else:
        entries = {k: v for k, v in section.items() if k != 'name'}
    _require(isinstance(entries, dict) and entries, 'scale table is empty', 'scale')
    return LinguisticScale(((label, _grades(values, 'scale'))
        for label, values in entries.items()), name)

def parse_alternatives(section):
    _require(isinstance(section, list) and section, 'expected a non-empty list of names',
        'alternatives')
    _require(all(isinstance(a, str) and a for a in section), 'names must be non-empty strings',
        'alternatives')
    _require(len(set(section)) == len(section), 'duplicate alternative names', 'alternatives')
    return [a for a in section]

def parse_criteria(section):
    _require(isinstance(section, list) and section, 'expected a non-empty list of criteria',
        'criteria')
    criteria = []
    for entry in section:
        if isinstance(entry, str):
            criteria.append(Criterion(entry))
            continue
        _require(isinstance(entry, dict) and isinstance(entry.get('name'), str),
            f'criterion {entry!r} needs a name', 'criteria')
        kind = entry.get('kind')
        _require(kind is None or kind in CRITERION_KINDS,
            f'criterion {entry["name"]!r} has unknown kind {kind!r}', 'criteria')
        criteria.append(Criterion(entry['name'], kind))
    names = [c.name for c in criteria]
    _require(len(set(names)) == len(names), 'duplicate criterion names', 'criteria')
    return criteria

def parse_dms(section):
    _require(isinstance(section, list) and section, 'expected a non-empty list of decision makers',
        'dms')
    dms = []
    for entry in section:
        _require(isinstance(entry, dict) and isinstance(entry.get('name'), str),
            f'decision maker {entry!r} needs a name', 'dms')
        influence = entry.get('lambda')
        _require(isinstance(influence, (int, float)) and not isinstance(influence, bool),
            f'decision maker {entry["name"]!r} needs a numeric lambda', 'dms')
        dms.append(DecisionMaker(entry['name'], float(influence)))
    names = [dm.name for dm in dms]
    _require(len(set(names)) == len(names), 'duplicate decision maker names', 'dms')
    return dms

def parse_matrix(rows, dm, alternatives, criteria, scale, strict, repairs):
    """One decision maker's criteria-by-alternatives table as an alternatives-by-criteria matrix"""
    if not isinstance(rows, list) or len(rows) != len(criteria):
        count = len(rows) if isinstance(rows, list) else 0
        raise ShapeMismatch(f'matrix {dm!r} has {count} rows for {len(criteria)} criteria')
    columns = []
    for criterion, row in zip(criteria, rows):
        if not isinstance(row, list) or len(row) != len(alternatives):
            count = len(row) if isinstance(row, list) else 0
            raise ShapeMismatch(f'matrix {dm!r} row {criterion.name!r} has {count} cells '
                f'for {len(alternatives)} alternatives')
        cells = []
        for alternative, cell in zip(alternatives, row):
            if isinstance(cell, str):
                try:
                    value, repaired = scale.resolve(cell, strict)
                except UnknownLabel:
                    raise UnknownLabel(cell, dm, criterion.name, alternative) from None
                if repaired is not None:
                    repairs.append(f'{dm}/{criterion.name}/{alternative}: {cell} -> {repaired}')
            else:
                try:
                    value = _grades(cell, 'matrices')
                except DataError as e:
                    raise ProblemSyntaxError(f'matrix {dm!r} row {criterion.name!r} column '
                        f'{alternative!r}: {e}', 'matrices') from e
            cells.append(value)
        columns.append(cells)
    return DecisionMatrix([list(r) for r in zip(*columns)], dm)

def problem_from_document(doc, strict = None):
    """Build a DecisionProblem from a decoded document

    strict=True forces strict label matching; None defers to the document's
    strict_labels flag (default true).
    """
    _require(isinstance(doc, dict), 'document must be an object', 'document')
    for section in REQUIRED_SECTIONS:
        _require(section in doc, 'section is missing', section)
    meta = doc.get('meta') or {}
    _require(isinstance(meta, dict), 'meta must be an object', 'meta')
    strict_labels = doc.get('strict_labels', True)
    _require(isinstance(strict_labels, bool), 'strict_labels must be true or false', 'strict_labels')
    if strict is None:
        strict = strict_labels

    scale = parse_scale(doc.get('scale'))
    alternatives = parse_alternatives(doc['alternatives'])
    criteria = parse_criteria(doc['criteria'])
    dms = parse_dms(doc['dms'])
    matrices_doc = doc['matrices']
    _require(isinstance(matrices_doc, dict), 'matrices must map decision makers to tables',
        'matrices')
    unknown = set(matrices_doc) - {dm.name for dm in dms}
    _require(not unknown, f'matrices for unknown decision makers {sorted(unknown)}', 'matrices')
    repairs = []
    matrices = []
    for dm in dms:
        if dm.name not in matrices_doc:
            raise ShapeMismatch(f'no matrix for decision maker {dm.name!r}')
        matrices.append(parse_matrix(matrices_doc[dm.name], dm.name, alternatives,
            criteria, scale, strict, repairs))
    reference = doc.get('reference')
    _require(reference is None or isinstance(reference, dict), 'reference must be an object',
        'reference')

    problem = DecisionProblem(meta.get('name', ''), alternatives, criteria, dms, matrices,
        scale.get_name(), repairs, reference)
    log.info(f'Loaded problem {problem.name!r}: {len(alternatives)} alternatives, '
        f'{len(criteria)} criteria, {len(dms)} decision makers')
    return problem

def parse_problem(source, strict = None):
    """Parse a problem from a path, JSON text or an already decoded document"""
    if isinstance(source, dict):
        return problem_from_document(source, strict)
    if isinstance(source, str) and source.lstrip().startswith('{'):
        return problem_from_document(_load_text(source), strict)
    path = Path(source)
    log.debug(f'Reading problem file {path}')
    return problem_from_document(_load_text(path.read_text()), strict)
