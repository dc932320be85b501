"""Linguistic scales

A linguistic scale maps verbal judgment labels (e.g. "VH" for very high
importance) to IVFFNs.  The builtin nine-point scale is available under
the name 'ivff-9'; custom scales can be given inline in a problem file.
"""

import logging
import re

from .base import DataError, UnknownLabel
from .number import make_ivffn

log = logging.getLogger('scale')

BUILTIN_SCALE_NAME = 'ivff-9'

# Builtin nine-point scale: label, description, (zl, zu, nl, nu)
IVFF9_ROWS = (
    ('CH', 'Certainly High Importance', (0.95, 1.0, 0.0, 0.0)),
    ('VH', 'Very High Importance', (0.8, 0.9, 0.1, 0.2)),
    ('H', 'High Importance', (0.7, 0.8, 0.2, 0.3)),
    ('SM', 'Slightly More Importance', (0.6, 0.65, 0.35, 0.4)),
    ('E', 'Equally Importance', (0.5, 0.5, 0.5, 0.5)),
    ('SL', 'Slightly Less Importance', (0.35, 0.4, 0.6, 0.65)),
    ('L', 'Low Importance', (0.2, 0.3, 0.7, 0.8)),
    ('VL', 'Very Low Importance', (0.1, 0.2, 0.8, 0.9)),
    ('CL', 'Certainly Low Importance', (0.0, 0.0, 0.95, 1.0)),
)

TRAILING_DIGITS = re.compile(r'\d+$')

def normalize_label(label):
    return str(label).strip().upper()

class LinguisticScale(object):
    """Ordered, case-insensitive map from labels to IVFFNs"""

    def __init__(self, entries, name = ''):
        self.name = name
        self.entries = {}
        for label, value in entries:
            key = normalize_label(label)
            if not key:
                raise DataError(f'scale {name!r} has an empty label')
            if key in self.entries:
                raise DataError(f'scale {name!r} defines label {key!r} twice')
            self.entries[key] = value

    def get_name(self):
        return self.name

    def get_labels(self):
        return list(self.entries)

    def resolve(self, label, strict = True):
        """Return (value, repaired_label) for a label

        repaired_label is None unless non-strict mode had to strip trailing
        digits from the label to find it (e.g. "SL4" -> "SL").
        """
        key = normalize_label(label)
        value = self.entries.get(key)
        if value is not None:
            return value, None
        if not strict and key:
            repaired = TRAILING_DIGITS.sub('', key)
            if repaired != key and repaired in self.entries:
                log.warning(f'Label {label!r} repaired to {repaired!r}')
                return self.entries[repaired], repaired
        raise UnknownLabel(label)

    def lookup(self, label, strict = True):
        return self.resolve(label, strict)[0]

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries.items())

def builtin_scale():
    """The nine-point IVFF scale (CH, VH, H, SM, E, SL, L, VL, CL)"""
    return LinguisticScale(((label, make_ivffn(*grades)) for label, _, grades in IVFF9_ROWS),
        BUILTIN_SCALE_NAME)

def lookup(scale, label, strict = True):
    return scale.lookup(label, strict)
