"""Bundled renewable-energy case study

Five energy alternatives (S1..S5) judged by four decision makers (U1..U4)
on ten criteria (K1..K10) with the builtin nine-point scale.  Matrices are
criteria-as-rows, as in a problem file.  The reference section holds the
published weights, scores, ranking and leave-one-out rankings; they are
compared against, never asserted.
"""

# Name under which the CLI resolves this document
CASE_STUDY_NAME = 'case_study'

CASE_STUDY_COST_CRITERIA = ('K1', 'K2', 'K3', 'K7', 'K8')

CASE_STUDY_CRITERIA = (
    ('K1', 'investment cost'),
    ('K2', 'operation and maintenance cost'),
    ('K3', 'electric cost'),
    ('K4', 'efficiency'),
    ('K5', 'capacity factor'),
    ('K6', 'technical maturity'),
    ('K7', 'greenhouse gas emission'),
    ('K8', 'land use'),
    ('K9', 'job creation'),
    ('K10', 'social acceptance'),
)

CASE_STUDY_MATRICES = {
    'U1': [
        ['CH', 'SM', 'L', 'H', 'VH'],
        ['SM', 'H', 'L', 'CH', 'CH'],
        ['CH', 'SM', 'SL', 'H', 'H'],
        ['SM', 'H', 'CH', 'SM', 'E'],
        ['L', 'SM', 'E', 'VH', 'CH'],
        ['CH', 'VH', 'CH', 'H', 'SM'],
        ['CH', 'VL', 'VL', 'SL', 'H'],
        ['SM', 'H', 'CH', 'H', 'SL'],
        ['CH', 'CL', 'L', 'VL', 'SL'],
        ['VH', 'VH', 'H', 'SM', 'H'],
    ],
    'U2': [
        ['VH', 'SM', 'SL', 'VH', 'CH'],
        ['E', 'H', 'VL', 'VH', 'CH'],
        ['CH', 'E', 'L', 'H', 'SM'],
        ['H', 'H', 'VH', 'SM', 'E'],
        ['VL', 'E', 'E', 'CH', 'VH'],
        ['VH', 'VH', 'VH', 'H', 'H'],
        ['CH', 'L', 'VL', 'L', 'H'],
        ['SM', 'VH', 'CH', 'H', 'E'],
        ['CH', 'VL', 'VL', 'CL', 'SL'],
        ['VH', 'CH', 'VH', 'SM', 'H'],
    ],
    'U3': [
        ['CH', 'H', 'SL', 'H', 'VH'],
        ['L', 'E', 'SM', 'H', 'SL'],
        ['VH', 'SM', 'VL', 'SM', 'E'],
        ['E', 'SM', 'H', 'VH', 'E'],
        ['CL', 'SL', 'SL', 'H', 'H'],
        ['H', 'H', 'VH', 'SM', 'E'],
        ['VH', 'VL', 'CL', 'SL', 'H'],
        ['SL', 'H', 'VH', 'SM', 'L'],
        ['VH', 'CL', 'CL', 'VL', 'SL'],
        ['H', 'VH', 'VH', 'E', 'SM'],
    ],
    'U4': [
        ['CH', 'SM', 'VL', 'H', 'SM'],
        ['E', 'H', 'SL', 'H', 'VH'],
        ['CH', 'L', 'VL', 'E', 'SM'],
        ['SM', 'H', 'VH', 'H', 'SM'],
        ['VL', 'SM', 'SL', 'VH', 'CH'],
        ['CH', 'VH', 'VH', 'H', 'SM'],
        ['CH', 'SL', 'L', 'SL', 'VH'],
        ['E', 'H', 'CH', 'E', 'VL'],
        ['CH', 'CL', 'VL', 'VL', 'E'],
        # SL4 is repaired to SL when labels are not strict
        ['VH', 'CH', 'SM', 'SL4', 'E'],
    ],
}

CASE_STUDY_REFERENCE = {
    'dm_weights': {
        'U1': [0.214, 0.091, 0.067, 0.025, 0.125, 0.206, 0.14, 0.027, 0.045, 0.06],
        'U2': [0.307, 0.045, 0.033, 0.157, 0.052, 0.188, 0.096, 0.067, 0.023, 0.032],
        'U3': [0.153, 0.102, 0.041, 0.100, 0.029, 0.079, 0.108, 0.036, 0.012, 0.016],
        'U4': [0.225, 0.059, 0.107, 0.018, 0.091, 0.167, 0.211, 0.055, 0.042, 0.025],
    },
    'group_weights': [0.221, 0.07, 0.14, 0.06, 0.074, 0.19, 0.14, 0.042, 0.03, 0.033],
    'scores': [0.59, 0.68, 0.70, 0.81, 0.75],
    'ranking': ['S4', 'S5', 'S3', 'S2', 'S1'],
    # alternatives removed cumulatively, survivors ranked best first
    'leave_one_out': [
        {'removed': ['S1'], 'ranking': ['S4', 'S5', 'S3', 'S2']},
        {'removed': ['S1', 'S2'], 'ranking': ['S4', 'S3', 'S5']},
        {'removed': ['S1', 'S2', 'S3'], 'ranking': ['S4', 'S5']},
        {'removed': ['S1', 'S2', 'S3', 'S4'], 'ranking': ['S5']},
    ],
}

def case_study_document():
    """The case study as a problem document (a fresh copy on every call)"""
    return {
        'meta': {'name': 'renewable energy selection'},
        'scale': 'ivff-9',
        'strict_labels': False,
        'alternatives': ['S1', 'S2', 'S3', 'S4', 'S5'],
        'criteria': [{'name': name, 'kind': 'cost' if name in CASE_STUDY_COST_CRITERIA else 'benefit'}
            for name, _ in CASE_STUDY_CRITERIA],
        'dms': [
            {'name': 'U1', 'lambda': 0.33},
            {'name': 'U2', 'lambda': 0.28},
            {'name': 'U3', 'lambda': 0.22},
            {'name': 'U4', 'lambda': 0.17},
        ],
        'matrices': {dm: [list(row) for row in rows] for dm, rows in CASE_STUDY_MATRICES.items()},
        'reference': {
            'dm_weights': {dm: list(w) for dm, w in CASE_STUDY_REFERENCE['dm_weights'].items()},
            'group_weights': list(CASE_STUDY_REFERENCE['group_weights']),
            'scores': list(CASE_STUDY_REFERENCE['scores']),
            'ranking': list(CASE_STUDY_REFERENCE['ranking']),
            'leave_one_out': [{key: list(names) for key, names in entry.items()}
                for entry in CASE_STUDY_REFERENCE['leave_one_out']],
        },
    }
