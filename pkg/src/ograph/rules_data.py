"""Move rules as pairs of E-datum fragments.

Each entry is ``(name, family, lhs, rhs, condition)``.  The 2--3 moves are
keyed by the passages of the edge they act on (over/under at its tail and
head), the crossing signs at both ends and, for the tied cases, the
relative order of the two new apexes.  For the 0--2 moves the edge
``[a, b]`` is the left edge of the side condition and ``[c, d]`` the right
one.
"""

RULES: list[tuple[str, str, str, str, str | None]] = [
    ('A1', 'mp',
     '[[a, 1, 2, e], [b, -1, d], [c, -2, f]; [1, 1]]',
     '[[a, 2, e], [b, 3, -2, 1, d], [c, -3, -1, f]; [-1, 1, 1]]', None),
    ('A2', 'mp',
     '[[a, 1, 2, e], [b, -1, d], [c, -2, f]; [1, -1]]',
     '[[a, 2, e], [b, 3, -2, 1, d], [c, -1, -3, f]; [1, 1, -1]]', None),
    ('A3', 'mp',
     '[[a, 1, 2, e], [b, -1, d], [c, -2, f]; [-1, -1]]',
     '[[a, 2, e], [b, -1, -3, d], [c, 1, -2, 3, f]; [1, -1, -1]]', None),
    ('A4', 'mp',
     '[[a, 1, 2, e], [b, -1, d], [c, -2, f]; [1, -1]]',
     '[[a, 2, e], [b, -3, -1, d], [c, 1, -2, 3, f]; [-1, -1, 1]]', None),
    ('B1', 'mp',
     '[[a, 1, d], [b, -1, -2, f], [c, 2, e]; [-1, 1]]',
     '[[a, 3, 2, d], [b, -1, f], [c, -2, 1, -3, e]; [1, 1, -1]]', None),
    ('B2', 'mp',
     '[[a, 1, d], [b, -1, -2, f], [c, 2, e]; [-1, 1]]',
     '[[a, -3, 1, -2, d], [b, -1, f], [c, 2, 3, e]; [-1, -1, 1]]', None),
    ('B3', 'mp',
     '[[a, 1, d], [b, -1, -2, f], [c, 2, e]; [1, 1]]',
     '[[a, 2, 3, d], [b, -1, f], [c, -2, 1, -3, e]; [1, -1, 1]]', None),
    ('B4', 'mp',
     '[[a, 1, d], [b, -1, -2, f], [c, 2, e]; [-1, -1]]',
     '[[a, -3, 1, -2, d], [b, -1, f], [c, 3, 2, e]; [-1, 1, -1]]', None),
    ('C1', 'mp',
     '[[a, 1, d], [b, -1, 2, e], [c, -2, f]; [-1, 1]]',
     '[[a, 3, 2, d], [b, 1, -2, e], [c, -3, -1, f]; [1, -1, 1]]', None),
    ('C2', 'mp',
     '[[a, 1, d], [b, -1, 2, e], [c, -2, f]; [1, -1]]',
     '[[a, 2, 3, d], [b, 1, -2, e], [c, -1, -3, f]; [-1, 1, 1]]', None),
    ('C3', 'mp',
     '[[a, 1, d], [b, -1, 2, e], [c, -2, f]; [1, 1]]',
     '[[a, 2, 3, d], [b, 1, -2, e], [c, -3, -1, f]; [1, 1, -1]]', None),
    ('C4', 'mp',
     '[[a, 1, d], [b, -1, 2, e], [c, -2, f]; [-1, -1]]',
     '[[a, 3, 2, d], [b, 1, -2, e], [c, -1, -3, f]; [-1, -1, -1]]', None),
    ('D1', 'mp',
     '[[a, 1, -2, f], [b, -1, d], [c, 2, e]; [-1, 1]]',
     '[[a, -2, 1, f], [b, -1, -3, d], [c, 2, 3, e]; [-1, 1, -1]]', None),
    ('D2', 'mp',
     '[[a, 1, -2, f], [b, -1, d], [c, 2, e]; [1, 1]]',
     '[[a, -2, 1, f], [b, -3, -1, d], [c, 2, 3, e]; [1, 1, 1]]', None),
    ('D3', 'mp',
     '[[a, 1, -2, f], [b, -1, d], [c, 2, e]; [1, -1]]',
     '[[a, -2, 1, f], [b, -3, -1, d], [c, 3, 2, e]; [1, -1, -1]]', None),
    ('D4', 'mp',
     '[[a, 1, -2, f], [b, -1, d], [c, 2, e]; [-1, -1]]',
     '[[a, -2, 1, f], [b, -1, -3, d], [c, 3, 2, e]; [-1, -1, 1]]', None),
    ('E1', 'bmp',
     '[[a, 1, 2, e], [b, -1, d], [c, -2, f]; [-1, 1]]',
     '[[a, 2, e], [b, 1, f], [c, 3, d], [-1, -3, -2]; [1, 1, -1]]', None),
    ('E2', 'bmp',
     '[[a, 1, 2, e], [b, -1, d], [c, -2, f]; [-1, 1]]',
     '[[a, 2, e], [b, 1, f], [c, 3, d], [-1, -2, -3]; [-1, -1, 1]]', None),
    ('F1', 'bmp',
     '[[a, 1, d], [b, -1, -2, f], [c, 2, e]; [1, -1]]',
     '[[a, -2, e], [b, -1, f], [c, -3, d], [1, 2, 3]; [-1, -1, 1]]', None),
    ('F2', 'bmp',
     '[[a, 1, d], [b, -1, -2, f], [c, 2, e]; [1, -1]]',
     '[[a, -2, e], [b, -1, f], [c, -3, d], [1, 3, 2]; [1, 1, -1]]', None),
    ('psI', 'ps',
     '[[a, b], [c, d]; []]',
     '[[a, 2, 1, b], [c, -2, -1, d]; [-1, 1]]', 'ps1'),
    ('psII', 'ps',
     '[[a, b], [c, d]; []]',
     '[[a, -1, -2, b], [c, 1, 2, d]; [-1, 1]]', 'ps2'),
    ('psIII', 'ps',
     '[[a, b], [c, d]; []]',
     '[[a, 2, 1, b], [c, -1, -2, d]; [-1, 1]]', 'ps3'),
    ('psIV', 'ps',
     '[[a, b], [c, d]; []]',
     '[[a, -2, -1, b], [c, 1, 2, d]; [-1, 1]]', 'ps4'),
    ('bps1', 'bps',
     '[[a, b], [c, d]; []]',
     '[[a, 2, d], [c, 1, b], [-1, -2]; [-1, 1]]', 'bps1'),
    ('bps2', 'bps',
     '[[a, b], [c, d]; []]',
     '[[a, -2, d], [c, -1, b], [1, 2]; [-1, 1]]', 'bps2'),
    ('zero2', 'zero2',
     '[[a, b], [c, d]; []]',
     '[[a, 2, 1, b], [c, -2, -1, d]; [-1, 1]]', 'zero2'),
    ('CP', 'cp',
     '[[a, -1, 2, -2, 3, -3, 1, b]; [1, 1, 1]]',
     '[[a, -1, -2, 3, -4, 2, 4, 5, -5, 1, -3, b]; [-1, -1, 1, -1, 1]]', None),
]
