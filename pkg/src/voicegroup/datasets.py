"""Worked musical progressions used by the tests, the docs and the CLI demos.

All sequences are encoded per the usual pitch-class conventions: chromatic
pitch classes C=0..B=11, or generic scale degrees 0..6 for the mod-7 items.
"""

from .analysis import Progression

# Hexatonic harmonization of the Grail motive (Parsifal, act 3): root-position
# major triads alternating with first-inversion minor triads,
# Eb -> b -> G -> eb -> B -> g, closing back to Eb.
GRAIL = Progression.of(
    [(3, 7, 10), (2, 6, 11), (7, 11, 2), (6, 10, 3), (11, 3, 6), (10, 2, 7)],
    modulus=12,
    cyclic=True,
)

# Diatonic falling-fifths opening C -> F -> b(dim) in generic scale degrees
# (C major scale, C=0..B=6), each chord in the voicing the sequence uses.
FALLING_FIFTHS = Progression.of([(0, 2, 4), (5, 0, 3), (6, 1, 3)], modulus=7)

# Webern, Concerto for Nine Instruments, op. 24, second movement: the
# enchained 3-note segments of mm. 15-21 and their transposed echo in
# mm. 22-27 (each row advances by retrograde inversion enchaining, and the
# second row is the first shifted by -2).
WEBERN_ROW_1 = Progression.of(
    [(8, 4, 5), (4, 5, 1), (5, 1, 2), (1, 2, 10), (2, 10, 11), (10, 11, 7)], modulus=12
)
WEBERN_ROW_2 = Progression.of(
    [(6, 2, 3), (2, 3, 11), (3, 11, 0), (11, 0, 8), (0, 8, 9), (8, 9, 5)], modulus=12
)

# Schoenberg, String Quartet in D minor, op. 7: the octatonic cycle of
# enchained consonant segments through (1,6,10), and its image under the
# componentwise map x -> 7x+7 (the "jet/shark" trichord cycle).
SCHOENBERG_OCTATONIC = Progression.of(
    [(1, 6, 10), (6, 10, 3), (10, 3, 7), (3, 7, 0), (7, 0, 4), (0, 4, 9), (4, 9, 1), (9, 1, 6)],
    modulus=12,
    cyclic=True,
)
SCHOENBERG_JET_SHARK = Progression.of(
    [(2, 1, 5), (1, 5, 4), (5, 4, 8), (4, 8, 7), (8, 7, 11), (7, 11, 10), (11, 10, 2), (10, 2, 1)],
    modulus=12,
    cyclic=True,
)

# Rimsky-Korsakov, Hymn to the Sun: consecutive 3-note segments of the
# 10-note melodic model in scale degrees with 0 = the model's last note.
# Youmans, Without a Song: same construction; the second melody is the
# first expanded by the multiplication M2 (x -> 2x mod 7).
HYMN_TO_THE_SUN = Progression.of(
    [(2, 2, 3), (2, 3, 3), (3, 3, 2), (3, 2, 2), (2, 2, 1), (2, 1, 1), (1, 1, 0), (1, 0, 0)],
    modulus=7,
)
WITHOUT_A_SONG = Progression.of(
    [(4, 4, 6), (4, 6, 6), (6, 6, 4), (6, 4, 4), (4, 4, 2), (4, 2, 2), (2, 2, 0), (2, 0, 0)],
    modulus=7,
)

# The six consonant chords of the hexatonic cycle through Eb major, as
# pitch-class sets, in the cyclic order a single RICH step traverses them
# (see the analysis tests, which rediscover the voicings by search).
HEXATONIC_CHORDS = [
    frozenset({3, 7, 10}),   # Eb major
    frozenset({7, 10, 2}),   # g minor
    frozenset({7, 11, 2}),   # G major
    frozenset({11, 2, 6}),   # b minor
    frozenset({11, 3, 6}),   # B major
    frozenset({3, 6, 10}),   # eb minor
]
