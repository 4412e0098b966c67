"""Reference values: published traces and tables, plus values frozen from independent oracles."""

from gobs.textio import parse_module_monomial, parse_system
from pathlib import Path

SYSTEMS = Path(__file__).resolve().parent.parent / "systems"


def load(name):
    return parse_system((SYSTEMS / f"{name}.txt").read_text(), name=name)


def mms(ring, text):
    return {parse_module_monomial(t.strip(), ring) for t in text.split(",")} if text else set()


# grlex cubics: appended generators, their signatures and S-pairs.
CUBICS_GRLEX_APPENDED = [
    ("z^3 - 2*y^2", "z*e_3", ("y*e_2", "z*e_3")),
    ("x^2*y - 1/2*z^2", "x^2*e_2", ("z*e_1", "x^2*e_2")),
    ("x*y - 1/2*y^2", "z*e_5", ("x*e_2", "z*e_5")),
    ("y^2*z - 4*y", "z*e_6", ("e_2", "z*e_6")),
    ("y^3 - 2*z^2", "y*e_6", ("e_3", "y*e_6")),
    ("x*z^2 - 1/2*y*z^2", "x*e_8", ("y^2*e_6", "x*e_8")),
    ("y*z^2 - 4*z", "x*e_5", ("e_1", "x*e_5")),
    ("x*z - 1/2*y*z", "x*e_10", ("y*e_9", "x*e_10")),
]

# grlex cubics, obstruction modules as usually displayed: (surviving generators, denominator).
CUBICS_GRLEX_GOBS = {
    3: ("x^2*e_2, x^2*e_3, z*e_3",
        "x^2*z^2*e_2, x^3*z*e_2, x^3*y*e_2, x^3*y*e_3, x*y*z*e_3"),
    4: ("x^2*e_2, x^2*e_3",
        "x^2*z^2*e_2, x^3*z*e_2, x^3*y*e_2, z*e_3, x^3*y*e_3, x*y*e_4"),
    5: ("x^2*e_3, x*e_5, y*e_5, z*e_5",
        "x^2*e_2, z*e_3, x^2*y*e_3, x*y*e_4, x*z*e_5, x*y*e_5, z^3*e_5"),
    6: ("x^2*e_3, x*e_5, y*e_5, z*e_6, y*e_6",
        "x^2*e_2, z*e_3, x^2*y*e_3, x*y*e_4, z*e_5, y^2*e_5, x*y*e_5, x*e_6, z^3*e_6"),
    7: ("x^2*e_3, x*e_5, y*e_5, y*e_6",
        "x^2*e_2, z*e_3, x^2*y*e_3, x*y*e_4, y^2*e_5, x*y*e_5, z*e_5, z*e_6, x*e_6, x*e_7, "
        "z^2*e_7"),
    8: ("x*e_5, x*e_8",
        "x^2*e_2, z*e_3, x^2*e_3, x*y*e_4, z*e_5, y*e_5, z*e_6, y*e_6, x*e_6, x*e_7, z^2*e_7, "
        "z*e_8, x*y*e_8"),
    9: ("x*e_5",
        "x^2*e_2, z*e_3, x^2*e_3, x*y*e_4, z*e_5, y*e_5, z*e_6, y*e_6, x*e_6, x*e_7, z^2*e_7, "
        "z*e_8, x*e_8, y*e_9, z*e_9"),
    10: ("x*e_10",
         "x^2*e_2, z*e_3, x^2*e_3, x*y*e_4, x*e_5, z*e_5, y*e_5, z*e_6, y*e_6, x*e_6, x*e_7, "
         "z^2*e_7, z*e_8, x*e_8, y*e_9, z*e_9, z*e_10, y*e_10"),
    11: ("", None),
}

CUBICS_GRLEX_BETTI = [[3, 6, 3], [2, 5, 3], [4, 8, 4], [5, 11, 7, 1], [4, 9, 6, 1], [2, 4, 2],
              [1, 2, 1], [1, 2, 1], []]
CUBICS_GRLEX_FINAL_LM = "x*y, z^3, y^2*z, y^3, y*z^2, x*z"

CUBICS_LEX_BETTI = [[3, 6, 3], [3, 6, 3], [2, 5, 3], [4, 8, 4], [5, 11, 7, 1], [5, 12, 9, 2],
              [2, 4, 2], [2, 4, 2], [1, 2, 1], [1, 2, 1], []]
CUBICS_LEX_FINAL_LM = "y, z^6, x*z"

QUADRICS_LEX_GOBS = ("y*e_2", "x*y*e_2, y*z*w*e_2, x^2*e_3, x*y*e_3")
QUADRICS_LEX_LSL = "y*e_2, x^2*e_3, x*y*e_3"
QUADRICS_LEX_BETTI = [[1, 2, 1], [2, 4, 2], [1, 2, 1], []]
QUADRICS_LEX_LM_SEQUENCE = [
    "x^2, x*y, z*w",
    "x^2, x*y, z*w, x*w^2",
    "x^2, x*y, z*w, x*w^2, y^3*z",
    "x^2, x*y, z*w, x*w^2, y^3*z, y^4",
]
QUADRICS_GREVLEX_BETTI = [[1, 2, 1], []]

GF5_BETTI = [[2, 4, 2], [2, 4, 2], [1, 3, 2], [2, 4, 2], [2, 5, 4, 1], [1, 2, 1], []]
GF5_LM_SEQUENCE = [
    "x*y",
    "x*y, y^2",
    "x*y, y^2, x*z^2",
    "x*y, y^2, x*z",
    "x*y, y^2, x*z, z^3",
    "x*y, y^2, x*z, z^3, y*z^2",
    "x*y, y^2, x*z, z^3, y*z^2, x^2",
]
