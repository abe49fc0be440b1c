"""Published reference values checked by ``tribracket reproduce``."""

SPECTRUM_TABLE = {
    1: ["uvwxyz"],
    2: ["2uvwx^2y^2z^2", "2uvw"],
    3: [
        "3uvwxy^3z^3", "3uvwx^3yz^3", "3uvwx^3y^3z", "u^3v^3w^3xyz + 2xyz",
        "3uvwz", "3uvwy", "3uvwx",
    ],
    4: [
        "4uvw", "4uvwx^4y^4z^2", "4uvwx^2y^2z^2", "4uvwxy", "4uvwz^2",
        "4uvwx^2y^4z^4", "4uvwx^4y^2z^4", "4uvwxyz^4", "4uvwx^2y^4z^2",
        "4uvwx^4y^2z^2", "4uvwy^2z^2", "4uvwx^2z^2", "4uvwy^2", "4uvwx^2",
        "4uvwx^2y^2z^4", "4uvwx^2y^2", "4uvwx^4y^4z^4",
    ],
    5: [
        "5uvwx^5y^5z", "uvw^5xyz + 4uvxyz", "u^5v^5wxyz + 4wxyz", "5uvwz",
        "5uvwy", "5uvwxy", "5uvwxyz^5", "5uvwxyz", "5uvwx", "5uvwx^5yz^5",
        "5uvwxy^5z^5",
    ],
}

EXAMPLE_POLYNOMIAL = "3uvwy"
EXAMPLE_SUBPOLYNOMIAL = "u^3v^3w^3xyz"

HOPF_COUNT = 9
UNLINK_COUNT = 27
L7_COUNT = 64
Z18_COUNT = 2916

_H4 = "uvwx^2y^2z^4"
ENH_L7 = {
    "L7a3": {_H4: 4, "4" + _H4: 48, "2" + _H4: 12},
    "L7a7": {_H4: 4, "2" + _H4: 28, "4" + _H4: 32},
}

ENH_Z18 = {
    "granny": {
        "3uvwy^2z^6": 324,
        "6uvwx^18y^2z^6 + 12uvwy^2z^6": 972,
        "3uvwx^18y^2z^6 + 6uvwy^2z^6": 972,
        "6uvwy^2z^6": 324,
        "uvwx^18y^2z^6": 6,
        "3uvwx^18y^2z^6": 156,
        "6uvwx^18y^2z^6": 156,
        "2uvwx^18y^2z^6": 6,
    },
    "6_1": {
        "3uvwy^2z^6": 108,
        "3uvwx^18y^2z^6 + 6uvwy^2z^6": 1296,
        "6uvwx^18y^2z^6 + 12uvwy^2z^6": 1296,
        "6uvwy^2z^6": 108,
        "uvwx^18y^2z^6": 6,
        "3uvwx^18y^2z^6": 48,
        "6uvwx^18y^2z^6": 48,
        "2uvwx^18y^2z^6": 6,
    },
}

_H5 = "uvw^5xyz"
_M5 = "uvw^5xyz + 4uvxyz"
ENH_L11 = {
    "L11n404": {_H5: 1, _M5: 624},
    "L11n406": {_H5: 1, _M5: 124},
}
ENH_L10N9 = {
    "L10n9{0}": {_H5: 1, _M5: 124},
    "L10n9{1}": {_H5: 1, _M5: 24},
}

_H8 = "uvwx^8y^2z^4"
_Z8_ROWS = {
    "L2a1": (8, 24, 32, 64),
    "L4a1": (8, 24, 96, 128),
    "L5a1": (8, 24, 96, 384),
    "L6a1": (8, 24, 96, 128),
    "L6a2": (8, 24, 32, 64),
    "L6a3": (8, 24, 32, 64),
    "L6a4": (8, 56, 448, 512),
    "L6a5": (8, 56, 64, 128),
    "L6n1": (8, 56, 64, 128),
    "L7a1": (8, 24, 96, 384),
    "L7a2": (8, 24, 96, 128),
    "L7a3": (8, 24, 96, 384),
    "L7a4": (8, 24, 96, 384),
    "L7a5": (8, 24, 32, 64),
    "L7a6": (8, 24, 32, 64),
    "L7a7": (8, 56, 64, 128),
    "L7n1": (8, 24, 96, 128),
    "L7n2": (8, 24, 96, 384),
}
ENH_Z8 = {
    name: {_H8: a, "2" + _H8: b, "4" + _H8: c, "8" + _H8: d}
    for name, (a, b, c, d) in _Z8_ROWS.items()
}
