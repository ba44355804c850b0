"""Built-in example fans and partitions used throughout tests and the CLI.

Ray order follows the usual pictures: sigma_1 = (1,0), sigma_2 = (0,-1),
sigma_3 opposite-ish, sigma_4 = (0,1), so chamber tau_1 = cone{sigma_1,
sigma_4} is the upper right sector.
"""

from . import arrangement as arrlib
from . import partition as partlib
from .fan import build_fan


def square():
    """Complete fan of the four axis sectors (g-fan of the semisimple case)."""
    return build_fan(2, [(1, 0), (0, -1), (-1, 0), (0, 1)],
                     [(0, 3), (0, 1), (1, 2), (2, 3)])


def hirzebruch(a=1):
    """Fan of the Hirzebruch surface with parameter a >= 1."""
    return build_fan(2, [(1, 0), (0, -1), (-1, a), (0, 1)],
                     [(0, 3), (0, 1), (1, 2), (2, 3)])


def three_lines():
    """Three pairwise distinct lines through the origin; six chambers."""
    rays = [(1, 0), (0, 1), (2, -3), (-1, 0), (0, -1), (-2, 3)]
    # counterclockwise: (1,0), (0,1), (-2,3), (-1,0), (0,-1), (2,-3)
    ccw = [0, 1, 5, 3, 4, 2]
    max_cones = [tuple(sorted((ccw[i], ccw[(i + 1) % 6]))) for i in range(6)]
    return build_fan(2, rays, max_cones)


def brauer():
    return arrlib.builtin_brauer()


def torus_partition(fan):
    """Opposite rays identified on the square fan; all chambers follow."""
    return partlib.admissible_closure(fan, [((0,), (2,)), ((1,), (3,))])


def hirzebruch_p1(fan):
    """The admissible closure identifying sigma_2 with sigma_4."""
    return partlib.admissible_closure(fan, [((1,), (3,))])


def three_lines_partition(fan):
    """Opposite-ray pairs identified and all six chambers in one block."""
    seeds = [((0,), (3,)), ((1,), (4,)), ((2,), (5,))]
    closure = partlib.admissible_closure(fan, seeds)
    chambers = fan.chambers()
    extra = [(chambers[0], c) for c in chambers[1:]]
    return partlib.join(closure, partlib.admissible_closure(fan, extra))


EXAMPLES = {
    "square": square,
    "hirzebruch-a1": hirzebruch,
    "three-lines": three_lines,
    "brauer3": brauer,
}
