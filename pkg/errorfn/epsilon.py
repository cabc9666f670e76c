"""The error function of a block and its sum over the blocks of a graph.

For girth parameter g with target t_g (2/9 for g = 4, 1/5 for g = 5):

* eps(K2) = -t_g,
* eps(B) = max(1 - j(5 t_g - 1) - i t_g, 0) when B is in F_{i,j},
* eps(B) = max(1 - t_g - j(5 t_g - 1) - i t_g, 0) when B is in F^g_{i,j,k} with i <= 3,
* eps(B) = 0 otherwise.

The rows are tried in that order. A graph in both F_{i,j} and some F^g gets the
same value either way in the checked range, which ``check_well_defined`` confirms.
"""

from fractions import Fraction

from opentelemetry import trace

from config import Config
from families.membership import forced_index, member_of_F, member_of_Fg
from graphs.errors import PreconditionViolated
from graphs.multigraph import Multigraph
from graphs.structure import block_decomposition, is_block

tracer = trace.get_tracer(__name__)


class NotABlock(ValueError):
    def __init__(self, vertex_count: int):
        super().__init__(f"Graph on {vertex_count} vertices is not a block.")


def target(g: int) -> Fraction:
    """The constant t_g of the bound."""
    try:
        return Config.TARGET[g]
    except KeyError:
        raise PreconditionViolated(f"Girth parameter must be 4 or 5, got {g}.") from None


def family_value(g: int, i: int, j: int) -> Fraction:
    t = target(g)
    return max(1 - j * (5 * t - 1) - i * t, Fraction(0))


def generalised_value(g: int, i: int, j: int) -> Fraction:
    t = target(g)
    return max(1 - t - j * (5 * t - 1) - i * t, Fraction(0))


def _is_single_edge(graph: Multigraph) -> bool:
    return graph.vertex_count == 2 and graph.edges in (((0, 1),), ((1, 0),))


def epsilon(block: Multigraph, g: int, *, skip_zero_rows: bool = True) -> Fraction:
    """Error value of a block.

    With ``skip_zero_rows`` the F_{i,j} test is only run when its value is
    positive, so a member of a zero F_{i,j} row may still take a positive
    generalised value. Without it the first matching row wins.

    Raises:
        NotABlock: if ``block`` is not a block.
    """
    t = target(g)
    if not is_block(block):
        raise NotABlock(block.vertex_count)
    if _is_single_edge(block):
        return -t

    index = forced_index(block)
    if index is not None:
        value = family_value(g, *index)
        if (value > 0 or not skip_zero_rows) and member_of_F(block) == index:
            return value

    generalised = member_of_Fg(block, g)
    if generalised is not None:
        i, j, _ = generalised
        return generalised_value(g, i, j)
    return Fraction(0)


def r_value(graph: Multigraph, g: int) -> Fraction:
    """r_g(G): the sum of eps over all blocks of ``graph``."""
    with tracer.start_as_current_span(
        "r_value", attributes={"g": g, "vertices": graph.vertex_count}
    ):
        return sum(
            (epsilon(block.graph, g) for block in block_decomposition(graph).blocks),
            Fraction(0),
        )
