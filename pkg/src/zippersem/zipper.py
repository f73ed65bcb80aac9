"""Zipper navigation in statement trees.

A Location pairs a focused substatement with its inverted context (Path):
the chain of enclosing constructors seen from the focus outward.  Rebuilding
the original tree is a fold over that chain.  A Cursor adds a direction flag
to a location: entering means the focus is about to run, leaving means it
just finished.  Cursors are the program points that automaton compilation
uses as nodes.
"""

from dataclasses import dataclass

from .ast import Cond, Expr, Seq, Stmt, While, cached_hash


class Path:
    """Inverted context of a focus; frames point upward to the root."""


@dataclass(frozen=True)
class Top(Path):
    pass


@cached_hash
@dataclass(frozen=True)
class SeqLeft(Path):
    """Focus is the first statement of a Seq; `after` is the second."""
    up: Path
    after: Stmt


@cached_hash
@dataclass(frozen=True)
class SeqRight(Path):
    """Focus is the second statement of a Seq; `before` is the first."""
    before: Stmt
    up: Path


@cached_hash
@dataclass(frozen=True)
class CondThen(Path):
    """Focus is the then-branch of a Cond."""
    test: Expr
    up: Path
    orelse: Stmt


@cached_hash
@dataclass(frozen=True)
class CondElse(Path):
    """Focus is the else-branch of a Cond."""
    test: Expr
    then_branch: Stmt
    up: Path


@cached_hash
@dataclass(frozen=True)
class WhileBody(Path):
    """Focus is the body of a While."""
    test: Expr
    up: Path


TOP = Top()


@cached_hash
@dataclass(frozen=True)
class Location:
    focus: Stmt
    path: Path


@cached_hash
@dataclass(frozen=True)
class Cursor:
    """A program point: a location plus a direction flag.

    entering=True sits just before the focus runs, entering=False just
    after it finished.
    """
    loc: Location
    entering: bool


def reconstruct(c: Stmt, sp: Path) -> Stmt:
    """Plug the focus back into its context, yielding the whole tree."""
    while not isinstance(sp, Top):
        if isinstance(sp, SeqLeft):
            c, sp = Seq(c, sp.after), sp.up
        elif isinstance(sp, SeqRight):
            c, sp = Seq(sp.before, c), sp.up
        elif isinstance(sp, CondThen):
            c, sp = Cond(sp.test, c, sp.orelse), sp.up
        elif isinstance(sp, CondElse):
            c, sp = Cond(sp.test, sp.then_branch, c), sp.up
        elif isinstance(sp, WhileBody):
            c, sp = While(sp.test, c), sp.up
        else:
            raise TypeError(f"not a path: {sp!r}")
    return c


def reconstruct_loc(loc: Location) -> Stmt:
    return reconstruct(loc.focus, loc.path)


def all_locations(c: Stmt, sp: Path = TOP) -> list[Location]:
    """Every location of the tree under `c`, in pre-order.

    The result has exactly one entry per statement subterm; reconstructing
    any entry gives back reconstruct(c, sp).
    """
    out = [Location(c, sp)]
    if isinstance(c, Seq):
        out += all_locations(c.first, SeqLeft(sp, c.second))
        out += all_locations(c.second, SeqRight(c.first, sp))
    elif isinstance(c, Cond):
        out += all_locations(c.then_branch, CondThen(c.test, sp, c.else_branch))
        out += all_locations(c.else_branch, CondElse(c.test, c.then_branch, sp))
    elif isinstance(c, While):
        out += all_locations(c.body, WhileBody(c.test, sp))
    return out


def advance(c: Stmt, sp: Path) -> Cursor:
    """The program point reached after the focus `c` at `sp` finishes.

    Finishing the first arm of a Seq enters the second arm; finishing a
    second arm, a branch, or anything at the root leaves the enclosing
    statement; finishing a loop body re-enters the loop header.
    """
    if isinstance(sp, Top):
        return Cursor(Location(c, sp), False)
    if isinstance(sp, SeqLeft):
        return Cursor(Location(sp.after, SeqRight(c, sp.up)), True)
    if isinstance(sp, SeqRight):
        return Cursor(Location(Seq(sp.before, c), sp.up), False)
    if isinstance(sp, CondThen):
        return Cursor(Location(Cond(sp.test, c, sp.orelse), sp.up), False)
    if isinstance(sp, CondElse):
        return Cursor(Location(Cond(sp.test, sp.then_branch, c), sp.up), False)
    if isinstance(sp, WhileBody):
        return Cursor(Location(While(sp.test, c), sp.up), True)
    raise TypeError(f"not a path: {sp!r}")


def cursors_of(locations) -> list[Cursor]:
    """Both program points of each location, entering first."""
    out = []
    for loc in locations:
        out.append(Cursor(loc, True))
        out.append(Cursor(loc, False))
    return out


_SEGMENT = {
    SeqLeft: "seqL",
    SeqRight: "seqR",
    CondThen: "condT",
    CondElse: "condF",
    WhileBody: "body",
}


def render_path(sp: Path) -> str:
    """Slash-joined segments from the root down to the focus, '@top' if empty."""
    parts = []
    while not isinstance(sp, Top):
        parts.append(_SEGMENT[type(sp)])
        sp = sp.up
    return "/".join(reversed(parts)) or "@top"


def render_cursor(cur: Cursor) -> str:
    arrow = "↓" if cur.entering else "↑"
    return f"{render_path(cur.loc.path)} {arrow}"
